//! Exact computations in irreducible affine Weyl groups: low elements, Shi
//! regions through admissible sign types, descent-walls and the
//! Brink-Howlett automaton.

pub mod affine;
pub mod automaton;
pub mod conformance;
pub mod error;
pub mod export;
pub mod lp;
pub mod regions;
pub mod report;
pub mod root_system;
pub mod sign_types;
pub mod small_low;
pub mod verify;

pub use affine::{AffineRoot, AffineWeylGroup, GroupElement};
pub use automaton::Automaton;
pub use error::{Error, Result};
pub use regions::{RegionEnumeration, ShiRegion};
pub use report::{Check, Report, Status};
pub use root_system::{CartanType, Family, FiniteRoot, RootSystem};
pub use sign_types::{Sign, SignType, SignTypeSpace};
pub use small_low::{SmallInvSet, SmallRootTable};
pub use verify::{run_suite, Suite, VerifyConfig};
