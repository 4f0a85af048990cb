use thiserror::Error;

use crate::root_system::CartanType;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan type {family}{rank}: {reason}")]
    InvalidType {
        family: char,
        rank: usize,
        reason: &'static str,
    },

    #[error("cannot parse Cartan type from {0:?}")]
    ParseType(String),

    #[error("{0} is not a root of the system")]
    NotARoot(String),

    #[error("elements belong to different groups ({left} vs {right})")]
    MismatchedSystems { left: CartanType, right: CartanType },

    #[error("letter {letter} is outside the generating set of size {size}")]
    InvalidLetter { letter: usize, size: usize },

    #[error("sign type {0} is not admissible")]
    NotAdmissible(String),

    #[error("enumeration budget of {budget} elements exceeded ({what})")]
    BudgetExceeded { budget: usize, what: String },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
