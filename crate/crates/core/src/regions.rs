//! Shi regions and their minimal elements.
//!
//! Regions are materialized by a breadth-first walk over alcoves ordered by
//! length. Two alcoves lie in the same region iff their sign types agree, so
//! the first alcove met for a sign type is a minimal element of its region.
//! The walk stops once every admissible sign type has been met.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::affine::{format_word, AffineRoot, AffineWeylGroup, GroupElement};
use crate::error::{Error, Result};
use crate::root_system::PosetIdeal;
use crate::sign_types::{zeta, Sign, SignType, SignTypeSpace};
use crate::small_low::{SmallInvSet, SmallRootTable};

/// Default cap on the number of alcoves visited.
pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone)]
pub struct ShiRegion {
    pub sign_type: SignType,
    pub separation: SmallInvSet,
    pub descent_roots: SmallInvSet,
    pub minimal_element: GroupElement,
    pub minimal_word: Vec<usize>,
    pub is_dominant: bool,
}

impl ShiRegion {
    pub fn length(&self) -> usize {
        self.minimal_word.len()
    }
}

#[derive(Debug, Clone)]
pub struct RegionEnumeration {
    group: AffineWeylGroup,
    table: SmallRootTable,
    space: SignTypeSpace,
    ball: Vec<Vec<GroupElement>>,
    regions: Vec<ShiRegion>,
    by_sign: HashMap<SignType, usize>,
}

impl RegionEnumeration {
    pub fn new(group: &AffineWeylGroup, budget: usize) -> Result<Self> {
        let space = SignTypeSpace::new(group.system_arc());
        let table = SmallRootTable::new(group);
        let admissible = space.enumerate(budget)?;
        let wanted: HashSet<&SignType> = admissible.iter().collect();

        let mut first: HashMap<SignType, GroupElement> = HashMap::new();
        let mut ball = vec![vec![group.identity()]];
        let mut total = 1usize;
        loop {
            let layer = ball.last().expect("nonempty");
            let mut counts: HashMap<SignType, usize> = HashMap::new();
            for w in layer {
                let x = zeta(group, w);
                if !wanted.contains(&x) {
                    return Err(Error::Inconsistent(format!(
                        "alcove with sign type {x} not in the admissible list"
                    )));
                }
                if !first.contains_key(&x) {
                    *counts.entry(x.clone()).or_default() += 1;
                }
            }
            for w in layer {
                let x = zeta(group, w);
                if let Some(&c) = counts.get(&x) {
                    if c > 1 {
                        return Err(Error::Inconsistent(format!(
                            "region {x} has {c} elements of minimal length"
                        )));
                    }
                    first.insert(x, w.clone());
                }
            }
            if first.len() == admissible.len() {
                break;
            }
            let mut seen: HashSet<GroupElement> = HashSet::new();
            let mut next = Vec::new();
            for w in layer {
                for s in 0..group.num_generators() {
                    if group.is_right_descent(w, s) {
                        continue;
                    }
                    let ws = group.right_mul(w, s);
                    if seen.insert(ws.clone()) {
                        next.push(ws);
                    }
                }
            }
            total += next.len();
            if total > budget {
                return Err(Error::BudgetExceeded {
                    budget,
                    what: format!("Shi regions of {}", group.cartan_type()),
                });
            }
            next.sort_by_cached_key(|w| group.shi_vector(w));
            ball.push(next);
        }

        let mut regions = Vec::with_capacity(admissible.len());
        let mut by_sign = HashMap::new();
        for x in admissible {
            let w = first.remove(&x).expect("every sign type was reached");
            by_sign.insert(x.clone(), regions.len());
            regions.push(ShiRegion {
                separation: space.separation_set(&x)?,
                descent_roots: space.descent_roots(&x)?,
                minimal_word: group.word_from_element(&w),
                minimal_element: w,
                is_dominant: x.is_dominant(),
                sign_type: x,
            });
        }
        Ok(RegionEnumeration {
            group: group.clone(),
            table,
            space,
            ball,
            regions,
            by_sign,
        })
    }

    pub fn group(&self) -> &AffineWeylGroup {
        &self.group
    }

    pub fn table(&self) -> &SmallRootTable {
        &self.table
    }

    pub fn space(&self) -> &SignTypeSpace {
        &self.space
    }

    /// Alcoves visited, by length. The last layer holds the longest minimal
    /// element.
    pub fn ball(&self) -> &[Vec<GroupElement>] {
        &self.ball
    }

    /// Length of the longest minimal element.
    pub fn certified_radius(&self) -> usize {
        self.ball.len() - 1
    }

    pub fn regions(&self) -> &[ShiRegion] {
        &self.regions
    }

    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }

    pub fn region(&self, x: &SignType) -> Option<&ShiRegion> {
        self.by_sign.get(x).map(|&i| &self.regions[i])
    }

    pub fn region_of(&self, w: &GroupElement) -> Option<&ShiRegion> {
        self.region(&zeta(&self.group, w))
    }

    /// Minimal elements, sorted by (length, Shi vector).
    pub fn minimal_elements(&self) -> Vec<GroupElement> {
        let mut out: Vec<GroupElement> = self.regions.iter().map(|r| r.minimal_element.clone()).collect();
        out.sort_by_cached_key(|w| (self.group.length(w), self.group.shi_vector(w)));
        out
    }

    /// Dominant regions, one per ideal of the root poset.
    pub fn dominant_regions(&self) -> Result<Vec<DominantIdealRegion>> {
        let sys = self.group.system();
        let npos = sys.num_positive();
        sys.poset()
            .ideals()
            .into_iter()
            .map(|ideal| {
                let mut x = SignType::zero(npos);
                for &i in &ideal.members {
                    x.0[i] = Sign::Plus;
                }
                let region = self
                    .region(&x)
                    .ok_or_else(|| Error::NotAdmissible(x.to_string()))?;
                Ok(DominantIdealRegion {
                    ideal,
                    sign_type: x,
                    element: region.minimal_element.clone(),
                    word: region.minimal_word.clone(),
                })
            })
            .collect()
    }
}

/// A dominant region `R_Psi` together with its ideal `Psi` and minimal element.
#[derive(Debug, Clone)]
pub struct DominantIdealRegion {
    pub ideal: PosetIdeal,
    pub sign_type: SignType,
    pub element: GroupElement,
    pub word: Vec<usize>,
}

/// `{d - a : a in roots}` for positive-root indices.
pub fn delta_minus(group: &AffineWeylGroup, roots: &[usize]) -> BTreeSet<AffineRoot> {
    roots
        .iter()
        .map(|&i| AffineRoot::new(group.system().root(i).neg(), 1))
        .collect()
}

/// `w` is minimal in its region iff no right descent stays in the region.
pub fn is_minimal_in_region(group: &AffineWeylGroup, w: &GroupElement) -> bool {
    let x = zeta(group, w);
    (0..group.num_generators())
        .filter(|&s| group.is_right_descent(w, s))
        .all(|s| zeta(group, &group.right_mul(w, s)) != x)
}

/// `w` lies in the fundamental chamber: no finite simple reflection is a left
/// descent.
pub fn is_dominant_element(group: &AffineWeylGroup, w: &GroupElement) -> bool {
    (1..group.num_generators()).all(|s| !group.is_left_descent(w, s))
}

#[derive(Debug, Clone, Serialize)]
pub struct RegionRow {
    pub sign_type: String,
    pub separation: String,
    pub descent_roots: String,
    pub minimal_word: String,
    pub minimal_length: usize,
    pub dominant: bool,
}

impl RegionEnumeration {
    pub fn rows(&self) -> Vec<RegionRow> {
        self.regions
            .iter()
            .map(|r| RegionRow {
                sign_type: r.sign_type.to_string(),
                separation: self.table.display(&r.separation),
                descent_roots: self.table.display(&r.descent_roots),
                minimal_word: format_word(&r.minimal_word),
                minimal_length: r.length(),
                dominant: r.is_dominant,
            })
            .collect()
    }
}

pub fn enumerate_regions(group: &AffineWeylGroup, budget: usize) -> Result<RegionEnumeration> {
    RegionEnumeration::new(group, budget)
}

/// Convenience constructor from a type name such as `"B2"`.
pub fn regions_for(name: &str, budget: usize) -> Result<RegionEnumeration> {
    let group = AffineWeylGroup::new(name.parse()?);
    RegionEnumeration::new(&group, budget)
}
