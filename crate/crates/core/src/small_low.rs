//! Small roots, small inversion sets and low elements.
//!
//! In affine type the small roots are `Phi_0^+` together with
//! `d - Phi_0^+`. Index `i < N` stands for the positive root `a_i` and
//! `N + i` for `d - a_i`, where `N = |Phi_0^+|`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::affine::{AffineRoot, AffineWeylGroup, GroupElement};
use crate::error::Result;
use crate::lp;

/// Fixed-width set of small-root indices.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallInvSet([u64; 4]);

impl SmallInvSet {
    pub const CAPACITY: usize = 256;

    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &SmallInvSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..Self::CAPACITY).filter(move |&i| self.contains(i))
    }
}

impl FromIterator<usize> for SmallInvSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = SmallInvSet::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl Serialize for SmallInvSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// The small roots of an affine Weyl group, with the action of the
/// generators restricted to them.
#[derive(Debug, Clone)]
pub struct SmallRootTable {
    roots: Vec<AffineRoot>,
    npos: usize,
    /// `action[s][i]`: index of `s(root_i)` if it is small.
    action: Vec<Vec<Option<usize>>>,
}

impl SmallRootTable {
    pub fn new(group: &AffineWeylGroup) -> Self {
        let sys = group.system();
        let npos = sys.num_positive();
        let mut roots: Vec<AffineRoot> = sys
            .positive_roots()
            .iter()
            .map(|a| AffineRoot::new(a.clone(), 0))
            .collect();
        roots.extend(sys.positive_roots().iter().map(|a| AffineRoot::new(a.neg(), 1)));
        let mut table = SmallRootTable {
            roots,
            npos,
            action: Vec::new(),
        };
        table.action = group
            .generators()
            .iter()
            .map(|g| {
                table
                    .roots
                    .iter()
                    .map(|r| table.index_of(&group.act_on_root(g, r)))
                    .collect()
            })
            .collect();
        table
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn roots(&self) -> &[AffineRoot] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &AffineRoot {
        &self.roots[i]
    }

    pub fn index_of(&self, root: &AffineRoot) -> Option<usize> {
        match root.delta {
            0 => self.roots[..self.npos].iter().position(|r| r == root),
            1 => self.roots[self.npos..]
                .iter()
                .position(|r| r == root)
                .map(|i| i + self.npos),
            _ => None,
        }
    }

    pub fn is_small(root: &AffineRoot) -> bool {
        (root.delta == 0 && root.finite.is_positive()) || (root.delta == 1 && root.finite.is_negative())
    }

    /// Index of the simple root of a letter (`d - a0` for letter 0).
    pub fn simple_index(&self, letter: usize, highest: usize) -> usize {
        if letter == 0 {
            self.npos + highest
        } else {
            letter - 1
        }
    }

    /// Image of small root `i` under generator `letter`, if small.
    pub fn act(&self, letter: usize, i: usize) -> Option<usize> {
        self.action[letter][i]
    }

    /// `Sigma(w) = {a : k(w,a) < 0} + {d - a : k(w,a) > 0}`.
    pub fn from_shi_vector(&self, k: &[i64]) -> SmallInvSet {
        let mut s = SmallInvSet::new();
        for (i, &ki) in k.iter().enumerate() {
            if ki < 0 {
                s.insert(i);
            } else if ki > 0 {
                s.insert(self.npos + i);
            }
        }
        s
    }

    pub fn to_roots(&self, set: &SmallInvSet) -> BTreeSet<AffineRoot> {
        set.iter().map(|i| self.roots[i].clone()).collect()
    }

    pub fn from_roots<'a>(&self, roots: impl IntoIterator<Item = &'a AffineRoot>) -> Option<SmallInvSet> {
        roots.into_iter().map(|r| self.index_of(r)).collect()
    }

    pub fn display(&self, set: &SmallInvSet) -> String {
        DisplaySet { table: self, set }.to_string()
    }
}

struct DisplaySet<'a> {
    table: &'a SmallRootTable,
    set: &'a SmallInvSet,
}

impl fmt::Display for DisplaySet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.set.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.table.roots[i])?;
        }
        write!(f, "}}")
    }
}

pub fn small_inversion_set(group: &AffineWeylGroup, table: &SmallRootTable, w: &GroupElement) -> SmallInvSet {
    table.from_shi_vector(&group.shi_vector(w))
}

/// Whether `beta` is a nonnegative combination of `generators`.
pub fn cone_membership<'a>(generators: impl IntoIterator<Item = &'a AffineRoot>, beta: &AffineRoot) -> bool {
    let gens: Vec<Vec<i64>> = generators.into_iter().map(|r| r.vector()).collect();
    lp::in_cone(&gens, &beta.vector())
}

/// Lowness through the inversion-set basis: `N^1(w)` consists of small roots.
pub fn is_low(group: &AffineWeylGroup, w: &GroupElement) -> bool {
    group.basis_n1(w).iter().all(SmallRootTable::is_small)
}

/// Lowness from the definition: every inversion lies in the cone spanned by
/// the small inversions.
pub fn is_low_by_cone(group: &AffineWeylGroup, w: &GroupElement) -> bool {
    let n = group.inversion_set(w);
    let small: Vec<AffineRoot> = n.iter().filter(|r| SmallRootTable::is_small(r)).cloned().collect();
    n.iter().all(|beta| cone_membership(&small, beta))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateMode {
    /// Grow from the identity by prepending letters to low elements until no
    /// new low element appears; relies on suffix-closedness of `L`.
    SuffixClosure,
    /// Filter the certified region enumeration (every admissible sign type
    /// has a representative) by the lowness test.
    SignTypes,
}

/// The set of low elements, sorted by (length, Shi vector).
pub fn enumerate_low(group: &AffineWeylGroup, mode: CertificateMode, budget: usize) -> Result<Vec<GroupElement>> {
    let mut out = match mode {
        CertificateMode::SuffixClosure => {
            let mut all = vec![group.identity()];
            let mut layer = vec![group.identity()];
            let mut seen: HashSet<GroupElement> = HashSet::new();
            while !layer.is_empty() {
                let mut next = Vec::new();
                for v in &layer {
                    for s in 0..group.num_generators() {
                        if group.is_left_descent(v, s) {
                            continue;
                        }
                        let w = group.left_mul(s, v);
                        if !seen.contains(&w) && is_low(group, &w) {
                            seen.insert(w.clone());
                            next.push(w);
                        }
                    }
                }
                all.extend(next.iter().cloned());
                if all.len() > budget {
                    return Err(crate::error::Error::BudgetExceeded {
                        budget,
                        what: format!("low elements of {}", group.cartan_type()),
                    });
                }
                layer = next;
            }
            all
        }
        CertificateMode::SignTypes => {
            let regions = crate::regions::RegionEnumeration::new(group, budget)?;
            return Ok(low_in_enumeration(&regions));
        }
    };
    out.sort_by_cached_key(|w| (group.length(w), group.shi_vector(w)));
    Ok(out)
}

/// Low elements among the alcoves visited by a region enumeration, sorted by
/// (length, Shi vector). Every low element is a region minimum, so this is
/// all of `L`.
pub fn low_in_enumeration(regions: &crate::regions::RegionEnumeration) -> Vec<GroupElement> {
    let group = regions.group();
    let mut out: Vec<GroupElement> = regions
        .ball()
        .iter()
        .flatten()
        .filter(|w| is_low(group, w))
        .cloned()
        .collect();
    out.sort_by_cached_key(|w| (group.length(w), group.shi_vector(w)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::FiniteRoot;

    fn group(t: &str) -> AffineWeylGroup {
        AffineWeylGroup::new(t.parse().unwrap())
    }

    fn ar(v: &[i64], d: i64) -> AffineRoot {
        AffineRoot::new(FiniteRoot(v.to_vec()), d)
    }

    #[test]
    fn bitset_basics() {
        let mut s = SmallInvSet::new();
        assert!(s.is_empty());
        s.insert(3);
        s.insert(200);
        assert!(s.contains(200) && !s.contains(4));
        assert_eq!(s.len(), 2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 200]);
        let t: SmallInvSet = [3, 7, 200].into_iter().collect();
        assert!(s.is_subset(&t) && !t.is_subset(&s));
        s.remove(3);
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn table_shape() {
        let g = group("B2");
        let t = SmallRootTable::new(&g);
        assert_eq!(t.len(), 8);
        assert_eq!(t.index_of(&ar(&[-2, -1], 1)), Some(7));
        assert_eq!(t.index_of(&ar(&[-2, -1], 2)), None);
        // each generator sends its simple root outside the small roots
        for s in 0..3 {
            let i = t.simple_index(s, g.system().highest_index());
            assert_eq!(t.root(i), &g.simple_root(s));
            assert_eq!(t.act(s, i), None);
        }
    }

    #[test]
    fn example_small_inversion_set() {
        let g = group("A2");
        let t = SmallRootTable::new(&g);
        let s = t.from_shi_vector(&[1, 0, 2]);
        assert_eq!(t.display(&s), "{d-a1, d-(a1+a2)}");
        let s = t.from_shi_vector(&[-1, 2, 2]);
        assert_eq!(t.display(&s), "{a1, d-a2, d-(a1+a2)}");
    }

    #[test]
    fn cone_examples() {
        let x = [ar(&[-1, -1], 1), ar(&[0, 1], 0)];
        assert!(cone_membership(&x, &ar(&[-1, 0], 1)));
        assert!(cone_membership(&x, &x[0]));
        let y = [ar(&[0, 1], 0), ar(&[0, -1], 1)];
        assert!(!cone_membership(&y, &ar(&[1, 0], 0)));
    }

    #[test]
    fn generators_are_low() {
        let g = group("G2");
        assert!(is_low(&g, &g.identity()));
        for s in g.generators() {
            assert!(is_low(&g, s));
            assert!(is_low_by_cone(&g, s));
        }
    }

    #[test]
    fn suffix_closure_counts() {
        for (t, n) in [("A1", 3), ("A2", 16), ("B2", 25), ("G2", 49)] {
            let g = group(t);
            let low = enumerate_low(&g, CertificateMode::SuffixClosure, 100_000).unwrap();
            assert_eq!(low.len(), n, "{t}");
            assert_eq!(low[0], g.identity());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let g = group("A2");
        assert!(matches!(
            enumerate_low(&g, CertificateMode::SuffixClosure, 5),
            Err(crate::error::Error::BudgetExceeded { budget: 5, .. })
        ));
    }
}
