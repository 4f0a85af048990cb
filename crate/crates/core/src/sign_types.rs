//! Sign types, their admissibility, separation sets and descent-roots.
//!
//! A sign type assigns one of `-`, `0`, `+` to every positive root. It is
//! admissible when it is the sign pattern of some Shi vector; this holds iff
//! its restriction to every irreducible rank-2 subsystem is admissible, and
//! the rank-2 admissible sign types are generated by walking alcoves.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::{Serialize, Serializer};

use crate::affine::{AffineWeylGroup, GroupElement};
use crate::error::{Error, Result};
use crate::root_system::{Rank2Kind, Rank2Subsystem, RootSystem};
use crate::small_low::SmallInvSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of(k: i64) -> Sign {
        match k.signum() {
            -1 => Sign::Minus,
            0 => Sign::Zero,
            _ => Sign::Plus,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '-' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            '+' => Some(Sign::Plus),
            _ => None,
        }
    }

    fn digit(self) -> usize {
        self as usize
    }
}

/// Signs indexed by the positive roots in their fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignType(pub Vec<Sign>);

impl SignType {
    pub fn zero(len: usize) -> Self {
        SignType(vec![Sign::Zero; len])
    }

    pub fn from_shi_vector(k: &[i64]) -> Self {
        SignType(k.iter().map(|&x| Sign::of(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Sign {
        self.0[i]
    }

    /// The sign type with position `i` replaced by `0`.
    pub fn with_zero(&self, i: usize) -> SignType {
        let mut x = self.clone();
        x.0[i] = Sign::Zero;
        x
    }

    /// Every sign is `0` or `+`.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&s| s != Sign::Minus)
    }

    fn code_at(&self, positions: &[usize]) -> usize {
        positions.iter().rev().fold(0, |acc, &p| acc * 3 + self.0[p].digit())
    }
}

impl fmt::Display for SignType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.to_char()))
    }
}

impl FromStr for SignType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| Sign::from_char(c).ok_or_else(|| Error::Parse(format!("sign type {s:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(SignType)
    }
}

impl Serialize for SignType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Admissible sign types of `A2`, `B2` and `G2`, in the positive-root order
/// of each system.
#[derive(Debug, Clone)]
pub struct Rank2Tables {
    admissible: BTreeMap<Rank2Kind, Vec<bool>>,
}

impl Rank2Tables {
    /// Bumped whenever the generation procedure or encoding changes.
    pub const VERSION: u32 = 1;

    /// Shared tables, generated on first use.
    pub fn get() -> &'static Rank2Tables {
        static TABLES: OnceLock<Rank2Tables> = OnceLock::new();
        TABLES.get_or_init(Rank2Tables::build)
    }

    /// Collects sign patterns of alcoves by increasing length until all
    /// `(h+1)^2` have appeared.
    pub fn build() -> Rank2Tables {
        let mut admissible = BTreeMap::new();
        for kind in Rank2Kind::ALL {
            let group = AffineWeylGroup::new(kind.cartan_type());
            let target = group.system().shi_region_count() as usize;
            let npos = kind.num_positive();
            let mut table = vec![false; 3usize.pow(npos as u32)];
            let positions: Vec<usize> = (0..npos).collect();
            let mut found = 0;
            let mut layer = vec![group.identity()];
            let mut seen: HashSet<GroupElement> = layer.iter().cloned().collect();
            while found < target {
                let mut next = Vec::new();
                for w in &layer {
                    let code = SignType::from_shi_vector(&group.shi_vector(w)).code_at(&positions);
                    if !table[code] {
                        table[code] = true;
                        found += 1;
                    }
                    for s in 0..group.num_generators() {
                        let x = group.right_mul(w, s);
                        if seen.insert(x.clone()) {
                            next.push(x);
                        }
                    }
                }
                layer = next;
            }
            admissible.insert(kind, table);
        }
        Rank2Tables { admissible }
    }

    pub fn contains(&self, kind: Rank2Kind, signs: &[Sign]) -> bool {
        let code = signs.iter().rev().fold(0, |acc, s| acc * 3 + s.digit());
        self.admissible[&kind][code]
    }

    /// Admissible sign types of one rank-2 kind, sorted.
    pub fn entries(&self, kind: Rank2Kind) -> Vec<SignType> {
        let npos = kind.num_positive();
        let mut out: Vec<SignType> = self.admissible[&kind]
            .iter()
            .enumerate()
            .filter(|(_, &ok)| ok)
            .map(|(mut code, _)| {
                let mut v = Vec::with_capacity(npos);
                for _ in 0..npos {
                    v.push([Sign::Minus, Sign::Zero, Sign::Plus][code % 3]);
                    code /= 3;
                }
                SignType(v)
            })
            .collect();
        out.sort();
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let tables: serde_json::Map<String, serde_json::Value> = Rank2Kind::ALL
            .iter()
            .map(|&k| {
                let list: Vec<String> = self.entries(k).iter().map(|x| x.to_string()).collect();
                (k.to_string(), serde_json::json!(list))
            })
            .collect();
        serde_json::json!({ "version": Self::VERSION, "tables": tables })
    }
}

/// Sign types over one root system, with the admissibility machinery.
#[derive(Debug, Clone)]
pub struct SignTypeSpace {
    sys: Arc<RootSystem>,
    subsystems: Vec<Rank2Subsystem>,
    /// Subsystems whose largest root index is `i`.
    closing: Vec<Vec<usize>>,
    tables: &'static Rank2Tables,
}

impl SignTypeSpace {
    pub fn new(sys: Arc<RootSystem>) -> Self {
        let subsystems = sys.rank2_subsystems();
        let mut closing = vec![Vec::new(); sys.num_positive()];
        for (k, p) in subsystems.iter().enumerate() {
            closing[*p.roots.iter().max().expect("nonempty")].push(k);
        }
        SignTypeSpace {
            sys,
            subsystems,
            closing,
            tables: Rank2Tables::get(),
        }
    }

    pub fn system(&self) -> &RootSystem {
        &self.sys
    }

    pub fn subsystems(&self) -> &[Rank2Subsystem] {
        &self.subsystems
    }

    pub fn len(&self) -> usize {
        self.sys.num_positive()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn subsystem_ok(&self, p: &Rank2Subsystem, x: &SignType) -> bool {
        let signs: Vec<Sign> = p.roots.iter().map(|&i| x.get(i)).collect();
        self.tables.contains(p.kind, &signs)
    }

    /// Admissible iff every rank-2 restriction is admissible.
    pub fn is_admissible(&self, x: &SignType) -> bool {
        x.len() == self.len() && self.subsystems.iter().all(|p| self.subsystem_ok(p, x))
    }

    /// All admissible sign types in lexicographic order of `-` < `0` < `+`.
    pub fn enumerate(&self, budget: usize) -> Result<Vec<SignType>> {
        let mut out = Vec::new();
        let mut x = SignType::zero(self.len());
        self.extend(0, &mut x, &mut out, budget)?;
        Ok(out)
    }

    fn extend(&self, pos: usize, x: &mut SignType, out: &mut Vec<SignType>, budget: usize) -> Result<()> {
        if pos == self.len() {
            out.push(x.clone());
            if out.len() > budget {
                return Err(Error::BudgetExceeded {
                    budget,
                    what: format!("admissible sign types of {}", self.sys.cartan_type()),
                });
            }
            return Ok(());
        }
        for s in [Sign::Minus, Sign::Zero, Sign::Plus] {
            x.0[pos] = s;
            if self.closing[pos].iter().all(|&k| self.subsystem_ok(&self.subsystems[k], x)) {
                self.extend(pos + 1, x, out, budget)?;
            }
        }
        x.0[pos] = Sign::Zero;
        Ok(())
    }

    fn require_admissible(&self, x: &SignType) -> Result<()> {
        if self.is_admissible(x) {
            Ok(())
        } else {
            Err(Error::NotAdmissible(x.to_string()))
        }
    }

    /// `Sigma(R) = {a : X_a = -} + {d - a : X_a = +}`.
    pub fn separation_set(&self, x: &SignType) -> Result<SmallInvSet> {
        self.require_admissible(x)?;
        Ok(self.separation_unchecked(x))
    }

    pub(crate) fn separation_unchecked(&self, x: &SignType) -> SmallInvSet {
        let npos = self.len();
        let mut s = SmallInvSet::new();
        for (i, sign) in x.0.iter().enumerate() {
            match sign {
                Sign::Minus => s.insert(i),
                Sign::Plus => s.insert(npos + i),
                Sign::Zero => {}
            }
        }
        s
    }

    /// Small roots of the walls separating the region from the fundamental
    /// alcove: the nonzero positions `a` for which zeroing `X_a` stays
    /// admissible.
    pub fn descent_roots(&self, x: &SignType) -> Result<SmallInvSet> {
        self.require_admissible(x)?;
        let npos = self.len();
        let mut s = SmallInvSet::new();
        for i in 0..npos {
            let idx = match x.get(i) {
                Sign::Zero => continue,
                Sign::Minus => i,
                Sign::Plus => npos + i,
            };
            if self.is_admissible(&x.with_zero(i)) {
                s.insert(idx);
            }
        }
        Ok(s)
    }

    /// Local test for the wall `d - a_s` (with `X_{a_s} = +`, `a_s` simple):
    /// in every rank-2 subsystem through `a_s`, whenever `b` and `a_s + b`
    /// are roots with `X_{a_s + b} = +`, the sign `X_b` is not `-`.
    pub fn star_condition(&self, x: &SignType, simple: usize) -> bool {
        let a = &self.sys.root(simple).0;
        self.subsystems.iter().filter(|p| p.contains(simple)).all(|p| {
            p.roots.iter().all(|&b| {
                let sum: Vec<i64> = a.iter().zip(&self.sys.root(b).0).map(|(x, y)| x + y).collect();
                match self.sys.index_of(&sum) {
                    Some(j) if p.contains(j) && x.get(j) == Sign::Plus => x.get(b) != Sign::Minus,
                    _ => true,
                }
            })
        })
    }
}

/// Whether some point `x` has `<x, a> < 0`, `0 < <x, a> < 1` or `<x, a> > 1`
/// as `X_a` is `-`, `0` or `+`, decided by an exact LP that maximizes the
/// margin. Independent of the rank-2 tables.
pub fn is_realizable(sys: &RootSystem, x: &SignType) -> bool {
    use crate::lp::{maximize, rat, LpOutcome};
    use num_traits::Signed;

    let n = sys.rank();
    // Columns: x+ (n), x- (n), margin, then one slack per inequality.
    let mut ineqs: Vec<(Vec<i64>, i64, i64)> = Vec::new(); // (coef on x, coef on margin, rhs): a.x + m*margin <= rhs
    for (i, root) in sys.positive_roots().iter().enumerate() {
        let a = &root.0;
        let neg: Vec<i64> = a.iter().map(|c| -c).collect();
        match x.get(i) {
            Sign::Minus => ineqs.push((a.clone(), 1, 0)),
            Sign::Zero => {
                ineqs.push((neg, 1, 0));
                ineqs.push((a.clone(), 1, 1));
            }
            Sign::Plus => ineqs.push((neg, 1, -1)),
        }
    }
    ineqs.push((vec![0; n], 1, 1));
    let m = ineqs.len();
    let width = 2 * n + 1 + m;
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (k, (a, e, b)) in ineqs.iter().enumerate() {
        let mut row = vec![rat(0); width];
        for j in 0..n {
            row[j] = rat(a[j]);
            row[n + j] = rat(-a[j]);
        }
        row[2 * n] = rat(*e);
        row[2 * n + 1 + k] = rat(1);
        rows.push(row);
        rhs.push(rat(*b));
    }
    let mut cost = vec![rat(0); width];
    cost[2 * n] = rat(1);
    matches!(maximize(&rows, &rhs, &cost), LpOutcome::Optimal { value, .. } if value.is_positive())
}

/// `zeta(w)`: the componentwise sign of the Shi vector.
pub fn zeta(group: &AffineWeylGroup, w: &GroupElement) -> SignType {
    SignType::from_shi_vector(&group.shi_vector(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(t: &str) -> SignTypeSpace {
        SignTypeSpace::new(Arc::new(RootSystem::new(t.parse().unwrap())))
    }

    fn st(s: &str) -> SignType {
        s.parse().unwrap()
    }

    #[test]
    fn realizable_matches_tables() {
        for t in ["A2", "B2", "G2"] {
            let sp = space(t);
            let npos = sp.len();
            let mut count = 0;
            for code in 0..3usize.pow(npos as u32) {
                let mut c = code;
                let x = SignType(
                    (0..npos)
                        .map(|_| {
                            let s = [Sign::Minus, Sign::Zero, Sign::Plus][c % 3];
                            c /= 3;
                            s
                        })
                        .collect(),
                );
                let real = is_realizable(sp.system(), &x);
                assert_eq!(real, sp.is_admissible(&x), "{t} {x}");
                count += real as usize;
            }
            assert_eq!(count, sp.system().shi_region_count() as usize);
        }
    }

    #[test]
    fn table_sizes() {
        let t = Rank2Tables::get();
        assert_eq!(t.entries(Rank2Kind::A2).len(), 16);
        assert_eq!(t.entries(Rank2Kind::B2).len(), 25);
        assert_eq!(t.entries(Rank2Kind::G2).len(), 49);
        for k in Rank2Kind::ALL {
            assert!(t.contains(k, &vec![Sign::Zero; k.num_positive()]));
        }
    }

    #[test]
    fn a2_table_symmetric_under_diagram_flip() {
        let t = Rank2Tables::get();
        for x in t.entries(Rank2Kind::A2) {
            assert!(t.contains(Rank2Kind::A2, &[x.get(1), x.get(0), x.get(2)]));
        }
    }

    #[test]
    fn inadmissible_a2_example() {
        // a1 = -, a1+a2 = +, a2 = 0
        assert!(!space("A2").is_admissible(&st("-0+")));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(st("+-0+").to_string(), "+-0+");
        assert!("+x".parse::<SignType>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        for (t, n) in [("A1", 3), ("A2", 16), ("B2", 25), ("G2", 49), ("A3", 125), ("B3", 343), ("C3", 343)] {
            let sp = space(t);
            let all = sp.enumerate(1_000_000).unwrap();
            assert_eq!(all.len(), n, "{t}");
            assert!(all.iter().all(|x| sp.is_admissible(x)));
        }
    }

    #[test]
    fn separation_and_descents_of_zero() {
        let sp = space("B2");
        let z = SignType::zero(4);
        assert!(sp.separation_set(&z).unwrap().is_empty());
        assert!(sp.descent_roots(&z).unwrap().is_empty());
        let a2 = space("A2");
        assert!(matches!(a2.descent_roots(&st("-0+")), Err(Error::NotAdmissible(_))));
        assert!(matches!(a2.separation_set(&st("-0+")), Err(Error::NotAdmissible(_))));
    }

    #[test]
    fn descent_roots_lie_in_separation_set() {
        let sp = space("G2");
        for x in sp.enumerate(1000).unwrap() {
            let d = sp.descent_roots(&x).unwrap();
            assert!(d.is_subset(&sp.separation_set(&x).unwrap()));
            assert_eq!(d.is_empty(), x == SignType::zero(6));
        }
    }

    #[test]
    fn star_condition_matches_wall_test() {
        for t in ["A2", "B2", "G2", "A3", "B3", "C3"] {
            let sp = space(t);
            let npos = sp.len();
            for x in sp.enumerate(100_000).unwrap() {
                for s in 0..sp.system().rank() {
                    if x.get(s) == Sign::Plus {
                        let wall = sp.descent_roots(&x).unwrap().contains(npos + s);
                        assert_eq!(wall, sp.star_condition(&x, s), "{t} {x} s{}", s + 1);
                    }
                }
            }
        }
    }
}
