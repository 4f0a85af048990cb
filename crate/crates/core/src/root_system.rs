//! Finite irreducible crystallographic root systems.
//!
//! Roots are stored as integer coordinate vectors in the basis of simple
//! roots. The Cartan matrix follows the convention `A[i][j] = <a_i^v, a_j>`,
//! so the simple reflection `s_i` acts on root coordinates by
//! `x -> x - (sum_j A[i][j] x_j) e_i`.
//!
//! Numbering of the simple roots is Bourbaki's, except for type `B` where
//! the short simple root is `a_1` (so that `B2` has positive roots
//! `a1, a2, a1+a2, 2a1+a2` with `a2` long). `C_n` keeps the Bourbaki
//! numbering, which makes `B2` and `C2` literally the same system.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// Type of an irreducible finite crystallographic root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let invalid = |reason| Error::InvalidType {
            family: family.letter(),
            rank,
            reason,
        };
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(invalid(match family {
                Family::A => "type A needs rank >= 1",
                Family::B => "type B needs rank >= 2",
                Family::C => "type C needs rank >= 2",
                Family::D => "type D needs rank >= 4",
                Family::E => "type E exists in ranks 6, 7, 8",
                Family::F => "type F exists in rank 4 only",
                Family::G => "type G exists in rank 2 only",
            }));
        }
        // Roots are packed into 256-bit sets of small roots (two per positive root).
        if family == Family::A && rank > 15 || matches!(family, Family::B | Family::C) && rank > 11
            || family == Family::D && rank > 11
        {
            return Err(invalid("rank too large for this engine"));
        }
        Ok(CartanType { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Cartan matrix `A[i][j] = <a_i^v, a_j>`.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut bond = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.family {
            Family::A => (0..n - 1).for_each(|i| bond(i, i + 1, -1, -1)),
            Family::B => {
                bond(0, 1, -2, -1);
                (1..n - 1).for_each(|i| bond(i, i + 1, -1, -1));
            }
            Family::C => {
                (0..n - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(n - 2, n - 1, -2, -1);
            }
            Family::D => {
                (0..n - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(n - 3, n - 1, -1, -1);
            }
            Family::E => {
                bond(0, 2, -1, -1);
                bond(1, 3, -1, -1);
                (2..n - 1).for_each(|i| bond(i, i + 1, -1, -1));
            }
            Family::F => {
                bond(0, 1, -1, -1);
                bond(1, 2, -1, -2);
                bond(2, 3, -1, -1);
            }
            Family::G => bond(0, 1, -3, -1),
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::ParseType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::ParseType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

/// A root of the finite system, in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FiniteRoot(pub Vec<i64>);

impl FiniteRoot {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn neg(&self) -> FiniteRoot {
        FiniteRoot(self.0.iter().map(|c| -c).collect())
    }

    pub fn simple(rank: usize, i: usize) -> FiniteRoot {
        let mut v = vec![0; rank];
        v[i] = 1;
        FiniteRoot(v)
    }
}

/// Writes a root as a combination of `a1..an`, e.g. `2a1+a2`.
impl fmt::Display for FiniteRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Reference to an element of the full root system: a positive root index,
/// optionally negated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootRef {
    pub index: usize,
    pub negative: bool,
}

impl RootRef {
    pub fn positive(index: usize) -> Self {
        RootRef { index, negative: false }
    }

    pub fn flip(self) -> Self {
        RootRef { index: self.index, negative: !self.negative }
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    /// `d_i = (a_i, a_i) / 2`, normalized so short roots have `d = 1`.
    symmetrizer: Vec<i64>,
    /// Gram matrix of the simple roots: `(a_i, a_j) = d_i A[i][j]`.
    form: Vec<Vec<i64>>,
    positive: Vec<FiniteRoot>,
    index: HashMap<Vec<i64>, usize>,
    /// `coroot_pairing[r][i] = <b_r^v, a_i>`: coordinates of the coroot of
    /// positive root `r` in the basis of fundamental coweights.
    coroot_pairing: Vec<Vec<i64>>,
    highest: usize,
    coxeter_number: usize,
    exponents: Vec<usize>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let n = cartan_type.rank();
        let cartan = cartan_type.cartan_matrix();
        let symmetrizer = symmetrize(&cartan);
        let form: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| symmetrizer[i] * cartan[i][j]).collect())
            .collect();

        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let r = FiniteRoot::simple(n, i).0;
            seen.insert(r.clone());
            queue.push_back(r);
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * r[j]).sum();
                let mut img = r.clone();
                img[i] -= pairing;
                if img.iter().all(|&c| c >= 0) && img.iter().any(|&c| c > 0) && seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        let mut positive: Vec<FiniteRoot> = seen.into_iter().map(FiniteRoot).collect();
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
        let index = positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.0.clone(), i))
            .collect();

        let gram = |x: &[i64], y: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..n {
                for j in 0..n {
                    s += x[i] * form[i][j] * y[j];
                }
            }
            s
        };
        let coroot_pairing = positive
            .iter()
            .map(|r| {
                let rr = gram(&r.0, &r.0);
                (0..n)
                    .map(|i| {
                        let e = FiniteRoot::simple(n, i).0;
                        let num = 2 * gram(&r.0, &e);
                        debug_assert_eq!(num % rr, 0);
                        num / rr
                    })
                    .collect()
            })
            .collect();

        let highest = positive.len() - 1;
        let coxeter_number = positive[highest].height() as usize + 1;
        let exponents = exponents_from_heights(&positive, coxeter_number);

        RootSystem {
            cartan_type,
            cartan,
            symmetrizer,
            form,
            positive,
            index,
            coroot_pairing,
            highest,
            coxeter_number,
            exponents,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Gram matrix of the invariant form on simple roots (short roots have
    /// squared length 2).
    pub fn bilinear_form(&self) -> &[Vec<i64>] {
        &self.form
    }

    pub fn positive_roots(&self) -> &[FiniteRoot] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn root(&self, index: usize) -> &FiniteRoot {
        &self.positive[index]
    }

    pub fn highest_root(&self) -> &FiniteRoot {
        &self.positive[self.highest]
    }

    pub fn highest_index(&self) -> usize {
        self.highest
    }

    pub fn coxeter_number(&self) -> usize {
        self.coxeter_number
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    pub fn weyl_order(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64 + 1).product()
    }

    /// `(h+1)^n`: the number of Shi regions.
    pub fn shi_region_count(&self) -> u64 {
        (self.coxeter_number as u64 + 1).pow(self.rank() as u32)
    }

    /// `prod (h + e_i + 1) / |W_0|`.
    pub fn catalan_number(&self) -> u64 {
        let h = self.coxeter_number as u128;
        let num: u128 = self.exponents.iter().map(|&e| h + e as u128 + 1).product();
        (num / self.weyl_order() as u128) as u64
    }

    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += x[i] * self.form[i][j] * y[j];
            }
        }
        s
    }

    /// Index of a positive root given its coordinates.
    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Resolves any root of the full system.
    pub fn lookup(&self, root: &FiniteRoot) -> Option<RootRef> {
        if let Some(i) = self.index_of(&root.0) {
            return Some(RootRef::positive(i));
        }
        let neg: Vec<i64> = root.0.iter().map(|c| -c).collect();
        self.index_of(&neg).map(|i| RootRef { index: i, negative: true })
    }

    pub fn is_root(&self, root: &FiniteRoot) -> bool {
        root.0.len() == self.rank() && self.lookup(root).is_some()
    }

    pub fn resolve(&self, r: RootRef) -> FiniteRoot {
        let root = &self.positive[r.index];
        if r.negative {
            root.neg()
        } else {
            root.clone()
        }
    }

    pub fn is_long(&self, index: usize) -> bool {
        let r = &self.positive[index].0;
        self.inner(r, r) > 2
    }

    /// `<b^v, a_i>` for the positive root `b` at `index`.
    pub fn coroot_pairing(&self, index: usize) -> &[i64] {
        &self.coroot_pairing[index]
    }

    /// `<a^v, x>` for an arbitrary vector `x` in root coordinates.
    pub fn coroot_eval(&self, index: usize, x: &[i64]) -> i64 {
        self.coroot_pairing[index]
            .iter()
            .zip(x)
            .map(|(p, c)| p * c)
            .sum()
    }

    /// The coroot `a^v = 2a/(a,a)` expressed in simple-root coordinates
    /// (rational in general).
    pub fn coroot_coords(&self, root: &FiniteRoot) -> Vec<Ratio<i64>> {
        let rr = self.inner(&root.0, &root.0);
        root.0.iter().map(|&c| Ratio::new(2 * c, rr)).collect()
    }

    /// Reflection `s_a(x) = x - <a^v, x> a`.
    pub fn reflect(&self, alpha: &FiniteRoot, x: &FiniteRoot) -> Result<FiniteRoot> {
        let r = self
            .lookup(alpha)
            .filter(|_| alpha.0.len() == self.rank())
            .ok_or_else(|| Error::NotARoot(alpha.to_string()))?;
        if x.0.len() != self.rank() {
            return Err(Error::NotARoot(x.to_string()));
        }
        Ok(FiniteRoot(self.reflect_coords(r.index, &x.0)))
    }

    /// Reflection in the positive root at `index`, applied to raw coordinates.
    pub fn reflect_coords(&self, index: usize, x: &[i64]) -> Vec<i64> {
        let p = self.coroot_eval(index, x);
        let a = &self.positive[index].0;
        x.iter().zip(a).map(|(xi, ai)| xi - p * ai).collect()
    }

    /// Simple reflection `s_i` (0-based) applied to raw coordinates.
    pub fn simple_reflect_coords(&self, i: usize, x: &[i64]) -> Vec<i64> {
        let p: i64 = self.cartan[i].iter().zip(x).map(|(a, c)| a * c).sum();
        let mut out = x.to_vec();
        out[i] -= p;
        out
    }

    /// Vertices of the fundamental alcove in fundamental-coweight
    /// coordinates: the origin and `w_i^v / c_i`, where `c_i` are the
    /// coordinates of the highest root.
    pub fn coweight_vertices(&self) -> Vec<Vec<Ratio<i64>>> {
        let n = self.rank();
        let c = &self.highest_root().0;
        let mut out = vec![vec![Ratio::from_integer(0); n]];
        for i in 0..n {
            let mut v = vec![Ratio::from_integer(0); n];
            v[i] = Ratio::new(1, c[i]);
            out.push(v);
        }
        out
    }

    pub fn poset(&self) -> RootPoset {
        RootPoset::new(self)
    }
}

impl RootSystem {
    /// Irreducible rank-2 subsystems `Psi = Phi_0 intersected with a plane`,
    /// one per plane spanned by a pair of roots. Planes meeting the system in
    /// an `A1 x A1` are skipped.
    pub fn rank2_subsystems(&self) -> Vec<Rank2Subsystem> {
        let n = self.rank();
        let roots = &self.positive;
        let mut planes: Vec<(Vec<i64>, BTreeSet<usize>)> = Vec::new();
        let mut by_key: HashMap<Vec<i64>, usize> = HashMap::new();
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                let key = plane_key(&roots[i].0, &roots[j].0, n);
                let slot = *by_key.entry(key.clone()).or_insert_with(|| {
                    planes.push((key, BTreeSet::new()));
                    planes.len() - 1
                });
                planes[slot].1.insert(i);
                planes[slot].1.insert(j);
            }
        }
        let mut out = Vec::new();
        for (_, members) in planes {
            let kind = match members.len() {
                3 => Rank2Kind::A2,
                4 => Rank2Kind::B2,
                6 => Rank2Kind::G2,
                _ => continue,
            };
            let members: Vec<usize> = members.into_iter().collect();
            let mut simple: Vec<usize> = members
                .iter()
                .copied()
                .filter(|&c| {
                    !members.iter().any(|&a| {
                        members.iter().any(|&b| {
                            roots[a].0.iter().zip(&roots[b].0).zip(&roots[c].0).all(|((x, y), z)| x + y == *z)
                        })
                    })
                })
                .collect();
            debug_assert_eq!(simple.len(), 2);
            if kind != Rank2Kind::A2 && self.is_long(simple[0]) {
                simple.swap(0, 1);
            }
            let model = kind.system();
            let mut positions = vec![usize::MAX; members.len()];
            for &m in &members {
                let coeffs = decompose(&roots[m].0, &roots[simple[0]].0, &roots[simple[1]].0);
                let slot = model.index_of(&coeffs).expect("plane roots are model roots");
                positions[slot] = m;
            }
            out.push(Rank2Subsystem {
                kind,
                simple: [simple[0], simple[1]],
                roots: positions,
            });
        }
        out.sort_by(|a, b| a.roots.cmp(&b.roots));
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rank2Kind {
    A2,
    B2,
    G2,
}

impl Rank2Kind {
    pub const ALL: [Rank2Kind; 3] = [Rank2Kind::A2, Rank2Kind::B2, Rank2Kind::G2];

    pub fn cartan_type(self) -> CartanType {
        let (family, rank) = match self {
            Rank2Kind::A2 => (Family::A, 2),
            Rank2Kind::B2 => (Family::B, 2),
            Rank2Kind::G2 => (Family::G, 2),
        };
        CartanType { family, rank }
    }

    pub fn system(self) -> RootSystem {
        RootSystem::new(self.cartan_type())
    }

    pub fn num_positive(self) -> usize {
        match self {
            Rank2Kind::A2 => 3,
            Rank2Kind::B2 => 4,
            Rank2Kind::G2 => 6,
        }
    }
}

impl fmt::Display for Rank2Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cartan_type())
    }
}

/// An irreducible rank-2 subsystem. `roots[k]` is the index (in the ambient
/// positive-root order) of the root sitting at position `k` of the model
/// system of type `kind`, whose simple roots are `simple` (short first).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rank2Subsystem {
    pub kind: Rank2Kind,
    pub simple: [usize; 2],
    pub roots: Vec<usize>,
}

impl Rank2Subsystem {
    pub fn contains(&self, index: usize) -> bool {
        self.roots.contains(&index)
    }
}

/// Normalized Pluecker coordinates of the plane spanned by `x` and `y`.
fn plane_key(x: &[i64], y: &[i64], n: usize) -> Vec<i64> {
    let mut key = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            key.push(x[i] * y[j] - x[j] * y[i]);
        }
    }
    let g = key.iter().fold(0, |acc, &v| num_integer_gcd(acc, v));
    let sign = key.iter().find(|&&v| v != 0).map_or(1, |v| v.signum());
    key.iter().map(|v| v / g * sign).collect()
}

/// Coefficients `(p, q)` with `r = p a + q b`, for `r` in the span of `a, b`.
fn decompose(r: &[i64], a: &[i64], b: &[i64]) -> Vec<i64> {
    let n = r.len();
    for i in 0..n {
        for j in i + 1..n {
            let det = a[i] * b[j] - a[j] * b[i];
            if det != 0 {
                let p = (r[i] * b[j] - r[j] * b[i]) / det;
                let q = (a[i] * r[j] - a[j] * r[i]) / det;
                return vec![p, q];
            }
        }
    }
    unreachable!("a and b are linearly independent")
}

fn symmetrize(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    d[0] = Some(Ratio::from_integer(1));
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                d[j] = Some(d[i].unwrap() * Ratio::new(cartan[i][j], cartan[j][i]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Ratio<i64>> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let lcm = d.iter().fold(1i64, |acc, r| num_integer_lcm(acc, *r.denom()));
    let ints: Vec<i64> = d.iter().map(|r| (r * lcm).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| num_integer_gcd(acc, x));
    ints.into_iter().map(|x| x / g).collect()
}

pub(crate) fn num_integer_gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn num_integer_lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / num_integer_gcd(a, b) * b).abs()
}

/// Exponents read off the height distribution of the positive roots: the
/// multiplicity of `e` is `#{height e} - #{height e+1}`.
fn exponents_from_heights(positive: &[FiniteRoot], h: usize) -> Vec<usize> {
    let mut by_height = vec![0usize; h + 1];
    for r in positive {
        by_height[r.height() as usize] += 1;
    }
    let mut exps = Vec::new();
    for e in 1..h {
        let mult = by_height[e] - by_height[e + 1];
        exps.extend(std::iter::repeat(e).take(mult));
    }
    exps
}

/// The root poset: `a <= b` iff `b - a` is a nonnegative combination of
/// simple roots.
#[derive(Debug, Clone)]
pub struct RootPoset {
    n: usize,
    /// `leq[a][b]` for positive root indices.
    leq: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
}

/// An upward-closed subset of the positive roots together with its
/// antichain of minimal elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PosetIdeal {
    pub members: Vec<usize>,
    pub minimal: Vec<usize>,
}

impl RootPoset {
    fn new(sys: &RootSystem) -> Self {
        let roots = sys.positive_roots();
        let n = roots.len();
        let leq: Vec<Vec<bool>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| roots[a].0.iter().zip(&roots[b].0).all(|(x, y)| x <= y))
                    .collect()
            })
            .collect();
        let mut covers = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if roots[b].height() == roots[a].height() + 1 && leq[a][b] {
                    covers.push((a, b));
                }
            }
        }
        RootPoset { n, leq, covers }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&b| (0..self.n).all(|a| a == b || !self.leq[a][b]))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&a| (0..self.n).all(|b| a == b || !self.leq[a][b]))
            .collect()
    }

    pub fn up_closure(&self, gens: &[usize]) -> Vec<usize> {
        (0..self.n)
            .filter(|&b| gens.iter().any(|&a| self.leq[a][b]))
            .collect()
    }

    pub fn minimal_of(&self, set: &[usize]) -> Vec<usize> {
        set.iter()
            .copied()
            .filter(|&b| set.iter().all(|&a| a == b || !self.leq[a][b]))
            .collect()
    }

    pub fn is_ideal(&self, set: &[usize]) -> bool {
        set.iter()
            .all(|&a| (0..self.n).all(|b| !self.leq[a][b] || set.contains(&b)))
    }

    /// All antichains, in lexicographic order of their sorted index lists.
    pub fn antichains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.extend_antichain(0, &mut current, &mut out);
        out.sort();
        out
    }

    fn extend_antichain(&self, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(current.clone());
        for next in start..self.n {
            if current
                .iter()
                .all(|&a| !self.leq[a][next] && !self.leq[next][a])
            {
                current.push(next);
                self.extend_antichain(next + 1, current, out);
                current.pop();
            }
        }
    }

    /// All ideals (upward-closed subsets), each with its minimal antichain.
    pub fn ideals(&self) -> Vec<PosetIdeal> {
        let mut out: Vec<PosetIdeal> = self
            .antichains()
            .into_iter()
            .map(|minimal| PosetIdeal {
                members: self.up_closure(&minimal),
                minimal,
            })
            .collect();
        out.sort_by(|a, b| a.members.len().cmp(&b.members.len()).then_with(|| a.members.cmp(&b.members)));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn roots(s: &RootSystem) -> Vec<Vec<i64>> {
        s.positive_roots().iter().map(|r| r.0.clone()).collect()
    }

    #[test]
    fn a2_positive_roots() {
        let a2 = sys("A2");
        assert_eq!(roots(&a2), vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(a2.coxeter_number(), 3);
        assert_eq!(a2.exponents(), &[1, 2]);
        assert_eq!(a2.weyl_order(), 6);
    }

    #[test]
    fn b2_roots_and_lengths() {
        let b2 = sys("B2");
        assert_eq!(
            roots(&b2),
            vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]]
        );
        let long: Vec<_> = (0..4).filter(|&i| b2.is_long(i)).map(|i| b2.root(i).to_string()).collect();
        assert_eq!(long, vec!["a2", "2a1+a2"]);
    }

    #[test]
    fn g2_long_roots() {
        let g2 = sys("G2");
        let long: Vec<_> = (0..6).filter(|&i| g2.is_long(i)).map(|i| g2.root(i).clone()).collect();
        assert_eq!(
            long,
            vec![FiniteRoot(vec![0, 1]), FiniteRoot(vec![3, 1]), FiniteRoot(vec![3, 2])]
        );
        // 3a1+2a2 is in the W0-orbit of a2
        let s1a2 = g2.reflect(&FiniteRoot(vec![1, 0]), &FiniteRoot(vec![0, 1])).unwrap();
        let s2s1a2 = g2.reflect(&FiniteRoot(vec![0, 1]), &s1a2).unwrap();
        assert_eq!(s2s1a2, FiniteRoot(vec![3, 2]));
    }

    #[test]
    fn invalid_types_are_rejected() {
        assert!(CartanType::new(Family::A, 0).is_err());
        assert!(CartanType::new(Family::B, 1).is_err());
        assert!(CartanType::new(Family::D, 3).is_err());
        assert!(CartanType::new(Family::E, 9).is_err());
        assert!(CartanType::new(Family::F, 3).is_err());
        assert!(CartanType::new(Family::G, 3).is_err());
        assert!("X3".parse::<CartanType>().is_err());
        assert!("A".parse::<CartanType>().is_err());
    }

    #[test]
    fn classical_invariants() {
        let table: &[(&str, usize, &[usize], u64)] = &[
            ("A1", 2, &[1], 2),
            ("A3", 4, &[1, 2, 3], 24),
            ("B3", 6, &[1, 3, 5], 48),
            ("C3", 6, &[1, 3, 5], 48),
            ("D4", 6, &[1, 3, 3, 5], 192),
            ("D5", 8, &[1, 3, 4, 5, 7], 1920),
            ("E6", 12, &[1, 4, 5, 7, 8, 11], 51840),
            ("E7", 18, &[1, 5, 7, 9, 11, 13, 17], 2903040),
            ("E8", 30, &[1, 7, 11, 13, 17, 19, 23, 29], 696729600),
            ("F4", 12, &[1, 5, 7, 11], 1152),
            ("G2", 6, &[1, 5], 12),
        ];
        for &(t, h, exps, order) in table {
            let s = sys(t);
            assert_eq!(s.coxeter_number(), h, "{t}");
            assert_eq!(s.exponents(), exps, "{t}");
            assert_eq!(s.weyl_order(), order, "{t}");
            assert_eq!(s.num_positive() * 2, s.rank() * h, "{t}");
            assert_eq!(s.exponents().iter().sum::<usize>(), s.num_positive(), "{t}");
        }
    }

    #[test]
    fn catalan_numbers() {
        for (t, cat) in [("A2", 5), ("B2", 6), ("G2", 8), ("A3", 14), ("B3", 20), ("D4", 50), ("E8", 25080)] {
            assert_eq!(sys(t).catalan_number(), cat, "{t}");
        }
    }

    #[test]
    fn coroot_pairs_to_two() {
        for t in ["A3", "B3", "C4", "D4", "F4", "G2", "E6"] {
            let s = sys(t);
            for (i, r) in s.positive_roots().iter().enumerate() {
                assert_eq!(s.coroot_eval(i, &r.0), 2, "{t} {r}");
            }
        }
    }

    #[test]
    fn highest_root_dominates() {
        for t in ["A4", "B3", "C3", "D5", "F4", "G2", "E7"] {
            let s = sys(t);
            let top = s.highest_root().clone();
            for r in s.positive_roots() {
                assert!(r.0.iter().zip(&top.0).all(|(a, b)| a <= b), "{t}");
            }
        }
    }

    #[test]
    fn reflection_examples() {
        let a2 = sys("A2");
        let a1 = FiniteRoot(vec![1, 0]);
        assert_eq!(a2.reflect(&a1, &a1).unwrap(), FiniteRoot(vec![-1, 0]));
        assert_eq!(a2.reflect(&a1, &FiniteRoot(vec![0, 1])).unwrap(), FiniteRoot(vec![1, 1]));
        let b2 = sys("B2");
        assert_eq!(b2.reflect(&a1, &FiniteRoot(vec![0, 1])).unwrap(), FiniteRoot(vec![2, 1]));
        assert!(matches!(
            a2.reflect(&FiniteRoot(vec![1, -1]), &a1),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn reflections_close_and_preserve_the_form() {
        for t in ["A3", "B3", "C3", "D4", "G2", "F4"] {
            let s = sys(t);
            let all: Vec<FiniteRoot> = s
                .positive_roots()
                .iter()
                .flat_map(|r| [r.clone(), r.neg()])
                .collect();
            for a in &all {
                for x in &all {
                    let y = s.reflect(a, x).unwrap();
                    assert!(s.is_root(&y), "{t}: s_{a}({x}) = {y}");
                    assert_eq!(s.reflect(a, &y).unwrap(), *x);
                    for z in &all {
                        let sz = s.reflect(a, z).unwrap();
                        assert_eq!(s.inner(&y.0, &sz.0), s.inner(&x.0, &z.0));
                    }
                }
            }
        }
    }

    #[test]
    fn simple_reflection_permutes_other_positive_roots() {
        for t in ["A4", "B3", "C3", "D4", "G2", "F4", "E6"] {
            let s = sys(t);
            for i in 0..s.rank() {
                let mut image: Vec<Vec<i64>> = s
                    .positive_roots()
                    .iter()
                    .filter(|r| **r != FiniteRoot::simple(s.rank(), i))
                    .map(|r| s.simple_reflect_coords(i, &r.0))
                    .collect();
                let mut expected: Vec<Vec<i64>> = s
                    .positive_roots()
                    .iter()
                    .filter(|r| **r != FiniteRoot::simple(s.rank(), i))
                    .map(|r| r.0.clone())
                    .collect();
                image.sort();
                expected.sort();
                assert_eq!(image, expected, "{t} s{}", i + 1);
            }
        }
    }

    #[test]
    fn poset_extremes() {
        let s = sys("B3");
        let p = s.poset();
        let mut mins = p.minimal_elements();
        mins.sort();
        assert_eq!(mins, vec![0, 1, 2]);
        assert_eq!(p.maximal_elements(), vec![s.highest_index()]);
        for &(a, b) in p.covers() {
            assert_eq!(s.root(b).height(), s.root(a).height() + 1);
        }
    }

    fn ideals_by_subsets(p: &RootPoset) -> usize {
        let n = p.len();
        (0u32..(1 << n))
            .filter(|mask| {
                let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                p.is_ideal(&set)
            })
            .count()
    }

    #[test]
    fn ideals_match_catalan_and_subset_count() {
        for (t, cat) in [("A2", 5), ("B2", 6), ("G2", 8), ("A3", 14), ("B3", 20), ("C3", 20)] {
            let s = sys(t);
            let p = s.poset();
            let ideals = p.ideals();
            assert_eq!(ideals.len(), cat, "{t}");
            assert_eq!(ideals_by_subsets(&p), cat, "{t}");
            assert!(ideals.iter().any(|i| i.members.is_empty()));
            assert!(ideals.iter().any(|i| i.members.len() == s.num_positive()));
            for ideal in &ideals {
                assert!(p.is_ideal(&ideal.members));
                assert_eq!(p.minimal_of(&ideal.members), ideal.minimal);
                assert_eq!(p.up_closure(&ideal.minimal), ideal.members);
            }
        }
    }

    #[test]
    fn rank2_subsystem_counts() {
        let a2 = sys("A2").rank2_subsystems();
        assert_eq!(a2.len(), 1);
        assert_eq!(a2[0].roots, vec![0, 1, 2]);
        let a3 = sys("A3").rank2_subsystems();
        assert_eq!(a3.len(), 4);
        assert!(a3.iter().all(|p| p.kind == Rank2Kind::A2));
        let b3 = sys("B3").rank2_subsystems();
        assert!(b3.iter().any(|p| p.kind == Rank2Kind::A2));
        assert!(b3.iter().any(|p| p.kind == Rank2Kind::B2));
        let g2 = sys("G2").rank2_subsystems();
        assert_eq!(g2.len(), 1);
        assert_eq!(g2[0].roots, vec![0, 1, 2, 3, 4, 5]);
        let b2 = sys("B2").rank2_subsystems();
        assert_eq!(b2[0].roots, vec![0, 1, 2, 3]);
    }

    #[test]
    fn rank2_positions_respect_model_coordinates() {
        for t in ["B3", "C3", "F4", "D4", "B4"] {
            let s = sys(t);
            for p in s.rank2_subsystems() {
                let model = p.kind.system();
                let a = &s.root(p.simple[0]).0;
                let b = &s.root(p.simple[1]).0;
                for (k, &idx) in p.roots.iter().enumerate() {
                    let c = &model.root(k).0;
                    let expect: Vec<i64> = a.iter().zip(b).map(|(x, y)| c[0] * x + c[1] * y).collect();
                    assert_eq!(s.root(idx).0, expect, "{t}");
                }
                if p.kind != Rank2Kind::A2 {
                    assert!(!s.is_long(p.simple[0]) && s.is_long(p.simple[1]), "{t}");
                }
            }
        }
    }
}
