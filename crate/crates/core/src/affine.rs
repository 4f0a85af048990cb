//! The affine Weyl group `W = Q^v x| W_0` acting on alcoves.
//!
//! An element `w = t_l u` (translation by `l` in the coroot lattice after the
//! finite part `u`) is stored as
//! * `r`: the matrix of `u` on simple-root coordinates,
//! * `m`: the matrix of `u` on fundamental-coweight coordinates
//!   (`p_i = <x, a_i>`), which is `r^{-T}`,
//! * `t`: the translation in fundamental-coweight coordinates, `t_i = <l, a_i>`.
//!
//! Generators are indexed by letters: `0` is the affine reflection
//! `s_0 = t_{a0^v} s_{a0}`, and `1..=n` are the simple reflections.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{num_integer_lcm, CartanType, FiniteRoot, RootSystem};

/// An affine root `a + k d`, seen as the affine function `<a, x> + k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineRoot {
    pub finite: FiniteRoot,
    pub delta: i64,
}

impl AffineRoot {
    pub fn new(finite: FiniteRoot, delta: i64) -> Self {
        AffineRoot { finite, delta }
    }

    pub fn is_positive(&self) -> bool {
        (self.finite.is_positive() && self.delta >= 0) || (self.finite.is_negative() && self.delta >= 1)
    }

    pub fn neg(&self) -> AffineRoot {
        AffineRoot {
            finite: self.finite.neg(),
            delta: -self.delta,
        }
    }

    /// Coordinates `(finite..., delta)`, used for cone computations.
    pub fn vector(&self) -> Vec<i64> {
        let mut v = self.finite.0.clone();
        v.push(self.delta);
        v
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = match self.delta.abs() {
            1 => "d".to_string(),
            k => format!("{k}d"),
        };
        let terms = self.finite.0.iter().filter(|&&c| c != 0).count();
        if self.delta == 0 {
            write!(f, "{}", self.finite)
        } else if self.finite.is_negative() && self.delta > 0 {
            let pos = self.finite.neg();
            if terms > 1 {
                write!(f, "{d}-({pos})")
            } else {
                write!(f, "{d}-{pos}")
            }
        } else if self.delta > 0 {
            write!(f, "{}+{d}", self.finite)
        } else {
            write!(f, "{}-{d}", self.finite)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    cartan_type: CartanType,
    r: Vec<i64>,
    m: Vec<i64>,
    t: Vec<i64>,
}

impl GroupElement {
    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.t.len()
    }

    /// Action of the finite part on simple-root coordinates (row-major).
    pub fn finite_part(&self) -> Vec<Vec<i64>> {
        self.r.chunks(self.rank()).map(|c| c.to_vec()).collect()
    }

    /// Translation in fundamental-coweight coordinates.
    pub fn translation_coweights(&self) -> &[i64] {
        &self.t
    }

    pub fn is_finite(&self) -> bool {
        self.t.iter().all(|&x| x == 0)
    }

    fn mul_unchecked(&self, other: &GroupElement) -> GroupElement {
        let n = self.rank();
        let matmul = |a: &[i64], b: &[i64]| -> Vec<i64> {
            let mut out = vec![0; n * n];
            for i in 0..n {
                for k in 0..n {
                    let x = a[i * n + k];
                    if x == 0 {
                        continue;
                    }
                    for j in 0..n {
                        out[i * n + j] += x * b[k * n + j];
                    }
                }
            }
            out
        };
        let mut t = self.t.clone();
        for i in 0..n {
            for k in 0..n {
                t[i] += self.m[i * n + k] * other.t[k];
            }
        }
        GroupElement {
            cartan_type: self.cartan_type,
            r: matmul(&self.r, &other.r),
            m: matmul(&self.m, &other.m),
            t,
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let n = self.rank();
        let transpose = |a: &[i64]| -> Vec<i64> {
            let mut out = vec![0; n * n];
            for i in 0..n {
                for j in 0..n {
                    out[j * n + i] = a[i * n + j];
                }
            }
            out
        };
        let m_inv = transpose(&self.r);
        let mut t = vec![0; n];
        for i in 0..n {
            for k in 0..n {
                t[i] -= m_inv[i * n + k] * self.t[k];
            }
        }
        GroupElement {
            cartan_type: self.cartan_type,
            r: transpose(&self.m),
            m: m_inv,
            t,
        }
    }

    /// `u(a)` for a vector in simple-root coordinates.
    fn act_finite(&self, x: &[i64]) -> Vec<i64> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.r[i * n + j] * x[j]).sum())
            .collect()
    }
}

/// Left and right descent data of an element.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Descents {
    /// Letters `s` with `l(sw) < l(w)`.
    pub left: Vec<usize>,
    /// Letters `s` with `l(ws) < l(w)`.
    pub right: Vec<usize>,
    /// `Delta` intersected with `N(w)`.
    pub left_roots: BTreeSet<AffineRoot>,
    /// `-w(a_s)` for right descents `s`.
    pub right_roots: BTreeSet<AffineRoot>,
}

#[derive(Debug, Clone)]
pub struct AffineWeylGroup {
    sys: Arc<RootSystem>,
    gens: Vec<GroupElement>,
    /// Barycenter of the fundamental alcove, scaled by `scale`.
    base: Vec<i64>,
    scale: i64,
}

impl AffineWeylGroup {
    pub fn new(cartan_type: CartanType) -> Self {
        Self::from_system(Arc::new(RootSystem::new(cartan_type)))
    }

    pub fn from_system(sys: Arc<RootSystem>) -> Self {
        let n = sys.rank();
        let c = sys.highest_root().0.clone();
        let lcm = c.iter().fold(1, |acc, &x| num_integer_lcm(acc, x));
        let scale = (n as i64 + 1) * lcm;
        let base: Vec<i64> = c.iter().map(|&ci| lcm / ci).collect();
        let mut group = AffineWeylGroup {
            sys,
            gens: Vec::new(),
            base,
            scale,
        };
        let a0 = group.sys.highest_index();
        let mut s0 = group.finite_reflection(a0);
        s0.t = group.sys.coroot_pairing(a0).to_vec();
        let mut gens = vec![s0];
        gens.extend((0..n).map(|j| group.simple_finite(j)));
        group.gens = gens;
        group
    }

    pub fn system(&self) -> &RootSystem {
        &self.sys
    }

    pub fn system_arc(&self) -> Arc<RootSystem> {
        self.sys.clone()
    }

    pub fn cartan_type(&self) -> CartanType {
        self.sys.cartan_type()
    }

    pub fn rank(&self) -> usize {
        self.sys.rank()
    }

    /// Number of Coxeter generators, `n + 1`.
    pub fn num_generators(&self) -> usize {
        self.rank() + 1
    }

    pub fn identity(&self) -> GroupElement {
        let n = self.rank();
        let mut id = vec![0; n * n];
        for i in 0..n {
            id[i * n + i] = 1;
        }
        GroupElement {
            cartan_type: self.cartan_type(),
            r: id.clone(),
            m: id,
            t: vec![0; n],
        }
    }

    fn simple_finite(&self, j: usize) -> GroupElement {
        let n = self.rank();
        let a = self.sys.cartan_matrix();
        let mut r = vec![0; n * n];
        let mut m = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let delta = i64::from(i == k);
                r[i * n + k] = delta - if i == j { a[j][k] } else { 0 };
                m[i * n + k] = delta - if k == j { a[j][i] } else { 0 };
            }
        }
        GroupElement {
            cartan_type: self.cartan_type(),
            r,
            m,
            t: vec![0; n],
        }
    }

    /// Reflection `s_a` in the finite Weyl group, for the positive root at `index`.
    pub fn finite_reflection(&self, index: usize) -> GroupElement {
        let n = self.rank();
        let c = &self.sys.root(index).0;
        let v = self.sys.coroot_pairing(index);
        let mut r = vec![0; n * n];
        let mut m = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let delta = i64::from(i == k);
                r[i * n + k] = delta - c[i] * v[k];
                m[i * n + k] = delta - v[i] * c[k];
            }
        }
        GroupElement {
            cartan_type: self.cartan_type(),
            r,
            m,
            t: vec![0; n],
        }
    }

    /// Translation by the coroot-lattice element `sum a_j a_j^v`.
    pub fn translation(&self, coroot_coords: &[i64]) -> GroupElement {
        let n = self.rank();
        let a = self.sys.cartan_matrix();
        let mut w = self.identity();
        w.t = (0..n)
            .map(|i| (0..n).map(|j| coroot_coords[j] * a[j][i]).sum())
            .collect();
        w
    }

    /// Translation part in the coroot basis: solves `t = A^T a`.
    pub fn translation_coroots(&self, w: &GroupElement) -> Vec<Ratio<i64>> {
        let n = self.rank();
        let a = self.sys.cartan_matrix();
        // Gaussian elimination on A^T | t.
        let mut rows: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| {
                let mut row: Vec<Ratio<i64>> = (0..n).map(|j| Ratio::from_integer(a[j][i])).collect();
                row.push(Ratio::from_integer(w.t[i]));
                row
            })
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&r| rows[r][col] != Ratio::from_integer(0)).expect("Cartan matrix is invertible");
            rows.swap(col, p);
            let pivot = rows[col][col];
            for x in rows[col].iter_mut() {
                *x /= pivot;
            }
            for r in 0..n {
                if r != col {
                    let f = rows[r][col];
                    if f != Ratio::from_integer(0) {
                        for k in 0..=n {
                            let y = rows[col][k];
                            rows[r][k] -= f * y;
                        }
                    }
                }
            }
        }
        rows.into_iter().map(|r| r[n]).collect()
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.gens
    }

    pub fn generator(&self, letter: usize) -> Result<&GroupElement> {
        self.gens.get(letter).ok_or(Error::InvalidLetter {
            letter,
            size: self.gens.len(),
        })
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        for x in [a, b] {
            if x.cartan_type != self.cartan_type() {
                return Err(Error::MismatchedSystems {
                    left: self.cartan_type(),
                    right: x.cartan_type,
                });
            }
        }
        Ok(a.mul_unchecked(b))
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        debug_assert_eq!(a.cartan_type, b.cartan_type);
        a.mul_unchecked(b)
    }

    /// `s w` for a letter `s`.
    pub fn left_mul(&self, letter: usize, w: &GroupElement) -> GroupElement {
        self.gens[letter].mul_unchecked(w)
    }

    /// `w s` for a letter `s`.
    pub fn right_mul(&self, w: &GroupElement, letter: usize) -> GroupElement {
        w.mul_unchecked(&self.gens[letter])
    }

    pub fn element_from_word(&self, word: &[usize]) -> Result<GroupElement> {
        let mut w = self.identity();
        for &s in word {
            w = w.mul_unchecked(self.generator(s)?);
        }
        Ok(w)
    }

    /// Reduced word obtained by repeatedly stripping the smallest left descent.
    pub fn word_from_element(&self, w: &GroupElement) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.clone();
        loop {
            let k = self.shi_vector(&cur);
            let Some(s) = (0..self.num_generators()).find(|&s| self.is_left_descent_k(&k, s)) else {
                break;
            };
            word.push(s);
            cur = self.left_mul(s, &cur);
        }
        word
    }

    /// Image of the barycenter of the fundamental alcove, scaled by `scale()`.
    fn scaled_point(&self, w: &GroupElement) -> Vec<i64> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n).map(|k| w.m[i * n + k] * self.base[k]).sum::<i64>() + self.scale * w.t[i]
            })
            .collect()
    }

    /// Representative interior point of the alcove `w A`, in
    /// fundamental-coweight coordinates `p_i = <x, a_i>`.
    pub fn representative_point(&self, w: &GroupElement) -> Vec<Ratio<i64>> {
        self.scaled_point(w)
            .into_iter()
            .map(|x| Ratio::new(x, self.scale))
            .collect()
    }

    /// Applies `w` to a point given in fundamental-coweight coordinates.
    pub fn apply_to_point(&self, w: &GroupElement, p: &[Ratio<i64>]) -> Vec<Ratio<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n).fold(Ratio::from_integer(w.t[i]), |acc, k| acc + p[k] * w.m[i * n + k])
            })
            .collect()
    }

    pub fn barycenter(&self) -> Vec<Ratio<i64>> {
        self.base.iter().map(|&b| Ratio::new(b, self.scale)).collect()
    }

    /// `k(w, a)` for every positive root `a`, in the fixed root order.
    pub fn shi_vector(&self, w: &GroupElement) -> Vec<i64> {
        let p = self.scaled_point(w);
        self.sys
            .positive_roots()
            .iter()
            .map(|r| {
                let v: i64 = r.0.iter().zip(&p).map(|(c, x)| c * x).sum();
                debug_assert!(v % self.scale != 0, "representative point on a wall");
                v.div_euclid(self.scale)
            })
            .collect()
    }

    /// `k(w, a)` for any root of the finite system.
    pub fn shi_coefficient(&self, w: &GroupElement, root: &FiniteRoot) -> Result<i64> {
        let r = self
            .sys
            .lookup(root)
            .ok_or_else(|| Error::NotARoot(root.to_string()))?;
        let k = self.shi_vector(w)[r.index];
        Ok(if r.negative { -k } else { k })
    }

    pub fn length(&self, w: &GroupElement) -> usize {
        self.shi_vector(w).iter().map(|k| k.unsigned_abs() as usize).sum()
    }

    /// The simple affine root of a letter: `a_i` or `d - a0`.
    pub fn simple_root(&self, letter: usize) -> AffineRoot {
        if letter == 0 {
            AffineRoot::new(self.sys.highest_root().neg(), 1)
        } else {
            AffineRoot::new(FiniteRoot::simple(self.rank(), letter - 1), 0)
        }
    }

    /// `w(a + k d) = u(a) + (k - <l, u(a)>) d`.
    pub fn act_on_root(&self, w: &GroupElement, root: &AffineRoot) -> AffineRoot {
        let ua = w.act_finite(&root.finite.0);
        let shift: i64 = ua.iter().zip(&w.t).map(|(a, t)| a * t).sum();
        AffineRoot::new(FiniteRoot(ua), root.delta - shift)
    }

    /// The reflection `s_{a + k d} = t_{-k a^v} s_a`.
    pub fn reflection(&self, root: &AffineRoot) -> Result<GroupElement> {
        let r = self
            .sys
            .lookup(&root.finite)
            .ok_or_else(|| Error::NotARoot(root.to_string()))?;
        let mut s = self.finite_reflection(r.index);
        let sign = if r.negative { -1 } else { 1 };
        s.t = self
            .sys
            .coroot_pairing(r.index)
            .iter()
            .map(|v| -root.delta * sign * v)
            .collect();
        Ok(s)
    }

    /// `N(w)` read off the Shi vector.
    pub fn inversion_set(&self, w: &GroupElement) -> BTreeSet<AffineRoot> {
        let k = self.shi_vector(w);
        let mut out = BTreeSet::new();
        for (i, &m) in k.iter().enumerate() {
            let a = self.sys.root(i);
            if m >= 1 {
                for j in 1..=m {
                    out.insert(AffineRoot::new(a.neg(), j));
                }
            } else {
                for j in 0..-m {
                    out.insert(AffineRoot::new(a.clone(), j));
                }
            }
        }
        out
    }

    /// `N(w) = {b > 0 : w^{-1}(b) < 0}` computed from the action on affine
    /// roots, scanning `d`-coefficients up to `max |k(w, a)| + 1`.
    pub fn inversion_set_by_action(&self, w: &GroupElement) -> BTreeSet<AffineRoot> {
        let bound = self.shi_vector(w).iter().map(|k| k.abs()).max().unwrap_or(0) + 1;
        let inv = w.inverse();
        let mut out = BTreeSet::new();
        for a in self.sys.positive_roots() {
            for j in 0..=bound {
                for beta in [AffineRoot::new(a.clone(), j), AffineRoot::new(a.neg(), j + 1)] {
                    if !self.act_on_root(&inv, &beta).is_positive() {
                        out.insert(beta);
                    }
                }
            }
        }
        out
    }

    /// `N^1(w)`: inversions whose reflection shortens `w` by exactly one.
    pub fn basis_n1(&self, w: &GroupElement) -> BTreeSet<AffineRoot> {
        let len = self.length(w);
        self.inversion_set(w)
            .into_iter()
            .filter(|beta| {
                let s = self.reflection(beta).expect("inversions are roots");
                self.length(&s.mul_unchecked(w)) + 1 == len
            })
            .collect()
    }

    fn is_left_descent_k(&self, k: &[i64], letter: usize) -> bool {
        if letter == 0 {
            k[self.sys.highest_index()] >= 1
        } else {
            k[letter - 1] <= -1
        }
    }

    pub fn is_left_descent(&self, w: &GroupElement, letter: usize) -> bool {
        self.is_left_descent_k(&self.shi_vector(w), letter)
    }

    pub fn is_right_descent(&self, w: &GroupElement, letter: usize) -> bool {
        !self.act_on_root(w, &self.simple_root(letter)).is_positive()
    }

    pub fn descents(&self, w: &GroupElement) -> Descents {
        let k = self.shi_vector(w);
        let mut d = Descents::default();
        for s in 0..self.num_generators() {
            if self.is_left_descent_k(&k, s) {
                d.left.push(s);
                d.left_roots.insert(self.simple_root(s));
            }
            let image = self.act_on_root(w, &self.simple_root(s));
            if !image.is_positive() {
                d.right.push(s);
                d.right_roots.insert(image.neg());
            }
        }
        d
    }

    /// Elements of length at most `max_len`, grouped by length.
    pub fn ball(&self, max_len: usize, budget: usize) -> Result<Vec<Vec<GroupElement>>> {
        let mut layers = vec![vec![self.identity()]];
        let mut total = 1usize;
        for len in 1..=max_len {
            let mut seen: HashSet<GroupElement> = HashSet::new();
            let mut next = Vec::new();
            for w in &layers[len - 1] {
                for s in 0..self.num_generators() {
                    if self.is_right_descent(w, s) {
                        continue;
                    }
                    let ws = self.right_mul(w, s);
                    if seen.insert(ws.clone()) {
                        next.push(ws);
                    }
                }
            }
            total += next.len();
            if total > budget {
                return Err(Error::BudgetExceeded {
                    budget,
                    what: format!("ball of radius {max_len} in {}", self.cartan_type()),
                });
            }
            next.sort_by_cached_key(|w| self.shi_vector(w));
            layers.push(next);
        }
        Ok(layers)
    }

    /// Breadth-first distances from the identity in the Cayley graph, used as
    /// an independent length oracle.
    pub fn bfs_distances(&self, max_len: usize) -> HashMap<GroupElement, usize> {
        let mut dist = HashMap::new();
        dist.insert(self.identity(), 0);
        let mut frontier = vec![self.identity()];
        for d in 1..=max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for g in &self.gens {
                    let x = w.mul_unchecked(g);
                    if !dist.contains_key(&x) {
                        dist.insert(x.clone(), d);
                        next.push(x);
                    }
                }
            }
            frontier = next;
        }
        dist
    }
}

/// Text form of a word: digits for ranks below 10 (`e` for the empty word),
/// comma-separated otherwise.
pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    if word.iter().all(|&s| s < 10) {
        word.iter().map(|s| char::from(b'0' + *s as u8)).collect()
    } else {
        word.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn parse_word(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() || text == "e" {
        return Ok(Vec::new());
    }
    let bad = || Error::Parse(format!("word {text:?}"));
    if text.contains(',') {
        text.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect()
    } else {
        text.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect()
    }
}
