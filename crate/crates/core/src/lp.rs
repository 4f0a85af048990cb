//! Exact linear programming over the rationals.
//!
//! Dense two-phase simplex with Bland's rule, solving
//! `max c.y  subject to  A y = b, y >= 0`. Problems here are tiny (a few
//! dozen columns) so a dense tableau over `BigRational` is plenty.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal {
        value: BigRational,
        solution: Vec<BigRational>,
    },
}

pub fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &BigRational {
        &self.rows[r][self.width]
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        for x in self.rows[r].iter_mut() {
            *x = &*x / &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis[r] = col;
    }

    /// Runs the simplex loop for `max cost.y` over the allowed columns.
    /// Returns `false` if the objective is unbounded.
    fn optimize(&mut self, cost: &[BigRational], allowed: &[bool]) -> bool {
        loop {
            let entering = (0..self.width).find(|&j| {
                if !allowed[j] || self.basis.contains(&j) {
                    return false;
                }
                let mut reduced = cost[j].clone();
                for (r, &bj) in self.basis.iter().enumerate() {
                    if !self.rows[r][j].is_zero() {
                        reduced -= &cost[bj] * &self.rows[r][j];
                    }
                }
                reduced.is_positive()
            });
            let Some(col) = entering else {
                return true;
            };
            let mut best: Option<(usize, BigRational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / a;
                let better = match &best {
                    None => true,
                    Some((br, bv)) => ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br]),
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, col),
            }
        }
    }

    fn value(&self, cost: &[BigRational]) -> BigRational {
        self.basis
            .iter()
            .enumerate()
            .fold(BigRational::zero(), |acc, (r, &b)| acc + &cost[b] * self.rhs(r))
    }
}

/// Solves `max c.y` subject to `A y = b`, `y >= 0`.
pub fn maximize(a: &[Vec<BigRational>], b: &[BigRational], c: &[BigRational]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    let width = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        assert_eq!(row.len(), n, "constraint row width");
        let flip = b[i].is_negative();
        let mut r: Vec<BigRational> = row.iter().map(|x| if flip { -x } else { x.clone() }).collect();
        r.extend((0..m).map(|k| if k == i { BigRational::one() } else { BigRational::zero() }));
        r.push(if flip { -&b[i] } else { b[i].clone() });
        rows.push(r);
    }
    let mut t = Tableau {
        rows,
        basis: (n..n + m).collect(),
        width,
    };

    let phase1: Vec<BigRational> = (0..width)
        .map(|j| if j >= n { -BigRational::one() } else { BigRational::zero() })
        .collect();
    let all = vec![true; width];
    t.optimize(&phase1, &all);
    if t.value(&phase1).is_negative() {
        return LpOutcome::Infeasible;
    }

    // Drive remaining artificials out of the basis; drop redundant rows.
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= n {
            match (0..n).find(|&j| !t.rows[r][j].is_zero()) {
                Some(j) => t.pivot(r, j),
                None => {
                    t.rows.remove(r);
                    t.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }

    let mut cost = c.to_vec();
    cost.extend((0..m).map(|_| BigRational::zero()));
    let allowed: Vec<bool> = (0..width).map(|j| j < n).collect();
    if !t.optimize(&cost, &allowed) {
        return LpOutcome::Unbounded;
    }
    let mut solution = vec![BigRational::zero(); n];
    for (r, &bj) in t.basis.iter().enumerate() {
        if bj < n {
            solution[bj] = t.rhs(r).clone();
        }
    }
    LpOutcome::Optimal {
        value: t.value(&cost),
        solution,
    }
}

/// A nonnegative solution of `A y = b`, if one exists.
pub fn feasible_point(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.first().map_or(0, |r| r.len());
    match maximize(a, b, &vec![BigRational::zero(); n]) {
        LpOutcome::Optimal { solution, .. } => Some(solution),
        _ => None,
    }
}

/// Whether `target` is a nonnegative rational combination of `generators`
/// (all vectors of the same dimension).
pub fn in_cone(generators: &[Vec<i64>], target: &[i64]) -> bool {
    if target.iter().all(|&x| x == 0) {
        return true;
    }
    if generators.is_empty() {
        return false;
    }
    let dim = target.len();
    let a: Vec<Vec<BigRational>> = (0..dim)
        .map(|d| generators.iter().map(|g| rat(g[d])).collect())
        .collect();
    let b: Vec<BigRational> = target.iter().map(|&x| rat(x)).collect();
    feasible_point(&a, &b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(v: &[&[i64]]) -> Vec<Vec<BigRational>> {
        v.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    fn vec_r(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn small_optimum() {
        // max x + y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
        let a = rows(&[&[1, 2, 1, 0], &[3, 1, 0, 1]]);
        let out = maximize(&a, &vec_r(&[4, 6]), &vec_r(&[1, 1, 0, 0]));
        match out {
            LpOutcome::Optimal { value, solution } => {
                assert_eq!(value, BigRational::new(14.into(), 5.into()));
                assert_eq!(solution[0], BigRational::new(8.into(), 5.into()));
                assert_eq!(solution[1], BigRational::new(6.into(), 5.into()));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let a = rows(&[&[1, 1]]);
        assert_eq!(maximize(&a, &vec_r(&[-1]), &vec_r(&[0, 0])), LpOutcome::Infeasible);
        let a = rows(&[&[1, -1]]);
        assert_eq!(maximize(&a, &vec_r(&[1]), &vec_r(&[1, 0])), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows_are_tolerated() {
        let a = rows(&[&[1, 1], &[2, 2]]);
        let out = maximize(&a, &vec_r(&[3, 6]), &vec_r(&[1, 0]));
        assert!(matches!(out, LpOutcome::Optimal { value, .. } if value == rat(3)));
    }

    #[test]
    fn cone_membership_basics() {
        // coordinates (a1, a2, delta)
        let g = vec![vec![-1, -1, 1], vec![0, 1, 0]];
        assert!(in_cone(&g, &[-1, 0, 1]));
        let g = vec![vec![0, 1, 0], vec![0, -1, 1]];
        assert!(!in_cone(&g, &[1, 0, 0]));
        assert!(in_cone(&[], &[0, 0, 0]));
        assert!(!in_cone(&[], &[1, 0, 0]));
    }
}
