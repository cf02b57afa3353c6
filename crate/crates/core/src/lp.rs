//! Exact rational simplex over `{x : A x = b, x >= 0}` with Bland's rule.
//!
//! Phase 1 either finds a feasible basis or returns a Farkas certificate.
//! Phase 2 minimizes a list of objectives lexicographically, which keeps
//! the optimum unique when the list is rich enough.

use num_traits::{One, Signed, Zero};

use crate::linalg::{dot_q, Q};

/// Outcome of phase 1.
#[derive(Debug, Clone)]
pub enum Feasibility {
    /// A feasible basis was found.
    Feasible(Simplex),
    /// `u` with `uᵀA >= 0` and `uᵀb < 0`.
    Infeasible(Vec<Q>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Optimum {
    Optimal {
        x: Vec<Q>,
        /// `cᵀx` for each objective.
        values: Vec<Q>,
    },
    Unbounded,
}

/// A feasible basis in tableau form, ready for phase 2.
#[derive(Debug, Clone)]
pub struct Simplex {
    n: usize,
    /// `B⁻¹[A | b]`, rhs in the last column.
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
}

fn pivot(rows: &mut [Vec<Q>], objectives: &mut [Vec<Q>], r: usize, c: usize) {
    let inv = rows[r][c].recip();
    for x in rows[r].iter_mut() {
        if !x.is_zero() {
            *x *= &inv;
        }
    }
    let pivot_row = std::mem::take(&mut rows[r]);
    let nonzero: Vec<usize> = (0..pivot_row.len())
        .filter(|&j| !pivot_row[j].is_zero())
        .collect();
    let eliminate = |row: &mut Vec<Q>| {
        if row.is_empty() || row[c].is_zero() {
            return;
        }
        let f = row[c].clone();
        for &j in &nonzero {
            row[j] -= &f * &pivot_row[j];
        }
    };
    rows.iter_mut().for_each(eliminate);
    objectives.iter_mut().for_each(eliminate);
    rows[r] = pivot_row;
}

fn lex_negative(objectives: &[Vec<Q>], j: usize) -> bool {
    for o in objectives {
        if o[j].is_negative() {
            return true;
        }
        if o[j].is_positive() {
            return false;
        }
    }
    false
}

/// Runs Bland's rule on columns `0..limit`. Returns `false` if unbounded.
fn run(rows: &mut [Vec<Q>], basis: &mut [usize], objectives: &mut [Vec<Q>], limit: usize) -> bool {
    let rhs = rows.first().map_or(0, |r| r.len() - 1);
    loop {
        let Some(c) = (0..limit).find(|&j| lex_negative(objectives, j)) else {
            return true;
        };
        let mut best: Option<(usize, Q)> = None;
        for (i, row) in rows.iter().enumerate() {
            if !row[c].is_positive() {
                continue;
            }
            let ratio = &row[rhs] / &row[c];
            let better = match &best {
                None => true,
                Some((k, b)) => ratio < *b || (ratio == *b && basis[i] < basis[*k]),
            };
            if better {
                best = Some((i, ratio));
            }
        }
        let Some((r, _)) = best else {
            return false;
        };
        pivot(rows, objectives, r, c);
        basis[r] = c;
    }
}

/// Phase 1 for `A x = b, x >= 0`. `a` is given row-wise.
pub fn feasibility(a: &[Vec<Q>], b: &[Q]) -> Feasibility {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let width = n + m + 1;
    let mut flipped = vec![false; m];
    let mut rows: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, rhs))| {
            let mut t = Vec::with_capacity(width);
            t.extend(row.iter().cloned());
            t.extend((0..m).map(|k| if k == i { Q::one() } else { Q::zero() }));
            t.push(rhs.clone());
            if rhs.is_negative() {
                flipped[i] = true;
                for k in (0..n).chain(std::iter::once(width - 1)) {
                    t[k] = -t[k].clone();
                }
            }
            t
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut cost = vec![Q::zero(); width];
    for j in 0..width {
        if (n..n + m).contains(&j) {
            continue;
        }
        cost[j] = -rows.iter().fold(Q::zero(), |acc, r| acc + &r[j]);
    }
    let mut objectives = vec![cost];
    run(&mut rows, &mut basis, &mut objectives, n + m);

    let infeasibility = -objectives[0][width - 1].clone();
    if infeasibility.is_positive() {
        let u: Vec<Q> = (0..m)
            .map(|i| {
                let y = Q::one() - &objectives[0][n + i];
                if flipped[i] {
                    y
                } else {
                    -y
                }
            })
            .collect();
        return Feasibility::Infeasible(u);
    }

    // drive artificials out of the basis, dropping redundant rows
    let mut i = 0;
    while i < rows.len() {
        if basis[i] >= n {
            match (0..n).find(|&j| !rows[i][j].is_zero()) {
                Some(j) => {
                    pivot(&mut rows, &mut [], i, j);
                    basis[i] = j;
                }
                None => {
                    rows.remove(i);
                    basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    for row in rows.iter_mut() {
        let rhs = row.pop().expect("rhs column");
        row.truncate(n);
        row.push(rhs);
    }
    Feasibility::Feasible(Simplex { n, rows, basis })
}

/// Whether `u` certifies infeasibility of `A x = b, x >= 0`.
pub fn is_farkas_certificate(a: &[Vec<Q>], b: &[Q], u: &[Q]) -> bool {
    let n = a.first().map_or(0, Vec::len);
    let ub = dot_q(u, b);
    ub.is_negative()
        && (0..n).all(|j| {
            let s = a
                .iter()
                .zip(u)
                .fold(Q::zero(), |acc, (row, ui)| acc + &row[j] * ui);
            !s.is_negative()
        })
}

impl Simplex {
    pub fn variables(&self) -> usize {
        self.n
    }

    /// The current basic feasible solution.
    pub fn point(&self) -> Vec<Q> {
        let mut x = vec![Q::zero(); self.n];
        for (row, &j) in self.rows.iter().zip(&self.basis) {
            x[j] = row[self.n].clone();
        }
        x
    }

    /// Minimizes `objectives[0]`, then `objectives[1]` among its
    /// minimizers, and so on.
    pub fn minimize_lex(&self, objectives: &[Vec<Q>]) -> Optimum {
        let mut rows = self.rows.clone();
        let mut basis = self.basis.clone();
        let mut obj: Vec<Vec<Q>> = objectives
            .iter()
            .map(|c| {
                let mut o: Vec<Q> = c
                    .iter()
                    .cloned()
                    .chain(std::iter::once(Q::zero()))
                    .collect();
                for (row, &j) in rows.iter().zip(&basis) {
                    if c[j].is_zero() {
                        continue;
                    }
                    for (x, y) in o.iter_mut().zip(row) {
                        if !y.is_zero() {
                            *x -= &c[j] * y;
                        }
                    }
                }
                o
            })
            .collect();
        if !run(&mut rows, &mut basis, &mut obj, self.n) {
            return Optimum::Unbounded;
        }
        let mut x = vec![Q::zero(); self.n];
        for (row, &j) in rows.iter().zip(&basis) {
            x[j] = row[self.n].clone();
        }
        let values = objectives.iter().map(|c| dot_q(c, &x)).collect();
        Optimum::Optimal { x, values }
    }

    pub fn minimize(&self, objective: &[Q]) -> Optimum {
        self.minimize_lex(std::slice::from_ref(&objective.to_vec()))
    }
}
