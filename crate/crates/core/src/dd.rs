//! Double description for cones of the form `L ∩ R^n_{≥0}`.
//!
//! `L` is given by a basis whose vectors form an identity block on a set of
//! pivot coordinates (as produced by a reduced echelon form). The pivot
//! inequalities alone cut out the simplicial cone spanned by the basis, so
//! those vectors are the initial rays; every remaining coordinate `c` is
//! then inserted as the constraint `s_c >= 0`.
//!
//! Rays are stored directly as points of `L`, i.e. as their vector of
//! constraint values, so a new ray is a plain integer combination of two
//! old ones and its zero set is read off its coordinates.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{self, Q};

/// A subspace `L ⊆ R^n` with a pivot-identity basis.
#[derive(Debug, Clone)]
pub struct Subspace {
    n: usize,
    basis: Vec<Vec<i64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// `basis[k]` must be zero on every pivot except `pivots[k]`, where it
    /// is positive.
    pub fn new(n: usize, basis: Vec<Vec<i64>>, pivots: Vec<usize>) -> Result<Self> {
        if basis.len() != pivots.len() || basis.iter().any(|b| b.len() != n) {
            return Err(Error::Input("subspace basis has inconsistent shape".into()));
        }
        for (k, b) in basis.iter().enumerate() {
            for (l, &p) in pivots.iter().enumerate() {
                if (k == l) != (b[p] != 0) || b[pivots[k]] < 0 {
                    return Err(Error::Input("subspace basis is not pivot-diagonal".into()));
                }
            }
        }
        Ok(Subspace { n, basis, pivots })
    }

    /// Builds the pivot-identity basis of the row span of `rows`.
    pub fn row_span(rows: Vec<Vec<Q>>) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        let (reduced, pivots) = linalg::rref(rows);
        Self::from_rational(n, reduced, pivots)
    }

    /// Builds the subspace `{x : rows · x = 0}`.
    pub fn kernel(rows: Vec<Vec<Q>>, n: usize) -> Result<Self> {
        let (basis, free) = linalg::null_space(rows, n);
        Self::from_rational(n, basis, free)
    }

    fn from_rational(n: usize, basis: Vec<Vec<Q>>, pivots: Vec<usize>) -> Result<Self> {
        let basis = basis
            .iter()
            .map(|b| {
                linalg::primitive(b)
                    .iter()
                    .map(|x| linalg::to_i64(x).ok_or(Error::Overflow("subspace basis")))
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Subspace::new(n, basis, pivots)
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// The coordinate functional `s ↦ s_c` written in basis coordinates.
    fn coordinate_row(&self, c: usize) -> Vec<Q> {
        self.basis.iter().map(|b| linalg::q(b[c])).collect()
    }
}

/// How a candidate pair of rays is tested for adjacency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Adjacency {
    /// No third ray vanishes on every constraint the pair shares.
    #[default]
    Combinatorial,
    /// The shared tight constraints have rank `dim - 2`.
    Algebraic,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum InsertionOrder {
    /// Coordinates whose basis row has the most nonzeros first; ties by
    /// index.
    #[default]
    Density,
    /// Ascending coordinate index.
    Index,
    /// Descending coordinate index.
    ReverseIndex,
    /// An explicit order of the non-pivot coordinates.
    Custom(Vec<usize>),
    /// At every step, the coordinate with the fewest (positive, negative)
    /// ray pairs; ties by index.
    Adaptive,
}

#[derive(Debug, Clone, Default)]
pub struct DdOptions {
    pub adjacency: Adjacency,
    pub order: InsertionOrder,
}

#[derive(Debug, Clone, Default)]
pub struct DdStats {
    /// Ray count after each insertion.
    pub ray_counts: Vec<usize>,
}

impl DdStats {
    pub fn max_rays(&self) -> usize {
        self.ray_counts.iter().copied().max().unwrap_or(0)
    }
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Box<[u64]>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)].into_boxed_slice())
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a & b)
                .collect(),
        )
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_subset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            (0..64)
                .filter(move |b| word >> b & 1 == 1)
                .map(move |b| w * 64 + b)
        })
    }
}

struct Ray {
    values: Vec<i64>,
    /// Processed coordinates at which the ray vanishes.
    zeros: Bits,
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `q_c · p - p_c · q` with `p_c > 0 > q_c`, reduced to primitive form.
fn combine(p: &[i64], q: &[i64], c: usize) -> Result<Vec<i64>> {
    let (fp, fq) = (-(q[c] as i128), p[c] as i128);
    let raw: Vec<i128> = p
        .iter()
        .zip(q)
        .map(|(&x, &y)| {
            (x as i128)
                .checked_mul(fp)
                .zip((y as i128).checked_mul(fq))
                .and_then(|(a, b)| a.checked_add(b))
                .ok_or(Error::Overflow("double description"))
        })
        .collect::<Result<_>>()?;
    let g = raw.iter().fold(0, |acc, &x| gcd(acc, x)).max(1);
    raw.into_iter()
        .map(|x| i64::try_from(x / g).map_err(|_| Error::Overflow("double description")))
        .collect()
}

fn insertion_order(sub: &Subspace, order: &InsertionOrder) -> Result<Vec<usize>> {
    let mut is_pivot = vec![false; sub.n];
    for &p in &sub.pivots {
        is_pivot[p] = true;
    }
    let rest: Vec<usize> = (0..sub.n).filter(|&c| !is_pivot[c]).collect();
    Ok(match order {
        InsertionOrder::Index | InsertionOrder::Adaptive => rest,
        InsertionOrder::ReverseIndex => rest.into_iter().rev().collect(),
        InsertionOrder::Density => {
            let mut rest = rest;
            let density = |c: usize| sub.basis.iter().filter(|b| b[c] != 0).count();
            rest.sort_by_key(|&c| (std::cmp::Reverse(density(c)), c));
            rest
        }
        InsertionOrder::Custom(v) => {
            let mut a = v.clone();
            let mut b = rest.clone();
            a.sort();
            b.sort();
            if a != b {
                return Err(Error::Input(
                    "custom insertion order must list each non-pivot coordinate once".into(),
                ));
            }
            v.clone()
        }
    })
}

/// Extreme rays of `L ∩ R^n_{≥0}`, each a primitive integer vector. The
/// cone must be pointed, which holds whenever `L` meets the orthant only
/// in nonnegative vectors (always, here) and `dim L >= 1`.
pub fn nonnegative_rays(sub: &Subspace, opts: &DdOptions) -> Result<Vec<Vec<i64>>> {
    nonnegative_rays_with_stats(sub, opts).map(|(r, _)| r)
}

pub fn nonnegative_rays_with_stats(
    sub: &Subspace,
    opts: &DdOptions,
) -> Result<(Vec<Vec<i64>>, DdStats)> {
    let n = sub.n;
    let m = sub.dim();
    let mut stats = DdStats::default();
    if m == 0 {
        return Ok((Vec::new(), stats));
    }
    let order = insertion_order(sub, &opts.order)?;

    let mut rays: Vec<Ray> = sub
        .basis
        .iter()
        .map(|b| {
            let mut zeros = Bits::new(n);
            for &p in &sub.pivots {
                if b[p] == 0 {
                    zeros.set(p);
                }
            }
            Ray {
                values: b.clone(),
                zeros,
            }
        })
        .collect();

    let mut remaining = order;
    while !remaining.is_empty() {
        let pick = if opts.order == InsertionOrder::Adaptive {
            let pairs = |c: usize| {
                let pos = rays.iter().filter(|r| r.values[c] > 0).count();
                let neg = rays.iter().filter(|r| r.values[c] < 0).count();
                pos * neg
            };
            (0..remaining.len())
                .min_by_key(|&k| (pairs(remaining[k]), remaining[k]))
                .expect("nonempty")
        } else {
            0
        };
        let c = remaining.remove(pick);
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut zero = Vec::new();
        for r in rays {
            match r.values[c].signum() {
                1 => pos.push(r),
                -1 => neg.push(r),
                _ => zero.push(r),
            }
        }
        if !neg.is_empty() && !pos.is_empty() {
            let all: Vec<&Ray> = pos.iter().chain(&neg).chain(&zero).collect();
            let fresh: Vec<Vec<Ray>> = pos
                .par_iter()
                .map(|p| -> Result<Vec<Ray>> {
                    let mut out = Vec::new();
                    for q in &neg {
                        let common = p.zeros.and(&q.zeros);
                        if m >= 2 && common.count() < m - 2 {
                            continue;
                        }
                        if !adjacent(sub, opts.adjacency, &all, p, q, &common) {
                            continue;
                        }
                        let values = combine(&p.values, &q.values, c)?;
                        let mut zeros = common;
                        zeros.set(c);
                        out.push(Ray { values, zeros });
                    }
                    Ok(out)
                })
                .collect::<Result<_>>()?;
            drop(all);
            rays = pos;
            rays.extend(zero.into_iter().map(|mut r| {
                r.zeros.set(c);
                r
            }));
            rays.extend(fresh.into_iter().flatten());
        } else if neg.is_empty() {
            rays = pos;
            rays.extend(zero.into_iter().map(|mut r| {
                r.zeros.set(c);
                r
            }));
        } else {
            // every ray violates or is tight: only the tight ones survive
            rays = zero
                .into_iter()
                .map(|mut r| {
                    r.zeros.set(c);
                    r
                })
                .collect();
        }
        stats.ray_counts.push(rays.len());
    }
    Ok((rays.into_iter().map(|r| r.values).collect(), stats))
}

fn adjacent(
    sub: &Subspace,
    mode: Adjacency,
    all: &[&Ray],
    p: &Ray,
    q: &Ray,
    common: &Bits,
) -> bool {
    match mode {
        Adjacency::Combinatorial => !all
            .iter()
            .any(|r| !std::ptr::eq(*r, p) && !std::ptr::eq(*r, q) && common.is_subset_of(&r.zeros)),
        Adjacency::Algebraic => {
            let rows: Vec<Vec<Q>> = common.ones().map(|c| sub.coordinate_row(c)).collect();
            linalg::rank(rows) == sub.dim().saturating_sub(2)
        }
    }
}

/// Recovers basis coordinates `α` with `s = Σ α_k basis_k`.
pub fn coordinates(sub: &Subspace, s: &[i64]) -> Vec<Q> {
    sub.pivots
        .iter()
        .zip(&sub.basis)
        .map(|(&p, b)| Q::new(BigInt::from(s[p]), BigInt::from(b[p])))
        .collect()
}
