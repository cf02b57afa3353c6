//! Operators on count vectors and certified cone membership.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::linalg::{self, Q};
use crate::lp::{feasibility, Feasibility};
use crate::precoloring::{psi_5a, psi_5b, space, COLOR_PERMUTATIONS};
use crate::vector::CountVector;

/// `r_t(x)`, defined by `y(r_t(ψ)) = x(ψ)`. `t` is taken mod `d`.
pub fn vec_rotate(x: &CountVector, t: usize) -> CountVector {
    let ps = space(x.arity()).expect("vector arity is valid");
    x.permuted(&ps.rotation_permutation(t))
}

/// `f(x)`, defined by `z(f(ψ)) = x(ψ)`.
pub fn vec_flip(x: &CountVector) -> CountVector {
    let ps = space(x.arity()).expect("vector arity is valid");
    x.permuted(&ps.flip_permutation())
}

/// `γ_k(x1, x2)`: the sum of `x1(ψ1) x2(ψ2)` over `k`-matching pairs, each
/// contributing to the concatenation of the unmatched parts.
///
/// The concatenation is always a precoloring: a color used `m` times in
/// the matched blocks leaves `d1 - m` and `d2 - m` occurrences modulo 2,
/// which add up to `d1 + d2 - 2k` modulo 2.
pub fn vec_gamma(x1: &CountVector, x2: &CountVector, k: usize) -> Result<CountVector> {
    let (d1, d2) = (x1.arity(), x2.arity());
    if k > d1.min(d2) {
        return Err(Error::Glue(format!("k = {k} exceeds min({d1}, {d2})")));
    }
    let d = d1 + d2 - 2 * k;
    if d < 2 {
        return Err(Error::Arity {
            d,
            reason: "gluing must leave at least two boundary positions",
        });
    }
    let (p1, p2, p) = (space(d1)?, space(d2)?, space(d)?);
    // ψ2 grouped by its matched block read backwards
    let mut by_block: HashMap<Vec<u8>, Vec<usize>> = HashMap::new();
    for (j, psi) in p2.iter().enumerate() {
        if x2.get(j).is_zero() {
            continue;
        }
        let block: Vec<u8> = psi.values()[d2 - k..].iter().rev().copied().collect();
        by_block.entry(block).or_default().push(j);
    }
    let mut y = vec![Q::zero(); p.len()];
    let mut glued = Vec::with_capacity(d);
    for (i, psi1) in p1.iter().enumerate() {
        let a = x1.get(i);
        if a.is_zero() {
            continue;
        }
        let Some(partners) = by_block.get(&psi1.values()[d1 - k..]) else {
            continue;
        };
        for &j in partners {
            glued.clear();
            glued.extend_from_slice(&psi1.values()[..d1 - k]);
            glued.extend_from_slice(&p2.get(j).values()[..d2 - k]);
            let target = p.index_of(&glued).ok_or_else(|| {
                Error::Inconsistent(format!("concatenation {glued:?} violates parity"))
            })?;
            y[target] += a * x2.get(j);
        }
    }
    CountVector::new(d, y)
}

/// `3 Σ_i x(ψ^{5,a}_i) - Σ_i x(ψ^{5,b}_i)`.
pub fn conjecture_margin(x: &CountVector) -> Result<Q> {
    if x.arity() != 5 {
        return Err(Error::Arity {
            d: x.arity(),
            reason: "the margin is defined for d = 5",
        });
    }
    let ps = space(5)?;
    let mut m = Q::zero();
    for i in 0..5 {
        m += x.get(ps.index_of(psi_5a(i).values()).expect("valid")) * Q::from_integer(3.into());
        m -= x.get(ps.index_of(psi_5b(i).values()).expect("valid"));
    }
    Ok(m)
}

/// The margin spread over color orbits:
/// `3 Σ_i Σ_π [ψ = ψ^{5,a}_i ∘ π] - Σ_i Σ_π [ψ = ψ^{5,b}_i ∘ π]`.
/// On color-invariant vectors it is six times [`conjecture_margin`].
pub fn conjecture_functional() -> Vec<BigInt> {
    let ps = space(5).expect("d = 5");
    let mut f = vec![BigInt::zero(); ps.len()];
    for i in 0..5 {
        for perm in &COLOR_PERMUTATIONS {
            f[ps.index_of(psi_5a(i).recolor(perm).values())
                .expect("valid")] += 3;
            f[ps.index_of(psi_5b(i).recolor(perm).values())
                .expect("valid")] -= 1;
        }
    }
    f
}

/// Outcome of a membership query, with an exact certificate either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MembershipCertificate {
    /// Nonnegative coefficients, one per ray, reproducing the query.
    Inside(Vec<Q>),
    /// An integer functional, nonnegative on every ray and negative on the
    /// query.
    Outside(Vec<BigInt>),
}

impl MembershipCertificate {
    pub fn is_inside(&self) -> bool {
        matches!(self, MembershipCertificate::Inside(_))
    }

    /// Rechecks the certificate against `x` and `cone` in exact arithmetic.
    pub fn verify(&self, x: &CountVector, cone: &Cone) -> bool {
        if x.arity() != cone.arity() {
            return false;
        }
        match self {
            MembershipCertificate::Inside(c) => {
                if c.len() != cone.len() || c.iter().any(Signed::is_negative) {
                    return false;
                }
                let mut sum = vec![Q::zero(); x.len()];
                for (ci, r) in c.iter().zip(cone.rays()) {
                    if ci.is_zero() {
                        continue;
                    }
                    for (s, ri) in sum.iter_mut().zip(r) {
                        *s += ci * Q::from_integer(ri.clone());
                    }
                }
                sum == x.entries()
            }
            MembershipCertificate::Outside(f) => {
                f.len() == x.len()
                    && cone.rays().iter().all(|r| !linalg::dot(f, r).is_negative())
                    && linalg::dot_q(&linalg::to_q(f), x.entries()).is_negative()
            }
        }
    }
}

/// Cones with more rays than this are handled by column generation.
const DIRECT_LIMIT: usize = 400;

/// Decides `x ∈ cone` by an exact LP over nonnegative ray combinations.
pub fn membership(x: &CountVector, cone: &Cone) -> Result<MembershipCertificate> {
    let initial = if cone.len() <= DIRECT_LIMIT {
        cone.len()
    } else {
        DIRECT_LIMIT / 2
    };
    membership_generated(x, cone, initial)
}

/// Rows of `[R | x]` that are not zero and not repeated, as indices.
fn distinct_rows(x: &CountVector, cone: &Cone) -> Vec<usize> {
    let mut seen: BTreeMap<(Vec<&BigInt>, &Q), usize> = BTreeMap::new();
    let mut rows = Vec::new();
    for psi in 0..x.len() {
        let key: Vec<&BigInt> = cone.rays().iter().map(|r| &r[psi]).collect();
        if x.get(psi).is_zero() && key.iter().all(|v| v.is_zero()) {
            continue;
        }
        if seen.insert((key, x.get(psi)), psi).is_none() {
            rows.push(psi);
        }
    }
    rows
}

/// Membership by column generation: solve over an active set of rays; if
/// infeasible, the Farkas vector either separates all rays or names the
/// rays to add.
pub(crate) fn membership_generated(
    x: &CountVector,
    cone: &Cone,
    initial: usize,
) -> Result<MembershipCertificate> {
    if x.arity() != cone.arity() {
        return Err(Error::ArityMismatch {
            left: x.arity(),
            right: cone.arity(),
        });
    }
    let rows = distinct_rows(x, cone);
    let b: Vec<Q> = rows.iter().map(|&psi| x.get(psi).clone()).collect();
    let mut active: Vec<usize> = (0..initial.min(cone.len())).collect();
    loop {
        let a: Vec<Vec<Q>> = rows
            .iter()
            .map(|&psi| {
                active
                    .iter()
                    .map(|&k| Q::from_integer(cone.rays()[k][psi].clone()))
                    .collect()
            })
            .collect();
        match feasibility(&a, &b) {
            Feasibility::Feasible(s) => {
                let point = s.point();
                let mut coefficients = vec![Q::zero(); cone.len()];
                for (&k, c) in active.iter().zip(point) {
                    coefficients[k] = c;
                }
                return Ok(MembershipCertificate::Inside(coefficients));
            }
            Feasibility::Infeasible(u) => {
                let mut full = vec![Q::zero(); x.len()];
                for (&psi, ui) in rows.iter().zip(u) {
                    full[psi] = ui;
                }
                let functional = linalg::primitive(&full);
                let mut violated: Vec<(BigInt, usize)> = cone
                    .rays()
                    .iter()
                    .enumerate()
                    .filter_map(|(k, r)| {
                        let v = linalg::dot(&functional, r);
                        v.is_negative().then_some((v, k))
                    })
                    .collect();
                if violated.is_empty() {
                    return Ok(MembershipCertificate::Outside(functional));
                }
                violated.sort();
                let batch = rows.len().max(1);
                active.extend(violated.into_iter().take(batch).map(|(_, k)| k));
                active.sort_unstable();
            }
        }
    }
}
