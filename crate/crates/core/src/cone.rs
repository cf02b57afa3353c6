//! The coloring count cones `B_d`, their rays, facets and the subcone
//! `B'_5`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::dd::{self, DdOptions, Subspace};
use crate::error::{Error, Result};
use crate::linalg::{self, Q};
use crate::lp::{self, Feasibility};
use crate::precoloring::{space, COLOR_PERMUTATIONS};
use crate::signature::{signature_space, COLOR_PAIRS};

/// A polyhedral cone in `R^{P_d}` given by its rays: primitive integer
/// vectors, pairwise non-parallel, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    d: usize,
    rays: Vec<Vec<BigInt>>,
}

/// A relative facet: `functional · x >= 0` on the cone, with equality on
/// the rays listed in `tight`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub functional: Vec<BigInt>,
    pub tight: Vec<usize>,
}

fn primitive_key(v: &[BigInt]) -> Vec<BigInt> {
    linalg::primitive_int(v.to_vec())
}

impl Cone {
    /// Normalizes, drops zero vectors and parallel duplicates, and sorts.
    /// Rays must be nonnegative vectors of length `|P_d|`.
    pub fn new(d: usize, rays: Vec<Vec<BigInt>>) -> Result<Self> {
        let len = space(d)?.len();
        let mut set = HashSet::new();
        let mut out = Vec::new();
        for (k, r) in rays.into_iter().enumerate() {
            if r.len() != len {
                return Err(Error::Input(format!(
                    "ray {k} has {} entries, expected {len}",
                    r.len()
                )));
            }
            if r.iter().any(Signed::is_negative) {
                return Err(Error::Input(format!("ray {k} has a negative entry")));
            }
            if r.iter().all(Zero::is_zero) {
                continue;
            }
            let p = primitive_key(&r);
            if set.insert(p.clone()) {
                out.push(p);
            }
        }
        out.sort();
        Ok(Cone { d, rays: out })
    }

    pub fn arity(&self) -> usize {
        self.d
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    /// Index of the ray parallel to `x`, if any.
    pub fn find_ray(&self, x: &[BigInt]) -> Option<usize> {
        if x.iter().all(Zero::is_zero) || x.iter().any(Signed::is_negative) {
            return None;
        }
        let p = primitive_key(x);
        self.rays.binary_search(&p).ok()
    }

    /// The same cone without ray `index`.
    pub fn without(&self, index: usize) -> Cone {
        let mut rays = self.rays.clone();
        rays.remove(index);
        Cone { d: self.d, rays }
    }

    /// Whether every ray is invariant under permutations of the colors.
    pub fn is_color_invariant(&self) -> bool {
        self.rays.iter().all(|r| is_color_invariant(self.d, r))
    }

    pub fn span_dim(&self) -> usize {
        linalg::rank(self.rays.iter().map(|r| linalg::to_q(r)).collect())
    }

    /// Relative facets, sorted by functional.
    pub fn facets(&self) -> Result<Vec<Facet>> {
        facets_of(&self.rays)
    }

    /// Whether `f` is a positive multiple of `g` on the span of the cone.
    /// The rays span it, so comparing values on rays suffices.
    pub fn agrees_on_span(&self, f: &[BigInt], g: &[BigInt]) -> bool {
        let fv: Vec<BigInt> = self.rays.iter().map(|r| linalg::dot(f, r)).collect();
        let gv: Vec<BigInt> = self.rays.iter().map(|r| linalg::dot(g, r)).collect();
        if fv.iter().all(Zero::is_zero) || gv.iter().all(Zero::is_zero) {
            return false;
        }
        linalg::primitive_int(fv) == linalg::primitive_int(gv)
    }

    /// Facets of `self` that match no facet of `outer` on the span of
    /// `self`.
    pub fn new_facets(&self, outer: &Cone) -> Result<Vec<Facet>> {
        let old = outer.facets()?;
        Ok(self
            .facets()?
            .into_iter()
            .filter(|f| {
                !old.iter()
                    .any(|o| self.agrees_on_span(&f.functional, &o.functional))
            })
            .collect())
    }
}

/// Whether `x(ψ ∘ π) = x(ψ)` for every permutation `π` of the colors.
pub fn is_color_invariant(d: usize, x: &[BigInt]) -> bool {
    let ps = space(d).expect("valid arity");
    COLOR_PERMUTATIONS.iter().all(|perm| {
        let p = ps.recolor_permutation(perm);
        (0..x.len()).all(|i| x[p[i]] == x[i])
    })
}

/// Extreme rays of the pointed cone `{z ∈ R^n : ineq · z >= 0, eq · z = 0}`,
/// as primitive integer vectors.
///
/// On a basis `N` of the equation kernel the inequalities become `G w >= 0`
/// with `G = ineq · N` injective, so the cone is isomorphic to the column
/// space of `G` intersected with the orthant.
pub fn hrep_rays(
    n: usize,
    ineq: &[Vec<BigInt>],
    eq: &[Vec<BigInt>],
    opts: &DdOptions,
) -> Result<Vec<Vec<BigInt>>> {
    let (basis, _) = linalg::null_space(eq.iter().map(|e| linalg::to_q(e)).collect(), n);
    let r = basis.len();
    if r == 0 {
        return Ok(Vec::new());
    }
    let g: Vec<Vec<Q>> = ineq
        .iter()
        .map(|row| {
            let row = linalg::to_q(row);
            basis.iter().map(|b| linalg::dot_q(&row, b)).collect()
        })
        .collect();
    let transposed: Vec<Vec<Q>> = (0..r)
        .map(|k| g.iter().map(|row| row[k].clone()).collect())
        .collect();
    let (_, independent) = linalg::rref(transposed.clone());
    if independent.len() < r {
        return Err(Error::Input("the cone is not pointed".into()));
    }
    let square: Vec<Vec<Q>> = independent.iter().map(|&i| g[i].clone()).collect();
    let sub = Subspace::row_span(transposed)?;
    let values = dd::nonnegative_rays(&sub, opts)?;
    Ok(values
        .into_iter()
        .map(|s| {
            let rhs: Vec<Q> = independent.iter().map(|&i| linalg::q(s[i])).collect();
            let w = linalg::solve(&square, &rhs).expect("independent rows");
            let mut z = vec![Q::zero(); n];
            for (wk, b) in w.iter().zip(&basis) {
                for (zi, bi) in z.iter_mut().zip(b) {
                    *zi += wk * bi;
                }
            }
            linalg::primitive(&z)
        })
        .collect())
}

/// Relative facets of the cone generated by `rays`.
///
/// The span is parametrized by a set `J` of coordinates on which the
/// projection is injective; a functional on the span is then a vector
/// supported on `J`, i.e. the representative vanishing on the unit
/// vectors outside `J`. Facets are the extreme rays of
/// `{w ∈ R^J : R_J w >= 0}`.
pub fn facets_of(rays: &[Vec<BigInt>]) -> Result<Vec<Facet>> {
    if rays.is_empty() {
        return Ok(Vec::new());
    }
    let n = rays[0].len();
    let (_, cols) = linalg::rref(rays.iter().map(|r| linalg::to_q(r)).collect());
    if cols.len() <= 1 {
        return Ok(Vec::new());
    }
    let restricted: Vec<Vec<BigInt>> = rays
        .iter()
        .map(|row| cols.iter().map(|&j| row[j].clone()).collect())
        .collect();
    let ws = hrep_rays(cols.len(), &restricted, &[], &DdOptions::default())?;
    let mut out: Vec<Facet> = ws
        .into_iter()
        .map(|w| {
            let tight = restricted
                .iter()
                .enumerate()
                .filter(|(_, r)| linalg::dot(&w, r).is_zero())
                .map(|(i, _)| i)
                .collect();
            let mut functional = vec![BigInt::zero(); n];
            for (&j, x) in cols.iter().zip(w) {
                functional[j] = x;
            }
            Facet { functional, tight }
        })
        .collect();
    out.sort_by(|a, b| a.functional.cmp(&b.functional));
    Ok(out)
}

/// The witness space: signatures compatible with at least one
/// precoloring, and the maps `A_ij` restricted to them.
pub(crate) struct YSpace {
    pub(crate) d: usize,
    /// Indices into the signature space.
    pub(crate) used: Vec<usize>,
    /// `columns[p][k]`: precolorings compatible with `used[k]` in pair `p`.
    columns: [Vec<Vec<usize>>; 3],
    precolorings: usize,
}

impl YSpace {
    pub(crate) fn new(d: usize) -> Result<Self> {
        let ps = space(d)?;
        let ss = signature_space(d)?;
        let mut columns: [Vec<Vec<usize>>; 3] = Default::default();
        for (p, col) in columns.iter_mut().enumerate() {
            *col = vec![Vec::new(); ss.len()];
            for psi in 0..ps.len() {
                for &s in ss.compatible_with(p, psi) {
                    col[s].push(psi);
                }
            }
        }
        let used: Vec<usize> = (0..ss.len())
            .filter(|&s| !columns[0][s].is_empty())
            .collect();
        let columns = columns.map(|col| used.iter().map(|&s| col[s].clone()).collect());
        Ok(YSpace {
            d,
            used,
            columns,
            precolorings: ps.len(),
        })
    }

    /// Rows of `A_12 - A_13` and `A_12 - A_23` over the used signatures.
    #[allow(clippy::needless_range_loop)]
    fn equations(&self) -> Vec<Vec<Q>> {
        let mut rows = vec![vec![Q::zero(); self.used.len()]; 2 * self.precolorings];
        for k in 0..self.used.len() {
            for &psi in &self.columns[0][k] {
                rows[2 * psi][k] += Q::one();
                rows[2 * psi + 1][k] += Q::one();
            }
            for &psi in &self.columns[1][k] {
                rows[2 * psi][k] -= Q::one();
            }
            for &psi in &self.columns[2][k] {
                rows[2 * psi + 1][k] -= Q::one();
            }
        }
        rows
    }

    /// `A_pair y`.
    fn image<T>(&self, pair: usize, y: &[T]) -> Vec<T>
    where
        T: Clone + Zero + for<'a> std::ops::AddAssign<&'a T>,
    {
        let mut x = vec![T::zero(); self.precolorings];
        for (k, yk) in y.iter().enumerate() {
            if yk.is_zero() {
                continue;
            }
            for &psi in &self.columns[pair][k] {
                x[psi] += yk;
            }
        }
        x
    }

    /// Spreads a witness over the used signatures to the full `S_d`.
    fn full_witness(&self, y: &[Q]) -> Vec<Q> {
        let ss = signature_space(self.d).expect("valid arity");
        let mut out = vec![Q::zero(); ss.len()];
        for (&s, v) in self.used.iter().zip(y) {
            out[s] = v.clone();
        }
        out
    }
}

/// `B_d` together with one witness `y >= 0` per ray, indexed by the full
/// signature space, with `A_ij y = ray` for all three color pairs.
#[derive(Debug, Clone)]
pub struct ComputedCone {
    pub cone: Cone,
    pub witnesses: Vec<Vec<Q>>,
}

impl ComputedCone {
    /// Rechecks every witness by multiplication.
    pub fn check_witnesses(&self) -> Result<()> {
        let d = self.cone.arity();
        let ss = signature_space(d)?;
        for (r, (ray, y)) in self.cone.rays().iter().zip(&self.witnesses).enumerate() {
            if y.iter().any(Signed::is_negative) || y.len() != ss.len() {
                return Err(Error::Inconsistent(format!("witness {r} is malformed")));
            }
            let expected = linalg::to_q(ray);
            for pair in 0..COLOR_PAIRS.len() {
                if ss.apply(pair, y) != expected {
                    return Err(Error::Inconsistent(format!(
                        "witness {r} fails for color pair {pair}"
                    )));
                }
            }
        }
        Ok(())
    }

    fn from_candidates(d: usize, found: BTreeMap<Vec<BigInt>, Vec<Q>>) -> Result<Self> {
        let (rays, witnesses): (Vec<_>, Vec<_>) = found.into_iter().unzip();
        let cone = Cone::new(d, rays.clone())?;
        debug_assert_eq!(cone.rays(), &rays[..]);
        let out = ComputedCone { cone, witnesses };
        out.check_witnesses()?;
        Ok(out)
    }
}

/// Primitive form of `x` and the scalar `g` with `x = g · primitive`.
fn split_scale(x: Vec<BigInt>) -> (Vec<BigInt>, BigInt) {
    let g = x.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let p = x.into_iter().map(|v| v / &g).collect();
    (p, g)
}

fn check_range(d: usize) -> Result<()> {
    if (2..=6).contains(&d) {
        Ok(())
    } else {
        Err(Error::Arity {
            d,
            reason: "cone rays are supported for 2 <= d <= 6",
        })
    }
}

/// `B_d` for `2 <= d <= 6`. Arities up to 5 go through the extreme rays of
/// the witness cone; for `d = 6` that cone is far too large to enumerate and
/// [`cone_rays_by_blocks`] is used instead.
pub fn cone_rays(d: usize) -> Result<ComputedCone> {
    check_range(d)?;
    if d <= 5 {
        cone_rays_by_witnesses(d, &DdOptions::default())
    } else {
        cone_rays_by_blocks(d)
    }
}

static CACHE: [OnceLock<Cone>; 7] = [const { OnceLock::new() }; 7];
static PRIME: OnceLock<Cone> = OnceLock::new();

/// `B_d`, computed once per process.
pub fn cached_cone(d: usize) -> Result<&'static Cone> {
    check_range(d)?;
    if let Some(c) = CACHE[d].get() {
        return Ok(c);
    }
    let c = cone_rays(d)?.cone;
    Ok(CACHE[d].get_or_init(|| c))
}

/// `B'_5`, computed once per process.
pub fn cached_bprime5() -> Result<&'static Cone> {
    if let Some(c) = PRIME.get() {
        return Ok(c);
    }
    let c = bprime5(cached_cone(5)?)?;
    Ok(PRIME.get_or_init(|| c))
}

/// Extreme rays of `Y = {y >= 0 : A_12 y = A_13 y = A_23 y}` by double
/// description, mapped through `A_12`; parallel images are merged and
/// images inside the cone of the others are dropped.
pub fn cone_rays_by_witnesses(d: usize, opts: &DdOptions) -> Result<ComputedCone> {
    check_range(d)?;
    let ys = YSpace::new(d)?;
    let sub = Subspace::kernel(ys.equations(), ys.used.len())?;
    let rays = dd::nonnegative_rays(&sub, opts)?;
    let mut found: BTreeMap<Vec<BigInt>, Vec<Q>> = BTreeMap::new();
    for y in rays {
        let y: Vec<BigInt> = y.into_iter().map(BigInt::from).collect();
        let x = ys.image(0, &y);
        if x.iter().all(Zero::is_zero) {
            continue;
        }
        let (p, g) = split_scale(x);
        found.entry(p).or_insert_with(|| {
            let g = Q::from_integer(g);
            let y: Vec<Q> = y.into_iter().map(|v| Q::from_integer(v) / &g).collect();
            ys.full_witness(&y)
        });
    }
    let candidates: Vec<Vec<BigInt>> = found.keys().cloned().collect();
    let redundant: Vec<bool> = candidates
        .par_iter()
        .enumerate()
        .map(|(i, x)| {
            let support = |v: &[BigInt]| -> Vec<bool> { v.iter().map(|e| !e.is_zero()).collect() };
            let sx = support(x);
            let others: Vec<&Vec<BigInt>> = candidates
                .iter()
                .enumerate()
                .filter(|&(j, v)| j != i && support(v).iter().zip(&sx).all(|(a, b)| !a || *b))
                .map(|(_, v)| v)
                .collect();
            if others.is_empty() {
                return false;
            }
            let a: Vec<Vec<Q>> = (0..x.len())
                .map(|row| {
                    others
                        .iter()
                        .map(|v| Q::from_integer(v[row].clone()))
                        .collect()
                })
                .collect();
            matches!(
                lp::feasibility(&a, &linalg::to_q(x)),
                Feasibility::Feasible(_)
            )
        })
        .collect();
    for (x, r) in candidates.iter().zip(redundant) {
        if r {
            found.remove(x);
        }
    }
    ComputedCone::from_candidates(d, found)
}

/// `B_d` assembled from the column cones of `A_12`, block by block.
///
/// If `y >= 0` and `x = A_12 y` is invariant under permutations of the
/// colors, then `A_13 y` and `A_23 y` are `x` composed with a color swap,
/// hence equal to `x`. Since every point of `B_d` is color invariant, `B_d`
/// is the set of color-invariant points of the cone spanned by the columns
/// of `A_12`. That matrix is block diagonal: a precoloring `ψ` and a
/// signature meet only if the signature matches exactly the positions
/// `ψ^{-1}({1, 2})`. Each block cone is small; pulling its facets and span
/// equations back to the color-orbit coordinates gives an inequality
/// description of `B_d`, whose rays come from one more double description.
pub fn cone_rays_by_blocks(d: usize) -> Result<ComputedCone> {
    check_range(d)?;
    let ys = YSpace::new(d)?;
    let ps = space(d)?;
    let rep_of = ps.color_orbit_representatives();
    let mut reps = rep_of.clone();
    reps.sort();
    reps.dedup();
    let orbit: Vec<usize> = rep_of
        .iter()
        .map(|r| reps.binary_search(r).expect("representative"))
        .collect();
    let k = reps.len();

    let block_of = |psi: usize| -> u32 {
        ps.get(psi)
            .values()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 3)
            .map(|(p, _)| 1u32 << p)
            .sum()
    };
    let mut blocks: BTreeMap<u32, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for psi in 0..ps.len() {
        blocks.entry(block_of(psi)).or_default().0.push(psi);
    }
    for (col, rows) in ys.columns[0].iter().enumerate() {
        let b = block_of(rows[0]);
        debug_assert!(rows.iter().all(|&psi| block_of(psi) == b));
        blocks
            .get_mut(&b)
            .expect("block of a compatible precoloring")
            .1
            .push(col);
    }

    let pull_back = |rows: &[usize], f: &[BigInt]| -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); k];
        for (&psi, x) in rows.iter().zip(f) {
            v[orbit[psi]] += x;
        }
        linalg::primitive_int(v)
    };
    let mut ineq: BTreeSet<Vec<BigInt>> = (0..k)
        .map(|i| (0..k).map(|j| BigInt::from((i == j) as u8)).collect())
        .collect();
    let mut eq: Vec<Vec<BigInt>> = Vec::new();
    // (rows, columns, generator matrix) per block
    type Block = (Vec<usize>, Vec<usize>, Vec<Vec<BigInt>>);
    let mut matrices: Vec<Block> = Vec::new();
    for (rows, cols) in blocks.into_values() {
        let gens: Vec<Vec<BigInt>> = cols
            .iter()
            .map(|&c| {
                rows.iter()
                    .map(|psi| BigInt::from(ys.columns[0][c].contains(psi) as u8))
                    .collect()
            })
            .collect();
        for f in facets_of(&gens)? {
            let v = pull_back(&rows, &f.functional);
            if v.iter().any(|x| !x.is_zero()) {
                ineq.insert(v);
            }
        }
        let (normals, _) =
            linalg::null_space(gens.iter().map(|g| linalg::to_q(g)).collect(), rows.len());
        for e in normals {
            let v = pull_back(&rows, &linalg::primitive(&e));
            if v.iter().any(|x| !x.is_zero()) {
                eq.push(v);
            }
        }
        matrices.push((rows, cols, gens));
    }
    let ineq: Vec<Vec<BigInt>> = ineq.into_iter().collect();
    let opts = DdOptions {
        order: dd::InsertionOrder::Adaptive,
        ..DdOptions::default()
    };
    let rays = hrep_rays(k, &ineq, &eq, &opts)?;

    let mut found = BTreeMap::new();
    for z in rays {
        let x: Vec<BigInt> = orbit.iter().map(|&o| z[o].clone()).collect();
        let mut y = vec![Q::zero(); ys.used.len()];
        for (rows, cols, gens) in &matrices {
            let target: Vec<Q> = rows
                .iter()
                .map(|&psi| Q::from_integer(x[psi].clone()))
                .collect();
            if target.iter().all(Zero::is_zero) {
                continue;
            }
            let a: Vec<Vec<Q>> = (0..rows.len())
                .map(|i| gens.iter().map(|g| Q::from_integer(g[i].clone())).collect())
                .collect();
            let Feasibility::Feasible(s) = lp::feasibility(&a, &target) else {
                return Err(Error::Inconsistent(
                    "block cone misses a computed ray".into(),
                ));
            };
            for (&c, v) in cols.iter().zip(s.point()) {
                y[c] = v;
            }
        }
        found.insert(linalg::primitive_int(x), ys.full_witness(&y));
    }
    ComputedCone::from_candidates(d, found)
}

/// `B'_5`: the rays of `B_5` except the one parallel to `n` of the
/// pentagram fixture.
pub fn bprime5(b5: &Cone) -> Result<Cone> {
    let pentagram = crate::count::extension_counts(&crate::catalog::catalog("R_5_12")?)?;
    let ints: Vec<BigInt> = pentagram.into_iter().map(BigInt::from).collect();
    match b5.find_ray(&ints) {
        Some(i) => Ok(b5.without(i)),
        None => Err(Error::Inconsistent(
            "no ray of B_5 matches the pentagram count vector".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn ray_counts_up_to_five() {
        for (d, n) in [(2, 1), (3, 1), (4, 4), (5, 12)] {
            let c = cone_rays(d).unwrap();
            assert_eq!(c.cone.len(), n, "d={d}");
            assert!(c.cone.is_color_invariant());
        }
    }

    #[test]
    fn block_route_agrees_with_witness_route() {
        for d in 2..=5 {
            let a = cone_rays_by_witnesses(d, &DdOptions::default()).unwrap();
            let h = cone_rays_by_blocks(d).unwrap();
            assert_eq!(a.cone, h.cone, "d={d}");
            h.check_witnesses().unwrap();
        }
    }

    #[test]
    fn insertion_order_does_not_matter() {
        use crate::dd::InsertionOrder;
        for d in 2..=4 {
            let a = cone_rays_by_witnesses(d, &DdOptions::default()).unwrap();
            for order in [InsertionOrder::Index, InsertionOrder::ReverseIndex] {
                let opts = DdOptions {
                    order,
                    ..DdOptions::default()
                };
                assert_eq!(cone_rays_by_witnesses(d, &opts).unwrap().cone, a.cone);
            }
        }
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(cone_rays(7), Err(Error::Arity { .. })));
        assert!(matches!(cone_rays(1), Err(Error::Arity { .. })));
    }

    #[test]
    fn cone_normalization() {
        let c = Cone::new(
            2,
            vec![b(&[0, 2, 2]), b(&[0, 1, 1]), b(&[0, 0, 0]), b(&[3, 0, 0])],
        )
        .unwrap();
        assert_eq!(c.rays(), &[b(&[0, 1, 1]), b(&[1, 0, 0])]);
        assert_eq!(c.find_ray(&b(&[0, 5, 5])), Some(0));
        assert!(Cone::new(2, vec![b(&[0, -1, 1])]).is_err());
        assert!(Cone::new(2, vec![b(&[0, 1])]).is_err());
    }

    #[test]
    fn facets_of_a_square_cone() {
        // cone over a square in R^3: four facets, each tight on two rays
        let rays = vec![b(&[1, 0, 1]), b(&[0, 1, 1]), b(&[1, 1, 1]), b(&[0, 0, 1])];
        let f = facets_of(&rays).unwrap();
        assert_eq!(f.len(), 4);
        for facet in &f {
            assert_eq!(facet.tight.len(), 2);
            for r in &rays {
                assert!(!linalg::dot(&facet.functional, r).is_negative());
            }
        }
    }

    #[test]
    fn single_ray_has_no_facets() {
        assert!(facets_of(&[b(&[0, 1, 1])]).unwrap().is_empty());
        let b2 = cone_rays(2).unwrap();
        assert!(b2.cone.facets().unwrap().is_empty());
    }

    #[test]
    fn facets_of_b5_are_dual_to_rays() {
        let c = cone_rays(5).unwrap().cone;
        let dim = c.span_dim();
        let facets = c.facets().unwrap();
        for f in &facets {
            let tight: Vec<Vec<Q>> = f
                .tight
                .iter()
                .map(|&i| linalg::to_q(&c.rays()[i]))
                .collect();
            assert_eq!(linalg::rank(tight), dim - 1);
        }
        for (i, _) in c.rays().iter().enumerate() {
            let tight: Vec<Vec<Q>> = facets
                .iter()
                .filter(|f| f.tight.contains(&i))
                .map(|f| linalg::to_q(&f.functional))
                .collect();
            assert!(linalg::rank(tight) >= dim - 1);
        }
    }

    #[test]
    fn bprime5_drops_one_ray() {
        let b5 = cone_rays(5).unwrap().cone;
        let p = bprime5(&b5).unwrap();
        assert_eq!(p.len(), 11);
        assert!(p.rays().iter().all(|r| b5.find_ray(r).is_some()));
    }

    #[test]
    fn one_new_facet_on_bprime5() {
        let b5 = cone_rays(5).unwrap().cone;
        let p = bprime5(&b5).unwrap();
        let new = p.new_facets(&b5).unwrap();
        assert_eq!(new.len(), 1);
        let f = crate::algebra::conjecture_functional();
        assert!(p.agrees_on_span(&new[0].functional, &f));
        assert!(b5.rays().iter().any(|r| linalg::dot(&f, r).is_negative()));
        // B_5 has no facet absent from itself
        assert!(b5.new_facets(&b5).unwrap().is_empty());
    }

    #[test]
    fn agreement_is_up_to_positive_scale() {
        let c = Cone::new(2, vec![b(&[1, 0, 0]), b(&[0, 1, 0])]).unwrap();
        assert!(c.agrees_on_span(&b(&[1, 2, 0]), &b(&[2, 4, 7])));
        assert!(!c.agrees_on_span(&b(&[1, 2, 0]), &b(&[-1, -2, 0])));
        assert!(!c.agrees_on_span(&b(&[0, 0, 1]), &b(&[0, 0, 1])));
    }
}
