//! Seeded random plane near-cubic graphs and the conjecture check on them.
//!
//! Graphs are grown from plane catalog pieces with `γ_k`, so every result
//! carries a composed rotation system and is validated as plane.

use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{conjecture_margin, membership, MembershipCertificate};
use crate::catalog::catalog;
use crate::cone::Cone;
use crate::count::count_vector;
use crate::error::{Error, Result};
use crate::graph::{build_wheel, NearCubicGraph};
use crate::linalg::Q;
use crate::vector::CountVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Boundary arity of the generated graphs.
    pub d: usize,
    pub max_vertices: usize,
    pub seed: u64,
    pub instances: usize,
    /// Relative weight of the move `γ_1(R_3_1, γ_2(R_3_1, G))`.
    pub grow_weight: u32,
    /// Relative weight of gluing a random small piece.
    pub merge_weight: u32,
    /// Moves tried per instance before giving up on growing further.
    pub attempts: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            d: 5,
            max_vertices: 24,
            seed: 1,
            instances: 100,
            grow_weight: 2,
            merge_weight: 1,
            attempts: 64,
        }
    }
}

impl SearchConfig {
    fn check(&self) -> Result<()> {
        if !(2..=8).contains(&self.d) {
            return Err(Error::Arity {
                d: self.d,
                reason: "the generator supports 2 <= d <= 8",
            });
        }
        if self.grow_weight == 0 && self.merge_weight == 0 {
            return Err(Error::Input("all move weights are zero".into()));
        }
        Ok(())
    }

    /// The generator for instance `index`; independent of every other
    /// instance.
    pub fn rng(&self, index: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        rng
    }
}

/// Plane catalog pieces of arity at most 6.
fn pieces() -> &'static [NearCubicGraph] {
    static PIECES: std::sync::OnceLock<Vec<NearCubicGraph>> = std::sync::OnceLock::new();
    PIECES.get_or_init(|| {
        let mut out: Vec<NearCubicGraph> = crate::catalog::names()
            .iter()
            .filter(|n| n.as_str() != "R_5_12")
            .map(|n| catalog(n).expect("catalog entry"))
            .collect();
        out.extend((3..=6).map(|n| build_wheel(n).expect("wheel")));
        out
    })
}

fn claw() -> NearCubicGraph {
    catalog("R_3_1").expect("catalog entry")
}

fn shuffle(g: NearCubicGraph, rng: &mut ChaCha8Rng) -> NearCubicGraph {
    let g = g.rotate(rng.gen_range(0..g.arity()));
    if rng.gen_bool(0.5) {
        g.flip()
    } else {
        g
    }
}

fn grow(g: &NearCubicGraph, rng: &mut ChaCha8Rng) -> Result<NearCubicGraph> {
    let c = claw();
    let h = c.glue(&shuffle(g.clone(), rng), 2)?;
    c.glue(&shuffle(h, rng), 1)
}

fn merge(g: &NearCubicGraph, rng: &mut ChaCha8Rng, max_arity: usize) -> Result<NearCubicGraph> {
    let p = shuffle(pieces().choose(rng).expect("pieces").clone(), rng);
    let g = shuffle(g.clone(), rng);
    let top = g.arity().min(p.arity());
    let c = rng.gen_range(0..=top);
    let d = (g.arity() + p.arity()).saturating_sub(2 * c);
    if d > max_arity {
        return Err(Error::Glue(format!("arity {d} exceeds {max_arity}")));
    }
    if rng.gen_bool(0.5) {
        g.glue(&p, c)
    } else {
        p.glue(&g, c)
    }
}

/// Moves the arity to `d` one step at a time with the claw: `γ_2` lowers
/// it by one, `γ_1` raises it by one; each step adds one vertex.
fn fix_arity(mut g: NearCubicGraph, d: usize, rng: &mut ChaCha8Rng) -> Result<NearCubicGraph> {
    let c = claw();
    while g.arity() != d {
        let k = if g.arity() > d { 2 } else { 1 };
        g = c.glue(&shuffle(g, rng), k)?;
    }
    Ok(g)
}

/// One random plane near-cubic graph with arity `config.d` and at most
/// `config.max_vertices` internal vertices.
pub fn generate(config: &SearchConfig, index: usize) -> Result<NearCubicGraph> {
    config.check()?;
    let mut rng = config.rng(index);
    let d = config.d;
    let max_arity = d + 2;
    let starts: Vec<&NearCubicGraph> = pieces().iter().filter(|p| p.arity() == d).collect();
    let mut g = match starts.choose(&mut rng) {
        Some(p) => shuffle((*p).clone(), &mut rng),
        None => pieces().choose(&mut rng).expect("pieces").clone(),
    };
    let cost = |g: &NearCubicGraph| g.internal_vertices() + g.arity().abs_diff(d);
    if cost(&g) > config.max_vertices {
        return Err(Error::Input(format!(
            "no start piece fits in {} vertices",
            config.max_vertices
        )));
    }
    let target = rng.gen_range(cost(&g)..=config.max_vertices);
    let total = config.grow_weight + config.merge_weight;
    for _ in 0..config.attempts {
        if cost(&g) >= target {
            break;
        }
        let next = if rng.gen_range(0..total) < config.grow_weight {
            grow(&g, &mut rng)
        } else {
            merge(&g, &mut rng, max_arity)
        };
        // gluing can split off a closed component; such moves are dead ends
        match next {
            Ok(h) if cost(&h) <= target && h.structural_violations().is_empty() => g = h,
            _ => {}
        }
    }
    let g = fix_arity(g, d, &mut rng)?;
    g.validate().into_result()?;
    Ok(g)
}

/// Result of checking one graph against `B'_5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceOutcome {
    pub index: usize,
    pub vertices: usize,
    pub counts: CountVector,
    pub margin: Q,
    pub certificate: MembershipCertificate,
}

impl InstanceOutcome {
    pub fn is_violation(&self) -> bool {
        self.margin.is_negative() || !self.certificate.is_inside()
    }
}

/// Validates `g`, counts it and checks the margin and membership in
/// `bprime` (the cone `B'_5`). Graphs that fail validation are rejected
/// before counting.
pub fn check_instance(g: &NearCubicGraph, bprime: &Cone, index: usize) -> Result<InstanceOutcome> {
    g.validate().into_result()?;
    let counts = count_vector(g)?;
    let margin = conjecture_margin(&counts)?;
    let certificate = membership(&counts, bprime)?;
    if !certificate.verify(&counts, bprime) {
        return Err(Error::Inconsistent(
            "membership certificate does not verify".into(),
        ));
    }
    Ok(InstanceOutcome {
        index,
        vertices: g.internal_vertices(),
        counts,
        margin,
        certificate,
    })
}

/// Generates and checks `config.instances` graphs in parallel. Outcomes
/// are in index order; violating graphs are returned alongside.
pub fn run_search(
    config: &SearchConfig,
    bprime: &Cone,
) -> Result<Vec<(InstanceOutcome, Option<NearCubicGraph>)>> {
    config.check()?;
    if config.d != 5 {
        return Err(Error::Arity {
            d: config.d,
            reason: "the conjecture concerns d = 5",
        });
    }
    (0..config.instances)
        .into_par_iter()
        .map(|i| {
            let g = generate(config, i)?;
            let outcome = check_instance(&g, bprime, i)?;
            let keep = outcome.is_violation().then_some(g);
            Ok((outcome, keep))
        })
        .collect()
}

impl std::fmt::Display for InstanceOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "INSTANCE {} vertices={} margin={} {}",
            self.index,
            self.vertices,
            self.margin,
            if self.certificate.is_inside() {
                "INSIDE"
            } else {
                "OUTSIDE"
            }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::cached_bprime5;

    fn config(d: usize, max_vertices: usize) -> SearchConfig {
        SearchConfig {
            d,
            max_vertices,
            instances: 8,
            ..SearchConfig::default()
        }
    }

    #[test]
    fn generated_graphs_are_plane_and_bounded() {
        for d in 2..=6 {
            let c = config(d, 16);
            for i in 0..8 {
                let g = generate(&c, i).unwrap();
                assert_eq!(g.arity(), d);
                assert!(g.internal_vertices() <= 16);
                assert_eq!(g.genus(), Ok(0));
            }
        }
    }

    #[test]
    fn same_seed_same_graphs() {
        let c = config(5, 20);
        assert_eq!(generate(&c, 3).unwrap(), generate(&c, 3).unwrap());
        let other = SearchConfig {
            seed: 2,
            ..c.clone()
        };
        let a: Vec<_> = (0..8).map(|i| generate(&c, i).unwrap()).collect();
        let b: Vec<_> = (0..8).map(|i| generate(&other, i).unwrap()).collect();
        assert_ne!(a, b);
    }

    #[test]
    fn sizes_vary() {
        let c = config(5, 20);
        let sizes: std::collections::BTreeSet<usize> = (0..16)
            .map(|i| generate(&c, i).unwrap().internal_vertices())
            .collect();
        assert!(sizes.len() > 3, "{sizes:?}");
    }

    #[test]
    fn small_search_passes() {
        let c = config(5, 14);
        let out = run_search(&c, cached_bprime5().unwrap()).unwrap();
        assert_eq!(out.len(), 8);
        for (o, g) in &out {
            assert!(!o.is_violation(), "{o}");
            assert!(g.is_none());
        }
        let empty = SearchConfig { instances: 0, ..c };
        assert!(run_search(&empty, cached_bprime5().unwrap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn nonplane_input_is_rejected() {
        let g = catalog("R_5_12").unwrap();
        assert!(matches!(
            check_instance(&g, cached_bprime5().unwrap(), 0),
            Err(Error::InvalidGraph(_))
        ));
        // without a rotation system it is counted and found outside
        let o = check_instance(&g.without_rotation(), cached_bprime5().unwrap(), 0).unwrap();
        assert!(o.is_violation());
    }

    #[test]
    fn bad_configs() {
        assert!(generate(&config(1, 10), 0).is_err());
        let zero = SearchConfig {
            grow_weight: 0,
            merge_weight: 0,
            ..config(5, 10)
        };
        assert!(generate(&zero, 0).is_err());
        assert!(run_search(&config(4, 10), cached_bprime5().unwrap()).is_err());
    }
}
