//! Kempe chain signatures of edge colorings and their tallies.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::count::{fold_colorings, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{HalfEdge, NearCubicGraph, V};
use crate::precoloring::space;
use crate::signature::{signature_space, Signature};

struct Walker<'a> {
    g: &'a NearCubicGraph,
    incidence: Vec<Vec<HalfEdge>>,
    positions: Vec<Option<usize>>,
}

impl<'a> Walker<'a> {
    fn new(g: &'a NearCubicGraph) -> Self {
        Walker {
            g,
            incidence: g.incidence(),
            positions: g.positions(),
        }
    }

    fn signature(&self, colors: &[u8], i: u8, j: u8) -> Result<Signature> {
        let d = self.g.arity();
        let in_pair = |h: HalfEdge| {
            let c = colors[h.edge()];
            c == i || c == j
        };
        let mut done = vec![false; d];
        let mut chords: Vec<(usize, usize, i8)> = Vec::new();
        for p in 0..d {
            if done[p] || !in_pair(self.g.nu(p)) {
                continue;
            }
            let mut h = self.g.nu(p);
            let mut length = 0usize;
            let q = loop {
                length += 1;
                let t = h.twin();
                let u = self.g.vertex_of(t);
                if u == V {
                    break self.positions[t.0].expect("half-edge at v has a position");
                }
                h = *self.incidence[u]
                    .iter()
                    .find(|&&x| x != t && in_pair(x))
                    .ok_or_else(|| Error::Input("edge coloring is not proper".into()))?;
            };
            done[p] = true;
            done[q] = true;
            let sign = if length.is_multiple_of(2) { 1 } else { -1 };
            chords.push((p.min(q), p.max(q), sign));
        }
        for &(a, b, _) in &chords {
            for &(c, e, _) in &chords {
                if a < c && c < b && b < e {
                    return Err(Error::CrossingChains {
                        pair: (i, j),
                        first: (a, b),
                        second: (c, e),
                    });
                }
            }
        }
        Signature::new(d, chords)
    }
}

fn check_pair(i: u8, j: u8) -> Result<()> {
    if i == j || !(1..=3).contains(&i) || !(1..=3).contains(&j) {
        return Err(Error::Input(format!(
            "({i}, {j}) is not a pair of distinct colors"
        )));
    }
    Ok(())
}

/// The `ij`-Kempe chain signature of `phi`: every cycle of the `ij`-colored
/// subgraph through `v` contributes the positions of its two boundary
/// half-edges, with sign `+1` iff the cycle has even length.
pub fn kempe_signature(g: &NearCubicGraph, phi: &EdgeColoring, i: u8, j: u8) -> Result<Signature> {
    check_pair(i, j)?;
    Walker::new(g).signature(phi.colors(), i, j)
}

/// Colorings bucketed by boundary precoloring and `ij`-signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KempeTally {
    d: usize,
    pair: (u8, u8),
    /// `(signature index, precoloring index) -> number of colorings`.
    buckets: BTreeMap<(usize, usize), u64>,
}

impl KempeTally {
    pub fn arity(&self) -> usize {
        self.d
    }

    pub fn pair(&self) -> (u8, u8) {
        self.pair
    }

    pub fn is_empty(&self) -> bool {
        self.buckets.is_empty()
    }

    /// Indices (into the signature space) of the signatures that occur.
    pub fn signatures(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.buckets.keys().map(|&(s, _)| s).collect();
        out.dedup();
        out
    }

    /// Number of colorings with signature `s` and boundary `psi`.
    pub fn count(&self, s: usize, psi: usize) -> u64 {
        self.buckets.get(&(s, psi)).copied().unwrap_or(0)
    }

    /// Number of colorings with signature `s`, over all precolorings.
    pub fn colorings(&self, s: usize) -> u64 {
        self.buckets
            .range((s, 0)..=(s, usize::MAX))
            .map(|(_, &n)| n)
            .sum()
    }

    /// `n_{G,S}`: the number of extensions of any single precoloring
    /// compatible with `S` (in this tally's colors) whose signature is `S`.
    /// Fails if two compatible precolorings disagree.
    pub fn witness(&self, s: usize) -> Result<u64> {
        let ss = signature_space(self.d)?;
        let ps = space(self.d)?;
        let (i, j) = self.pair;
        let mut value = None;
        for psi in ss.get(s).compatible_precolorings(i, j) {
            let n = self.count(s, ps.index_of(psi.values()).expect("valid"));
            match value {
                None => value = Some(n),
                Some(v) if v != n => {
                    return Err(Error::Inconsistent(format!(
                        "signature {} has {v} and {n} extensions for different precolorings",
                        ss.get(s)
                    )))
                }
                _ => {}
            }
        }
        Ok(value.unwrap_or(0))
    }

    /// The witness vector `y` indexed by the whole signature space.
    pub fn witness_vector(&self) -> Result<Vec<BigUint>> {
        let ss = signature_space(self.d)?;
        let mut y = vec![BigUint::default(); ss.len()];
        for s in self.signatures() {
            y[s] = BigUint::from(self.witness(s)?);
        }
        Ok(y)
    }

    /// The tally as a map from signature to `n_{G,S}`, for comparing
    /// tallies of different color pairs.
    pub fn witness_map(&self) -> Result<BTreeMap<usize, u64>> {
        self.signatures()
            .into_iter()
            .map(|s| Ok((s, self.witness(s)?)))
            .collect()
    }
}

/// Enumerates every 3-edge-coloring of `g` and buckets it by boundary
/// precoloring and `ij`-signature.
pub fn kempe_tally(g: &NearCubicGraph, i: u8, j: u8) -> Result<KempeTally> {
    check_pair(i, j)?;
    let d = g.arity();
    let ss = signature_space(d)?;
    let ps = space(d)?;
    let walker = Walker::new(g);
    let boundary: Vec<usize> = g.boundary().iter().map(|h| h.edge()).collect();
    type Acc = (BTreeMap<(usize, usize), u64>, Option<Error>);
    let (buckets, err) = fold_colorings(
        g,
        || -> Acc { (BTreeMap::new(), None) },
        |acc: &mut Acc, colors| {
            if acc.1.is_some() {
                return;
            }
            match walker.signature(colors, i, j) {
                Ok(sig) => {
                    let s = ss.index_of(&sig).expect("every signature is enumerated");
                    let psi: Vec<u8> = boundary.iter().map(|&e| colors[e]).collect();
                    let p = ps.index_of(&psi).expect("the parity lemma");
                    *acc.0.entry((s, p)).or_insert(0) += 1;
                }
                Err(e) => acc.1 = Some(e),
            }
        },
        |mut a: Acc, b: Acc| {
            for (k, v) in b.0 {
                *a.0.entry(k).or_insert(0) += v;
            }
            (a.0, a.1.or(b.1))
        },
    );
    if let Some(e) = err {
        return Err(e);
    }
    Ok(KempeTally {
        d,
        pair: (i, j),
        buckets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::count::extension_counts;
    use crate::graph::build_wheel;
    use crate::signature::COLOR_PAIRS;

    fn claw_coloring() -> (NearCubicGraph, EdgeColoring) {
        let g = catalog("R_3_1").unwrap();
        let colors: Vec<u8> = (0..3)
            .map(|e| {
                let p = (0..3).find(|&p| g.nu(p).edge() == e).unwrap();
                p as u8 + 1
            })
            .collect();
        let phi = EdgeColoring::new(&g, colors).unwrap();
        (g, phi)
    }

    #[test]
    fn claw_signatures() {
        let (g, phi) = claw_coloring();
        assert_eq!(phi.precoloring(&g).values(), &[1, 2, 3]);
        assert_eq!(
            kempe_signature(&g, &phi, 1, 2).unwrap().to_string(),
            "{({0,1},+)}"
        );
        assert_eq!(
            kempe_signature(&g, &phi, 1, 3).unwrap().to_string(),
            "{({0,2},+)}"
        );
    }

    #[test]
    fn chord_at_v_is_odd() {
        let g = catalog("R_2_1").unwrap();
        let phi = EdgeColoring::new(&g, vec![1]).unwrap();
        assert_eq!(
            kempe_signature(&g, &phi, 1, 2).unwrap().to_string(),
            "{({0,1},-)}"
        );
        assert_eq!(kempe_signature(&g, &phi, 2, 3).unwrap().to_string(), "{}");
    }

    #[test]
    fn claw_tally() {
        let g = catalog("R_3_1").unwrap();
        let t = kempe_tally(&g, 1, 2).unwrap();
        let sigs = t.signatures();
        assert_eq!(sigs.len(), 3);
        for s in sigs {
            assert_eq!(t.colorings(s), 2);
            assert_eq!(t.witness(s).unwrap(), 1);
        }
    }

    #[test]
    fn wheel_tallies_agree_across_pairs() {
        let g = build_wheel(5).unwrap();
        let maps: Vec<_> = COLOR_PAIRS
            .iter()
            .map(|&(i, j)| kempe_tally(&g, i, j).unwrap().witness_map().unwrap())
            .collect();
        assert_eq!(maps[0], maps[1]);
        assert_eq!(maps[0], maps[2]);
    }

    #[test]
    fn tally_sums_to_counts() {
        for name in crate::catalog::names()
            .into_iter()
            .filter(|n| n != "R_5_12")
        {
            let g = catalog(&name).unwrap();
            let n = extension_counts(&g).unwrap();
            let ss = signature_space(g.arity()).unwrap();
            for (p, &(i, j)) in COLOR_PAIRS.iter().enumerate() {
                let y = kempe_tally(&g, i, j).unwrap().witness_vector().unwrap();
                for pair in 0..3 {
                    assert_eq!(ss.apply(pair, &y), n, "{name} tally {p} pair {pair}");
                }
            }
        }
    }

    #[test]
    fn crossing_chords_are_reported() {
        // chords {0,2} and {1,3} at v cannot be drawn without crossing
        let g = NearCubicGraph::from_parts(
            0,
            &[(0, 0), (0, 0)],
            vec![HalfEdge(0), HalfEdge(2), HalfEdge(1), HalfEdge(3)],
            None,
        );
        let phi = EdgeColoring::new(&g, vec![1, 2]).unwrap();
        assert!(matches!(
            kempe_signature(&g, &phi, 1, 2),
            Err(Error::CrossingChains {
                pair: (1, 2),
                first: (0, 2),
                second: (1, 3)
            })
        ));
        assert!(matches!(
            kempe_tally(&g, 1, 2),
            Err(Error::CrossingChains { .. })
        ));
    }

    #[test]
    fn pentagram_tally_is_still_consistent() {
        let g = catalog("R_5_12").unwrap();
        let n = extension_counts(&g).unwrap();
        let ss = signature_space(5).unwrap();
        let y = kempe_tally(&g, 1, 2).unwrap().witness_vector().unwrap();
        assert_eq!(ss.apply(0, &y), n);
    }

    #[test]
    fn bad_pairs() {
        let (g, phi) = claw_coloring();
        assert!(kempe_signature(&g, &phi, 1, 1).is_err());
        assert!(kempe_signature(&g, &phi, 0, 2).is_err());
    }
}
