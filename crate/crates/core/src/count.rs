//! Counting 3-edge-colorings by backtracking.

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{ClosedGraph, NearCubicGraph, V};
use crate::precoloring::{space, Precoloring};
use crate::vector::CountVector;

/// A color in `{1, 2, 3}` for every edge, proper at internal vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring(Vec<u8>);

impl EdgeColoring {
    pub fn new(g: &NearCubicGraph, colors: Vec<u8>) -> Result<Self> {
        if colors.len() != g.edge_count() || colors.iter().any(|c| !(1..=3).contains(c)) {
            return Err(Error::Input(
                "edge coloring has wrong length or colors".into(),
            ));
        }
        let mut seen = vec![0u8; g.internal_vertices() + 1];
        for (e, (a, b)) in g.edges().enumerate() {
            for u in [a, b] {
                if u == V {
                    continue;
                }
                let bit = 1 << colors[e];
                if seen[u] & bit != 0 {
                    return Err(Error::Input(format!(
                        "coloring is not proper at vertex {u}"
                    )));
                }
                seen[u] |= bit;
            }
        }
        Ok(EdgeColoring(colors))
    }

    pub fn colors(&self) -> &[u8] {
        &self.0
    }

    pub fn color(&self, e: usize) -> u8 {
        self.0[e]
    }

    /// The boundary colors read through `ν`.
    pub fn precoloring(&self, g: &NearCubicGraph) -> Precoloring {
        let values = g.boundary().iter().map(|h| self.0[h.edge()]).collect();
        Precoloring::new(values).expect("the parity lemma")
    }
}

/// Edge ends with vertex `0` unconstrained, plus a search order.
struct Engine {
    ends: Vec<(usize, usize)>,
    vertices: usize,
    order: Vec<usize>,
    /// A loop at a constrained vertex: nothing to enumerate.
    hopeless: bool,
}

/// Per-index counters in machine integers, spilling into big integers.
#[derive(Clone)]
struct Counters {
    small: Vec<u64>,
    big: Vec<BigUint>,
}

impl Counters {
    fn new(n: usize) -> Self {
        Counters {
            small: vec![0; n],
            big: vec![BigUint::zero(); n],
        }
    }

    fn bump(&mut self, i: usize) {
        match self.small[i].checked_add(1) {
            Some(v) => self.small[i] = v,
            None => {
                self.big[i] += BigUint::from(self.small[i]) + 1u32;
                self.small[i] = 0;
            }
        }
    }

    fn merge(mut self, other: Counters) -> Counters {
        for i in 0..self.small.len() {
            match self.small[i].checked_add(other.small[i]) {
                Some(v) => self.small[i] = v,
                None => {
                    self.big[i] += BigUint::from(self.small[i]) + other.small[i];
                    self.small[i] = 0;
                }
            }
            self.big[i] += &other.big[i];
        }
        self
    }

    fn finish(self) -> Vec<BigUint> {
        self.small
            .into_iter()
            .zip(self.big)
            .map(|(s, b)| b + s)
            .collect()
    }
}

struct State {
    colors: Vec<u8>,
    masks: Vec<u8>,
}

const SPLIT_DEPTH: usize = 4;

impl Engine {
    /// `starts` lists vertices in the order the search should reach them;
    /// edges are ordered depth-first from there.
    fn new(ends: Vec<(usize, usize)>, vertices: usize, first: &[usize], starts: &[usize]) -> Self {
        let mut inc = vec![Vec::new(); vertices];
        for (e, &(a, b)) in ends.iter().enumerate() {
            inc[a].push(e);
            if b != a {
                inc[b].push(e);
            }
        }
        let mut placed = vec![false; ends.len()];
        let mut order = Vec::with_capacity(ends.len());
        for &e in first {
            if !placed[e] {
                placed[e] = true;
                order.push(e);
            }
        }
        let mut visited = vec![false; vertices];
        visited[V] = true;
        let roots: Vec<usize> = first
            .iter()
            .flat_map(|&e| [ends[e].0, ends[e].1])
            .chain(starts.iter().copied())
            .chain(0..vertices)
            .collect();
        for root in roots {
            if visited[root] {
                continue;
            }
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                if std::mem::replace(&mut visited[u], true) {
                    continue;
                }
                for &e in inc[u].iter().rev() {
                    if !placed[e] {
                        placed[e] = true;
                        order.push(e);
                    }
                    let (a, b) = ends[e];
                    let w = if a == u { b } else { a };
                    if !visited[w] {
                        stack.push(w);
                    }
                }
            }
        }
        let hopeless = ends.iter().any(|&(a, b)| a == b && a != V);
        Engine {
            ends,
            vertices,
            order,
            hopeless,
        }
    }

    fn for_near_cubic(g: &NearCubicGraph) -> Self {
        let first: Vec<usize> = g.boundary().iter().map(|h| h.edge()).collect();
        Engine::new(g.edges().collect(), g.internal_vertices() + 1, &first, &[])
    }

    fn for_closed(h: &ClosedGraph) -> Self {
        let ends = h.edges().map(|(a, b)| (a + 1, b + 1)).collect();
        Engine::new(ends, h.vertex_count() + 1, &[], &[])
    }

    fn try_color(&self, st: &mut State, e: usize, c: u8) -> bool {
        let (a, b) = self.ends[e];
        let bit = 1u8 << c;
        if (a != V && st.masks[a] & bit != 0) || (b != V && st.masks[b] & bit != 0) {
            return false;
        }
        if a != V {
            st.masks[a] |= bit;
        }
        if b != V {
            st.masks[b] |= bit;
        }
        st.colors[e] = c;
        true
    }

    fn uncolor(&self, st: &mut State, e: usize) {
        let (a, b) = self.ends[e];
        let bit = 1u8 << st.colors[e];
        if a != V {
            st.masks[a] &= !bit;
        }
        if b != V {
            st.masks[b] &= !bit;
        }
        st.colors[e] = 0;
    }

    fn descend<A>(
        &self,
        st: &mut State,
        depth: usize,
        stop: usize,
        acc: &mut A,
        leaf: &impl Fn(&mut A, &State),
    ) {
        if depth == stop {
            leaf(acc, st);
            return;
        }
        let e = self.order[depth];
        for c in 1..=3 {
            if self.try_color(st, e, c) {
                self.descend(st, depth + 1, stop, acc, leaf);
                self.uncolor(st, e);
            }
        }
    }

    /// Folds `leaf` over every proper coloring, the top of the search tree
    /// split across threads.
    fn fold<A: Send>(
        &self,
        init: impl Fn() -> A + Sync,
        leaf: impl Fn(&mut A, &[u8]) + Sync,
        merge: impl Fn(A, A) -> A + Sync + Send,
    ) -> A {
        if self.hopeless {
            return init();
        }
        let fresh = || State {
            colors: vec![0; self.ends.len()],
            masks: vec![0; self.vertices],
        };
        let split = SPLIT_DEPTH.min(self.order.len());
        let mut prefixes: Vec<Vec<u8>> = Vec::new();
        self.descend(
            &mut fresh(),
            0,
            split,
            &mut prefixes,
            &|acc: &mut Vec<Vec<u8>>, st: &State| acc.push(st.colors.clone()),
        );
        prefixes
            .into_par_iter()
            .map(|prefix| {
                let mut st = fresh();
                for &e in &self.order[..split] {
                    assert!(self.try_color(&mut st, e, prefix[e]));
                }
                let mut acc = init();
                self.descend(
                    &mut st,
                    split,
                    self.order.len(),
                    &mut acc,
                    &|a: &mut A, s: &State| leaf(a, &s.colors),
                );
                acc
            })
            .reduce(&init, &merge)
    }
}

/// Visits every 3-edge-coloring of `g` (sequentially).
pub fn for_each_coloring(g: &NearCubicGraph, mut f: impl FnMut(&[u8])) {
    let engine = Engine::for_near_cubic(g);
    if engine.hopeless {
        return;
    }
    let mut st = State {
        colors: vec![0; engine.ends.len()],
        masks: vec![0; engine.vertices],
    };
    let f = std::cell::RefCell::new(&mut f);
    engine.descend(
        &mut st,
        0,
        engine.order.len(),
        &mut (),
        &|_: &mut (), s: &State| (f.borrow_mut())(&s.colors),
    );
}

/// Folds over all colorings of `g` in parallel.
pub(crate) fn fold_colorings<A: Send>(
    g: &NearCubicGraph,
    init: impl Fn() -> A + Sync,
    leaf: impl Fn(&mut A, &[u8]) + Sync,
    merge: impl Fn(A, A) -> A + Sync + Send,
) -> A {
    Engine::for_near_cubic(g).fold(init, leaf, merge)
}

/// `n_G(ψ)` for every precoloring, as exact integers in lex order.
pub fn extension_counts(g: &NearCubicGraph) -> Result<Vec<BigUint>> {
    let ps = space(g.arity())?;
    let boundary: Vec<usize> = g.boundary().iter().map(|h| h.edge()).collect();
    let counters = fold_colorings(
        g,
        || Counters::new(ps.len()),
        |acc, colors| {
            let psi: Vec<u8> = boundary.iter().map(|&e| colors[e]).collect();
            acc.bump(ps.index_of(&psi).expect("the parity lemma"));
        },
        Counters::merge,
    );
    Ok(counters.finish())
}

/// `n_G` as a count vector.
pub fn count_vector(g: &NearCubicGraph) -> Result<CountVector> {
    CountVector::from_counts(g.arity(), &extension_counts(g)?)
}

/// Number of proper 3-edge-colorings of a closed cubic graph.
pub fn count_closed(h: &ClosedGraph) -> BigUint {
    let counters =
        Engine::for_closed(h).fold(|| Counters::new(1), |acc, _| acc.bump(0), Counters::merge);
    let base = counters.finish().pop().expect("one counter");
    (0..h.free_loops()).fold(base, |acc, _| acc * 3u32)
}

/// `Σ_ψ a(ψ) b(ψ)` for two count lists of equal arity.
pub fn inner_counts(a: &[BigUint], b: &[BigUint]) -> BigUint {
    a.iter()
        .zip(b)
        .fold(BigUint::zero(), |acc, (x, y)| acc + x * y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::graph::build_wheel;
    use crate::precoloring::psi_5a;

    /// Every assignment of three colors to every edge, checked afterwards.
    fn brute_counts(g: &NearCubicGraph) -> Vec<BigUint> {
        let ps = space(g.arity()).unwrap();
        let m = g.edge_count();
        let mut out = vec![BigUint::zero(); ps.len()];
        for code in 0..3usize.pow(m as u32) {
            let mut rest = code;
            let colors: Vec<u8> = (0..m)
                .map(|_| {
                    let c = (rest % 3) as u8 + 1;
                    rest /= 3;
                    c
                })
                .collect();
            if EdgeColoring::new(g, colors.clone()).is_err() {
                continue;
            }
            let psi: Vec<u8> = g.boundary().iter().map(|h| colors[h.edge()]).collect();
            out[ps.index_of(&psi).unwrap()] += 1u32;
        }
        out
    }

    fn small(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn chord_and_claw() {
        assert_eq!(
            extension_counts(&catalog("R_2_1").unwrap()).unwrap(),
            small(&[1, 1, 1])
        );
        assert_eq!(
            extension_counts(&catalog("R_3_1").unwrap()).unwrap(),
            small(&[1; 6])
        );
    }

    #[test]
    fn agrees_with_exhaustive_enumeration() {
        let mut graphs: Vec<NearCubicGraph> = crate::catalog::names()
            .iter()
            .map(|n| catalog(n).unwrap())
            .collect();
        graphs.push(build_wheel(3).unwrap());
        graphs.push(build_wheel(4).unwrap());
        let r31 = catalog("R_3_1").unwrap();
        graphs.push(r31.glue(&r31, 1).unwrap());
        graphs.push(catalog("R_4_3").unwrap().glue(&r31, 2).unwrap());
        for g in &graphs {
            if g.edge_count() <= 10 {
                assert_eq!(extension_counts(g).unwrap(), brute_counts(g));
            }
        }
    }

    #[test]
    fn wheel_entry_by_cycle_assignments() {
        // spokes are forced by ψ; try all 3^5 colorings of the rim
        let g = build_wheel(5).unwrap();
        let psi = psi_5a(0);
        let mut expected = 0u32;
        for code in 0..243u32 {
            let rim: Vec<u8> = (0..5).map(|k| (code / 3u32.pow(k) % 3) as u8 + 1).collect();
            // rim edge p joins rim vertices p and p+1
            let ok = (0..5).all(|p| {
                let before = rim[(p + 4) % 5];
                let after = rim[p];
                let spoke = psi.values()[p];
                before != after && before != spoke && after != spoke
            });
            if ok {
                expected += 1;
            }
        }
        let counts = extension_counts(&g).unwrap();
        let idx = space(5).unwrap().index_of(psi.values()).unwrap();
        assert_eq!(counts[idx], BigUint::from(expected));
    }

    #[test]
    fn petersen_has_no_coloring() {
        let p = catalog("R_5_12").unwrap();
        let w = build_wheel(5).unwrap();
        let n1 = extension_counts(&p).unwrap();
        let n2 = extension_counts(&w).unwrap();
        assert!(inner_counts(&n1, &n2).is_zero());
        let closed = p.oplus(&w).unwrap();
        assert_eq!(closed.vertex_count(), 10);
        assert_eq!(closed.girth(), Some(5));
        assert!(count_closed(&closed).is_zero());
    }

    #[test]
    fn k4_two_ways() {
        let w = build_wheel(3).unwrap();
        let claw = catalog("R_3_1").unwrap();
        let k4 = w.oplus(&claw).unwrap();
        let direct = count_closed(&k4);
        let via_inner = inner_counts(
            &extension_counts(&w).unwrap(),
            &extension_counts(&claw).unwrap(),
        );
        assert_eq!(direct, via_inner);
        assert_eq!(direct, BigUint::from(6u32));
    }

    #[test]
    fn two_chords_close_into_a_free_loop() {
        let r = catalog("R_2_1").unwrap();
        let h = r.oplus(&r).unwrap();
        assert_eq!(h.free_loops(), 1);
        assert_eq!(count_closed(&h), BigUint::from(3u32));
    }

    #[test]
    fn counts_are_color_invariant() {
        use crate::precoloring::COLOR_PERMUTATIONS;
        for name in crate::catalog::names() {
            let g = catalog(&name).unwrap();
            let ps = space(g.arity()).unwrap();
            let n = extension_counts(&g).unwrap();
            for perm in COLOR_PERMUTATIONS {
                let p = ps.recolor_permutation(&perm);
                assert!((0..n.len()).all(|i| n[p[i]] == n[i]), "{name}");
            }
        }
    }

    #[test]
    fn loop_at_internal_vertex_has_no_coloring() {
        use crate::graph::HalfEdge;
        // vertex 1 carries a loop and one boundary edge: not 3-colorable
        let g = NearCubicGraph::from_parts(1, &[(1, 1), (1, 0)], vec![HalfEdge(3)], None);
        assert!(Engine::for_near_cubic(&g).hopeless);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let g = build_wheel(7).unwrap();
        let ps = space(7).unwrap();
        let mut seq = vec![0u64; ps.len()];
        for_each_coloring(&g, |colors| {
            let psi: Vec<u8> = g.boundary().iter().map(|h| colors[h.edge()]).collect();
            seq[ps.index_of(&psi).unwrap()] += 1;
        });
        assert_eq!(extension_counts(&g).unwrap(), small(&seq));
    }
}
