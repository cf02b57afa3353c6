//! Near-cubic multigraphs with a distinguished boundary vertex.
//!
//! Vertex `0` is the distinguished vertex `v`; internal vertices are
//! `1..=n`. Edge `e` consists of half-edges `2e` and `2e + 1`. The
//! boundary numbering `ν` is stored inverted: `nu[p]` is the half-edge at
//! boundary position `p`. An optional rotation system lists the clockwise
//! order of the three half-edges at every internal vertex; at `v` the order
//! is `nu` itself.

use std::collections::VecDeque;

use crate::error::{Error, Result, Violation};

/// Label of the distinguished vertex.
pub const V: usize = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfEdge(pub usize);

impl HalfEdge {
    pub fn edge(self) -> usize {
        self.0 / 2
    }

    pub fn twin(self) -> HalfEdge {
        HalfEdge(self.0 ^ 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearCubicGraph {
    internal: usize,
    /// Vertex of every half-edge.
    ends: Vec<usize>,
    nu: Vec<HalfEdge>,
    rotation: Option<Vec<[HalfEdge; 3]>>,
}

/// Result of [`NearCubicGraph::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Diagnostics {
    pub violations: Vec<Violation>,
}

impl Diagnostics {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(Error::InvalidGraph(self.violations))
        }
    }
}

impl NearCubicGraph {
    /// Assembles a graph without checking it. `edges[e]` gives the vertices
    /// of half-edges `2e` and `2e + 1`.
    pub fn from_parts(
        internal: usize,
        edges: &[(usize, usize)],
        nu: Vec<HalfEdge>,
        rotation: Option<Vec<[HalfEdge; 3]>>,
    ) -> Self {
        NearCubicGraph {
            internal,
            ends: edges.iter().flat_map(|&(a, b)| [a, b]).collect(),
            nu,
            rotation,
        }
    }

    /// Like [`from_parts`](Self::from_parts), but rejects graphs that fail
    /// [`validate`](Self::validate).
    pub fn new(
        internal: usize,
        edges: &[(usize, usize)],
        nu: Vec<HalfEdge>,
        rotation: Option<Vec<[HalfEdge; 3]>>,
    ) -> Result<Self> {
        let g = Self::from_parts(internal, edges, nu, rotation);
        g.validate().into_result()?;
        Ok(g)
    }

    pub fn arity(&self) -> usize {
        self.nu.len()
    }

    pub fn internal_vertices(&self) -> usize {
        self.internal
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len() / 2
    }

    pub fn half_edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn vertex_of(&self, h: HalfEdge) -> usize {
        self.ends[h.0]
    }

    pub fn edge_ends(&self, e: usize) -> (usize, usize) {
        (self.ends[2 * e], self.ends[2 * e + 1])
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.ends.chunks(2).map(|c| (c[0], c[1]))
    }

    /// The half-edge at boundary position `p`.
    pub fn nu(&self, p: usize) -> HalfEdge {
        self.nu[p]
    }

    pub fn boundary(&self) -> &[HalfEdge] {
        &self.nu
    }

    /// Boundary position of each half-edge (`None` for internal ones).
    pub fn positions(&self) -> Vec<Option<usize>> {
        let mut pos = vec![None; self.ends.len()];
        for (p, h) in self.nu.iter().enumerate() {
            if h.0 < pos.len() {
                pos[h.0] = Some(p);
            }
        }
        pos
    }

    pub fn rotation(&self) -> Option<&[[HalfEdge; 3]]> {
        self.rotation.as_deref()
    }

    pub fn without_rotation(mut self) -> Self {
        self.rotation = None;
        self
    }

    pub fn with_rotation(mut self, rotation: Vec<[HalfEdge; 3]>) -> Self {
        self.rotation = Some(rotation);
        self
    }

    /// Half-edges incident to every vertex, in half-edge order.
    pub(crate) fn incidence(&self) -> Vec<Vec<HalfEdge>> {
        let mut inc = vec![Vec::new(); self.internal + 1];
        for (h, &u) in self.ends.iter().enumerate() {
            if u <= self.internal {
                inc[u].push(HalfEdge(h));
            }
        }
        inc
    }

    /// Degree, `ν` and connectivity checks; everything except planarity.
    pub fn structural_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (h, &u) in self.ends.iter().enumerate() {
            if u > self.internal {
                out.push(Violation::EndpointOutOfRange {
                    edge: h / 2,
                    vertex: u,
                });
            }
        }
        if !out.is_empty() {
            return out;
        }
        let inc = self.incidence();
        for (u, hs) in inc.iter().enumerate().skip(1) {
            if hs.len() != 3 {
                out.push(Violation::Degree {
                    vertex: u,
                    degree: hs.len(),
                });
            }
        }
        let mut at_v: Vec<HalfEdge> = inc[V].clone();
        let mut listed = self.nu.clone();
        listed.sort();
        at_v.sort();
        if listed != at_v {
            let dup = listed.windows(2).any(|w| w[0] == w[1]);
            let msg = if dup {
                "a half-edge is listed at two positions".to_string()
            } else {
                format!(
                    "positions list {} half-edges but {} are incident with v",
                    listed.len(),
                    at_v.len()
                )
            };
            out.push(Violation::NuNotBijective(msg));
        }
        let components = self.components();
        if components > 1 {
            out.push(Violation::Disconnected { components });
        }
        out
    }

    /// All checks: degrees, `ν`, connectivity and, when a rotation system
    /// is present, its consistency and genus zero.
    pub fn validate(&self) -> Diagnostics {
        let mut violations = self.structural_violations();
        if violations.is_empty() && self.rotation.is_some() {
            match self.genus() {
                Ok(0) => {}
                Ok(g) => violations.push(Violation::Genus(g)),
                Err(v) => violations.push(v),
            }
        }
        Diagnostics { violations }
    }

    pub(crate) fn check_structure(&self) -> Result<()> {
        let v = self.structural_violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidGraph(v))
        }
    }

    fn components(&self) -> usize {
        let n = self.internal + 1;
        let mut adj = vec![Vec::new(); n];
        for (a, b) in self.edges() {
            if a < n && b < n {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        count_components(&adj)
    }

    /// Successor of every half-edge in the clockwise order around its
    /// vertex.
    fn rotation_successor(&self) -> std::result::Result<Vec<usize>, Violation> {
        let rot = self
            .rotation
            .as_ref()
            .ok_or_else(|| Violation::Rotation("no rotation system".into()))?;
        if rot.len() != self.internal {
            return Err(Violation::Rotation(format!(
                "{} vertex orders for {} internal vertices",
                rot.len(),
                self.internal
            )));
        }
        let mut succ = vec![usize::MAX; self.ends.len()];
        let mut place = |cycle: &[HalfEdge], vertex: usize| -> std::result::Result<(), Violation> {
            for (i, h) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                if h.0 >= self.ends.len() || self.ends[h.0] != vertex {
                    return Err(Violation::Rotation(format!(
                        "half-edge {} is not incident with vertex {vertex}",
                        h.0
                    )));
                }
                if succ[h.0] != usize::MAX {
                    return Err(Violation::Rotation(format!(
                        "half-edge {} listed twice",
                        h.0
                    )));
                }
                succ[h.0] = next.0;
            }
            Ok(())
        };
        place(&self.nu, V)?;
        for (u, cycle) in rot.iter().enumerate() {
            place(cycle, u + 1)?;
        }
        if succ.contains(&usize::MAX) {
            return Err(Violation::Rotation(
                "some half-edge has no place in the rotation".into(),
            ));
        }
        Ok(succ)
    }

    /// Number of faces of the embedding given by the rotation system.
    pub fn face_count(&self) -> std::result::Result<usize, Violation> {
        Ok(count_faces(&self.rotation_successor()?))
    }

    /// Euler genus of the rotation system: `V - E + F = 2C - 2g`.
    pub fn genus(&self) -> std::result::Result<usize, Violation> {
        let faces = self.face_count()? as i64;
        let vertices = self.internal as i64 + 1;
        let edges = self.edge_count() as i64;
        let twice = 2 * self.components() as i64 - (vertices - edges + faces);
        Ok((twice / 2) as usize)
    }

    /// `r_t`: the same graph with `ν` shifted so that the half-edge at
    /// position `i` moves to `(i + t) mod d`.
    pub fn rotate(&self, t: usize) -> NearCubicGraph {
        let d = self.arity();
        let mut nu = self.nu.clone();
        for (i, &h) in self.nu.iter().enumerate() {
            nu[(i + t) % d] = h;
        }
        NearCubicGraph { nu, ..self.clone() }
    }

    /// `f`: positions reversed and the rotation at every internal vertex
    /// reversed (the mirror image).
    pub fn flip(&self) -> NearCubicGraph {
        NearCubicGraph {
            internal: self.internal,
            ends: self.ends.clone(),
            nu: self.nu.iter().rev().copied().collect(),
            rotation: self
                .rotation
                .as_ref()
                .map(|r| r.iter().map(|&[a, b, c]| [a, c, b]).collect()),
        }
    }

    /// `γ_k`: identifies the two distinguished vertices and joins position
    /// `d1 - k + i` of `self` to position `d2 - 1 - i` of `other` for
    /// `i < k`. The remaining positions of `self` come first, then those of
    /// `other`.
    pub fn glue(&self, other: &NearCubicGraph, k: usize) -> Result<NearCubicGraph> {
        let (d1, d2) = (self.arity(), other.arity());
        if k > d1.min(d2) {
            return Err(Error::Glue(format!("k = {k} exceeds min({d1}, {d2})")));
        }
        if d1 + d2 - 2 * k < 2 {
            return Err(Error::Glue(format!(
                "gluing arities {d1} and {d2} along {k} positions leaves d = {}",
                d1 + d2 - 2 * k
            )));
        }
        self.check_structure()?;
        other.check_structure()?;
        let links: Vec<(HalfEdge, HalfEdge)> = (0..k)
            .map(|i| (self.nu[d1 - k + i], other.nu[d2 - 1 - i]))
            .collect();
        let merged = Merge::new(self, other, &links);
        if merged.free_loops > 0 {
            return Err(Error::Glue(
                "gluing closes a cycle of boundary chords with no vertex on it".into(),
            ));
        }
        let nu = self.nu[..d1 - k]
            .iter()
            .map(|&h| merged.map_first(h))
            .chain(other.nu[..d2 - k].iter().map(|&h| merged.map_second(h)))
            .collect();
        let rotation = merged.rotation(self, other);
        Ok(NearCubicGraph {
            internal: self.internal + other.internal,
            ends: merged.ends,
            nu,
            rotation,
        })
    }

    /// `⊕`: removes `v` from both graphs and joins position `i` of `self`
    /// to position `i` of `other`. The rotation of `other` is mirrored, so
    /// the sum of two plane graphs is plane.
    pub fn oplus(&self, other: &NearCubicGraph) -> Result<ClosedGraph> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        self.check_structure()?;
        other.check_structure()?;
        let links: Vec<(HalfEdge, HalfEdge)> = self
            .nu
            .iter()
            .copied()
            .zip(other.nu.iter().copied())
            .collect();
        let merged = Merge::new(self, other, &links);
        // `other` is seen from the far side of the cut, i.e. mirrored
        let mirrored = NearCubicGraph {
            rotation: other
                .rotation
                .as_ref()
                .map(|r| r.iter().map(|&[a, b, c]| [a, c, b]).collect()),
            ..other.clone()
        };
        let rotation = merged.rotation(self, &mirrored);
        Ok(ClosedGraph {
            vertices: self.internal + other.internal,
            // internal vertex u becomes u - 1
            ends: merged.ends.iter().map(|&u| u - 1).collect(),
            rotation,
            free_loops: merged.free_loops,
        })
    }
}

/// The half-edge surgery shared by `γ_k` and `⊕`.
struct Merge {
    ends: Vec<usize>,
    /// New half-edge of every surviving old half-edge of the first graph,
    /// then of the second.
    first: Vec<Option<usize>>,
    second: Vec<Option<usize>>,
    free_loops: usize,
}

impl Merge {
    fn new(g1: &NearCubicGraph, g2: &NearCubicGraph, links: &[(HalfEdge, HalfEdge)]) -> Merge {
        let off = g1.ends.len();
        let total = off + g2.ends.len();
        // combined half-edge ids: g1 as is, g2 shifted by `off`
        let vertex = |h: usize| -> usize {
            if h < off {
                g1.ends[h]
            } else {
                match g2.ends[h - off] {
                    V => V,
                    u => u + g1.internal,
                }
            }
        };
        let mut link = vec![usize::MAX; total];
        for &(a, b) in links {
            link[a.0] = b.0 + off;
            link[b.0 + off] = a.0;
        }
        let mut new_id = vec![None; total];
        let mut ends = Vec::new();
        let mut visited = vec![false; total];
        for start in 0..total {
            if link[start] != usize::MAX || visited[start] {
                continue;
            }
            let mut t = start ^ 1;
            visited[start] = true;
            while link[t] != usize::MAX {
                visited[t] = true;
                let across = link[t];
                visited[across] = true;
                t = across ^ 1;
            }
            visited[t] = true;
            let e = ends.len() / 2;
            new_id[start] = Some(2 * e);
            new_id[t] = Some(2 * e + 1);
            ends.push(vertex(start));
            ends.push(vertex(t));
        }
        // whatever is left consists of linked halves only
        let mut free_loops = 0;
        for start in 0..total {
            if visited[start] {
                continue;
            }
            free_loops += 1;
            let mut t = start;
            loop {
                visited[t] = true;
                visited[t ^ 1] = true;
                t = link[t ^ 1];
                if t == start {
                    break;
                }
            }
        }
        Merge {
            ends,
            first: new_id[..off].to_vec(),
            second: new_id[off..].to_vec(),
            free_loops,
        }
    }

    fn map_first(&self, h: HalfEdge) -> HalfEdge {
        HalfEdge(self.first[h.0].expect("surviving half-edge"))
    }

    fn map_second(&self, h: HalfEdge) -> HalfEdge {
        HalfEdge(self.second[h.0].expect("surviving half-edge"))
    }

    fn rotation(&self, g1: &NearCubicGraph, g2: &NearCubicGraph) -> Option<Vec<[HalfEdge; 3]>> {
        let (r1, r2) = (g1.rotation.as_ref()?, g2.rotation.as_ref()?);
        Some(
            r1.iter()
                .map(|c| c.map(|h| self.map_first(h)))
                .chain(r2.iter().map(|c| c.map(|h| self.map_second(h))))
                .collect(),
        )
    }
}

/// A cubic multigraph without boundary, as produced by `⊕`. Vertices are
/// `0..vertices`. Closed curves of glued boundary chords that carry no
/// vertex are kept as `free_loops`; each can be colored in three ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedGraph {
    vertices: usize,
    ends: Vec<usize>,
    rotation: Option<Vec<[HalfEdge; 3]>>,
    free_loops: usize,
}

impl ClosedGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len() / 2
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn edge_ends(&self, e: usize) -> (usize, usize) {
        (self.ends[2 * e], self.ends[2 * e + 1])
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.ends.chunks(2).map(|c| (c[0], c[1]))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices];
        for &u in &self.ends {
            deg[u] += 1;
        }
        deg
    }

    pub fn is_cubic(&self) -> bool {
        self.degrees().iter().all(|&d| d == 3)
    }

    /// True when there are no loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges()
            .all(|(a, b)| a != b && seen.insert((a.min(b), a.max(b))))
    }

    /// Length of a shortest cycle; loops count 1 and parallel edges 2.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertices;
        let mut adj = vec![Vec::new(); n];
        for (e, (a, b)) in self.edges().enumerate() {
            if a == b {
                return Some(1);
            }
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut via = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(w, e) in &adj[u] {
                    if e == via[u] {
                        continue;
                    }
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        via[w] = e;
                        queue.push_back(w);
                    } else {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn components(&self) -> usize {
        let mut adj = vec![Vec::new(); self.vertices];
        for (a, b) in self.edges() {
            adj[a].push(b);
            adj[b].push(a);
        }
        count_components(&adj)
    }

    /// Euler genus of the inherited rotation system, if there is one.
    pub fn genus(&self) -> Option<usize> {
        let rot = self.rotation.as_ref()?;
        let mut succ = vec![usize::MAX; self.ends.len()];
        for cycle in rot {
            for i in 0..3 {
                succ[cycle[i].0] = cycle[(i + 1) % 3].0;
            }
        }
        if succ.contains(&usize::MAX) {
            return None;
        }
        let faces = count_faces(&succ) as i64;
        let twice = 2 * self.components() as i64
            - (self.vertices as i64 - self.edge_count() as i64 + faces);
        Some((twice / 2) as usize)
    }
}

fn count_components(adj: &[Vec<usize>]) -> usize {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut components = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        components += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    components
}

/// Orbits of the face permutation `h ↦ succ(twin(h))`.
fn count_faces(succ: &[usize]) -> usize {
    let mut seen = vec![false; succ.len()];
    let mut faces = 0;
    for s in 0..succ.len() {
        if seen[s] {
            continue;
        }
        faces += 1;
        let mut h = s;
        while !seen[h] {
            seen[h] = true;
            h = succ[h ^ 1];
        }
    }
    faces
}

/// `C̃_n`: an `n`-cycle of internal vertices, vertex `i + 1` carrying the
/// boundary half-edge at position `i`.
pub fn build_wheel(n: usize) -> Result<NearCubicGraph> {
    if n < 3 {
        return Err(Error::Arity {
            d: n,
            reason: "a wheel needs at least 3 rim vertices",
        });
    }
    Ok(crate::catalog::wheel(n))
}
