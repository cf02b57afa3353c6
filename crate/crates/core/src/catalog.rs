//! Fixture graphs: the ray generators `R_{d,i}` for `d <= 5` and the
//! wheels `C̃_n`.
//!
//! Each fixture is written as a drawing: boundary position `p` sits on the
//! unit circle at a fixed angle (positions increase counterclockwise, so
//! they run clockwise around `v`, which lies outside the circle), and
//! internal vertices get coordinates inside it. The rotation at an
//! internal vertex is the clockwise order of the directions of its edges
//! in that drawing.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::graph::{HalfEdge, NearCubicGraph};

#[derive(Debug, Clone, Copy)]
enum End {
    /// Boundary position.
    B(usize),
    /// Internal vertex, 1-based.
    U(usize),
}

struct Sketch {
    /// Angle (degrees) of every boundary position.
    angles: Vec<f64>,
    /// Polar coordinates (degrees, radius) of internal vertices.
    points: Vec<(f64, f64)>,
    edges: Vec<(End, End)>,
}

impl Sketch {
    fn xy(&self, end: End) -> (f64, f64) {
        let (deg, r) = match end {
            End::B(p) => (self.angles[p], 1.1),
            End::U(u) => self.points[u - 1],
        };
        let t = deg * PI / 180.0;
        (r * t.cos(), r * t.sin())
    }

    fn build(self) -> NearCubicGraph {
        let d = self.angles.len();
        let n = self.points.len();
        let vertex = |e: End| match e {
            End::B(_) => 0,
            End::U(u) => u,
        };
        let pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b)| (vertex(a), vertex(b)))
            .collect();
        let mut nu = vec![HalfEdge(usize::MAX); d];
        // outgoing directions at every internal vertex
        let mut around: Vec<Vec<(f64, HalfEdge)>> = vec![Vec::new(); n];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            for (h, here, there) in [(2 * e, a, b), (2 * e + 1, b, a)] {
                match here {
                    End::B(p) => nu[p] = HalfEdge(h),
                    End::U(u) => {
                        let (x0, y0) = self.xy(here);
                        let (x1, y1) = self.xy(there);
                        around[u - 1].push(((y1 - y0).atan2(x1 - x0), HalfEdge(h)));
                    }
                }
            }
        }
        let rotation = around
            .into_iter()
            .map(|mut dirs| {
                // clockwise: decreasing angle
                dirs.sort_by(|a, b| b.0.total_cmp(&a.0));
                [dirs[0].1, dirs[1].1, dirs[2].1]
            })
            .collect();
        NearCubicGraph::from_parts(n, &pairs, nu, Some(rotation))
    }
}

fn circle(d: usize, start: f64) -> Vec<f64> {
    (0..d)
        .map(|j| start + 360.0 * j as f64 / d as f64)
        .collect()
}

fn mid(angles: &[f64], a: usize, b: usize) -> f64 {
    let (x, y) = (angles[a], angles[b]);
    let mut diff = (y - x).rem_euclid(360.0);
    if diff > 180.0 {
        diff -= 360.0;
    }
    x + diff / 2.0
}

pub(crate) fn wheel(n: usize) -> NearCubicGraph {
    let angles = circle(n, 90.0);
    let points = angles.iter().map(|&a| (a, 0.5)).collect();
    let mut edges: Vec<(End, End)> = (0..n).map(|p| (End::U(p + 1), End::B(p))).collect();
    edges.extend((0..n).map(|p| (End::U(p + 1), End::U((p + 1) % n + 1))));
    Sketch {
        angles,
        points,
        edges,
    }
    .build()
}

fn r21() -> NearCubicGraph {
    Sketch {
        angles: vec![180.0, 0.0],
        points: Vec::new(),
        edges: vec![(End::B(0), End::B(1))],
    }
    .build()
}

fn r31() -> NearCubicGraph {
    Sketch {
        angles: circle(3, 90.0),
        points: vec![(0.0, 0.0)],
        edges: (0..3).map(|p| (End::U(1), End::B(p))).collect(),
    }
    .build()
}

/// Two boundary chords: `{0,1},{2,3}` for `i = 1`, `{0,3},{1,2}` for `i = 2`.
fn r4_chords(i: usize) -> NearCubicGraph {
    let edges = if i == 1 {
        vec![(End::B(0), End::B(1)), (End::B(2), End::B(3))]
    } else {
        vec![(End::B(0), End::B(3)), (End::B(1), End::B(2))]
    };
    Sketch {
        angles: circle(4, 45.0),
        points: Vec::new(),
        edges,
    }
    .build()
}

/// Two adjacent vertices, each taking two consecutive positions: `a` on
/// `{s, s+1}` and `b` on `{s+2, s+3}` with `s = 0` for `i = 3` and `s = 1`
/// for `i = 4`.
fn r4_h(i: usize) -> NearCubicGraph {
    let s = i - 3;
    let angles = circle(4, 45.0);
    let pa = mid(&angles, s, s + 1);
    let pb = mid(&angles, (s + 2) % 4, (s + 3) % 4);
    Sketch {
        angles,
        points: vec![(pa, 0.3), (pb, 0.3)],
        edges: vec![
            (End::U(1), End::B(s)),
            (End::U(1), End::B(s + 1)),
            (End::U(2), End::B((s + 2) % 4)),
            (End::U(2), End::B((s + 3) % 4)),
            (End::U(1), End::U(2)),
        ],
    }
    .build()
}

/// A claw on three consecutive positions plus a chord on the other two;
/// the chord is `{c, c+1}` with `c = (3 - i) mod 5`.
fn r5_claw(i: usize) -> NearCubicGraph {
    let c = (8 - i) % 5;
    let angles = circle(5, 90.0);
    let claw = [(c + 2) % 5, (c + 3) % 5, (c + 4) % 5];
    Sketch {
        angles,
        points: vec![(0.0, 0.0)],
        edges: vec![
            (End::U(1), End::B(claw[0])),
            (End::U(1), End::B(claw[1])),
            (End::U(1), End::B(claw[2])),
            (End::B(c), End::B((c + 1) % 5)),
        ],
    }
    .build()
}

/// A path of three vertices: `a` takes position `s`, `b` positions
/// `s+1, s+2`, `c` positions `s+3, s+4`, with `s = (11 - i) mod 5`.
fn r5_tree(i: usize) -> NearCubicGraph {
    let s = (11 - i) % 5;
    let angles = circle(5, 90.0);
    let p = |k: usize| (s + k) % 5;
    let pa = angles[s];
    let pb = mid(&angles, p(1), p(2));
    let pc = mid(&angles, p(3), p(4));
    Sketch {
        angles,
        points: vec![(pa, 0.4), (pb, 0.4), (pc, 0.4)],
        edges: vec![
            (End::U(1), End::U(2)),
            (End::U(1), End::U(3)),
            (End::U(2), End::B(p(1))),
            (End::U(2), End::B(p(2))),
            (End::U(3), End::B(p(3))),
            (End::U(3), End::B(p(4))),
            (End::U(1), End::B(s)),
        ],
    }
    .build()
}

/// Five rim vertices, vertex `p + 1` on position `p`, joined to the rim
/// vertices `step` positions away. `step = 1` is the wheel, `step = 2` the
/// pentagram.
fn r5_ring(step: usize) -> NearCubicGraph {
    let angles = circle(5, 90.0);
    let points = angles.iter().map(|&a| (a, 0.5)).collect();
    let mut edges: Vec<(End, End)> = (0..5).map(|p| (End::U(p + 1), End::B(p))).collect();
    edges.extend((0..5).map(|p| (End::U(p + 1), End::U((p + step) % 5 + 1))));
    Sketch {
        angles,
        points,
        edges,
    }
    .build()
}

/// Names of the fixed catalog, in order.
pub fn names() -> Vec<String> {
    let mut out = vec!["R_2_1".to_string(), "R_3_1".to_string()];
    out.extend((1..=4).map(|i| format!("R_4_{i}")));
    out.extend((1..=12).map(|i| format!("R_5_{i}")));
    out
}

/// Names of the ray generators of arity `d` (`2 <= d <= 5`).
pub fn ray_names(d: usize) -> Vec<String> {
    let count = match d {
        2 | 3 => 1,
        4 => 4,
        5 => 12,
        _ => 0,
    };
    (1..=count).map(|i| format!("R_{d}_{i}")).collect()
}

/// Looks up a fixture: `R_<d>_<i>` or `Ctilde_<n>`.
pub fn catalog(name: &str) -> Result<NearCubicGraph> {
    let unknown = || Error::UnknownCatalog(name.to_string());
    if let Some(n) = name.strip_prefix("Ctilde_") {
        let n: usize = n.parse().map_err(|_| unknown())?;
        return crate::graph::build_wheel(n).map_err(|_| unknown());
    }
    let rest = name.strip_prefix("R_").ok_or_else(unknown)?;
    let (d, i) = rest.split_once('_').ok_or_else(unknown)?;
    let (d, i): (usize, usize) = (
        d.parse().map_err(|_| unknown())?,
        i.parse().map_err(|_| unknown())?,
    );
    Ok(match (d, i) {
        (2, 1) => r21(),
        (3, 1) => r31(),
        (4, 1..=2) => r4_chords(i),
        (4, 3..=4) => r4_h(i),
        (5, 1..=5) => r5_claw(i),
        (5, 6..=10) => r5_tree(i),
        (5, 11) => r5_ring(1),
        (5, 12) => r5_ring(2),
        _ => return Err(unknown()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Violation;

    fn boundary_vertices(g: &NearCubicGraph) -> Vec<usize> {
        (0..g.arity())
            .map(|p| g.vertex_of(g.nu(p).twin()))
            .collect()
    }

    #[test]
    fn every_fixture_is_structurally_valid() {
        for name in names() {
            let g = catalog(&name).unwrap();
            assert!(g.structural_violations().is_empty(), "{name}");
        }
    }

    #[test]
    fn plane_fixtures_have_genus_zero() {
        for name in names().into_iter().filter(|n| n != "R_5_12") {
            let g = catalog(&name).unwrap();
            assert_eq!(g.genus(), Ok(0), "{name}");
            assert!(g.validate().is_ok(), "{name}");
        }
        for n in 3..=9 {
            assert_eq!(catalog(&format!("Ctilde_{n}")).unwrap().genus(), Ok(0));
        }
    }

    #[test]
    fn pentagram_is_not_plane() {
        let g = catalog("R_5_12").unwrap();
        assert!(g.genus().unwrap() > 0);
        assert!(matches!(
            g.validate().violations.as_slice(),
            [Violation::Genus(_)]
        ));
    }

    #[test]
    fn r21_is_a_single_chord() {
        let g = catalog("R_2_1").unwrap();
        assert_eq!(g.internal_vertices(), 0);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.nu(0).twin(), g.nu(1));
    }

    #[test]
    fn r31_is_a_claw() {
        let g = catalog("R_3_1").unwrap();
        assert_eq!(g.internal_vertices(), 1);
        assert_eq!(boundary_vertices(&g), vec![1, 1, 1]);
    }

    #[test]
    fn d4_fixtures() {
        let chord_partner = |g: &NearCubicGraph, p: usize| {
            let t = g.nu(p).twin();
            (0..4).find(|&q| g.nu(q) == t).unwrap()
        };
        let g1 = catalog("R_4_1").unwrap();
        assert_eq!(chord_partner(&g1, 0), 1);
        assert_eq!(chord_partner(&g1, 2), 3);
        let g2 = catalog("R_4_2").unwrap();
        assert_eq!(chord_partner(&g2, 0), 3);
        assert_eq!(chord_partner(&g2, 1), 2);
        assert_eq!(
            boundary_vertices(&catalog("R_4_3").unwrap()),
            vec![1, 1, 2, 2]
        );
        assert_eq!(
            boundary_vertices(&catalog("R_4_4").unwrap()),
            vec![2, 1, 1, 2]
        );
    }

    #[test]
    fn d5_fixtures_follow_the_figure() {
        // R_5_1: claw on {4, 0, 1}, chord {2, 3}
        assert_eq!(
            boundary_vertices(&catalog("R_5_1").unwrap()),
            vec![1, 1, 0, 0, 1]
        );
        assert_eq!(
            boundary_vertices(&catalog("R_5_3").unwrap()),
            vec![0, 0, 1, 1, 1]
        );
        // R_5_6: a on 0, b on {1, 2}, c on {3, 4}
        assert_eq!(
            boundary_vertices(&catalog("R_5_6").unwrap()),
            vec![1, 2, 2, 3, 3]
        );
        assert_eq!(
            boundary_vertices(&catalog("R_5_7").unwrap()),
            vec![2, 2, 3, 3, 1]
        );
        let w = catalog("R_5_11").unwrap();
        assert_eq!(w, catalog("Ctilde_5").unwrap());
        let p = catalog("R_5_12").unwrap();
        assert_eq!(p.internal_vertices(), 5);
        assert_eq!(p.edge_count(), 10);
    }

    #[test]
    fn unknown_names() {
        for bad in ["R_5_13", "R_6_1", "Ctilde_2", "foo", "R_x_1"] {
            assert!(
                matches!(catalog(bad), Err(Error::UnknownCatalog(_))),
                "{bad}"
            );
        }
    }
}
