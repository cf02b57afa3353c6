//! Line-oriented text formats for graphs, count vectors and cones.
//!
//! Blank lines and everything after `#` are ignored. Tokens are separated
//! by whitespace. Errors carry the 1-based line number.
//!
//! ```text
//! nearcubic 1          countvec 1           cone 1
//! d 3                  d 2                  d 2
//! vertices 1           order lex            order lex
//! edge 0 0 1           1 1 1                rays 1
//! edge 1 0 1                                1 1 1
//! edge 2 0 1
//! nu 0 0
//! nu 1 2
//! nu 2 4
//! rot 1 1 5 3
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::graph::{HalfEdge, NearCubicGraph};
use crate::precoloring::space;
use crate::vector::CountVector;

struct Line<'a> {
    number: usize,
    tokens: Vec<&'a str>,
}

impl Line<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.number, msg)
    }

    fn arg<T: std::str::FromStr>(&self, i: usize, what: &str) -> Result<T> {
        let tok = self.tokens[i];
        tok.parse()
            .map_err(|_| self.err(format!("expected {what}, found `{tok}`")))
    }

    fn expect_len(&self, n: usize) -> Result<()> {
        if self.tokens.len() != n {
            return Err(self.err(format!(
                "`{}` takes {} values, found {}",
                self.tokens[0],
                n - 1,
                self.tokens.len() - 1
            )));
        }
        Ok(())
    }
}

fn content_lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = body.split_whitespace().collect();
            (!tokens.is_empty()).then_some(Line {
                number: i + 1,
                tokens,
            })
        })
        .collect()
}

fn last_line(text: &str) -> usize {
    text.lines().count().max(1)
}

fn header<'a>(lines: &'a [Line<'a>], text: &str, magic: &str) -> Result<&'a Line<'a>> {
    let first = lines.first().ok_or_else(|| {
        Error::parse(
            last_line(text),
            format!("empty input, expected `{magic} 1`"),
        )
    })?;
    if first.tokens != [magic, "1"] {
        return Err(first.err(format!("expected `{magic} 1`")));
    }
    Ok(first)
}

/// Reads `key <value>` from a fixed line.
fn keyed<T: std::str::FromStr>(line: Option<&Line>, text: &str, key: &str) -> Result<T> {
    let line =
        line.ok_or_else(|| Error::parse(last_line(text), format!("missing `{key}` line")))?;
    if line.tokens[0] != key {
        return Err(line.err(format!("expected `{key}`, found `{}`", line.tokens[0])));
    }
    line.expect_len(2)?;
    line.arg(1, key)
}

fn expect_order(line: Option<&Line>, text: &str) -> Result<()> {
    let order: String = keyed(line, text, "order")?;
    if order != "lex" {
        return Err(line
            .unwrap()
            .err(format!("unknown order `{order}`, expected `lex`")));
    }
    Ok(())
}

fn arity(line: Option<&Line>, text: &str) -> Result<usize> {
    let d: usize = keyed(line, text, "d")?;
    space(d).map_err(|e| line.unwrap().err(e.to_string()))?;
    Ok(d)
}

fn integers(line: &Line, expected: usize) -> Result<Vec<BigInt>> {
    if line.tokens.len() != expected {
        return Err(line.err(format!(
            "expected {expected} entries, found {}",
            line.tokens.len()
        )));
    }
    line.tokens
        .iter()
        .map(|tok| {
            let x: BigInt = tok
                .parse()
                .map_err(|_| line.err(format!("expected an integer, found `{tok}`")))?;
            if x.is_negative() {
                return Err(line.err(format!("negative entry {x}")));
            }
            Ok(x)
        })
        .collect()
}

/// Parses a graph file. Missing or repeated positions, repeated ids and
/// every failure of [`NearCubicGraph::validate`] are errors.
pub fn parse_graph(text: &str) -> Result<NearCubicGraph> {
    let lines = content_lines(text);
    header(&lines, text, "nearcubic")?;
    let mut d: Option<usize> = None;
    let mut n: Option<usize> = None;
    let mut edges: BTreeMap<usize, (usize, usize, usize)> = BTreeMap::new();
    let mut nu: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let mut rot: BTreeMap<usize, ([usize; 3], usize)> = BTreeMap::new();
    for line in &lines[1..] {
        match line.tokens[0] {
            "d" | "vertices" => {
                line.expect_len(2)?;
                let slot = if line.tokens[0] == "d" {
                    &mut d
                } else {
                    &mut n
                };
                if slot.is_some() {
                    return Err(line.err(format!("repeated `{}` line", line.tokens[0])));
                }
                *slot = Some(line.arg(1, "a count")?);
            }
            "edge" => {
                line.expect_len(4)?;
                let id: usize = line.arg(1, "an edge id")?;
                let ends = (line.arg(2, "a vertex")?, line.arg(3, "a vertex")?);
                if edges.insert(id, (ends.0, ends.1, line.number)).is_some() {
                    return Err(line.err(format!("duplicate edge id {id}")));
                }
            }
            "nu" => {
                line.expect_len(3)?;
                let p: usize = line.arg(1, "a position")?;
                let h: usize = line.arg(2, "a half-edge id")?;
                if nu.insert(p, (h, line.number)).is_some() {
                    return Err(line.err(format!("position {p} assigned twice")));
                }
            }
            "rot" => {
                line.expect_len(5)?;
                let u: usize = line.arg(1, "a vertex")?;
                let hs = [
                    line.arg(2, "a half-edge id")?,
                    line.arg(3, "a half-edge id")?,
                    line.arg(4, "a half-edge id")?,
                ];
                if rot.insert(u, (hs, line.number)).is_some() {
                    return Err(line.err(format!("repeated rotation for vertex {u}")));
                }
            }
            other => return Err(line.err(format!("unknown keyword `{other}`"))),
        }
    }
    let end = last_line(text);
    let d = d.ok_or_else(|| Error::parse(end, "missing `d` line"))?;
    let n = n.ok_or_else(|| Error::parse(end, "missing `vertices` line"))?;
    let m = edges.len();
    let mut ends = Vec::with_capacity(m);
    for (k, (&id, &(a, b, at))) in edges.iter().enumerate() {
        if id != k {
            return Err(Error::parse(
                at,
                format!("edge ids must be 0..{m}, found {id}"),
            ));
        }
        for u in [a, b] {
            if u > n {
                return Err(Error::parse(at, format!("vertex {u} out of range 0..={n}")));
            }
        }
        ends.push((a, b));
    }
    let half = |h: usize, at: usize| -> Result<HalfEdge> {
        if h >= 2 * m {
            return Err(Error::parse(
                at,
                format!("half-edge {h} out of range 0..{}", 2 * m),
            ));
        }
        Ok(HalfEdge(h))
    };
    let mut boundary = Vec::with_capacity(d);
    for p in 0..d {
        let &(h, at) = nu
            .get(&p)
            .ok_or_else(|| Error::parse(end, format!("missing `nu` for position {p}")))?;
        boundary.push(half(h, at)?);
    }
    if let Some((&p, &(_, at))) = nu.range(d..).next() {
        return Err(Error::parse(
            at,
            format!("position {p} out of range 0..{d}"),
        ));
    }
    // with no internal vertices the rotation system is empty but present
    let rotation = if rot.is_empty() && n > 0 {
        None
    } else {
        if let Some((&u, &(_, at))) = rot.iter().find(|(&u, _)| u == 0 || u > n) {
            return Err(Error::parse(
                at,
                format!("rotation for unknown internal vertex {u}"),
            ));
        }
        let mut cycles = Vec::with_capacity(n);
        for u in 1..=n {
            let &(hs, at) = rot
                .get(&u)
                .ok_or_else(|| Error::parse(end, format!("missing `rot` for vertex {u}")))?;
            cycles.push([half(hs[0], at)?, half(hs[1], at)?, half(hs[2], at)?]);
        }
        Some(cycles)
    };
    NearCubicGraph::new(n, &ends, boundary, rotation)
}

/// Canonical text of a graph: edges by id, positions in order, then the
/// rotation system if there is one.
pub fn graph_to_string(g: &NearCubicGraph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "nearcubic 1");
    let _ = writeln!(s, "d {}", g.arity());
    let _ = writeln!(s, "vertices {}", g.internal_vertices());
    for (e, (a, b)) in g.edges().enumerate() {
        let _ = writeln!(s, "edge {e} {a} {b}");
    }
    for (p, h) in g.boundary().iter().enumerate() {
        let _ = writeln!(s, "nu {p} {}", h.0);
    }
    if let Some(rot) = g.rotation() {
        for (u, [a, b, c]) in rot.iter().enumerate() {
            let _ = writeln!(s, "rot {} {} {} {}", u + 1, a.0, b.0, c.0);
        }
    }
    s
}

/// Parses a count vector file.
pub fn parse_vector(text: &str) -> Result<CountVector> {
    let lines = content_lines(text);
    header(&lines, text, "countvec")?;
    let d = arity(lines.get(1), text)?;
    expect_order(lines.get(2), text)?;
    let body = lines
        .get(3)
        .ok_or_else(|| Error::parse(last_line(text), "missing the line of entries"))?;
    let entries = integers(body, space(d)?.len())?;
    if let Some(extra) = lines.get(4) {
        return Err(extra.err("unexpected content after the entries"));
    }
    CountVector::from_integers(d, &entries)
}

/// Canonical text of a count vector. Entries must be nonnegative integers.
pub fn vector_to_string(x: &CountVector) -> Result<String> {
    let ints = x
        .to_integers()
        .filter(|v| v.iter().all(|e| !e.is_negative()))
        .ok_or_else(|| Error::Input("only nonnegative integer vectors can be written".into()))?;
    let mut s = String::new();
    let _ = writeln!(s, "countvec 1");
    let _ = writeln!(s, "d {}", x.arity());
    let _ = writeln!(s, "order lex");
    let _ = writeln!(s, "{}", join(&ints));
    Ok(s)
}

/// Parses a cone file. Rays must be nonnegative and invariant under
/// permutations of the colors; they are normalized on load.
pub fn parse_cone(text: &str) -> Result<Cone> {
    let lines = content_lines(text);
    header(&lines, text, "cone")?;
    let d = arity(lines.get(1), text)?;
    expect_order(lines.get(2), text)?;
    let m: usize = keyed(lines.get(3), text, "rays")?;
    let width = space(d)?.len();
    let body = &lines[4.min(lines.len())..];
    if body.len() != m {
        let at = body.get(m).map_or(last_line(text), |l| l.number);
        return Err(Error::parse(
            at,
            format!("expected {m} rays, found {}", body.len()),
        ));
    }
    let rays = body
        .iter()
        .map(|line| integers(line, width))
        .collect::<Result<Vec<_>>>()?;
    let cone = Cone::new(d, rays)?;
    if !cone.is_color_invariant() {
        return Err(Error::Input(
            "cone rays are not invariant under permutations of the colors".into(),
        ));
    }
    Ok(cone)
}

pub fn cone_to_string(c: &Cone) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "cone 1");
    let _ = writeln!(s, "d {}", c.arity());
    let _ = writeln!(s, "order lex");
    let _ = writeln!(s, "rays {}", c.len());
    for r in c.rays() {
        let _ = writeln!(s, "{}", join(r));
    }
    s
}

fn join(v: &[BigInt]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<NearCubicGraph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn write_graph(path: impl AsRef<Path>, g: &NearCubicGraph) -> Result<()> {
    Ok(std::fs::write(path, graph_to_string(g))?)
}

pub fn read_vector(path: impl AsRef<Path>) -> Result<CountVector> {
    parse_vector(&std::fs::read_to_string(path)?)
}

pub fn write_vector(path: impl AsRef<Path>, x: &CountVector) -> Result<()> {
    Ok(std::fs::write(path, vector_to_string(x)?)?)
}

pub fn read_cone(path: impl AsRef<Path>) -> Result<Cone> {
    parse_cone(&std::fs::read_to_string(path)?)
}

pub fn write_cone(path: impl AsRef<Path>, c: &Cone) -> Result<()> {
    Ok(std::fs::write(path, cone_to_string(c))?)
}
