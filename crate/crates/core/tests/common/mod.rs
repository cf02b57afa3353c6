#![allow(dead_code)]

use coloring_cones::graph::NearCubicGraph;
use coloring_cones::search::{generate, SearchConfig};

/// Seeded random plane graphs: `per_arity` graphs for each `d` in `2..=6`,
/// at most 24 internal vertices each.
pub fn corpus(seed: u64, per_arity: usize) -> Vec<NearCubicGraph> {
    let mut out = Vec::new();
    for d in 2..=6 {
        let config = SearchConfig {
            d,
            seed,
            max_vertices: 24,
            instances: per_arity,
            ..SearchConfig::default()
        };
        for i in 0..per_arity {
            out.push(generate(&config, i).expect("generator"));
        }
    }
    out
}

/// Runs the command-line driver and returns exit code and standard output.
pub fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("coloring-cones").chain(args.iter().copied());
    let code = coloring_cones::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf-8"),
        String::from_utf8(err).expect("utf-8"),
    )
}
