//! Random plane graphs with five boundary edges, each checked against the
//! conjectured inequality and `B'_5`.

use coloring_cones::cone::cached_bprime5;
use coloring_cones::search::{run_search, SearchConfig};
use num_traits::Zero;

fn main() -> coloring_cones::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(1);
    let config = SearchConfig {
        seed,
        instances: 50,
        ..SearchConfig::default()
    };
    let results = run_search(&config, cached_bprime5()?)?;
    let mut tight = 0;
    for (outcome, _) in &results {
        if outcome.margin.is_zero() {
            tight += 1;
        }
        if outcome.is_violation() {
            println!("{outcome}");
        }
    }
    println!(
        "{} graphs, {} with margin 0, {} violations",
        results.len(),
        tight,
        results.iter().filter(|(o, _)| o.is_violation()).count()
    );
    Ok(())
}
