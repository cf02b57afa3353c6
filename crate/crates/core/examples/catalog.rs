//! The fixed catalog of small near-cubic graphs and the wheels.

use coloring_cones::catalog::{catalog, names};

fn main() -> coloring_cones::Result<()> {
    let mut all = names();
    all.extend((3..=6).map(|n| format!("Ctilde_{n}")));
    println!(
        "{:<10} {:>2} {:>8} {:>5} genus",
        "name", "d", "vertices", "edges"
    );
    for name in all {
        let g = catalog(&name)?;
        let genus = match g.genus() {
            Ok(x) => x.to_string(),
            Err(v) => v.to_string(),
        };
        println!(
            "{:<10} {:>2} {:>8} {:>5} {genus}",
            name,
            g.arity(),
            g.internal_vertices(),
            g.edge_count()
        );
    }
    Ok(())
}
