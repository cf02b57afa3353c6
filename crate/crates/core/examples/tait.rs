//! The Tait map from proper 4-colorings of a cycle to precolorings.

use coloring_cones::tait::tait_precoloring;

fn main() -> coloring_cones::Result<()> {
    for cycle in [[1, 2, 1, 2, 3], [1, 2, 3, 4, 2], [4, 3, 2, 1, 2]] {
        println!("{cycle:?} -> {}", tait_precoloring(&cycle)?);
    }
    match tait_precoloring(&[1, 1, 2]) {
        Ok(p) => println!("unexpected {p}"),
        Err(e) => println!("[1, 1, 2] rejected: {e}"),
    }
    Ok(())
}
