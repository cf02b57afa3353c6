//! Count vectors `n_G` of catalog graphs, and the Petersen graph as
//! `R_5_12 ⊕ C̃_5`.

use coloring_cones::catalog::catalog;
use coloring_cones::count::{count_closed, count_vector};
use coloring_cones::precoloring::space;
use num_traits::Zero;

fn main() -> coloring_cones::Result<()> {
    let wheel = catalog("Ctilde_5")?;
    let ps = space(5)?;
    let n = count_vector(&wheel)?;
    println!("nonzero entries of n(Ctilde_5):");
    for (i, x) in n.entries().iter().enumerate() {
        if !x.is_zero() {
            println!("  {} {x}", ps.get(i));
        }
    }

    let pentagram = catalog("R_5_12")?;
    let inner = count_vector(&pentagram)?.inner(&n)?;
    let petersen = pentagram.oplus(&wheel)?;
    println!("sum over psi of n(R_5_12) n(Ctilde_5) = {inner}");
    println!(
        "Petersen: {} vertices, girth {:?}, {} colorings",
        petersen.vertex_count(),
        petersen.girth(),
        count_closed(&petersen)
    );
    Ok(())
}
