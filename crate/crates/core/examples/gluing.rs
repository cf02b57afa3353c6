//! `γ_k`, rotation and flip act on graphs and count vectors alike.

use coloring_cones::algebra::{vec_flip, vec_gamma, vec_rotate};
use coloring_cones::catalog::catalog;
use coloring_cones::count::count_vector;

fn main() -> coloring_cones::Result<()> {
    let a = catalog("R_4_3")?;
    let b = catalog("Ctilde_5")?;
    let (na, nb) = (count_vector(&a)?, count_vector(&b)?);
    for k in 0..=3 {
        let g = a.glue(&b, k)?;
        let direct = count_vector(&g)?;
        println!(
            "gamma_{k}: d = {}, {} vertices, genus {:?}, n commutes: {}",
            g.arity(),
            g.internal_vertices(),
            g.genus(),
            direct == vec_gamma(&na, &nb, k)?
        );
    }
    for t in 0..5 {
        println!(
            "r_{t}: n commutes: {}",
            count_vector(&b.rotate(t))? == vec_rotate(&nb, t)
        );
    }
    println!(
        "f: n commutes: {}",
        count_vector(&a.flip())? == vec_flip(&na)
    );
    Ok(())
}
