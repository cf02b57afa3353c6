//! `B'_5` drops the pentagram ray from `B_5`; exactly one of its facets is
//! new, and it is the conjectured inequality.

use coloring_cones::algebra::conjecture_functional;
use coloring_cones::cone::{bprime5, cone_rays};

fn main() -> coloring_cones::Result<()> {
    let b5 = cone_rays(5)?.cone;
    let bp = bprime5(&b5)?;
    println!("B_5: {} rays, {} facets", b5.len(), b5.facets()?.len());
    println!("B'_5: {} rays, {} facets", bp.len(), bp.facets()?.len());
    let new = bp.new_facets(&b5)?;
    println!("new facets: {}", new.len());
    let f = conjecture_functional();
    for facet in &new {
        println!(
            "  tight on {} rays, equals the conjectured functional on the span: {}",
            facet.tight.len(),
            bp.agrees_on_span(&facet.functional, &f)
        );
    }
    Ok(())
}
