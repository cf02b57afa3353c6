//! Extreme rays of `B_d`, matched against the catalog. Pass `6` as the
//! argument to run the larger `d = 6` computation.

use coloring_cones::catalog::{catalog, ray_names};
use coloring_cones::cone::cone_rays;
use coloring_cones::count::extension_counts;
use num_bigint::BigInt;

fn main() -> coloring_cones::Result<()> {
    let top: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    for d in 2..=top {
        let start = std::time::Instant::now();
        let c = cone_rays(d)?;
        println!(
            "B_{d}: {} rays, span dimension {}, {:.2?}",
            c.cone.len(),
            c.cone.span_dim(),
            start.elapsed()
        );
        for name in ray_names(d) {
            let n: Vec<BigInt> = extension_counts(&catalog(&name)?)?
                .into_iter()
                .map(BigInt::from)
                .collect();
            match c.cone.find_ray(&n) {
                Some(i) => println!("  {name} is ray {i}"),
                None => println!("  {name} is not a ray"),
            }
        }
    }
    Ok(())
}
