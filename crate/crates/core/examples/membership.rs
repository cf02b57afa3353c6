//! Certified membership in `B'_5`: coefficients when inside, a separating
//! functional when outside.

use coloring_cones::algebra::{conjecture_margin, membership, MembershipCertificate};
use coloring_cones::catalog::catalog;
use coloring_cones::cone::cached_bprime5;
use coloring_cones::count::count_vector;
use num_traits::Zero;

fn main() -> coloring_cones::Result<()> {
    let cone = cached_bprime5()?;
    for name in ["Ctilde_5", "R_5_3", "R_5_11", "R_5_12"] {
        let x = count_vector(&catalog(name)?)?;
        let cert = membership(&x, cone)?;
        let verdict = match &cert {
            MembershipCertificate::Inside(c) => {
                format!(
                    "INSIDE using {} rays",
                    c.iter().filter(|v| !v.is_zero()).count()
                )
            }
            MembershipCertificate::Outside(f) => {
                format!(
                    "OUTSIDE, functional with {} nonzero entries",
                    f.iter().filter(|v| !v.is_zero()).count()
                )
            }
        };
        println!(
            "{name:<9} margin {:>4}  {verdict}  (verified: {})",
            conjecture_margin(&x)?,
            cert.verify(&x, cone)
        );
    }
    Ok(())
}
