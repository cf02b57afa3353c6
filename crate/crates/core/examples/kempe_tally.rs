//! Kempe chain signatures of every coloring and the witness vector they
//! produce: `A_ij y = n_G` for every color pair.

use coloring_cones::catalog::catalog;
use coloring_cones::count::extension_counts;
use coloring_cones::kempe::kempe_tally;
use coloring_cones::signature::{signature_space, COLOR_PAIRS};

fn main() -> coloring_cones::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "R_5_11".into());
    let g = catalog(&name)?;
    let ss = signature_space(g.arity())?;
    let tally = kempe_tally(&g, 1, 2)?;
    println!("{name}: signatures occurring for colors 1, 2");
    for s in tally.signatures() {
        println!(
            "  {:<24} n_G,S = {}",
            ss.get(s).to_string(),
            tally.witness(s)?
        );
    }
    let y = tally.witness_vector()?;
    let n = extension_counts(&g)?;
    for (p, (i, j)) in COLOR_PAIRS.iter().enumerate() {
        println!("A_{i}{j} y == n_G: {}", ss.apply(p, &y) == n);
    }
    Ok(())
}
