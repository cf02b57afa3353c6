//! The closure battery over regenerated cones, or over the `*.cone` files of
//! a directory given as the argument.

use coloring_cones::closure::{verify_all, ConeSet, Status};

fn main() -> coloring_cones::Result<()> {
    let cones = match std::env::args().nth(1) {
        Some(dir) => ConeSet::load_dir(dir)?,
        None => ConeSet::regenerated()?,
    };
    println!("cones for d in {:?}", cones.arities());
    let reports = verify_all(&cones)?;
    for r in &reports {
        println!("{r}");
    }
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    println!(
        "{} pass, {} fail, {} skipped",
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skipped)
    );
    Ok(())
}
