//! Writes a graph, its count vector and `B_4` in the text formats read by
//! the command-line tool, then reads them back.

use coloring_cones::catalog::catalog;
use coloring_cones::cone::cone_rays;
use coloring_cones::count::count_vector;
use coloring_cones::format::{
    cone_to_string, graph_to_string, parse_cone, parse_graph, parse_vector, vector_to_string,
};

fn main() -> coloring_cones::Result<()> {
    let g = catalog("R_4_3")?;
    let text = graph_to_string(&g);
    print!("{text}");
    assert_eq!(parse_graph(&text)?, g);

    let x = count_vector(&g)?;
    let text = vector_to_string(&x)?;
    print!("{text}");
    assert_eq!(parse_vector(&text)?, x);

    let c = cone_rays(4)?.cone;
    let text = cone_to_string(&c);
    print!("{text}");
    assert_eq!(parse_cone(&text)?, c);

    match parse_graph("nearcubic 1\nd 2\nvertices 0\nedge 0 0 7\n") {
        Ok(_) => println!("unexpected success"),
        Err(e) => println!("bad file: {e}"),
    }
    Ok(())
}
