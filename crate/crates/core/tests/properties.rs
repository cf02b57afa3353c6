mod common;

use coloring_cones::algebra::{vec_flip, vec_gamma, vec_rotate};
use coloring_cones::count::{count_closed, count_vector, extension_counts, inner_counts};
use coloring_cones::format::{graph_to_string, parse_graph};
use coloring_cones::search::{generate, SearchConfig};
use proptest::prelude::*;

fn graph(
    d: usize,
    seed: u64,
    index: usize,
    max_vertices: usize,
) -> coloring_cones::graph::NearCubicGraph {
    let config = SearchConfig {
        d,
        seed,
        max_vertices,
        ..SearchConfig::default()
    };
    generate(&config, index).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn counting_commutes_with_rotation_and_flip(
        d in 2usize..=6, seed in 0u64..1000, index in 0usize..50, t in 0usize..6,
    ) {
        let g = graph(d, seed, index, 18);
        let x = count_vector(&g).unwrap();
        prop_assert_eq!(count_vector(&g.rotate(t)).unwrap(), vec_rotate(&x, t));
        prop_assert_eq!(count_vector(&g.flip()).unwrap(), vec_flip(&x));
    }

    #[test]
    fn counting_commutes_with_gluing(
        d1 in 2usize..=5, d2 in 2usize..=5, k in 0usize..=5, seed in 0u64..1000,
    ) {
        prop_assume!(k <= d1.min(d2) && d1 + d2 - 2 * k >= 2);
        let a = graph(d1, seed, 0, 10);
        let b = graph(d2, seed, 1, 10);
        if let Ok(g) = a.glue(&b, k) {
            let glued = vec_gamma(&count_vector(&a).unwrap(), &count_vector(&b).unwrap(), k).unwrap();
            prop_assert_eq!(count_vector(&g).unwrap(), glued);
        }
    }

    #[test]
    fn closed_count_is_the_inner_product(d in 2usize..=5, seed in 0u64..1000) {
        let a = graph(d, seed, 0, 12);
        let b = graph(d, seed, 1, 12);
        let h = a.oplus(&b).unwrap();
        prop_assert_eq!(h.genus(), Some(0));
        prop_assert_eq!(
            count_closed(&h),
            inner_counts(&extension_counts(&a).unwrap(), &extension_counts(&b).unwrap())
        );
    }

    #[test]
    fn generated_graphs_survive_the_file_format(d in 2usize..=6, seed in 0u64..1000) {
        let g = graph(d, seed, 0, 24);
        prop_assert_eq!(parse_graph(&graph_to_string(&g)).unwrap(), g);
    }
}

#[test]
fn corpus_is_plane_and_bounded() {
    let graphs = common::corpus(7, 10);
    assert_eq!(graphs.len(), 50);
    for g in &graphs {
        assert!(g.validate().is_ok());
        assert!(g.internal_vertices() <= 24);
    }
}
