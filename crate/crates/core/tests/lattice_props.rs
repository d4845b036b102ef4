use plates_core::lattice::{
    c_polytope, diplo_simplex_generators, expand_series, fit_numerator, growth_series,
    lumping_projection, orbit_points, root_edge_graph, LatticePointSet,
};
use plates_core::perm::{wreath_product, Permutation};
use proptest::prelude::*;

fn relabeling(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|line| Permutation::from_images(&line).unwrap())
}

fn blocks() -> Vec<Vec<usize>> {
    vec![vec![1, 2], vec![3, 4], vec![5, 6]]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn growth_ignores_coordinate_order(g in relabeling(4)) {
        let gens = diplo_simplex_generators(3);
        let moved: Vec<Vec<i64>> = gens.iter().map(|v| g.act_on_vector(v)).collect();
        let a = growth_series(&gens, 5).unwrap();
        let b = growth_series(&moved, 5).unwrap();
        prop_assert_eq!(a.counts, b.counts);
    }

    #[test]
    fn orbits_lie_on_a_sphere(v in prop::collection::vec(-3i64..=3, 6)) {
        let orbit = orbit_points(&v, &wreath_product(2, 3)).unwrap();
        prop_assert!(orbit.on_common_sphere());
        prop_assert_eq!(48 % orbit.len(), 0);
    }

    #[test]
    fn lumping_commutes_with_block_action(idx in 0usize..48, v in prop::collection::vec(0i64..3, 6)) {
        let group = wreath_product(2, 3);
        let g = &group[idx];
        // The block permutation induced by g.
        let sigma: Vec<usize> = blocks().iter().map(|b| (g.apply(b[0]) - 1) / 2 + 1).collect();
        let sigma = Permutation::from_images(&sigma).unwrap();
        let lump = |p: Vec<i64>| {
            let set = LatticePointSet::new(6, [p]).unwrap();
            let out = lumping_projection(&set, &blocks()).unwrap();
            out.points.into_iter().next().unwrap()
        };
        prop_assert_eq!(lump(g.act_on_vector(&v)), sigma.act_on_vector(&lump(v)));
    }

    #[test]
    fn series_fit_inverts_expansion(num in prop::collection::vec(-9i64..=9, 1..6), e in 0u32..6) {
        let mut num = num;
        while num.len() > 1 && *num.last().unwrap() == 0 {
            num.pop();
        }
        prop_assume!(num.iter().any(|&c| c != 0));
        let counts = expand_series(&num, e, num.len() + 4);
        prop_assert_eq!(fit_numerator(&counts, e), num);
    }
}

#[test]
fn root_edge_graph_is_preserved_by_the_group() {
    let pts = c_polytope();
    let graph = root_edge_graph(&pts);
    let degree = graph.neighbors(0).len();
    for g in wreath_product(2, 3) {
        for i in 0..graph.vertices.len() {
            let gi = graph
                .index_of(&g.act_on_vector(&graph.vertices[i]))
                .unwrap();
            assert_eq!(graph.neighbors(i).len(), degree);
            for j in graph.neighbors(i) {
                let gj = graph
                    .index_of(&g.act_on_vector(&graph.vertices[j]))
                    .unwrap();
                assert!(graph.neighbors(gi).contains(&gj));
            }
        }
    }
}
