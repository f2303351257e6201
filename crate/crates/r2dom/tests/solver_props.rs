mod common;

use common::graph;
use proptest::prelude::*;
use r2dom::generators::{gen_cograph, spider};
use r2dom::md::decompose;
use r2dom::oracle::brute_gamma_r2;
use r2dom::solver::{check_r2_function, solve, solve_tree, SolveOptions};
use r2dom::Graph;
use rand::rngs::StdRng;
use rand::SeedableRng;

proptest! {
    #![proptest_config(common::config(300))]

    #[test]
    fn any_small_graph_solves_exactly(g in graph(1, 12)) {
        let r = solve(&g).unwrap();
        prop_assert!(check_r2_function(&g, &r.witness));
        prop_assert_eq!(r.witness.weight(), r.gamma_r2);
        prop_assert_eq!(r.gamma_r2, brute_gamma_r2(&g, 20).unwrap().value);
    }

    #[test]
    fn union_is_additive(a in graph(1, 9), b in graph(1, 9)) {
        let u = solve(&Graph::disjoint_union(&a, &b)).unwrap().gamma_r2;
        prop_assert_eq!(u, solve(&a).unwrap().gamma_r2 + solve(&b).unwrap().gamma_r2);
    }

    #[test]
    fn deterministic(g in graph(1, 12)) {
        let a = serde_json::to_string(&solve(&g).unwrap()).unwrap();
        let b = serde_json::to_string(&solve(&g).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }
}

fn ops_per_vertex(g: &Graph) -> f64 {
    let tree = decompose(g);
    let r = solve_tree(g, &tree, &SolveOptions::default()).unwrap();
    assert!(check_r2_function(g, &r.witness));
    r.ops as f64 / g.n() as f64
}

#[test]
fn work_after_decomposition_is_linear() {
    let small = ops_per_vertex(&gen_cograph(10_000, &mut StdRng::seed_from_u64(1)));
    let large = ops_per_vertex(&gen_cograph(100_000, &mut StdRng::seed_from_u64(1)));
    assert!(large / small <= 2.0 && small / large <= 2.0, "{small} vs {large}");
    let small = ops_per_vertex(&spider(5_000, true, &Graph::empty(0)));
    let large = ops_per_vertex(&spider(50_000, true, &Graph::empty(0)));
    assert!(large / small <= 2.0 && small / large <= 2.0, "{small} vs {large}");
}
