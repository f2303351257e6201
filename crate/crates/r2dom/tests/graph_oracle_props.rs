mod common;

use common::{dumb_gamma_r2, graph};
use proptest::prelude::*;
use r2dom::oracle::{brute_domination, brute_gamma_r2, brute_gamma_r2_all};
use r2dom::{DomCap, Graph};

proptest! {
    #![proptest_config(common::config(300))]

    #[test]
    fn complement_is_an_involution(g in graph(0, 12)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.m() + g.complement().m(), (g.n() * g.n().saturating_sub(1) / 2) as u64);
    }

    #[test]
    fn gamma_two_predicate_matches_oracle(g in graph(2, 10)) {
        let want = brute_gamma_r2(&g, 20).unwrap().value == 2;
        prop_assert_eq!(g.gamma_r2_is_two().unwrap(), want);
        if let Some(f) = g.gamma_r2_two_witness() {
            prop_assert!(g.is_r2_function(&f));
            prop_assert_eq!(f.weight(), 2);
        }
    }

    #[test]
    fn capped_domination_matches_oracle(g in graph(1, 10)) {
        let d = brute_domination(&g, 20).unwrap();
        prop_assert_eq!(g.domination_at_most_two(), DomCap::from_value(d));
        if let Some((a, b)) = g.dominating_pair() {
            prop_assert!(d <= 2);
            for v in 0..g.n() as u32 {
                prop_assert!(v == a || v == b || g.has_edge(v, a) || g.has_edge(v, b));
            }
        }
    }

    #[test]
    fn twins_share_outside_neighborhoods(g in graph(1, 10), v in 0usize..10, true_twin: bool) {
        let v = (v % g.n()) as u32;
        let h = g.add_twin(v, true_twin).unwrap();
        let w = g.n() as u32;
        prop_assert_eq!(h.has_edge(v, w), true_twin);
        for x in 0..g.n() as u32 {
            if x != v {
                prop_assert_eq!(h.has_edge(x, v), h.has_edge(x, w));
            }
        }
    }

    #[test]
    fn oracle_matches_plain_enumeration(g in graph(1, 8)) {
        let r = brute_gamma_r2(&g, 20).unwrap();
        prop_assert_eq!(r.value, dumb_gamma_r2(&g));
        prop_assert!(g.is_r2_function(&r.witness));
        prop_assert_eq!(r.witness.weight(), r.value);
        prop_assert!(r.nodes_explored <= 3u64.pow(g.n() as u32));
    }
}

#[test]
fn all_optimal_functions_are_optimal() {
    let g = Graph::cycle(6);
    let r = brute_gamma_r2_all(&g).unwrap();
    let all = r.all_optimal.unwrap();
    assert_eq!(r.value, 3);
    assert!(all.len() > 1);
    for f in &all {
        assert!(g.is_r2_function(f));
        assert_eq!(f.weight(), 3);
    }
}
