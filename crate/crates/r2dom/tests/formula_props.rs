mod common;

use common::graph;
use proptest::prelude::*;
use r2dom::formulas::{
    combine_join, gamma_r2_complement_special, gamma_r2_split_hfree, gamma_r2_zoo, p5u_is_three, zoo_value,
    NodeSummary,
};
use r2dom::generators::gen_split_hfree;
use r2dom::oracle::{brute_domination, brute_gamma_r2, brute_gamma_r2_all};
use r2dom::recognize::{has_connected_pendant, split_levels, split_partition, ZooKind};
use r2dom::{DomCap, Graph};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn gamma(g: &Graph) -> u64 {
    brute_gamma_r2(g, 20).unwrap().value
}

proptest! {
    #![proptest_config(common::config(300))]

    #[test]
    fn pendant_bound(g in graph(1, 10)) {
        let base = gamma(&g);
        for v in 0..g.n() as u32 {
            let h = gamma(&g.add_pendant(v).unwrap());
            prop_assert!(base <= h && h <= base + 1, "v = {}: {} vs {}", v, base, h);
        }
    }

    #[test]
    fn stem_bound(g in graph(2, 9), mask: u16) {
        prop_assume!(g.degrees().iter().all(|&d| d != 1));
        let s: Vec<u32> = (0..g.n() as u32).filter(|&v| mask >> v & 1 == 1).collect();
        let mut h = g.clone();
        for &v in &s {
            h = h.add_pendant(v).unwrap();
        }
        prop_assert!(gamma(&h) > s.len() as u64);
    }

    #[test]
    fn twin_bounds(g in graph(1, 8), v in 0usize..8, true_twin: bool) {
        let v = (v % g.n()) as u32;
        let all = brute_gamma_r2_all(&g).unwrap();
        let base = all.value;
        let h = gamma(&g.add_twin(v, true_twin).unwrap());
        prop_assert!(base <= h && h <= base + 1);
        if all.all_optimal.unwrap().iter().any(|f| f.get(v) != 1) {
            prop_assert_eq!(h, base);
        }
    }

    #[test]
    fn join_capped_contract(a in graph(1, 5), b in graph(1, 5)) {
        let j = Graph::join(&a, &b);
        let universal = a.has_universal_vertex().is_some() || b.has_universal_vertex().is_some();
        let d = brute_domination(&j, 20).unwrap();
        prop_assert_eq!(DomCap::from_value(d), if universal { DomCap::One } else { DomCap::Two });
    }

    #[test]
    fn join_rule_with_oracle_operands(a in graph(2, 6), b in graph(2, 6)) {
        let sa = NodeSummary::from_oracle(&a, 20).unwrap();
        let sb = NodeSummary::from_oracle(&b, 20).unwrap();
        let j = Graph::join(&a, &b);
        let s = combine_join(&sa, &sb).unwrap();
        prop_assert_eq!(s.gamma_r2, gamma(&j));
        prop_assert!(j.is_r2_function(&s.witness));
    }

    #[test]
    fn complement_of_pendant_graph_is_three(g in graph(3, 10)) {
        prop_assume!(has_connected_pendant(&g));
        let (v, f) = gamma_r2_complement_special(&g).unwrap();
        prop_assert_eq!(v, 3);
        let co = g.complement();
        prop_assert!(co.is_r2_function(&f));
        prop_assert_eq!(gamma(&co), 3);
    }
}

#[test]
fn complement_special_examples() {
    assert_eq!(gamma_r2_complement_special(&Graph::path(6)).map(|x| x.0), Some(3));
    let star = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
    assert_eq!(gamma_r2_complement_special(&star).map(|x| x.0), Some(3));
    assert_eq!(gamma_r2_complement_special(&Graph::cycle(6)), None);
}

#[test]
fn p5u_patterns_locked_against_oracle() {
    for mask in 1u8..31 {
        let attachments: Vec<u8> = (0..5).filter(|i| mask >> i & 1 == 1).collect();
        let kind = ZooKind::P5u { attachments: attachments.clone() };
        let g = r2dom::generators::zoo_instance(&kind);
        let want = gamma(&g);
        assert_eq!(p5u_is_three(&attachments), want == 3, "{attachments:?}");
        assert_eq!(zoo_value(&kind), Some(want), "{attachments:?}");
        let s = gamma_r2_zoo(&kind).unwrap();
        assert_eq!(s.gamma_r2, want);
        assert!(g.is_r2_function(&s.witness));
    }
}

#[test]
fn split_values_within_bounds() {
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..150 {
        let n = rand::Rng::gen_range(&mut rng, 5..=14);
        let g = gen_split_hfree(n, &mut rng).unwrap();
        let s = gamma_r2_split_hfree(&g).unwrap();
        let part = split_partition(&g).unwrap();
        let a1 = split_levels(&g, &part).a_len(1) as u64;
        let v = s.summary.gamma_r2;
        assert_eq!(v, gamma(&g), "{g:?}");
        assert!(a1 < v && v <= a1 + 3, "{g:?}");
        assert!(g.is_r2_function(&s.summary.witness));
    }
}
