#![allow(dead_code)]

use proptest::prelude::*;
use r2dom::{Graph, R2Function};

pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for a in 0..n {
        for b in a + 1..n {
            if bits[k] {
                edges.push((a, b));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Random labeled graph with `lo..=hi` vertices.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        (Just(n), prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2))
            .prop_map(|(n, bits)| from_bits(n, &bits))
    })
}

/// Plain 3^n enumeration, independent of the branch-and-bound oracle.
pub fn dumb_gamma_r2(g: &Graph) -> u64 {
    let n = g.n();
    let mut best = u64::MAX;
    let mut vals = vec![0u8; n];
    loop {
        let w: u64 = vals.iter().map(|&x| x as u64).sum();
        if w < best && g.is_r2_function(&R2Function::from_values(vals.clone()).unwrap()) {
            best = w;
        }
        let mut i = 0;
        loop {
            if i == n {
                return best;
            }
            vals[i] += 1;
            if vals[i] < 3 {
                break;
            }
            vals[i] = 0;
            i += 1;
        }
    }
}

/// Case count with failure persistence off (integration tests have no
/// source root for regression files).
pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(cases) }
}
