use r2dom::generators::{gen_cograph, gen_p4_class, relabel_random};
use r2dom::oracle::brute_gamma_r2;
use r2dom::recognize::GraphClass;
use r2dom::solver::{check_r2_function, solve_with, SolveOptions};
use r2dom::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const NO_ORACLE: SolveOptions = SolveOptions { oracle_limit: 0 };

fn instance(class: GraphClass, seed: u64) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = rng.gen_range(1..=14);
    let g = match class {
        GraphClass::Cograph => gen_cograph(n, &mut rng),
        _ => gen_p4_class(class, n, &mut rng).unwrap(),
    };
    if rng.gen() {
        relabel_random(&g, &mut rng)
    } else {
        g
    }
}

fn check_class(class: GraphClass, trials: u64) {
    for seed in 0..trials {
        let g = instance(class, seed);
        let res = solve_with(&g, &NO_ORACLE).unwrap_or_else(|e| panic!("{class:?} seed {seed}: {e} on {g:?}"));
        assert!(res.class.best <= class, "{class:?} seed {seed}: classified {:?}", res.class.best);
        assert!(check_r2_function(&g, &res.witness), "{class:?} seed {seed}: bad witness");
        assert_eq!(res.witness.weight(), res.gamma_r2, "{class:?} seed {seed}");
        let want = brute_gamma_r2(&g, 20).unwrap().value;
        assert_eq!(res.gamma_r2, want, "{class:?} seed {seed}: {g:?}");
    }
}

#[test]
fn cographs_match_oracle() {
    check_class(GraphClass::Cograph, 400);
}

#[test]
fn p4_sparse_match_oracle() {
    check_class(GraphClass::P4Sparse, 400);
}

#[test]
fn p4_tidy_match_oracle() {
    check_class(GraphClass::P4Tidy, 400);
}

#[test]
fn partner_limited_match_oracle() {
    check_class(GraphClass::PartnerLimited, 400);
}
