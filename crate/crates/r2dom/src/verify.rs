//! Formula-versus-oracle runs over generated instances.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::formulas::{combine_join, gamma_r2_split_hfree, gamma_r2_zoo, NodeSummary};
use crate::generators::{gen_cograph, gen_gnp, gen_p4_class, gen_split_hfree, relabel_random, spider};
use crate::graph::Graph;
use crate::oracle::{brute_gamma_r2, DEFAULT_ORACLE_LIMIT};
use crate::recognize::{split_levels, split_partition, FixedZoo, GraphClass, ZooKind};
use crate::solver::{check_r2_function, solve_with, SolveOptions};

#[derive(Debug, Clone, Serialize)]
pub struct RunRecord {
    pub index: usize,
    pub label: String,
    pub n: usize,
    pub seed: u64,
    pub formula: Option<u64>,
    pub oracle: Option<u64>,
    pub matched: bool,
    pub witness_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub formula_micros: u64,
    pub oracle_micros: u64,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct RunReport {
    pub records: Vec<RunRecord>,
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
    /// Records carrying a note (for split runs: case-table disagreements).
    pub flagged: usize,
}

impl RunReport {
    pub fn push(&mut self, mut rec: RunRecord) {
        rec.index = self.records.len();
        self.total += 1;
        if rec.matched && rec.witness_ok {
            self.matched += 1;
        } else {
            self.mismatched += 1;
        }
        self.flagged += usize::from(rec.note.is_some());
        self.records.push(rec);
    }

    pub fn ok(&self) -> bool {
        self.mismatched == 0
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &RunRecord> {
        self.records.iter().filter(|r| !(r.matched && r.witness_ok))
    }
}

/// Per-trial seed, so trial `i` can be replayed on its own.
pub fn trial_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed().as_micros() as u64)
}

fn oracle_value(g: &Graph) -> (Option<u64>, u64) {
    let (r, us) = timed(|| brute_gamma_r2(g, DEFAULT_ORACLE_LIMIT));
    (r.ok().map(|r| r.value), us)
}

/// Solver (formulas only, no oracle fallback) against the oracle.
pub fn check_graph(label: String, seed: u64, g: &Graph) -> RunRecord {
    let opts = SolveOptions { oracle_limit: 0 };
    let (res, formula_micros) = timed(|| solve_with(g, &opts));
    let (oracle, oracle_micros) = oracle_value(g);
    let (formula, witness_ok, note) = match res {
        Ok(r) => {
            let ok = check_r2_function(g, &r.witness) && r.witness.weight() == r.gamma_r2;
            (Some(r.gamma_r2), ok, None)
        }
        Err(e) => (None, false, Some(e.to_string())),
    };
    RunRecord {
        index: 0,
        label,
        n: g.n(),
        seed,
        formula,
        oracle,
        matched: formula.is_some() && formula == oracle,
        witness_ok,
        note,
        formula_micros,
        oracle_micros,
    }
}

/// Random instances of `class` with 1 to `n_max` vertices, randomly
/// relabeled half of the time.
pub fn verify_class(class: GraphClass, n_max: usize, trials: usize, seed: u64) -> RunReport {
    let mut report = RunReport::default();
    for i in 0..trials {
        let s = trial_seed(seed, i);
        let mut rng = StdRng::seed_from_u64(s);
        let n = rng.gen_range(1..=n_max.max(1));
        let g = match class {
            GraphClass::Cograph => gen_cograph(n, &mut rng),
            GraphClass::Unsupported => gen_gnp(n, 0.5, &mut rng),
            _ => gen_p4_class(class, n, &mut rng).expect("supported class"),
        };
        let g = if rng.gen() { relabel_random(&g, &mut rng) } else { g };
        report.push(check_graph(class.name().to_string(), s, &g));
    }
    report
}

/// Join rule on oracle-supplied operand summaries against the oracle on
/// the joined graph. Operands have 2 to `n_max` vertices.
pub fn verify_join(n_max: usize, trials: usize, seed: u64) -> RunReport {
    let mut report = RunReport::default();
    for i in 0..trials {
        let s = trial_seed(seed, i);
        let mut rng = StdRng::seed_from_u64(s);
        let mut side = || {
            let n = rng.gen_range(2..=n_max.max(2));
            let p = rng.gen_range(0.1..0.9);
            gen_gnp(n, p, &mut rng)
        };
        let (a, b) = (side(), side());
        let j = Graph::join(&a, &b);
        let (res, formula_micros) = timed(|| {
            let sa = NodeSummary::from_oracle(&a, DEFAULT_ORACLE_LIMIT).ok()?;
            let sb = NodeSummary::from_oracle(&b, DEFAULT_ORACLE_LIMIT).ok()?;
            combine_join(&sa, &sb).ok()
        });
        let (oracle, oracle_micros) = oracle_value(&j);
        let formula = res.as_ref().map(|s| s.gamma_r2);
        report.push(RunRecord {
            index: 0,
            label: format!("join {}+{}", a.n(), b.n()),
            n: j.n(),
            seed: s,
            formula,
            oracle,
            matched: formula.is_some() && formula == oracle,
            witness_ok: res.is_some_and(|s| j.is_r2_function(&s.witness) && s.witness.weight() == s.gamma_r2),
            note: None,
            formula_micros,
            oracle_micros,
        });
    }
    report
}

fn check_zoo(kind: ZooKind) -> RunRecord {
    let g = crate::recognize::zoo_graph(&kind);
    let (res, formula_micros) = timed(|| gamma_r2_zoo(&kind));
    let (oracle, oracle_micros) = oracle_value(&g);
    let formula = res.as_ref().ok().map(|s| s.gamma_r2);
    RunRecord {
        index: 0,
        label: kind.name(),
        n: g.n(),
        seed: 0,
        formula,
        oracle,
        matched: formula.is_some() && formula == oracle,
        witness_ok: res.is_ok_and(|s| g.is_r2_function(&s.witness) && s.witness.weight() == s.gamma_r2),
        note: None,
        formula_micros,
        oracle_micros,
    }
}

/// Every fixed zoo template and its complement.
pub fn verify_zoo_fixed() -> RunReport {
    let mut report = RunReport::default();
    for t in FixedZoo::ALL {
        report.push(check_zoo(ZooKind::Fixed { template: t }));
        report.push(check_zoo(ZooKind::Complement { of: Box::new(ZooKind::Fixed { template: t }) }));
    }
    report
}

/// Paths and cycles up to `n_max` vertices, through the full solver.
pub fn verify_paths_cycles(n_max: usize) -> RunReport {
    let mut report = RunReport::default();
    for n in 1..=n_max {
        report.push(check_graph(format!("P{n}"), 0, &Graph::path(n)));
        if n >= 3 {
            report.push(check_graph(format!("C{n}"), 0, &Graph::cycle(n)));
        }
    }
    report
}

/// Thin and thick spiders with 2 to `r_max` legs and heads of zero, one
/// and four (C4) vertices, kept to `n_max` vertices.
pub fn verify_spiders(r_max: usize, n_max: usize) -> RunReport {
    let mut report = RunReport::default();
    for r in 2..=r_max {
        for thin in [true, false] {
            for head in [Graph::empty(0), Graph::empty(1), Graph::cycle(4)] {
                if 2 * r + head.n() > n_max {
                    continue;
                }
                let label = format!("{} spider r={r} |H|={}", if thin { "thin" } else { "thick" }, head.n());
                report.push(check_graph(label, 0, &spider(r, thin, &head)));
            }
        }
    }
    report
}

/// Prime H-free split graphs with 5 to `n_max` vertices: the exact
/// evaluator against the oracle, the value inside the `|A_1| + 1 ..=
/// |A_1| + 3` window, and case-table disagreements flagged with the case
/// label.
pub fn verify_split(n_max: usize, trials: usize, seed: u64) -> RunReport {
    let mut report = RunReport::default();
    for i in 0..trials {
        let s = trial_seed(seed, i);
        let mut rng = StdRng::seed_from_u64(s);
        let n = rng.gen_range(5..=n_max.max(5));
        let g = match gen_split_hfree(n, &mut rng) {
            Ok(g) => g,
            Err(e) => {
                report.push(RunRecord {
                    index: 0,
                    label: "split".into(),
                    n,
                    seed: s,
                    formula: None,
                    oracle: None,
                    matched: false,
                    witness_ok: false,
                    note: Some(e.to_string()),
                    formula_micros: 0,
                    oracle_micros: 0,
                });
                continue;
            }
        };
        let (res, formula_micros) = timed(|| gamma_r2_split_hfree(&g));
        let (oracle, oracle_micros) = oracle_value(&g);
        let part = split_partition(&g).expect("generator output is split");
        let a1 = split_levels(&g, &part).a_len(1) as u64;
        let (formula, witness_ok, note) = match &res {
            Ok(sum) => {
                let v = sum.summary.gamma_r2;
                let mut notes = Vec::new();
                if !sum.table_agrees {
                    notes.push(format!("case table gives {} ({}), exact {}", sum.table.value, sum.table.case, v));
                }
                if !sum.table.exclusive() {
                    notes.push(format!("cases not exclusive: {:?} {:?}", sum.table.plus_one, sum.table.plus_two));
                }
                if !(a1 < v && v <= a1 + 3) {
                    notes.push(format!("value {v} outside [{}, {}]", a1 + 1, a1 + 3));
                }
                let ok = g.is_r2_function(&sum.summary.witness) && sum.summary.witness.weight() == v;
                (Some(v), ok && a1 < v && v <= a1 + 3, (!notes.is_empty()).then(|| notes.join("; ")))
            }
            Err(e) => (None, false, Some(e.to_string())),
        };
        report.push(RunRecord {
            index: 0,
            label: res.as_ref().map_or_else(|_| "split".into(), |s| format!("split {}", s.table.case)),
            n,
            seed: s,
            formula,
            oracle,
            matched: formula.is_some() && formula == oracle,
            witness_ok,
            note,
            formula_micros,
            oracle_micros,
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_match() {
        assert!(verify_class(GraphClass::P4Tidy, 10, 30, 1).ok());
        assert!(verify_join(4, 20, 1).ok());
        assert!(verify_paths_cycles(9).ok());
        let r = verify_split(9, 5, 3);
        assert_eq!(r.total, 5);
        assert!(r.ok());
    }

    #[test]
    fn unsupported_graphs_are_reported() {
        let mut report = RunReport::default();
        let g = Graph::from_edge_list(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0), (0, 4)])
            .unwrap();
        report.push(check_graph("c8 chord".into(), 0, &g));
        assert!(!report.ok());
        assert_eq!(report.mismatches().count(), 1);
    }
}
