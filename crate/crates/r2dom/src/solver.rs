//! Bottom-up evaluation over the modular decomposition tree.
//!
//! Every node gets a [`Core`] (value, capped domination, universal vertex,
//! dominating pair) and a plan saying how its minimum function is built
//! from its children. Plans are expanded top-down once at the end, so the
//! witness costs one pass over the tree.

use std::borrow::Cow;

use serde::Serialize;
use thiserror::Error;

use crate::formulas::{
    join_domination, join_rule, prime_domination, spider_pattern_value, spider_plan, split_summary,
    union_domination, zoo_summary, Core, JoinRule, SpiderPlan,
};
use crate::graph::{DomCap, Graph, R2Function, Vertex};
use crate::md::{decompose, MdTree, NodeKind};
use crate::oracle::{brute_gamma_r2, DEFAULT_ORACLE_LIMIT};
use crate::recognize::{classify_tree, ClassLabel, PrimeAnalysis, PrimeKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Largest prime node handed to exhaustive search when no formula
    /// applies.
    pub oracle_limit: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { oracle_limit: DEFAULT_ORACLE_LIMIT }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has no vertices")]
    Empty,
    #[error(
        "unsupported instance: {reason}; the node has {size} vertices, above the oracle limit {limit}"
    )]
    Unsupported { node: usize, min_vertex: Vertex, size: usize, limit: usize, reason: String },
}

/// What a node contributes to the witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Use {
    /// 1 on the child's representative.
    One,
    /// 2 on the child's representative.
    Two,
    /// 1 on each vertex of the child's dominating pair.
    Pair,
    /// The child's own minimum function.
    Min,
    /// 2 on a single-vertex child, otherwise its minimum function.
    Saturate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Plan {
    Leaf(Vertex),
    /// Minimum function of every child.
    AllChildren,
    /// Series node: the join rule picks at most three children.
    Join(JoinRule),
    /// Child positions with their use; unlisted children get 0.
    Children(Vec<(usize, Use)>),
    /// Explicit values on the node's vertices.
    Explicit(Vec<(Vertex, u8)>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub node: usize,
    pub kind: NodeKind,
    pub min_vertex: Vertex,
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<Box<PrimeKind>>,
    pub rule: Cow<'static, str>,
    pub gamma_r2: u64,
    pub gamma_capped: DomCap,
    pub has_universal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeOutcome {
    pub core: Core,
    pub plan: Plan,
    pub entry: TraceEntry,
    pub used_oracle: bool,
    pub table_mismatch: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveResult {
    pub gamma_r2: u64,
    pub class: ClassLabel,
    pub witness: R2Function,
    pub trace: Vec<TraceEntry>,
    /// Prime nodes evaluated by exhaustive search.
    pub oracle_nodes: usize,
    /// Prime split nodes where the case table disagrees with the exact value.
    pub split_table_mismatches: usize,
    /// Work units after decomposition: children visited, quotient spans
    /// scanned and witness entries written.
    pub ops: u64,
}

pub fn check_r2_function(g: &Graph, f: &R2Function) -> bool {
    f.len() == g.n() && g.is_r2_function(f)
}

pub fn solve(g: &Graph) -> Result<SolveResult, SolveError> {
    solve_with(g, &SolveOptions::default())
}

pub fn solve_with(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    if g.n() == 0 {
        return Err(SolveError::Empty);
    }
    let tree = decompose(g);
    solve_tree(g, &tree, opts)
}

/// Solve with a precomputed decomposition of `g`.
pub fn solve_tree(g: &Graph, tree: &MdTree, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    let (class, analyses) = classify_tree(g, tree);
    // slot per node into `analyses`, so cograph nodes cost a word
    let mut slot = vec![u32::MAX; tree.len()];
    for (k, (i, _)) in analyses.iter().enumerate() {
        slot[*i] = k as u32;
    }
    let mut cores: Vec<Option<Core>> = vec![None; tree.len()];
    let mut plans: Vec<Option<Plan>> = vec![None; tree.len()];
    let mut trace = Vec::with_capacity(tree.len());
    let mut oracle_nodes = 0;
    let mut split_table_mismatches = 0;
    let mut ops = 0u64;
    let mut child_cores: Vec<Core> = Vec::new();
    for i in tree.bottom_up() {
        let nd = tree.node(i);
        ops += 1 + nd.children.len() as u64 + nd.quotient.as_deref().map_or(0, |q| q.span_count() as u64);
        child_cores.clear();
        child_cores.extend(nd.children.iter().map(|&c| cores[c].expect("children first")));
        let out = summarize_node(g, tree, i, &child_cores, analyses.get(slot[i] as usize).map(|(_, a)| a), opts)?;
        oracle_nodes += usize::from(out.used_oracle);
        split_table_mismatches += usize::from(out.table_mismatch);
        cores[i] = Some(out.core);
        plans[i] = Some(out.plan);
        trace.push(out.entry);
    }
    let root = tree.root();
    let (witness, steps) = expand(g.n(), tree, &cores, &plans);
    ops += steps;
    let gamma_r2 = cores[root].expect("root evaluated").gamma;
    debug_assert_eq!(witness.weight(), gamma_r2);
    Ok(SolveResult { gamma_r2, class, witness, trace, oracle_nodes, split_table_mismatches, ops })
}

fn expand(n: usize, tree: &MdTree, cores: &[Option<Core>], plans: &[Option<Plan>]) -> (R2Function, u64) {
    let mut values = vec![0u8; n];
    let mut stack = vec![tree.root()];
    let mut steps = 0u64;
    while let Some(i) = stack.pop() {
        steps += 1;
        let children = &tree.node(i).children;
        match plans[i].as_ref().expect("planned") {
            Plan::Leaf(v) => values[*v as usize] = 1,
            Plan::AllChildren => stack.extend(children.iter().copied()),
            Plan::Explicit(list) => {
                steps += list.len() as u64;
                for &(v, x) in list {
                    values[v as usize] = x;
                }
            }
            Plan::Join(rule) => {
                let uses = join_uses(*rule);
                for &(pos, u) in uses.iter().flatten() {
                    steps += 1;
                    apply_use(&mut values, &mut stack, cores, children[pos], u);
                }
            }
            Plan::Children(list) => {
                steps += list.len() as u64;
                for &(pos, u) in list {
                    apply_use(&mut values, &mut stack, cores, children[pos], u);
                }
            }
        }
    }
    (R2Function::from_values(values).expect("values in range"), steps)
}

fn join_uses(rule: JoinRule) -> [Option<(usize, Use)>; 3] {
    match rule {
        JoinRule::TwoOnSingleton { child } => [Some((child, Use::Two)), None, None],
        JoinRule::MinOf { child } => [Some((child, Use::Min)), None, None],
        JoinRule::OnesOnThree { children: [a, b, c] } => [Some((a, Use::One)), Some((b, Use::One)), Some((c, Use::One))],
        JoinRule::PairPlusOne { child, other } => [Some((child, Use::Pair)), Some((other, Use::One)), None],
        JoinRule::TwoTwo { a, b } => [Some((a, Use::Two)), Some((b, Use::Two)), None],
    }
}

fn apply_use(values: &mut [u8], stack: &mut Vec<usize>, cores: &[Option<Core>], c: usize, u: Use) {
    let core = cores[c].expect("evaluated");
    match u {
        Use::One => values[core.rep as usize] = 1,
        Use::Two => values[core.rep as usize] = 2,
        Use::Pair => {
            let (x, y) = core.pair.expect("pair use needs a dominating pair");
            values[x as usize] = 1;
            values[y as usize] = 1;
        }
        Use::Min => stack.push(c),
        Use::Saturate if core.n == 1 => values[core.rep as usize] = 2,
        Use::Saturate => stack.push(c),
    }
}

/// One step of the recursion: the summary and plan of `node` given the
/// cores of its children (in child order).
pub fn summarize_node(
    g: &Graph,
    tree: &MdTree,
    node: usize,
    children: &[Core],
    analysis: Option<&PrimeAnalysis>,
    opts: &SolveOptions,
) -> Result<NodeOutcome, SolveError> {
    let nd = tree.node(node);
    let rep = nd.min_vertex;
    let mut entry = TraceEntry {
        node,
        kind: nd.kind,
        min_vertex: rep,
        size: nd.len(),
        prime: None,
        rule: Cow::Borrowed(""),
        gamma_r2: 0,
        gamma_capped: DomCap::One,
        has_universal: false,
        note: None,
    };
    let mut used_oracle = false;
    let mut table_mismatch = false;
    let (core, plan) = match nd.kind {
        NodeKind::Leaf => {
            entry.rule = Cow::Borrowed("leaf");
            (Core::leaf(rep), Plan::Leaf(rep))
        }
        NodeKind::Parallel => {
            entry.rule = Cow::Borrowed("union");
            let (capped, pair) = union_domination(children);
            let gamma = children.iter().map(|c| c.gamma).sum();
            (Core { n: nd.len(), gamma, capped, universal: None, pair, rep }, Plan::AllChildren)
        }
        NodeKind::Series => {
            let (gamma, rule) = join_rule(children);
            let (capped, universal, pair) = join_domination(children);
            entry.rule = Cow::Borrowed(match rule {
                JoinRule::TwoOnSingleton { .. } => "join:two_on_singleton",
                JoinRule::MinOf { .. } => "join:min_of_side",
                JoinRule::OnesOnThree { .. } => "join:ones_on_three",
                JoinRule::PairPlusOne { .. } => "join:pair_plus_one",
                JoinRule::TwoTwo { .. } => "join:two_two",
            });
            (Core { n: nd.len(), gamma, capped, universal, pair, rep }, Plan::Join(rule))
        }
        NodeKind::Prime => {
            let pa = analysis.expect("prime nodes are analyzed");
            entry.prime = Some(Box::new(pa.kind.clone()));
            let q = nd.quotient.as_deref().expect("prime node has a quotient");
            let reps: Vec<Vertex> = children.iter().map(|c| c.rep).collect();
            let on_reps = |f: &R2Function| -> Plan {
                Plan::Explicit(
                    f.values().iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, &x)| (reps[i], x)).collect(),
                )
            };
            let (gamma, plan, capped, pair) = match &pa.kind {
                PrimeKind::Spider { thin, r, pattern } => {
                    let sp = pa.spider.as_ref().expect("spider partition");
                    let info = |x: &Vertex| (children[*x as usize].n, children[*x as usize].gamma);
                    let s: Vec<(usize, u64)> = sp.s.iter().map(info).collect();
                    let c: Vec<(usize, u64)> = sp.c.iter().map(info).collect();
                    let (gamma, plan) = spider_plan(*thin || *r == 2, &s, &c);
                    let uses = match plan {
                        SpiderPlan::Thin { j } => {
                            entry.rule = Cow::Borrowed("spider:thin");
                            let mut u: Vec<(usize, Use)> = (0..*r)
                                .filter(|&k| k != j)
                                .map(|k| (sp.s[k] as usize, Use::Min))
                                .collect();
                            u.push((sp.c[j] as usize, Use::Saturate));
                            u
                        }
                        SpiderPlan::Thick => {
                            entry.rule = Cow::Borrowed("spider:thick");
                            sp.c[..3].iter().map(|&x| (x as usize, Use::One)).collect()
                        }
                    };
                    if let Some(v) = spider_pattern_value(*r, *thin, *pattern) {
                        if v != gamma {
                            entry.note = Some(format!("pattern formula gives {v}, construction gives {gamma}"));
                        }
                    }
                    let (capped, pair) = if *thin && *r >= 3 {
                        (DomCap::ThreePlus, None)
                    } else {
                        (DomCap::Two, Some((children[sp.c[0] as usize].rep, children[sp.c[1] as usize].rep)))
                    };
                    (gamma, Plan::Children(uses), capped, pair)
                }
                PrimeKind::FivePrime { .. } | PrimeKind::Zoo { .. } => {
                    let m = pa.zoo.as_ref().expect("zoo match");
                    entry.rule = Cow::Owned(format!("zoo:{}", m.kind.name()));
                    let s = zoo_summary(q, m).expect("zoo members are small or structured");
                    let (capped, pair) = prime_domination(q, children);
                    (s.gamma_r2, on_reps(&s.witness), capped, pair)
                }
                PrimeKind::FivePrimeTwin { kind, .. } => {
                    let m = pa.zoo.as_ref().expect("zoo match");
                    entry.rule = Cow::Owned(format!("zoo:{}", kind.name()));
                    let vs = tree.sorted_vertices(node);
                    let (ng, _) = g.induced_subgraph(&vs);
                    let s = zoo_summary(&ng, m).expect("six-vertex node");
                    let (capped, pair) = prime_domination(q, children);
                    let plan = Plan::Explicit(
                        s.witness.values().iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, &x)| (vs[i], x)).collect(),
                    );
                    (s.gamma_r2, plan, capped, pair)
                }
                PrimeKind::SplitHFree => {
                    let (part, lv) = pa.split.as_ref().expect("split levels");
                    let s = split_summary(q, part, lv, true);
                    entry.rule = Cow::Owned(format!("split:{}", s.table.case));
                    if !s.table_agrees {
                        table_mismatch = true;
                        entry.note = Some(format!(
                            "case table gives {} ({}), exact value {}",
                            s.table.value, s.table.case, s.summary.gamma_r2
                        ));
                    }
                    let (capped, pair) = prime_domination(q, children);
                    (s.summary.gamma_r2, on_reps(&s.summary.witness), capped, pair)
                }
                PrimeKind::Unsupported { reason } => {
                    if nd.len() > opts.oracle_limit {
                        return Err(SolveError::Unsupported {
                            node,
                            min_vertex: rep,
                            size: nd.len(),
                            limit: opts.oracle_limit,
                            reason: reason.clone(),
                        });
                    }
                    used_oracle = true;
                    entry.rule = Cow::Borrowed("oracle");
                    entry.note = Some(reason.clone());
                    let vs = tree.sorted_vertices(node);
                    let (ng, _) = g.induced_subgraph(&vs);
                    let r = brute_gamma_r2(&ng, opts.oracle_limit).expect("size checked");
                    let plan = Plan::Explicit(
                        r.witness.values().iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, &x)| (vs[i], x)).collect(),
                    );
                    let (capped, pair) = prime_domination(q, children);
                    (r.value, plan, capped, pair)
                }
            };
            (Core { n: nd.len(), gamma, capped, universal: None, pair, rep }, plan)
        }
    };
    entry.gamma_r2 = core.gamma;
    entry.gamma_capped = core.capped;
    entry.has_universal = core.universal.is_some();
    Ok(NodeOutcome { core, plan, entry, used_oracle, table_mismatch })
}
