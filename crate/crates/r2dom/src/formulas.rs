//! Closed-form values and witnesses: union and join rules, spiders and
//! their twin expansions, the zoo, prime split graphs, and complements of
//! graphs with a pendant vertex.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{intersect_spans, DomCap, Graph, R2Function, Span, Vertex};
use crate::md::components;
use crate::oracle::{brute_gamma_r2, OracleError, DEFAULT_ORACLE_LIMIT};
use crate::recognize::{
    intersects, is_h_free_direct, split_characterization_violation, split_levels, split_partition, zoo_graph,
    SpiderPartition, SpiderPattern, SpiderShape, SplitLevels, SplitPartition, WlsOp, ZooKind, ZooMatch,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("join operand has {n} vertex; both sides need at least 2")]
    SingletonOperand { n: usize },
    #[error("graph is not split")]
    NotSplit,
    #[error("split graph contains H1, H2 or a complement of one")]
    NotHFree,
    #[error("spider pattern {0:?} does not fit this formula")]
    Pattern(SpiderPattern),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Value, capped domination number and universality of a module, with a
/// minimum witness on its own vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeSummary {
    pub n: usize,
    pub gamma_r2: u64,
    pub gamma_capped: DomCap,
    pub has_universal: bool,
    pub universal: Option<Vertex>,
    /// Present when `gamma_capped` is 2.
    pub dominating_pair: Option<(Vertex, Vertex)>,
    pub witness: R2Function,
}

impl NodeSummary {
    pub fn singleton() -> NodeSummary {
        NodeSummary {
            n: 1,
            gamma_r2: 1,
            gamma_capped: DomCap::One,
            has_universal: true,
            universal: Some(0),
            dominating_pair: None,
            witness: R2Function::from_values(vec![1]).expect("valid"),
        }
    }

    /// Summary with the given value and witness; domination facts are read
    /// off the graph.
    pub fn from_parts(g: &Graph, gamma_r2: u64, witness: R2Function) -> NodeSummary {
        let universal = g.has_universal_vertex();
        let gamma_capped = g.domination_at_most_two();
        let dominating_pair = if gamma_capped == DomCap::Two { g.dominating_pair() } else { None };
        NodeSummary {
            n: g.n(),
            gamma_r2,
            gamma_capped,
            has_universal: universal.is_some(),
            universal,
            dominating_pair,
            witness,
        }
    }

    /// Summary computed by exhaustive search.
    pub fn from_oracle(g: &Graph, limit: usize) -> Result<NodeSummary, OracleError> {
        let r = brute_gamma_r2(g, limit)?;
        Ok(NodeSummary::from_parts(g, r.value, r.witness))
    }

    pub fn is_consistent(&self, g: &Graph) -> bool {
        self.witness.len() == g.n() && g.is_r2_function(&self.witness) && self.witness.weight() == self.gamma_r2
    }

    pub fn core(&self) -> Core {
        Core {
            n: self.n,
            gamma: self.gamma_r2,
            capped: self.gamma_capped,
            universal: self.universal,
            pair: self.dominating_pair,
            rep: 0,
        }
    }
}

/// The facts about a module that the combination rules consume, in the
/// labels of the enclosing graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Core {
    pub n: usize,
    pub gamma: u64,
    pub capped: DomCap,
    pub universal: Option<Vertex>,
    pub pair: Option<(Vertex, Vertex)>,
    pub rep: Vertex,
}

impl Core {
    pub fn leaf(v: Vertex) -> Core {
        Core { n: 1, gamma: 1, capped: DomCap::One, universal: Some(v), pair: None, rep: v }
    }
}

/// How a join of modules gets its minimum function. Indices are child
/// positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum JoinRule {
    /// 2 on a single-vertex child.
    TwoOnSingleton { child: usize },
    /// A minimum function of one child, which weighs 2 or 3.
    MinOf { child: usize },
    /// 1 on a vertex of each of three children.
    OnesOnThree { children: [usize; 3] },
    /// 1 on a dominating pair of `child` and on a vertex of `other`.
    PairPlusOne { child: usize, other: usize },
    /// 2 on a vertex of each side.
    TwoTwo { a: usize, b: usize },
}

/// Value of the join of `children` (at least two) and its construction.
pub fn join_rule(children: &[Core]) -> (u64, JoinRule) {
    assert!(children.len() >= 2, "a join needs two operands");
    if let Some(i) = children.iter().position(|c| c.n == 1) {
        return (2, JoinRule::TwoOnSingleton { child: i });
    }
    if let Some(i) = children.iter().position(|c| c.gamma == 2) {
        return (2, JoinRule::MinOf { child: i });
    }
    if children.len() >= 3 {
        return (3, JoinRule::OnesOnThree { children: [0, 1, 2] });
    }
    if let Some(i) = children.iter().position(|c| c.gamma == 3) {
        return (3, JoinRule::MinOf { child: i });
    }
    if let Some(i) = children.iter().position(|c| c.capped == DomCap::Two) {
        return (3, JoinRule::PairPlusOne { child: i, other: 1 - i });
    }
    (4, JoinRule::TwoTwo { a: 0, b: 1 })
}

/// Capped domination, universal vertex and dominating pair of a join.
pub fn join_domination(children: &[Core]) -> (DomCap, Option<Vertex>, Option<(Vertex, Vertex)>) {
    match children.iter().find_map(|c| c.universal) {
        Some(u) => (DomCap::One, Some(u), None),
        None => (DomCap::Two, None, Some((children[0].rep, children[1].rep))),
    }
}

/// Capped domination and dominating pair of a disjoint union.
pub fn union_domination(children: &[Core]) -> (DomCap, Option<(Vertex, Vertex)>) {
    let total: usize = children.iter().map(|c| c.capped.value()).sum();
    match (total, children) {
        (2, [a, b]) => (DomCap::Two, Some((a.universal.expect("capped 1"), b.universal.expect("capped 1")))),
        _ => (DomCap::from_value(total), None),
    }
}

/// Capped domination of a prime node from its quotient: a pair of
/// children dominates when they are adjacent, or non-adjacent with a
/// universal vertex each.
pub fn prime_domination(q: &Graph, children: &[Core]) -> (DomCap, Option<(Vertex, Vertex)>) {
    let Some(w) = (0..q.n() as Vertex).min_by_key(|&v| q.degree(v)) else {
        return (DomCap::ThreePlus, None);
    };
    let pair_of = |x: Vertex, y: Vertex| -> Option<(Vertex, Vertex)> {
        let (cx, cy) = (&children[x as usize], &children[y as usize]);
        if q.has_edge(x, y) {
            Some((cx.rep, cy.rep))
        } else {
            Some((cx.universal?, cy.universal?))
        }
    };
    for x in q.neighbors(w).chain(std::iter::once(w)) {
        let mut common: Option<Vec<Span>> = None;
        'outer: for (a, b) in q.non_neighbor_spans(x) {
            for z in a..b {
                let cz = q.closed_spans(z);
                let next = match &common {
                    None => cz,
                    Some(c) => intersect_spans(c, &cz),
                };
                let empty = next.is_empty();
                common = Some(next);
                if empty {
                    break 'outer;
                }
            }
        }
        let found = match common {
            // x alone dominates the quotient
            None => q.neighbors(x).next().and_then(|y| pair_of(x, y)),
            Some(c) => c.iter().flat_map(|&(a, b)| a..b).find_map(|y| pair_of(x, y)),
        };
        if let Some(p) = found {
            return (DomCap::Two, Some(p));
        }
    }
    (DomCap::ThreePlus, None)
}

fn shifted(f: &R2Function, by: usize, out: &mut [u8]) {
    out[by..by + f.len()].copy_from_slice(f.values());
}

pub fn combine_union(a: &NodeSummary, b: &NodeSummary) -> NodeSummary {
    let n = a.n + b.n;
    let mut values = vec![0u8; n];
    shifted(&a.witness, 0, &mut values);
    shifted(&b.witness, a.n, &mut values);
    let mut cb = b.core();
    cb.universal = cb.universal.map(|u| u + a.n as Vertex);
    let (capped, pair) = union_domination(&[a.core(), cb]);
    NodeSummary {
        n,
        gamma_r2: a.gamma_r2 + b.gamma_r2,
        gamma_capped: capped,
        has_universal: false,
        universal: None,
        dominating_pair: pair,
        witness: R2Function::from_values(values).expect("values from witnesses"),
    }
}

pub fn combine_join(a: &NodeSummary, b: &NodeSummary) -> Result<NodeSummary, FormulaError> {
    for s in [a, b] {
        if s.n < 2 {
            return Err(FormulaError::SingletonOperand { n: s.n });
        }
    }
    let off = a.n as Vertex;
    let shift = |c: Core, by: Vertex| Core {
        universal: c.universal.map(|u| u + by),
        pair: c.pair.map(|(x, y)| (x + by, y + by)),
        rep: c.rep + by,
        ..c
    };
    let cores = [shift(a.core(), 0), shift(b.core(), off)];
    let sides = [a, b];
    let offs = [0usize, a.n];
    let (gamma, rule) = join_rule(&cores);
    let mut values = vec![0u8; a.n + b.n];
    match rule {
        JoinRule::MinOf { child } => shifted(&sides[child].witness, offs[child], &mut values),
        JoinRule::PairPlusOne { child, other } => {
            let (x, y) = cores[child].pair.expect("capped 2 has a pair");
            values[x as usize] = 1;
            values[y as usize] = 1;
            values[cores[other].rep as usize] = 1;
        }
        JoinRule::TwoTwo { a, b } => {
            values[cores[a].rep as usize] = 2;
            values[cores[b].rep as usize] = 2;
        }
        JoinRule::TwoOnSingleton { .. } | JoinRule::OnesOnThree { .. } => unreachable!("binary join of non-singletons"),
    }
    let (capped, universal, pair) = join_domination(&cores);
    Ok(NodeSummary {
        n: a.n + b.n,
        gamma_r2: gamma,
        gamma_capped: capped,
        has_universal: universal.is_some(),
        universal,
        dominating_pair: pair,
        witness: R2Function::from_values(values).expect("values in range"),
    })
}

// ---------------------------------------------------------------------------
// spiders

pub fn spider_value(r: usize, thin: bool) -> u64 {
    if thin || r == 2 {
        r as u64 + 1
    } else {
        3
    }
}

pub fn quasi_spider_value(r: usize, thin: bool) -> u64 {
    spider_value(r, thin)
}

pub fn wls_value(r: usize, op: WlsOp, t: usize) -> u64 {
    match op {
        WlsOp::R3 if t >= 1 => (r + t) as u64,
        _ => r as u64 + 1,
    }
}

/// Value of a spider-quotient node from its pattern alone.
pub fn spider_pattern_value(r: usize, thin: bool, pattern: SpiderPattern) -> Option<u64> {
    match pattern {
        SpiderPattern::Pristine | SpiderPattern::Quasi { .. } => Some(spider_value(r, thin)),
        SpiderPattern::Wls { op, t } => Some(wls_value(r, op, t)),
        SpiderPattern::ThickWls { .. } => Some(3),
        SpiderPattern::Irregular => None,
    }
}

/// Construction for a spider quotient with leg modules of the given sizes
/// and values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "plan", rename_all = "snake_case")]
pub enum SpiderPlan {
    /// Leg `j`: its C module saturated (2 on a single vertex, else a
    /// minimum function), its S module 0, every other S module at its
    /// minimum, everything else 0.
    Thin { j: usize },
    /// 1 on one vertex of each of the first three C modules.
    Thick,
}

/// `s[k]` and `c[k]` are (size, value) of the leg modules.
pub fn spider_plan(thin_like: bool, s: &[(usize, u64)], c: &[(usize, u64)]) -> (u64, SpiderPlan) {
    if !thin_like {
        return (3, SpiderPlan::Thick);
    }
    let total: u64 = s.iter().map(|x| x.1).sum();
    let sat = |x: (usize, u64)| if x.0 == 1 { 2 } else { x.1 };
    let (j, best) = (0..s.len())
        .map(|j| (j, total - s[j].1 + sat(c[j])))
        .min_by_key(|&(j, v)| (v, j))
        .expect("spider has legs");
    (best, SpiderPlan::Thin { j })
}

/// Summary of a plain spider, using the classical witnesses.
pub fn gamma_r2_spider(g: &Graph, p: &SpiderPartition) -> NodeSummary {
    let mut values = vec![0u8; g.n()];
    let r = p.r();
    if p.thin || r == 2 {
        values[p.c[0] as usize] = 2;
        for &s in &p.s[1..] {
            values[s as usize] = 1;
        }
    } else {
        values[p.s[0] as usize] = 1;
        values[p.c[0] as usize] = 2;
    }
    let (capped, pair) = if p.thin && r >= 3 { (DomCap::ThreePlus, None) } else { (DomCap::Two, Some((p.c[0], p.c[1]))) };
    NodeSummary {
        n: g.n(),
        gamma_r2: spider_value(r, p.thin),
        gamma_capped: capped,
        has_universal: false,
        universal: None,
        dominating_pair: pair,
        witness: R2Function::from_values(values).expect("values in range"),
    }
}

fn module_summary(g: &Graph, vs: &[Vertex]) -> Result<(u64, Vec<(Vertex, u8)>), FormulaError> {
    if vs.len() == 1 {
        return Ok((1, vec![(vs[0], 1)]));
    }
    let (sub, map) = g.induced_subgraph(vs);
    let r = brute_gamma_r2(&sub, DEFAULT_ORACLE_LIMIT)?;
    let assign = r.witness.values().iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, &x)| (map[i], x)).collect();
    Ok((r.value, assign))
}

/// Summary of a spider whose leg ends are small modules, by the generic
/// construction. Leg modules are evaluated exhaustively.
pub fn gamma_r2_spider_shape(g: &Graph, shape: &SpiderShape) -> Result<NodeSummary, FormulaError> {
    let r = shape.r();
    let mut values = vec![0u8; g.n()];
    let gamma = if shape.thin || r == 2 {
        let s: Vec<(Vec<Vertex>, u64, Vec<(Vertex, u8)>)> = shape
            .s
            .iter()
            .map(|m| module_summary(g, m).map(|(v, a)| (m.clone(), v, a)))
            .collect::<Result<_, _>>()?;
        let c: Vec<(Vec<Vertex>, u64, Vec<(Vertex, u8)>)> = shape
            .c
            .iter()
            .map(|m| module_summary(g, m).map(|(v, a)| (m.clone(), v, a)))
            .collect::<Result<_, _>>()?;
        let sv: Vec<(usize, u64)> = s.iter().map(|x| (x.0.len(), x.1)).collect();
        let cv: Vec<(usize, u64)> = c.iter().map(|x| (x.0.len(), x.1)).collect();
        let (gamma, plan) = spider_plan(true, &sv, &cv);
        let SpiderPlan::Thin { j } = plan else {
            unreachable!("thin plan requested")
        };
        for (k, (_, _, assign)) in s.iter().enumerate() {
            if k != j {
                for &(v, x) in assign {
                    values[v as usize] = x;
                }
            }
        }
        if c[j].0.len() == 1 {
            values[c[j].0[0] as usize] = 2;
        } else {
            for &(v, x) in &c[j].2 {
                values[v as usize] = x;
            }
        }
        gamma
    } else {
        for m in &shape.c[..3] {
            values[m[0] as usize] = 1;
        }
        3
    };
    Ok(NodeSummary::from_parts(g, gamma, R2Function::from_values(values).expect("values in range")))
}

pub fn gamma_r2_quasi_spider(g: &Graph, shape: &SpiderShape) -> Result<NodeSummary, FormulaError> {
    match shape.pattern {
        SpiderPattern::Quasi { .. } => gamma_r2_spider_shape(g, shape),
        p => Err(FormulaError::Pattern(p)),
    }
}

pub fn gamma_r2_wls(g: &Graph, shape: &SpiderShape) -> Result<NodeSummary, FormulaError> {
    match shape.pattern {
        SpiderPattern::Wls { .. } | SpiderPattern::ThickWls { .. } => gamma_r2_spider_shape(g, shape),
        p => Err(FormulaError::Pattern(p)),
    }
}

// ---------------------------------------------------------------------------
// zoo

/// P5 plus u, attached to the listed path positions, has value 3.
pub fn p5u_is_three(att: &[u8]) -> bool {
    let has = |x| att.contains(&x);
    (has(0) && has(4)) || (has(2) && (has(0) != has(4)))
}

/// Closed-form value of a zoo member; `None` where only exhaustive search
/// is available.
pub fn zoo_value(kind: &ZooKind) -> Option<u64> {
    match kind {
        ZooKind::Path { k } => Some((*k as u64 + 2) / 2),
        ZooKind::Cycle { k } => Some((*k as u64).div_ceil(2)),
        ZooKind::C5u { attachments } => Some(if attachments.len() >= 2 { 3 } else { 4 }),
        ZooKind::P5u { attachments } => Some(if p5u_is_three(attachments) { 3 } else { 4 }),
        ZooKind::Fixed { template } => {
            use crate::recognize::FixedZoo::*;
            Some(match template {
                J => 6,
                JMinusW => 5,
                JMinusVW | K | L | Q => 4,
                M(i) => match i {
                    2..=6 => 3,
                    10 | 11 => 5,
                    _ => 4,
                },
            })
        }
        ZooKind::Complement { of } => match of.as_ref() {
            ZooKind::Path { .. } | ZooKind::Cycle { .. } => Some(3),
            ZooKind::Fixed { template } if *template == crate::recognize::FixedZoo::M(5) => None,
            ZooKind::Fixed { .. } => Some(3),
            ZooKind::P5u { attachments } => {
                let min_deg_one = !(attachments.contains(&0) && attachments.contains(&4)) || attachments.len() == 1;
                min_deg_one.then_some(3)
            }
            ZooKind::C5u { attachments } => Some(if 5 - attachments.len() >= 2 { 3 } else { 4 }),
            ZooKind::Complement { .. } => None,
        },
    }
}

/// Value and witness of a recognized zoo member. Paths, cycles and their
/// complements use explicit patterns; everything else is small and gets a
/// witness by exhaustive search.
pub fn zoo_summary(g: &Graph, m: &ZooMatch) -> Result<NodeSummary, FormulaError> {
    let mut values = vec![0u8; g.n()];
    let formula = zoo_value(&m.kind);
    let explicit = match &m.kind {
        ZooKind::Path { k } => {
            for i in (0..*k).step_by(2) {
                values[m.order[i] as usize] = 1;
            }
            if k % 2 == 0 {
                values[m.order[k - 1] as usize] = 1;
            }
            true
        }
        ZooKind::Cycle { k } => {
            for i in (0..*k).step_by(2) {
                values[m.order[i] as usize] = 1;
            }
            true
        }
        ZooKind::Complement { of } if matches!(of.as_ref(), ZooKind::Path { .. } | ZooKind::Cycle { .. }) => {
            for &v in &m.order[..3] {
                values[v as usize] = 1;
            }
            true
        }
        _ => false,
    };
    if explicit {
        let gamma = formula.expect("paths and cycles have formulas");
        return Ok(NodeSummary::from_parts(g, gamma, R2Function::from_values(values).expect("values in range")));
    }
    let r = brute_gamma_r2(g, DEFAULT_ORACLE_LIMIT)?;
    Ok(NodeSummary::from_parts(g, formula.unwrap_or(r.value), r.witness))
}

/// Summary of the canonical graph of a zoo kind.
pub fn gamma_r2_zoo(kind: &ZooKind) -> Result<NodeSummary, FormulaError> {
    let g = zoo_graph(kind);
    let m = ZooMatch { kind: kind.clone(), order: (0..g.n() as Vertex).collect() };
    zoo_summary(&g, &m)
}

// ---------------------------------------------------------------------------
// split graphs

/// The three-way case table for prime split graphs, evaluated verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitTable {
    pub a1: usize,
    pub ell: usize,
    pub i_min: Option<usize>,
    pub value: u64,
    /// First matching case label, or "otherwise".
    pub case: String,
    pub plus_one: Vec<&'static str>,
    pub plus_two: Vec<&'static str>,
}

impl SplitTable {
    /// At most one listed case matched.
    pub fn exclusive(&self) -> bool {
        self.plus_one.len() + self.plus_two.len() <= 1
    }
}

pub fn split_table(lv: &SplitLevels) -> SplitTable {
    let l = lv.ell;
    let a = |i: usize| lv.a_len(i);
    let b = |i: usize| lv.b_at(i);
    let c = |i: usize| lv.c_at(i);
    let bn = |i: usize| !b(i).is_empty();
    let im = lv.i_min;
    let c1b2 = intersects(c(1), b(2));
    let one = [
        ("l=1", l == 1),
        ("l=2,C1nB2", l == 2 && c1b2),
        ("l=3,B3,A2=0", l == 3 && bn(3) && a(2) == 0),
        ("l>=4,imin=1", l >= 4 && im == Some(1)),
        ("l>=4,imin=2,C1nB2", l >= 4 && im == Some(2) && c1b2),
        ("l>=4,imin=3,B3,A2=0", l >= 4 && im == Some(3) && bn(3) && a(2) == 0),
    ];
    let mid = im.is_some_and(|i| (4..l).contains(&i)) && {
        let i = im.unwrap_or(0);
        intersects(b(i), b(i + 1))
    };
    let two = [
        ("l=2,B2,C1nB2=0", l == 2 && bn(2) && !c1b2),
        ("l=2,B2=0,C1nC2", l == 2 && !bn(2) && intersects(c(1), c(2))),
        ("l=3,|A3|<4,B2nB3", l == 3 && a(3) < 4 && intersects(b(2), b(3))),
        ("l>=4,imin=2,B2,C1nB2=0", l >= 4 && im == Some(2) && bn(2) && !c1b2),
        ("l>=4,imin=2,B2=0,C1nC2", l >= 4 && im == Some(2) && !bn(2) && intersects(c(1), c(2))),
        ("l>=4,imin=3,|A3|<4,B2nB3", l >= 4 && im == Some(3) && a(3) < 4 && intersects(b(2), b(3))),
        ("l>=4,4<=imin<=l-1,BinBi+1,A2=0", l >= 4 && mid && a(2) == 0),
        ("l>=4,imin=l", l >= 4 && im == Some(l)),
    ];
    let plus_one: Vec<&'static str> = one.iter().filter(|x| x.1).map(|x| x.0).collect();
    let plus_two: Vec<&'static str> = two.iter().filter(|x| x.1).map(|x| x.0).collect();
    let a1 = a(1);
    let (value, case) = match (plus_one.first(), plus_two.first()) {
        (Some(c), _) => (a1 + 1, c.to_string()),
        (None, Some(c)) => (a1 + 2, c.to_string()),
        _ => (a1 + 3, "otherwise".to_string()),
    };
    SplitTable { a1, ell: l, i_min: im, value: value as u64, case, plus_one, plus_two }
}

/// Exact value and witness of a split graph by bounded search over the
/// clique side.
///
/// Some minimum function puts no 2 on the independent side, and once the
/// clique values are fixed the independent side is forced (1 exactly where
/// the neighborhood collects less than 2). Supports are enumerated by size
/// until the pendant-based lower bound meets the best value found.
pub fn split_exact(g: &Graph, part: &SplitPartition) -> (u64, R2Function) {
    let n = g.n();
    let k = &part.k;
    let mut is_s = vec![false; n];
    for &v in &part.s {
        is_s[v as usize] = true;
    }
    let s_nbrs: Vec<Vec<Vertex>> =
        k.iter().map(|&x| g.neighbors(x).filter(|&y| is_s[y as usize]).collect()).collect();
    let mut pendants: Vec<usize> =
        s_nbrs.iter().map(|l| l.iter().filter(|&&y| g.degree(y) == 1).count()).filter(|&c| c > 0).collect();
    pendants.sort_unstable_by(|a, b| b.cmp(a));
    let a1: usize = pendants.iter().sum();
    // cost >= nnz + #twos + uncovered pendants
    let lower = |sz: usize| -> u64 {
        let mut best = i64::MAX;
        let mut top = 0i64;
        for t in 0..=sz.min(pendants.len()) {
            if t > 0 {
                top += pendants[t - 1] as i64;
            }
            best = best.min(t as i64 - top);
        }
        (sz as i64 + a1 as i64 + best).max(1) as u64
    };
    let mut scratch = vec![0u32; n];
    let s_len = part.s.len() as u64;
    let mut eval = |support: &[(usize, u8)]| -> Option<u64> {
        let w: u64 = support.iter().map(|x| x.1 as u64).sum();
        let mut touched = Vec::new();
        for &(ki, val) in support {
            for &y in &s_nbrs[ki] {
                if scratch[y as usize] == 0 {
                    touched.push(y);
                }
                scratch[y as usize] += val as u32;
            }
        }
        let covered = touched.iter().filter(|&&y| scratch[y as usize] >= 2).count() as u64;
        for &y in &touched {
            scratch[y as usize] = 0;
        }
        if w < 2 {
            // every independent vertex carries 1
            let ok = (0..k.len()).all(|ki| support.iter().any(|x| x.0 == ki) || w as usize + s_nbrs[ki].len() >= 2);
            if !ok {
                return None;
            }
        }
        Some(w + s_len - covered)
    };
    let mut best: Option<(u64, Vec<(usize, u8)>)> = eval(&[]).map(|c| (c, Vec::new()));
    let mut sz = 1;
    while sz <= k.len() && best.as_ref().is_none_or(|b| lower(sz) < b.0) {
        let mut idx: Vec<usize> = (0..sz).collect();
        loop {
            for mask in 0..1u32 << sz {
                let support: Vec<(usize, u8)> =
                    idx.iter().enumerate().map(|(p, &ki)| (ki, if mask >> p & 1 == 1 { 2 } else { 1 })).collect();
                if let Some(c) = eval(&support) {
                    if best.as_ref().is_none_or(|b| c < b.0) {
                        best = Some((c, support));
                    }
                }
            }
            // next combination
            let mut i = sz;
            while i > 0 && idx[i - 1] == k.len() - sz + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..sz {
                idx[j] = idx[j - 1] + 1;
            }
        }
        sz += 1;
    }
    let (value, support) = best.expect("all-ones on the clique side is feasible");
    let mut values = vec![0u8; n];
    for &(ki, val) in &support {
        values[k[ki] as usize] = val;
    }
    let mut got = vec![0u32; n];
    for &(ki, val) in &support {
        for &y in &s_nbrs[ki] {
            got[y as usize] += val as u32;
        }
    }
    for &y in &part.s {
        if got[y as usize] < 2 {
            values[y as usize] = 1;
        }
    }
    (value, R2Function::from_values(values).expect("values in range"))
}

/// Split evaluation: the exact summary plus the verbatim table reading.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitSummary {
    pub summary: NodeSummary,
    pub table: SplitTable,
    /// The characterization of H-freeness used is stated for prime graphs;
    /// for non-prime input the direct subgraph search is used instead.
    pub prime: bool,
    pub table_agrees: bool,
}

pub fn gamma_r2_split_hfree(g: &Graph) -> Result<SplitSummary, FormulaError> {
    let part = split_partition(g).ok_or(FormulaError::NotSplit)?;
    let lv = split_levels(g, &part);
    let prime = g.n() >= 4 && crate::recognize::is_prime_graph(g);
    let h_free = if prime { split_characterization_violation(g, &part, &lv).is_none() } else { is_h_free_direct(g) };
    if !h_free {
        return Err(FormulaError::NotHFree);
    }
    Ok(split_summary(g, &part, &lv, prime))
}

pub(crate) fn split_summary(g: &Graph, part: &SplitPartition, lv: &SplitLevels, prime: bool) -> SplitSummary {
    let table = split_table(lv);
    let (value, witness) = split_exact(g, part);
    SplitSummary {
        summary: NodeSummary::from_parts(g, value, witness),
        table_agrees: table.value == value,
        table,
        prime,
    }
}

/// Value and witness for the complement of a connected graph with at least
/// three vertices and a pendant vertex. The witness lives on the
/// complement: 2 on the pendant vertex, 1 on its only neighbor.
pub fn gamma_r2_complement_special(g: &Graph) -> Option<(u64, R2Function)> {
    if g.n() < 3 || g.min_degree() != Some(1) || components(g).len() != 1 {
        return None;
    }
    let p = (0..g.n() as Vertex).find(|&v| g.degree(v) == 1)?;
    let q = g.spans(p)[0].0;
    let mut values = vec![0u8; g.n()];
    values[p as usize] = 2;
    values[q as usize] = 1;
    Some((3, R2Function::from_values(values).expect("values in range")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognize::{recognize_spider, spider_shape, FixedZoo};

    fn oracle(g: &Graph) -> NodeSummary {
        NodeSummary::from_oracle(g, 20).unwrap()
    }

    #[test]
    fn union_examples() {
        let s = combine_union(&oracle(&Graph::path(4)), &NodeSummary::singleton());
        assert_eq!(s.gamma_r2, 4);
        let k1 = NodeSummary::singleton();
        let s = combine_union(&k1, &k1);
        assert_eq!((s.gamma_r2, s.gamma_capped), (2, DomCap::Two));
        assert_eq!(s.dominating_pair, Some((0, 1)));
        let c5 = oracle(&Graph::cycle(5));
        assert_eq!(combine_union(&c5, &c5).gamma_r2, 6);
    }

    #[test]
    fn join_examples() {
        let p4 = oracle(&Graph::path(4));
        let c7 = oracle(&Graph::cycle(7));
        let p6 = oracle(&Graph::path(6));
        let k2 = oracle(&Graph::complete(2));
        let cases = [(&p4, &p4, 3), (&k2, &c7, 2), (&p6, &c7, 3), (&c7, &c7, 4)];
        for (a, b, want) in cases {
            let s = combine_join(a, b).unwrap();
            assert_eq!(s.gamma_r2, want);
            let g = Graph::join(&path_or_cycle(a), &path_or_cycle(b));
            assert!(s.is_consistent(&g));
        }
        assert!(combine_join(&NodeSummary::singleton(), &p4).is_err());
    }

    fn path_or_cycle(s: &NodeSummary) -> Graph {
        match (s.n, s.gamma_r2) {
            (2, _) => Graph::complete(2),
            (4, _) => Graph::path(4),
            (6, _) => Graph::path(6),
            (7, _) => Graph::cycle(7),
            _ => unreachable!(),
        }
    }

    #[test]
    fn spider_witnesses() {
        let thick = {
            // thick r = 3: s_i sees c_j for j != i
            let e = [(0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)];
            Graph::from_edge_list(6, &e).unwrap()
        };
        let p = recognize_spider(&thick).unwrap();
        let s = gamma_r2_spider(&thick, &p);
        assert_eq!(s.gamma_r2, 3);
        assert!(s.is_consistent(&thick));
        let p4 = Graph::path(4);
        let s = gamma_r2_spider(&p4, &recognize_spider(&p4).unwrap());
        assert_eq!(s.gamma_r2, 3);
        assert!(s.is_consistent(&p4));
    }

    #[test]
    fn quasi_on_p4_tip() {
        let g = Graph::path(4).add_twin(0, false).unwrap();
        let shape = spider_shape(&g).unwrap();
        let s = gamma_r2_quasi_spider(&g, &shape).unwrap();
        assert_eq!(s.gamma_r2, 3);
        assert!(s.is_consistent(&g));
    }

    #[test]
    fn zoo_values_match_oracle() {
        let mut kinds: Vec<ZooKind> = FixedZoo::ALL.iter().map(|&t| ZooKind::Fixed { template: t }).collect();
        kinds.extend((5..12).map(|k| ZooKind::Path { k }));
        kinds.extend((5..12).map(|k| ZooKind::Cycle { k }));
        let base = kinds.clone();
        kinds.extend(base.into_iter().map(|k| ZooKind::Complement { of: Box::new(k) }));
        for kind in kinds {
            let g = zoo_graph(&kind);
            let s = gamma_r2_zoo(&kind).unwrap();
            assert!(s.is_consistent(&g), "{}", kind.name());
            assert_eq!(s.gamma_r2, brute_gamma_r2(&g, 20).unwrap().value, "{}", kind.name());
        }
    }

    #[test]
    fn split_examples() {
        // K = {a, b, c} = {0, 1, 2}, x = 3 ~ a, y = 4 ~ a, b
        let g = Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (3, 0), (4, 0), (4, 1)]).unwrap();
        let s = gamma_r2_split_hfree(&g).unwrap();
        assert_eq!(s.table.value, 2);
        assert_eq!(s.summary.gamma_r2, 2);
        assert!(!s.prime);
        let mismatch = Graph::from_edge_list(
            8,
            &[(0, 4), (0, 7), (1, 6), (2, 6), (2, 7), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)],
        )
        .unwrap();
        let s = gamma_r2_split_hfree(&mismatch).unwrap();
        assert_eq!(s.table.value, 4);
        assert_eq!(s.summary.gamma_r2, 3);
        assert!(!s.table_agrees);
        assert!(s.summary.is_consistent(&mismatch));
    }

    #[test]
    fn complement_special() {
        let (v, f) = gamma_r2_complement_special(&Graph::path(6)).unwrap();
        assert_eq!(v, 3);
        assert!(Graph::path(6).complement().is_r2_function(&f));
        let star = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(gamma_r2_complement_special(&star).unwrap().0, 3);
        assert!(gamma_r2_complement_special(&Graph::cycle(6)).is_none());
    }
}
