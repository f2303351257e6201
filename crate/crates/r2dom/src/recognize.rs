//! Recognizers for the prime building blocks: spiders and their
//! twin-expanded variants, the finite family of prime partner-limited
//! graphs ("zoo"), and prime split graphs without the two six-vertex
//! obstructions.

use serde::Serialize;

use crate::graph::{count_sorted_in, gaps, Graph, Vertex};
use crate::md::{components, decompose, MdTree, NodeKind};
use crate::oracle::{find_induced, find_induced_through};

// ---------------------------------------------------------------------------
// spiders

/// Legs are `(s[i], c[i])`, sorted by `s`. In a thin spider `s[i]` sees only
/// `c[i]`; in a thick one it sees every other `c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpiderPartition {
    pub s: Vec<Vertex>,
    pub c: Vec<Vertex>,
    pub h: Vec<Vertex>,
    pub thin: bool,
}

impl SpiderPartition {
    pub fn r(&self) -> usize {
        self.s.len()
    }
}

pub fn recognize_spider(g: &Graph) -> Option<SpiderPartition> {
    if g.n() < 4 {
        return None;
    }
    recognize_thin(g).or_else(|| recognize_thick(g))
}

fn recognize_thin(g: &Graph) -> Option<SpiderPartition> {
    let n = g.n();
    let s: Vec<Vertex> = (0..n as Vertex).filter(|&v| g.degree(v) == 1).collect();
    let r = s.len();
    if r < 2 || 2 * r > n {
        return None;
    }
    let mut role = vec![0u8; n];
    for &v in &s {
        role[v as usize] = 1;
    }
    let mut c = Vec::with_capacity(r);
    for &v in &s {
        let x = g.spans(v)[0].0;
        if role[x as usize] != 0 {
            return None;
        }
        role[x as usize] = 2;
        c.push(x);
    }
    // c sees its own leg end plus every other non-S vertex
    if c.iter().any(|&x| g.degree(x) != n - r) {
        return None;
    }
    let h = (0..n as Vertex).filter(|&v| role[v as usize] == 0).collect();
    Some(SpiderPartition { s, c, h, thin: true })
}

fn recognize_thick(g: &Graph) -> Option<SpiderPartition> {
    let n = g.n();
    let d = g.min_degree()?;
    let s: Vec<Vertex> = (0..n as Vertex).filter(|&v| g.degree(v) == d).collect();
    let r = s.len();
    if r < 3 || d != r - 1 || 2 * r > n {
        return None;
    }
    let mut cs: Vec<Vertex> = g.neighbors(s[0]).chain(g.neighbors(s[1])).collect();
    cs.sort_unstable();
    cs.dedup();
    if cs.len() != r {
        return None;
    }
    let mut role = vec![0u8; n];
    for &v in &s {
        role[v as usize] = 1;
    }
    for &x in &cs {
        if role[x as usize] != 0 {
            return None;
        }
        role[x as usize] = 2;
    }
    let mut c = Vec::with_capacity(r);
    for &v in &s {
        if count_sorted_in(g.spans(v), &cs) != r - 1 {
            return None;
        }
        let missing = gaps(g.spans(v), n).into_iter().find_map(|(a, b)| {
            let lo = cs.partition_point(|&x| x < a);
            let hi = cs.partition_point(|&x| x < b);
            (hi > lo).then(|| cs[lo])
        })?;
        if role[missing as usize] != 2 {
            return None;
        }
        role[missing as usize] = 3;
        c.push(missing);
    }
    if c.iter().any(|&x| g.degree(x) != n - 2) {
        return None;
    }
    let h = (0..n as Vertex).filter(|&v| role[v as usize] == 0).collect();
    Some(SpiderPartition { s, c, h, thin: false })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LegEnd {
    S,
    C,
}

/// A leg end whose module has more than one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Slot {
    pub leg: usize,
    pub end: LegEnd,
    pub size: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum WlsOp {
    R1,
    R2,
    R3,
}

/// How the leg modules of a spider-quotient node are filled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "pattern", rename_all = "snake_case")]
pub enum SpiderPattern {
    Pristine,
    /// One leg end doubled.
    Quasi { end: LegEnd },
    Wls { op: WlsOp, t: usize },
    /// The same operations on the complement side: R1 on a C end, R2 on a
    /// non-adjacent (s, c) pair, R3 counting C ends.
    ThickWls { op: WlsOp, t: usize },
    Irregular,
}

fn wls_op(slots: &[Slot], leg_of: impl Fn(&Slot) -> usize, primary: LegEnd) -> Option<(WlsOp, usize)> {
    if let [one] = slots {
        if one.size == 3 && one.end == primary {
            return Some((WlsOp::R1, 0));
        }
    }
    if slots.iter().any(|s| s.size != 2) {
        return None;
    }
    if let [a, b] = slots {
        if leg_of(a) == leg_of(b) {
            return Some((WlsOp::R2, 0));
        }
    }
    let mut legs: Vec<usize> = slots.iter().map(&leg_of).collect();
    legs.sort_unstable();
    if legs.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((WlsOp::R3, slots.iter().filter(|s| s.end == primary).count()))
}

/// Pattern of a spider quotient whose vertex `x` stands for a module of
/// `size(x)` vertices. The head module is unrestricted.
pub fn spider_pattern(p: &SpiderPartition, size: impl Fn(Vertex) -> usize) -> (SpiderPattern, Vec<Slot>) {
    let mut slots = Vec::new();
    for leg in 0..p.r() {
        for (end, v) in [(LegEnd::S, p.s[leg]), (LegEnd::C, p.c[leg])] {
            let k = size(v);
            if k > 1 {
                slots.push(Slot { leg, end, size: k });
            }
        }
    }
    let pattern = match slots.as_slice() {
        [] => SpiderPattern::Pristine,
        [one] if one.size == 2 => SpiderPattern::Quasi { end: one.end },
        _ => {
            let r = p.r();
            let thin_like = p.thin || r == 2;
            let thin = thin_like.then(|| wls_op(&slots, |s| s.leg, LegEnd::S)).flatten();
            let thick = || {
                if !p.thin {
                    wls_op(&slots, |s| s.leg, LegEnd::C)
                } else if r == 2 {
                    // non-adjacent pairs of a P4 are (s0, c1) and (s1, c0)
                    wls_op(&slots, |s| if s.end == LegEnd::S { s.leg } else { 1 - s.leg }, LegEnd::C)
                } else {
                    None
                }
            };
            match (thin, thick()) {
                (Some((op, t)), _) => SpiderPattern::Wls { op, t },
                (None, Some((op, t))) => SpiderPattern::ThickWls { op, t },
                (None, None) => SpiderPattern::Irregular,
            }
        }
    };
    (pattern, slots)
}

/// A graph whose root decomposition node has a spider quotient, with each
/// leg end and the head expanded to their vertex sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpiderShape {
    pub thin: bool,
    pub s: Vec<Vec<Vertex>>,
    pub c: Vec<Vec<Vertex>>,
    pub h: Vec<Vertex>,
    pub pattern: SpiderPattern,
}

impl SpiderShape {
    pub fn r(&self) -> usize {
        self.s.len()
    }
}

pub fn spider_shape(g: &Graph) -> Option<SpiderShape> {
    if g.n() < 4 {
        return None;
    }
    let tree = decompose(g);
    let root = tree.node(tree.root());
    if root.kind != NodeKind::Prime {
        return None;
    }
    let q = root.quotient.as_deref()?;
    let sp = recognize_spider(q)?;
    let members = |x: Vertex| tree.sorted_vertices(root.children[x as usize]);
    let (pattern, _) = spider_pattern(&sp, |x| tree.node(root.children[x as usize]).len());
    Some(SpiderShape {
        thin: sp.thin,
        s: sp.s.iter().map(|&x| members(x)).collect(),
        c: sp.c.iter().map(|&x| members(x)).collect(),
        h: sp.h.first().map(|&x| members(x)).unwrap_or_default(),
        pattern,
    })
}

/// Spider with exactly one leg end replaced by two twins.
pub fn recognize_quasi_spider(g: &Graph) -> Option<SpiderShape> {
    spider_shape(g).filter(|s| matches!(s.pattern, SpiderPattern::Quasi { .. }))
}

/// Thin spider built by one of R1, R2, R3; returns the operation and, for
/// R3, the number of doubled S ends. A pristine spider is R3 with t = 0.
pub fn recognize_well_labelled_spider(g: &Graph) -> Option<(SpiderShape, WlsOp, usize)> {
    let shape = spider_shape(g)?;
    if !shape.thin {
        return None;
    }
    let (op, t) = match shape.pattern {
        SpiderPattern::Pristine => (WlsOp::R3, 0),
        SpiderPattern::Quasi { end } => (WlsOp::R3, usize::from(end == LegEnd::S)),
        SpiderPattern::Wls { op, t } => (op, t),
        _ => return None,
    };
    Some((shape, op, t))
}

// ---------------------------------------------------------------------------
// zoo

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FixedZoo {
    J,
    JMinusW,
    JMinusVW,
    K,
    L,
    Q,
    M(u8),
}

impl FixedZoo {
    pub const ALL: [FixedZoo; 17] = [
        FixedZoo::J,
        FixedZoo::JMinusW,
        FixedZoo::JMinusVW,
        FixedZoo::K,
        FixedZoo::L,
        FixedZoo::Q,
        FixedZoo::M(1),
        FixedZoo::M(2),
        FixedZoo::M(3),
        FixedZoo::M(4),
        FixedZoo::M(5),
        FixedZoo::M(6),
        FixedZoo::M(7),
        FixedZoo::M(8),
        FixedZoo::M(9),
        FixedZoo::M(10),
        FixedZoo::M(11),
    ];

    pub fn name(self) -> String {
        match self {
            FixedZoo::J => "J".into(),
            FixedZoo::JMinusW => "J-w".into(),
            FixedZoo::JMinusVW => "J-vw".into(),
            FixedZoo::K => "K".into(),
            FixedZoo::L => "L".into(),
            FixedZoo::Q => "Q".into(),
            FixedZoo::M(i) => format!("M{i}"),
        }
    }

    pub fn graph(self) -> Graph {
        let p6: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 1)).collect();
        let p5: Vec<(usize, usize)> = (0..4).map(|i| (i, i + 1)).collect();
        let with = |base: &[(usize, usize)], extra: &[(usize, usize)]| {
            let edges: Vec<(usize, usize)> = base.iter().chain(extra).copied().collect();
            let n = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0) + 1;
            Graph::from_edge_list(n, &edges).expect("template edges are valid")
        };
        match self {
            FixedZoo::J => with(&p6, &[(2, 6), (3, 6), (6, 7), (7, 8)]),
            FixedZoo::JMinusW => with(&p6, &[(2, 6), (3, 6), (6, 7)]),
            FixedZoo::JMinusVW => with(&p6, &[(2, 6), (3, 6)]),
            FixedZoo::K => with(&p6, &[(0, 6), (2, 6), (3, 6)]),
            FixedZoo::L => with(&p6, &[(1, 6), (2, 6), (3, 6), (4, 6)]),
            FixedZoo::Q => with(&[(0, 1), (1, 2), (2, 3)], &[(1, 4), (2, 5), (4, 5)]),
            FixedZoo::M(i) => {
                let extra: &[(usize, usize)] = match i {
                    1 => &[(2, 5), (5, 6)],
                    2 => &[(0, 6), (1, 6), (2, 6), (3, 6), (4, 6), (2, 5)],
                    3 => &[(0, 6), (1, 6), (3, 6), (4, 6), (5, 6)],
                    4 => &[(0, 6), (1, 6), (2, 6), (3, 6), (0, 5), (2, 5), (3, 5), (5, 6)],
                    5 => &[(1, 6), (2, 6), (3, 6), (4, 6), (0, 5), (1, 5), (2, 5), (3, 5), (5, 6)],
                    6 => &[(2, 5), (3, 5), (0, 6), (1, 6), (2, 6), (3, 6), (5, 6)],
                    7 => &[(2, 5), (3, 5), (0, 6), (1, 6), (2, 6), (3, 6), (5, 6), (5, 7)],
                    8 => &[(2, 5), (3, 5), (5, 6)],
                    9 => &[(1, 5), (2, 5), (2, 6), (3, 6)],
                    10 => &[(1, 5), (2, 5), (2, 6), (3, 6), (5, 7)],
                    11 => &[(1, 5), (2, 5), (2, 6), (3, 6), (5, 7), (6, 8)],
                    _ => panic!("no template M{i}"),
                };
                with(&p5, extra)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ZooKind {
    Path { k: usize },
    Cycle { k: usize },
    /// C5 plus a vertex adjacent to the listed cycle positions.
    C5u { attachments: Vec<u8> },
    /// P5 plus a vertex adjacent to the listed path positions (orientation
    /// chosen to make the list lexicographically smallest).
    P5u { attachments: Vec<u8> },
    Fixed { template: FixedZoo },
    Complement { of: Box<ZooKind> },
}

impl ZooKind {
    pub fn name(&self) -> String {
        match self {
            ZooKind::Path { k } => format!("P{k}"),
            ZooKind::Cycle { k } => format!("C{k}"),
            ZooKind::C5u { attachments } => format!("C5u{attachments:?}"),
            ZooKind::P5u { attachments } => format!("P5u{attachments:?}"),
            ZooKind::Fixed { template } => template.name(),
            ZooKind::Complement { of } => format!("co-{}", of.name()),
        }
    }
}

/// `order` lists the vertices of `g` in the canonical order of the family:
/// along the path or cycle, the five base positions followed by u, or the
/// image of template vertex i at index i.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZooMatch {
    pub kind: ZooKind,
    pub order: Vec<Vertex>,
}

fn walk_order(g: &Graph, start: Vertex) -> Vec<Vertex> {
    let mut order = vec![start];
    let mut prev = Vertex::MAX;
    let mut cur = start;
    while order.len() < g.n() {
        let next = g.neighbors(cur).find(|&x| x != prev && x != start);
        match next {
            Some(x) => {
                order.push(x);
                prev = cur;
                cur = x;
            }
            None => break,
        }
    }
    order
}

fn as_path(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.n();
    if n < 2 || g.m() != n as u64 - 1 || g.degrees().iter().any(|&d| d == 0 || d > 2) {
        return None;
    }
    let end = (0..n as Vertex).find(|&v| g.degree(v) == 1)?;
    let order = walk_order(g, end);
    (order.len() == n).then_some(order)
}

fn as_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.n();
    if n < 3 || g.degrees().iter().any(|&d| d != 2) {
        return None;
    }
    let order = walk_order(g, 0);
    (order.len() == n).then_some(order)
}

/// Connected, co-connected and without non-trivial modules.
pub fn is_prime_graph(g: &Graph) -> bool {
    let tree = decompose(g);
    let root = tree.node(tree.root());
    root.kind == NodeKind::Prime && root.children.len() == g.n()
}

fn zoo_direct(g: &Graph) -> Option<ZooMatch> {
    let n = g.n();
    if n < 5 {
        return None;
    }
    if let Some(order) = as_path(g) {
        return Some(ZooMatch { kind: ZooKind::Path { k: n }, order });
    }
    if let Some(order) = as_cycle(g) {
        return Some(ZooMatch { kind: ZooKind::Cycle { k: n }, order });
    }
    if n > 9 {
        return None;
    }
    let mut degs = g.degrees().to_vec();
    degs.sort_unstable();
    for t in FixedZoo::ALL {
        let tg = t.graph();
        if tg.n() != n || tg.m() != g.m() {
            continue;
        }
        let mut td = tg.degrees().to_vec();
        td.sort_unstable();
        if td != degs {
            continue;
        }
        if let Ok(Some(order)) = find_induced(g, &tg) {
            return Some(ZooMatch { kind: ZooKind::Fixed { template: t }, order });
        }
    }
    if n == 6 {
        // prefer a cycle base when both exist
        for (cycle, u) in [true, false].into_iter().flat_map(|c| (0..6).map(move |u| (c, u))) {
            let rest: Vec<Vertex> = (0..6).filter(|&x| x != u).collect();
            let (h, map) = g.induced_subgraph(&rest);
            let found = if cycle { as_cycle(&h) } else { as_path(&h) };
            let Some(local) = found else {
                continue;
            };
            let base: Vec<Vertex> = local.iter().map(|&x| map[x as usize]).collect();
            let att = |b: &[Vertex]| -> Vec<u8> {
                (0..5u8).filter(|&i| g.has_edge(u, b[i as usize])).collect()
            };
            let mut order = base.clone();
            let mut attachments = att(&base);
            if attachments.is_empty() || attachments.len() == 5 {
                continue;
            }
            if !cycle {
                let rev: Vec<Vertex> = base.iter().rev().copied().collect();
                let ra = att(&rev);
                if ra < attachments {
                    attachments = ra;
                    order = rev;
                }
            }
            order.push(u);
            let kind = if cycle {
                ZooKind::C5u { attachments }
            } else {
                ZooKind::P5u { attachments }
            };
            return Some(ZooMatch { kind, order });
        }
    }
    None
}

/// Canonical graph of a zoo kind, with `order` the identity.
pub fn zoo_graph(kind: &ZooKind) -> Graph {
    let plus_u = |base: Graph, att: &[u8]| {
        let mut e: Vec<(usize, usize)> = base.edges().map(|(a, b)| (a as usize, b as usize)).collect();
        e.extend(att.iter().map(|&a| (a as usize, 5)));
        Graph::from_edge_list(6, &e).expect("valid")
    };
    match kind {
        ZooKind::Path { k } => Graph::path(*k),
        ZooKind::Cycle { k } => Graph::cycle(*k),
        ZooKind::C5u { attachments } => plus_u(Graph::cycle(5), attachments),
        ZooKind::P5u { attachments } => plus_u(Graph::path(5), attachments),
        ZooKind::Fixed { template } => template.graph(),
        ZooKind::Complement { of } => zoo_graph(of).complement(),
    }
}

/// Membership in the zoo: long paths and cycles, C5 or P5 plus one vertex,
/// the fixed templates, and complements of all of these. The one-vertex
/// extensions are accepted whenever u is neither isolated nor universal,
/// which admits the twin-expanded C5, P5 and co-P5.
pub fn recognize_zoo(g: &Graph) -> Option<ZooMatch> {
    if let Some(m) = zoo_direct(g) {
        return Some(m);
    }
    let co = g.complement();
    zoo_direct(&co).map(|m| ZooMatch {
        kind: ZooKind::Complement { of: Box::new(m.kind) },
        order: m.order,
    })
}

// ---------------------------------------------------------------------------
// split graphs

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitPartition {
    /// Independent side.
    pub s: Vec<Vertex>,
    /// Clique side, as large as possible.
    pub k: Vec<Vertex>,
}

pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.n();
    let mut order: Vec<Vertex> = (0..n as Vertex).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = order
        .iter()
        .enumerate()
        .take_while(|&(i, &v)| g.degree(v) >= i)
        .count();
    let mut k = order[..m].to_vec();
    let mut s = order[m..].to_vec();
    k.sort_unstable();
    s.sort_unstable();
    if k.iter().any(|&v| g.count_neighbors_in(v, &k) != m - 1) {
        return None;
    }
    if s.iter().any(|&v| g.count_neighbors_in(v, &s) != 0) {
        return None;
    }
    if let Some(i) = s.iter().position(|&v| g.count_neighbors_in(v, &k) == m) {
        let v = s.remove(i);
        let at = k.partition_point(|&x| x < v);
        k.insert(at, v);
    }
    Some(SplitPartition { s, k })
}

/// Degree levels of the independent side. Index 0 of every vector is
/// unused; `a[i]` holds the S vertices of degree i, `b[i]` and `c[i]` the
/// common and the union neighborhood of `a[i]` (both empty when `a[i]` is),
/// and `c_prime[i]` the union of `c[j]` for j <= i - 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitLevels {
    pub ell: usize,
    pub a: Vec<Vec<Vertex>>,
    pub b: Vec<Vec<Vertex>>,
    pub c: Vec<Vec<Vertex>>,
    pub c_prime: Vec<Vec<Vertex>>,
    /// Smallest i with nonempty `b[i]`.
    pub i_min: Option<usize>,
    /// |b[i]| >= i - 1
    pub thin_stable: Vec<bool>,
    /// |c[i]| <= i + 1
    pub thick_stable: Vec<bool>,
}

impl SplitLevels {
    pub fn a_len(&self, i: usize) -> usize {
        self.a.get(i).map_or(0, Vec::len)
    }

    pub fn b_at(&self, i: usize) -> &[Vertex] {
        self.b.get(i).map_or(&[], |v| v.as_slice())
    }

    pub fn c_at(&self, i: usize) -> &[Vertex] {
        self.c.get(i).map_or(&[], |v| v.as_slice())
    }
}

pub fn split_levels(g: &Graph, part: &SplitPartition) -> SplitLevels {
    let ell = part.s.iter().map(|&v| g.degree(v)).max().unwrap_or(0);
    let mut a = vec![Vec::new(); ell + 1];
    for &v in &part.s {
        a[g.degree(v)].push(v);
    }
    let mut count = vec![0u32; g.n()];
    let mut b = vec![Vec::new(); ell + 1];
    let mut c = vec![Vec::new(); ell + 1];
    for i in 1..=ell {
        let mut touched = Vec::new();
        for &s in &a[i] {
            for x in g.neighbors(s) {
                if count[x as usize] == 0 {
                    touched.push(x);
                }
                count[x as usize] += 1;
            }
        }
        touched.sort_unstable();
        b[i] = touched.iter().copied().filter(|&x| count[x as usize] as usize == a[i].len()).collect();
        for &x in &touched {
            count[x as usize] = 0;
        }
        c[i] = touched;
    }
    let mut c_prime = vec![Vec::new(); ell + 1];
    let mut acc: Vec<Vertex> = Vec::new();
    for i in 3..=ell {
        acc = union(&acc, &c[i - 2]);
        c_prime[i] = acc.clone();
    }
    let i_min = (1..=ell).find(|&i| !b[i].is_empty());
    let thin_stable = (0..=ell).map(|i| i >= 1 && b[i].len() + 1 >= i).collect();
    let thick_stable = (0..=ell).map(|i| c[i].len() <= i + 1).collect();
    SplitLevels { ell, a, b, c, c_prime, i_min, thin_stable, thick_stable }
}

pub(crate) fn is_subset(x: &[Vertex], y: &[Vertex]) -> bool {
    x.iter().all(|v| y.binary_search(v).is_ok())
}

pub(crate) fn intersects(x: &[Vertex], y: &[Vertex]) -> bool {
    x.iter().any(|v| y.binary_search(v).is_ok())
}

fn union(x: &[Vertex], y: &[Vertex]) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = x.iter().chain(y).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// H1: P4 a-b-c-d with a pendant on b and a pendant on c.
pub fn h1() -> Graph {
    Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]).expect("valid")
}

/// H2: P4 a-b-c-d with two pendants on b.
pub fn h2() -> Graph {
    Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (1, 5)]).expect("valid")
}

fn has_h(g: &Graph, verts: &[Vertex]) -> bool {
    let (sub, _) = g.induced_subgraph(verts);
    [h1(), h2()].iter().any(|p| matches!(find_induced(&sub, p), Ok(Some(_))))
}

fn in_h(g: &Graph, verts: &[Vertex], s: Vertex) -> bool {
    let (sub, map) = g.induced_subgraph(verts);
    let Ok(local) = map.binary_search(&s) else {
        return false;
    };
    [h1(), h2()]
        .iter()
        .any(|p| matches!(find_induced_through(&sub, p, local as Vertex), Ok(Some(_))))
}

/// First failed condition of the level-wise characterization of
/// {H1, H2, co-H1, co-H2}-freeness for prime split graphs, as
/// `(level, condition)` with conditions numbered 1 to 5. Conditions are
/// checked at nonempty levels only, and the vertex set searched in the last
/// condition also contains every level at or below i - 2.
pub fn split_characterization_violation(g: &Graph, part: &SplitPartition, lv: &SplitLevels) -> Option<(usize, u8)> {
    let with_k = |sets: &[&[Vertex]]| -> Vec<Vertex> {
        let mut v: Vec<Vertex> = sets.iter().flat_map(|s| s.iter().copied()).chain(part.k.iter().copied()).collect();
        v.sort_unstable();
        v
    };
    for i in 1..=lv.ell {
        let a = &lv.a[i];
        if a.is_empty() {
            continue;
        }
        let prev: &[Vertex] = if i >= 2 { &lv.a[i - 1] } else { &[] };
        if !(lv.thin_stable[i] || lv.thick_stable[i]) {
            return Some((i, 1));
        }
        if !is_subset(&lv.c_prime[i], &lv.b[i]) {
            return Some((i, 2));
        }
        if a.len() >= 4 && lv.thick_stable[i] && !lv.thin_stable[i] {
            if i != lv.ell {
                return Some((i, 3));
            }
            if !prev.is_empty()
                && (prev.len() > 3 || !is_subset(&lv.c[i - 1], &lv.c[i]) || has_h(g, &with_k(&[a, prev])))
            {
                return Some((i, 3));
            }
        }
        if i >= 2 && prev.len() >= 4 && lv.thin_stable[i - 1]
            && (i != 2 || !is_subset(&lv.b[i - 1], &lv.b[i]) || has_h(g, &with_k(&[a, prev])))
        {
            return Some((i, 4));
        }
        if a.len() < 4 && prev.len() < 4 {
            let lower: Vec<Vertex> = (1..i.saturating_sub(1)).flat_map(|j| lv.a[j].iter().copied()).collect();
            let verts = with_k(&[a, prev, &lower]);
            for &s in a {
                if in_h(g, &verts, s) {
                    return Some((i, 5));
                }
                for &t in prev {
                    let shared = g.neighbors(t).filter(|&x| g.has_edge(s, x)).count();
                    if g.degree(t) - shared > 1 {
                        return Some((i, 5));
                    }
                }
            }
        }
    }
    None
}

/// Direct check: no induced H1, H2 or their complements.
pub fn is_h_free_direct(g: &Graph) -> bool {
    let pats = [h1(), h2(), h1().complement(), h2().complement()];
    !pats.iter().any(|p| matches!(find_induced(g, p), Ok(Some(_))))
}

/// Prime split graph free of H1, H2 and their complements.
pub fn is_split_h_free(g: &Graph) -> Option<(SplitPartition, SplitLevels)> {
    let part = split_partition(g)?;
    let lv = split_levels(g, &part);
    split_characterization_violation(g, &part, &lv).is_none().then_some((part, lv))
}

/// Structural consequences i to vi of H-freeness, evaluated as flags.
pub fn split_level_flags(g: &Graph, lv: &SplitLevels) -> [bool; 6] {
    let ell = lv.ell;
    let nonempty = |i: usize| lv.a_len(i) > 0;
    let f1 = (1..=ell).all(|i| lv.a_len(i) < 4 || i == 1 || i == ell);
    let f2 = (3..=ell).all(|i| {
        (1..=i - 2).all(|j| is_subset(lv.b_at(j), lv.c_at(j)) && is_subset(lv.c_at(j), lv.b_at(i)))
    });
    let f3 = (3..=ell).filter(|&j| nonempty(j) && lv.b[j].is_empty()).all(|j| {
        lv.c_prime[j].is_empty() && (1..=j - 2).all(|i| !nonempty(i))
    });
    let f4 = (2..=ell).all(|i| {
        let k = lv.a_len(i);
        let iff = lv.b[i].is_empty() == (k == i + 1 || k == 0);
        let exact = k != i + 1
            || lv.c[i].iter().all(|&x| g.count_neighbors_in(x, &lv.a[i]) == i);
        iff && exact
    });
    let f5 = (2..ell).all(|i| {
        if !nonempty(i) || !nonempty(i + 1) || lv.a_len(i) >= 4 || lv.a_len(i + 1) >= 4 {
            return true;
        }
        let applies = ((i == 2 || i == 3) && !intersects(&lv.c[i], &lv.b[i + 1]))
            || (i >= 4 && i < ell && !intersects(&lv.b[i], &lv.b[i + 1]));
        !applies
            || (is_subset(&lv.c[i], &lv.c[i + 1])
                && lv.b[i].iter().all(|&x| lv.a_len(i + 1) - g.count_neighbors_in(x, &lv.a[i + 1]) <= 1))
    });
    let f6 = ell <= 2 || (1..=ell).all(|i| !nonempty(i) || !lv.b[i].is_empty() || i <= 2 || i == ell);
    [f1, f2, f3, f4, f5, f6]
}

// ---------------------------------------------------------------------------
// classification

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    Cograph,
    P4Sparse,
    P4Tidy,
    PartnerLimited,
    Unsupported,
}

impl GraphClass {
    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Cograph => "cograph",
            GraphClass::P4Sparse => "p4-sparse",
            GraphClass::P4Tidy => "p4-tidy",
            GraphClass::PartnerLimited => "partner-limited",
            GraphClass::Unsupported => "unsupported",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum PrimeKind {
    Spider { thin: bool, r: usize, pattern: SpiderPattern },
    /// C5, P5 or co-P5 quotient with single-vertex children.
    FivePrime { base: ZooKind },
    /// C5, P5 or co-P5 quotient with one child of two vertices; the
    /// six-vertex node graph is a zoo member.
    FivePrimeTwin { base: ZooKind, kind: ZooKind },
    Zoo { kind: ZooKind },
    SplitHFree,
    Unsupported { reason: String },
}

#[derive(Debug, Clone)]
pub struct PrimeAnalysis {
    pub kind: PrimeKind,
    pub class: GraphClass,
    /// On quotient vertices.
    pub spider: Option<SpiderPartition>,
    /// On quotient vertices, except for `FivePrimeTwin`, where it is on the
    /// node graph induced by the node's sorted vertex list.
    pub zoo: Option<ZooMatch>,
    /// On quotient vertices.
    pub split: Option<(SplitPartition, SplitLevels)>,
}

impl PrimeAnalysis {
    fn unsupported(reason: String) -> Self {
        PrimeAnalysis {
            kind: PrimeKind::Unsupported { reason },
            class: GraphClass::Unsupported,
            spider: None,
            zoo: None,
            split: None,
        }
    }
}

pub fn analyze_prime(g: &Graph, tree: &MdTree, node: usize) -> PrimeAnalysis {
    let nd = tree.node(node);
    let q = nd.quotient.as_deref().expect("prime node has a quotient");
    let sizes: Vec<usize> = nd.children.iter().map(|&c| tree.node(c).len()).collect();
    if let Some(sp) = recognize_spider(q) {
        let (pattern, _) = spider_pattern(&sp, |x| sizes[x as usize]);
        let class = match pattern {
            SpiderPattern::Pristine => GraphClass::P4Sparse,
            SpiderPattern::Quasi { .. } => GraphClass::P4Tidy,
            SpiderPattern::Wls { .. } | SpiderPattern::ThickWls { .. } => GraphClass::PartnerLimited,
            SpiderPattern::Irregular => {
                return PrimeAnalysis::unsupported(format!(
                    "spider node at vertex {} has leg modules of sizes {:?}",
                    nd.min_vertex,
                    sp.s.iter().chain(&sp.c).map(|&x| sizes[x as usize]).collect::<Vec<_>>()
                ))
            }
        };
        return PrimeAnalysis {
            kind: PrimeKind::Spider { thin: sp.thin, r: sp.r(), pattern },
            class,
            spider: Some(sp),
            zoo: None,
            split: None,
        };
    }
    let singletons = sizes.iter().all(|&s| s == 1);
    if q.n() == 5 {
        let Some(base) = recognize_zoo(q) else {
            return PrimeAnalysis::unsupported(format!("five-vertex prime node at vertex {}", nd.min_vertex));
        };
        if singletons {
            return PrimeAnalysis {
                kind: PrimeKind::FivePrime { base: base.kind.clone() },
                class: GraphClass::P4Tidy,
                spider: None,
                zoo: Some(base),
                split: None,
            };
        }
        let doubled = sizes.iter().filter(|&&s| s == 2).count();
        if doubled == 1 && sizes.iter().all(|&s| s <= 2) {
            let (ng, _) = g.induced_subgraph(&tree.sorted_vertices(node));
            if let Some(m) = recognize_zoo(&ng) {
                return PrimeAnalysis {
                    kind: PrimeKind::FivePrimeTwin { base: base.kind, kind: m.kind.clone() },
                    class: GraphClass::PartnerLimited,
                    spider: None,
                    zoo: Some(m),
                    split: None,
                };
            }
        }
        return PrimeAnalysis::unsupported(format!(
            "five-vertex prime node at vertex {} has child sizes {:?}",
            nd.min_vertex, sizes
        ));
    }
    if !singletons {
        return PrimeAnalysis::unsupported(format!(
            "prime node at vertex {} with {} children has a non-trivial child",
            nd.min_vertex,
            sizes.len()
        ));
    }
    if let Some(m) = recognize_zoo(q) {
        return PrimeAnalysis {
            kind: PrimeKind::Zoo { kind: m.kind.clone() },
            class: GraphClass::PartnerLimited,
            spider: None,
            zoo: Some(m),
            split: None,
        };
    }
    if let Some(part) = split_partition(q) {
        let lv = split_levels(q, &part);
        return match split_characterization_violation(q, &part, &lv) {
            None => PrimeAnalysis {
                kind: PrimeKind::SplitHFree,
                class: GraphClass::PartnerLimited,
                spider: None,
                zoo: None,
                split: Some((part, lv)),
            },
            Some((i, cond)) => PrimeAnalysis::unsupported(format!(
                "prime split node at vertex {} fails condition {cond} at level {i}",
                nd.min_vertex
            )),
        };
    }
    PrimeAnalysis::unsupported(format!(
        "prime node at vertex {} with {} children matches no known family",
        nd.min_vertex,
        sizes.len()
    ))
}

#[derive(Debug, Clone, Serialize)]
pub struct NodeClass {
    pub node: usize,
    pub min_vertex: Vertex,
    pub size: usize,
    pub kind: PrimeKind,
    pub class: GraphClass,
}

/// Most restrictive supported class plus per-prime-node evidence.
#[derive(Debug, Clone, Serialize)]
pub struct ClassLabel {
    pub best: GraphClass,
    pub nodes: Vec<NodeClass>,
}

pub fn classify_tree(g: &Graph, tree: &MdTree) -> (ClassLabel, Vec<(usize, PrimeAnalysis)>) {
    let mut best = GraphClass::Cograph;
    let mut nodes = Vec::new();
    let mut analyses = Vec::new();
    for i in tree.prime_nodes() {
        let pa = analyze_prime(g, tree, i);
        best = best.max(pa.class);
        nodes.push(NodeClass {
            node: i,
            min_vertex: tree.node(i).min_vertex,
            size: tree.node(i).len(),
            kind: pa.kind.clone(),
            class: pa.class,
        });
        analyses.push((i, pa));
    }
    (ClassLabel { best, nodes }, analyses)
}

pub fn classify_graph(g: &Graph) -> ClassLabel {
    if g.n() == 0 {
        return ClassLabel { best: GraphClass::Cograph, nodes: Vec::new() };
    }
    classify_tree(g, &decompose(g)).0
}

/// Connected with at least 3 vertices and a vertex of degree 1.
pub fn has_connected_pendant(g: &Graph) -> bool {
    g.n() >= 3 && g.min_degree() == Some(1) && components(g).len() == 1
}
