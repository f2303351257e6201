//! Immutable simple undirected graphs.
//!
//! Neighborhoods are stored as sorted, disjoint, non-touching half-open
//! vertex ranges. A path costs one or two ranges per vertex, a clique one;
//! joins and complements of range-compact graphs stay compact, which keeps
//! dense instances with 10^5 vertices in memory.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = u32;

/// Half-open vertex interval `[start, end)`.
pub type Span = (Vertex, Vertex);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {index}: endpoint {vertex} out of range for n = {n}")]
    EndpointOutOfRange { index: usize, vertex: usize, n: usize },
    #[error("edge {index}: self-loop at vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("operation needs at least {needed} vertices, graph has {n}")]
    TooSmall { n: usize, needed: usize },
    #[error("value {value} at vertex {vertex} is not in {{0, 1, 2}}")]
    BadValue { vertex: usize, value: u8 },
    #[error("function has {got} values, graph has {n} vertices")]
    LengthMismatch { got: usize, n: usize },
}

/// Capped domination number: only 1, 2 and "3 or more" are ever needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DomCap {
    One,
    Two,
    ThreePlus,
}

impl DomCap {
    pub fn from_value(v: usize) -> DomCap {
        match v {
            0 | 1 => DomCap::One,
            2 => DomCap::Two,
            _ => DomCap::ThreePlus,
        }
    }

    pub fn value(self) -> usize {
        match self {
            DomCap::One => 1,
            DomCap::Two => 2,
            DomCap::ThreePlus => 3,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: u64,
    offsets: Vec<usize>,
    spans: Vec<Span>,
    degrees: Vec<u32>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}", self.n, self.m)?;
        if self.m <= 64 {
            write!(f, ", edges={:?}", self.edges().collect::<Vec<_>>())?;
        }
        write!(f, ")")
    }
}

/// Sorts, merges touching/overlapping spans and drops empty ones.
pub(crate) fn normalize_spans(spans: &mut Vec<Span>) {
    spans.retain(|&(a, b)| a < b);
    spans.sort_unstable();
    let mut out: Vec<Span> = Vec::with_capacity(spans.len());
    for &(a, b) in spans.iter() {
        match out.last_mut() {
            Some(last) if a <= last.1 => last.1 = last.1.max(b),
            _ => out.push((a, b)),
        }
    }
    *spans = out;
}

/// Intersection of two normalized span lists.
pub(crate) fn intersect_spans(x: &[Span], y: &[Span]) -> Vec<Span> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < x.len() && j < y.len() {
        let a = x[i].0.max(y[j].0);
        let b = x[i].1.min(y[j].1);
        if a < b {
            out.push((a, b));
        }
        if x[i].1 < y[j].1 {
            i += 1;
        } else {
            j += 1;
        }
    }
    out
}

/// Complement of a normalized span list inside `[0, n)`.
pub(crate) fn gaps(spans: &[Span], n: usize) -> Vec<Span> {
    let mut out = Vec::with_capacity(spans.len() + 1);
    let mut cur = 0;
    for &(a, b) in spans {
        if cur < a {
            out.push((cur, a));
        }
        cur = b;
    }
    if (cur as usize) < n {
        out.push((cur, n as Vertex));
    }
    out
}

pub(crate) fn span_len(spans: &[Span]) -> usize {
    spans.iter().map(|&(a, b)| (b - a) as usize).sum()
}

/// Number of elements of the sorted slice `xs` inside the spans.
pub(crate) fn count_sorted_in(spans: &[Span], xs: &[Vertex]) -> usize {
    spans
        .iter()
        .map(|&(a, b)| xs.partition_point(|&x| x < b) - xs.partition_point(|&x| x < a))
        .sum()
}

/// Smallest-unvisited-vertex finder with path compression.
pub(crate) struct Unvisited {
    next: Vec<Vertex>,
}

impl Unvisited {
    pub(crate) fn new(n: usize) -> Self {
        Unvisited {
            next: (0..=n as Vertex).collect(),
        }
    }

    /// First unvisited vertex `>= x` (returns n when none).
    pub(crate) fn find(&mut self, x: Vertex) -> Vertex {
        let mut root = x;
        while self.next[root as usize] != root {
            root = self.next[root as usize];
        }
        let mut cur = x;
        while self.next[cur as usize] != root {
            let nxt = self.next[cur as usize];
            self.next[cur as usize] = root;
            cur = nxt;
        }
        root
    }

    pub(crate) fn remove(&mut self, x: Vertex) {
        self.next[x as usize] = x + 1;
    }
}

impl Graph {
    /// Builds a graph from per-vertex span lists, normalizing each list.
    /// Callers guarantee symmetry and absence of self-loops.
    pub(crate) fn from_span_lists(n: usize, lists: Vec<Vec<Span>>) -> Graph {
        debug_assert_eq!(lists.len(), n);
        let mut offsets = Vec::with_capacity(n + 1);
        let mut spans = Vec::new();
        let mut degrees = Vec::with_capacity(n);
        offsets.push(0);
        let mut total: u64 = 0;
        for mut list in lists {
            normalize_spans(&mut list);
            let d = span_len(&list);
            total += d as u64;
            degrees.push(d as u32);
            spans.extend_from_slice(&list);
            offsets.push(spans.len());
        }
        spans.shrink_to_fit();
        Graph {
            n,
            m: total / 2,
            offsets,
            spans,
            degrees,
        }
    }

    pub(crate) fn from_sorted_lists(lists: Vec<Vec<Vertex>>) -> Graph {
        let n = lists.len();
        let span_lists = lists
            .into_iter()
            .map(|l| {
                let mut out: Vec<Span> = Vec::new();
                for v in l {
                    match out.last_mut() {
                        Some(last) if last.1 == v => last.1 = v + 1,
                        Some(last) if last.1 > v => {}
                        _ => out.push((v, v + 1)),
                    }
                }
                out
            })
            .collect();
        Graph::from_span_lists(n, span_lists)
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut lists: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        for (index, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::EndpointOutOfRange { index, vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, vertex: u });
            }
            lists[u].push(v as Vertex);
            lists[v].push(u as Vertex);
        }
        for l in lists.iter_mut() {
            l.sort_unstable();
            l.dedup();
        }
        Ok(Graph::from_sorted_lists(lists))
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_span_lists(n, vec![Vec::new(); n])
    }

    pub fn complete(n: usize) -> Graph {
        Graph::empty(n).complement()
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edge_list(n, &edges).expect("cycle edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.degrees[v as usize] as usize
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.degrees.iter().min().map(|&d| d as usize)
    }

    /// Neighborhood of `v` as sorted disjoint half-open ranges.
    pub fn spans(&self, v: Vertex) -> &[Span] {
        let v = v as usize;
        &self.spans[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Total number of stored ranges (a size measure for compact graphs).
    pub fn span_count(&self) -> usize {
        self.spans.len()
    }

    pub fn closed_spans(&self, v: Vertex) -> Vec<Span> {
        let mut s = self.spans(v).to_vec();
        s.push((v, v + 1));
        normalize_spans(&mut s);
        s
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.spans(v).iter().flat_map(|&(a, b)| a..b)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let s = self.spans(u);
        let i = s.partition_point(|&(a, _)| a <= v);
        i > 0 && s[i - 1].1 > v
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n as Vertex).flat_map(move |u| {
            self.neighbors_above(u).map(move |v| (u, v))
        })
    }

    fn neighbors_above(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.spans(u)
            .iter()
            .filter(move |&&(_, b)| b > u + 1)
            .flat_map(move |&(a, b)| a.max(u + 1)..b)
    }

    /// |N(v) ∩ xs| for a sorted slice `xs`.
    pub fn count_neighbors_in(&self, v: Vertex, xs: &[Vertex]) -> usize {
        count_sorted_in(self.spans(v), xs)
    }

    pub(crate) fn span_lists(&self) -> Vec<Vec<Span>> {
        (0..self.n as Vertex).map(|v| self.spans(v).to_vec()).collect()
    }

    pub fn complement(&self) -> Graph {
        let lists = (0..self.n as Vertex)
            .map(|v| {
                let mut g = gaps(self.spans(v), self.n);
                remove_point(&mut g, v);
                g
            })
            .collect();
        Graph::from_span_lists(self.n, lists)
    }

    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let shift = a.n as Vertex;
        let mut lists = a.span_lists();
        for v in 0..b.n as Vertex {
            lists.push(b.spans(v).iter().map(|&(x, y)| (x + shift, y + shift)).collect());
        }
        Graph::from_span_lists(a.n + b.n, lists)
    }

    pub fn join(a: &Graph, b: &Graph) -> Graph {
        let shift = a.n as Vertex;
        let total = (a.n + b.n) as Vertex;
        let mut lists = Vec::with_capacity(a.n + b.n);
        for v in 0..a.n as Vertex {
            let mut l = a.spans(v).to_vec();
            l.push((shift, total));
            lists.push(l);
        }
        for v in 0..b.n as Vertex {
            let mut l: Vec<Span> = b.spans(v).iter().map(|&(x, y)| (x + shift, y + shift)).collect();
            l.push((0, shift));
            lists.push(l);
        }
        Graph::from_span_lists(a.n + b.n, lists)
    }

    /// Subgraph induced by `vs`, relabeled monotonically. Returns the graph
    /// and the map from new to old labels (the sorted, deduplicated `vs`).
    pub fn induced_subgraph(&self, vs: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut keep = vs.to_vec();
        if !keep.windows(2).all(|w| w[0] < w[1]) {
            keep.sort_unstable();
            keep.dedup();
        }
        let g = self.induced_sorted(&keep);
        (g, keep)
    }

    /// Induced subgraph on an already sorted, duplicate-free vertex list.
    pub(crate) fn induced_sorted(&self, keep: &[Vertex]) -> Graph {
        let lists = keep
            .iter()
            .map(|&v| {
                self.spans(v)
                    .iter()
                    .filter_map(|&(a, b)| {
                        let lo = keep.partition_point(|&x| x < a) as Vertex;
                        let hi = keep.partition_point(|&x| x < b) as Vertex;
                        (lo < hi).then_some((lo, hi))
                    })
                    .collect()
            })
            .collect();
        Graph::from_span_lists(keep.len(), lists)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut lists: Vec<Vec<Vertex>> = vec![Vec::new(); self.n];
        for v in 0..self.n as Vertex {
            lists[perm[v as usize] as usize] = self.neighbors(v).map(|u| perm[u as usize]).collect();
        }
        for l in lists.iter_mut() {
            l.sort_unstable();
        }
        Graph::from_sorted_lists(lists)
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if (v as usize) < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v as usize, n: self.n })
        }
    }

    pub fn add_pendant(&self, v: Vertex) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let w = self.n as Vertex;
        let mut lists = self.span_lists();
        lists[v as usize].push((w, w + 1));
        lists.push(vec![(v, v + 1)]);
        Ok(Graph::from_span_lists(self.n + 1, lists))
    }

    pub fn add_twin(&self, v: Vertex, true_twin: bool) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let w = self.n as Vertex;
        let mut lists = self.span_lists();
        for u in self.neighbors(v) {
            lists[u as usize].push((w, w + 1));
        }
        let mut own = self.spans(v).to_vec();
        if true_twin {
            own.push((v, v + 1));
            lists[v as usize].push((w, w + 1));
        }
        lists.push(own);
        Ok(Graph::from_span_lists(self.n + 1, lists))
    }

    pub fn has_universal_vertex(&self) -> Option<Vertex> {
        let target = self.n.saturating_sub(1) as u32;
        self.degrees.iter().position(|&d| d == target).map(|v| v as Vertex)
    }

    /// The non-neighbors of `v` other than `v` itself.
    pub fn non_neighbor_spans(&self, v: Vertex) -> Vec<Span> {
        let mut g = gaps(self.spans(v), self.n);
        remove_point(&mut g, v);
        g
    }

    /// True iff γ_R2 = 2, i.e. a universal vertex exists or two nonadjacent
    /// vertices are adjacent to everything else.
    pub fn gamma_r2_is_two(&self) -> Result<bool, GraphError> {
        if self.n < 2 {
            return Err(GraphError::TooSmall { n: self.n, needed: 2 });
        }
        Ok(self.gamma_r2_two_witness().is_some())
    }

    /// A weight-2 R2 function when one exists (n >= 2).
    pub fn gamma_r2_two_witness(&self) -> Option<R2Function> {
        if self.n < 2 {
            return None;
        }
        let mut f = R2Function::zeros(self.n);
        if let Some(u) = self.has_universal_vertex() {
            f.set(u, 2);
            return Some(f);
        }
        let target = (self.n - 2) as u32;
        for x in 0..self.n as Vertex {
            if self.degrees[x as usize] != target {
                continue;
            }
            let y = self.non_neighbor_spans(x)[0].0;
            if self.degrees[y as usize] == target {
                f.set(x, 1);
                f.set(y, 1);
                return Some(f);
            }
        }
        None
    }

    /// Some pair dominating every vertex, when no universal vertex exists.
    /// Candidates for the first vertex are restricted to the closed
    /// neighborhood of a minimum-degree vertex.
    pub fn dominating_pair(&self) -> Option<(Vertex, Vertex)> {
        if self.n < 2 {
            return None;
        }
        let w = (0..self.n as Vertex).min_by_key(|&v| self.degrees[v as usize])?;
        let mut cands: Vec<Vertex> = self.neighbors(w).collect();
        cands.push(w);
        for x in cands {
            let undominated = self.non_neighbor_spans(x);
            let mut common: Option<Vec<Span>> = None;
            'outer: for &(a, b) in &undominated {
                for z in a..b {
                    let cz = self.closed_spans(z);
                    let next = match &common {
                        None => cz,
                        Some(c) => intersect_spans(c, &cz),
                    };
                    if next.is_empty() {
                        common = Some(next);
                        break 'outer;
                    }
                    common = Some(next);
                }
            }
            match common {
                None => {
                    let y = if x == 0 { 1 } else { 0 };
                    return Some((x.min(y), x.max(y)));
                }
                Some(c) if !c.is_empty() => {
                    // x never lies in the closed neighborhood of a vertex it misses
                    let y = c[0].0;
                    return Some((x.min(y), x.max(y)));
                }
                _ => {}
            }
        }
        None
    }

    pub fn domination_at_most_two(&self) -> DomCap {
        if self.has_universal_vertex().is_some() {
            DomCap::One
        } else if self.dominating_pair().is_some() {
            DomCap::Two
        } else {
            DomCap::ThreePlus
        }
    }

    /// Per-vertex adjacency bitmasks, available when n <= 64.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(
            (0..self.n as Vertex)
                .map(|v| {
                    self.spans(v).iter().fold(0u64, |acc, &(a, b)| {
                        acc | (range_mask(b) & !range_mask(a))
                    })
                })
                .collect(),
        )
    }

    /// Checks symmetry, absence of self-loops and the degree sum.
    pub fn is_well_formed(&self) -> bool {
        let mut total = 0u64;
        for v in 0..self.n as Vertex {
            if self.has_edge(v, v) {
                return false;
            }
            for u in self.neighbors(v) {
                if (u as usize) >= self.n || !self.has_edge(u, v) {
                    return false;
                }
            }
            total += self.degree(v) as u64;
        }
        total == 2 * self.m
    }

    /// Validity of an R2 function: every 0-vertex sees neighbor weight >= 2.
    /// Runs in time linear in the number of stored ranges.
    pub fn is_r2_function(&self, f: &R2Function) -> bool {
        if f.len() != self.n {
            return false;
        }
        let prefix = f.prefix_sums();
        (0..self.n as Vertex).all(|v| f.get(v) > 0 || self.neighbor_weight(v, &prefix) >= 2)
    }

    pub(crate) fn neighbor_weight(&self, v: Vertex, prefix: &[u64]) -> u64 {
        self.spans(v)
            .iter()
            .map(|&(a, b)| prefix[b as usize] - prefix[a as usize])
            .sum()
    }
}

fn range_mask(b: Vertex) -> u64 {
    if b >= 64 {
        u64::MAX
    } else {
        (1u64 << b) - 1
    }
}

fn remove_point(spans: &mut Vec<Span>, v: Vertex) {
    if let Some(i) = spans.iter().position(|&(a, b)| a <= v && v < b) {
        let (a, b) = spans[i];
        let mut repl = Vec::with_capacity(2);
        if a < v {
            repl.push((a, v));
        }
        if v + 1 < b {
            repl.push((v + 1, b));
        }
        spans.splice(i..=i, repl);
    }
}

/// An assignment V -> {0, 1, 2}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct R2Function {
    values: Vec<u8>,
}

impl R2Function {
    pub fn zeros(n: usize) -> Self {
        R2Function { values: vec![0; n] }
    }

    pub fn from_values(values: Vec<u8>) -> Result<Self, GraphError> {
        if let Some(v) = values.iter().position(|&x| x > 2) {
            return Err(GraphError::BadValue { vertex: v, value: values[v] });
        }
        Ok(R2Function { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: Vertex) -> u8 {
        self.values[v as usize]
    }

    pub fn set(&mut self, v: Vertex, value: u8) {
        debug_assert!(value <= 2);
        self.values[v as usize] = value;
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn weight(&self) -> u64 {
        self.values.iter().map(|&x| x as u64).sum()
    }

    pub(crate) fn prefix_sums(&self) -> Vec<u64> {
        let mut p = Vec::with_capacity(self.values.len() + 1);
        let mut acc = 0u64;
        p.push(0);
        for &x in &self.values {
            acc += x as u64;
            p.push(acc);
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges_of(g: &Graph) -> Vec<(Vertex, Vertex)> {
        g.edges().collect()
    }

    #[test]
    fn edge_list_dedups_and_rejects_bad_edges() {
        let g = Graph::from_edge_list(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(Graph::from_edge_list(1, &[]).unwrap().n(), 1);
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1), (1, 3)]),
            Err(GraphError::EndpointOutOfRange { index: 1, vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(2, 2)]),
            Err(GraphError::SelfLoop { index: 0, vertex: 2 })
        );
    }

    #[test]
    fn p4_shape() {
        let p4 = Graph::path(4);
        assert_eq!(edges_of(&p4), vec![(0, 1), (1, 2), (2, 3)]);
        assert!(p4.is_well_formed());
    }

    #[test]
    fn complements() {
        let p4 = Graph::path(4);
        let c = p4.complement();
        assert_eq!(edges_of(&c), vec![(0, 2), (0, 3), (1, 3)]);
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        let c5 = Graph::cycle(5).complement();
        assert_eq!(c5.m(), 5);
        assert!(c5.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn unions_and_joins() {
        let u = Graph::disjoint_union(&Graph::path(2), &Graph::path(3));
        assert_eq!((u.n(), u.m()), (5, 3));
        let u = Graph::disjoint_union(&Graph::cycle(4), &Graph::empty(1));
        assert_eq!((u.n(), u.m()), (5, 4));
        assert_eq!(Graph::join(&Graph::empty(1), &Graph::empty(1)), Graph::complete(2));
        assert_eq!(Graph::join(&Graph::empty(2), &Graph::empty(2)), Graph::cycle(4).permute(&[0, 2, 1, 3]));
        let star = Graph::join(&Graph::empty(1), &Graph::path(3).complement());
        assert_eq!(star.has_universal_vertex(), Some(0));
    }

    #[test]
    fn induced_subgraphs() {
        let (g, map) = Graph::path(4).induced_subgraph(&[2, 0, 1]);
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(g, Graph::path(3));
        let (g, _) = Graph::cycle(5).induced_subgraph(&[0, 1, 2, 3]);
        assert_eq!(g, Graph::path(4));
        let (g, _) = Graph::cycle(5).induced_subgraph(&[1, 2, 3, 4]);
        assert_eq!(g, Graph::path(4));
    }

    #[test]
    fn universal_and_gamma_two() {
        assert!(Graph::complete(3).has_universal_vertex().is_some());
        assert_eq!(Graph::path(4).has_universal_vertex(), None);
        assert_eq!(Graph::empty(1).has_universal_vertex(), Some(0));
        assert!(Graph::cycle(4).gamma_r2_is_two().unwrap());
        assert!(!Graph::path(4).gamma_r2_is_two().unwrap());
        assert!(Graph::complete(5).gamma_r2_is_two().unwrap());
        assert!(Graph::empty(1).gamma_r2_is_two().is_err());
    }

    #[test]
    fn capped_domination() {
        assert_eq!(Graph::path(6).domination_at_most_two(), DomCap::Two);
        assert_eq!(Graph::path(6).dominating_pair(), Some((1, 4)));
        assert_eq!(Graph::complete(4).domination_at_most_two(), DomCap::One);
        assert_eq!(Graph::cycle(7).domination_at_most_two(), DomCap::ThreePlus);
        assert_eq!(Graph::empty(2).domination_at_most_two(), DomCap::Two);
    }

    #[test]
    fn pendants_and_twins() {
        assert_eq!(Graph::empty(1).add_pendant(0).unwrap(), Graph::complete(2));
        assert_eq!(Graph::complete(2).add_twin(0, true).unwrap(), Graph::complete(3));
        assert_eq!(
            Graph::complete(2).add_twin(0, false).unwrap(),
            Graph::path(3)
        );
        assert!(Graph::path(2).add_pendant(5).is_err());
    }

    #[test]
    fn r2_validity() {
        let p3 = Graph::path(3);
        let f = R2Function::from_values(vec![1, 0, 0]).unwrap();
        assert!(!p3.is_r2_function(&f));
        let f = R2Function::from_values(vec![0, 2, 0]).unwrap();
        assert!(p3.is_r2_function(&f));
        assert!(R2Function::from_values(vec![3]).is_err());
    }

    #[test]
    fn masks() {
        let m = Graph::path(3).adjacency_masks().unwrap();
        assert_eq!(m, vec![0b010, 0b101, 0b010]);
    }
}
