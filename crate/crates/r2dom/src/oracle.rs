//! Exponential exact searches used as ground truth.

use thiserror::Error;

use crate::graph::{Graph, R2Function, Vertex};

pub const DEFAULT_ORACLE_LIMIT: usize = 20;
pub const ALL_OPTIMAL_LIMIT: usize = 9;
pub const PARTNER_LIMIT: usize = 12;
pub const PATTERN_LIMIT: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices, oracle limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("pattern has {n} vertices, at most {limit} supported")]
    PatternTooLarge { n: usize, limit: usize },
}

#[derive(Debug, Clone)]
pub struct OracleResult {
    pub value: u64,
    pub witness: R2Function,
    pub all_optimal: Option<Vec<R2Function>>,
    pub nodes_explored: u64,
}

fn masks_within(g: &Graph, limit: usize) -> Result<Vec<u64>, OracleError> {
    if g.n() > limit || g.n() > 64 {
        return Err(OracleError::TooLarge { n: g.n(), limit: limit.min(64) });
    }
    Ok(g.adjacency_masks().expect("n <= 64"))
}

struct Search {
    adj: Vec<u64>,
    order: Vec<usize>,
    check_at: Vec<Vec<usize>>,
    reach_from: Vec<usize>,
    val: Vec<u8>,
    nsum: Vec<u16>,
    assigned: u64,
    best: u64,
    best_vals: Vec<u8>,
    nodes: u64,
}

impl Search {
    fn new(adj: Vec<u64>) -> Search {
        let n = adj.len();
        let deg: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut check_at = vec![Vec::new(); n];
        for x in 0..n {
            let last = bits(adj[x]).map(|u| pos[u]).chain([pos[x]]).max().unwrap();
            check_at[last].push(x);
        }
        let mut reach_from = vec![1; n + 1];
        for i in (0..n).rev() {
            reach_from[i] = reach_from[i + 1].max(deg[order[i]] + 1);
        }
        let (best, best_vals) = greedy(&adj);
        Search {
            adj,
            order,
            check_at,
            reach_from,
            val: vec![0; n],
            nsum: vec![0; n],
            assigned: 0,
            best,
            best_vals,
            nodes: 0,
        }
    }

    fn lower_bound(&self, i: usize) -> u64 {
        let n = self.adj.len();
        let unsatisfied = (0..n)
            .filter(|&x| {
                let fixed_positive = self.assigned >> x & 1 == 1 && self.val[x] > 0;
                !fixed_positive && self.nsum[x] < 2
            })
            .count();
        unsatisfied.div_ceil(self.reach_from[i]) as u64
    }

    fn dfs(&mut self, i: usize, w: u64) {
        self.nodes += 1;
        let n = self.adj.len();
        if i == n {
            if w < self.best {
                self.best = w;
                self.best_vals = self.val.clone();
            }
            return;
        }
        if w + self.lower_bound(i) >= self.best {
            return;
        }
        let v = self.order[i];
        for value in [0u8, 1, 2] {
            if w + value as u64 >= self.best {
                break;
            }
            self.val[v] = value;
            self.assigned |= 1 << v;
            for u in bits(self.adj[v]) {
                self.nsum[u] += value as u16;
            }
            let ok = self.check_at[i]
                .iter()
                .all(|&x| self.val[x] > 0 || self.nsum[x] >= 2);
            if ok {
                self.dfs(i + 1, w + value as u64);
            }
            for u in bits(self.adj[v]) {
                self.nsum[u] -= value as u16;
            }
            self.assigned &= !(1 << v);
            self.val[v] = 0;
        }
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

/// Greedy upper bound: repeatedly put 2 on the vertex whose closed
/// neighborhood holds the most unsatisfied vertices.
fn greedy(adj: &[u64]) -> (u64, Vec<u8>) {
    let n = adj.len();
    let mut val = vec![0u8; n];
    let mut covered: u64 = 0;
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut w = 0;
    while covered != all {
        let y = (0..n)
            .filter(|&y| val[y] == 0)
            .max_by_key(|&y| ((adj[y] | 1 << y) & !covered).count_ones())
            .expect("some vertex is still unassigned");
        val[y] = 2;
        w += 2;
        covered |= adj[y] | 1 << y;
    }
    (w, val)
}

/// Exact γ_R2 by branch and bound over vertex values.
pub fn brute_gamma_r2(g: &Graph, limit: usize) -> Result<OracleResult, OracleError> {
    let adj = masks_within(g, limit)?;
    if adj.is_empty() {
        return Ok(OracleResult {
            value: 0,
            witness: R2Function::zeros(0),
            all_optimal: None,
            nodes_explored: 0,
        });
    }
    let mut s = Search::new(adj);
    s.dfs(0, 0);
    let witness = R2Function::from_values(s.best_vals).expect("values in range");
    debug_assert!(g.is_r2_function(&witness));
    Ok(OracleResult {
        value: s.best,
        witness,
        all_optimal: None,
        nodes_explored: s.nodes,
    })
}

/// Like [`brute_gamma_r2`] but also lists every minimum function (n <= 9).
pub fn brute_gamma_r2_all(g: &Graph) -> Result<OracleResult, OracleError> {
    let adj = masks_within(g, ALL_OPTIMAL_LIMIT)?;
    let n = adj.len();
    let mut best = u64::MAX;
    let mut all: Vec<Vec<u8>> = Vec::new();
    let mut vals = vec![0u8; n];
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        for v in vals.iter_mut() {
            *v = (c % 3) as u8;
            c /= 3;
        }
        let w: u64 = vals.iter().map(|&x| x as u64).sum();
        if w > best || !valid_masks(&adj, &vals) {
            continue;
        }
        if w < best {
            best = w;
            all.clear();
        }
        all.push(vals.clone());
    }
    let all: Vec<R2Function> = all
        .into_iter()
        .map(|v| R2Function::from_values(v).expect("values in range"))
        .collect();
    Ok(OracleResult {
        value: if n == 0 { 0 } else { best },
        witness: all.first().cloned().unwrap_or_else(|| R2Function::zeros(0)),
        all_optimal: Some(all),
        nodes_explored: total as u64,
    })
}

fn valid_masks(adj: &[u64], vals: &[u8]) -> bool {
    (0..adj.len()).all(|x| {
        vals[x] > 0 || bits(adj[x]).map(|u| vals[u] as u32).sum::<u32>() >= 2
    })
}

/// Exact domination number by subset search in increasing size.
pub fn brute_domination(g: &Graph, limit: usize) -> Result<usize, OracleError> {
    let adj = masks_within(g, limit)?;
    let n = adj.len();
    if n == 0 {
        return Ok(0);
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let closed: Vec<u64> = (0..n).map(|v| adj[v] | 1 << v).collect();
    for k in 1..=n {
        if dominates_with(&closed, all, k, 0, 0) {
            return Ok(k);
        }
    }
    unreachable!("the whole vertex set dominates")
}

fn dominates_with(closed: &[u64], all: u64, k: usize, start: usize, cov: u64) -> bool {
    if cov == all {
        return true;
    }
    if k == 0 {
        return false;
    }
    (start..closed.len()).any(|v| dominates_with(closed, all, k - 1, v + 1, cov | closed[v]))
}

/// Some induced embedding of `pattern` into `g`: `map[i]` is the image of
/// pattern vertex `i`.
pub fn find_induced(g: &Graph, pattern: &Graph) -> Result<Option<Vec<Vertex>>, OracleError> {
    find_pinned(g, pattern, None)
}

/// Some induced embedding of `pattern` whose image contains `v`.
pub fn find_induced_through(
    g: &Graph,
    pattern: &Graph,
    v: Vertex,
) -> Result<Option<Vec<Vertex>>, OracleError> {
    for p in 0..pattern.n() as Vertex {
        if let Some(map) = find_pinned(g, pattern, Some((p, v)))? {
            return Ok(Some(map));
        }
    }
    Ok(None)
}

fn find_pinned(
    g: &Graph,
    pattern: &Graph,
    pin: Option<(Vertex, Vertex)>,
) -> Result<Option<Vec<Vertex>>, OracleError> {
    let k = pattern.n();
    if k > PATTERN_LIMIT {
        return Err(OracleError::PatternTooLarge { n: k, limit: PATTERN_LIMIT });
    }
    if k > g.n() {
        return Ok(None);
    }
    // pattern vertices in BFS-ish order of decreasing degree so constraints bite early
    let mut order: Vec<Vertex> = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    if let Some((p, _)) = pin {
        placed[p as usize] = true;
        order.push(p);
    }
    while order.len() < k {
        let next = (0..k as Vertex)
            .filter(|&v| !placed[v as usize])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| pattern.has_edge(u, v)).count();
                (links, pattern.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex exists");
        placed[next as usize] = true;
        order.push(next);
    }
    let mut map = vec![Vertex::MAX; k];
    let mut used = vec![false; g.n()];
    let found = match pin {
        Some((p, v)) => {
            if (v as usize) >= g.n() || g.degree(v) < pattern.degree(p) {
                return Ok(None);
            }
            map[p as usize] = v;
            used[v as usize] = true;
            embed(g, pattern, &order, 1, &mut map, &mut used)
        }
        None => embed(g, pattern, &order, 0, &mut map, &mut used),
    };
    if found {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn embed(
    g: &Graph,
    p: &Graph,
    order: &[Vertex],
    i: usize,
    map: &mut [Vertex],
    used: &mut [bool],
) -> bool {
    if i == order.len() {
        return true;
    }
    let pv = order[i];
    for gv in 0..g.n() as Vertex {
        if used[gv as usize] || g.degree(gv) < p.degree(pv) {
            continue;
        }
        let consistent = order[..i].iter().all(|&pu| {
            p.has_edge(pu, pv) == g.has_edge(map[pu as usize], gv)
        });
        if !consistent {
            continue;
        }
        map[pv as usize] = gv;
        used[gv as usize] = true;
        if embed(g, p, order, i + 1, map, used) {
            return true;
        }
        used[gv as usize] = false;
    }
    map[pv as usize] = Vertex::MAX;
    false
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, OracleError> {
    if a.n() != b.n() || a.m() != b.m() {
        return Ok(false);
    }
    let mut da = a.degrees().to_vec();
    let mut db = b.degrees().to_vec();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(find_induced(a, b)?.is_some())
}

fn is_p4_mask(adj: &[u64], set: u64) -> bool {
    let mut edges = 0;
    for v in bits(set) {
        let d = (adj[v] & set).count_ones();
        if d == 0 || d > 2 {
            return false;
        }
        edges += d;
    }
    edges == 6
}

/// Every induced P4, as vertex bitmasks (n <= 64).
pub fn induced_p4s(g: &Graph) -> Result<Vec<u64>, OracleError> {
    let adj = masks_within(g, 64)?;
    let n = adj.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let s = 1u64 << a | 1 << b | 1 << c | 1 << d;
                    if is_p4_mask(&adj, s) {
                        out.push(s);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Maximum number of partners over all induced P4s (0 when P4-free).
pub fn max_partner_count(g: &Graph) -> Result<usize, OracleError> {
    let adj = masks_within(g, PARTNER_LIMIT)?;
    let n = adj.len();
    let mut best = 0;
    for a in induced_p4s(g)? {
        let partners = (0..n)
            .filter(|&v| a >> v & 1 == 0)
            .filter(|&v| {
                bits(a).any(|x| is_p4_mask(&adj, (a & !(1 << x)) | 1 << v))
            })
            .count();
        best = best.max(partners);
    }
    Ok(best)
}

/// True iff every 5-vertex subset induces at most one P4.
pub fn is_p4_sparse_brute(g: &Graph) -> Result<bool, OracleError> {
    let adj = masks_within(g, PARTNER_LIMIT)?;
    let n = adj.len();
    for a in induced_p4s(g)? {
        for v in (0..n).filter(|&v| a >> v & 1 == 0) {
            if bits(a).any(|x| is_p4_mask(&adj, (a & !(1 << x)) | 1 << v)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_graph() -> Graph {
        Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (4, 5)]).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(brute_gamma_r2(&Graph::empty(1), 20).unwrap().value, 1);
        assert_eq!(brute_gamma_r2(&Graph::path(5), 20).unwrap().value, 3);
        assert_eq!(brute_gamma_r2(&Graph::cycle(8), 20).unwrap().value, 4);
        assert_eq!(brute_gamma_r2(&q_graph(), 20).unwrap().value, 4);
    }

    #[test]
    fn refuses_large() {
        assert_eq!(
            brute_gamma_r2(&Graph::path(21), 20).unwrap_err(),
            OracleError::TooLarge { n: 21, limit: 20 }
        );
    }

    #[test]
    fn domination_values() {
        assert_eq!(brute_domination(&Graph::complete(4), 20).unwrap(), 1);
        assert_eq!(brute_domination(&Graph::cycle(7), 20).unwrap(), 3);
        assert_eq!(brute_domination(&Graph::path(6), 20).unwrap(), 2);
    }

    #[test]
    fn induced_search() {
        assert!(find_induced(&Graph::path(5), &Graph::path(4)).unwrap().is_some());
        assert!(find_induced(&Graph::complete(4), &Graph::path(4)).unwrap().is_none());
        let map = find_induced(&Graph::cycle(6), &Graph::path(5)).unwrap().unwrap();
        let (sub, _) = Graph::cycle(6).induced_subgraph(&map);
        assert_eq!(sub.m(), 4);
    }

    #[test]
    fn partners() {
        assert_eq!(max_partner_count(&Graph::complete(5)).unwrap(), 0);
        assert_eq!(max_partner_count(&Graph::cycle(5)).unwrap(), 1);
        assert_eq!(max_partner_count(&Graph::path(7)).unwrap(), 2);
    }

    #[test]
    fn all_optimal_functions() {
        let r = brute_gamma_r2_all(&Graph::path(3)).unwrap();
        assert_eq!(r.value, 2);
        // 2 on the center, or 1 on both ends
        assert_eq!(r.all_optimal.unwrap().len(), 2);
    }
}
