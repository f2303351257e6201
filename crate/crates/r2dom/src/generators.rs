//! Seeded instance generators for every supported class and prime family.
//!
//! Vertex labels follow the leaf order of the generated decomposition, so
//! every module is a contiguous label range and neighborhoods stay
//! range-compact even for very large instances.

use rand::rngs::StdRng;
use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Span, Vertex};
use crate::oracle::find_induced_through;
use crate::recognize::{
    h1, h2, is_h_free_direct, is_prime_graph, split_partition, FixedZoo, GraphClass, WlsOp, ZooKind,
};

/// Attempts made by [`gen_split_hfree`] before giving up.
pub const SPLIT_ATTEMPT_CAP: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("no prime H-free split graph on {n} vertices after {attempts} attempts")]
    AttemptCap { n: usize, attempts: usize },
    #[error("invalid parameters: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum GenKind {
    Cograph,
    P4Sparse,
    P4Tidy,
    PartnerLimited,
    Spider { r: usize, thin: bool },
    QuasiSpider { r: usize, thin: bool },
    Wls { r: usize, thin: bool, op: WlsOp, t: usize },
    SplitHfree,
    Zoo { kind: ZooKind },
    Arbitrary { p: f64 },
}

/// A fully determined generation request. Spider-type kinds spend the
/// vertices left over after the legs on a random cograph head.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn generate(&self) -> Result<Graph, GenError> {
        let mut rng = StdRng::seed_from_u64(self.seed);
        let n = self.n;
        let head_after = |used: usize, rng: &mut StdRng| -> Result<Graph, GenError> {
            if used > n {
                return Err(GenError::Invalid(format!("needs at least {used} vertices, got n = {n}")));
            }
            Ok(gen_cograph(n - used, rng))
        };
        match &self.kind {
            GenKind::Cograph => Ok(gen_cograph(n, &mut rng)),
            GenKind::P4Sparse => gen_p4_class(GraphClass::P4Sparse, n, &mut rng),
            GenKind::P4Tidy => gen_p4_class(GraphClass::P4Tidy, n, &mut rng),
            GenKind::PartnerLimited => gen_p4_class(GraphClass::PartnerLimited, n, &mut rng),
            &GenKind::Spider { r, thin } => {
                check_r(r)?;
                let head = head_after(2 * r, &mut rng)?;
                Ok(spider(r, thin, &head))
            }
            &GenKind::QuasiSpider { r, thin } => {
                check_r(r)?;
                let head = head_after(2 * r + 1, &mut rng)?;
                Ok(gen_quasi_spider(r, thin, &head, &mut rng))
            }
            &GenKind::Wls { r, thin, op, t } => {
                check_r(r)?;
                let extra = match op {
                    WlsOp::R1 | WlsOp::R2 => 2,
                    WlsOp::R3 => t.max(2),
                };
                let head = head_after(2 * r + extra, &mut rng)?;
                let g = gen_wls_exact(r, thin, op, t, extra, &head, &mut rng)?;
                Ok(g)
            }
            GenKind::SplitHfree => gen_split_hfree(n, &mut rng),
            GenKind::Zoo { kind } => Ok(zoo_instance(kind)),
            &GenKind::Arbitrary { p } => Ok(gen_gnp(n, p, &mut rng)),
        }
    }
}

fn check_r(r: usize) -> Result<(), GenError> {
    if r < 2 {
        return Err(GenError::Invalid(format!("spider needs r >= 2, got {r}")));
    }
    Ok(())
}

/// Random cograph on `n` vertices: a random cotree with 2 to 4 children per
/// internal node and alternating series/parallel labels.
pub fn gen_cograph(n: usize, rng: &mut StdRng) -> Graph {
    if n == 0 {
        return Graph::empty(0);
    }
    let mut lists: Vec<Vec<Span>> = vec![Vec::new(); n];
    // (lo, hi, series, inherited neighbor spans)
    let mut stack: Vec<(usize, usize, bool, Vec<Span>)> = vec![(0, n, rng.gen(), Vec::new())];
    while let Some((lo, hi, series, inherited)) = stack.pop() {
        let size = hi - lo;
        if size == 1 {
            lists[lo] = inherited;
            continue;
        }
        let k = rng.gen_range(2..=size.min(4));
        let mut cuts: Vec<usize> = sample(rng, size - 1, k - 1).into_iter().map(|c| lo + c + 1).collect();
        cuts.sort_unstable();
        let mut bounds = vec![lo];
        bounds.extend(cuts);
        bounds.push(hi);
        for w in bounds.windows(2) {
            let mut l = inherited.clone();
            if series {
                l.push((lo as Vertex, w[0] as Vertex));
                l.push((w[1] as Vertex, hi as Vertex));
            }
            stack.push((w[0], w[1], !series, l));
        }
    }
    Graph::from_span_lists(n, lists)
}

/// Replaces quotient vertex `i` by `children[i]`. Child `i` occupies a
/// contiguous label block, in quotient order.
pub fn substitute(q: &Graph, children: &[Graph]) -> Graph {
    assert_eq!(q.n(), children.len(), "one child per quotient vertex");
    let mut off = Vec::with_capacity(children.len() + 1);
    off.push(0usize);
    for c in children {
        off.push(off.last().unwrap() + c.n());
    }
    let n = *off.last().unwrap();
    let mut lists = Vec::with_capacity(n);
    for (i, c) in children.iter().enumerate() {
        let shift = off[i] as Vertex;
        let outer: Vec<Span> = q
            .neighbors(i as Vertex)
            .map(|j| (off[j as usize] as Vertex, off[j as usize + 1] as Vertex))
            .collect();
        for v in 0..c.n() as Vertex {
            let mut l: Vec<Span> = c.spans(v).iter().map(|&(a, b)| (a + shift, b + shift)).collect();
            l.extend_from_slice(&outer);
            lists.push(l);
        }
    }
    Graph::from_span_lists(n, lists)
}

/// Spider with legs `s_i = i`, `c_i = r + i` and the head on labels from
/// `2r` on.
pub fn spider(r: usize, thin: bool, head: &Graph) -> Graph {
    let h = head.n();
    let n = 2 * r + h;
    let (r32, n32) = (r as Vertex, n as Vertex);
    let mut lists: Vec<Vec<Span>> = Vec::with_capacity(n);
    for i in 0..r32 {
        lists.push(if thin { vec![(r32 + i, r32 + i + 1)] } else { vec![(r32, r32 + i), (r32 + i + 1, 2 * r32)] });
    }
    for i in 0..r32 {
        let mut l = if thin { vec![(i, i + 1)] } else { vec![(0, i), (i + 1, r32)] };
        l.push((r32, r32 + i));
        l.push((r32 + i + 1, n32));
        lists.push(l);
    }
    let shift = 2 * r32;
    for v in 0..h as Vertex {
        let mut l: Vec<Span> = head.spans(v).iter().map(|&(a, b)| (a + shift, b + shift)).collect();
        l.push((r32, 2 * r32));
        lists.push(l);
    }
    Graph::from_span_lists(n, lists)
}

fn random_small(k: usize, rng: &mut StdRng) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).filter(|_| rng.gen_bool(0.5)).collect();
    Graph::from_edge_list(k, &edges).expect("valid")
}

/// Spider quotient (head collapsed to one vertex when present) with the
/// given leg modules substituted; `mods[i]` is the size of the module at
/// quotient vertex `i` (S legs, then C legs).
fn spider_with_modules(r: usize, thin: bool, mods: &[usize], head: &Graph, rng: &mut StdRng) -> Graph {
    let has_head = head.n() > 0;
    let q = spider(r, thin, &Graph::empty(usize::from(has_head)));
    let mut children: Vec<Graph> = mods.iter().map(|&k| random_small(k, rng)).collect();
    if has_head {
        children.push(head.clone());
    }
    substitute(&q, &children)
}

/// Spider with one leg vertex replaced by K2 or S2.
pub fn gen_quasi_spider(r: usize, thin: bool, head: &Graph, rng: &mut StdRng) -> Graph {
    let mut mods = vec![1; 2 * r];
    mods[rng.gen_range(0..2 * r)] = 2;
    spider_with_modules(r, thin, &mods, head, rng)
}

/// Well-labelled spider. For R3, `t` modules of size 2 go on distinct legs
/// at the S ends (C ends for thick spiders), plus a random number of
/// modules at the opposite ends of other legs, two modules at least.
pub fn gen_wls(r: usize, thin: bool, op: WlsOp, t: usize, head: &Graph, rng: &mut StdRng) -> Result<Graph, GenError> {
    let extra = match op {
        WlsOp::R1 | WlsOp::R2 => 2,
        WlsOp::R3 => {
            if t > r {
                return Err(GenError::Invalid(format!("R3 with t = {t} on r = {r} legs")));
            }
            t + rng.gen_range(2usize.saturating_sub(t)..=r - t)
        }
    };
    gen_wls_exact(r, thin, op, t, extra, head, rng)
}

/// As [`gen_wls`], with `extra` the exact number of added vertices.
fn gen_wls_exact(
    r: usize,
    thin: bool,
    op: WlsOp,
    t: usize,
    extra: usize,
    head: &Graph,
    rng: &mut StdRng,
) -> Result<Graph, GenError> {
    let mut mods = vec![1; 2 * r];
    let (primary, other) = if thin { (0, r) } else { (r, 0) };
    let mut legs: Vec<usize> = (0..r).collect();
    legs.shuffle(rng);
    match op {
        WlsOp::R1 => mods[primary + legs[0]] = 3,
        WlsOp::R2 => {
            mods[legs[0]] = 2;
            mods[r + legs[0]] = 2;
        }
        WlsOp::R3 => {
            let rest = extra.checked_sub(t).unwrap_or(0);
            if t > r || t + rest > r || t + rest < 2 || extra < t {
                return Err(GenError::Invalid(format!("R3 with t = {t} and {extra} modules on r = {r} legs")));
            }
            for &leg in &legs[..t] {
                mods[primary + leg] = 2;
            }
            for &leg in &legs[t..t + rest] {
                mods[other + leg] = 2;
            }
        }
    }
    Ok(spider_with_modules(r, thin, &mods, head, rng))
}

/// Canonical graph of a zoo member.
pub fn zoo_instance(kind: &ZooKind) -> Graph {
    crate::recognize::zoo_graph(kind)
}

/// Random zoo member on at most `max_n` vertices (`max_n >= 6`).
pub fn gen_zoo_kind(max_n: usize, rng: &mut StdRng) -> ZooKind {
    let fixed: Vec<FixedZoo> = FixedZoo::ALL.iter().copied().filter(|f| f.graph().n() <= max_n).collect();
    let base = match rng.gen_range(0..5) {
        0 => ZooKind::Path { k: rng.gen_range(6..=max_n) },
        1 => ZooKind::Cycle { k: rng.gen_range(6..=max_n) },
        2 | 3 => {
            let mask = rng.gen_range(1..31u8);
            let attachments = (0..5).filter(|i| mask >> i & 1 == 1).collect();
            if rng.gen() {
                ZooKind::C5u { attachments }
            } else {
                ZooKind::P5u { attachments }
            }
        }
        _ => ZooKind::Fixed { template: *fixed.choose(rng).expect("templates with 6 vertices exist") },
    };
    if rng.gen_bool(0.3) {
        ZooKind::Complement { of: Box::new(base) }
    } else {
        base
    }
}

/// Random prime split graph free of H1, H2 and their complements, by
/// generate-and-filter. Every fourth attempt draws independent random
/// neighborhoods; the others grow a P4 one vertex at a time, keeping a new
/// vertex only if it creates no twin and no forbidden pattern passes
/// through it. Every proposal goes through the same final filter.
pub fn gen_split_hfree(n: usize, rng: &mut StdRng) -> Result<Graph, GenError> {
    if n < 5 {
        return Err(GenError::Invalid(format!("prime split graphs need n >= 5, got {n}")));
    }
    let patterns = [h1(), h2(), h1().complement(), h2().complement()];
    for attempt in 0..SPLIT_ATTEMPT_CAP {
        let proposal = if attempt % 4 == 0 { random_split(n, rng) } else { grown_split(n, &patterns, rng) };
        let Some(g) = proposal else { continue };
        if is_prime_graph(&g) && split_partition(&g).is_some() && is_h_free_direct(&g) {
            return Ok(g);
        }
    }
    Err(GenError::AttemptCap { n, attempts: SPLIT_ATTEMPT_CAP })
}

fn random_split(n: usize, rng: &mut StdRng) -> Option<Graph> {
    let nk = rng.gen_range(2..=n - 2);
    let p = rng.gen_range(0.15..0.85);
    let mut edges = Vec::new();
    for a in 0..nk {
        for b in a + 1..nk {
            edges.push((a, b));
        }
        for s in nk..n {
            if rng.gen_bool(p) {
                edges.push((s, a));
            }
        }
    }
    Graph::from_edge_list(n, &edges).ok()
}

fn grown_split(n: usize, patterns: &[Graph], rng: &mut StdRng) -> Option<Graph> {
    // P4 a-b-c-d: clique {b, c}, stable {a, d}
    let mut clique = vec![1usize, 2];
    let mut stable = vec![0usize, 3];
    let mut edges = vec![(0, 1), (1, 2), (2, 3)];
    let p = rng.gen_range(0.2..0.8);
    for v in 4..n {
        let mut placed = false;
        for _ in 0..30 {
            let into_clique = rng.gen_bool(0.4);
            let mut extra: Vec<(usize, usize)> = Vec::new();
            if into_clique {
                extra.extend(clique.iter().map(|&k| (k, v)));
                extra.extend(stable.iter().filter(|_| rng.gen_bool(p)).map(|&s| (s, v)));
            } else {
                extra.extend(clique.iter().filter(|_| rng.gen_bool(p)).map(|&k| (k, v)));
                if extra.is_empty() {
                    continue;
                }
            }
            let all: Vec<(usize, usize)> = edges.iter().chain(&extra).copied().collect();
            let g = Graph::from_edge_list(v + 1, &all).ok()?;
            let hood = |u: Vertex, skip: Vertex| g.neighbors(u).filter(move |&x| x != skip);
            let twin = (0..v as Vertex).any(|u| hood(u, v as Vertex).eq(hood(v as Vertex, u)));
            let clean = !twin
                && patterns.iter().all(|pat| matches!(find_induced_through(&g, pat, v as Vertex), Ok(None)));
            if clean {
                edges = all;
                if into_clique { clique.push(v) } else { stable.push(v) }
                placed = true;
                break;
            }
        }
        if !placed {
            return None;
        }
    }
    Graph::from_edge_list(n, &edges).ok()
}

/// Erdos-Renyi G(n, p).
pub fn gen_gnp(n: usize, p: f64, rng: &mut StdRng) -> Graph {
    let p = p.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("valid")
}

/// Random graph on exactly `n` vertices whose MD prime nodes are drawn from
/// the families allowed in `class`.
pub fn gen_p4_class(class: GraphClass, n: usize, rng: &mut StdRng) -> Result<Graph, GenError> {
    if class == GraphClass::Unsupported {
        return Err(GenError::Invalid("no generator for unsupported graphs".into()));
    }
    Ok(build_class(class, n, rng))
}

fn build_class(class: GraphClass, n: usize, rng: &mut StdRng) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    if class > GraphClass::Cograph && n >= 4 && rng.gen_bool(0.6) {
        let p = prime_block(class, n, rng);
        let rest = n - p.n();
        if rest == 0 {
            return p;
        }
        let other = build_class(class, rest, rng);
        return if rng.gen() { Graph::join(&p, &other) } else { Graph::disjoint_union(&p, &other) };
    }
    let k = rng.gen_range(2..=n.min(4));
    let mut cuts: Vec<usize> = sample(rng, n - 1, k - 1).into_iter().map(|c| c + 1).collect();
    cuts.sort_unstable();
    let mut bounds = vec![0];
    bounds.extend(cuts);
    bounds.push(n);
    let series = rng.gen_bool(0.5);
    let mut acc: Option<Graph> = None;
    for w in bounds.windows(2) {
        let child = build_class(class, w[1] - w[0], rng);
        acc = Some(match acc {
            None => child,
            Some(a) if series => Graph::join(&a, &child),
            Some(a) => Graph::disjoint_union(&a, &child),
        });
    }
    acc.expect("k >= 2")
}

/// One prime-rooted block on at most `n >= 4` vertices.
fn prime_block(class: GraphClass, n: usize, rng: &mut StdRng) -> Graph {
    let tidy = class >= GraphClass::P4Tidy;
    let pl = class >= GraphClass::PartnerLimited;
    let mut options: Vec<u8> = vec![0];
    if tidy && n >= 5 {
        options.extend([1, 2]);
    }
    if pl && n >= 6 {
        options.extend([3, 4, 5, 6]);
    }
    let thin = rng.gen();
    match *options.choose(rng).unwrap() {
        1 => {
            let r = rng.gen_range(2..=(n - 1) / 2);
            let head = build_class(class, rng.gen_range(0..=n - 2 * r - 1), rng);
            gen_quasi_spider(r, thin, &head, rng)
        }
        2 => {
            let g = match rng.gen_range(0..3) {
                0 => Graph::cycle(5),
                1 => Graph::path(5),
                _ => Graph::path(5).complement(),
            };
            if pl && n >= 6 && rng.gen() {
                let mut children = vec![Graph::empty(1); 5];
                children[rng.gen_range(0..5)] = random_small(2, rng);
                substitute(&g, &children)
            } else {
                g
            }
        }
        3 => {
            let r = rng.gen_range(2..=(n - 2) / 2);
            let op = *[WlsOp::R1, WlsOp::R2, WlsOp::R3].choose(rng).unwrap();
            let budget = n - 2 * r;
            let extra = match op {
                WlsOp::R1 | WlsOp::R2 => 2,
                WlsOp::R3 => rng.gen_range(2..=budget.min(r)),
            };
            let t = match op {
                WlsOp::R3 => rng.gen_range(0..=extra),
                _ => 0,
            };
            let head = build_class(class, rng.gen_range(0..=budget - extra), rng);
            gen_wls_exact(r, thin, op, t, extra, &head, rng).expect("parameters chosen in range")
        }
        4 | 5 => zoo_instance(&gen_zoo_kind(n, rng)),
        6 => match gen_split_hfree(rng.gen_range(5..=n.min(9)), rng) {
            Ok(g) => g,
            Err(_) => spider(2, true, &Graph::empty(0)),
        },
        _ => {
            let r = rng.gen_range(2..=n / 2);
            let head = build_class(class, rng.gen_range(0..=n - 2 * r), rng);
            spider(r, thin, &head)
        }
    }
}

/// Applies a uniformly random relabeling.
pub fn relabel_random(g: &Graph, rng: &mut StdRng) -> Graph {
    let mut perm: Vec<Vertex> = (0..g.n() as Vertex).collect();
    perm.shuffle(rng);
    g.permute(&perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::find_induced;
    use crate::recognize::{classify_graph, recognize_spider, recognize_well_labelled_spider};

    #[test]
    fn cograph_is_p4_free() {
        for seed in 0..40 {
            let g = gen_cograph(9, &mut StdRng::seed_from_u64(seed));
            assert_eq!(g.n(), 9);
            assert!(g.is_well_formed());
            assert_eq!(find_induced(&g, &Graph::path(4)).unwrap(), None);
        }
        assert_eq!(gen_cograph(1, &mut StdRng::seed_from_u64(3)), Graph::empty(1));
    }

    #[test]
    fn spider_shapes() {
        let g = spider(3, true, &Graph::empty(0));
        let p = recognize_spider(&g).unwrap();
        assert!(p.thin);
        let g = spider(4, false, &Graph::cycle(4));
        assert_eq!(g.m(), 4 * 3 + 6 + 4 * 4 + 4);
        let p = recognize_spider(&g).unwrap();
        assert!(!p.thin);
        assert_eq!(p.h, vec![8, 9, 10, 11]);
    }

    #[test]
    fn wls_round_trip() {
        let mut rng = StdRng::seed_from_u64(5);
        let g = gen_wls_exact(3, true, WlsOp::R3, 2, 2, &Graph::empty(0), &mut rng).unwrap();
        let (_, op, t) = recognize_well_labelled_spider(&g).unwrap();
        assert_eq!((op, t), (WlsOp::R3, 2));
    }

    #[test]
    fn class_generators_stay_in_class() {
        for (class, seeds) in [
            (GraphClass::P4Sparse, 0..30),
            (GraphClass::P4Tidy, 0..30),
            (GraphClass::PartnerLimited, 0..30),
        ] {
            for seed in seeds {
                let g = gen_p4_class(class, 12, &mut StdRng::seed_from_u64(seed)).unwrap();
                assert_eq!(g.n(), 12);
                let got = classify_graph(&g).best;
                assert!(got <= class, "{class:?} seed {seed}: {got:?} {g:?}");
            }
        }
    }

    #[test]
    fn determinism() {
        let spec = GenSpec { kind: GenKind::PartnerLimited, n: 13, seed: 77 };
        assert_eq!(spec.generate().unwrap(), spec.generate().unwrap());
    }

    #[test]
    fn split_hfree_filter() {
        let g = gen_split_hfree(9, &mut StdRng::seed_from_u64(1)).unwrap();
        assert!(split_partition(&g).is_some());
        assert!(is_h_free_direct(&g));
    }
}
