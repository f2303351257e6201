//! Modular decomposition.
//!
//! Recursive: connected components give parallel nodes, co-components give
//! series nodes, and otherwise the maximal strong modules are extracted by
//! partition refinement plus module-closure tests. Spiders whose legs are
//! single vertices are split off directly from their degree structure.

use serde::Serialize;

use crate::graph::{gaps, Graph, Span, Unvisited, Vertex};
use crate::recognize::recognize_spider;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Leaf,
    Parallel,
    Series,
    Prime,
}

#[derive(Debug, Clone)]
pub struct MdNode {
    pub kind: NodeKind,
    /// Arena indices, ordered by smallest contained vertex.
    pub children: Vec<usize>,
    pub parent: Option<usize>,
    pub min_vertex: Vertex,
    /// Prime nodes: graph on the children, child `i` is quotient vertex `i`.
    pub quotient: Option<Box<Graph>>,
    start: usize,
    end: usize,
}

impl MdNode {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end == self.start
    }
}

#[derive(Debug, Clone)]
pub struct MdTree {
    nodes: Vec<MdNode>,
    leaf_order: Vec<Vertex>,
    root: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct MdJson {
    pub kind: NodeKind,
    pub vertices: Vec<Vertex>,
    pub children: Vec<MdJson>,
}

impl MdTree {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn node(&self, i: usize) -> &MdNode {
        &self.nodes[i]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Vertices of a node in leaf order (contiguous for every node).
    pub fn vertices(&self, i: usize) -> &[Vertex] {
        let nd = &self.nodes[i];
        &self.leaf_order[nd.start..nd.end]
    }

    pub fn sorted_vertices(&self, i: usize) -> Vec<Vertex> {
        let mut v = self.vertices(i).to_vec();
        v.sort_unstable();
        v
    }

    /// Leaf order of the whole tree: every node's vertex set is a
    /// contiguous block of it.
    pub fn leaf_order(&self) -> &[Vertex] {
        &self.leaf_order
    }

    /// Node indices with children before parents, without a traversal:
    /// `decompose` allocates every child after its parent.
    pub fn bottom_up(&self) -> impl Iterator<Item = usize> {
        (0..self.nodes.len()).rev()
    }

    /// Node indices with children before parents, siblings left to right.
    pub fn post_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((i, expanded)) = stack.pop() {
            if expanded {
                out.push(i);
            } else {
                stack.push((i, true));
                for &c in self.nodes[i].children.iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    pub fn prime_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(|&i| self.nodes[i].kind == NodeKind::Prime)
    }

    pub fn to_json(&self) -> MdJson {
        self.json_of(self.root)
    }

    fn json_of(&self, i: usize) -> MdJson {
        MdJson {
            kind: self.nodes[i].kind,
            vertices: self.sorted_vertices(i),
            children: self.nodes[i].children.iter().map(|&c| self.json_of(c)).collect(),
        }
    }
}

struct Work {
    graph: Graph,
    labels: Vec<Vertex>,
    node: usize,
}

/// Modular decomposition tree of `g` (n >= 1).
pub fn decompose(g: &Graph) -> MdTree {
    assert!(g.n() >= 1, "decomposition needs at least one vertex");
    let mut nodes: Vec<MdNode> = Vec::new();
    let mut leaves: Vec<Option<Vertex>> = Vec::new();
    let new_node = |nodes: &mut Vec<MdNode>, leaves: &mut Vec<Option<Vertex>>, parent, min_vertex| {
        nodes.push(MdNode {
            kind: NodeKind::Leaf,
            children: Vec::new(),
            parent,
            min_vertex,
            quotient: None,
            start: 0,
            end: 0,
        });
        leaves.push(None);
        nodes.len() - 1
    };
    let root = new_node(&mut nodes, &mut leaves, None, 0);
    let mut stack = vec![Work {
        graph: g.clone(),
        labels: (0..g.n() as Vertex).collect(),
        node: root,
    }];
    while let Some(Work { graph, labels, node }) = stack.pop() {
        if graph.n() == 1 {
            nodes[node].kind = NodeKind::Leaf;
            leaves[node] = Some(labels[0]);
            continue;
        }
        let (kind, parts) = split_node(&graph);
        nodes[node].kind = kind;
        if kind == NodeKind::Prime {
            let reps: Vec<Vertex> = parts.iter().map(|p| p[0]).collect();
            nodes[node].quotient = Some(Box::new(graph.induced_sorted(&reps)));
        }
        let mut children = Vec::with_capacity(parts.len());
        let mut work = Vec::with_capacity(parts.len());
        for part in &parts {
            let child_labels: Vec<Vertex> = part.iter().map(|&v| labels[v as usize]).collect();
            let c = new_node(&mut nodes, &mut leaves, Some(node), child_labels[0]);
            children.push(c);
            work.push(Work {
                graph: graph.induced_sorted(part),
                labels: child_labels,
                node: c,
            });
        }
        drop(graph);
        debug_assert!(children.iter().all(|&c| c > node));
        nodes[node].children = children;
        stack.extend(work.into_iter().rev());
    }
    // assign contiguous leaf spans
    let mut leaf_order = Vec::with_capacity(g.n());
    let mut walk = vec![(root, false)];
    while let Some((i, done)) = walk.pop() {
        if done {
            nodes[i].end = leaf_order.len();
            continue;
        }
        nodes[i].start = leaf_order.len();
        if let Some(v) = leaves[i] {
            leaf_order.push(v);
            nodes[i].end = leaf_order.len();
        } else {
            walk.push((i, true));
            for &c in nodes[i].children.iter().rev() {
                walk.push((c, false));
            }
        }
    }
    MdTree {
        nodes,
        leaf_order,
        root,
    }
}

/// Kind of the root node of `g` (n >= 2) and its maximal strong modules as
/// sorted vertex lists ordered by first vertex.
pub fn split_node(g: &Graph) -> (NodeKind, Vec<Vec<Vertex>>) {
    let comps = components(g);
    if comps.len() > 1 {
        return (NodeKind::Parallel, comps);
    }
    let co = co_components(g);
    if co.len() > 1 {
        return (NodeKind::Series, co);
    }
    (NodeKind::Prime, prime_modules(g))
}

fn sweep(g: &Graph, complement: bool) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut unvisited = Unvisited::new(n);
    let mut comp_of = vec![u32::MAX; n];
    let mut count = 0u32;
    let mut stack = Vec::new();
    loop {
        let s = unvisited.find(0);
        if s as usize >= n {
            break;
        }
        unvisited.remove(s);
        comp_of[s as usize] = count;
        stack.push(s);
        while let Some(v) = stack.pop() {
            let owned: Vec<Span>;
            let spans: &[Span] = if complement {
                owned = gaps(g.spans(v), n);
                &owned
            } else {
                g.spans(v)
            };
            for &(a, b) in spans {
                let mut x = unvisited.find(a);
                while x < b {
                    unvisited.remove(x);
                    comp_of[x as usize] = count;
                    stack.push(x);
                    x = unvisited.find(x + 1);
                }
            }
        }
        count += 1;
    }
    let mut out = vec![Vec::new(); count as usize];
    for v in 0..n {
        out[comp_of[v] as usize].push(v as Vertex);
    }
    out
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<Vertex>> {
    sweep(g, false)
}

/// Connected components of the complement.
pub fn co_components(g: &Graph) -> Vec<Vec<Vertex>> {
    sweep(g, true)
}

pub fn verify_module(g: &Graph, s: &[Vertex]) -> bool {
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.is_empty() {
        return true;
    }
    let mut inside = vec![false; g.n()];
    for &v in &set {
        inside[v as usize] = true;
    }
    (0..g.n() as Vertex).filter(|&x| !inside[x as usize]).all(|x| {
        let c = g.count_neighbors_in(x, &set);
        c == 0 || c == set.len()
    })
}

/// Quotient of a node: one vertex per child, adjacent iff the child
/// representatives are adjacent in `g`.
pub fn quotient_graph(g: &Graph, tree: &MdTree, node: usize) -> Graph {
    let reps: Vec<Vertex> = tree.node(node).children.iter().map(|&c| tree.node(c).min_vertex).collect();
    let (q, _) = g.induced_subgraph(&reps);
    q
}

/// Maximal strong modules of a connected, co-connected graph.
pub fn prime_modules(g: &Graph) -> Vec<Vec<Vertex>> {
    if let Some(sp) = recognize_spider(g) {
        let mut parts: Vec<Vec<Vertex>> = sp.s.iter().chain(sp.c.iter()).map(|&v| vec![v]).collect();
        if !sp.h.is_empty() {
            parts.push(sp.h.clone());
        }
        parts.sort_unstable_by_key(|p| p[0]);
        return parts;
    }
    let n = g.n();
    let v = 0;
    let classes = modules_avoiding(g, v);
    let mut in_mv = vec![false; n];
    in_mv[v as usize] = true;
    let mut parts: Vec<Vec<Vertex>> = Vec::new();
    for class in classes {
        if min_module_is_proper(g, v, class[0]) {
            for &x in &class {
                in_mv[x as usize] = true;
            }
        } else {
            parts.push(class);
        }
    }
    parts.push((0..n as Vertex).filter(|&x| in_mv[x as usize]).collect());
    for p in parts.iter_mut() {
        p.sort_unstable();
    }
    parts.sort_unstable_by_key(|p| p[0]);
    parts
}

/// Partition of V − {v} into the maximal modules not containing v.
pub fn modules_avoiding(g: &Graph, v: Vertex) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<Vertex>> = Vec::new();
    let (mut adj, mut non): (Vec<Vertex>, Vec<Vertex>) = (Vec::new(), Vec::new());
    for x in 0..n as Vertex {
        if x == v {
            continue;
        }
        if g.has_edge(v, x) {
            adj.push(x);
        } else {
            non.push(x);
        }
    }
    for c in [adj, non] {
        if !c.is_empty() {
            for &x in &c {
                class_of[x as usize] = classes.len();
            }
            classes.push(c);
        }
    }
    let mut queued = vec![true; n];
    queued[v as usize] = false;
    let mut queue: Vec<Vertex> = (0..n as Vertex).filter(|&x| x != v).collect();
    let mut hits: Vec<usize> = vec![0; n.max(1)];
    let mut touched: Vec<usize> = Vec::new();
    while let Some(p) = queue.pop() {
        queued[p as usize] = false;
        let own = class_of[p as usize];
        for u in g.neighbors(p) {
            let c = class_of[u as usize];
            if c == usize::MAX || c == own {
                continue;
            }
            if hits[c] == 0 {
                touched.push(c);
            }
            hits[c] += 1;
        }
        for c in touched.drain(..) {
            let h = hits[c];
            hits[c] = 0;
            if h == classes[c].len() {
                continue;
            }
            let (inn, out): (Vec<Vertex>, Vec<Vertex>) =
                classes[c].iter().partition(|&&x| g.has_edge(p, x));
            let new_id = classes.len();
            for &x in &out {
                class_of[x as usize] = new_id;
            }
            classes[c] = inn;
            classes.push(out);
            if hits.len() < classes.len() {
                hits.resize(classes.len(), 0);
            }
            for &id in &[c, new_id] {
                for &x in &classes[id] {
                    if !queued[x as usize] {
                        queued[x as usize] = true;
                        queue.push(x);
                    }
                }
            }
        }
    }
    for c in classes.iter_mut() {
        c.sort_unstable();
    }
    classes.sort_unstable_by_key(|c| c[0]);
    classes
}

/// Whether the smallest module containing `a` and `b` is a proper subset.
pub fn min_module_is_proper(g: &Graph, a: Vertex, b: Vertex) -> bool {
    min_module(g, a, b).len() < g.n()
}

/// Smallest module containing `a` and `b`, grown by adding splitters.
///
/// Outside vertices are tracked as "sees all of M" (kept as spans) or
/// "sees none of M" (kept in a skip structure); each growth step moves the
/// vertices that change class into the queue.
pub fn min_module(g: &Graph, a: Vertex, b: Vertex) -> Vec<Vertex> {
    let n = g.n();
    let mut in_m = vec![false; n];
    let mut members = vec![a];
    in_m[a as usize] = true;
    let mut full: Vec<Span> = g.spans(a).to_vec();
    // zero set: vertices outside N[a]
    let mut zero = Unvisited::new(n);
    for &(x, y) in g.spans(a) {
        for z in x..y {
            zero.remove(z);
        }
    }
    zero.remove(a);
    let mut queue = vec![b];
    let mut queued = vec![false; n];
    queued[b as usize] = true;
    while let Some(y) = queue.pop() {
        in_m[y as usize] = true;
        members.push(y);
        // leaving the zero set: vertices adjacent to y
        for &(x, e) in g.spans(y) {
            let mut z = zero.find(x);
            while z < e {
                zero.remove(z);
                if !in_m[z as usize] && !queued[z as usize] {
                    queued[z as usize] = true;
                    queue.push(z);
                }
                z = zero.find(z + 1);
            }
        }
        // leaving the full set: vertices not adjacent to y
        let kept = crate::graph::intersect_spans(&full, g.spans(y));
        for z in difference(&full, &kept) {
            if !in_m[z as usize] && !queued[z as usize] {
                queued[z as usize] = true;
                queue.push(z);
            }
        }
        full = kept;
    }
    members.sort_unstable();
    members.dedup();
    members
}

fn difference(whole: &[Span], part: &[Span]) -> Vec<Vertex> {
    let mut out = Vec::new();
    let mut j = 0;
    for &(a, b) in whole {
        let mut x = a;
        while x < b {
            while j < part.len() && part[j].1 <= x {
                j += 1;
            }
            if j < part.len() && part[j].0 <= x {
                x = part[j].1.min(b);
            } else {
                let stop = if j < part.len() { part[j].0.min(b) } else { b };
                out.extend(x..stop);
                x = stop;
            }
        }
    }
    out
}
