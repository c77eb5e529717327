//! Containment and counting: cliques, subgraphs, Berge copies, linearity.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::{bits, Graph, Pair, VertexSet};
use crate::hypergraph::{HyperedgeId, Hypergraph};

/// Number of `r`-vertex complete subgraphs of `g`. `r = 0` counts the empty clique.
pub fn count_cliques(g: &Graph, r: usize) -> u64 {
    fn go(g: &Graph, cand: VertexSet, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        if (cand.count_ones() as usize) < left {
            return 0;
        }
        if left == 1 {
            return cand.count_ones() as u64;
        }
        let mut total = 0;
        for v in bits(cand) {
            // only extend upward so every clique is counted once
            let higher = cand & !((2u64 << v) - 1);
            total += go(g, higher & g.neighbors(v), left - 1);
        }
        total
    }
    go(g, g.vertex_mask(), r)
}

/// Vertex set of some `r`-clique, smallest vertices first.
pub fn find_clique(g: &Graph, r: usize) -> Option<Vec<usize>> {
    fn go(g: &Graph, cand: VertexSet, left: usize, acc: &mut Vec<usize>) -> bool {
        if left == 0 {
            return true;
        }
        for v in bits(cand) {
            if ((cand >> v).count_ones() as usize) < left {
                break;
            }
            acc.push(v);
            let higher = cand & !((2u64 << v) - 1);
            if go(g, higher & g.neighbors(v), left - 1, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut acc = Vec::with_capacity(r);
    go(g, g.vertex_mask(), r, &mut acc).then_some(acc)
}

/// `embedding[i]` is the host vertex carrying pattern vertex `i`.
pub type Embedding = Vec<usize>;

/// Breadth-first order of the pattern vertices starting at `seeds`; further
/// components start at their highest-degree vertex.
pub(crate) fn connected_order(pattern: &Graph, seeds: &[usize]) -> Vec<usize> {
    let n = pattern.n();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut seen: VertexSet = 0;
    let mut queue = std::collections::VecDeque::new();
    for &s in seeds {
        if seen >> s & 1 == 0 {
            seen |= 1 << s;
            order.push(s);
            queue.push_back(s);
        }
    }
    loop {
        while let Some(v) = queue.pop_front() {
            for w in bits(pattern.neighbors(v) & !seen) {
                seen |= 1 << w;
                order.push(w);
                queue.push_back(w);
            }
        }
        let next = (0..n)
            .filter(|&v| seen >> v & 1 == 0)
            .max_by_key(|&v| (pattern.degree(v), std::cmp::Reverse(v)));
        match next {
            Some(v) => {
                seen |= 1 << v;
                order.push(v);
                queue.push_back(v);
            }
            None => return order,
        }
    }
}

/// Backtracking enumeration of injective homomorphic embeddings of `pattern`
/// into `host`, in deterministic order. `fixed` pins pattern vertices to host
/// vertices and must list the first entries of `order`. `visit` returns `true`
/// to stop; the function returns whether it stopped.
pub(crate) fn for_each_embedding(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    fixed: &[(usize, usize)],
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let pn = pattern.n();
    if pn > host.n() {
        return false;
    }
    let mut img = vec![usize::MAX; pn];
    let mut used: VertexSet = 0;
    // pattern neighbours placed earlier than each position
    let mut back: Vec<VertexSet> = Vec::with_capacity(pn);
    let mut placed: VertexSet = 0;
    for &p in order {
        back.push(pattern.neighbors(p) & placed);
        placed |= 1 << p;
    }
    fn rec(
        k: usize,
        host: &Graph,
        pattern: &Graph,
        order: &[usize],
        back: &[VertexSet],
        fixed: &[(usize, usize)],
        img: &mut Vec<usize>,
        used: &mut VertexSet,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if k == order.len() {
            return visit(img);
        }
        let p = order[k];
        let mut cand = host.vertex_mask() & !*used;
        for q in bits(back[k]) {
            cand &= host.neighbors(img[q]);
        }
        if let Some(&(_, x)) = fixed.iter().find(|&&(fp, _)| fp == p) {
            cand &= 1 << x;
        }
        let need = pattern.degree(p);
        for x in bits(cand) {
            if host.degree(x) < need {
                continue;
            }
            img[p] = x;
            *used |= 1 << x;
            let stop = rec(k + 1, host, pattern, order, back, fixed, img, used, visit);
            *used &= !(1 << x);
            if stop {
                return true;
            }
        }
        img[p] = usize::MAX;
        false
    }
    rec(0, host, pattern, order, &back, fixed, &mut img, &mut used, visit)
}

/// Generic backtracking embedder: first embedding of `pattern` in `host`.
pub fn find_embedding(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let order = connected_order(pattern, &[]);
    let mut found = None;
    for_each_embedding(host, pattern, &order, &[], &mut |img| {
        found = Some(img.to_vec());
        true
    });
    found
}

/// Does `g` contain a (not necessarily induced) copy of `f`? Returns an
/// embedding of `f.graph()` when it does.
pub fn contains_subgraph(g: &Graph, f: &FamilySpec) -> Option<Embedding> {
    match f {
        FamilySpec::Cycle(m) => find_cycle(g, *m),
        FamilySpec::Path(m) => find_path(g, *m),
        FamilySpec::Clique(m) => find_clique(g, *m),
        FamilySpec::Explicit(p) => find_embedding(g, p),
    }
}

pub fn is_free(g: &Graph, f: &FamilySpec) -> bool {
    contains_subgraph(g, f).is_none()
}

/// A cycle with exactly `m` vertices, listed in cyclic order starting at its
/// smallest vertex.
pub fn find_cycle(g: &Graph, m: usize) -> Option<Embedding> {
    if m < 3 || m > g.n() {
        return None;
    }
    let mut path = Vec::with_capacity(m);
    for s in 0..g.n() {
        if g.degree(s) < 2 {
            continue;
        }
        // all other cycle vertices are larger than s
        let allowed = g.vertex_mask() & !((2u64 << s) - 1);
        path.clear();
        path.push(s);
        if extend_path(g, &mut path, 1 << s, allowed, m, Some(s)) {
            return Some(path);
        }
    }
    None
}

/// A path with exactly `m` vertices.
pub fn find_path(g: &Graph, m: usize) -> Option<Embedding> {
    if m == 0 || m > g.n() {
        return None;
    }
    let mut path = Vec::with_capacity(m);
    for s in 0..g.n() {
        path.clear();
        path.push(s);
        if extend_path(g, &mut path, 1 << s, g.vertex_mask(), m, None) {
            return Some(path);
        }
    }
    None
}

fn extend_path(
    g: &Graph,
    path: &mut Vec<usize>,
    used: VertexSet,
    allowed: VertexSet,
    m: usize,
    close_to: Option<usize>,
) -> bool {
    let last = *path.last().unwrap();
    if path.len() == m {
        return close_to.map_or(true, |s| g.has_edge(last, s));
    }
    let mut cand = g.neighbors(last) & allowed & !used;
    if path.len() == m - 1 {
        if let Some(s) = close_to {
            cand &= g.neighbors(s);
        }
    }
    for v in bits(cand) {
        path.push(v);
        if extend_path(g, path, used | 1 << v, allowed, m, close_to) {
            return true;
        }
        path.pop();
    }
    false
}

/// A Berge copy of a graph inside a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BergeWitness {
    /// `core_map[i]` is the hypergraph vertex carrying vertex `i` of the pattern.
    pub core_map: Vec<usize>,
    /// Core edges (in hypergraph vertices) with the hyperedge assigned to each,
    /// in the pattern's edge order.
    pub assignment: Vec<(Pair, HyperedgeId)>,
}

impl BergeWitness {
    /// Checks containment, injectivity of both maps, and that the core is an
    /// image of `pattern`.
    pub fn validate(&self, h: &Hypergraph, pattern: &Graph) -> bool {
        if self.core_map.len() != pattern.n() {
            return false;
        }
        let mut seen_v: VertexSet = 0;
        for &v in &self.core_map {
            if v >= h.n() || seen_v >> v & 1 == 1 {
                return false;
            }
            seen_v |= 1 << v;
        }
        let expected: Vec<Pair> = pattern
            .edges()
            .map(|p| Pair::new(self.core_map[p.lo], self.core_map[p.hi]))
            .collect();
        if expected.len() != self.assignment.len() {
            return false;
        }
        let mut seen_h = std::collections::HashSet::new();
        for (want, &(pair, id)) in expected.iter().zip(&self.assignment) {
            if *want != pair || id >= h.len() || !seen_h.insert(id) {
                return false;
            }
            if h.edge(id) & pair.mask() != pair.mask() {
                return false;
            }
        }
        true
    }
}

/// Maximum matching from the left side, Kuhn style; `cand[i]` lists the right
/// vertices usable by left vertex `i`. Returns `right_of[i]` on success.
pub(crate) fn perfect_left_matching(cand: &[Vec<usize>], right_len: usize) -> Option<Vec<usize>> {
    fn augment(i: usize, cand: &[Vec<usize>], owner: &mut [usize], seen: &mut [bool]) -> bool {
        for &j in &cand[i] {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            if owner[j] == usize::MAX || augment(owner[j], cand, owner, seen) {
                owner[j] = i;
                return true;
            }
        }
        false
    }
    let mut owner = vec![usize::MAX; right_len];
    for i in 0..cand.len() {
        if cand[i].is_empty() {
            return None;
        }
        let mut seen = vec![false; right_len];
        if !augment(i, cand, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut right_of = vec![usize::MAX; cand.len()];
    for (j, &i) in owner.iter().enumerate() {
        if i != usize::MAX {
            right_of[i] = j;
        }
    }
    Some(right_of)
}

/// First Berge copy of `f` in `h`, enumerating cores in deterministic order.
pub fn contains_berge(h: &Hypergraph, f: &FamilySpec) -> Option<BergeWitness> {
    let pattern = f.graph();
    let pattern_edges: Vec<Pair> = pattern.edges().collect();
    if pattern_edges.len() > h.len() {
        return None;
    }
    let shadow = h.shadow();
    let n = h.n();
    let mut holders: Vec<Vec<HyperedgeId>> = vec![Vec::new(); n * n];
    for (id, &e) in h.edges().iter().enumerate() {
        for p in crate::hypergraph::pairs_of(e) {
            holders[p.lo * n + p.hi].push(id);
        }
    }
    let order = connected_order(&pattern, &[]);
    let mut witness = None;
    for_each_embedding(&shadow, &pattern, &order, &[], &mut |img| {
        let core: Vec<Pair> = pattern_edges.iter().map(|p| Pair::new(img[p.lo], img[p.hi])).collect();
        let cand: Vec<Vec<usize>> = core.iter().map(|p| holders[p.lo * n + p.hi].clone()).collect();
        match perfect_left_matching(&cand, h.len()) {
            Some(assign) => {
                witness = Some(BergeWitness {
                    core_map: img.to_vec(),
                    assignment: core.into_iter().zip(assign).collect(),
                });
                true
            }
            None => false,
        }
    });
    witness
}

pub fn is_berge_free(h: &Hypergraph, f: &FamilySpec) -> bool {
    contains_berge(h, f).is_none()
}

/// Every two hyperedges share at most one vertex.
pub fn is_linear(h: &Hypergraph) -> bool {
    let mut covered = std::collections::HashSet::new();
    h.edges()
        .iter()
        .all(|&e| crate::hypergraph::pairs_of(e).into_iter().all(|p| covered.insert(p)))
}

/// Number of hyperedges containing both `u` and `v`.
pub fn edge_heaviness(h: &Hypergraph, u: usize, v: usize) -> Result<usize> {
    if u == v {
        return Err(Error::invalid(format!("heaviness needs two distinct vertices, got {u} twice")));
    }
    if u >= h.n() || v >= h.n() {
        return Err(Error::invalid(format!("vertex out of range for n = {}", h.n())));
    }
    let m = (1u64 << u) | (1u64 << v);
    Ok(h.edges().iter().filter(|&&e| e & m == m).count())
}

/// All automorphisms of a small graph, identity first.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let order = connected_order(g, &[]);
    let mut out = Vec::new();
    for_each_embedding(g, g, &order, &[], &mut |img| {
        // an injective edge-preserving self-map of a finite graph is an automorphism
        out.push(img.to_vec());
        false
    });
    out.sort();
    out
}

/// One edge from each orbit of the automorphism group.
pub(crate) fn edge_orbit_representatives(g: &Graph) -> Vec<Pair> {
    let autos = automorphisms(g);
    let mut reps: Vec<Pair> = Vec::new();
    let mut covered = std::collections::HashSet::new();
    for e in g.edges() {
        if covered.contains(&e) {
            continue;
        }
        reps.push(e);
        for a in &autos {
            covered.insert(Pair::new(a[e.lo], a[e.hi]));
        }
    }
    reps
}
