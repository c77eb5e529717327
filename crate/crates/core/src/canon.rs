//! Canonical forms for small graphs and hypergraphs.
//!
//! The graph label is the lexicographically least upper-triangle adjacency
//! string over all vertex orders reachable by individualization-refinement
//! from the degree partition. Twins (vertices with equal neighbourhoods apart
//! from each other) are interchangeable, so only one of them is branched on.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph, VertexSet};
use crate::hypergraph::Hypergraph;

pub const DEFAULT_LABEL_CAP: usize = 10;

/// Canonical adjacency string of a graph.
///
/// Bits are the pairs `(i, j)`, `i < j`, taken column by column
/// (`01, 02, 12, 03, 13, 23, …`). The first pair is the most significant bit,
/// so the integer order equals the lexicographic order of the strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalLabel {
    n: u8,
    bits: u64,
}

impl CanonicalLabel {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The labelled graph: the canonical representative of the class.
    pub fn graph(&self) -> Graph {
        let n = self.n();
        let total = n * n.saturating_sub(1) / 2;
        let mut g = Graph::empty(n);
        let mut t = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (total - 1 - t) & 1 == 1 {
                    g.add_edge(i, j);
                }
                t += 1;
            }
        }
        g
    }
}

impl fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let total = n * n.saturating_sub(1) / 2;
        write!(f, "{n}:")?;
        for t in 0..total {
            write!(f, "{}", self.bits >> (total - 1 - t) & 1)?;
        }
        Ok(())
    }
}

pub fn canonical_label(g: &Graph) -> Result<CanonicalLabel> {
    canonical_label_with_cap(g, DEFAULT_LABEL_CAP)
}

pub fn canonical_label_with_cap(g: &Graph, cap: usize) -> Result<CanonicalLabel> {
    // 11 vertices is the most a u64 column string holds.
    let cap = cap.min(11);
    if g.n() > cap {
        return Err(Error::SizeLimit {
            what: "canonical_label",
            n: g.n(),
            cap,
        });
    }
    let n = g.n();
    let mut best: Option<u64> = None;
    let initial = refine(g, vec![(0..n).collect()]);
    search(g, initial, &mut best);
    Ok(CanonicalLabel {
        n: n as u8,
        bits: best.unwrap_or(0),
    })
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    if a.n() > DEFAULT_LABEL_CAP {
        // same order and size: any embedding is an isomorphism
        return Ok(crate::detect::find_embedding(b, a).is_some());
    }
    Ok(canonical_label(a)? == canonical_label(b)?)
}

type Partition = Vec<Vec<usize>>;

fn search(g: &Graph, part: Partition, best: &mut Option<u64>) {
    let Some(target) = part.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = part.iter().map(|c| c[0]).collect();
        let code = encode(g, &order);
        if best.map_or(true, |b| code < b) {
            *best = Some(code);
        }
        return;
    };
    let cell = &part[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = part.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&x| x != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        search(g, refine(g, next), best);
    }
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let strip = !((1u64 << u) | (1u64 << v));
    g.neighbors(u) & strip == g.neighbors(v) & strip
}

/// Equitable refinement. Cells split by their neighbour counts into every
/// current cell; the pieces are ordered by that count vector, which keeps the
/// result independent of vertex names.
fn refine(g: &Graph, mut part: Partition) -> Partition {
    loop {
        let masks: Vec<VertexSet> = part.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
        let mut next: Partition = Vec::with_capacity(part.len());
        for cell in &part {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks.iter().map(|m| (g.neighbors(v) & m).count_ones()).collect();
                    (sig, v)
                })
                .collect();
            // descending signature puts high-degree vertices first
            keyed.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == part.len() {
            return next;
        }
        part = next;
    }
}

fn encode(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut code = 0u64;
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                code |= 1 << (total - 1 - t);
            }
            t += 1;
        }
    }
    code
}

/// Canonical representative of a hypergraph: the lexicographically least
/// sorted hyperedge-mask list over all vertex orders that list vertices by
/// non-increasing degree. Brute force, so `n` is capped at 9.
pub fn canonical_hypergraph(h: &Hypergraph) -> Result<Hypergraph> {
    const CAP: usize = 9;
    let n = h.n();
    if n > CAP {
        return Err(Error::SizeLimit {
            what: "canonical_hypergraph",
            n,
            cap: CAP,
        });
    }
    let mut deg = vec![0usize; n];
    for &e in h.edges() {
        for v in bits(e) {
            deg[v] += 1;
        }
    }
    let mut by_deg: Vec<usize> = (0..n).collect();
    by_deg.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
    // positions sharing a degree form one block; permute inside blocks only
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &v in &by_deg {
        match blocks.last_mut() {
            Some(b) if deg[b[0]] == deg[v] => b.push(v),
            _ => blocks.push(vec![v]),
        }
    }
    let mut best: Option<Vec<u64>> = None;
    let mut perm = vec![0usize; n];
    let mut used = vec![false; n];
    place(h, &blocks, &deg, 0, &mut perm, &mut used, &mut best);
    let edges = best.unwrap_or_default();
    Ok(Hypergraph::from_masks_unchecked(h.r(), n, edges))
}

fn place(
    h: &Hypergraph,
    blocks: &[Vec<usize>],
    deg: &[usize],
    pos: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    best: &mut Option<Vec<u64>>,
) {
    let n = h.n();
    if pos == n {
        let mut mapped: Vec<u64> = h
            .edges()
            .iter()
            .map(|&e| bits(e).fold(0u64, |m, v| m | 1 << perm[v]))
            .collect();
        mapped.sort_unstable();
        if best.as_ref().map_or(true, |b| mapped < *b) {
            *best = Some(mapped);
        }
        return;
    }
    // degree of whoever sits at position `pos` in the sorted order
    let mut seen = 0;
    let want = blocks
        .iter()
        .find(|b| {
            seen += b.len();
            pos < seen
        })
        .map(|b| deg[b[0]])
        .unwrap_or(0);
    for v in 0..n {
        if !used[v] && deg[v] == want {
            used[v] = true;
            perm[v] = pos;
            place(h, blocks, deg, pos + 1, perm, used, best);
            used[v] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn label_examples() {
        let a = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let b = g(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]);
        assert_eq!(canonical_label(&a).unwrap(), canonical_label(&b).unwrap());
        assert_ne!(
            canonical_label(&Graph::cycle(4)).unwrap(),
            canonical_label(&Graph::path(4)).unwrap()
        );
        assert_eq!(
            canonical_label(&Graph::complete(4)).unwrap(),
            canonical_label(&Graph::complete(4)).unwrap()
        );
    }

    #[test]
    fn size_cap_is_loud() {
        assert!(matches!(
            canonical_label(&Graph::empty(11)),
            Err(Error::SizeLimit { .. })
        ));
        assert!(canonical_label_with_cap(&Graph::empty(11), 11).is_ok());
    }

    #[test]
    fn label_graph_round_trip() {
        let l = canonical_label(&Graph::petersen()).unwrap();
        let rep = l.graph();
        assert_eq!(canonical_label(&rep).unwrap(), l);
        assert_eq!(rep.edge_count(), 15);
    }

    #[test]
    fn invariant_under_random_permutations() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut graphs = vec![Graph::petersen(), Graph::cycle(9), Graph::empty(7), Graph::complete(6)];
        for _ in 0..20 {
            let n = rng.random_range(1..=10);
            let mut h = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.4) {
                        h.add_edge(u, v);
                    }
                }
            }
            graphs.push(h);
        }
        for h in &graphs {
            let base = canonical_label(h).unwrap();
            let mut perm: Vec<usize> = (0..h.n()).collect();
            for _ in 0..100 {
                perm.shuffle(&mut rng);
                assert_eq!(canonical_label(&h.permute(&perm)).unwrap(), base);
            }
        }
    }

    /// Labels agree with brute-force isomorphism on all graphs with 5 vertices.
    #[test]
    fn separates_all_five_vertex_classes() {
        let n = 5;
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut labels = std::collections::HashSet::new();
        let mut brute = std::collections::HashSet::new();
        let perms = permutations(n);
        for mask in 0u32..1 << slots.len() {
            let gr = g(n, &slots.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect::<Vec<_>>());
            labels.insert(canonical_label(&gr).unwrap());
            let min = perms.iter().map(|p| encode_identity(&gr.permute(p))).min().unwrap();
            brute.insert(min);
        }
        // 34 isomorphism classes of graphs on five vertices
        assert_eq!(brute.len(), 34);
        assert_eq!(labels.len(), 34);
    }

    fn encode_identity(g: &Graph) -> u64 {
        encode(g, &(0..g.n()).collect::<Vec<_>>())
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn hypergraph_canonical_form_is_invariant() {
        let h = Hypergraph::from_edges(3, 6, [[0, 1, 2], [2, 3, 4], [0, 4, 5]]).unwrap();
        let base = canonical_hypergraph(&h).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut perm: Vec<usize> = (0..6).collect();
        for _ in 0..30 {
            perm.shuffle(&mut rng);
            let moved: Vec<Vec<usize>> = (0..h.len())
                .map(|i| h.vertices(i).iter().map(|&v| perm[v]).collect())
                .collect();
            let hp = Hypergraph::from_edges(3, 6, moved).unwrap();
            assert_eq!(canonical_hypergraph(&hp).unwrap().edges(), base.edges());
        }
    }
}
