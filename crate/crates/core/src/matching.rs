//! The hyperedge/sub-edge incidence graph, maximum matchings on it, and the
//! closure that splits it into the red (`A₁`, `B₁`) and blue (`A₂`, `B₂`) parts.

use serde::Serialize;

use crate::detect::edge_heaviness;
use crate::error::{Error, Result};
use crate::graph::{Pair, VertexSet};
use crate::hypergraph::{pairs_of, Hypergraph};

/// Bipartite graph with `A` on the left and `B` on the right.
///
/// When built from a hypergraph, `A` is its hyperedges (in id order), `B` is
/// every vertex pair covered by some hyperedge (lexicographic), and `a ~ b`
/// iff `b ⊆ a`. Abstract instances carry no labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteIncidence {
    a_adj: Vec<Vec<usize>>,
    b_adj: Vec<Vec<usize>>,
    hyperedges: Vec<VertexSet>,
    pairs: Vec<Pair>,
}

impl BipartiteIncidence {
    pub fn from_adjacency<I>(a_len: usize, b_len: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut a_adj = vec![Vec::new(); a_len];
        let mut b_adj = vec![Vec::new(); b_len];
        for (a, b) in edges {
            if a >= a_len || b >= b_len {
                return Err(Error::invalid(format!("edge ({a},{b}) out of range")));
            }
            if a_adj[a].contains(&b) {
                return Err(Error::invalid(format!("duplicate edge ({a},{b})")));
            }
            a_adj[a].push(b);
            b_adj[b].push(a);
        }
        a_adj.iter_mut().for_each(|l| l.sort_unstable());
        b_adj.iter_mut().for_each(|l| l.sort_unstable());
        Ok(BipartiteIncidence {
            a_adj,
            b_adj,
            hyperedges: Vec::new(),
            pairs: Vec::new(),
        })
    }

    pub fn a_len(&self) -> usize {
        self.a_adj.len()
    }

    pub fn b_len(&self) -> usize {
        self.b_adj.len()
    }

    pub fn a_neighbors(&self, a: usize) -> &[usize] {
        &self.a_adj[a]
    }

    pub fn b_neighbors(&self, b: usize) -> &[usize] {
        &self.b_adj[b]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.a_adj[a].binary_search(&b).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.a_adj.iter().map(Vec::len).sum()
    }

    /// Hyperedge behind `a`, for instances built from a hypergraph.
    pub fn hyperedge(&self, a: usize) -> Option<VertexSet> {
        self.hyperedges.get(a).copied()
    }

    /// Vertex pair behind `b`, for instances built from a hypergraph.
    pub fn pair(&self, b: usize) -> Option<Pair> {
        self.pairs.get(b).copied()
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn is_labelled(&self) -> bool {
        !self.pairs.is_empty() || (self.a_len() == 0 && self.b_len() == 0)
    }

    pub fn pair_index(&self, p: Pair) -> Option<usize> {
        self.pairs.binary_search(&p).ok()
    }
}

/// `A` = hyperedges of `h2`, `B` = pairs they cover, adjacency = containment.
pub fn build_incidence(h2: &Hypergraph) -> BipartiteIncidence {
    let mut pairs: Vec<Pair> = h2.edges().iter().flat_map(|&e| pairs_of(e)).collect();
    pairs.sort_unstable();
    pairs.dedup();
    let mut a_adj = Vec::with_capacity(h2.len());
    let mut b_adj = vec![Vec::new(); pairs.len()];
    for (a, &e) in h2.edges().iter().enumerate() {
        let mut row: Vec<usize> = pairs_of(e)
            .into_iter()
            .map(|p| pairs.binary_search(&p).expect("pair was collected"))
            .collect();
        row.sort_unstable();
        for &b in &row {
            b_adj[b].push(a);
        }
        a_adj.push(row);
    }
    BipartiteIncidence {
        a_adj,
        b_adj,
        hyperedges: h2.edges().to_vec(),
        pairs,
    }
}

/// A partial injective map `A → B` along adjacency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    a_to_b: Vec<Option<usize>>,
    b_to_a: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(g: &BipartiteIncidence) -> Self {
        Matching {
            a_to_b: vec![None; g.a_len()],
            b_to_a: vec![None; g.b_len()],
        }
    }

    pub fn from_pairs<I>(g: &BipartiteIncidence, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut m = Matching::empty(g);
        for (a, b) in pairs {
            if a >= g.a_len() || b >= g.b_len() || !g.adjacent(a, b) {
                return Err(Error::invalid(format!("({a},{b}) is not an edge")));
            }
            if m.a_to_b[a].is_some() || m.b_to_a[b].is_some() {
                return Err(Error::invalid(format!("({a},{b}) reuses a matched vertex")));
            }
            m.link(a, b);
        }
        Ok(m)
    }

    /// `M(a)`.
    pub fn b_of(&self, a: usize) -> Option<usize> {
        self.a_to_b[a]
    }

    /// `M(b)`.
    pub fn a_of(&self, b: usize) -> Option<usize> {
        self.b_to_a[b]
    }

    pub fn size(&self) -> usize {
        self.a_to_b.iter().flatten().count()
    }

    /// Matched `(a, b)` pairs ordered by `a`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.a_to_b
            .iter()
            .enumerate()
            .filter_map(|(a, b)| b.map(|b| (a, b)))
            .collect()
    }

    pub fn is_valid_for(&self, g: &BipartiteIncidence) -> bool {
        self.a_to_b.len() == g.a_len()
            && self.b_to_a.len() == g.b_len()
            && self.pairs().iter().all(|&(a, b)| g.adjacent(a, b) && self.b_to_a[b] == Some(a))
            && self
                .b_to_a
                .iter()
                .enumerate()
                .all(|(b, a)| a.map_or(true, |a| self.a_to_b[a] == Some(b)))
    }

    fn link(&mut self, a: usize, b: usize) {
        self.a_to_b[a] = Some(b);
        self.b_to_a[b] = Some(a);
    }

    /// Moves `a` from its current partner to the free vertex `b`.
    fn rematch(&mut self, a: usize, b: usize) {
        debug_assert!(self.b_to_a[b].is_none());
        if let Some(old) = self.a_to_b[a] {
            self.b_to_a[old] = None;
        }
        self.link(a, b);
    }
}

/// Maximum matching by repeated augmenting-path search, augmenting from the
/// lowest `A` index and trying `B` neighbours in increasing order.
pub fn maximum_matching(g: &BipartiteIncidence) -> Matching {
    fn augment(a: usize, g: &BipartiteIncidence, m: &mut Matching, seen: &mut [bool]) -> bool {
        for &b in g.a_neighbors(a) {
            if seen[b] {
                continue;
            }
            seen[b] = true;
            let free = match m.b_to_a[b] {
                None => true,
                Some(other) => augment(other, g, m, seen),
            };
            if free {
                m.link(a, b);
                return true;
            }
        }
        false
    }
    let mut m = Matching::empty(g);
    for a in 0..g.a_len() {
        let mut seen = vec![false; g.b_len()];
        augment(a, g, &mut m, &mut seen);
    }
    m
}

/// Whether an alternating path joins an unmatched `A` vertex to an unmatched
/// `B` vertex (i.e. `m` is not maximum).
pub fn has_augmenting_path(g: &BipartiteIncidence, m: &Matching) -> bool {
    let mut seen_b = vec![false; g.b_len()];
    let mut stack: Vec<usize> = (0..g.a_len()).filter(|&a| m.b_of(a).is_none()).collect();
    let mut seen_a = vec![false; g.a_len()];
    stack.iter().for_each(|&a| seen_a[a] = true);
    while let Some(a) = stack.pop() {
        for &b in g.a_neighbors(a) {
            if seen_b[b] {
                continue;
            }
            seen_b[b] = true;
            match m.a_of(b) {
                None => return true,
                Some(next) if !seen_a[next] => {
                    seen_a[next] = true;
                    stack.push(next);
                }
                Some(_) => {}
            }
        }
    }
    false
}

/// The quadruple `(A₁, A₂, B₁, B₂)` with `B′` (the matched `B` vertices).
///
/// `p3_exceptions` lists `A₁` vertices without a neighbour in `B∖B′`: these
/// are the vertices the stalled-closure rule could not admit because their
/// closure would leave `B′`. It is empty exactly when the partition has all
/// four properties.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cel2Partition {
    pub a1: Vec<usize>,
    pub a2: Vec<usize>,
    pub b1: Vec<usize>,
    pub b2: Vec<usize>,
    pub b_prime: Vec<usize>,
    pub p3_exceptions: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Cel2Violation {
    /// `a ∈ A₁` matched outside `B₁`.
    P1 { a: usize },
    /// `a ∈ A₂` has neighbour `b ∉ B₂`.
    P2 { a: usize, b: usize },
    /// `a ∈ A₁` has no neighbour in `B∖B′`.
    P3 { a: usize },
    /// Unmatched `a` placed in `A₁`.
    P4 { a: usize },
    /// The sets do not partition `A` and `B′`, or `|A₁| ≠ |B₁|`.
    Shape(String),
}

impl Cel2Partition {
    /// Every violated property, in a fixed order.
    pub fn violations(&self, g: &BipartiteIncidence, m: &Matching) -> Vec<Cel2Violation> {
        let mut out = Vec::new();
        let mut a_side = vec![0u8; g.a_len()];
        for &a in &self.a1 {
            a_side[a] |= 1;
        }
        for &a in &self.a2 {
            a_side[a] |= 2;
        }
        if a_side.iter().any(|&s| s != 1 && s != 2) {
            out.push(Cel2Violation::Shape("A₁, A₂ do not partition A".into()));
        }
        let matched: Vec<usize> = (0..g.b_len()).filter(|&b| m.a_of(b).is_some()).collect();
        if matched != self.b_prime {
            out.push(Cel2Violation::Shape("B′ is not the matched part of B".into()));
        }
        let mut b_side = vec![0u8; g.b_len()];
        for &b in &self.b1 {
            b_side[b] |= 1;
        }
        for &b in &self.b2 {
            b_side[b] |= 2;
        }
        let covers = (0..g.b_len()).all(|b| {
            let want_matched = m.a_of(b).is_some();
            if want_matched {
                b_side[b] == 1 || b_side[b] == 2
            } else {
                b_side[b] == 0
            }
        });
        if !covers {
            out.push(Cel2Violation::Shape("B₁, B₂ do not partition B′".into()));
        }
        if self.a1.len() != self.b1.len() {
            out.push(Cel2Violation::Shape(format!(
                "|A₁| = {} but |B₁| = {}",
                self.a1.len(),
                self.b1.len()
            )));
        }
        for &a in &self.a1 {
            match m.b_of(a) {
                None => out.push(Cel2Violation::P4 { a }),
                Some(b) if b_side[b] != 1 => out.push(Cel2Violation::P1 { a }),
                Some(_) => {}
            }
            if g.a_neighbors(a).iter().all(|&b| m.a_of(b).is_some()) {
                out.push(Cel2Violation::P3 { a });
            }
        }
        for &a in &self.a2 {
            for &b in g.a_neighbors(a) {
                if b_side[b] != 2 {
                    out.push(Cel2Violation::P2 { a, b });
                }
            }
        }
        out
    }

    /// `A₂ ∩ A′`: the matched vertices of `A₂`.
    pub fn a3(&self, m: &Matching) -> Vec<usize> {
        self.a2.iter().copied().filter(|&a| m.b_of(a).is_some()).collect()
    }
}

/// Splits `A` and `B′` by the alternating closure.
///
/// The closure starts from the unmatched `A` vertices, adds every neighbour of
/// an `A` vertex and the partner of every `B` vertex. When it stalls, the
/// lowest `A` vertex outside it whose neighbours are all matched is added and
/// the closure resumes. A stalled candidate whose closure would reach an
/// unmatched `B` vertex is left out (reported in `p3_exceptions`).
pub fn cel2_partition(g: &BipartiteIncidence, m: &Matching) -> Result<Cel2Partition> {
    if !m.is_valid_for(g) {
        return Err(Error::Precondition("the matching does not belong to this graph".into()));
    }
    let mut in_a = vec![false; g.a_len()];
    let mut in_b = vec![false; g.b_len()];

    let seeds: Vec<usize> = (0..g.a_len()).filter(|&a| m.b_of(a).is_none()).collect();
    if let Err(b) = close(g, m, &seeds, &mut in_a, &mut in_b) {
        return Err(Error::Precondition(format!(
            "matching is not maximum: alternating closure reached unmatched B vertex {b}"
        )));
    }

    let mut rejected = vec![false; g.a_len()];
    loop {
        let candidate = (0..g.a_len()).find(|&a| {
            !in_a[a] && !rejected[a] && g.a_neighbors(a).iter().all(|&b| m.a_of(b).is_some())
        });
        let Some(a) = candidate else { break };
        let (mut try_a, mut try_b) = (in_a.clone(), in_b.clone());
        if close(g, m, &[a], &mut try_a, &mut try_b).is_ok() {
            in_a = try_a;
            in_b = try_b;
        } else {
            rejected[a] = true;
        }
    }

    let a2: Vec<usize> = (0..g.a_len()).filter(|&a| in_a[a]).collect();
    let a1: Vec<usize> = (0..g.a_len()).filter(|&a| !in_a[a]).collect();
    let b_prime: Vec<usize> = (0..g.b_len()).filter(|&b| m.a_of(b).is_some()).collect();
    let b2: Vec<usize> = b_prime.iter().copied().filter(|&b| in_b[b]).collect();
    let b1: Vec<usize> = b_prime.iter().copied().filter(|&b| !in_b[b]).collect();
    let p3_exceptions = (0..g.a_len()).filter(|&a| rejected[a]).collect();
    Ok(Cel2Partition {
        a1,
        a2,
        b1,
        b2,
        b_prime,
        p3_exceptions,
    })
}

/// Extends the closure from `start`; `Err(b)` if it reaches unmatched `b`.
fn close(
    g: &BipartiteIncidence,
    m: &Matching,
    start: &[usize],
    in_a: &mut [bool],
    in_b: &mut [bool],
) -> std::result::Result<(), usize> {
    let mut stack = Vec::new();
    for &a in start {
        if !in_a[a] {
            in_a[a] = true;
            stack.push(a);
        }
    }
    while let Some(a) = stack.pop() {
        for &b in g.a_neighbors(a) {
            if in_b[b] {
                continue;
            }
            in_b[b] = true;
            match m.a_of(b) {
                None => return Err(b),
                Some(next) if !in_a[next] => {
                    in_a[next] = true;
                    stack.push(next);
                }
                Some(_) => {}
            }
        }
    }
    Ok(())
}

/// A maximum matching in which every matched hyperedge owning a 1-heavy pair
/// (heaviness counted in `h`) is matched to one, the lexicographically least.
pub fn heavy_constrained_matching(g: &BipartiteIncidence, h: &Hypergraph) -> Result<Matching> {
    if !g.is_labelled() {
        return Err(Error::invalid("heavy_constrained_matching needs an incidence built from a hypergraph"));
    }
    let mut m = maximum_matching(g);
    for a in 0..g.a_len() {
        let Some(current) = m.b_of(a) else { continue };
        let mut one_heavy = Vec::new();
        for &b in g.a_neighbors(a) {
            let p = g.pair(b).expect("labelled");
            if edge_heaviness(h, p.lo, p.hi)? == 1 {
                one_heavy.push(b);
            }
        }
        if one_heavy.is_empty() || one_heavy.contains(&current) {
            continue;
        }
        // a 1-heavy pair has `a` as its only neighbour, so it is free
        let target = one_heavy[0];
        if m.a_of(target).is_some() {
            return Err(Error::Internal(format!(
                "1-heavy pair {} is matched elsewhere",
                g.pair(target).unwrap()
            )));
        }
        m.rematch(a, target);
    }
    Ok(m)
}

/// `b₀(a)`: the lexicographically least pair of `a` that also lies in a
/// hyperedge of `h1`.
pub fn designated_shared_pairs(g: &BipartiteIncidence, h1: &Hypergraph) -> Result<Vec<Pair>> {
    (0..g.a_len())
        .map(|a| {
            let e = g.hyperedge(a).ok_or_else(|| Error::invalid("incidence is not labelled"))?;
            pairs_of(e)
                .into_iter()
                .find(|p| h1.edges().iter().any(|&f| f & p.mask() == p.mask()))
                .ok_or_else(|| {
                    Error::PipelineOrder(format!(
                        "hyperedge {:?} shares no pair with the linear part",
                        crate::graph::bits(e).collect::<Vec<_>>()
                    ))
                })
        })
        .collect()
}

/// Greedy rewiring: while some matched `a` (not yet changed) can move to a
/// free pair of `a` meeting `b₀(a)` in exactly one vertex, and `M(a)` does not
/// already, move it. Hyperedges are scanned in increasing order, repeatedly,
/// until a full pass changes nothing.
pub fn adjust_matching(g: &BipartiteIncidence, m0: &Matching, h1: &Hypergraph) -> Result<Matching> {
    let b0 = designated_shared_pairs(g, h1)?;
    let mut m = m0.clone();
    let mut changed = vec![false; g.a_len()];
    loop {
        let mut progress = false;
        for a in 0..g.a_len() {
            let Some(current) = m.b_of(a) else { continue };
            if changed[a] || g.pair(current).unwrap().overlap(b0[a]) == 1 {
                continue;
            }
            let free = g
                .a_neighbors(a)
                .iter()
                .copied()
                .find(|&b| m.a_of(b).is_none() && g.pair(b).unwrap().overlap(b0[a]) == 1);
            if let Some(b) = free {
                m.rematch(a, b);
                changed[a] = true;
                progress = true;
            }
        }
        if !progress {
            return Ok(m);
        }
    }
}

/// The disjunction `adjust_matching` guarantees for every matched `a`.
pub fn adjustment_holds(g: &BipartiteIncidence, m: &Matching, b0: &[Pair]) -> bool {
    (0..g.a_len()).all(|a| match m.b_of(a) {
        None => true,
        Some(b) => {
            g.pair(b).unwrap().overlap(b0[a]) == 1
                || g.a_neighbors(a).iter().all(|&x| {
                    g.pair(x).unwrap().overlap(b0[a]) != 1 || m.a_of(x).is_some_and(|owner| owner != a)
                })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bip(a: usize, b: usize, e: &[(usize, usize)]) -> BipartiteIncidence {
        BipartiteIncidence::from_adjacency(a, b, e.iter().copied()).unwrap()
    }

    #[test]
    fn incidence_examples() {
        let g = build_incidence(&Hypergraph::from_edges(3, 5, [[1, 2, 3]]).unwrap());
        assert_eq!((g.a_len(), g.b_len(), g.edge_count()), (1, 3, 3));
        let g = build_incidence(&Hypergraph::from_edges(3, 5, [[1, 2, 3], [1, 2, 4]]).unwrap());
        assert_eq!((g.a_len(), g.b_len()), (2, 5));
        assert_eq!(g.b_neighbors(g.pair_index(Pair::new(1, 2)).unwrap()), &[0, 1]);
        let g = build_incidence(&Hypergraph::new(3, 5).unwrap());
        assert_eq!((g.a_len(), g.b_len()), (0, 0));
    }

    #[test]
    fn matching_examples() {
        let k33: Vec<(usize, usize)> = (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).collect();
        assert_eq!(maximum_matching(&bip(3, 3, &k33)).size(), 3);
        let g = bip(2, 1, &[(0, 0), (1, 0)]);
        let m = maximum_matching(&g);
        assert_eq!(m.size(), 1);
        assert_eq!(m.b_of(0), Some(0));
    }

    #[test]
    fn partition_examples() {
        let g = bip(1, 1, &[(0, 0)]);
        let m = maximum_matching(&g);
        let p = cel2_partition(&g, &m).unwrap();
        assert_eq!((p.a2.clone(), p.b2.clone()), (vec![0], vec![0]));
        assert!(p.a1.is_empty() && p.b1.is_empty());

        let g = bip(1, 2, &[(0, 0), (0, 1)]);
        let m = Matching::from_pairs(&g, [(0, 0)]).unwrap();
        let p = cel2_partition(&g, &m).unwrap();
        assert_eq!((p.a1.clone(), p.b1.clone()), (vec![0], vec![0]));
        assert!(p.a2.is_empty() && p.b2.is_empty());
        assert!(p.violations(&g, &m).is_empty());

        let g = bip(2, 1, &[(0, 0), (1, 0)]);
        let m = Matching::from_pairs(&g, [(0, 0)]).unwrap();
        let p = cel2_partition(&g, &m).unwrap();
        assert_eq!((p.a2.clone(), p.b2.clone()), (vec![0, 1], vec![0]));
        assert!(p.a1.is_empty() && p.b1.is_empty());
    }

    #[test]
    fn non_maximum_matching_is_rejected() {
        let g = bip(2, 2, &[(0, 0), (1, 0), (1, 1)]);
        let m = Matching::from_pairs(&g, [(1, 0)]).unwrap();
        assert!(has_augmenting_path(&g, &m));
        assert!(matches!(cel2_partition(&g, &m), Err(Error::Precondition(_))));
    }

    /// a~{b,c}, a'~{b,b''}, M = {ac, a'b}: maximum, yet no split has P3.
    #[test]
    fn stalled_closure_that_would_leave_b_prime() {
        let g = bip(2, 3, &[(0, 0), (0, 1), (1, 0), (1, 2)]);
        let m = Matching::from_pairs(&g, [(0, 1), (1, 0)]).unwrap();
        assert!(!has_augmenting_path(&g, &m));
        let p = cel2_partition(&g, &m).unwrap();
        assert_eq!(p.a1, vec![0, 1]);
        assert_eq!(p.p3_exceptions, vec![0]);
        assert_eq!(p.violations(&g, &m), vec![Cel2Violation::P3 { a: 0 }]);
    }

    #[test]
    fn heavy_rule_moves_to_one_heavy_pair() {
        // {0,1,2} holds the only copy of {0,2}, {1,2}; {0,1} is 2-heavy
        let h = Hypergraph::from_edges(3, 5, [[0, 1, 2], [0, 1, 3]]).unwrap();
        let g = build_incidence(&h);
        let m = heavy_constrained_matching(&g, &h).unwrap();
        assert_eq!(m.size(), 2);
        for (a, b) in m.pairs() {
            let p = g.pair(b).unwrap();
            assert_eq!(edge_heaviness(&h, p.lo, p.hi).unwrap(), 1, "hyperedge {a}");
        }
        let first = m.b_of(0).map(|b| g.pair(b).unwrap());
        assert_eq!(first, Some(Pair::new(0, 2)));
    }

    #[test]
    fn adjust_examples() {
        let h2 = Hypergraph::from_edges(3, 4, [[1, 2, 3]]).unwrap();
        let h1 = Hypergraph::from_edges(3, 4, [[0, 1, 2]]).unwrap();
        let g = build_incidence(&h2);
        let b12 = g.pair_index(Pair::new(1, 2)).unwrap();
        let m0 = Matching::from_pairs(&g, [(0, b12)]).unwrap();
        let m = adjust_matching(&g, &m0, &h1).unwrap();
        assert_eq!(g.pair(m.b_of(0).unwrap()), Some(Pair::new(1, 3)));

        // {1,3} and {2,3} already taken by other hyperedges of A
        let h2 = Hypergraph::from_edges(3, 6, [[1, 2, 3], [1, 3, 4], [2, 3, 5]]).unwrap();
        let h1 = Hypergraph::from_edges(3, 6, [[0, 1, 2], [1, 4, 5], [0, 3, 5], [0, 3, 4]]).unwrap();
        let g = build_incidence(&h2);
        let ix = |u, v| g.pair_index(Pair::new(u, v)).unwrap();
        let m0 = Matching::from_pairs(&g, [(0, ix(1, 2)), (1, ix(1, 3)), (2, ix(2, 3))]).unwrap();
        let m = adjust_matching(&g, &m0, &h1).unwrap();
        assert_eq!(m.b_of(0), Some(ix(1, 2)));
        let b0 = designated_shared_pairs(&g, &h1).unwrap();
        assert!(adjustment_holds(&g, &m, &b0));
    }

    #[test]
    fn adjust_requires_shared_pairs() {
        let h2 = Hypergraph::from_edges(3, 7, [[1, 2, 3]]).unwrap();
        let h1 = Hypergraph::from_edges(3, 7, [[4, 5, 6]]).unwrap();
        let g = build_incidence(&h2);
        let m0 = maximum_matching(&g);
        assert!(matches!(adjust_matching(&g, &m0, &h1), Err(Error::PipelineOrder(_))));
    }
}
