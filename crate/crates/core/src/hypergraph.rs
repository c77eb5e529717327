use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph, Pair, VertexSet, MAX_VERTICES};

/// Index of a hyperedge inside its [`Hypergraph`] (insertion order).
pub type HyperedgeId = usize;

/// An `r`-uniform hypergraph without repeated hyperedges.
///
/// Hyperedges are vertex bit masks kept in insertion order; their position is
/// their id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: Vec<VertexSet>,
    index: HashSet<VertexSet>,
}

impl Hypergraph {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::invalid("uniformity must be positive"));
        }
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "hypergraph",
                n,
                cap: MAX_VERTICES,
            });
        }
        Ok(Hypergraph {
            r,
            n,
            edges: Vec::new(),
            index: HashSet::new(),
        })
    }

    pub fn from_edges<I, E>(r: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        let mut h = Hypergraph::new(r, n)?;
        for e in edges {
            let e = e.as_ref();
            let mut mask = 0u64;
            for &v in e {
                if v >= n {
                    return Err(Error::invalid(format!("vertex {v} out of range for n = {n}")));
                }
                mask |= 1 << v;
            }
            if mask.count_ones() as usize != e.len() {
                return Err(Error::invalid(format!("hyperedge {e:?} repeats a vertex")));
            }
            h.push(mask)?;
        }
        Ok(h)
    }

    pub(crate) fn from_masks_unchecked(r: usize, n: usize, edges: Vec<VertexSet>) -> Self {
        let index = edges.iter().copied().collect();
        Hypergraph { r, n, edges, index }
    }

    /// Appends a hyperedge given as a vertex mask and returns its id.
    pub fn push(&mut self, mask: VertexSet) -> Result<HyperedgeId> {
        if mask.count_ones() as usize != self.r {
            return Err(Error::invalid(format!(
                "hyperedge {:?} does not have {} vertices",
                bits(mask).collect::<Vec<_>>(),
                self.r
            )));
        }
        if self.n < 64 && mask >> self.n != 0 {
            return Err(Error::invalid(format!("hyperedge {:?} out of range", bits(mask).collect::<Vec<_>>())));
        }
        if !self.index.insert(mask) {
            return Err(Error::invalid(format!(
                "duplicate hyperedge {:?}",
                bits(mask).collect::<Vec<_>>()
            )));
        }
        self.edges.push(mask);
        Ok(self.edges.len() - 1)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge(&self, id: HyperedgeId) -> VertexSet {
        self.edges[id]
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn contains(&self, mask: VertexSet) -> bool {
        self.index.contains(&mask)
    }

    pub fn vertices(&self, id: HyperedgeId) -> Vec<usize> {
        bits(self.edges[id]).collect()
    }

    /// The `C(r,2)` vertex pairs inside hyperedge `id`, lexicographic.
    pub fn sub_edges(&self, id: HyperedgeId) -> Vec<Pair> {
        pairs_of(self.edges[id])
    }

    /// Graph of all pairs covered by at least one hyperedge.
    pub fn shadow(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for &e in &self.edges {
            for p in pairs_of(e) {
                g.add_edge(p.lo, p.hi);
            }
        }
        g
    }

    /// Sub-hypergraph on the given ids, in the given order.
    pub fn select(&self, ids: &[HyperedgeId]) -> Hypergraph {
        Hypergraph::from_masks_unchecked(self.r, self.n, ids.iter().map(|&i| self.edges[i]).collect())
    }

    /// Id of the hyperedge equal to `mask`, if present.
    pub fn position(&self, mask: VertexSet) -> Option<HyperedgeId> {
        if self.contains(mask) {
            self.edges.iter().position(|&e| e == mask)
        } else {
            None
        }
    }

    pub fn with_vertex_count(&self, n: usize) -> Result<Hypergraph> {
        if n < self.n {
            return Err(Error::invalid("cannot shrink the vertex set"));
        }
        let mut h = self.clone();
        h.n = n;
        Ok(h)
    }
}

pub fn pairs_of(mask: VertexSet) -> Vec<Pair> {
    let vs: Vec<usize> = bits(mask).collect();
    let mut out = Vec::with_capacity(vs.len() * vs.len().saturating_sub(1) / 2);
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            out.push(Pair { lo: u, hi: v });
        }
    }
    out
}

/// All `r`-subsets of `0..n` as masks, lexicographic by sorted vertex list.
pub fn all_r_sets(n: usize, r: usize) -> Vec<VertexSet> {
    fn rec(start: usize, n: usize, left: usize, acc: VertexSet, out: &mut Vec<VertexSet>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for v in start..n {
            if n - v < left {
                break;
            }
            rec(v + 1, n, left - 1, acc | 1 << v, out);
        }
    }
    let mut out = Vec::new();
    rec(0, n, r, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_hyperedges() {
        assert!(Hypergraph::from_edges(3, 5, [[0, 1, 1]]).is_err());
        assert!(Hypergraph::from_edges(3, 5, [[0, 1, 5]]).is_err());
        assert!(Hypergraph::from_edges(3, 5, [vec![0, 1]]).is_err());
        assert!(Hypergraph::from_edges(3, 5, [[0, 1, 2], [2, 1, 0]]).is_err());
        let h = Hypergraph::from_edges(3, 5, [[0, 1, 2], [2, 3, 4]]).unwrap();
        assert_eq!(h.len(), 2);
        assert_eq!(h.vertices(1), vec![2, 3, 4]);
    }

    #[test]
    fn shadow_and_sub_edges() {
        let h = Hypergraph::from_edges(3, 5, [[1, 2, 3], [1, 2, 4]]).unwrap();
        assert_eq!(h.shadow().edge_count(), 5);
        assert_eq!(h.sub_edges(0), vec![Pair::new(1, 2), Pair::new(1, 3), Pair::new(2, 3)]);
    }

    #[test]
    fn r_sets_are_lexicographic() {
        let sets = all_r_sets(5, 3);
        assert_eq!(sets.len(), 10);
        let lists: Vec<Vec<usize>> = sets.iter().map(|&m| bits(m).collect()).collect();
        let mut sorted = lists.clone();
        sorted.sort();
        assert_eq!(lists, sorted);
        assert_eq!(all_r_sets(8, 3).len(), 56);
    }
}
