//! Simple undirected graphs on dense vertex sets `0..n`.
//!
//! Adjacency is stored as one `u64` bit row per vertex, which caps the
//! vertex count at [`MAX_VERTICES`]. Every graph the searches and the
//! reduction pipeline build is far below that.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Bit mask over vertex ids.
pub type VertexSet = u64;

/// Unordered vertex pair, stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    pub lo: usize,
    pub hi: usize,
}

/// Serialized as `[lo, hi]`.
impl Serialize for Pair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.lo, self.hi].serialize(s)
    }
}

impl Pair {
    /// Panics if `u == v`.
    pub fn new(u: usize, v: usize) -> Self {
        assert_ne!(u, v, "a pair needs two distinct vertices");
        if u < v {
            Pair { lo: u, hi: v }
        } else {
            Pair { lo: v, hi: u }
        }
    }

    pub fn mask(self) -> VertexSet {
        (1 << self.lo) | (1 << self.hi)
    }

    pub fn contains(self, v: usize) -> bool {
        self.lo == v || self.hi == v
    }

    /// Number of shared endpoints.
    pub fn overlap(self, other: Pair) -> u32 {
        (self.mask() & other.mask()).count_ones()
    }

    pub fn from_mask(mask: VertexSet) -> Option<Self> {
        if mask.count_ones() != 2 {
            return None;
        }
        let lo = mask.trailing_zeros() as usize;
        let hi = 63 - mask.leading_zeros() as usize;
        Some(Pair { lo, hi })
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// Iterate the set bits of a mask in increasing order.
pub fn bits(mut mask: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph. Panics above [`MAX_VERTICES`].
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph with {n} vertices exceeds {MAX_VERTICES}");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "graph",
                n,
                cap: MAX_VERTICES,
            });
        }
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge {u}-{v} out of range for n = {n}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::invalid(format!("duplicate edge {u}-{v}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        let all = full_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        g
    }

    /// Cycle `0-1-…-(m-1)-0`.
    pub fn cycle(m: usize) -> Self {
        let mut g = Graph::path(m);
        if m >= 3 {
            g.add_edge(m - 1, 0);
        }
        g
    }

    /// Path on `m` vertices.
    pub fn path(m: usize) -> Self {
        let mut g = Graph::empty(m);
        for v in 1..m {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn petersen() -> Self {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_mask(&self) -> VertexSet {
        full_mask(self.n)
    }

    /// Adds `u-v`; no-op if already present. Panics on loops or out-of-range ids.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge {u}-{v} for n = {}", self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Pair> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] >> (u + 1) << (u + 1)).map(move |v| Pair { lo: u, hi: v }))
    }

    /// Graph with edge `e` replaced by a path through the new vertex `n`.
    pub fn subdivide_edge(&self, e: Pair) -> Result<Graph> {
        if !self.has_edge(e.lo, e.hi) {
            return Err(Error::MissingEdge(e.lo, e.hi));
        }
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "graph",
                n: self.n + 1,
                cap: MAX_VERTICES,
            });
        }
        let mut out = Graph::empty(self.n + 1);
        for p in self.edges() {
            out.add_edge(p.lo, p.hi);
        }
        out.remove_edge(e.lo, e.hi);
        out.add_edge(e.lo, self.n);
        out.add_edge(e.hi, self.n);
        Ok(out)
    }

    /// Removes vertex `v`; higher ids shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::invalid(format!("vertex {v} out of range for n = {}", self.n)));
        }
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let mut out = Graph::empty(self.n - 1);
        for p in self.edges().filter(|p| !p.contains(v)) {
            out.add_edge(shift(p.lo), shift(p.hi));
        }
        Ok(out)
    }

    /// Relabel vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut out = Graph::empty(self.n);
        for p in self.edges() {
            out.add_edge(perm[p.lo], perm[p.hi]);
        }
        out
    }

    /// Union of two graphs on the same vertex set.
    pub fn union(&self, other: &Graph) -> Graph {
        assert_eq!(self.n, other.n);
        Graph {
            n: self.n,
            adj: self.adj.iter().zip(&other.adj).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }
}

pub(crate) fn full_mask(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Complete `p`-partite graph on `n` vertices; vertex `v` sits in part `v mod p`.
pub fn turan_graph(n: usize, p: usize) -> Result<Graph> {
    if p == 0 || p > n {
        return Err(Error::invalid(format!("Turán graph needs 1 <= p <= n, got p = {p}, n = {n}")));
    }
    if n > MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "graph",
            n,
            cap: MAX_VERTICES,
        });
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if u % p != v % p {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Sizes of the parts of `T(n, p)`, largest first.
pub fn turan_part_sizes(n: usize, p: usize) -> Vec<usize> {
    (0..p).map(|i| n / p + usize::from(i < n % p)).collect()
}
