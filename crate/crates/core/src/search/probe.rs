//! Incremental freeness tests: does adding one slot create a forbidden copy?
//!
//! Any new copy must use the new slot, so only cores with an edge inside the
//! new slot are enumerated: one pattern edge per automorphism orbit, pinned to
//! each pair of the slot in both orientations.

use crate::detect::{connected_order, edge_orbit_representatives, for_each_embedding};
use crate::family::FamilySpec;
use crate::graph::{Graph, Pair, VertexSet};
use crate::hypergraph::pairs_of;

pub(crate) type SlotMask = u128;

/// Current family of chosen slots: its shadow graph and, per vertex pair,
/// the chosen slots containing it.
#[derive(Debug, Clone)]
pub(crate) struct Family {
    pub n: usize,
    pub shadow: Graph,
    pub holders: Vec<SlotMask>,
}

impl Family {
    pub fn new(n: usize) -> Self {
        Family {
            n,
            shadow: Graph::empty(n),
            holders: vec![0; n * n],
        }
    }

    pub fn add(&mut self, slot: usize, mask: VertexSet) {
        for p in pairs_of(mask) {
            self.shadow.add_edge(p.lo, p.hi);
            self.holders[p.lo * self.n + p.hi] |= 1 << slot;
        }
    }

    pub fn holders_of(&self, p: Pair) -> SlotMask {
        self.holders[p.lo * self.n + p.hi]
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Probe {
    pattern: Graph,
    pattern_edges: Vec<Pair>,
    /// (pattern edge, embedding order starting with its endpoints)
    seeds: Vec<(Pair, Vec<usize>)>,
}

impl Probe {
    pub fn new(f: &FamilySpec) -> Self {
        let pattern = f.graph();
        let pattern_edges: Vec<Pair> = pattern.edges().collect();
        let seeds = edge_orbit_representatives(&pattern)
            .into_iter()
            .map(|e| (e, connected_order(&pattern, &[e.lo, e.hi])))
            .collect();
        Probe {
            pattern,
            pattern_edges,
            seeds,
        }
    }

    /// Graph case: would `g + uv` contain the pattern?
    pub fn edge_creates_copy(&self, g: &Graph, e: Pair) -> bool {
        if self.pattern_edges.is_empty() {
            return false;
        }
        let mut host = g.clone();
        host.add_edge(e.lo, e.hi);
        for (rep, order) in &self.seeds {
            for (x, y) in [(e.lo, e.hi), (e.hi, e.lo)] {
                let fixed = [(rep.lo, x), (rep.hi, y)];
                if for_each_embedding(&host, &self.pattern, order, &fixed, &mut |_| true) {
                    return true;
                }
            }
        }
        false
    }

    /// Hypergraph case: would adding slot `slot` (vertex mask `mask`) to the
    /// Berge-free `family` create a Berge copy of the pattern?
    pub fn slot_creates_berge(&self, family: &Family, slot: usize, mask: VertexSet) -> bool {
        if self.pattern_edges.is_empty() {
            return false;
        }
        let mut host = family.shadow.clone();
        let new_pairs = pairs_of(mask);
        for p in &new_pairs {
            host.add_edge(p.lo, p.hi);
        }
        let bit: SlotMask = 1 << slot;
        let mut cand: Vec<SlotMask> = vec![0; self.pattern_edges.len()];
        for (rep, order) in &self.seeds {
            for p in &new_pairs {
                for (x, y) in [(p.lo, p.hi), (p.hi, p.lo)] {
                    let fixed = [(rep.lo, x), (rep.hi, y)];
                    let hit = for_each_embedding(&host, &self.pattern, order, &fixed, &mut |img| {
                        for (c, e) in cand.iter_mut().zip(&self.pattern_edges) {
                            let q = Pair::new(img[e.lo], img[e.hi]);
                            let mut h = family.holders_of(q);
                            if mask & q.mask() == q.mask() {
                                h |= bit;
                            }
                            *c = h;
                        }
                        perfect_matching_u128(&cand)
                    });
                    if hit {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Can every left vertex be matched into its candidate mask (≤ 128 right vertices)?
pub(crate) fn perfect_matching_u128(cand: &[SlotMask]) -> bool {
    fn augment(i: usize, cand: &[SlotMask], owner: &mut [u8; 128], seen: &mut SlotMask) -> bool {
        let mut free = cand[i] & !*seen;
        while free != 0 {
            let j = free.trailing_zeros() as usize;
            free &= free - 1;
            *seen |= 1 << j;
            if owner[j] == u8::MAX || augment(owner[j] as usize, cand, owner, seen) {
                owner[j] = i as u8;
                return true;
            }
        }
        false
    }
    if cand.iter().any(|&c| c == 0) {
        return false;
    }
    let mut owner = [u8::MAX; 128];
    for i in 0..cand.len() {
        let mut seen = 0;
        if !augment(i, cand, &mut owner, &mut seen) {
            return false;
        }
    }
    true
}
