//! Pruning-free reference computations: every subset of the slot space is
//! enumerated and tested with the general detectors. Only for tiny inputs.

use crate::detect::{count_cliques, is_berge_free, is_free, is_linear};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::{bits, Graph, Pair};
use crate::hypergraph::{all_r_sets, Hypergraph};

/// Largest slot space the oracles enumerate (2^20 subsets).
pub const ORACLE_SLOT_CAP: usize = 20;

fn subsets(slots: &[u64]) -> Result<impl Iterator<Item = Vec<u64>> + '_> {
    if slots.len() > ORACLE_SLOT_CAP {
        return Err(Error::SizeLimit {
            what: "oracle slot space",
            n: slots.len(),
            cap: ORACLE_SLOT_CAP,
        });
    }
    Ok((0u32..1 << slots.len()).map(move |pick| {
        slots
            .iter()
            .enumerate()
            .filter(|(i, _)| pick >> i & 1 == 1)
            .map(|(_, &m)| m)
            .collect()
    }))
}

fn graph_of(n: usize, pairs: &[u64]) -> Graph {
    let mut g = Graph::empty(n);
    for &m in pairs {
        let p = Pair::from_mask(m).expect("pair");
        g.add_edge(p.lo, p.hi);
    }
    g
}

pub fn brute_force_ex_graph(n: usize, f: &FamilySpec) -> Result<u64> {
    let slots = all_r_sets(n, 2);
    let best = subsets(&slots)?
        .map(|s| graph_of(n, &s))
        .filter(|g| is_free(g, f))
        .map(|g| g.edge_count() as u64)
        .max();
    Ok(best.unwrap_or(0))
}

pub fn brute_force_generalized_ex(n: usize, r: usize, f: &FamilySpec) -> Result<u64> {
    let slots = all_r_sets(n, 2);
    let best = subsets(&slots)?
        .map(|s| graph_of(n, &s))
        .filter(|g| is_free(g, f))
        .map(|g| count_cliques(&g, r))
        .max();
    Ok(best.unwrap_or(0))
}

pub fn brute_force_ex_berge(n: usize, r: usize, f: &FamilySpec, linear_only: bool) -> Result<u64> {
    let slots = all_r_sets(n, r);
    let best = subsets(&slots)?
        .map(|s| Hypergraph::from_masks_unchecked(r, n, s))
        .filter(|h| (!linear_only || is_linear(h)) && is_berge_free(h, f))
        .map(|h| h.len() as u64)
        .max();
    Ok(best.unwrap_or(0))
}

/// Berge containment by brute force: every injective placement of the
/// pattern's vertices and every injective assignment of hyperedges to its
/// edges. No matching theory involved.
pub fn brute_force_contains_berge(h: &Hypergraph, f: &FamilySpec) -> bool {
    let pattern = f.graph();
    let edges: Vec<Pair> = pattern.edges().collect();
    if edges.len() > h.len() || pattern.n() > h.n() {
        return edges.is_empty();
    }
    let mut place = vec![usize::MAX; pattern.n()];
    placements(0, h.n(), &mut place, 0, &mut |place| {
        let images: Vec<u64> = edges.iter().map(|e| 1u64 << place[e.lo] | 1u64 << place[e.hi]).collect();
        assign(0, &images, h.edges(), 0)
    })
}

fn placements(i: usize, n: usize, place: &mut Vec<usize>, used: u64, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if i == place.len() {
        return visit(place);
    }
    for v in bits(((1u64 << n) - 1) & !used) {
        place[i] = v;
        if placements(i + 1, n, place, used | 1 << v, visit) {
            return true;
        }
    }
    false
}

fn assign(i: usize, images: &[u64], hyperedges: &[u64], used: u64) -> bool {
    if i == images.len() {
        return true;
    }
    hyperedges.iter().enumerate().any(|(j, &e)| {
        used >> j & 1 == 0 && e & images[i] == images[i] && assign(i + 1, images, hyperedges, used | 1 << j)
    })
}
