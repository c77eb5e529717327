//! Zykov symmetrization on red-blue graphs, and the Turán threshold for the
//! sharp Berge-clique value.

use serde::Serialize;

use crate::detect::{count_cliques, find_clique};
use crate::error::{Error, Result};
use crate::graph::{turan_graph, turan_part_sizes};
use crate::hypergraph::Hypergraph;
use crate::redblue::{Color, RedBlueGraph};
use crate::reduction::g_r_value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepRelation {
    NonAdjacent,
    BlueEdge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SymmetrizationStep {
    /// the vertex whose incidences are replaced
    pub u: usize,
    /// the vertex being copied
    pub v: usize,
    pub relation: StepRelation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetrizationTrace {
    pub initial_g_r: u64,
    pub steps: Vec<SymmetrizationStep>,
    /// g_r after each step
    pub g_r_values: Vec<u64>,
    /// whether the final graph is complete multipartite and monochromatic
    pub reached_multipartite: bool,
}

fn check_vertices(rbg: &RedBlueGraph, u: usize, v: usize) -> Result<()> {
    if u == v || u >= rbg.n() || v >= rbg.n() {
        return Err(Error::InvalidParameter(format!(
            "need two distinct vertices below {}, got {u} and {v}",
            rbg.n()
        )));
    }
    Ok(())
}

fn check_clique_freeness(rbg: &RedBlueGraph, r: usize, k: usize) -> std::result::Result<(), String> {
    if let Some(c) = find_clique(&rbg.graph(), k) {
        return Err(format!("graph contains K{k} on {c:?}"));
    }
    if let Some(c) = find_clique(rbg.red(), r) {
        return Err(format!("red subgraph contains K{r} on {c:?}"));
    }
    Ok(())
}

fn copy_neighbourhood(rbg: &RedBlueGraph, u: usize, v: usize) -> RedBlueGraph {
    let mut out = rbg.clone();
    for w in (0..rbg.n()).filter(|&w| w != u && w != v) {
        out.set(u, w, rbg.color(v, w));
    }
    out.set(u, v, None);
    out
}

/// Replaces the coloured neighbourhood of `u` by a copy of that of `v`;
/// the pair `uv` ends up non-adjacent. Steps across a red edge are refused.
pub fn symmetrize_step(rbg: &RedBlueGraph, u: usize, v: usize, r: usize, k: usize) -> Result<RedBlueGraph> {
    check_vertices(rbg, u, v)?;
    if rbg.color(u, v) == Some(Color::Red) {
        return Err(Error::ForbiddenStep(u, v));
    }
    check_clique_freeness(rbg, r, k).map_err(Error::Precondition)?;
    let out = copy_neighbourhood(rbg, u, v);
    check_clique_freeness(&out, r, k).map_err(Error::Internal)?;
    Ok(out)
}

/// Classes of the relation "non-adjacent with identical coloured
/// neighbourhoods", as a class id per vertex.
pub fn twin_classes(rbg: &RedBlueGraph) -> Vec<usize> {
    let n = rbg.n();
    let row = |u: usize| -> (u64, u64) { (rbg.red().neighbors(u), rbg.blue().neighbors(u)) };
    let mut class = vec![usize::MAX; n];
    let mut next = 0;
    for u in 0..n {
        if class[u] != usize::MAX {
            continue;
        }
        class[u] = next;
        for v in u + 1..n {
            if class[v] == usize::MAX && rbg.color(u, v).is_none() && row(u) == row(v) {
                class[v] = next;
            }
        }
        next += 1;
    }
    class
}

fn twin_score(rbg: &RedBlueGraph) -> u64 {
    let class = twin_classes(rbg);
    let mut sizes = vec![0u64; rbg.n()];
    for c in class {
        sizes[c] += 1;
    }
    sizes.iter().map(|s| s * s).sum()
}

/// Complete multipartite (non-adjacency is an equivalence relation) with
/// all edges of one colour.
pub fn is_monochromatic_complete_multipartite(rbg: &RedBlueGraph) -> bool {
    let class = twin_classes(rbg);
    let n = rbg.n();
    let multipartite = (0..n).all(|u| (u + 1..n).all(|v| rbg.color(u, v).is_some() || class[u] == class[v]));
    multipartite && (rbg.red().edge_count() == 0 || rbg.blue().edge_count() == 0)
}

/// Applies legal steps until the graph is complete multipartite and
/// monochromatic or no step is admissible.
///
/// A step is admissible if it raises g_r, or keeps g_r and strictly grows
/// the sum of squared twin-class sizes; this pair increases
/// lexicographically, so the process terminates. Among admissible steps the
/// one with the largest resulting g_r is taken, ties broken by the
/// lexicographically least `(u, v)`. More than n³ steps trips
/// [`Error::StepBudget`].
pub fn symmetrize_to_optimum(rbg: &RedBlueGraph, k: usize, r: usize) -> Result<(RedBlueGraph, SymmetrizationTrace)> {
    check_clique_freeness(rbg, r, k).map_err(Error::Precondition)?;
    let n = rbg.n();
    let budget = n * n * n;
    let mut g = rbg.clone();
    let mut current = g_r_value(&g, r);
    let mut trace = SymmetrizationTrace {
        initial_g_r: current,
        steps: Vec::new(),
        g_r_values: Vec::new(),
        reached_multipartite: false,
    };
    loop {
        if is_monochromatic_complete_multipartite(&g) {
            trace.reached_multipartite = true;
            break;
        }
        if trace.steps.len() >= budget {
            return Err(Error::StepBudget(budget));
        }
        let score = twin_score(&g);
        let mut best: Option<(u64, SymmetrizationStep, RedBlueGraph)> = None;
        for u in 0..n {
            for v in (0..n).filter(|&v| v != u) {
                let relation = match g.color(u, v) {
                    Some(Color::Red) => continue,
                    Some(Color::Blue) => StepRelation::BlueEdge,
                    None => StepRelation::NonAdjacent,
                };
                let next = copy_neighbourhood(&g, u, v);
                let value = g_r_value(&next, r);
                let admissible = value > current || (value == current && twin_score(&next) > score);
                if admissible && best.as_ref().is_none_or(|(b, _, _)| value > *b) {
                    best = Some((value, SymmetrizationStep { u, v, relation }, next));
                }
            }
        }
        let Some((value, step, next)) = best else { break };
        check_clique_freeness(&next, r, k).map_err(Error::Internal)?;
        g = next;
        current = value;
        trace.steps.push(step);
        trace.g_r_values.push(value);
    }
    Ok((g, trace))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Dominance {
    Blue,
    Red,
    Tie,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    pub r: usize,
    pub k: usize,
    pub n: usize,
    /// r-cliques of T(n, k−1)
    pub blue_cliques: u128,
    /// edges of T(n, r−1)
    pub red_edges: u128,
    pub dominant: Dominance,
}

/// Elementary symmetric polynomial of degree `d` in `xs`.
fn elementary_symmetric(xs: &[usize], d: usize) -> u128 {
    let mut e = vec![0u128; d + 1];
    e[0] = 1;
    for &x in xs {
        for j in (1..=d).rev() {
            e[j] += e[j - 1] * x as u128;
        }
    }
    e[d]
}

/// Number of r-cliques in T(n, parts); zero-size parts are allowed.
pub fn turan_clique_count(n: usize, parts: usize, r: usize) -> u128 {
    elementary_symmetric(&turan_part_sizes(n, parts), r)
}

/// Compares the all-blue Turán graph T(n, k−1) (counting r-cliques) with
/// the all-red Turán graph T(n, r−1) (counting edges).
pub fn turan_threshold(r: usize, k: usize, n: usize) -> Result<ThresholdReport> {
    if !(2 <= r && r < k && k <= n) {
        return Err(Error::InvalidParameter(format!(
            "need 2 <= r < k <= n, got r = {r}, k = {k}, n = {n}"
        )));
    }
    let blue_cliques = elementary_symmetric(&turan_part_sizes(n, k - 1), r);
    let red_edges = elementary_symmetric(&turan_part_sizes(n, r - 1), 2);
    let dominant = match blue_cliques.cmp(&red_edges) {
        std::cmp::Ordering::Greater => Dominance::Blue,
        std::cmp::Ordering::Less => Dominance::Red,
        std::cmp::Ordering::Equal => Dominance::Tie,
    };
    Ok(ThresholdReport {
        r,
        k,
        n,
        blue_cliques,
        red_edges,
        dominant,
    })
}

/// One hyperedge per r-clique of T(n, k−1).
pub fn blue_turan_hypergraph(r: usize, k: usize, n: usize) -> Result<Hypergraph> {
    if !(2 <= r && r < k && k <= n) {
        return Err(Error::InvalidParameter(format!(
            "need 2 <= r < k <= n, got r = {r}, k = {k}, n = {n}"
        )));
    }
    let t = turan_graph(n, k - 1)?;
    let mut h = Hypergraph::new(r, n)?;
    for set in crate::hypergraph::all_r_sets(n, r) {
        let vs: Vec<usize> = crate::graph::bits(set).collect();
        if vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| t.has_edge(a, b))) {
            h.push(set)?;
        }
    }
    debug_assert_eq!(h.len() as u64, count_cliques(&t, r));
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::contains_berge;
    use crate::family::FamilySpec;
    use crate::graph::Graph;

    fn blue(g: &Graph) -> RedBlueGraph {
        RedBlueGraph::monochromatic(g, Color::Blue)
    }

    #[test]
    fn step_examples() {
        let mut g = RedBlueGraph::empty(5);
        for w in [1, 2, 3] {
            g.set(0, w, Some(Color::Blue));
        }
        let out = symmetrize_step(&g, 4, 0, 3, 5).unwrap();
        for w in [1, 2, 3] {
            assert_eq!(out.color(4, w), Some(Color::Blue));
        }
        assert_eq!(out.color(4, 0), None);

        // twins: nothing changes
        let k33 = blue(&Graph::complete_bipartite(3, 3));
        assert_eq!(symmetrize_step(&k33, 0, 1, 3, 5).unwrap(), k33);
    }

    #[test]
    fn red_steps_are_refused() {
        let mut g = RedBlueGraph::empty(3);
        g.set(0, 1, Some(Color::Red));
        assert!(matches!(symmetrize_step(&g, 0, 1, 3, 5), Err(Error::ForbiddenStep(0, 1))));
        assert!(symmetrize_step(&g, 0, 0, 3, 5).is_err());
    }

    #[test]
    fn turan_graphs_are_fixpoints() {
        let t = blue(&turan_graph(7, 4).unwrap());
        let (out, trace) = symmetrize_to_optimum(&t, 5, 3).unwrap();
        assert_eq!(out, t);
        assert!(trace.steps.is_empty() && trace.reached_multipartite);
        let red = RedBlueGraph::monochromatic(&turan_graph(6, 2).unwrap(), Color::Red);
        let (out, trace) = symmetrize_to_optimum(&red, 5, 3).unwrap();
        assert_eq!(out, red);
        assert!(trace.steps.is_empty());
    }

    #[test]
    fn threshold_examples() {
        let t = turan_threshold(4, 5, 10).unwrap();
        assert_eq!((t.blue_cliques, t.red_edges, t.dominant), (36, 33, Dominance::Blue));
        let t = turan_threshold(4, 5, 9).unwrap();
        assert_eq!((t.blue_cliques, t.red_edges, t.dominant), (24, 27, Dominance::Red));
        let t = turan_threshold(2, 3, 4).unwrap();
        assert_eq!((t.blue_cliques, t.red_edges, t.dominant), (4, 0, Dominance::Blue));
        assert!(turan_threshold(5, 4, 10).is_err());
        assert!(turan_threshold(4, 5, 4).is_err());
    }

    #[test]
    fn threshold_counts_match_clique_counting() {
        for n in 5..=14 {
            for (r, k) in [(2, 3), (3, 4), (3, 5), (4, 5), (4, 6)] {
                if k > n {
                    continue;
                }
                let t = turan_threshold(r, k, n).unwrap();
                assert_eq!(t.blue_cliques, count_cliques(&turan_graph(n, k - 1).unwrap(), r) as u128);
                assert_eq!(t.red_edges, turan_graph(n, r - 1).unwrap().edge_count() as u128);
            }
        }
    }

    #[test]
    fn blue_turan_hypergraphs_are_berge_clique_free() {
        for n in 4..=7 {
            let h = blue_turan_hypergraph(3, 4, n).unwrap();
            assert!(contains_berge(&h, &FamilySpec::clique(4).unwrap()).is_none());
        }
        for n in 5..=8 {
            let h = blue_turan_hypergraph(4, 5, n).unwrap();
            assert_eq!(h.len() as u128, turan_threshold(4, 5, n).unwrap().blue_cliques);
            assert!(contains_berge(&h, &FamilySpec::clique(5).unwrap()).is_none());
        }
    }

    #[test]
    fn multipartite_detection() {
        assert!(is_monochromatic_complete_multipartite(&blue(&turan_graph(7, 3).unwrap())));
        assert!(is_monochromatic_complete_multipartite(&RedBlueGraph::empty(4)));
        assert!(is_monochromatic_complete_multipartite(&blue(&Graph::path(3))));
        assert!(!is_monochromatic_complete_multipartite(&blue(&Graph::path(4))));
        let mut mixed = blue(&Graph::complete(3));
        mixed.set(0, 1, Some(Color::Red));
        assert!(!is_monochromatic_complete_multipartite(&mixed));
    }
}
