//! Exact extremal numbers at desk scale, with extremal witnesses, and the
//! seeded random maximal Berge-free generator.

mod engine;
pub mod oracle;
pub(crate) mod probe;

use rand::seq::SliceRandom;
use serde::Serialize;

use crate::canon::{canonical_hypergraph, canonical_label};
use crate::detect::{contains_berge, is_free, is_linear};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::format::{emit_graph, emit_hypergraph};
use crate::graph::{Graph, MAX_VERTICES};
use crate::hypergraph::{all_r_sets, Hypergraph};
use crate::rng::{rng_from, trial_seed, DEFAULT_SEED};

use engine::{slot_bits, Constraint, Engine, EngineConfig, Objective, Space};
use probe::{Family, Probe, SlotMask};

pub const GRAPH_SEARCH_CAP: usize = 10;
pub const GENERALIZED_SEARCH_CAP: usize = 9;

/// Largest n accepted by [`exact_ex_berge`] for uniformity `r`.
pub fn berge_search_cap(r: usize) -> Option<usize> {
    match r {
        3 => Some(8),
        4 => Some(7),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    /// Depth below which branching uses automorphism orbits.
    pub orbital_depth: usize,
    /// Depth at which the tree is cut into parallel subproblems.
    pub split_depth: usize,
    /// Number of extremal witnesses to return.
    pub witness_limit: usize,
    /// Abort after this many nodes per subproblem (result then not exhaustive).
    pub node_limit: Option<u64>,
    /// Random greedy runs used for the initial incumbent.
    pub warm_starts: u64,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            orbital_depth: 3,
            split_depth: 8,
            witness_limit: 1,
            node_limit: None,
            warm_starts: 8,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Graph(Graph),
    Hypergraph(Hypergraph),
}

impl Witness {
    pub fn to_text(&self) -> String {
        match self {
            Witness::Graph(g) => emit_graph(g),
            Witness::Hypergraph(h) => emit_hypergraph(h),
        }
    }
}

impl Serialize for Witness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub value: u64,
    pub witnesses: Vec<Witness>,
    pub nodes_explored: u64,
    pub exhaustive: bool,
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::SizeLimit { what, n, cap })
    } else {
        Ok(())
    }
}

fn engine_for(n: usize, size: usize, constraint: Constraint, objective: Objective, cfg: &SearchConfig) -> Engine {
    Engine {
        space: Space::new(n, size),
        constraint,
        objective,
        config: EngineConfig {
            orbital_depth: cfg.orbital_depth,
            split_depth: cfg.split_depth.max(1),
            node_limit: cfg.node_limit,
        },
    }
}

fn warm_start(engine: &Engine, cfg: &SearchConfig) -> u64 {
    let mut order: Vec<usize> = (0..engine.space.slots.len()).collect();
    (0..cfg.warm_starts)
        .map(|t| {
            order.shuffle(&mut rng_from(trial_seed(cfg.seed, t)));
            engine.value_of(engine.greedy(&order))
        })
        .max()
        .unwrap_or(0)
}

/// Runs the value pass and the witness pass; `validate` rebuilds and
/// independently re-checks each witness.
fn run(engine: &Engine, cfg: &SearchConfig, validate: impl Fn(SlotMask) -> Result<Witness>) -> Result<SearchResult> {
    let outcome = engine.maximize(warm_start(engine, cfg));
    let (found, extra) = engine.collect(outcome.value, cfg.witness_limit);
    if found.iter().any(|&set| engine.value_of(set) != outcome.value) {
        return Err(Error::Internal("search witness misses the extremal value".into()));
    }
    let mut witnesses = found.into_iter().map(validate).collect::<Result<Vec<_>>>()?;
    witnesses.sort_by_cached_key(Witness::to_text);
    witnesses.dedup();
    Ok(SearchResult {
        value: outcome.value,
        witnesses,
        nodes_explored: outcome.nodes + extra,
        exhaustive: outcome.exhaustive,
    })
}

fn graph_from_slots(engine: &Engine, set: SlotMask) -> Graph {
    let mut g = Graph::empty(engine.space.n);
    for s in slot_bits(set) {
        let p = crate::graph::Pair::from_mask(engine.space.slots[s]).expect("pair slot");
        g.add_edge(p.lo, p.hi);
    }
    g
}

fn graph_search(n: usize, f: &FamilySpec, objective: Objective, cfg: &SearchConfig) -> Result<SearchResult> {
    let engine = engine_for(n, 2, Constraint::Subgraph(Probe::new(f)), objective, cfg);
    run(&engine, cfg, |set| {
        let g = graph_from_slots(&engine, set);
        if !is_free(&g, f) {
            return Err(Error::Internal(format!("search witness is not {f}-free")));
        }
        Ok(Witness::Graph(canonical_label(&g)?.graph()))
    })
}

/// ex(n, F): the most edges in an F-free graph on n vertices.
pub fn exact_ex_graph(n: usize, f: &FamilySpec, cfg: &SearchConfig) -> Result<SearchResult> {
    check_cap("exact_ex_graph", n, GRAPH_SEARCH_CAP)?;
    graph_search(n, f, Objective::Slots, cfg)
}

/// ex(n, K_r, F): the most r-cliques in an F-free graph on n vertices.
pub fn exact_generalized_ex(n: usize, r: usize, f: &FamilySpec, cfg: &SearchConfig) -> Result<SearchResult> {
    check_cap("exact_generalized_ex", n, GENERALIZED_SEARCH_CAP)?;
    if r < 2 {
        return Err(Error::InvalidParameter(format!("clique size must be at least 2, got {r}")));
    }
    graph_search(n, f, Objective::Cliques(r), cfg)
}

/// ex_r(n, Berge-F), or its linear variant: the most hyperedges in an
/// r-uniform (linear) hypergraph on n vertices without a Berge copy of F.
pub fn exact_ex_berge(n: usize, r: usize, f: &FamilySpec, linear_only: bool, cfg: &SearchConfig) -> Result<SearchResult> {
    let cap = berge_search_cap(r)
        .ok_or_else(|| Error::InvalidParameter(format!("Berge searches support r = 3 or 4, got {r}")))?;
    check_cap("exact_ex_berge", n, cap)?;
    let constraint = Constraint::Berge {
        probe: Probe::new(f),
        linear: linear_only,
    };
    let engine = engine_for(n, r, constraint, Objective::Slots, cfg);
    run(&engine, cfg, |set| {
        let h = Hypergraph::from_masks_unchecked(r, n, slot_bits(set).map(|s| engine.space.slots[s]).collect());
        if contains_berge(&h, f).is_some() || (linear_only && !is_linear(&h)) {
            return Err(Error::Internal(format!("search witness contains a Berge-{f}")));
        }
        Ok(Witness::Hypergraph(canonical_hypergraph(&h)?))
    })
}

/// Shuffles all r-sets by `seed` and adds each one unless it would create a
/// Berge copy of `f`. The result is audited for freeness and maximality.
pub fn random_maximal_berge_free(n: usize, r: usize, f: &FamilySpec, seed: u64) -> Result<Hypergraph> {
    if r < 2 || r > n {
        return Err(Error::InvalidParameter(format!("need 2 <= r <= n, got r = {r}, n = {n}")));
    }
    check_cap("random_maximal_berge_free", n, MAX_VERTICES)?;
    let mut sets = all_r_sets(n, r);
    sets.shuffle(&mut rng_from(seed));
    let probe = Probe::new(f);
    let mut family = Family::new(n);
    let mut chosen = Vec::new();
    for mask in sets {
        let id = chosen.len();
        if id >= engine::MAX_SLOTS {
            return Err(Error::SizeLimit {
                what: "random_maximal_berge_free hyperedges",
                n: id,
                cap: engine::MAX_SLOTS,
            });
        }
        if !probe.slot_creates_berge(&family, id, mask) {
            family.add(id, mask);
            chosen.push(mask);
        }
    }
    let h = Hypergraph::from_masks_unchecked(r, n, chosen);
    audit_maximal_berge_free(&h, f)?;
    Ok(h)
}

/// Checks with the general detector that `h` is Berge-`f`-free and that every
/// absent r-set would create a Berge copy.
pub fn audit_maximal_berge_free(h: &Hypergraph, f: &FamilySpec) -> Result<()> {
    if let Some(w) = contains_berge(h, f) {
        return Err(Error::NotAdmissible {
            family: f.to_string(),
            witness: Box::new(w),
        });
    }
    for mask in all_r_sets(h.n(), h.r()) {
        if h.contains(mask) {
            continue;
        }
        let mut bigger = h.clone();
        bigger.push(mask)?;
        if contains_berge(&bigger, f).is_none() {
            return Err(Error::Internal(format!(
                "hypergraph is not maximal: r-set {mask:#b} can be added"
            )));
        }
    }
    Ok(())
}
