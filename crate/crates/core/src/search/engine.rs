//! Branch and bound over slots (vertex pairs or r-sets), shared by all exact
//! searches.
//!
//! A node fixes some slots as included and some as excluded. Its *live* slots
//! are the undecided ones that can still be added to the included family
//! without creating a forbidden copy; since freeness is monotone, a slot that
//! dies never revives. The bound of a node is the objective evaluated on
//! included ∪ live.
//!
//! Near the root, branching is orbital: the vertex permutations fixing the
//! included and excluded sets are enumerated, and the branch "include the
//! lowest live slot s" is paired with "exclude every slot in the orbit of s".
//! Any solution using a slot of that orbit is isomorphic to one using s.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::detect::count_cliques;
use crate::graph::{bits, Graph, Pair, VertexSet};
use crate::hypergraph::{all_r_sets, pairs_of};

use super::probe::{Family, Probe, SlotMask};

pub(crate) const MAX_SLOTS: usize = 128;

/// Upper limit on enumerated permutations per orbit computation. Past it the
/// orbit degrades to the slot itself, which is always sound.
const GROUP_ENUMERATION_LIMIT: u64 = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Objective {
    Slots,
    Cliques(usize),
}

#[derive(Debug, Clone)]
pub(crate) enum Constraint {
    /// Slots are vertex pairs; the chosen graph must avoid the pattern.
    Subgraph(Probe),
    /// Slots are r-sets; the chosen hypergraph must avoid a Berge copy.
    Berge { probe: Probe, linear: bool },
}

#[derive(Debug, Clone)]
pub(crate) struct Space {
    pub n: usize,
    pub slots: Vec<VertexSet>,
    index: HashMap<VertexSet, usize>,
    /// slots grouped by their largest vertex, for permutation checks
    closing: Vec<Vec<usize>>,
}

impl Space {
    pub fn new(n: usize, size: usize) -> Self {
        let slots = all_r_sets(n, size);
        assert!(slots.len() <= MAX_SLOTS, "slot space too large");
        let index = slots.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut closing = vec![Vec::new(); n];
        for (i, &m) in slots.iter().enumerate() {
            closing[63 - m.leading_zeros() as usize].push(i);
        }
        Space {
            n,
            slots,
            index,
            closing,
        }
    }

    pub fn all(&self) -> SlotMask {
        if self.slots.len() == MAX_SLOTS {
            SlotMask::MAX
        } else {
            (1 << self.slots.len()) - 1
        }
    }

    fn image(&self, slot: usize, perm: &[usize]) -> usize {
        let m = bits(self.slots[slot]).fold(0u64, |acc, v| acc | 1 << perm[v]);
        self.index[&m]
    }
}

pub(crate) fn slot_bits(mut mask: SlotMask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[derive(Debug, Clone)]
pub(crate) struct Node {
    pub included: SlotMask,
    pub excluded: SlotMask,
    pub live: SlotMask,
    pub depth: usize,
    pub family: Family,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct EngineConfig {
    pub orbital_depth: usize,
    pub split_depth: usize,
    pub node_limit: Option<u64>,
}

#[derive(Debug)]
pub(crate) struct Engine {
    pub space: Space,
    pub constraint: Constraint,
    pub objective: Objective,
    pub config: EngineConfig,
}

/// Search mode: maximise, or collect solutions reaching a fixed target.
#[derive(Debug, Clone, Copy)]
enum Mode {
    Maximize,
    Collect { target: u64, limit: usize },
}

struct Ctx<'a> {
    mode: Mode,
    incumbent: &'a AtomicU64,
    found: Vec<SlotMask>,
    nodes: u64,
    truncated: bool,
    /// frontier capture: nodes at this depth are handed back instead of explored
    split_at: Option<usize>,
    frontier: Vec<(Node, usize)>,
    /// collected solutions seen while building the frontier, keyed by the
    /// frontier length at the time (they precede that task in DFS order)
    early: Vec<(usize, SlotMask)>,
}

impl Engine {
    pub fn root(&self) -> Node {
        Node {
            included: 0,
            excluded: 0,
            live: self.space.all(),
            depth: 0,
            family: Family::new(self.space.n),
        }
    }

    pub fn addable(&self, family: &Family, slot: usize) -> bool {
        let mask = self.space.slots[slot];
        match &self.constraint {
            Constraint::Subgraph(probe) => {
                let p = Pair::from_mask(mask).expect("graph slots are pairs");
                !probe.edge_creates_copy(&family.shadow, p)
            }
            Constraint::Berge { probe, linear } => {
                if *linear && pairs_of(mask).into_iter().any(|p| family.holders_of(p) != 0) {
                    return false;
                }
                !probe.slot_creates_berge(family, slot, mask)
            }
        }
    }

    fn graph_of(&self, slots: SlotMask) -> Graph {
        let mut g = Graph::empty(self.space.n);
        for s in slot_bits(slots) {
            for p in pairs_of(self.space.slots[s]) {
                g.add_edge(p.lo, p.hi);
            }
        }
        g
    }

    pub fn value(&self, node: &Node) -> u64 {
        match self.objective {
            Objective::Slots => node.included.count_ones() as u64,
            Objective::Cliques(r) => count_cliques(&node.family.shadow, r),
        }
    }

    fn bound(&self, node: &Node) -> u64 {
        match self.objective {
            Objective::Slots => (node.included | node.live).count_ones() as u64,
            Objective::Cliques(r) => count_cliques(&self.graph_of(node.included | node.live), r),
        }
    }

    pub fn value_of(&self, slots: SlotMask) -> u64 {
        match self.objective {
            Objective::Slots => slots.count_ones() as u64,
            Objective::Cliques(r) => count_cliques(&self.graph_of(slots), r),
        }
    }

    /// Greedy maximal family in the given slot order; returns the included set.
    pub fn greedy(&self, order: &[usize]) -> SlotMask {
        let mut family = Family::new(self.space.n);
        let mut included: SlotMask = 0;
        for &s in order {
            if self.addable(&family, s) {
                family.add(s, self.space.slots[s]);
                included |= 1 << s;
            }
        }
        included
    }

    /// The orbit of `slot` under the vertex permutations preserving the
    /// included and excluded sets of `node`.
    fn orbit(&self, node: &Node, slot: usize) -> SlotMask {
        if node.included == 0 && node.excluded == 0 {
            return node.live;
        }
        let n = self.space.n;
        // vertex invariant: (included degree, excluded degree)
        let inv: Vec<(u32, u32)> = (0..n)
            .map(|v| {
                let deg = |set: SlotMask| {
                    slot_bits(set)
                        .filter(|&s| self.space.slots[s] >> v & 1 == 1)
                        .count() as u32
                };
                (deg(node.included), deg(node.excluded))
            })
            .collect();
        let class = |s: usize| -> u8 {
            if node.included >> s & 1 == 1 {
                1
            } else if node.excluded >> s & 1 == 1 {
                2
            } else {
                0
            }
        };
        let mut orbit: SlotMask = 1 << slot;
        let mut perm = vec![usize::MAX; n];
        let mut used = 0u64;
        let mut leaves = 0u64;
        let complete = self.enumerate(0, &inv, &class, &mut perm, &mut used, &mut leaves, &mut |perm| {
            orbit |= 1 << self.space.image(slot, perm);
        });
        if complete {
            orbit
        } else {
            1 << slot
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn enumerate(
        &self,
        v: usize,
        inv: &[(u32, u32)],
        class: &dyn Fn(usize) -> u8,
        perm: &mut Vec<usize>,
        used: &mut u64,
        leaves: &mut u64,
        visit: &mut dyn FnMut(&[usize]),
    ) -> bool {
        let n = self.space.n;
        if v == n {
            *leaves += 1;
            visit(perm);
            return *leaves < GROUP_ENUMERATION_LIMIT;
        }
        for w in 0..n {
            if *used >> w & 1 == 1 || inv[w] != inv[v] {
                continue;
            }
            perm[v] = w;
            let consistent = self.space.closing[v]
                .iter()
                .all(|&s| class(s) == class(self.space.image(s, perm)));
            if consistent {
                *used |= 1 << w;
                let go_on = self.enumerate(v + 1, inv, class, perm, used, leaves, visit);
                *used &= !(1 << w);
                if !go_on {
                    perm[v] = usize::MAX;
                    return false;
                }
            }
            perm[v] = usize::MAX;
        }
        true
    }

    fn threshold_prunes(&self, bound: u64, ctx: &Ctx) -> bool {
        match ctx.mode {
            Mode::Maximize => bound <= ctx.incumbent.load(Ordering::Relaxed),
            Mode::Collect { target, .. } => bound < target,
        }
    }

    fn dfs(&self, node: Node, ctx: &mut Ctx) {
        if ctx.truncated {
            return;
        }
        if let Mode::Collect { limit, .. } = ctx.mode {
            if ctx.found.len() + ctx.early.len() >= limit && ctx.split_at.is_none() {
                return;
            }
        }
        if ctx.split_at == Some(node.depth) {
            let at = ctx.frontier.len();
            ctx.frontier.push((node, at));
            return;
        }
        ctx.nodes += 1;
        if let Some(limit) = self.config.node_limit {
            if ctx.nodes > limit {
                ctx.truncated = true;
                return;
            }
        }
        let val = self.value(&node);
        match ctx.mode {
            Mode::Maximize => {
                ctx.incumbent.fetch_max(val, Ordering::Relaxed);
            }
            Mode::Collect { target, .. } => {
                if val == target {
                    if ctx.split_at.is_some() {
                        ctx.early.push((ctx.frontier.len(), node.included));
                    } else {
                        ctx.found.push(node.included);
                    }
                    if matches!(self.objective, Objective::Slots) {
                        return;
                    }
                }
            }
        }
        if node.live == 0 || self.threshold_prunes(self.bound(&node), ctx) {
            return;
        }
        let s = node.live.trailing_zeros() as usize;
        let orbit = if node.depth < self.config.orbital_depth {
            self.orbit(&node, s)
        } else {
            1 << s
        };

        // include s
        let rest = node.live & !(1 << s);
        let quick = match self.objective {
            Objective::Slots => (node.included.count_ones() + 1 + rest.count_ones()) as u64,
            Objective::Cliques(_) => u64::MAX,
        };
        if !self.threshold_prunes(quick, ctx) {
            let mut family = node.family.clone();
            family.add(s, self.space.slots[s]);
            let live = slot_bits(rest)
                .filter(|&t| self.addable(&family, t))
                .fold(0 as SlotMask, |acc, t| acc | 1 << t);
            let child = Node {
                included: node.included | 1 << s,
                excluded: node.excluded,
                live,
                depth: node.depth + 1,
                family,
            };
            self.dfs(child, ctx);
        }

        // exclude the orbit of s
        let child = Node {
            included: node.included,
            excluded: node.excluded | orbit,
            live: node.live & !orbit,
            depth: node.depth + 1,
            family: node.family,
        };
        self.dfs(child, ctx);
    }

    /// Maximum objective value and the number of nodes explored. `warm` is a
    /// known achievable value (a lower bound).
    pub fn maximize(&self, warm: u64) -> Outcome {
        let incumbent = AtomicU64::new(warm);
        let mut top = self.new_ctx(Mode::Maximize, &incumbent, Some(self.config.split_depth));
        self.dfs(self.root(), &mut top);
        let frontier = std::mem::take(&mut top.frontier);
        let results = run_tasks(frontier, |node| {
            let mut ctx = self.new_ctx(Mode::Maximize, &incumbent, None);
            self.dfs(node, &mut ctx);
            (ctx.nodes, ctx.truncated)
        });
        let nodes = top.nodes + results.iter().map(|r| r.0).sum::<u64>();
        let truncated = top.truncated || results.iter().any(|r| r.1);
        Outcome {
            value: incumbent.load(Ordering::Relaxed),
            nodes,
            exhaustive: !truncated,
        }
    }

    /// The first `limit` solutions of value exactly `target` in DFS order.
    /// Independent of the worker count.
    pub fn collect(&self, target: u64, limit: usize) -> (Vec<SlotMask>, u64) {
        if limit == 0 {
            return (Vec::new(), 0);
        }
        let unused = AtomicU64::new(0);
        let mode = Mode::Collect { target, limit };
        let mut top = self.new_ctx(mode, &unused, Some(self.config.split_depth));
        self.dfs(self.root(), &mut top);
        let frontier = std::mem::take(&mut top.frontier);
        let per_task = run_tasks(frontier, |node| {
            let mut ctx = self.new_ctx(mode, &unused, None);
            self.dfs(node, &mut ctx);
            (ctx.found, ctx.nodes)
        });
        let mut nodes = top.nodes;
        let mut ordered: Vec<(usize, u8, usize, SlotMask)> = top
            .early
            .iter()
            .enumerate()
            .map(|(i, &(at, s))| (at, 0, i, s))
            .collect();
        for (task, (found, n)) in per_task.into_iter().enumerate() {
            nodes += n;
            ordered.extend(found.into_iter().enumerate().map(|(i, s)| (task, 1, i, s)));
        }
        ordered.sort_unstable();
        (ordered.into_iter().take(limit).map(|t| t.3).collect(), nodes)
    }

    fn new_ctx<'a>(&self, mode: Mode, incumbent: &'a AtomicU64, split_at: Option<usize>) -> Ctx<'a> {
        Ctx {
            mode,
            incumbent,
            found: Vec::new(),
            nodes: 0,
            truncated: false,
            split_at,
            frontier: Vec::new(),
            early: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Outcome {
    pub value: u64,
    pub nodes: u64,
    pub exhaustive: bool,
}

#[cfg(feature = "parallel")]
fn run_tasks<T: Send>(frontier: Vec<(Node, usize)>, work: impl Fn(Node) -> T + Sync) -> Vec<T> {
    use rayon::prelude::*;
    frontier.into_par_iter().map(|(node, _)| work(node)).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_tasks<T>(frontier: Vec<(Node, usize)>, work: impl Fn(Node) -> T) -> Vec<T> {
    frontier.into_iter().map(|(node, _)| work(node)).collect()
}
