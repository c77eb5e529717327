//! From a Berge-free hypergraph to a red-blue graph, and the random halving
//! that turns the matched hyperedges into a graph avoiding the base pattern.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng as _;
use serde::Serialize;

use crate::detect::{contains_berge, count_cliques, find_clique, is_free};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::{bits, full_mask, Graph, Pair, VertexSet};
use crate::hypergraph::{pairs_of, HyperedgeId, Hypergraph};
use crate::matching::{
    adjust_matching, build_incidence, cel2_partition, designated_shared_pairs, heavy_constrained_matching,
    BipartiteIncidence, Cel2Partition, Cel2Violation, Matching,
};
use crate::redblue::RedBlueGraph;
use crate::rng::{rng_from, trial_seed};

/// The greedy split into a linear part and the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSplit {
    pub h1: Hypergraph,
    pub h2: Hypergraph,
    /// ids (in the input) of the hyperedges of `h1` and `h2`, in scan order
    pub h1_ids: Vec<HyperedgeId>,
    pub h2_ids: Vec<HyperedgeId>,
    pub insertion_order: Vec<HyperedgeId>,
}

/// Scans hyperedges in `order` and keeps one in the linear part iff it
/// shares no pair with the hyperedges kept so far.
pub fn greedy_linear_split(h: &Hypergraph, order: &[HyperedgeId]) -> Result<LinearSplit> {
    let mut seen = vec![false; h.len()];
    if order.len() != h.len() || order.iter().any(|&i| i >= h.len() || std::mem::replace(&mut seen[i], true)) {
        return Err(Error::invalid("scan order must be a permutation of the hyperedge ids"));
    }
    let mut covered = Graph::empty(h.n());
    let (mut h1_ids, mut h2_ids) = (Vec::new(), Vec::new());
    for &id in order {
        let pairs = pairs_of(h.edge(id));
        if pairs.iter().any(|p| covered.has_edge(p.lo, p.hi)) {
            h2_ids.push(id);
        } else {
            for p in pairs {
                covered.add_edge(p.lo, p.hi);
            }
            h1_ids.push(id);
        }
    }
    Ok(LinearSplit {
        h1: h.select(&h1_ids),
        h2: h.select(&h2_ids),
        h1_ids,
        h2_ids,
        insertion_order: order.to_vec(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReductionCounts {
    pub h: usize,
    pub h1: usize,
    pub h2: usize,
    pub a1: usize,
    pub a2: usize,
    pub b1: usize,
    pub b2: usize,
    pub red_edges: usize,
    pub blue_cliques: u64,
    pub g_r: u64,
}

/// Everything the reduction produced, for one input.
#[derive(Debug, Clone)]
pub struct ReductionCertificate {
    pub hypergraph: Hypergraph,
    pub family: FamilySpec,
    pub r: usize,
    pub split: LinearSplit,
    pub gamma: BipartiteIncidence,
    pub m: Matching,
    pub partition: Cel2Partition,
    pub violations: Vec<Cel2Violation>,
    pub rbg: RedBlueGraph,
    pub counts: ReductionCounts,
}

/// |red edges| + number of blue r-cliques.
pub fn g_r_value(rbg: &RedBlueGraph, r: usize) -> u64 {
    rbg.red().edge_count() as u64 + count_cliques(rbg.blue(), r)
}

/// The full reduction with the pipeline's own matching: split in id order,
/// 1-heavy-constrained maximum matching, adjustment, partition.
///
/// Fails with [`Error::NotAdmissible`] if `h` contains a Berge copy of `f`,
/// and with [`Error::Internal`] if any property in
/// [`ReductionCertificate::audit`] fails.
pub fn red_blue_reduce(h: &Hypergraph, f: &FamilySpec, r: usize) -> Result<ReductionCertificate> {
    let cert = pipeline_certificate(h, f, r)?;
    let failures = cert.audit();
    if failures.is_empty() {
        Ok(cert)
    } else {
        Err(Error::Internal(failures.join("; ")))
    }
}

/// Same pipeline as [`red_blue_reduce`] without the final audit.
pub fn pipeline_certificate(h: &Hypergraph, f: &FamilySpec, r: usize) -> Result<ReductionCertificate> {
    if h.r() != r {
        return Err(Error::InvalidParameter(format!("hypergraph is {}-uniform, not {r}-uniform", h.r())));
    }
    if let Some(w) = contains_berge(h, f) {
        return Err(Error::NotAdmissible {
            family: f.to_string(),
            witness: Box::new(w),
        });
    }
    let order: Vec<HyperedgeId> = (0..h.len()).collect();
    let split = greedy_linear_split(h, &order)?;
    let gamma = build_incidence(&split.h2);
    let m0 = heavy_constrained_matching(&gamma, h)?;
    let m = adjust_matching(&gamma, &m0, &split.h1)?;
    reduce_from_matching(h, f, split, m)
}

/// Builds the certificate from a given split and matching of its `Γ`, without
/// auditing. Exposed so that alternative or corrupted matchings can be probed.
pub fn reduce_from_matching(h: &Hypergraph, f: &FamilySpec, split: LinearSplit, m: Matching) -> Result<ReductionCertificate> {
    let r = h.r();
    let gamma = build_incidence(&split.h2);
    let partition = cel2_partition(&gamma, &m)?;
    let violations = partition.violations(&gamma, &m);
    let mut rbg = RedBlueGraph::empty(h.n());
    for &b in &partition.b1 {
        let p = gamma.pair(b).expect("labelled");
        rbg.set(p.lo, p.hi, Some(crate::redblue::Color::Red));
    }
    for &b in &partition.b2 {
        let p = gamma.pair(b).expect("labelled");
        rbg.set(p.lo, p.hi, Some(crate::redblue::Color::Blue));
    }
    let red_edges = rbg.red().edge_count();
    let blue_cliques = count_cliques(rbg.blue(), r);
    let counts = ReductionCounts {
        h: h.len(),
        h1: split.h1.len(),
        h2: split.h2.len(),
        a1: partition.a1.len(),
        a2: partition.a2.len(),
        b1: partition.b1.len(),
        b2: partition.b2.len(),
        red_edges,
        blue_cliques,
        g_r: red_edges as u64 + blue_cliques,
    };
    Ok(ReductionCertificate {
        hypergraph: h.clone(),
        family: f.clone(),
        r,
        split,
        gamma,
        m,
        partition,
        violations,
        rbg,
        counts,
    })
}

impl ReductionCertificate {
    /// Descriptions of every failed reduction property; empty when the
    /// certificate is sound. Partition defects are kept apart in `violations`.
    pub fn audit(&self) -> Vec<String> {
        let mut out = Vec::new();
        let c = &self.counts;
        if c.h != c.h1 + c.h2 || c.h2 != c.a1 + c.a2 {
            out.push(format!("count mismatch: {c:?}"));
        }
        if c.h2 as u64 > c.g_r {
            out.push(format!("|H2| = {} exceeds g_r = {}", c.h2, c.g_r));
        }
        if !is_free(&self.rbg.graph(), &self.family) {
            out.push(format!("red-blue graph contains {}", self.family));
        }
        if let Some(k) = find_clique(self.rbg.red(), self.r) {
            out.push(format!("red subgraph contains K{} on {k:?}", self.r));
        }
        for &a in &self.partition.a2 {
            let e = self.gamma.hyperedge(a).expect("labelled");
            if !pairs_of(e).iter().all(|p| self.rbg.blue().has_edge(p.lo, p.hi)) {
                out.push(format!("A2 hyperedge {:?} does not span a blue clique", bits(e).collect::<Vec<_>>()));
            }
        }
        out
    }

    /// `b₀(a)` for every `a`, as used by the adjustment step.
    pub fn designated_pairs(&self) -> Result<Vec<Pair>> {
        designated_shared_pairs(&self.gamma, &self.split.h1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HalvingMode {
    Independent,
    Paired,
}

impl fmt::Display for HalvingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HalvingMode::Independent => "independent",
            HalvingMode::Paired => "paired",
        })
    }
}

impl FromStr for HalvingMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "independent" => Ok(HalvingMode::Independent),
            "paired" => Ok(HalvingMode::Paired),
            other => Err(Error::InvalidParameter(format!("unknown halving mode '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalvingOutcome {
    pub n: usize,
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub mode: HalvingMode,
    pub pairing: Option<Vec<Pair>>,
    /// surviving `A` vertices (ids into `Γ`)
    pub survivors: Vec<usize>,
    pub g_prime: Option<Graph>,
}

/// A random bipartition of `0..n`: independent fair coins, or a uniform
/// perfect pairing with each pair split by a fair coin.
pub fn random_halving(n: usize, mode: HalvingMode, seed: u64) -> Result<HalvingOutcome> {
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "random_halving",
            n,
            cap: crate::graph::MAX_VERTICES,
        });
    }
    let mut rng = rng_from(seed);
    let (mut v1, mut v2) = (0u64, 0u64);
    let pairing = match mode {
        HalvingMode::Independent => {
            for v in 0..n {
                if rng.random::<bool>() {
                    v1 |= 1 << v;
                } else {
                    v2 |= 1 << v;
                }
            }
            None
        }
        HalvingMode::Paired => {
            if n % 2 == 1 {
                return Err(Error::InvalidParameter(format!(
                    "paired halving needs an even vertex count, got {n}"
                )));
            }
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            let mut pairs: Vec<Pair> = order.chunks(2).map(|c| Pair::new(c[0], c[1])).collect();
            pairs.sort_unstable();
            for p in &pairs {
                let (a, b) = if rng.random::<bool>() { (p.lo, p.hi) } else { (p.hi, p.lo) };
                v1 |= 1 << a;
                v2 |= 1 << b;
            }
            Some(pairs)
        }
    };
    Ok(HalvingOutcome {
        n,
        v1,
        v2,
        mode,
        pairing,
        survivors: Vec::new(),
        g_prime: None,
    })
}

fn survives(a_mask: VertexSet, matched: Pair, v1: VertexSet, v2: VertexSet) -> bool {
    let b = matched.mask();
    let rest = a_mask & !b;
    (b & v1 == b && rest & v2 == rest) || (b & v2 == b && rest & v1 == rest)
}

/// Keeps the matched hyperedges whose matched pair lies on one side and whose
/// other vertices all lie on the other side; `G′` is the graph of their
/// matched pairs.
pub fn survivor_graph(cert: &ReductionCertificate, halving: &HalvingOutcome) -> Result<HalvingOutcome> {
    let n = cert.hypergraph.n();
    if halving.n != n || halving.v1 & halving.v2 != 0 || halving.v1 | halving.v2 != full_mask(n) {
        return Err(Error::invalid("the halving does not partition the certificate's vertex set"));
    }
    let mut survivors = Vec::new();
    let mut g_prime = Graph::empty(n);
    for (a, b) in cert.m.pairs() {
        let e = cert.gamma.hyperedge(a).expect("labelled");
        let p = cert.gamma.pair(b).expect("labelled");
        if survives(e, p, halving.v1, halving.v2) {
            survivors.push(a);
            g_prime.add_edge(p.lo, p.hi);
        }
    }
    survivors.sort_unstable();
    Ok(HalvingOutcome {
        survivors,
        g_prime: Some(g_prime),
        ..halving.clone()
    })
}

/// True iff `G′` avoids `f0`. Requires `survivor_graph` to have run.
pub fn check_claim(halving: &HalvingOutcome, f0: &FamilySpec) -> Result<bool> {
    let g = halving
        .g_prime
        .as_ref()
        .ok_or_else(|| Error::Precondition("check_claim needs the survivor graph".into()))?;
    Ok(is_free(g, f0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RetentionCase {
    /// independent halving
    Independent,
    /// paired halving, no pair of the hyperedge is a pairing block
    DistinctPairs,
    /// paired halving, the matched pair is a pairing block
    MatchedPairIsBlock,
    /// paired halving, another pair of the hyperedge is a pairing block
    OtherPairIsBlock,
}

impl RetentionCase {
    pub fn name(self) -> &'static str {
        match self {
            RetentionCase::Independent => "independent",
            RetentionCase::DistinctPairs => "distinct_pairs",
            RetentionCase::MatchedPairIsBlock => "matched_pair_is_block",
            RetentionCase::OtherPairIsBlock => "other_pair_is_block",
        }
    }

    const ALL: [RetentionCase; 4] = [
        RetentionCase::Independent,
        RetentionCase::DistinctPairs,
        RetentionCase::MatchedPairIsBlock,
        RetentionCase::OtherPairIsBlock,
    ];
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseFrequency {
    pub case: RetentionCase,
    pub occurrences: u64,
    pub retained: u64,
    pub frequency: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HyperedgeRetention {
    pub hyperedge: Vec<usize>,
    pub matched_pair: Pair,
    pub retained: u64,
    pub trials: u64,
    pub frequency: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RetentionStats {
    pub mode: HalvingMode,
    pub trials: u64,
    pub seed: u64,
    pub cases: Vec<CaseFrequency>,
    pub per_hyperedge: Vec<HyperedgeRetention>,
}

fn classify(mode: HalvingMode, e: VertexSet, matched: Pair, blocks: &[Pair]) -> RetentionCase {
    match mode {
        HalvingMode::Independent => RetentionCase::Independent,
        HalvingMode::Paired => {
            if blocks.contains(&matched) {
                RetentionCase::MatchedPairIsBlock
            } else if blocks.iter().any(|p| e & p.mask() == p.mask()) {
                RetentionCase::OtherPairIsBlock
            } else {
                RetentionCase::DistinctPairs
            }
        }
    }
}

/// Per-trial tallies: (case occurrences, case retentions, per-matched-hyperedge retentions).
type Tally = ([u64; 4], [u64; 4], Vec<u64>);

fn add_tallies(mut x: Tally, y: Tally) -> Tally {
    for i in 0..4 {
        x.0[i] += y.0[i];
        x.1[i] += y.1[i];
    }
    for (a, b) in x.2.iter_mut().zip(y.2) {
        *a += b;
    }
    x
}

/// Monte Carlo estimate of the retention probability of each matched
/// hyperedge, bucketed by how the hyperedge meets the pairing. Trial `t`
/// uses seed `seed ^ t`, so the result does not depend on scheduling.
pub fn retention_statistics(cert: &ReductionCertificate, mode: HalvingMode, trials: u64, seed: u64) -> Result<RetentionStats> {
    if trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    let n = cert.hypergraph.n();
    if mode == HalvingMode::Paired && n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "paired halving needs an even vertex count, got {n}; add an isolated vertex first"
        )));
    }
    let matched: Vec<(VertexSet, Pair)> = cert
        .m
        .pairs()
        .into_iter()
        .map(|(a, b)| (cert.gamma.hyperedge(a).unwrap(), cert.gamma.pair(b).unwrap()))
        .collect();
    let trial = |t: u64| -> Result<Tally> {
        let halving = random_halving(n, mode, trial_seed(seed, t))?;
        let blocks = halving.pairing.as_deref().unwrap_or(&[]);
        let mut tally: Tally = ([0; 4], [0; 4], vec![0; matched.len()]);
        for (i, &(e, p)) in matched.iter().enumerate() {
            let case = classify(mode, e, p, blocks) as usize;
            tally.0[case] += 1;
            if survives(e, p, halving.v1, halving.v2) {
                tally.1[case] += 1;
                tally.2[i] += 1;
            }
        }
        Ok(tally)
    };
    let zero = || -> Tally { ([0; 4], [0; 4], vec![0; matched.len()]) };

    #[cfg(feature = "parallel")]
    let total = {
        use rayon::prelude::*;
        (0..trials)
            .into_par_iter()
            .map(trial)
            .try_reduce(zero, |x, y| Ok(add_tallies(x, y)))?
    };
    #[cfg(not(feature = "parallel"))]
    let total = (0..trials).map(trial).try_fold(zero(), |x, y| y.map(|y| add_tallies(x, y)))?;

    let cases = RetentionCase::ALL
        .iter()
        .enumerate()
        .filter(|&(_, &c)| (c == RetentionCase::Independent) == (mode == HalvingMode::Independent))
        .map(|(i, &case)| CaseFrequency {
            case,
            occurrences: total.0[i],
            retained: total.1[i],
            frequency: if total.0[i] == 0 {
                0.0
            } else {
                total.1[i] as f64 / total.0[i] as f64
            },
        })
        .collect();
    let per_hyperedge = matched
        .iter()
        .zip(&total.2)
        .map(|(&(e, p), &kept)| HyperedgeRetention {
            hyperedge: bits(e).collect(),
            matched_pair: p,
            retained: kept,
            trials,
            frequency: kept as f64 / trials as f64,
        })
        .collect();
    Ok(RetentionStats {
        mode,
        trials,
        seed,
        cases,
        per_hyperedge,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::turan_graph;
    use crate::redblue::Color;
    use crate::search::random_maximal_berge_free;

    fn h3(n: usize, edges: &[[usize; 3]]) -> Hypergraph {
        Hypergraph::from_edges(3, n, edges).unwrap()
    }

    fn c5() -> FamilySpec {
        FamilySpec::cycle(5).unwrap()
    }

    #[test]
    fn split_examples() {
        let h = h3(7, &[[1, 2, 3], [3, 4, 5], [5, 6, 1]]);
        let s = greedy_linear_split(&h, &[2, 0, 1]).unwrap();
        assert_eq!(s.h1.len(), 3);
        assert!(s.h2.is_empty());

        let h = h3(5, &[[1, 2, 3], [1, 2, 4]]);
        let s = greedy_linear_split(&h, &[0, 1]).unwrap();
        assert_eq!(s.h1.edges(), &[0b1110]);
        assert_eq!(s.h2.edges(), &[0b10110]);

        let h = h3(7, &[[1, 2, 3], [1, 2, 4], [4, 5, 6]]);
        let s = greedy_linear_split(&h, &[0, 1, 2]).unwrap();
        assert_eq!(s.h1_ids, vec![0, 2]);
        assert_eq!(s.h2_ids, vec![1]);
    }

    #[test]
    fn split_rejects_bad_orders() {
        let h = h3(5, &[[1, 2, 3], [1, 2, 4]]);
        assert!(greedy_linear_split(&h, &[0]).is_err());
        assert!(greedy_linear_split(&h, &[0, 0]).is_err());
        assert!(greedy_linear_split(&h, &[0, 2]).is_err());
    }

    #[test]
    fn reduce_trivial_inputs() {
        let empty = Hypergraph::new(3, 6).unwrap();
        let cert = red_blue_reduce(&empty, &c5(), 3).unwrap();
        assert_eq!(cert.counts.g_r, 0);
        let one = h3(4, &[[1, 2, 3]]);
        let cert = red_blue_reduce(&one, &c5(), 3).unwrap();
        assert_eq!((cert.counts.h1, cert.counts.h2, cert.counts.g_r), (1, 0, 0));
    }

    #[test]
    fn reduce_rejects_berge_copies() {
        let h = h3(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3]]);
        assert!(matches!(
            red_blue_reduce(&h, &FamilySpec::clique(3).unwrap(), 3),
            Err(Error::NotAdmissible { .. })
        ));
        assert!(red_blue_reduce(&h, &c5(), 4).is_err());
    }

    #[test]
    fn g_r_examples() {
        let mut rb = RedBlueGraph::empty(8);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)] {
            rb.set(u, v, Some(Color::Red));
        }
        assert_eq!(g_r_value(&rb, 3), 7);
        let t = RedBlueGraph::monochromatic(&turan_graph(10, 4).unwrap(), Color::Blue);
        assert_eq!(g_r_value(&t, 4), 36);
        let k33 = RedBlueGraph::monochromatic(&Graph::complete_bipartite(3, 3), Color::Blue);
        assert_eq!(g_r_value(&k33, 3), 0);
    }

    #[test]
    fn halving_examples() {
        for seed in 0..50 {
            let h = random_halving(10, HalvingMode::Paired, seed).unwrap();
            assert_eq!((h.v1.count_ones(), h.v2.count_ones()), (5, 5));
            for p in h.pairing.as_ref().unwrap() {
                assert_eq!((h.v1 >> p.lo & 1) + (h.v1 >> p.hi & 1), 1);
            }
        }
        let mean = (0..10_000u64)
            .map(|s| random_halving(10, HalvingMode::Independent, s).unwrap().v1.count_ones() as f64)
            .sum::<f64>()
            / 10_000.0;
        assert!((mean - 5.0).abs() < 0.2, "{mean}");
        assert_eq!(
            random_halving(4, HalvingMode::Paired, 99).unwrap(),
            random_halving(4, HalvingMode::Paired, 99).unwrap()
        );
        assert!(random_halving(5, HalvingMode::Paired, 1).is_err());
    }

    #[test]
    fn survival_rule() {
        let a = 0b1110; // {1,2,3}
        assert!(survives(a, Pair::new(1, 2), 0b0110, 0b1001));
        assert!(!survives(a, Pair::new(1, 3), 0b0110, 0b1001));
    }

    #[test]
    fn survivor_graph_keeps_sides_apart() {
        let f = c5();
        for seed in 0..10 {
            let h = random_maximal_berge_free(8, 3, &f, seed).unwrap();
            let cert = pipeline_certificate(&h, &f, 3).unwrap();
            let halving = random_halving(8, HalvingMode::Paired, seed).unwrap();
            let out = survivor_graph(&cert, &halving).unwrap();
            let g = out.g_prime.as_ref().unwrap();
            assert!(g.edges().all(|p| (out.v1 >> p.lo & 1) == (out.v1 >> p.hi & 1)));
            for &a in &out.survivors {
                assert!(cert.m.b_of(a).is_some());
            }
            let wrong = random_halving(10, HalvingMode::Paired, seed).unwrap();
            assert!(survivor_graph(&cert, &wrong).is_err());
        }
    }

    #[test]
    fn claim_probe_detects_a_violation() {
        let halving = HalvingOutcome {
            n: 4,
            v1: 0b1111,
            v2: 0,
            mode: HalvingMode::Independent,
            pairing: None,
            survivors: vec![0, 1, 2, 3],
            g_prime: Some(Graph::cycle(4)),
        };
        assert!(!check_claim(&halving, &FamilySpec::cycle(4).unwrap()).unwrap());
        let empty = HalvingOutcome {
            g_prime: Some(Graph::empty(4)),
            ..halving.clone()
        };
        assert!(check_claim(&empty, &FamilySpec::cycle(4).unwrap()).unwrap());
        let missing = HalvingOutcome { g_prime: None, ..halving };
        assert!(check_claim(&missing, &FamilySpec::cycle(4).unwrap()).is_err());
    }

    #[test]
    fn paired_case_probabilities_by_enumeration() {
        // a = {0,1,2}, M(a) = {0,1}; enumerate the three block structures
        // of the four vertices {0,1,2,3} and both orientations of each block
        let a = 0b0111;
        let m = Pair::new(0, 1);
        let pairings = [
            [Pair::new(0, 1), Pair::new(2, 3)],
            [Pair::new(0, 2), Pair::new(1, 3)],
            [Pair::new(0, 3), Pair::new(1, 2)],
        ];
        let mut kept = [0u32; 4];
        let mut seen = [0u32; 4];
        for blocks in pairings {
            let case = classify(HalvingMode::Paired, a, m, &blocks) as usize;
            for orient in 0..4u32 {
                let (mut v1, mut v2) = (0u64, 0u64);
                for (i, p) in blocks.iter().enumerate() {
                    let (x, y) = if orient >> i & 1 == 1 { (p.lo, p.hi) } else { (p.hi, p.lo) };
                    v1 |= 1 << x;
                    v2 |= 1 << y;
                }
                seen[case] += 1;
                kept[case] += survives(a, m, v1, v2) as u32;
            }
        }
        assert_eq!(kept[RetentionCase::MatchedPairIsBlock as usize], 0);
        assert_eq!(
            2 * kept[RetentionCase::OtherPairIsBlock as usize],
            seen[RetentionCase::OtherPairIsBlock as usize]
        );
    }

    #[test]
    fn retention_is_reproducible() {
        let f = c5();
        let h = random_maximal_berge_free(8, 3, &f, 3).unwrap();
        let cert = red_blue_reduce(&h, &f, 3).unwrap();
        let a = retention_statistics(&cert, HalvingMode::Paired, 500, 11).unwrap();
        let b = retention_statistics(&cert, HalvingMode::Paired, 500, 11).unwrap();
        assert_eq!(a, b);
        assert!(retention_statistics(&cert, HalvingMode::Paired, 0, 11).is_err());
    }
}
