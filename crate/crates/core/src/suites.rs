//! Named, versioned verification suites. Each one runs a seeded batch of
//! instances and counts property violations.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng as _;
use serde::Serialize;

use crate::bounds::{
    bound_dashboard, check_hypotheses, cycle_quantities, theorem1_bound, theorem2_bound, LogBase, Source, Variant,
};
use crate::detect::{contains_berge, find_clique};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::Pair;
use crate::hypergraph::{all_r_sets, Hypergraph};
use crate::matching::{cel2_partition, maximum_matching, BipartiteIncidence, Cel2Violation};
use crate::redblue::{Color, RedBlueGraph};
use crate::reduction::{
    check_claim, g_r_value, pipeline_certificate, random_halving, retention_statistics, survivor_graph, HalvingMode,
    RetentionCase,
};
use crate::report::{emit_report, Format};
use crate::rng::{rng_from, trial_seed, DEFAULT_SEED};
use crate::search::oracle::{brute_force_contains_berge, brute_force_ex_berge, brute_force_ex_graph, brute_force_generalized_ex};
use crate::search::{exact_ex_berge, exact_ex_graph, exact_generalized_ex, random_maximal_berge_free, SearchConfig};
use crate::symmetrize::{is_monochromatic_complete_multipartite, symmetrize_to_optimum, turan_clique_count, turan_threshold, Dominance};

/// How many violation messages a report keeps.
pub const VIOLATION_SAMPLE: usize = 20;

/// Default n grid of the formula dashboard.
pub const DASHBOARD_NS: [usize; 7] = [10, 30, 100, 300, 1000, 3000, 10000];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SuiteInfo {
    pub name: &'static str,
    pub version: &'static str,
    pub criterion: u8,
    pub summary: &'static str,
    pub default_trials: Option<u64>,
}

pub const SUITES: [SuiteInfo; 10] = [
    SuiteInfo {
        name: "cel2",
        version: "v1",
        criterion: 1,
        summary: "matching partition P1-P4 and |A1| = |B1| on random bipartite graphs",
        default_trials: Some(1000),
    },
    SuiteInfo {
        name: "reduction",
        version: "v1",
        criterion: 2,
        summary: "red-blue reduction audits on random maximal Berge-C5/C7-free 3-graphs, n = 8",
        default_trials: Some(300),
    },
    SuiteInfo {
        name: "claim",
        version: "v1",
        criterion: 3,
        summary: "survivor graph is F0-free over both halving modes, F0 = C4 and C6",
        default_trials: Some(500),
    },
    SuiteInfo {
        name: "retention",
        version: "v1",
        criterion: 4,
        summary: "Monte Carlo retention frequencies per case",
        default_trials: Some(10_000),
    },
    SuiteInfo {
        name: "sandwich",
        version: "v1",
        criterion: 5,
        summary: "ex(n,K3,C5) <= ex_3(n,Berge-C5) <= ex(n,K3,C5) + ex(n,C5) for n = 5, 6, 7",
        default_trials: None,
    },
    SuiteInfo {
        name: "bounds-direction",
        version: "v1",
        criterion: 6,
        summary: "general and cycle bounds are at least the exact Berge values",
        default_trials: None,
    },
    SuiteInfo {
        name: "threshold",
        version: "v1",
        criterion: 7,
        summary: "T(n,4) blue beats T(n,3) red exactly from n = 10 (r = 4, k = 5)",
        default_trials: None,
    },
    SuiteInfo {
        name: "symmetrize",
        version: "v1",
        criterion: 8,
        summary: "exhaustive symmetrization of red-K3-free K5-free red-blue graphs, n <= 5",
        default_trials: None,
    },
    SuiteInfo {
        name: "oracle",
        version: "v1",
        criterion: 9,
        summary: "pruned searches and Berge detection against brute force",
        default_trials: Some(2000),
    },
    SuiteInfo {
        name: "dashboard",
        version: "v1",
        criterion: 10,
        summary: "formula dashboard for k = 2..5 is byte-identical across runs and pool sizes",
        default_trials: None,
    },
];

pub fn suite_info(name: &str) -> Result<&'static SuiteInfo> {
    SUITES.iter().find(|s| s.name == name).ok_or_else(|| {
        Error::InvalidParameter(format!(
            "unknown suite '{name}'; known: {}",
            SUITES.iter().map(|s| s.name).collect::<Vec<_>>().join(", ")
        ))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    /// overrides the suite's default instance count
    pub trials: Option<u64>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: DEFAULT_SEED,
            trials: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub version: String,
    pub seed: u64,
    pub checks: u64,
    pub violation_count: u64,
    /// the first [`VIOLATION_SAMPLE`] violations
    pub violations: Vec<String>,
    pub details: BTreeMap<String, String>,
    pub passed: bool,
}

impl crate::report::Record for SuiteReport {
    fn columns() -> Vec<&'static str> {
        vec!["suite", "version", "seed", "checks", "violations", "passed", "details", "first_violation"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.name.clone(),
            self.version.clone(),
            self.seed.to_string(),
            self.checks.to_string(),
            self.violation_count.to_string(),
            self.passed.to_string(),
            self.details.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join("; "),
            self.violations.first().cloned().unwrap_or_default(),
        ]]
    }
}

struct Tally {
    checks: u64,
    violation_count: u64,
    violations: Vec<String>,
    details: BTreeMap<String, String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            violation_count: 0,
            violations: Vec::new(),
            details: BTreeMap::new(),
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(msg());
        }
    }

    fn fail(&mut self, msg: String) {
        self.violation_count += 1;
        if self.violations.len() < VIOLATION_SAMPLE {
            self.violations.push(msg);
        }
    }

    fn detail(&mut self, key: &str, value: impl ToString) {
        self.details.insert(key.into(), value.to_string());
    }

    fn finish(self, info: &SuiteInfo, seed: u64) -> SuiteReport {
        SuiteReport {
            name: info.name.into(),
            version: info.version.into(),
            seed,
            checks: self.checks,
            passed: self.violation_count == 0,
            violation_count: self.violation_count,
            violations: self.violations,
            details: self.details,
        }
    }
}

/// Maps `f` over `0..count`, in parallel when enabled, keeping index order.
fn par_map<T, F>(count: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..count).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..count).map(f).collect()
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    let info = suite_info(name)?;
    let trials = opts.trials.or(info.default_trials).unwrap_or(0);
    let seed = opts.seed;
    let tally = match info.name {
        "cel2" => cel2_suite(trials, seed)?,
        "reduction" => reduction_suite(trials, seed)?,
        "claim" => claim_suite(trials, seed)?,
        "retention" => retention_suite(trials, seed)?,
        "sandwich" => sandwich_suite()?,
        "bounds-direction" => bounds_direction_suite()?,
        "threshold" => threshold_suite()?,
        "symmetrize" => symmetrize_suite()?,
        "oracle" => oracle_suite(trials, seed)?,
        "dashboard" => dashboard_suite()?,
        _ => unreachable!("registry and dispatch disagree"),
    };
    Ok(tally.finish(info, seed))
}

fn violation_kind(v: &Cel2Violation) -> &'static str {
    match v {
        Cel2Violation::P1 { .. } => "P1",
        Cel2Violation::P2 { .. } => "P2",
        Cel2Violation::P3 { .. } => "P3",
        Cel2Violation::P4 { .. } => "P4",
        Cel2Violation::Shape(_) => "shape",
    }
}

/// A random bipartite graph with 1..=20 vertices per side and a random edge
/// density, with both sides shuffled so the deterministic matcher sees an
/// arbitrary labelling.
fn random_bipartite(seed: u64) -> Result<BipartiteIncidence> {
    let mut rng = rng_from(seed);
    let a_len = rng.random_range(1..=20);
    let b_len = rng.random_range(1..=20);
    let density: f64 = rng.random_range(0.05..0.5);
    let mut a_perm: Vec<usize> = (0..a_len).collect();
    let mut b_perm: Vec<usize> = (0..b_len).collect();
    a_perm.shuffle(&mut rng);
    b_perm.shuffle(&mut rng);
    let mut edges = Vec::new();
    for a in 0..a_len {
        for b in 0..b_len {
            if rng.random_bool(density) {
                edges.push((a_perm[a], b_perm[b]));
            }
        }
    }
    BipartiteIncidence::from_adjacency(a_len, b_len, edges)
}

fn cel2_suite(trials: u64, seed: u64) -> Result<Tally> {
    let outcomes = par_map(trials, |t| -> Result<Vec<Cel2Violation>> {
        let g = random_bipartite(trial_seed(seed, t))?;
        let m = maximum_matching(&g);
        Ok(cel2_partition(&g, &m)?.violations(&g, &m))
    });
    let mut tally = Tally::new();
    let mut by_kind: BTreeMap<&str, u64> = BTreeMap::new();
    for (t, outcome) in outcomes.into_iter().enumerate() {
        let found = outcome?;
        for v in &found {
            *by_kind.entry(violation_kind(v)).or_default() += 1;
        }
        tally.check(found.is_empty(), || format!("instance {t}: {found:?}"));
    }
    for (kind, count) in by_kind {
        tally.detail(&format!("violations_{kind}"), count);
    }
    Ok(tally)
}

fn cycle(m: usize) -> FamilySpec {
    FamilySpec::cycle(m).expect("valid cycle length")
}

/// The first 2/3 of the instances forbid C5, the rest C7 (200 + 100 by default).
fn reduction_suite(trials: u64, seed: u64) -> Result<Tally> {
    let c5_count = trials * 2 / 3;
    let outcomes = par_map(trials, |t| -> Result<(usize, Vec<String>, usize)> {
        let (f, i) = if t < c5_count { (cycle(5), t) } else { (cycle(7), t - c5_count) };
        let h = random_maximal_berge_free(8, 3, &f, trial_seed(seed, i))?;
        let cert = pipeline_certificate(&h, &f, 3)?;
        let p3 = cert.partition.p3_exceptions.len();
        Ok((f.vertex_count(), cert.audit(), p3))
    });
    let mut tally = Tally::new();
    let mut affected = BTreeMap::<usize, u64>::new();
    let mut p3_instances = 0;
    for (t, outcome) in outcomes.into_iter().enumerate() {
        let (len, failures, p3) = outcome?;
        if p3 > 0 {
            p3_instances += 1;
        }
        if !failures.is_empty() {
            *affected.entry(len).or_default() += 1;
        }
        tally.check(failures.is_empty(), || format!("instance {t} (C{len}): {}", failures.join("; ")));
    }
    tally.detail("instances_c5", c5_count);
    tally.detail("instances_c7", trials - c5_count);
    tally.detail("failing_c5", affected.get(&5).copied().unwrap_or(0));
    tally.detail("failing_c7", affected.get(&7).copied().unwrap_or(0));
    tally.detail("instances_with_p3_exceptions", p3_instances);
    Ok(tally)
}

fn claim_suite(trials: u64, seed: u64) -> Result<Tally> {
    let halving_seed = seed.rotate_left(32);
    let outcomes = par_map(trials, |t| -> Result<(String, bool, usize)> {
        let (f, f0) = if t % 2 == 0 { (cycle(5), cycle(4)) } else { (cycle(7), cycle(6)) };
        let mode = if (t / 2) % 2 == 0 {
            HalvingMode::Independent
        } else {
            HalvingMode::Paired
        };
        let h = random_maximal_berge_free(8, 3, &f, trial_seed(seed, t))?;
        let cert = pipeline_certificate(&h, &f, 3)?;
        let halving = survivor_graph(&cert, &random_halving(8, mode, trial_seed(halving_seed, t))?)?;
        let holds = check_claim(&halving, &f0)?;
        Ok((format!("{mode}/{f0}"), holds, halving.survivors.len()))
    });
    let mut tally = Tally::new();
    let mut runs = BTreeMap::<String, u64>::new();
    let mut survivors = 0;
    for (t, outcome) in outcomes.into_iter().enumerate() {
        let (key, holds, kept) = outcome?;
        survivors += kept;
        tally.check(holds, || format!("run {t} ({key}): survivor graph contains the forbidden graph"));
        *runs.entry(key).or_default() += 1;
    }
    for (key, count) in runs {
        tally.detail(&format!("runs_{key}"), count);
    }
    tally.detail("total_survivors", survivors);
    Ok(tally)
}

fn retention_suite(trials: u64, seed: u64) -> Result<Tally> {
    // the instance with the most matched hyperedges among 32 seeded ones
    let f = cycle(5);
    let mut best = None;
    for i in 0..32 {
        let h = random_maximal_berge_free(8, 3, &f, trial_seed(seed, i))?;
        let cert = pipeline_certificate(&h, &f, 3)?;
        if best.as_ref().is_none_or(|b: &crate::reduction::ReductionCertificate| cert.m.size() > b.m.size()) {
            best = Some(cert);
        }
    }
    let cert = best.expect("32 instances");
    let mut tally = Tally::new();
    tally.detail("matched_hyperedges", cert.m.size());

    let independent = retention_statistics(&cert, HalvingMode::Independent, trials, seed)?;
    let mut lowest = 1.0f64;
    for e in &independent.per_hyperedge {
        lowest = lowest.min(e.frequency);
        tally.check(e.frequency >= 0.25 - 0.02, || {
            format!("independent: hyperedge {:?} kept with frequency {}", e.hyperedge, e.frequency)
        });
    }
    tally.detail("independent_min_frequency", lowest);

    let paired = retention_statistics(&cert, HalvingMode::Paired, trials, seed)?;
    for c in &paired.cases {
        tally.detail(&format!("paired_{}", c.case.name()), format!("{}/{}", c.retained, c.occurrences));
        let ok = match c.case {
            RetentionCase::DistinctPairs => c.occurrences > 0 && (c.frequency - 0.25).abs() <= 0.02,
            RetentionCase::OtherPairIsBlock => c.occurrences > 0 && (c.frequency - 0.5).abs() <= 0.02,
            RetentionCase::MatchedPairIsBlock => c.retained == 0,
            RetentionCase::Independent => true,
        };
        tally.check(ok, || {
            format!(
                "paired {}: {} of {} kept ({})",
                c.case.name(),
                c.retained,
                c.occurrences,
                c.frequency
            )
        });
    }
    Ok(tally)
}

fn sandwich_suite() -> Result<Tally> {
    let cfg = SearchConfig::default();
    let f = cycle(5);
    let mut tally = Tally::new();
    for n in 5..=7 {
        let triangles = exact_generalized_ex(n, 3, &f, &cfg)?.value;
        let berge = exact_ex_berge(n, 3, &f, false, &cfg)?.value;
        let edges = exact_ex_graph(n, &f, &cfg)?.value;
        tally.detail(&format!("n{n}"), format!("{triangles} <= {berge} <= {triangles} + {edges}"));
        tally.check(triangles <= berge, || format!("n = {n}: ex(n,K3,C5) = {triangles} > {berge}"));
        tally.check(berge <= triangles + edges, || {
            format!("n = {n}: {berge} > ex(n,K3,C5) + ex(n,C5) = {}", triangles + edges)
        });
    }
    Ok(tally)
}

fn bounds_direction_suite() -> Result<Tally> {
    let cfg = SearchConfig::default();
    let mut tally = Tally::new();
    for (n, k) in [(6, 2), (7, 2), (8, 2), (7, 3)] {
        let f0 = cycle(2 * k).graph();
        let f = cycle(2 * k + 1).graph();
        let f_prime = FamilySpec::path(2 * k)?.graph();
        let hyp = check_hypotheses(&f0, &f, &f_prime)?;
        tally.check(hyp.holds, || format!("k = {k}: hypotheses fail"));
        let exact = exact_ex_berge(n, 3, &cycle(2 * k + 1), false, &cfg)?.value;
        let q = cycle_quantities(n, k, Source::Exact, LogBase::Natural, &cfg)?;
        let reports = [
            theorem1_bound(Variant::I, n, 3, &hyp, &q)?,
            theorem1_bound(Variant::Ii, n, 3, &hyp, &q)?,
            theorem2_bound(n, k, Source::Exact, LogBase::Natural, &cfg)?,
        ];
        let mut shown = vec![format!("exact={exact}")];
        for b in &reports {
            // exact integer on one side, unrounded bound on the other
            tally.check(b.value >= exact as f64, || {
                format!("n = {n}, k = {k}: {} = {} < exact {exact}", b.name, b.value)
            });
            shown.push(format!("{}={}", b.name, b.value));
        }
        tally.detail(&format!("n{n}_k{k}"), shown.join(" "));
    }
    Ok(tally)
}

fn threshold_suite() -> Result<Tally> {
    let mut tally = Tally::new();
    let mut first_blue = None;
    for n in 5..=64 {
        let t = turan_threshold(4, 5, n)?;
        let want = if n <= 9 { Dominance::Red } else { Dominance::Blue };
        if t.dominant == Dominance::Blue && first_blue.is_none() {
            first_blue = Some(n);
        }
        tally.check(t.dominant == want, || {
            format!(
                "n = {n}: blue K4s {} vs red edges {} gives {:?}",
                t.blue_cliques, t.red_edges, t.dominant
            )
        });
    }
    tally.detail("n_range", "5..=64");
    tally.detail("first_blue_n", first_blue.map_or("none".into(), |n| n.to_string()));
    Ok(tally)
}

/// Every red-blue colouring of a subgraph of K_n (three states per pair).
fn colouring(n: usize, pairs: &[Pair], mut code: u64) -> RedBlueGraph {
    let mut g = RedBlueGraph::empty(n);
    for p in pairs {
        let color = match code % 3 {
            0 => None,
            1 => Some(Color::Red),
            _ => Some(Color::Blue),
        };
        g.set(p.lo, p.hi, color);
        code /= 3;
    }
    g
}

fn symmetrize_suite() -> Result<Tally> {
    let (r, k) = (3, 5);
    let mut tally = Tally::new();
    let mut kinds = BTreeMap::<&str, u64>::new();
    for n in 1..=5usize {
        let pairs: Vec<Pair> = (0..n).flat_map(|u| (u + 1..n).map(move |v| Pair::new(u, v))).collect();
        let total = 3u64.pow(pairs.len() as u32);
        let cap = turan_clique_count(n, k - 1, r).max(turan_clique_count(n, r - 1, 2)) as u64;
        let outcomes = par_map(total, |code| -> Option<std::result::Result<(), (&'static str, String)>> {
            let g = colouring(n, &pairs, code);
            if find_clique(g.red(), r).is_some() || find_clique(&g.graph(), k).is_some() {
                return None;
            }
            let run = || -> std::result::Result<(), (&'static str, String)> {
                let (end, trace) = symmetrize_to_optimum(&g, k, r).map_err(|e| ("error", e.to_string()))?;
                let mut last = trace.initial_g_r;
                for &value in &trace.g_r_values {
                    if value < last {
                        return Err(("decreasing", format!("g_r fell from {last} to {value}")));
                    }
                    last = value;
                }
                if last != g_r_value(&end, r) {
                    return Err(("trace", format!("trace ends at {last}, final graph has {}", g_r_value(&end, r))));
                }
                if last > cap {
                    return Err(("over_cap", format!("final g_r {last} exceeds {cap}")));
                }
                if !trace.reached_multipartite || !is_monochromatic_complete_multipartite(&end) {
                    return Err((
                        "not_multipartite",
                        format!("stopped at g_r = {last} without reaching a monochromatic complete multipartite graph"),
                    ));
                }
                Ok(())
            };
            Some(run())
        });
        let mut graphs = 0;
        for (code, outcome) in outcomes.into_iter().enumerate() {
            if let Some(result) = outcome {
                graphs += 1;
                if let Err((kind, _)) = &result {
                    *kinds.entry(*kind).or_default() += 1;
                }
                tally.check(result.is_ok(), || format!("n = {n}, colouring {code}: {}", result.unwrap_err().1));
            }
        }
        tally.detail(&format!("n{n}_graphs"), graphs);
        tally.detail(&format!("n{n}_cap"), cap);
    }
    for (kind, count) in kinds {
        tally.detail(&format!("failures_{kind}"), count);
    }
    Ok(tally)
}

fn oracle_suite(trials: u64, seed: u64) -> Result<Tally> {
    let cfg = SearchConfig::default();
    let families: Vec<FamilySpec> = ["K3", "C4", "C5", "P4"].iter().map(|f| f.parse()).collect::<Result<_>>()?;
    let mut tally = Tally::new();
    for f in &families {
        for n in 1..=5 {
            let pruned = exact_ex_graph(n, f, &cfg)?.value;
            let plain = brute_force_ex_graph(n, f)?;
            tally.check(pruned == plain, || format!("ex({n},{f}): search {pruned}, enumeration {plain}"));
        }
        for n in 3..=5 {
            let pruned = exact_generalized_ex(n, 3, f, &cfg)?.value;
            let plain = brute_force_generalized_ex(n, 3, f)?;
            tally.check(pruned == plain, || format!("ex({n},K3,{f}): search {pruned}, enumeration {plain}"));
            for linear in [false, true] {
                let pruned = exact_ex_berge(n, 3, f, linear, &cfg)?.value;
                let plain = brute_force_ex_berge(n, 3, f, linear)?;
                tally.check(pruned == plain, || {
                    format!("ex_3({n},Berge-{f}, linear = {linear}): search {pruned}, enumeration {plain}")
                });
            }
        }
    }
    let search_checks = tally.checks;
    let detection: Vec<FamilySpec> = ["K3", "C3", "C4", "C5", "P3", "P4", "P5", "K4"]
        .iter()
        .map(|f| f.parse())
        .collect::<Result<_>>()?;
    let outcomes = par_map(trials, |t| -> Result<Vec<String>> {
        let mut rng = rng_from(trial_seed(seed, t));
        let n = rng.random_range(3..=6);
        let mut sets = all_r_sets(n, 3);
        sets.shuffle(&mut rng);
        let m = rng.random_range(0..=5.min(sets.len()));
        let h = Hypergraph::from_masks_unchecked(3, n, sets[..m].to_vec());
        Ok(detection
            .iter()
            .filter(|f| contains_berge(&h, f).is_some() != brute_force_contains_berge(&h, f))
            .map(|f| format!("instance {t}: Berge-{f} detection disagrees on {h:?}"))
            .collect())
    });
    for outcome in outcomes {
        let wrong = outcome?;
        tally.checks += detection.len() as u64;
        for w in wrong {
            tally.fail(w);
        }
    }
    tally.detail("search_comparisons", search_checks);
    tally.detail("detection_comparisons", tally.checks - search_checks);
    Ok(tally)
}

/// The formula dashboard for k = 2..5 as CSV and JSON.
pub fn formula_dashboard_bytes(ns: &[usize]) -> Result<(String, String)> {
    let cfg = SearchConfig::default();
    let mut rows = Vec::new();
    for k in 2..=5 {
        rows.extend(bound_dashboard(ns, k, Source::Formula, LogBase::Natural, &cfg)?);
    }
    Ok((emit_report(None, &rows, Format::Csv)?, emit_report(None, &rows, Format::Json)?))
}

fn dashboard_suite() -> Result<Tally> {
    let mut tally = Tally::new();
    let first = formula_dashboard_bytes(&DASHBOARD_NS)?;
    let second = formula_dashboard_bytes(&DASHBOARD_NS)?;
    tally.check(first == second, || "two runs differ".into());
    #[cfg(feature = "parallel")]
    for threads in [1, 8] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        let out = pool.install(|| formula_dashboard_bytes(&DASHBOARD_NS))?;
        tally.check(out == first, || format!("{threads}-thread output differs"));
    }
    tally.detail("csv_bytes", first.0.len());
    tally.detail("json_bytes", first.1.len());
    Ok(tally)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(trials: u64) -> SuiteOptions {
        SuiteOptions {
            seed: 7,
            trials: Some(trials),
        }
    }

    #[test]
    fn registry_is_consistent() {
        for (i, s) in SUITES.iter().enumerate() {
            assert_eq!(s.criterion as usize, i + 1);
            assert_eq!(suite_info(s.name).unwrap(), s);
        }
        assert!(run_suite("nope", &SuiteOptions::default()).is_err());
    }

    #[test]
    fn small_runs_are_reproducible() {
        for name in ["cel2", "claim", "oracle"] {
            let a = run_suite(name, &opts(20)).unwrap();
            let b = run_suite(name, &opts(20)).unwrap();
            assert_eq!(a, b);
            assert!(a.checks >= 20);
        }
    }

    #[test]
    fn threshold_suite_passes() {
        let r = run_suite("threshold", &SuiteOptions::default()).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.details["first_blue_n"], "10");
    }

    #[test]
    fn colourings_cover_all_states() {
        let pairs = [Pair::new(0, 1), Pair::new(1, 2)];
        let g = colouring(3, &pairs, 1 + 3 * 2);
        assert_eq!(g.color(0, 1), Some(Color::Red));
        assert_eq!(g.color(1, 2), Some(Color::Blue));
        assert_eq!(colouring(3, &pairs, 0).edge_count(), 0);
    }
}
