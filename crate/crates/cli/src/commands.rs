use std::path::Path;

use anyhow::{bail, Context as _};
use berge_core::bounds::{bound_dashboard, cited_bound, CitedParams, Source};
use berge_core::detect::{contains_berge, contains_subgraph};
use berge_core::format::{emit_redblue, parse, parse_hypergraph, parse_redblue, TextObject};
use berge_core::matching::{build_incidence, cel2_partition, maximum_matching};
use berge_core::reduction::{check_claim, pipeline_certificate, random_halving, retention_statistics, survivor_graph};
use berge_core::report::{emit_report, ConfigEcho, Record};
use berge_core::search::{
    exact_ex_berge, exact_ex_graph, exact_generalized_ex, random_maximal_berge_free, SearchConfig, SearchResult,
};
use berge_core::suites::{run_suite, SuiteOptions, DASHBOARD_NS, SUITES};
use berge_core::symmetrize::{symmetrize_to_optimum, turan_threshold};
use berge_core::{FamilySpec, Hypergraph};
use serde::Serialize;

use crate::args::*;

/// What a command produced: the rendered report and whether a checked
/// property failed.
pub struct Outcome {
    pub report: String,
    pub violated: bool,
    /// search nodes explored, for `--timing`
    pub nodes: u64,
}

pub struct Context<'a> {
    pub global: &'a Global,
    pub echo: ConfigEcho,
}

impl Context<'_> {
    fn emit<T: Record>(&self, records: &[T], violated: bool) -> anyhow::Result<Outcome> {
        Ok(Outcome {
            report: emit_report(Some(&self.echo), records, self.global.format)?,
            violated,
            nodes: 0,
        })
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn cells(values: &[&dyn ToString]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

#[derive(Serialize)]
struct DetectRecord {
    family: String,
    kind: &'static str,
    contains: bool,
    /// pattern vertex images, then (for Berge copies) edge:hyperedge pairs
    witness: Option<String>,
}

impl Record for DetectRecord {
    fn columns() -> Vec<&'static str> {
        vec!["family", "kind", "contains", "witness"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![cells(&[
            &self.family,
            &self.kind,
            &self.contains,
            &self.witness.clone().unwrap_or_default(),
        ])]
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn detect(ctx: &Context, a: &DetectArgs) -> anyhow::Result<Outcome> {
    let record = match parse(&read(&a.input)?)? {
        TextObject::Hypergraph(h) => {
            let w = contains_berge(&h, &a.family);
            DetectRecord {
                family: a.family.to_string(),
                kind: "berge",
                contains: w.is_some(),
                witness: w.map(|w| {
                    format!(
                        "core {}; {}",
                        join(&w.core_map, ","),
                        join(w.assignment.iter().map(|(p, id)| format!("{p}:{}", join(h.vertices(*id), ","))), " ")
                    )
                }),
            }
        }
        TextObject::Graph(g) => {
            let w = contains_subgraph(&g, &a.family);
            DetectRecord {
                family: a.family.to_string(),
                kind: "subgraph",
                contains: w.is_some(),
                witness: w.map(|w| join(w, ",")),
            }
        }
        _ => bail!(berge_core::Error::InvalidParameter(
            "detect expects a graph or hypergraph file".into()
        )),
    };
    let violated = a.expect_free && record.contains;
    ctx.emit(&[record], violated)
}

#[derive(Serialize)]
struct HalvingRecord {
    mode: String,
    f0: String,
    v1: Vec<usize>,
    survivors: usize,
    survivor_edges: usize,
    claim_holds: bool,
}

#[derive(Serialize)]
struct ReduceRecord {
    n: usize,
    r: usize,
    family: String,
    counts: berge_core::reduction::ReductionCounts,
    p3_exceptions: usize,
    audit_failures: Vec<String>,
    red_blue_graph: String,
    halving: Option<HalvingRecord>,
}

impl Record for ReduceRecord {
    fn columns() -> Vec<&'static str> {
        vec![
            "n",
            "family",
            "h",
            "h1",
            "h2",
            "a1",
            "a2",
            "b1",
            "b2",
            "red_edges",
            "blue_cliques",
            "g_r",
            "p3_exceptions",
            "audit_failures",
            "claim_holds",
        ]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let c = &self.counts;
        vec![cells(&[
            &self.n,
            &self.family,
            &c.h,
            &c.h1,
            &c.h2,
            &c.a1,
            &c.a2,
            &c.b1,
            &c.b2,
            &c.red_edges,
            &c.blue_cliques,
            &c.g_r,
            &self.p3_exceptions,
            &self.audit_failures.join("; "),
            &self.halving.as_ref().map_or(String::new(), |h| h.claim_holds.to_string()),
        ])]
    }
}

fn instance(input: Option<&Path>, n: usize, r: usize, f: &FamilySpec, seed: u64) -> anyhow::Result<Hypergraph> {
    Ok(match input {
        Some(path) => parse_hypergraph(&read(path)?)?,
        None => random_maximal_berge_free(n, r, f, seed)?,
    })
}

/// The graph with one edge of the cycle contracted.
fn contracted(f: &FamilySpec) -> anyhow::Result<FamilySpec> {
    match f {
        FamilySpec::Cycle(m) if *m >= 4 => Ok(FamilySpec::cycle(m - 1)?),
        other => bail!(berge_core::Error::InvalidParameter(format!(
            "no default --f0 for {other}; pass it explicitly"
        ))),
    }
}

pub fn reduce(ctx: &Context, a: &ReduceArgs) -> anyhow::Result<Outcome> {
    let seed = ctx.global.seed;
    let h = instance(a.input.as_deref(), a.n, a.r, &a.family, seed)?;
    let cert = pipeline_certificate(&h, &a.family, a.r)?;
    let audit_failures = cert.audit();
    let halving = match a.halving {
        None => None,
        Some(mode) => {
            let f0 = match &a.f0 {
                Some(f0) => f0.clone(),
                None => contracted(&a.family)?,
            };
            let out = survivor_graph(&cert, &random_halving(h.n(), mode, seed)?)?;
            Some(HalvingRecord {
                mode: mode.to_string(),
                f0: f0.to_string(),
                v1: berge_core::graph::bits(out.v1).collect(),
                survivors: out.survivors.len(),
                survivor_edges: out.g_prime.as_ref().map_or(0, |g| g.edge_count()),
                claim_holds: check_claim(&out, &f0)?,
            })
        }
    };
    let violated = !audit_failures.is_empty() || halving.as_ref().is_some_and(|h| !h.claim_holds);
    let record = ReduceRecord {
        n: h.n(),
        r: a.r,
        family: a.family.to_string(),
        counts: cert.counts,
        p3_exceptions: cert.partition.p3_exceptions.len(),
        audit_failures,
        red_blue_graph: emit_redblue(&cert.rbg),
        halving,
    };
    ctx.emit(&[record], violated)
}

#[derive(Serialize)]
struct PartitionRecord {
    a_len: usize,
    b_len: usize,
    matching: Vec<(usize, usize)>,
    a1: Vec<usize>,
    a2: Vec<usize>,
    b1: Vec<usize>,
    b2: Vec<usize>,
    b_prime: Vec<usize>,
    violations: Vec<String>,
}

impl Record for PartitionRecord {
    fn columns() -> Vec<&'static str> {
        vec!["a_len", "b_len", "matching_size", "a1", "a2", "b1", "b2", "violations"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![cells(&[
            &self.a_len,
            &self.b_len,
            &self.matching.len(),
            &join(&self.a1, " "),
            &join(&self.a2, " "),
            &join(&self.b1, " "),
            &join(&self.b2, " "),
            &self.violations.join("; "),
        ])]
    }
}

pub fn partition(ctx: &Context, a: &PartitionArgs) -> anyhow::Result<Outcome> {
    let g = match parse(&read(&a.input)?)? {
        TextObject::Bipartite(g) => g,
        TextObject::Hypergraph(h) => build_incidence(&h),
        _ => bail!(berge_core::Error::InvalidParameter(
            "partition expects a bipartite or hypergraph file".into()
        )),
    };
    let m = maximum_matching(&g);
    let p = cel2_partition(&g, &m)?;
    let violations: Vec<String> = p.violations(&g, &m).iter().map(|v| format!("{v:?}")).collect();
    let record = PartitionRecord {
        a_len: g.a_len(),
        b_len: g.b_len(),
        matching: m.pairs(),
        a1: p.a1,
        a2: p.a2,
        b1: p.b1,
        b2: p.b2,
        b_prime: p.b_prime,
        violations,
    };
    let violated = !record.violations.is_empty();
    ctx.emit(&[record], violated)
}

#[derive(Serialize)]
struct SearchRecord {
    what: What,
    n: usize,
    r: usize,
    family: String,
    value: u64,
    exhaustive: bool,
    witnesses: Vec<String>,
}

impl Record for SearchRecord {
    fn columns() -> Vec<&'static str> {
        vec!["what", "n", "r", "family", "value", "exhaustive", "witnesses"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let what = serde_json::to_value(self.what).ok().and_then(|v| v.as_str().map(String::from));
        vec![cells(&[
            &what.unwrap_or_default(),
            &self.n,
            &self.r,
            &self.family,
            &self.value,
            &self.exhaustive,
            &self.witnesses.join("\n"),
        ])]
    }
}

pub fn search(ctx: &Context, a: &SearchArgs) -> anyhow::Result<Outcome> {
    let cfg = SearchConfig {
        witness_limit: a.witnesses,
        node_limit: a.node_limit,
        seed: ctx.global.seed,
        ..SearchConfig::default()
    };
    let mut records = Vec::new();
    let mut nodes = 0;
    for &n in &a.n.0 {
        let res: SearchResult = match a.what {
            What::Graph => exact_ex_graph(n, &a.family, &cfg)?,
            What::Generalized => exact_generalized_ex(n, a.r, &a.family, &cfg)?,
            What::Berge => exact_ex_berge(n, a.r, &a.family, false, &cfg)?,
            What::Linear => exact_ex_berge(n, a.r, &a.family, true, &cfg)?,
        };
        nodes += res.nodes_explored;
        records.push(SearchRecord {
            what: a.what,
            n,
            r: a.r,
            family: a.family.to_string(),
            value: res.value,
            exhaustive: res.exhaustive,
            witnesses: res.witnesses.iter().map(|w| w.to_text()).collect(),
        });
    }
    let mut out = ctx.emit(&records, false)?;
    out.nodes = nodes;
    Ok(out)
}

pub fn bounds(ctx: &Context, a: &BoundsArgs) -> anyhow::Result<Outcome> {
    let ns = match (&a.n, a.source) {
        (Some(ns), _) => ns.0.clone(),
        (None, Source::Formula) => DASHBOARD_NS.to_vec(),
        (None, Source::Exact) => vec![6, 7, 8],
    };
    if let Some(name) = &a.cited {
        let mut reports = Vec::new();
        for &k in &a.k.0 {
            for &n in &ns {
                let p = CitedParams {
                    n,
                    k,
                    r: a.r,
                    log_base: a.log_base,
                };
                reports.push(cited_bound(name, &p)?);
            }
        }
        return ctx.emit(&reports, false);
    }
    let cfg = SearchConfig {
        seed: ctx.global.seed,
        ..SearchConfig::default()
    };
    let mut rows = Vec::new();
    for &k in &a.k.0 {
        rows.extend(bound_dashboard(&ns, k, a.source, a.log_base, &cfg)?);
    }
    // an upper bound below an exact value is a violated inequality
    let violated = rows
        .iter()
        .any(|row| row.exact.is_some_and(|e| row.bounds.iter().any(|b| b.value < e as f64)));
    ctx.emit(&rows, violated)
}

pub fn symmetrize(ctx: &Context, a: &SymmetrizeArgs) -> anyhow::Result<Outcome> {
    if a.threshold {
        let reports = a
            .n
            .0
            .iter()
            .map(|&n| turan_threshold(a.r, a.k, n))
            .collect::<berge_core::Result<Vec<_>>>()?;
        return ctx.emit(&reports, false);
    }
    let path = a.input.as_deref().expect("clap requires input without --threshold");
    let g = parse_redblue(&read(path)?)?;
    let (_, trace) = symmetrize_to_optimum(&g, a.k, a.r)?;
    ctx.emit(&[trace], false)
}

pub fn retention(ctx: &Context, a: &RetentionArgs) -> anyhow::Result<Outcome> {
    let seed = ctx.global.seed;
    let mut h = instance(a.input.as_deref(), a.n, 3, &a.family, seed)?;
    if a.mode == berge_core::reduction::HalvingMode::Paired && h.n() % 2 == 1 {
        // an isolated vertex makes the pairing perfect without touching any hyperedge
        h = h.with_vertex_count(h.n() + 1)?;
    }
    let cert = pipeline_certificate(&h, &a.family, 3)?;
    let stats = retention_statistics(&cert, a.mode, a.trials, seed)?;
    ctx.emit(&[stats], false)
}

pub fn verify(ctx: &Context, a: &VerifyArgs) -> anyhow::Result<Outcome> {
    let names: Vec<&str> = if a.suite == "all" {
        SUITES.iter().map(|s| s.name).collect()
    } else {
        vec![a.suite.as_str()]
    };
    let opts = SuiteOptions {
        seed: ctx.global.seed,
        trials: a.trials,
    };
    let reports = names
        .iter()
        .map(|name| run_suite(name, &opts))
        .collect::<berge_core::Result<Vec<_>>>()?;
    let violated = reports.iter().any(|r| !r.passed);
    ctx.emit(&reports, violated)
}
