use std::path::PathBuf;

use berge_core::bounds::{LogBase, Source};
use berge_core::reduction::HalvingMode;
use berge_core::report::Format;
use berge_core::rng::DEFAULT_SEED;
use berge_core::FamilySpec;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "berge", version, about = "Berge-free hypergraphs: detection, reduction, exact search and bounds")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// RNG seed for every randomized step
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads (overrides BERGE_THREADS)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_parser = parse_format, default_value = "json")]
    pub format: Format,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print wall time and search node counts on stderr
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test a graph or hypergraph file for a (Berge) copy of a pattern
    Detect(DetectArgs),
    /// Run the red-blue reduction on a Berge-F-free 3-graph
    Reduce(ReduceArgs),
    /// Split a bipartite graph by a maximum matching
    Partition(PartitionArgs),
    /// Exact extremal numbers by exhaustive search
    Search(SearchArgs),
    /// Bound evaluators and the comparison dashboard
    Bounds(BoundsArgs),
    /// Symmetrize a red-blue graph, or compare the two Turán candidates
    Symmetrize(SymmetrizeArgs),
    /// Monte Carlo retention of matched hyperedges under random halving
    Retention(RetentionArgs),
    /// Run a named verification suite
    Verify(VerifyArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Detect(_) => "detect",
            Command::Reduce(_) => "reduce",
            Command::Partition(_) => "partition",
            Command::Search(_) => "search",
            Command::Bounds(_) => "bounds",
            Command::Symmetrize(_) => "symmetrize",
            Command::Retention(_) => "retention",
            Command::Verify(_) => "verify",
        }
    }
}

#[derive(Debug, Args, Serialize)]
pub struct DetectArgs {
    /// Graph or hypergraph file
    pub input: PathBuf,
    /// Pattern, e.g. C5, P4, K3
    #[arg(long, value_parser = parse_family)]
    #[serde(serialize_with = "as_display")]
    pub family: FamilySpec,
    /// Exit with status 1 if a copy is found
    #[arg(long)]
    pub expect_free: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct ReduceArgs {
    /// 3-graph file; without it a random maximal Berge-F-free 3-graph is drawn
    pub input: Option<PathBuf>,
    #[arg(long, value_parser = parse_family, default_value = "C5")]
    #[serde(serialize_with = "as_display")]
    pub family: FamilySpec,
    /// Vertex count of the random instance
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    /// Also halve the vertex set and check the survivor graph
    #[arg(long, value_parser = parse_mode)]
    #[serde(serialize_with = "as_display_opt")]
    pub halving: Option<HalvingMode>,
    /// Graph the survivor graph must avoid (default: the family with one edge contracted)
    #[arg(long, value_parser = parse_family)]
    #[serde(serialize_with = "as_display_opt")]
    pub f0: Option<FamilySpec>,
}

#[derive(Debug, Args, Serialize)]
pub struct PartitionArgs {
    /// File in the bipartite or hypergraph text format
    pub input: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum What {
    /// ex(n, F)
    Graph,
    /// ex(n, K_r, F)
    Generalized,
    /// ex_r(n, Berge-F)
    Berge,
    /// ex_r^lin(n, Berge-F)
    Linear,
}

#[derive(Debug, Args, Serialize)]
pub struct SearchArgs {
    #[arg(long, value_enum)]
    pub what: What,
    /// Vertex counts: 8, 6..8 or 5,7
    #[arg(long, value_parser = parse_list)]
    pub n: NumList,
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    #[arg(long, value_parser = parse_family)]
    #[serde(serialize_with = "as_display")]
    pub family: FamilySpec,
    /// Number of extremal witnesses to report
    #[arg(long, default_value_t = 1)]
    pub witnesses: usize,
    /// Stop after this many search nodes (the value is then a lower bound)
    #[arg(long)]
    pub node_limit: Option<u64>,
}

#[derive(Debug, Args, Serialize)]
pub struct BoundsArgs {
    /// Cycle parameter(s) k of C_{2k+1}
    #[arg(long, value_parser = parse_list, default_value = "2")]
    pub k: NumList,
    /// Vertex counts; defaults to 10..10000 (formula) or 6..8 (exact)
    #[arg(long, value_parser = parse_list)]
    pub n: Option<NumList>,
    #[arg(long, value_parser = parse_source, default_value = "formula")]
    #[serde(serialize_with = "as_display")]
    pub source: Source,
    #[arg(long, value_parser = parse_log_base, default_value = "e")]
    #[serde(serialize_with = "as_debug")]
    pub log_base: LogBase,
    /// Evaluate one cited bound instead of the dashboard
    #[arg(long)]
    pub cited: Option<String>,
    /// Uniformity passed to cited bounds that use it
    #[arg(long, default_value_t = 3)]
    pub r: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct SymmetrizeArgs {
    /// Red-blue graph file
    #[arg(required_unless_present = "threshold")]
    pub input: Option<PathBuf>,
    /// Forbidden clique size
    #[arg(long, default_value_t = 5)]
    pub k: usize,
    /// Clique size counted in the blue graph
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    /// Compare blue T(n,k-1) with red T(n,r-1) instead
    #[arg(long)]
    pub threshold: bool,
    /// Vertex counts for --threshold
    #[arg(long, value_parser = parse_list, default_value = "5..20")]
    pub n: NumList,
}

#[derive(Debug, Args, Serialize)]
pub struct RetentionArgs {
    /// 3-graph file; without it a random maximal Berge-F-free 3-graph is drawn
    pub input: Option<PathBuf>,
    #[arg(long, value_parser = parse_family, default_value = "C5")]
    #[serde(serialize_with = "as_display")]
    pub family: FamilySpec,
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    #[arg(long, value_parser = parse_mode, default_value = "paired")]
    #[serde(serialize_with = "as_display")]
    pub mode: HalvingMode,
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    /// Suite name, or `all`
    #[arg(long)]
    pub suite: String,
    /// Instance count (suite default if absent)
    #[arg(long)]
    pub trials: Option<u64>,
}

/// Inclusive list of numbers such as `8`, `6..8` or `10,100,1000`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumList(pub Vec<usize>);

impl Serialize for NumList {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
    }
}

pub fn parse_list(text: &str) -> Result<NumList, String> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim) {
        let num = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("'{s}' is not a non-negative integer"));
        match part.split_once("..") {
            Some((lo, hi)) => {
                let hi = hi.strip_prefix('=').unwrap_or(hi);
                let (lo, hi) = (num(lo)?, num(hi)?);
                if lo > hi {
                    return Err(format!("empty range {part}"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(num(part)?),
        }
    }
    Ok(NumList(out))
}

fn parse_family(s: &str) -> Result<FamilySpec, String> {
    s.parse().map_err(|e: berge_core::Error| e.to_string())
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: berge_core::Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<HalvingMode, String> {
    s.parse().map_err(|e: berge_core::Error| e.to_string())
}

fn parse_source(s: &str) -> Result<Source, String> {
    s.parse().map_err(|e: berge_core::Error| e.to_string())
}

fn parse_log_base(s: &str) -> Result<LogBase, String> {
    s.parse().map_err(|e: berge_core::Error| e.to_string())
}

fn as_display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn as_display_opt<T: std::fmt::Display, S: serde::Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

fn as_debug<T: std::fmt::Debug, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(&format_args!("{v:?}").to_string().to_lowercase())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists() {
        assert_eq!(parse_list("8").unwrap().0, vec![8]);
        assert_eq!(parse_list("6..8").unwrap().0, vec![6, 7, 8]);
        assert_eq!(parse_list("2..=3,10").unwrap().0, vec![2, 3, 10]);
        assert_eq!(parse_list("10,100").unwrap().0, vec![10, 100]);
        assert!(parse_list("8..6").is_err());
        assert!(parse_list("x").is_err());
    }
}
