//! Browser front end for a few `berge-core` operations.
//!
//! Every export takes plain numbers and returns a JSON string, so the page
//! only needs `JSON.parse`. The same functions are called natively by the
//! tests.

use berge_core::bounds::{bound_dashboard, cited_bound, CitedParams, LogBase, Source};
use berge_core::reduction::{pipeline_certificate, retention_statistics, HalvingMode, RetentionStats};
use berge_core::search::{random_maximal_berge_free, SearchConfig};
use berge_core::symmetrize::{turan_threshold, ThresholdReport};
use berge_core::FamilySpec;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest number of points on one bound curve.
pub const MAX_POINTS: u32 = 400;
/// Largest n range for one threshold table.
pub const MAX_THRESHOLD_ROWS: u32 = 5_000;
/// Largest trial count for one retention run.
pub const MAX_TRIALS: u32 = 200_000;

#[derive(Debug, Serialize)]
struct Series {
    name: String,
    values: Vec<f64>,
}

#[derive(Debug, Serialize)]
struct Curves {
    k: usize,
    log_base: &'static str,
    ns: Vec<usize>,
    series: Vec<Series>,
}

#[derive(Debug, Serialize)]
struct Retention {
    cycle: String,
    n: usize,
    hyperedges: usize,
    stats: RetentionStats,
}

type DemoResult<T> = Result<T, String>;

fn core<T>(r: berge_core::Result<T>) -> DemoResult<T> {
    r.map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(v: &T) -> DemoResult<String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

/// `points` vertex counts spaced evenly in log n between 10 and `n_max`,
/// rounded and deduplicated.
pub fn log_spaced(n_max: usize, points: u32) -> DemoResult<Vec<usize>> {
    if n_max < 10 {
        return Err(format!("n_max must be at least 10, got {n_max}"));
    }
    if !(2..=MAX_POINTS).contains(&points) {
        return Err(format!("points must be between 2 and {MAX_POINTS}, got {points}"));
    }
    let (lo, hi) = (10f64.ln(), (n_max as f64).ln());
    let step = (hi - lo) / f64::from(points - 1);
    let mut ns: Vec<usize> = (0..points)
        .map(|i| (lo + step * f64::from(i)).exp().round() as usize)
        .collect();
    ns.dedup();
    if let Some(last) = ns.last_mut() {
        *last = n_max;
    }
    Ok(ns)
}

/// Upper bounds on ex_3(n, Berge-C_{2k+1}) from the closed forms, one
/// series per bound.
pub fn bound_curves_json(k: usize, n_max: usize, points: u32, log_two: bool) -> DemoResult<String> {
    let ns = log_spaced(n_max, points)?;
    let log_base = if log_two { LogBase::Two } else { LogBase::Natural };
    let rows = core(bound_dashboard(&ns, k, Source::Formula, log_base, &SearchConfig::default()))?;
    let mut series: Vec<Series> = rows[0]
        .bounds
        .iter()
        .enumerate()
        .map(|(i, b)| Series {
            name: b.name.clone(),
            values: rows.iter().map(|row| row.bounds[i].value).collect(),
        })
        .collect();
    if k == 2 {
        for name in ["bollobas_gyori", "ergemlidze_methuku"] {
            let values = ns
                .iter()
                .map(|&n| core(cited_bound(name, &CitedParams { n, k, r: 3, log_base })).map(|b| b.value))
                .collect::<DemoResult<_>>()?;
            series.push(Series { name: name.into(), values });
        }
    }
    to_json(&Curves {
        k,
        log_base: if log_two { "2" } else { "e" },
        ns,
        series,
    })
}

/// All-blue T(n, k−1) against all-red T(n, r−1) for each n in the range.
pub fn threshold_json(r: usize, k: usize, n_min: usize, n_max: usize) -> DemoResult<String> {
    if n_min > n_max {
        return Err(format!("empty range {n_min}..{n_max}"));
    }
    if n_max - n_min >= MAX_THRESHOLD_ROWS as usize {
        return Err(format!("at most {MAX_THRESHOLD_ROWS} rows per table"));
    }
    let rows: Vec<ThresholdReport> = (n_min..=n_max)
        .map(|n| core(turan_threshold(r, k, n)))
        .collect::<DemoResult<_>>()?;
    to_json(&rows)
}

/// Retention frequencies of the matched hyperedges of a random maximal
/// Berge-C_{2k+1}-free 3-graph under repeated halving.
pub fn retention_json(k: usize, n: usize, paired: bool, trials: u32, seed: u64) -> DemoResult<String> {
    if trials == 0 || trials > MAX_TRIALS {
        return Err(format!("trials must be between 1 and {MAX_TRIALS}, got {trials}"));
    }
    let family = core(FamilySpec::cycle(2 * k + 1))?;
    let mut h = core(random_maximal_berge_free(n, 3, &family, seed))?;
    let mode = if paired { HalvingMode::Paired } else { HalvingMode::Independent };
    if paired && h.n() % 2 == 1 {
        h = core(h.with_vertex_count(h.n() + 1))?;
    }
    let cert = core(pipeline_certificate(&h, &family, 3))?;
    let stats = core(retention_statistics(&cert, mode, u64::from(trials), seed))?;
    to_json(&Retention {
        cycle: family.to_string(),
        n: h.n(),
        hyperedges: h.len(),
        stats,
    })
}

#[wasm_bindgen(js_name = boundCurves)]
pub fn bound_curves(k: u32, n_max: u32, points: u32, log_two: bool) -> Result<String, String> {
    bound_curves_json(k as usize, n_max as usize, points, log_two)
}

#[wasm_bindgen(js_name = turanThreshold)]
pub fn turan_threshold_table(r: u32, k: u32, n_min: u32, n_max: u32) -> Result<String, String> {
    threshold_json(r as usize, k as usize, n_min as usize, n_max as usize)
}

#[wasm_bindgen(js_name = retention)]
pub fn retention(k: u32, n: u32, paired: bool, trials: u32, seed: u32) -> Result<String, String> {
    retention_json(k as usize, n as usize, paired, trials, u64::from(seed))
}
