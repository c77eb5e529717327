//! Report emission: JSON, RFC-4180 CSV and aligned text tables.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::bounds::{BoundReport, DashboardRow};
use crate::error::{Error, Result};
use crate::reduction::{ReductionCounts, RetentionStats};
use crate::search::SearchResult;
use crate::symmetrize::{SymmetrizationTrace, ThresholdReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        })
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(Error::InvalidParameter(format!("unknown format '{other}'"))),
        }
    }
}

/// Leading block of every report. Holds everything needed to rerun it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub seed: u64,
    pub parameters: BTreeMap<String, String>,
}

impl ConfigEcho {
    pub fn new(command: &str, seed: u64) -> Self {
        ConfigEcho {
            tool: "berge".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            seed,
            parameters: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.into(), value.to_string());
        self
    }

    fn lines(&self) -> Vec<String> {
        let mut out = vec![format!(
            "{} {} {} seed={}",
            self.tool, self.version, self.command, self.seed
        )];
        out.extend(self.parameters.iter().map(|(k, v)| format!("{k}={v}")));
        out
    }
}

/// A serializable record with a flat tabular view.
pub trait Record: Serialize {
    fn columns() -> Vec<&'static str>;
    /// One or more table rows; each has `columns().len()` cells.
    fn rows(&self) -> Vec<Vec<String>>;
}

#[derive(Serialize)]
struct Envelope<'a, T> {
    config: &'a ConfigEcho,
    records: &'a [T],
}

/// Renders `records` in `format`, preceded by the config echo when given.
///
/// With no echo, CSV is the bare header plus one line per row and JSON is a
/// bare array. With an echo, CSV and text get `# ` comment lines and JSON
/// becomes `{"config": .., "records": [..]}`.
pub fn emit_report<T: Record>(config: Option<&ConfigEcho>, records: &[T], format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => {
            let body = match config {
                Some(config) => serde_json::to_string_pretty(&Envelope { config, records }),
                None => serde_json::to_string_pretty(records),
            }
            .map_err(|e| Error::Internal(format!("json: {e}")))?;
            out.push_str(&body);
            out.push('\n');
        }
        Format::Csv => {
            push_comments(&mut out, config);
            out.push_str(&csv_table(&T::columns(), records.iter().flat_map(Record::rows))?);
        }
        Format::Text => {
            push_comments(&mut out, config);
            out.push_str(&text_table(&T::columns(), records.iter().flat_map(Record::rows)));
        }
    }
    Ok(out)
}

fn push_comments(out: &mut String, config: Option<&ConfigEcho>) {
    for line in config.iter().flat_map(|c| c.lines()) {
        out.push_str("# ");
        out.push_str(&line);
        out.push('\n');
    }
}

pub fn csv_table<I: IntoIterator<Item = Vec<String>>>(columns: &[&str], rows: I) -> Result<String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
    let err = |e: csv::Error| Error::Internal(format!("csv: {e}"));
    w.write_record(columns).map_err(err)?;
    for row in rows {
        w.write_record(&row).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(format!("csv: {e}")))
}

pub fn text_table<I: IntoIterator<Item = Vec<String>>>(columns: &[&str], rows: I) -> String {
    let rows: Vec<Vec<String>> = rows.into_iter().collect();
    let mut widths: Vec<usize> = columns.iter().map(|c| c.chars().count()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let mut s = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ");
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    let mut out = line(columns.iter().map(|c| c.to_string()).collect());
    out.push_str(&line(widths.iter().map(|w| "-".repeat(*w)).collect()));
    for row in rows {
        out.push_str(&line(row));
    }
    out
}

/// Parses the bare JSON array produced by [`emit_report`] without an echo.
pub fn parse_json_records<T: DeserializeOwned>(text: &str) -> Result<Vec<T>> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })
}

fn num(x: f64) -> String {
    format!("{x}")
}

fn components_cell(b: &BoundReport) -> String {
    b.components
        .iter()
        .map(|c| format!("{}={}", c.name, num(c.value)))
        .collect::<Vec<_>>()
        .join("; ")
}

impl Record for BoundReport {
    fn columns() -> Vec<&'static str> {
        vec!["n", "bound_name", "value", "components", "assumptions"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.parameters.get("n").cloned().unwrap_or_default(),
            self.name.clone(),
            num(self.value),
            components_cell(self),
            self.assumptions.join("; "),
        ]]
    }
}

impl Record for DashboardRow {
    fn columns() -> Vec<&'static str> {
        vec!["n", "k", "bound_name", "value", "components", "assumptions", "improves"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let mut rows: Vec<Vec<String>> = self
            .bounds
            .iter()
            .map(|b| {
                vec![
                    self.n.to_string(),
                    self.k.to_string(),
                    b.name.clone(),
                    num(b.value),
                    components_cell(b),
                    b.assumptions.join("; "),
                    if b.name == "theorem2" {
                        self.improves.to_string()
                    } else {
                        String::new()
                    },
                ]
            })
            .collect();
        if let Some(exact) = self.exact {
            rows.push(vec![
                self.n.to_string(),
                self.k.to_string(),
                "exact".into(),
                exact.to_string(),
                String::new(),
                "exhaustive search".into(),
                String::new(),
            ]);
        }
        rows
    }
}

impl Record for SearchResult {
    fn columns() -> Vec<&'static str> {
        vec!["value", "exhaustive", "nodes_explored", "witnesses"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.value.to_string(),
            self.exhaustive.to_string(),
            self.nodes_explored.to_string(),
            self.witnesses.iter().map(|w| w.to_text()).collect::<Vec<_>>().join("\n"),
        ]]
    }
}

impl Record for ReductionCounts {
    fn columns() -> Vec<&'static str> {
        vec!["h", "h1", "h2", "a1", "a2", "b1", "b2", "red_edges", "blue_cliques", "g_r"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![[
            self.h,
            self.h1,
            self.h2,
            self.a1,
            self.a2,
            self.b1,
            self.b2,
            self.red_edges,
            self.blue_cliques as usize,
            self.g_r as usize,
        ]
        .iter()
        .map(usize::to_string)
        .collect()]
    }
}

impl Record for RetentionStats {
    fn columns() -> Vec<&'static str> {
        vec!["mode", "trials", "seed", "case", "occurrences", "retained", "frequency"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.cases
            .iter()
            .map(|c| {
                vec![
                    self.mode.to_string(),
                    self.trials.to_string(),
                    self.seed.to_string(),
                    c.case.name().into(),
                    c.occurrences.to_string(),
                    c.retained.to_string(),
                    num(c.frequency),
                ]
            })
            .collect()
    }
}

impl Record for SymmetrizationTrace {
    fn columns() -> Vec<&'static str> {
        vec!["step", "u", "v", "relation", "g_r"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let mut rows = vec![vec![
            "0".into(),
            String::new(),
            String::new(),
            String::new(),
            self.initial_g_r.to_string(),
        ]];
        for (i, (s, g)) in self.steps.iter().zip(&self.g_r_values).enumerate() {
            rows.push(vec![
                (i + 1).to_string(),
                s.u.to_string(),
                s.v.to_string(),
                match s.relation {
                    crate::symmetrize::StepRelation::NonAdjacent => "non-adjacent".into(),
                    crate::symmetrize::StepRelation::BlueEdge => "blue-edge".into(),
                },
                g.to_string(),
            ]);
        }
        rows
    }
}

impl Record for ThresholdReport {
    fn columns() -> Vec<&'static str> {
        vec!["r", "k", "n", "blue_cliques", "red_edges", "dominant"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.r.to_string(),
            self.k.to_string(),
            self.n.to_string(),
            self.blue_cliques.to_string(),
            self.red_edges.to_string(),
            format!("{:?}", self.dominant).to_lowercase(),
        ]]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{cited_bound, CitedParams, LogBase};

    fn sample() -> BoundReport {
        cited_bound(
            "furedi_ozkahya_odd",
            &CitedParams {
                n: 37,
                k: 3,
                r: 3,
                log_base: LogBase::Natural,
            },
        )
        .unwrap()
    }

    #[test]
    fn empty_csv_is_header_only() {
        let out = emit_report::<BoundReport>(None, &[], Format::Csv).unwrap();
        assert_eq!(out, "n,bound_name,value,components,assumptions\r\n");
    }

    #[test]
    fn json_object_keys() {
        let out = emit_report(None, &[sample()], Format::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let obj = v.as_array().unwrap()[0].as_object().unwrap();
        let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        for k in ["name", "parameters", "value", "components", "assumptions"] {
            assert!(keys.contains(&k));
        }
        assert_eq!(keys.len(), 5);
        // declaration order survives
        let name_at = out.find("\"name\"").unwrap();
        let value_at = out.find("\"value\"").unwrap();
        assert!(name_at < value_at);
    }

    #[test]
    fn json_round_trip() {
        let reports: Vec<BoundReport> = (1..40)
            .map(|n| {
                cited_bound(
                    "bukh_jiang",
                    &CitedParams {
                        n: n * 7,
                        k: 3,
                        r: 3,
                        log_base: LogBase::Two,
                    },
                )
                .unwrap()
            })
            .collect();
        let text = emit_report(None, &reports, Format::Json).unwrap();
        let back: Vec<BoundReport> = parse_json_records(&text).unwrap();
        assert_eq!(back, reports);
    }

    #[test]
    fn csv_quotes_and_parses_back() {
        let r = sample();
        let out = emit_report(Some(&ConfigEcho::new("bounds", 7)), &[r.clone()], Format::Csv).unwrap();
        assert!(out.starts_with("# berge "));
        let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(out.as_bytes());
        let recs: Vec<csv::StringRecord> = rdr.records().map(|x| x.unwrap()).collect();
        assert_eq!(recs.len(), 1);
        assert_eq!(&recs[0][1], "furedi_ozkahya_odd");
        assert_eq!(recs[0][2].parse::<f64>().unwrap(), r.value);
        assert_eq!(&recs[0][4], r.assumptions.join("; "));
    }

    #[test]
    fn text_columns_align() {
        let out = text_table(&["a", "long_header"], vec![vec!["xyz".into(), "1".into()]]);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "a    long_header");
        assert_eq!(lines[2], "xyz  1");
    }
}
