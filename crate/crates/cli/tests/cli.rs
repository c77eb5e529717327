use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn berge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_berge"))
        .args(args)
        .env_remove("BERGE_THREADS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad json ({e}): {}\n{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("berge-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn berge_k3_value_for_four_vertices() {
    let out = berge(&["search", "--what", "berge", "--n", "4", "--r", "3", "--family", "K3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["records"][0]["value"], 2);
    assert_eq!(v["config"]["command"], "search");
}

#[test]
fn exact_cycle_bound_components() {
    let out = berge(&["bounds", "--k", "2", "--n", "8", "--source", "exact"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let row = &v["records"][0];
    let t2 = &row["bounds"][0];
    assert_eq!(t2["name"], "theorem2");
    let first = t2["components"][0]["value"].as_f64().unwrap();
    assert!((first - 16.0 / 3.0 * 4.0).abs() < 1e-9);
    let lin = t2["components"][1]["value"].as_f64().unwrap();
    assert!((t2["value"].as_f64().unwrap() - first - lin).abs() < 1e-9);
    let lin_search = json(&berge(&["search", "--what", "linear", "--n", "8", "--family", "C5"]));
    assert_eq!(lin_search["records"][0]["value"].as_f64().unwrap(), lin);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(berge(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(berge(&["search", "--what", "graph", "--n", "5"]).status.code(), Some(2));
    assert_eq!(
        berge(&["search", "--what", "graph", "--n", "5", "--family", "X9"]).status.code(),
        Some(2)
    );
    assert_eq!(
        berge(&["bounds", "--k", "1", "--n", "10"]).status.code(),
        Some(2),
        "k = 1 is outside the cycle bound's domain"
    );
    let out = berge(&["bounds", "--cited", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown bound"));
    assert_eq!(berge(&["--help"]).status.code(), Some(0));
}

#[test]
fn csv_and_text_start_with_config_echo() {
    for format in ["csv", "text"] {
        let out = berge(&["bounds", "--k", "2", "--n", "10,100", "--format", format]);
        assert_eq!(out.status.code(), Some(0));
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.starts_with("# berge "), "{text}");
        assert!(text.contains("seed="));
    }
    let out = berge(&["bounds", "--k", "2", "--n", "10,100", "--format", "csv"]);
    let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(out.stdout.as_slice());
    let header = rdr.headers().unwrap().clone();
    assert_eq!(&header[0], "n");
    assert_eq!(&header[2], "bound_name");
    assert_eq!(rdr.records().count(), 6);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("berge-cli-{}-out.json", std::process::id()));
    let out = berge(&["symmetrize", "--threshold", "--r", "4", "--k", "5", "--n", "9..10", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["records"][0]["dominant"], "red");
    assert_eq!(v["records"][1]["dominant"], "blue");
    assert_eq!(v["records"][1]["blue_cliques"], 36);
    assert_eq!(v["records"][1]["red_edges"], 33);
    std::fs::remove_file(path).ok();
}

#[test]
fn thread_flag_beats_environment() {
    let base = berge(&["retention", "--trials", "2000", "--mode", "independent"]);
    assert_eq!(base.status.code(), Some(0));
    let bad_env = Command::new(env!("CARGO_BIN_EXE_berge"))
        .args(["retention", "--trials", "2000", "--mode", "independent"])
        .env("BERGE_THREADS", "lots")
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(2));
    let flagged = Command::new(env!("CARGO_BIN_EXE_berge"))
        .args(["retention", "--trials", "2000", "--mode", "independent", "--threads", "3"])
        .env("BERGE_THREADS", "lots")
        .output()
        .unwrap();
    assert_eq!(flagged.status.code(), Some(0));
    assert_eq!(flagged.stdout, base.stdout);
    let env_only = Command::new(env!("CARGO_BIN_EXE_berge"))
        .args(["retention", "--trials", "2000", "--mode", "independent"])
        .env("BERGE_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(env_only.stdout, base.stdout);
}

#[test]
fn paired_retention_pads_odd_vertex_counts() {
    let out = berge(&["retention", "--n", "7", "--trials", "500"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    let cases = v["records"][0]["cases"].as_array().unwrap();
    let matched = cases.iter().find(|c| c["case"] == "matched_pair_is_block").unwrap();
    assert_eq!(matched["retained"], 0);
}

#[test]
fn detect_reports_witness_and_expect_free() {
    let path = scratch("c5.txt", "graph 5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let p = path.to_str().unwrap();
    let out = berge(&["detect", p, "--family", "C5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["records"][0]["contains"], true);
    assert_eq!(v["records"][0]["kind"], "subgraph");
    assert_eq!(berge(&["detect", p, "--family", "C5", "--expect-free"]).status.code(), Some(1));
    assert_eq!(berge(&["detect", p, "--family", "C4", "--expect-free"]).status.code(), Some(0));

    let hyper = scratch("h.txt", "hypergraph 3 5 3\n0 1 2\n1 2 3\n2 3 4\n");
    let v = json(&berge(&["detect", hyper.to_str().unwrap(), "--family", "K3"]));
    assert_eq!(v["records"][0]["kind"], "berge");
    assert_eq!(v["records"][0]["contains"], true);
    std::fs::remove_file(path).ok();
    std::fs::remove_file(hyper).ok();
}

#[test]
fn partition_of_shared_neighbour() {
    let path = scratch("bip.txt", "bipartite 2 1 2\n0 0\n1 0\n");
    let out = berge(&["partition", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rec = &v["records"][0];
    assert_eq!(rec["a2"], serde_json::json!([0, 1]));
    assert_eq!(rec["b2"], serde_json::json!([0]));
    assert_eq!(rec["a1"], serde_json::json!([]));
    std::fs::remove_file(path).ok();
}

#[test]
fn reduce_reports_counts_consistently() {
    for mode in ["independent", "paired"] {
        let out = berge(&["reduce", "--family", "C5", "--n", "8", "--halving", mode, "--seed", "3"]);
        let v = json(&out);
        let rec = &v["records"][0];
        let failures = rec["audit_failures"].as_array().unwrap();
        let claim = rec["halving"]["claim_holds"].as_bool().unwrap();
        let expect = if failures.is_empty() && claim { 0 } else { 1 };
        assert_eq!(out.status.code(), Some(expect));
        let c = &rec["counts"];
        assert_eq!(c["h"].as_u64(), Some(c["h1"].as_u64().unwrap() + c["h2"].as_u64().unwrap()));
        assert!(claim);
    }
}

#[test]
fn symmetrize_file_trace() {
    let path = scratch("rb.txt", "rbgraph 4 3\n0 1 b\n1 2 b\n2 3 r\n");
    let out = berge(&["symmetrize", path.to_str().unwrap(), "--k", "5", "--r", "3", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("step")));
    std::fs::remove_file(path).ok();
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = ["verify", "--suite", "claim", "--trials", "40", "--seed", "11"];
    let a = berge(&args);
    let b = berge(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
