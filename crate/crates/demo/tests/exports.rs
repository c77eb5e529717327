use berge_demo::{bound_curves, bound_curves_json, log_spaced, retention, retention_json, threshold_json, turan_threshold_table};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn log_spacing_hits_both_ends() {
    let ns = log_spaced(10_000, 4).unwrap();
    assert_eq!(ns, vec![10, 100, 1000, 10_000]);
    let dense = log_spaced(12, 50).unwrap();
    assert!(dense.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(*dense.last().unwrap(), 12);
    assert!(log_spaced(9, 4).is_err());
    assert!(log_spaced(100, 1).is_err());
}

#[test]
fn curves_have_one_value_per_n() {
    let v = parse(&bound_curves_json(2, 10_000, 25, false).unwrap());
    let ns = v["ns"].as_array().unwrap().len();
    let names: Vec<&str> = v["series"].as_array().unwrap().iter().map(|s| s["name"].as_str().unwrap()).collect();
    assert_eq!(
        names,
        ["theorem2", "theorem1_ii", "furedi_ozkahya_odd", "bollobas_gyori", "ergemlidze_methuku"]
    );
    for s in v["series"].as_array().unwrap() {
        let values = s["values"].as_array().unwrap();
        assert_eq!(values.len(), ns);
        let xs: Vec<f64> = values.iter().map(|x| x.as_f64().unwrap()).collect();
        assert!(xs.windows(2).all(|w| w[0] <= w[1]), "{} not monotone", s["name"]);
    }
    let k3 = parse(&bound_curves_json(3, 1000, 10, true).unwrap());
    assert_eq!(k3["series"].as_array().unwrap().len(), 3);
    assert_eq!(k3["log_base"], "2");
}

#[test]
fn curves_match_the_cited_bound_directly() {
    use berge_core::bounds::{cited_bound, CitedParams, LogBase};
    let v = parse(&bound_curves_json(2, 1000, 3, false).unwrap());
    let old = &v["series"][2];
    assert_eq!(old["name"], "furedi_ozkahya_odd");
    let direct = cited_bound("furedi_ozkahya_odd", &CitedParams { n: 1000, k: 2, r: 3, log_base: LogBase::Natural }).unwrap();
    assert_eq!(old["values"][2].as_f64().unwrap(), direct.value);
}

#[test]
fn threshold_rows_and_switch() {
    let v = parse(&threshold_json(4, 5, 9, 10).unwrap());
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["dominant"], "red");
    assert_eq!(rows[1]["dominant"], "blue");
    assert_eq!(rows[1]["blue_cliques"], 36);
    assert_eq!(rows[1]["red_edges"], 33);
    assert!(threshold_json(3, 3, 5, 6).is_err());
    assert!(threshold_json(3, 5, 9, 8).is_err());
}

#[test]
fn retention_is_seeded_and_pads_odd_n() {
    let a = retention_json(2, 7, true, 300, 5).unwrap();
    assert_eq!(a, retention_json(2, 7, true, 300, 5).unwrap());
    let v = parse(&a);
    assert_eq!(v["n"], 8);
    let cases = v["stats"]["cases"].as_array().unwrap();
    let matched = cases.iter().find(|c| c["case"] == "matched_pair_is_block").unwrap();
    assert_eq!(matched["retained"], 0);
    let indep = parse(&retention_json(2, 7, false, 300, 5).unwrap());
    assert_eq!(indep["n"], 7);
    assert!(retention_json(2, 7, true, 0, 5).is_err());
}

#[test]
fn exported_wrappers_forward() {
    assert_eq!(bound_curves(2, 100, 5, false), bound_curves_json(2, 100, 5, false));
    assert_eq!(turan_threshold_table(3, 5, 5, 8), threshold_json(3, 5, 5, 8));
    assert_eq!(retention(2, 8, false, 50, 9), retention_json(2, 8, false, 50, 9));
    assert!(bound_curves(1, 100, 5, false).is_err());
}
