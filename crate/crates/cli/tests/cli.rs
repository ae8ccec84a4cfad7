use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn kgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kgraph")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}\nstdout: {}\nstderr: {}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("stderr is json")
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["check"] == name)
        .unwrap_or_else(|| panic!("no check {name}"))
}

#[test]
fn torus_first_homology() {
    let out = kgraph(&["homology", &data("torus2.json"), "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out), json!({"group": {"rank": 2, "torsion": []}}));
}

#[test]
fn homology_all_degrees() {
    let out = kgraph(&["homology", &data("torus2.json")]);
    let ranks: Vec<u64> = stdout_json(&out)["groups"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["group"]["rank"].as_u64().unwrap())
        .collect();
    assert_eq!(ranks, vec![1, 2, 1]);
}

#[test]
fn reduced_homology_of_omega_vanishes() {
    let out = kgraph(&["homology", &data("omega-2-22.json"), "--n", "0", "--reduced"]);
    assert_eq!(stdout_json(&out), json!({"group": {"rank": 0, "torsion": []}}));
}

#[test]
fn cohomology_mod_two() {
    let out = kgraph(&["cohomology", &data("torus2.json"), "--coeff", "Z/2", "--n", "1"]);
    assert_eq!(stdout_json(&out), json!({"group": {"rank": 0, "torsion": [2, 2]}}));
}

#[test]
fn info_counts_cubes() {
    let out = kgraph(&["info", &data("omega-2-11.json")]);
    let v = stdout_json(&out);
    assert_eq!(v["k"], 2);
    assert_eq!(v["vertices"], 4);
    assert_eq!(v["cubes"], json!([4, 4, 1]));
}

#[test]
fn verify_torus_passes() {
    let out = kgraph(&["verify", &data("torus2.json"), "--bound", "2,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["pass"], true);
    for name in ["nabla-chain-map", "box-chain-map", "box-nabla-identity", "fbox-k", "box-l-xi", "rect-boundary"] {
        let c = check(&v, name);
        assert_eq!(c["pass"], true, "{name}");
        assert!(c["generatorsTested"].as_u64().unwrap() > 0, "{name}");
    }
}

#[test]
fn verify_with_naturality() {
    let out = kgraph(&[
        "verify",
        &data("omega-2-11.json"),
        "--bound",
        "1,1",
        "--naturality",
        &data("omega-2-11-to-torus2.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(check(&v, "nabla-natural")["pass"], true);
    assert_eq!(check(&v, "box-natural")["pass"], true);
}

#[test]
fn validate_reports_witness_for_broken_graph() {
    let out = kgraph(&["validate", &data("broken-torus.json")]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["pass"], false);
    let v1 = check(&v, "V1");
    assert_eq!(v1["pass"], false);
    assert_eq!(v1["witness"], json!(["e", "f"]));
}

#[test]
fn validate_accepts_good_graph() {
    let out = kgraph(&["validate", &data("omega-3-111.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["pass"], true);
}

#[test]
fn missing_file_is_schema_error() {
    let out = kgraph(&["info", "/nonexistent/graph.json"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_json(&out)["error"].is_string());
}

#[test]
fn malformed_document_is_schema_error() {
    let path = std::env::temp_dir().join(format!("kgraph-bad-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"k": 1, "vertices": ["v"], "edges": [{"id": "e", "color": 1}]}"#).unwrap();
    let out = kgraph(&["info", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bad_degree_is_schema_error() {
    let out = kgraph(&["verify", &data("torus2.json"), "--bound", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn infinite_category_refused() {
    let out = kgraph(&["cat-homology", &data("fig8.json"), "--probe-bound", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_json(&out)["error"].as_str().unwrap().contains("infinite"));
}

#[test]
fn categorical_homology_of_omega() {
    let out = kgraph(&["cat-homology", &data("omega-2-11.json"), "--probe-bound", "1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let ranks: Vec<u64> = stdout_json(&out)["groups"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["group"]["rank"].as_u64().unwrap())
        .collect();
    assert_eq!(ranks, vec![1, 0, 0]);
}

#[test]
fn categorical_homology_matches_cubical() {
    let cat = kgraph(&["cat-homology", &data("omega-1-2.json"), "--probe-bound", "2"]);
    let cub = kgraph(&["homology", &data("omega-1-2.json")]);
    assert_eq!(stdout_json(&cat), stdout_json(&cub));
}

#[test]
fn uct_holds() {
    let out = kgraph(&["uct", &data("torus2.json"), "--m", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 3);
}

#[test]
fn cat_to_cub_bilinear() {
    let out = kgraph(&["translate", &data("torus2.json"), "--direction", "cat2cub", "--evaluator", "bilinear:1,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_json(&out),
        json!({"degree": 2, "coeff": {"type": "Z"}, "values": [{"cube": ["e", "f"], "value": 1}]})
    );
}

#[test]
fn cub_to_cat_top_class_and_reversed_sign() {
    let value = |order: &str| {
        let out = kgraph(&[
            "translate",
            &data("torus2.json"),
            "--direction",
            "cub2cat",
            "--cocycle",
            &data("torus2-top-cocycle.json"),
            "--tuples",
            &data("torus2-pairs.json"),
            "--color-order",
            order,
        ]);
        assert_eq!(out.status.code(), Some(0));
        let v = stdout_json(&out);
        assert_eq!(check(&v, "categorical-cocycle")["pass"], true);
        let vals: Vec<i64> = v["values"].as_array().unwrap().iter().map(|t| t["value"].as_i64().unwrap()).collect();
        vals[0] - vals[1]
    };
    assert_eq!(value("forward"), 1);
    assert_eq!(value("reversed"), -1);
}

#[test]
fn cub_to_cat_degree_one_is_additive() {
    let out = kgraph(&[
        "translate",
        &data("torus2.json"),
        "--direction",
        "cub2cat",
        "--cocycle",
        &data("torus2-one-cocycle.json"),
        "--tuples",
        &data("torus2-singles.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(check(&v, "degree1-path-independence")["pass"], true);
    let vals: Vec<i64> = v["values"].as_array().unwrap().iter().map(|t| t["value"].as_i64().unwrap()).collect();
    assert_eq!(vals, vec![2, 7, 9, 0]);
}

#[test]
fn cat_to_cub_round_trips_through_cub_to_cat() {
    let table = std::env::temp_dir().join(format!("kgraph-table-{}.json", std::process::id()));
    let out = kgraph(&[
        "--out",
        table.to_str().unwrap(),
        "translate",
        &data("torus2.json"),
        "--direction",
        "cat2cub",
        "--evaluator",
        "bilinear:1,2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let back = kgraph(&[
        "translate",
        &data("torus2.json"),
        "--direction",
        "cub2cat",
        "--cocycle",
        table.to_str().unwrap(),
        "--tuples",
        &data("torus2-pairs.json"),
    ]);
    std::fs::remove_file(&table).ok();
    let vals: Vec<i64> =
        stdout_json(&back)["values"].as_array().unwrap().iter().map(|t| t["value"].as_i64().unwrap()).collect();
    assert_eq!(vals, vec![1, 0, 0]);
}

#[test]
fn out_flag_writes_same_bytes_as_stdout() {
    let path = std::env::temp_dir().join(format!("kgraph-out-{}.json", std::process::id()));
    let direct = kgraph(&["homology", &data("fig8.json")]);
    let written = kgraph(&["--out", path.to_str().unwrap(), "homology", &data("fig8.json")]);
    assert_eq!(written.status.code(), Some(0));
    let bytes = std::fs::read(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(bytes, direct.stdout);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        vec!["verify".to_string(), data("omega-2-22.json"), "--bound".into(), "1,1".into()],
        vec!["cohomology".to_string(), data("omega-3-111.json")],
        vec!["translate".to_string(), data("torus2.json"), "--direction".into(), "cat2cub".into(), "--evaluator".into(), "hash:7".into(), "--degree".into(), "1".into()],
    ] {
        let a: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(kgraph(&a).stdout, kgraph(&a).stdout);
    }
}

#[test]
fn unknown_evaluator_is_schema_error() {
    let out = kgraph(&["translate", &data("torus2.json"), "--direction", "cat2cub", "--evaluator", "nope"]);
    assert_eq!(out.status.code(), Some(3));
}
