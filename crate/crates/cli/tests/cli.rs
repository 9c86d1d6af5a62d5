use assert_cmd::Command;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::cargo_bin("weylwalk").unwrap().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out) = run(args);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")))
}

#[test]
fn root_info() {
    let (code, v) = json(&["root", "info", "--type", "B2"]);
    assert_eq!(code, 0);
    assert_eq!(v["weyl_order"], 8);
    assert_eq!(v["cartan"], serde_json::json!([[2, -2], [-1, 2]]));
}

#[test]
fn crystal_build() {
    let (code, v) = json(&["crystal", "build", "--type", "A2", "--delta", "1,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["size"], 3);
    let ends: Vec<Value> = v["paths"].as_array().unwrap().iter().map(|p| p["endpoint"].clone()).collect();
    assert_eq!(ends, vec![serde_json::json!([1, 0]), serde_json::json!([-1, 1]), serde_json::json!([0, -1])]);
}

#[test]
fn graph_counts() {
    let (code, out) = run(&["graph", "build", "--type", "A1", "--delta", "1", "--mode", "chamber", "--n", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "4,0,2"));
}

#[test]
fn polytope_faces_and_location() {
    let (code, v) = json(&["polytope", "faces", "--type", "A2", "--delta", "1,0", "--m", "-1/2,1/2"]);
    assert_eq!(code, 0);
    assert_eq!(v["faces"].as_array().unwrap().len(), 3);
    assert_eq!(v["location"]["inside"], true);
}

#[test]
fn drift_invert() {
    let (code, v) = json(&["drift", "invert", "--type", "A1", "--delta", "1", "--m", "1/3"]);
    assert_eq!(code, 0);
    assert_eq!(v["t"][0], "1/2");
    let (code, v) = json(&["drift", "invert", "--type", "A2", "--delta", "1,0", "--m", "0.2,0.1"]);
    assert_eq!(code, 0);
    assert!((v["drift"][0].as_f64().unwrap() - 0.2).abs() < 1e-8);
}

#[test]
fn measure_eval() {
    let (code, v) = json(&["measure", "eval", "--type", "A1", "--delta", "1", "--mode", "chamber", "--m", "0", "--lambda", "2", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["p"]["value"], 0.75);
}

#[test]
fn sample_is_byte_stable() {
    let args = ["sample", "--type", "A2", "--delta", "1,1", "--m", "0.3,0.2", "--steps", "200", "--seed", "11"];
    let (c1, a) = run(&args);
    let (c2, b) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let (code, v) = json(&["sample", "--type", "A1", "--delta", "1", "--m", "1/2", "--steps", "1000", "--reps", "2", "--seed", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["deviations"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_single_model() {
    let (code, v) = json(&["verify", "--suite", "all", "--type", "A1", "--delta", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 10);
    let (code, v) = json(&["verify", "--suite", "5", "--type", "A2", "--delta", "1,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"][0]["metrics"]["admissible_list"], serde_json::json!([[], [1], [1, 2]]));
}

#[test]
fn usage_errors() {
    let (code, v) = json(&["root", "info", "--type", "Z9"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "Usage");
    assert!(v["error"]["message"].as_str().unwrap().contains("Z9"));
    let (code, v) = json(&["measure", "eval", "--type", "A1", "--delta", "1", "--mode", "chamber", "--m", "0", "--lambda", "2,0?"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "Usage");
    let (code, _) = json(&["sample", "--type", "A1", "--delta", "1", "--m", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn domain_errors() {
    let (code, v) = json(&["drift", "invert", "--type", "A2", "--delta", "1,0", "--m", "2,0"]);
    assert_eq!((code, v["error"]["kind"].as_str().unwrap()), (2, "NotInPolytope"));
    let (code, v) = json(&["measure", "eval", "--type", "A2", "--delta", "1,0", "--mode", "chamber", "--m", "-0.2,0.1"]);
    assert_eq!((code, v["error"]["kind"].as_str().unwrap()), (2, "NotDominantDrift"));
    let out = Command::cargo_bin("weylwalk")
        .unwrap()
        .env("WEYLWALK_DIM_CAP", "2")
        .args(["crystal", "build", "--type", "A2", "--delta", "1,1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "DimensionCap");
}
