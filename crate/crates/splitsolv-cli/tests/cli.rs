use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splitsolv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--format=json");
    let o = run(&a);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn classify_eps0_rows() {
    let v = json(&["classify", "--A=-1/2", "--B=-1/2", "--eps=0"]);
    assert_eq!(v["result"]["label"], "s9");
    assert_eq!(v["result"]["row"], "eps=0: B=-1/2");
    assert!(v["source"].as_str().unwrap().contains("B=-1/2"));
    // not normalized: the gauge moves B to -1/3
    let v = json(&["classify", "--A=-1", "--B=-1/2", "--eps=0"]);
    assert_eq!(v["result"]["label"], "s11^{1/3}");
    let o = run(&["classify", "--kt"]);
    assert!(stdout(&o).contains("label   s1"));
}

#[test]
fn nakamura_ddbar() {
    let o = run(&["nakamura", "--ddbar", "--C=i/2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("ddbar   false"));
    assert_eq!(json(&["nakamura", "--ddbar", "--C=1+i"])["ddbar"], true);
    let v = json(&["nakamura", "--deform", "--k=0", "--t=1/4"]);
    assert_eq!(v["ddbar"], true);
    assert_eq!(v["C"], "1*i");
}

#[test]
fn lattice_certificate() {
    let v = json(&["lattice", "--s=2", "--n=3"]);
    let c = &v["certificate"];
    assert_eq!(c["charpoly"], serde_json::json!(["1", "-6", "11", "-6", "1"]));
    assert_eq!(c["D"], 5);
    assert_eq!(c["det_bs"], "1");
    assert!(v["source"].is_string());
    assert_eq!(run(&["lattice", "--s=0", "--n=3"]).status.code(), Some(2));
}

#[test]
fn cohomology_rows() {
    let v = json(&["cohomology", "--C=i", "--t=1/2", "--theory=dbar"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 16);
    let r11 = rows.iter().find(|r| r["bidegree"] == serde_json::json!([1, 1])).unwrap();
    assert_eq!(r11["dim"], 3);
    for key in ["C", "t", "theory", "bidegree", "dim", "generators"] {
        assert!(r11.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn algebra_checks() {
    let v = json(&["algebra", "--parse", "(0, -e^{13}, e^{12}, 0)"]);
    assert_eq!(v["jacobi"], true);
    assert_eq!(v["betti"], serde_json::json!([1, 2, 2, 2, 1]));
    let v = json(&["algebra", "--label", "s12"]);
    assert_eq!(v["unimodular"], true);
    let bad = run(&["algebra", "--parse", "(e^{23}, e^{45}, 0, 0, 0)", "--check"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["classify", "--A=foo"]).status.code(), Some(2));
    assert_eq!(run(&["algebra", "--parse", "(e^{1"]).status.code(), Some(2));
    assert_eq!(run(&["lattice", "--s=1"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--A=0", "--B=0", "--eps=0"]).status.code(), Some(1));
    assert_eq!(run(&["metrics", "--kt", "--kind=kahler", "--exists"]).status.code(), Some(1));
    assert_eq!(run(&["metrics", "--kt", "--kind=skt", "--exists"]).status.code(), Some(0));
    assert_eq!(run(&["metrics", "--A=1+i", "--B=-1+i", "--kind=kahler", "--exists"]).status.code(), Some(0));
}

#[test]
fn tables_deterministic_with_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    let fixtures = format!("--fixtures={}", dir.path().display());
    let a = run(&["tables", "--all", "--format=json", &fixtures]);
    assert!(a.status.success());
    let b = run(&["tables", "--all", "--format=json"]);
    assert_eq!(a.stdout, b.stdout);
    for name in ["classification", "metrics", "dolbeault", "deformation", "harmonic"] {
        let text = std::fs::read_to_string(dir.path().join(format!("{name}.json"))).unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        assert!(v["source"].is_string(), "{name}");
    }
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["metrics"]["matches"], true);
    assert!(v["harmonic"]["checks"].as_array().unwrap().iter().all(|c| c["verified"] == true));
    assert_eq!(run(&["tables"]).status.code(), Some(2));
}
