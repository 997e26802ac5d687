use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn srforest(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srforest"))
        .args(args)
        .env_remove("SRFOREST_FIELD")
        .env_remove("SRFOREST_SIZE_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn quasi_forest_text_for_named_complexes() {
    let delta = stdout(&srforest(&["quasi-forest", data("delta.facets").to_str().unwrap(), "--format", "text"]));
    assert!(delta.starts_with("NOT quasi-forest\n"));
    assert!(delta.contains("S_3 = (x2,x3,x4)"));

    let gamma = stdout(&srforest(&["quasi-forest", data("gamma.facets").to_str().unwrap(), "--format", "text"]));
    assert!(gamma.starts_with("quasi-forest\n"));
    assert!(gamma.contains("leaf order: {x3,x4,x5}, {x2,x3,x4}, {x2,x4,x6}, {x1,x2,x3}"));

    let theta = stdout(&srforest(&["quasi-forest", data("theta.facets").to_str().unwrap(), "--format", "text"]));
    assert!(theta.contains("P_3: apex x4, base {x1,x2,x3}"));

    let simplex = stdout(&srforest(&["quasi-forest", data("simplex.facets").to_str().unwrap(), "--format", "text"]));
    assert!(simplex.starts_with("quasi-forest (simplex)\n"));
}

#[test]
fn analyze_reports_invariants() {
    let r = json(&srforest(&["analyze", data("a_invariant.facets").to_str().unwrap()]));
    assert_eq!(r["dim"], 3);
    assert_eq!(r["depth"], 2);
    assert_eq!(r["reg_ring"], 3);
    assert_eq!(r["a_invariant"], -1);
    assert_eq!(r["flags"]["cm"], false);
    assert!(r.get("timings_ms").is_none());

    let c5 = json(&srforest(&["analyze", data("c5.edges").to_str().unwrap()]));
    assert_eq!(c5["flags"]["cm"], true);
    assert_eq!(c5["flags"]["quasi_forest"], false);
    assert!(c5.get("graph").is_some());
}

#[test]
fn field_from_env_and_flag() {
    let path = data("c5.edges");
    let path = path.to_str().unwrap();
    assert_eq!(json(&srforest(&["cm", path]))["field"], "QQ");

    let bin = env!("CARGO_BIN_EXE_srforest");
    let env_only = Command::new(bin).args(["cm", path]).env("SRFOREST_FIELD", "fp:2").output().unwrap();
    assert_eq!(json(&env_only)["field"], "ZZ/2");
    let flag_wins = Command::new(bin).args(["--field", "q", "cm", path]).env("SRFOREST_FIELD", "fp:2").output().unwrap();
    assert_eq!(json(&flag_wins)["field"], "QQ");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(&dir, "bad.edges", "a b c\n");
    assert_eq!(srforest(&["analyze", &bad]).status.code(), Some(2));
    assert_eq!(srforest(&["analyze", "/definitely/missing.facets"]).status.code(), Some(2));

    let c5 = data("c5.edges");
    assert_eq!(srforest(&["--field", "fp:4", "cm", c5.to_str().unwrap()]).status.code(), Some(2));

    let labels: Vec<String> = (1..=17).map(|i| format!("v{i}")).collect();
    let big = write(&dir, "big.facets", &format!("{}\n", labels.join(" ")));
    assert_eq!(srforest(&["analyze", &big]).status.code(), Some(3));

    let tri = write(&dir, "tri.facets", "a b c\n");
    let out = srforest(&["--size-limit", "2", "analyze", &tri]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("srforest: "));
    let env_limit = Command::new(env!("CARGO_BIN_EXE_srforest"))
        .args(["analyze", &tri])
        .env("SRFOREST_SIZE_LIMIT", "2")
        .output()
        .unwrap();
    assert_eq!(env_limit.status.code(), Some(3));
}

#[test]
fn cycle_survey_agrees() {
    let text = stdout(&srforest(&["cycle-survey", "--max-n", "8"]));
    let rows: Vec<&str> = text.lines().filter(|l| l.ends_with("AGREE")).collect();
    assert_eq!(rows.len(), 6);
    assert!(!text.contains("DISAGREE"));

    let r = json(&srforest(&["cycle-survey", "--max-n", "6", "--format", "json"]));
    let depths: Vec<i64> = r["rows"].as_array().unwrap().iter().map(|row| row["depth_formula"].as_i64().unwrap()).collect();
    assert_eq!(depths, [1, 1, 2, 2]);
}

#[test]
fn graph_conversions_round_trip() {
    let ind = stdout(&srforest(&["graph", "ind", data("c4.edges").to_str().unwrap()]));
    assert_eq!(ind, "vertices: x1 x2 x3 x4\nx1 x3\nx2 x4\n");

    let dir = tempfile::tempdir().unwrap();
    let ind_path = write(&dir, "ind.facets", &ind);
    let skeleton = stdout(&srforest(&["graph", "skeleton", &ind_path]));
    let comp = write(&dir, "comp.edges", &stdout(&srforest(&["graph", "complement", data("c4.edges").to_str().unwrap()])));
    assert_eq!(skeleton, fs::read_to_string(comp).unwrap());

    let echoed = json(&srforest(&["analyze", data("gamma.facets").to_str().unwrap()]));
    let again_path = write(&dir, "gamma.facets", &fs::read_to_string(data("gamma.facets")).unwrap());
    assert_eq!(echoed["input"], json(&srforest(&["analyze", &again_path]))["input"]);
}

#[test]
fn output_is_deterministic() {
    let path = data("theta.facets");
    let args = ["analyze", path.to_str().unwrap()];
    let first = stdout(&srforest(&args));
    for _ in 0..2 {
        assert_eq!(stdout(&srforest(&args)), first);
    }
}
