use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octosigma")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn text(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn table_one_grid_marks_anticommuting_pairs() {
    let out = run(&["--format", "text", "tables", "--which", "tableI"]);
    assert_eq!(out.status.code(), Some(0));
    let t = text(&out);
    let row1 = t.lines().find(|l| l.trim_start().starts_with("u1 ")).unwrap();
    assert_eq!(row1.split_whitespace().nth(3), Some("i·u3_"));

    let v = json(&run(&["tables", "--which", "tableI"]));
    assert_eq!(v["data"]["rows"][1][2], "i·u3");
    assert_eq!(v["data"]["anticommutative"], serde_json::json!([[1, 2], [1, 3], [2, 3], [4, 6], [5, 7]]));
}

#[test]
fn constants_table_reports_double_listing() {
    let out = run(&["--format", "text", "tables", "--which", "constants"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out).lines().any(|l| l.starts_with("FINDING") && l.contains("u246")));
}

#[test]
fn ternaries_are_seven_lines() {
    let v = json(&run(&["tables", "--which", "ternaries"]));
    assert_eq!(v["data"]["distribution"].as_array().unwrap().len(), 7);
    assert_eq!(v["data"]["distribution"][1]["projections"], serde_json::json!(["Σ1^II", "Σ4^I", "Σ5^I"]));
}

#[test]
fn unknown_table_is_usage_error() {
    assert_eq!(run(&["tables", "--which", "tableIV"]).status.code(), Some(2));
}

#[test]
fn nonassoc_suite_passes() {
    let out = run(&["verify", "--suite", "nonassoc"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["data"]["nonassoc"]["left"], "i·u5");
    assert_eq!(v["data"]["nonassoc"]["right"], "-i·u5");
}

#[test]
fn table_one_suite_writes_full_diff() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("diff.json");
    let out = run(&["verify", "--suite", "tableI", "--emit", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let diff: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(diff["entries"].as_array().unwrap().len(), 64);
    let v = json(&out);
    let findings: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "finding")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(findings, ["tableI.oracle.u2u7", "tableI.oracle.u7u2"]);
}

#[test]
fn norms_suite_passes_with_split_finding() {
    let v = json(&run(&["verify", "--suite", "norms"]));
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "norms.split.composition" && c["status"] == "finding"));
    assert!(checks.iter().filter(|c| c["name"].as_str().unwrap().starts_with("norms.octonion")).all(|c| c["status"] == "pass"));
}

#[test]
fn table_two_under_anchors_reports_mismatches() {
    let out = run(&["verify", "--suite", "tableII"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reconstruct_is_deterministic_and_reports_unsatisfiable() {
    let dir = tempfile::tempdir().unwrap();
    let emit = |name: &str| {
        let p = dir.path().join(name);
        let out = run(&["reconstruct", "--scope", "1,2", "--emit", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        (json(&out), std::fs::read(&p).unwrap())
    };
    let (a, fa) = emit("a.json");
    let (b, fb) = emit("b.json");
    assert_eq!(fa, fb);
    assert_eq!(a["data"], b["data"]);
    assert!(fa.ends_with(b"}\n") && !fa.contains(&b'\r'));
    assert!(a["checks"][0]["detail"].as_str().unwrap().contains("unsatisfiable"));
}

#[test]
fn reconstruct_rejects_bad_scope() {
    assert_eq!(run(&["reconstruct", "--scope", "9"]).status.code(), Some(2));
    assert_eq!(run(&["reconstruct", "--scope", ""]).status.code(), Some(2));
}

#[test]
fn reconstruct_artifact_reverifies() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("six.json");
    let out = run(&["reconstruct", "--scope", "6", "--emit", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["data"]["solution_count"].as_u64().unwrap() > 0);
    let re = run(&["verify", "--suite", "tableII", "--assignment", p.to_str().unwrap()]);
    let rv = json(&re);
    assert!(!rv["checks"].as_array().unwrap().is_empty());
    // Every solution satisfies at least its own block.
    for entry in rv["data"]["tableII"].as_array().unwrap() {
        assert!(entry["blocks"].as_array().unwrap().contains(&Value::from(6)));
    }
}

#[test]
fn gamma_cases() {
    let v = json(&run(&["gamma", "--case", "2"]));
    let sig: Vec<&str> = v["data"]["report"]["signature"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["sign"].as_str().unwrap())
        .collect();
    assert_eq!(sig, ["+", "-", "-", "-"]);
    assert_eq!(v["data"]["gammas"][4]["present"], false);

    let v = json(&run(&["gamma", "--case", "1"]));
    let g0 = &v["data"]["gammas"][0]["matrix"];
    for r in 0..8 {
        for c in 0..8 {
            assert_eq!(g0[r][c], if r == c { "1" } else { "0" });
        }
    }
    assert_eq!(run(&["gamma", "--case", "3"]).status.code(), Some(2));
    assert_eq!(run(&["gamma", "--case", "1", "--policy", "sideways"]).status.code(), Some(2));
    assert_eq!(run(&["gamma", "--case", "1", "--policy", "distribution"]).status.code(), Some(0));
}

#[test]
fn dirac_values() {
    let v = json(&run(&["dirac", "--momentum", "1,0,0,0", "--interval", "1,0,0,0"]));
    assert_eq!(v["data"]["D"], 1.0);
    let v = json(&run(&["dirac", "--momentum", "2,1,0,0", "--interval", "3,4,0,0"]));
    assert_eq!(v["data"]["D"], 2.0);
    let v = json(&run(&["dirac", "--momentum", "1,0,0,0", "--interval", "1,0,0,0", "--a", "0,1,0,0", "--s", "3.14159265,0,0"]));
    let psi = &v["data"]["psi"];
    for (k, want) in [("w", -1.0), ("x", 0.0), ("y", 0.0), ("z", 0.0)] {
        assert!((psi[k].as_f64().unwrap() - want).abs() < 1e-6, "{k}");
    }
    assert_eq!(run(&["dirac", "--momentum", "1,0,0", "--interval", "1,0,0,0"]).status.code(), Some(2));
    assert_eq!(run(&["dirac", "--momentum", "1,x,0,0", "--interval", "1,0,0,0"]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_rendering_and_formats_agree() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("report.txt");
    let out = run(&["--format", "text", "--out", p.to_str().unwrap(), "dirac", "--momentum", "2,1,0,0", "--interval", "3,4,0,0"]);
    let written = std::fs::read_to_string(&p).unwrap();
    assert_eq!(written, text(&out));
    assert!(written.contains("D = 2"));
    assert!(Path::new(&p).exists());
}
