use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn stabhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stabhom")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn info_on_a2() {
    let out = stabhom(&["info", "a2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dim"], 3);
    assert_eq!(v["projectives"]["1"], serde_json::json!([1, 1]));
    assert_eq!(v["injectives"]["1"], serde_json::json!([1, 0]));
    assert_eq!(v["hereditary"], true);
}

#[test]
fn info_on_an_algebra_file() {
    let dir = tempfile::tempdir().unwrap();
    let loop_x2 = write(
        dir.path(),
        "loop.json",
        r#"{"field": {"kind":"prime","p":5},
            "quiver": {"vertices":["1"], "arrows":[{"name":"x","from":"1","to":"1"}]},
            "relations": [{"terms":[{"coeff":"1","path":["x","x"]}]}],
            "nilpotency_bound": 10}"#,
    );
    let v = json(&stabhom(&["info", &loop_x2]));
    assert_eq!(v["dim"], 2);
    assert_eq!(v["self_injective"], true);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"field\": ");
    let out = stabhom(&["info", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("EOF"));

    let free_loop = write(
        dir.path(),
        "free.json",
        r#"{"field": {"kind":"rational"},
            "quiver": {"vertices":["1"], "arrows":[{"name":"x","from":"1","to":"1"}]}}"#,
    );
    assert_eq!(stabhom(&["info", &free_loop]).status.code(), Some(3));

    let out = stabhom(&["verify", "a2", "--laws", "no-such-law"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("torsion-agreement"));

    assert_eq!(stabhom(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn relation_violations_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    // x acting by a nonzero nilpotent of order 3 violates x² = 0
    let m = write(
        dir.path(),
        "m.json",
        r#"{"side":"left","dims":{"1":3},"arrows":{"x":[["0","0","0"],["1","0","0"],["0","1","0"]]}}"#,
    );
    let out = stabhom(&["invariants", "dual-numbers", &m]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stabhom(&["invariants", "truncated-cubic", &m]).status.code(), Some(0));
}

#[test]
fn invariants_of_a2_simples() {
    let dir = tempfile::tempdir().unwrap();
    let s1 = write(dir.path(), "s1.json", r#"{"side":"left","dims":{"1":1,"2":0}}"#);
    let v = json(&stabhom(&["invariants", "a2", &s1]));
    assert_eq!(v["torsion"], serde_json::json!([1, 0]));
    assert_eq!(v["torsionless_quotient"], serde_json::json!([0, 0]));
    assert_eq!(
        v["certificates"]["covariant_underline"]["sequence"],
        serde_json::json!([[1, 0], [1, 0], [0, 0], [0, 0]])
    );

    let sr2 = write(dir.path(), "sr2.json", r#"{"side":"right","dims":{"2":1}}"#);
    let v = json(&stabhom(&["invariants", "a2", &sr2]));
    assert_eq!(v["transpose"], serde_json::json!([1, 0]));
    assert_eq!(v["torsion_radical"], 1);

    let s2 = write(dir.path(), "s2.json", r#"{"side":"left","dims":{"2":1}}"#);
    let v = json(&stabhom(&["tensor", "a2", &sr2, &s2]));
    assert_eq!(v["substabilized"], 1);
    assert_eq!(v["ext1_transpose"], 1);
}

#[test]
fn embedded_algebra_must_match() {
    let dir = tempfile::tempdir().unwrap();
    let alg = json(&stabhom(&["info", "a2"]));
    assert_eq!(alg["dim"], 3);
    let a2 = write(
        dir.path(),
        "a2.json",
        r#"{"field":{"kind":"prime","p":5},"quiver":{"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}]}}"#,
    );
    let m = write(dir.path(), "m.json", r#"{"algebra":"a2.json","side":"left","dims":{"1":1}}"#);
    assert_eq!(stabhom(&["invariants", &a2, &m]).status.code(), Some(0));
    assert_eq!(stabhom(&["invariants", "a2:2", &m]).status.code(), Some(2));
}

#[test]
fn functor_files() {
    let dir = tempfile::tempdir().unwrap();
    // (P(1), −) presented by P(1) -> 0
    let f = write(
        dir.path(),
        "f.json",
        r#"{"variance":"covariant","presentation":{
            "domain":{"side":"left","dims":{"1":1,"2":1},"arrows":{"a":[["1"]]}},
            "codomain":{"side":"left","dims":{}},
            "vertices":{}}}"#,
    );
    let v = json(&stabhom(&["functor", "a2", &f]));
    assert_eq!(v["defect"], serde_json::json!([1, 1]));
    // dim Hom(P(1), M) = dim M_1
    for (probe, d) in [("S(1)", 1), ("S(2)", 0), ("P(1)", 1), ("P(2)", 0), ("I(1)", 1), ("I(2)", 1)] {
        assert_eq!(v["values"][probe], d, "{probe}");
    }
}

#[test]
fn verify_is_byte_stable_and_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let a = stabhom(&["verify", "a2", "--seed", "1", "--count", "50"]);
    let b = stabhom(&["verify", "a2", "--seed", "1", "--count", "50"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["passed"], true);
    assert_eq!(v["laws"].as_array().unwrap().len(), stabhom::laws::LAWS.len());

    let out = dir.path().join("report.json");
    let c = stabhom(&["--out", out.to_str().unwrap(), "verify", "a2", "--seed", "1", "--count", "50"]);
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(std::fs::read(&out).unwrap(), a.stdout);

    let other_seed = stabhom(&["verify", "a2", "--seed", "2", "--count", "50"]);
    assert_ne!(other_seed.stdout, a.stdout);
}

#[test]
fn law_filter_runs_only_the_selected_laws() {
    let out = stabhom(&["--format", "text", "verify", "kronecker", "--laws", "torsion-agreement"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).collect();
    assert_eq!(lines.len(), 1);
    assert!(lines[0].starts_with("PASS torsion-agreement"));
}

#[test]
fn catalog_searches() {
    let v = json(&stabhom(&["catalog", "--search", "t-nonidempotent", "--budget", "0", "a2"]));
    assert_eq!(v["algebras"][0]["findings"], serde_json::json!([]));

    let out = stabhom(&["catalog", "--search", "t-nonidempotent", "--budget", "40", "a2", "kronecker"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for alg in v["algebras"].as_array().unwrap() {
        assert_eq!(alg["summary"], "none found within budget");
    }

    let out = stabhom(&["catalog", "--search", "q-noncotorsion", "--budget", "20", "nakayama3"]);
    assert_eq!(out.status.code(), Some(0));
}
