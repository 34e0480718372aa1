use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn surjhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_surjhom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let p: PathBuf = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn classify_bundled_cycle() {
    let out = surjhom(&["classify", "bundled:DC3*"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "NPCompleteNonTransitive");
}

#[test]
fn surjective_onto_two_vertices_from_one_fails() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(&dir, "g.json", r#"{"n": 1, "edges": [[0, 0]]}"#);
    let out = surjhom(&["solve", "surj", &g, "bundled:DC2*"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["exists"], false);
}

#[test]
fn cylinder_sizes() {
    let out = surjhom(&["gadget", "cyl", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["n"], 9);
    assert_eq!(v["edges"].as_array().unwrap().len(), 30);
    assert_eq!(v["provenance"][4]["copy"], 1);
}

#[test]
fn retraction_and_text_format() {
    let dir = tempfile::tempdir().unwrap();
    // DC3* plus a reflexive vertex 3 with 0 -> 3 -> 1
    let g = write(&dir, "g.txt", "4\n0 0\n1 1\n2 2\n3 3\n0 1\n1 2\n2 0\n0 3\n3 1\n");
    let out = surjhom(&["solve", "retract", &g, "bundled:DC3*", "--embedding", "[0,1,2]"]);
    assert_eq!(out.status.code(), Some(0));
    let w: Vec<u64> = serde_json::from_value(json(&out)["witness"].clone()).unwrap();
    assert_eq!(&w[..3], &[0, 1, 2]);
}

#[test]
fn spill_and_analyze() {
    let out = surjhom(&["spill", "bundled:T4", "--sub", "0,1,2"]);
    assert_eq!(json(&out)["full"], true);
    let out = surjhom(&["analyze", "bundled:DC3*"]);
    let v = json(&out);
    assert_eq!(v["endomorphisms"]["total"], 6);
    assert_eq!(v["endo_trivial"]["holds"], true);
}

#[test]
fn reduce_with_check() {
    let out = surjhom(&[
        "reduce", "base1", "bundled:DC3*", "bundled:T4", "--sub", "0,1,2", "--embedding", "[0,1,2]", "--check",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["soundness"]["source"], true);
    assert_eq!(v["soundness"]["target"], true);
    assert_eq!(v["digraph"]["n"], 9);
}

#[test]
fn poly_modes() {
    let out = surjhom(&["poly", "bundled:Hg", "--arity", "3", "--wnu"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["wnu"]["table"].as_array().unwrap().len(), 27);
    let out = surjhom(&["poly", "bundled:DC3*", "--arity", "2"]);
    assert_eq!(json(&out)["count"], 9);
}

#[test]
fn input_errors_and_size_bound() {
    assert_eq!(surjhom(&["analyze", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(surjhom(&["analyze", "bundled:nope"]).status.code(), Some(2));
    assert_eq!(surjhom(&["frobnicate"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_surjhom"))
        .args(["poly", "bundled:DC3*", "--arity", "3"])
        .env("SURJHOM_SIZE_BOUND", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_paper_subset() {
    let out = surjhom(&["verify-paper", "--only", "wnu_table,dagger_property"]);
    assert_eq!(out.status.code(), Some(0));
    let checks = json(&out)["checks"].as_array().unwrap().clone();
    assert_eq!(checks.len(), 2);
    assert_eq!(checks[0]["name"], "dagger_property");
    assert!(String::from_utf8_lossy(&out.stderr).contains("[PASS] 01 wnu_table"));
}

#[test]
fn figure_search() {
    let out = surjhom(&["search-figures"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["first_one"]["code"], 73);
    assert_eq!(v["first_two"]["code"], 3);
}
