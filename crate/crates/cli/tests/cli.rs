use serde_json::Value;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn latmut(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latmut"))
        .args(args)
        .arg("--out")
        .arg(dir)
        .env_remove("LATMUT_STATE_CAP")
        .output()
        .expect("binary runs")
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn build_writes_json_and_dot() {
    let d = tempfile::tempdir().unwrap();
    for (spec, file, n) in [("weak:A2", "weak_A2", 6), ("A3:UU", "A3_UU", 14), ("B3:UU", "B3_UU", 20)] {
        let o = latmut(d.path(), &["build", spec]);
        assert!(o.status.success(), "{spec}");
        assert_eq!(json(&d.path().join(format!("{file}.json")))["n"], n);
        assert!(fs::read_to_string(d.path().join(format!("{file}.dot"))).unwrap().starts_with("digraph"));
    }
    let t = fs::read_to_string(d.path().join("A3_UU.triangulations.txt")).unwrap();
    assert_eq!(t.lines().count(), 14);
    let o = latmut(d.path(), &["build", "orient:B3:RL"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("20 elements"));
}

#[test]
fn outputs_are_deterministic() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for d in [&a, &b] {
        assert!(latmut(d.path(), &["build", "B3:UL"]).status.success());
        let f = d.path().join("B3_UL.json");
        assert!(latmut(d.path(), &["explore", f.to_str().unwrap(), "--type", "b", "--threads", "2"]).status.success());
    }
    for name in ["B3_UL.json", "B3_UL.dot", "B3_UL.mutation_graph.json", "B3_UL.mutation_graph.dot"] {
        assert_eq!(fs::read(a.path().join(name)).unwrap(), fs::read(b.path().join(name)).unwrap(), "{name}");
    }
}

#[test]
fn mutate_reports_and_identifies() {
    let d = tempfile::tempdir().unwrap();
    assert!(latmut(d.path(), &["build", "A3:UU"]).status.success());
    let f = d.path().join("A3_UU.json");
    let lattice = json(&f);
    // the atoms of this presentation are elements 1, 2 and 3; 2 is the middle one
    let mut seen = Vec::new();
    for atom in ["1", "2", "3"] {
        let o = latmut(d.path(), &["mutate", f.to_str().unwrap(), atom]);
        assert!(o.status.success());
        let v = json(&d.path().join("A3_UU.mutated.verdict.json"));
        assert_eq!(v["is_mutation"], true);
        assert_eq!(v["ac"], true);
        assert_eq!(v["d_sublattice"], true);
        seen.push(v["identified_as"][0].as_str().unwrap().to_string());
    }
    assert_eq!(seen[1], "affine tamari");
    assert!(seen[0].starts_with("cambrian") && seen[2].starts_with("cambrian"), "{seen:?}");
    // atoms may be named by label
    let label = lattice["labels"][2].as_str().unwrap();
    assert!(latmut(d.path(), &["mutate", f.to_str().unwrap(), label]).status.success());
    // the mutated file parses again, and its atom 0 (the old bottom) mutates back
    let m = d.path().join("A3_UU.mutated.json");
    let back = d.path().join("back");
    let o = latmut(&back, &["mutate", m.to_str().unwrap(), "0"]);
    assert!(o.status.success());
    let v = json(&back.join("A3_UU.mutated.mutated.verdict.json"));
    assert!(v["identified_as"].as_array().unwrap().contains(&Value::from("cambrian A3:LL")));
}

#[test]
fn usage_errors_exit_with_two() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(latmut(d.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(latmut(d.path(), &["build", "A3:UXU"]).status.code(), Some(2));
    assert_eq!(latmut(d.path(), &["build", "A9:UUUUUUUU"]).status.code(), Some(2));
    let bad = d.path().join("bad.json");
    fs::write(&bad, "{\"n\": 2, \"covers\": [[0, 1], [1, 0]]}").unwrap();
    assert_eq!(latmut(d.path(), &["mutate", bad.to_str().unwrap(), "1"]).status.code(), Some(2));
    fs::write(&bad, "{\"n\": 2,").unwrap();
    assert_eq!(latmut(d.path(), &["reroot", bad.to_str().unwrap(), "1"]).status.code(), Some(2));
    assert!(latmut(d.path(), &["build", "weak:A4"]).status.success());
    let w = d.path().join("weak_A4.json");
    assert_eq!(latmut(d.path(), &["mutate", w.to_str().unwrap(), "0"]).status.code(), Some(2));
}

#[test]
fn help_documents_spec_strings() {
    let d = tempfile::tempdir().unwrap();
    let o = latmut(d.path(), &["--help"]);
    let s = stdout(&o);
    for needle in ["A3:UL", "orient:", "weak:A3", "LATMUT_STATE_CAP", "Exit codes"] {
        assert!(s.contains(needle), "{needle}");
    }
}

#[test]
fn explore_flip_reroot_and_dot() {
    let d = tempfile::tempdir().unwrap();
    let diamond = d.path().join("diamond.json");
    fs::write(&diamond, "{\"n\": 4, \"covers\": [[0, 1], [0, 2], [1, 3], [2, 3]]}").unwrap();
    let o = latmut(d.path(), &["explore", diamond.to_str().unwrap()]);
    assert!(o.status.success());
    let g = json(&d.path().join("diamond.mutation_graph.json"));
    assert_eq!(g["classes"].as_array().unwrap().len(), 1);
    assert_eq!(g["all_pass"], true);

    let o = latmut(d.path(), &["flip", diamond.to_str().unwrap(), "0", "1"]);
    assert!(o.status.success());
    let f = json(&d.path().join("diamond.flipped.json"));
    assert_eq!(f["n"], 4);

    let o = latmut(d.path(), &["reroot", diamond.to_str().unwrap(), "3"]);
    assert!(o.status.success());
    let r = json(&d.path().join("diamond.rerooted.json"));
    assert!(r["covers"].as_array().unwrap().iter().any(|c| c[0] == 3));

    let o = latmut(d.path(), &["export-dot", diamond.to_str().unwrap()]);
    assert!(stdout(&o).contains("0 -> 1"));
    let q = d.path().join("q.json");
    fs::write(&q, "{\"weights\": [1, 2], \"edges\": [[0, 1, 1]]}").unwrap();
    let o = latmut(d.path(), &["export-dot", q.to_str().unwrap()]);
    assert!(stdout(&o).contains("doublecircle"));
}

#[test]
fn state_cap_from_environment() {
    let d = tempfile::tempdir().unwrap();
    assert!(latmut(d.path(), &["build", "A3:UU"]).status.success());
    let f = d.path().join("A3_UU.json");
    let o = Command::new(env!("CARGO_BIN_EXE_latmut"))
        .args(["explore", f.to_str().unwrap(), "--out"])
        .arg(d.path())
        .env("LATMUT_STATE_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_suites_pass() {
    let d = tempfile::tempdir().unwrap();
    for suite in ["coxeter", "cambrian", "census"] {
        let o = latmut(d.path(), &["verify", suite]);
        assert!(o.status.success(), "{suite}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
    let o = latmut(d.path(), &["verify", "flip", "--seed", "7"]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn census_writes_eight_classes() {
    let d = tempfile::tempdir().unwrap();
    let o = latmut(d.path(), &["census"]);
    assert!(o.status.success());
    assert_eq!(json(&d.path().join("census.json")).as_array().unwrap().len(), 8);
}
