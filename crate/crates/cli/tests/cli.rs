use std::process::{Command, Output};
use std::time::{Duration, Instant};

use serde_json::Value;

fn edgeset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgeset")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = edgeset(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> Option<i32> {
    edgeset(args).status.code()
}

#[test]
fn build_dot() {
    let out = edgeset(&["build", "path:4", "--format", "dot"]);
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("graph "));
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 7);
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 18);
    assert!(dot.contains("label=\"{e1,e2,e3}\\n(3,1)\""));
}

#[test]
fn build_json() {
    let v = json(&["build", "cycle:3", "--format", "json"]);
    assert_eq!(v["vertex_count"], 7);
    assert_eq!(v["edge_count"], 21);
    assert!(v["vertices"].as_array().unwrap().iter().all(|x| x["degree"] == 6));
    assert_eq!(v["vertices"][3]["subset"], "{e1,e2}");
    assert_eq!(v["vertices"][3]["id"], "v2_1");

    let v = json(&["build", "star:1"]);
    assert_eq!(v["vertex_count"], 1);
    assert_eq!(v["edge_count"], 0);
}

#[test]
fn profile_json() {
    let v = json(&["profile", "path:4"]);
    assert_eq!((v["Delta"].as_u64(), v["delta"].as_u64(), v["max_count"].as_u64()), (Some(6), Some(4), Some(4)));
    assert_eq!(v["degree_sum"], 36);
    assert_eq!(v["eulerian"], true);
    let first = &v["degrees"][0];
    assert_eq!((first["mask_hex"].as_str(), first["subset"].as_str()), (Some("0x1"), Some("{e1}")));
    assert_eq!((first["s"].as_u64(), first["i"].as_u64(), first["degree"].as_u64()), (Some(1), Some(1), Some(4)));

    let v = json(&["profile", "star:4"]);
    assert!(v["degrees"].as_array().unwrap().iter().all(|x| x["degree"] == 14));
    let v = json(&["profile", "cycle:5"]);
    assert_eq!(v["max_count"], 11);
    let v = json(&["profile", "path:5"]);
    assert_eq!(v["eulerian"], false);
}

#[test]
fn ced_json() {
    let v = json(&["ced", "cycle:6"]);
    assert_eq!((v["ced_number"].as_u64(), v["ced_index"].as_u64()), (Some(4), Some(6)));
    let v = json(&["ced", "path:6"]);
    assert_eq!((v["ced_number"].as_u64(), v["ced_index"].as_u64()), (Some(3), Some(1)));
    assert_eq!(v["smallest_sets"][0], "{e2,e3,e4}");
    let v = json(&["ced", "complete:4"]);
    assert_eq!((v["ced_number"].as_u64(), v["ced_index"].as_u64()), (Some(2), Some(12)));
    assert!(v.get("all_ced_count").is_some());
    let v = json(&["ced", "path:19"]);
    assert!(v.get("all_ced_count").is_none());
}

#[test]
fn other_reports() {
    let v = json(&["edge-degrees", "star:3"]);
    assert_eq!(v["total"], 6);
    assert_eq!(v["general"][0]["index"], 1);
    assert_eq!(v["per_vertex"][0]["value"], 6);
    let v = json(&["setgraph-compare", "path:3"]);
    assert_eq!((v["esg_sum"].as_u64(), v["set_graph_sum"].as_u64()), (Some(6), Some(4)));
    assert_eq!(v["esg_exceeds"], true);
    for cmd in ["build", "profile", "ced", "edge-degrees", "setgraph-compare"] {
        let out = edgeset(&[cmd, "cycle:4", "--format", "table"]);
        assert!(out.status.success(), "{cmd}");
        assert!(String::from_utf8(out.stdout).unwrap().starts_with("host cycle:4"));
    }
}

#[test]
fn edge_list_input_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("paw.txt");
    std::fs::write(&input, "# triangle with a pendant edge\n4 4\n1 2\n2 3\n1 3\n3 4\n").unwrap();
    let output = dir.path().join("profile.json");
    let out = edgeset(&["profile", input.to_str().unwrap(), "--output", output.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(v["epsilon"], 4);
    assert_eq!(v["host"]["edges"][2], serde_json::json!([1, 3]));

    let bad = dir.path().join("loop.txt");
    std::fs::write(&bad, "2 1\n1 1\n").unwrap();
    assert_eq!(code(&["profile", bad.to_str().unwrap()]), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["build", "wheel:5"]), Some(2));
    assert_eq!(code(&["build", "no/such/file"]), Some(2));
    assert_eq!(code(&["build", "cycle:2"]), Some(2));
    assert_eq!(code(&["profile", "path:4", "--format", "dot"]), Some(2));
    assert_eq!(code(&["build", "path:20"]), Some(3));
    assert_eq!(code(&["ced", "path:30"]), Some(3));
    assert_eq!(code(&["profile", "path:4", "--max-epsilon", "2"]), Some(3));
    assert_eq!(code(&["profile", "path:4", "--max-epsilon", "100"]), Some(2));
    assert_eq!(code(&["profile", "path:4", "--max-epsilon", "3"]), Some(0));
    assert_eq!(code(&["verify", "--claim", "Prop9.9"]), Some(2));
    assert_eq!(code(&["verify", "--n", "4"]), Some(2));
}

#[test]
fn verify_quick() {
    let started = Instant::now();
    let out = edgeset(&["verify", "--profile", "quick", "--format", "json"]);
    assert!(started.elapsed() < Duration::from_secs(10));
    // the Eulerian and maximum-degree-count claims fail on small paths and cycles
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let verdicts = v.as_array().unwrap();
    assert!(verdicts.len() >= 15);
    assert!(verdicts.iter().any(|x| x["claim_id"] == "Sec2-identities" && x["status"] == "PASS"));

    let table = String::from_utf8(edgeset(&["verify"]).stdout).unwrap();
    assert!(table.contains("PASS           Sec2-identities"));
    assert!(table.lines().last().unwrap().contains("verdicts:"));
}

#[test]
fn verify_single_claim() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("verdict.json");
    let out = edgeset(&["verify", "--claim", "Prop3.1c", "--n", "5", "--output", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["status"], "FAIL");
    assert_eq!(v[0]["verdict_only"], true);
    assert!(v[0]["evidence"].as_str().unwrap().contains("12 Hamiltonian cycles"));

    assert_eq!(code(&["verify", "--claim", "Thm2.9"]), Some(0));
    assert_eq!(code(&["verify", "--claim", "Eulerian"]), Some(1));
    let v = json(&["verify", "--claim", "Prop3.1c", "--n", "9", "--format", "json"]);
    assert_eq!(v[0]["status"], "GUARDED_OUT");
}

#[test]
fn identical_invocations_give_identical_output() {
    for args in [
        &["profile", "complete:4"][..],
        &["build", "cycle:4", "--format", "dot"],
        &["ced", "complete:5"],
        &["verify", "--format", "json"],
    ] {
        assert_eq!(edgeset(args).stdout, edgeset(args).stdout, "{args:?}");
    }
}
