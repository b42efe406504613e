use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn tdc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tdc")).args(args).output().unwrap()
}

fn tdc_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tdc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn invariants_of_families() {
    let c6 = json(&tdc(&["invariants", "cycle:6"]));
    assert_eq!(c6["tdc"], 4);
    assert_eq!(c6["n"], 6);
    assert_eq!(c6["witness"].as_array().unwrap().len(), 6);

    let p4 = json(&tdc(&["invariants", "path:4"]));
    assert_eq!((p4["tdc"].as_u64(), p4["chi"].as_u64()), (Some(3), Some(2)));

    let f2 = json(&tdc(&["invariants", "friendship:2", "--brute-force"]));
    assert_eq!((f2["tdc"].as_u64(), f2["brute_force"].as_u64()), (Some(3), Some(3)));
}

#[test]
fn undefined_fields_are_explicit() {
    let e = json(&tdc(&["invariants", "empty:3"]));
    assert_eq!(e["tdc"], "undefined");
    assert_eq!(e["gamma_t"], "undefined");
}

#[test]
fn graph_input_forms_agree() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("c5.txt");
    std::fs::write(&edges, "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let g6 = dir.path().join("c5.g6");
    std::fs::write(&g6, "Dhc\n").unwrap();
    let edge_arg = format!("file:{}", edges.display());
    let g6_arg = format!("file:{}", g6.display());
    for arg in ["cycle:5", "g6:Dhc", "Dhc", edge_arg.as_str(), g6_arg.as_str()] {
        let v = json(&tdc(&["invariants", arg]));
        assert_eq!((v["n"].as_u64(), v["m"].as_u64(), v["tdc"].as_u64()), (Some(5), Some(5), Some(4)), "{arg}");
    }
    let piped = json(&tdc_stdin(&["invariants", "-"], "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"));
    assert_eq!(piped["tdc"], 4);
}

#[test]
fn perturb_examples() {
    let p6 = json(&tdc(&["perturb", "path:6", "--kind", "stability"]));
    assert_eq!(p6["value"], 1);
    assert_eq!(p6["witness"].as_array().unwrap().len(), 1);

    let k33 = json(&tdc(&["perturb", "complete_bipartite:3:3", "--kind", "stability"]));
    assert_eq!(k33["value"], 3);

    let c11 = json(&tdc(&["perturb", "cycle:11", "--kind", "bondage"]));
    assert_eq!(c11["value"], 1);
    assert_eq!(c11["witness"], serde_json::json!([[0, 1]]));

    let skip = json(&tdc(&[
        "perturb",
        "path:6",
        "--kind",
        "stability",
        "--convention",
        "skip_undefined",
    ]));
    assert_eq!(skip["convention"], "skip_undefined");
}

#[test]
fn build_and_pipe() {
    let corona = tdc(&["build", "ncorona", "path:4", "path:3"]);
    assert!(corona.status.success());
    let g6 = stdout(&corona);
    let v = json(&tdc_stdin(&["invariants", "-"], &g6));
    assert_eq!((v["n"].as_u64(), v["m"].as_u64()), (Some(16), Some(29)));

    let glued = tdc(&["build", "glue", "complete:4", "complete:5", "--r", "4"]);
    assert_eq!(stdout(&glued).trim(), "D~{");

    let explicit = tdc(&[
        "build", "glue", "cycle:4", "complete:3", "--clique1", "0", "--clique2", "2",
    ]);
    let v = json(&tdc_stdin(&["invariants", "-"], &stdout(&explicit)));
    assert_eq!((v["n"].as_u64(), v["tdc"].as_u64()), (Some(6), Some(4)));

    let comp = stdout(&tdc(&["build", "complement", "cycle:5"]));
    let v = json(&tdc_stdin(&["invariants", "-"], &comp));
    assert_eq!((v["n"].as_u64(), v["m"].as_u64(), v["tdc"].as_u64()), (Some(5), Some(5), Some(4)));

    assert_eq!(stdout(&tdc(&["build", "union", "complete:2", "complete:2"])).trim(), "C`");
    assert_eq!(stdout(&tdc(&["build", "cartesian", "complete:2", "complete:2"])).trim(), "Cr");
}

#[test]
fn check_coloring_verdicts() {
    let ok = tdc(&["check-coloring", "path:4", "0,1,2,0"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["td_coloring"], true);

    let bad = tdc(&["check-coloring", "path:4", "0,1,1,0"]);
    assert_eq!(bad.status.code(), Some(4));

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("col.txt");
    std::fs::write(&file, "3\n0 0\n1 1\n2 2\n3 0\n").unwrap();
    let from_file = tdc(&["check-coloring", "path:4", file.to_str().unwrap()]);
    assert_eq!(from_file.status.code(), Some(0));
}

#[test]
fn exit_codes() {
    assert_eq!(tdc(&["invariants", "not-a-graph"]).status.code(), Some(2));
    assert_eq!(tdc(&["invariants", "cycle:2"]).status.code(), Some(2));
    assert_eq!(tdc(&["invariants", "cycle:40"]).status.code(), Some(3));
    assert_eq!(tdc(&["invariants", "cycle:12", "--max-n", "10"]).status.code(), Some(3));
    assert_eq!(tdc(&["perturb", "empty:2", "--kind", "stability"]).status.code(), Some(5));
    assert_eq!(tdc(&["check-coloring", "empty:2", "0,0"]).status.code(), Some(5));
    assert_eq!(tdc(&["verify", "--claims", "bogus"]).status.code(), Some(2));
    assert_eq!(tdc(&["perturb", "path:4", "--kind", "sideways"]).status.code(), Some(2));
}

#[test]
fn verify_none_is_empty_and_succeeds() {
    let out = tdc(&["verify", "--claims", "none"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["kind"], "config");
    assert_eq!(lines[1]["kind"], "summary");
    assert_eq!(lines[1]["total"], 0);
}

#[test]
fn verify_paths_rows_and_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let out = tdc(&["verify", "--claims", "paths", "--output", path.to_str().unwrap()]);
    let text = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<Value> = text
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap())
        .filter(|v| v["kind"] == "verdict")
        .collect();
    assert_eq!(rows.len(), 11);
    // P_11 has TDC-number 7, one below the closed form.
    let p11 = rows.iter().find(|r| r["instance"] == "path:11").unwrap();
    assert_eq!((p11["expected"].as_str(), p11["computed"].as_str()), (Some("8"), Some("7")));
    assert_eq!(p11["verdict"], "violated");
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn verify_is_byte_identical_across_runs() {
    let args = ["verify", "--claims", "paths,ncorona,stability", "--seed", "7"];
    let a = tdc(&args);
    let b = tdc(&args);
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
    let table = tdc(&["verify", "--claims", "cycles", "--format", "table"]);
    assert!(stdout(&table).contains("formula.cycle"));
}

#[test]
fn report_rows_reproduce() {
    let out = tdc(&["verify", "--claims", "stability"]);
    let first: Value = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap())
        .find(|v| v["kind"] == "verdict")
        .unwrap();
    let cmd = first["reproduce"].as_str().unwrap();
    let args: Vec<&str> = cmd.split_whitespace().skip(1).collect();
    let again = json(&tdc(&args));
    assert_eq!(again["value"].to_string(), first["computed"].as_str().unwrap());
}

#[test]
fn explore_writes_findings() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("findings.jsonl");
    let out = tdc(&["explore", "--max-n", "5", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let findings: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    // Connected graphs on 2..=5 vertices with minimum degree at most 2.
    assert_eq!(findings.len(), 1 + 2 + 5 + 18);
    assert!(findings.iter().all(|f| f["population"] == "connected"));

    let all = tdc(&["explore", "--max-n", "4", "--all-graphs"]);
    let n = stdout(&all).lines().count();
    assert_eq!(n, 1 + 2 + 6);
}
