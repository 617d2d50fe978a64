//! End-to-end checks of the hamcheck binary: exit codes, text and JSON
//! output shapes, trace replay, and the corpus report flow.

use std::path::Path;
use std::process::{Command, Output};

use hamcheck_core::report::AgreementReport;
use hamcheck_core::trace::replay_trace;

fn hamcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hamcheck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn solve_reports_a_cycle_for_k4() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "k4.txt", "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    let out = hamcheck(&["solve", &graph]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("hamiltonian "), "got: {text}");
    assert!(text.contains("deletions 1"), "got: {text}");
}

#[test]
fn solve_json_on_petersen_reports_no_solution() {
    let out = hamcheck(&["solve", "name:petersen", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["outcome"], "not_hamiltonian");
    assert_eq!(doc["reason"], "no_solution");
    assert_eq!(doc["stats"]["dimension"], 6);
}

#[test]
fn solve_writes_a_replayable_trace() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("grid.jsonl");
    let out = hamcheck(&[
        "solve",
        "name:grid:3:4",
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let replay = replay_trace(&std::fs::read_to_string(&trace).unwrap()).unwrap();
    assert!(replay.matches);
}

#[test]
fn missing_graph_file_exits_two() {
    let out = hamcheck(&["solve", "/no/such/graph.txt"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error: "), "got: {err}");
}

#[test]
fn malformed_graph_file_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "bad.txt", "3 1\n1 99\n");
    let out = hamcheck(&["solve", &graph]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_generator_exits_two() {
    let out = hamcheck(&["solve", "name:moebius"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mcb_prints_dimension_and_weight() {
    let out = hamcheck(&["mcb", "name:petersen"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("dimension 6 weight 30"));
}

#[test]
fn grinberg_on_herschel_has_no_solutions() {
    let out = hamcheck(&["grinberg", "name:herschel"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("orders 4:8"), "got: {text}");
    assert!(text.contains("target 9"), "got: {text}");
    assert!(text.contains("solutions 0"), "got: {text}");
}

#[test]
fn oracle_json_finds_grid_cycle() {
    let out = hamcheck(&["oracle", "name:grid:2:3", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["outcome"], "hamiltonian");
    assert_eq!(doc["cycle"].as_array().unwrap().len(), 6);
}

#[test]
fn config_attempt_cap_zero_yields_method_incomplete() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "k4.txt", "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    let config = write(dir.path(), "caps.conf", "attempt_cap=0\n");
    let out = hamcheck(&["solve", &graph, "--config", &config]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("method_incomplete"));
}

#[test]
fn bad_config_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "k4.txt", "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    let config = write(dir.path(), "caps.conf", "attempt_cap=many\n");
    let out = hamcheck(&["solve", &graph, "--config", &config]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn corpus_run_writes_report_and_replayable_traces() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "named.corpus", "kind=named\n");
    let report_path = dir.path().join("report.json");
    let traces = dir.path().join("traces");
    let out = hamcheck(&[
        "corpus",
        &spec,
        "--out",
        report_path.to_str().unwrap(),
        "--traces",
        traces.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let report = AgreementReport::parse(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report.corpus_size, 9);
    assert!(report.check_invariants().is_ok());
    let k5 = report.rows.iter().find(|r| r.id == "k5").unwrap();
    assert_eq!(k5.agree, Some(false));
    let trace_ref = k5.trace_ref.as_ref().unwrap();
    let text = std::fs::read_to_string(traces.join(trace_ref)).unwrap();
    assert!(replay_trace(&text).unwrap().matches);
}

#[test]
fn corpus_without_out_prints_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "named.corpus", "kind=named\n");
    let out = hamcheck(&["corpus", &spec]);
    assert!(out.status.success());
    let report = AgreementReport::parse(&stdout(&out)).unwrap();
    assert_eq!(report.corpus_size, 9);
}
