use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

use srg_cli::report::Report;
use srg_core::connectivity::clique_cut;
use srg_core::constructions::{lattice, triangular};
use srg_core::graph6;

fn kappa2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kappa2")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

fn report(o: &Output) -> Report {
    serde_json::from_str(&stdout(o)).unwrap()
}

#[test]
fn construct_writes_graph6() {
    let o = kappa2(&["construct", "--family", "triangular", "--m", "7"]);
    assert!(o.status.success());
    assert_eq!(graph6::decode(stdout(&o).trim().as_bytes()).unwrap().order(), 21);
    let o = kappa2(&["construct", "--family", "symplectic", "--r", "2", "--q", "3"]);
    assert_eq!(graph6::decode(stdout(&o).trim().as_bytes()).unwrap().order(), 40);
}

#[test]
fn construct_rejects_out_of_range_parameters() {
    let o = kappa2(&["construct", "--family", "lattice", "--n", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("out of range"));
    let o = kappa2(&["construct", "--family", "lattice"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn decide_from_file_with_label_map() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("t6.g6");
    let g6s = g6.to_str().unwrap();
    assert!(
        kappa2(&["construct", "--family", "triangular", "--m", "6", "--out", g6s])
            .status
            .success()
    );
    let labels = format!("{g6s}.labels.json");
    assert!(Path::new(&labels).exists());
    let o = kappa2(&["decide", "--input", g6s, "--labels", &labels]);
    assert!(o.status.success());
    let r = report(&o);
    assert_eq!(r.id, "T(6)");
    assert_eq!(r.kappa2.value, Some(9));
    assert_eq!(r.certificate.as_ref().unwrap().A, ["{1,2}", "{1,3}", "{2,3}"]);
    assert!(r.recheck().unwrap().is_some());

    let plain = report(&kappa2(&["decide", "--input", g6s]));
    assert!(plain.id.starts_with("g6:"));
    assert_eq!(plain.certificate.as_ref().unwrap().A, ["0", "1", "5"]);
}

#[test]
fn decide_verdicts() {
    let t8 = report(&kappa2(&["decide", "--family", "triangular", "--m", "8"]));
    assert_eq!(
        (t8.verdict.as_deref(), t8.kappa2.value, t8.bound),
        (Some("Counterexample"), Some(15), Some(16))
    );
    let chang = report(&kappa2(&["decide", "--family", "chang", "--index", "2"]));
    assert_eq!(
        (chang.verdict.as_deref(), chang.kappa2.value),
        (Some("OK_Equality"), Some(16))
    );
    let petersen_co = report(&kappa2(&["decide", "--family", "triangular", "--m", "5"]));
    assert_eq!(petersen_co.verdict.as_deref(), Some("OK_NoValidCut"));
    assert_eq!(petersen_co.kappa2.value, None);
    let co = report(&kappa2(&[
        "decide",
        "--family",
        "clebsch",
        "--complement",
        "--threads",
        "4",
    ]));
    assert_eq!(co.id, "complement(Clebsch)");
    let v = json(&kappa2(&["decide", "--family", "paley", "--q", "13"]));
    for key in [
        "schema",
        "id",
        "params",
        "spectrum",
        "kappa",
        "kappa2",
        "verdict",
        "rule",
        "certificate",
        "stats",
        "timing_ms",
        "version",
    ] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["schema"], 1);
    assert_eq!(v["params"]["lambda"], 2);
}

#[test]
fn decide_budget_exit_code() {
    let o = kappa2(&["decide", "--family", "triangular", "--m", "8", "--node-budget", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(report(&o).verdict.as_deref(), Some("Undecided"));
}

#[test]
fn decide_rejects_disconnected_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two.g6");
    std::fs::write(&path, "C?\n").unwrap();
    let o = kappa2(&["decide", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

fn batch(contents: &str, extra: &[&str]) -> (Output, Vec<Value>) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.g6");
    std::fs::write(&path, contents).unwrap();
    let mut args = vec!["batch", "--input", path.to_str().unwrap()];
    args.extend(extra);
    let o = kappa2(&args);
    let lines = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    (o, lines)
}

#[test]
fn batch_reports_in_input_order() {
    let t6 = graph6::encode_string(&triangular(6).unwrap().graph);
    let l4 = graph6::encode_string(&lattice(4).unwrap().graph);
    let (o, lines) = batch(&format!("{t6}\n{l4}\n"), &["--threads", "2"]);
    assert!(o.status.success());
    let values: Vec<_> = lines.iter().map(|l| l["kappa2"]["value"].as_u64().unwrap()).collect();
    assert_eq!(values, [9, 8]);
    assert_eq!(lines[1]["line"], 2);

    let (_, skipped) = batch(&format!("{t6}\n{l4}\n"), &["--skip", "1"]);
    assert_eq!(skipped.len(), 1);
    assert_eq!(skipped[0]["kappa2"]["value"], 8);
}

#[test]
fn batch_edge_cases() {
    let (o, lines) = batch("", &[]);
    assert!(o.status.success());
    assert!(lines.is_empty());

    let (o, lines) = batch("C?\n!!!\nC~\n", &[]);
    assert!(o.status.success());
    assert_eq!(lines.len(), 3);
    assert!(lines.iter().all(|l| l["error"].is_string()));
    assert!(lines[0]["error"].as_str().unwrap().contains("disconnected"));
}

#[test]
fn verify_cut_with_bracketed_labels() {
    let t6 = triangular(6).unwrap();
    let line = t6.lines.as_ref().unwrap()[0].clone();
    let cert = clique_cut(&t6.graph, &line).unwrap();
    let cut = t6.label_set(&cert.s).join(",");
    let o = kappa2(&["verify-cut", "--family", "triangular", "--m", "6", "--cut", &cut]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["valid"], true);
    assert_eq!(v["size"], 9);

    let short = t6.label_set(&cert.s)[1..].join(",");
    let o = kappa2(&["verify-cut", "--family", "triangular", "--m", "6", "--cut", &short]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["valid"], false);

    let o = kappa2(&["verify-cut", "--family", "triangular", "--m", "6", "--cut", "{9,9}"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn delta_check() {
    let v = json(&kappa2(&[
        "delta-check",
        "--family",
        "symplectic",
        "--r",
        "2",
        "--q",
        "2",
    ]));
    assert_eq!(
        (v["applies"].as_bool(), v["predicted_cut_size"].as_u64()),
        (Some(true), Some(9))
    );
    assert_eq!(v["lines"], v["lines_valid_at_predicted_size"]);
    let v = json(&kappa2(&["delta-check", "--family", "triangular", "--m", "5"]));
    assert_eq!(v["applies"], false);
    assert_eq!(kappa2(&["delta-check", "--family", "clebsch"]).status.code(), Some(2));
}

#[test]
fn oracle_matches_known_values() {
    let v = json(&kappa2(&["oracle", "--family", "lattice", "--n", "3"]));
    assert_eq!(v["kappa2"]["value"], 5);
    assert_eq!(
        kappa2(&["oracle", "--family", "symplectic", "--r", "2", "--q", "3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn census_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("census.json");
    let o = kappa2(&["census", "--max-v", "17", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("row"));
    let rows: Vec<Value> = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(|r| r["computed"] == r["published"]));
    assert_eq!(kappa2(&["census", "--max-v", "41"]).status.code(), Some(2));
}
