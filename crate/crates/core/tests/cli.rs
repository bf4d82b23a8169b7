use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn idrad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idrad"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn doc(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const A2: &str = r#"{"field":{"prime":101},"quiver":{"vertices":2,"arrows":[{"name":"a","source":1,"target":2}]},"relations":[]}"#;

fn lines(out: &Output) -> Vec<serde_json::Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn check_reports_and_summarizes() {
    let f = doc(A2);
    let out = idrad(&["check", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let l = lines(&out);
    assert_eq!(l.len(), 2);
    assert_eq!(l[0]["gldim"], serde_json::json!({"kind": "finite", "n": 1}));
    assert_eq!(l[0]["id_j2"], serde_json::json!({"kind": "neginf"}));
    assert_eq!(l[1]["summary"]["claims"]["C1"]["confirmed"], 1);
    assert!(l[0].get("elapsed_ms").is_none());
}

#[test]
fn infinite_values_carry_certificates() {
    let f = doc(r#"{"quiver":{"vertices":1,"arrows":[{"name":"x","source":1,"target":1}]},"relations":[["x","x"]]}"#);
    let out = idrad(&["check", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let l = lines(&out);
    assert_eq!(l[0]["gldim"]["kind"], "infinite");
    assert!(l[0]["gldim"]["certificate"]["type"].is_string());
    assert_eq!(l[0]["id_j"]["kind"], "infinite");
}

#[test]
fn info_prints_invariants() {
    let f = doc(A2);
    let out = idrad(&["info", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dim"], 3);
    assert_eq!(v["basis"], serde_json::json!(["e1", "e2", "a"]));
    assert_eq!(v["pd_simples"], serde_json::json!(["1", "0"]));
    assert_eq!(v["id_simples"], serde_json::json!(["0", "1"]));
}

#[test]
fn operational_errors_exit_one() {
    let bad = doc(r#"{"quiver":{"vertices":2,"arrows":[{"name":"a","source":1,"target":2}]},"relations":[["a","b"]]}"#);
    let out = idrad(&["check", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("relations[0][1]"));

    let unknown = doc(&A2.replace("\"relations\"", "\"colour\":1,\"relations\""));
    assert_eq!(idrad(&["check", unknown.path().to_str().unwrap()]).status.code(), Some(1));

    let semisimple = doc(r#"{"quiver":{"vertices":1,"arrows":[]}}"#);
    assert_eq!(idrad(&["check", semisimple.path().to_str().unwrap()]).status.code(), Some(1));

    assert_eq!(idrad(&["check", "/nonexistent/file.json"]).status.code(), Some(1));
    assert_eq!(idrad(&["--prime", "100", "scan", "radsq", "--max-vertices", "1"]).status.code(), Some(1));
}

#[test]
fn scan_with_csv_and_out_file() {
    let out_file = NamedTempFile::new().unwrap();
    let out = idrad(&[
        "scan",
        "nakayama",
        "--shape",
        "linear",
        "--max-vertices",
        "4",
        "--format",
        "csv",
        "--out",
        out_file.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(out_file.path()).unwrap();
    // header + 1 + 2 + 5 series
    assert_eq!(text.lines().count(), 9);
    assert!(text.starts_with("algebra_id,label,"));
    let summary: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(summary["summary"]["algebras"], 8);
}

#[test]
fn timing_is_opt_in() {
    let out = idrad(&["--timing", "scan", "nakayama", "--shape", "cyclic", "--max-vertices", "1", "--max-len", "3"]);
    let l = lines(&out);
    assert_eq!(l.len(), 3);
    assert!(l[0]["elapsed_ms"].is_u64());
}

#[test]
fn document_prime_wins_over_flag() {
    let f = doc(A2);
    let out = idrad(&["--prime", "7", "check", f.path().to_str().unwrap()]);
    assert_eq!(lines(&out)[0]["prime"], 101);
    let f = doc(r#"{"quiver":{"vertices":2,"arrows":[{"name":"a","source":1,"target":2}]}}"#);
    let out = idrad(&["--prime", "7", "check", f.path().to_str().unwrap()]);
    assert_eq!(lines(&out)[0]["prime"], 7);
}
