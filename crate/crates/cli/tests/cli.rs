//! End-to-end tests of the binary: exit codes, JSON output shape, and
//! text/JSON agreement on dimensions.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trialgebra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn check_passing_entry_exits_zero() {
    let out = run(&["check", "--entry", "TH2.4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let report_lines = text
        .lines()
        .filter(|l| !l.starts_with("RESULT") && l.ends_with("PASS"))
        .count();
    assert_eq!(report_lines, 12); // 9 axioms + 3 twist reports
    assert!(text.contains("RESULT: PASS"));
}

#[test]
fn check_failing_entry_exits_one_with_witness() {
    let out = run(&["check", "--entry", "TH2.9"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("RESULT: FAIL"));
    assert!(text.contains("witnesses"));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["check"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["check", "--entry", "TH9.99"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_errors_name_file_line_and_field() {
    let dir = std::env::temp_dir().join("trialgebra-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.json");
    std::fs::write(&path, r#"{ "dim": 2, "alpha": [["1","0"],["0", 3]] }"#).unwrap();
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("broken.json"), "{err}");
    assert!(err.contains("alpha"), "{err}");
    assert!(err.contains("line"), "{err}");
}

#[test]
fn centroid_dimensions_agree_between_text_and_json() {
    let text = stdout(&run(&["centroid", "--entry", "TH3.6"]));
    assert!(text.contains("dimension: 3"), "{text}");
    let json_out = stdout(&run(&["centroid", "--entry", "TH3.6", "--format", "json"]));
    let value: serde_json::Value = serde_json::from_str(&json_out).expect("valid JSON");
    assert_eq!(value["dimension"], 3);
    assert_eq!(value["space"], "centroid");
    assert_eq!(value["basis"].as_array().unwrap().len(), 3);
}

#[test]
fn derivations_convention_flag() {
    let minus = stdout(&run(&["derivations", "--entry", "TH2.4"]));
    assert!(minus.contains("dimension: 1"));
    let plus = stdout(&run(&[
        "derivations", "--entry", "TH2.4", "--convention", "plus", "--format", "json",
    ]));
    let value: serde_json::Value = serde_json::from_str(&plus).unwrap();
    assert_eq!(value["convention"], "plus");
    assert_eq!(value["dimension"], 1);
}

#[test]
fn iso_self_is_identity_witness() {
    let out = run(&["iso", "TH2.1", "TH2.1", "--prime", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("yes"), "{text}");
    assert!(text.contains("[ 1  0 ]"), "{text}");
    assert!(text.contains("[ 0  1 ]"), "{text}");
}

#[test]
fn parameterized_entry_warns_and_uses_defaults() {
    let out = run(&["check", "--entry", "TH3.3"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("default"), "{err}");
    assert_eq!(out.status.code(), Some(0));
    // Explicit parameters silence the warning.
    let out = run(&["check", "--entry", "TH3.3", "--params", "a=2"]);
    assert!(String::from_utf8_lossy(&out.stderr).is_empty());
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn catalog_list_and_show() {
    let list = stdout(&run(&["catalog", "list"]));
    assert_eq!(list.lines().count(), 34);
    assert!(list.contains("TH3.21"));
    let show = stdout(&run(&["catalog", "show", "TH2.12"]));
    assert!(show.contains("middle: e1 * e1 = (1, 0)"), "{show}");
    assert!(show.contains("alpha(e1) = (1, 0)"), "{show}");
}

#[test]
fn construct_roundtrips_through_check() {
    let dir = std::env::temp_dir().join("trialgebra-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("opposite.json");
    let out = run(&[
        "construct", "opposite", "--entry", "TH3.6", "-o", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"provenance\": \"opposite of TH3.6\""));
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "opposite of a passing entry passes");
}

#[test]
fn exported_files_reload_identically() {
    let dir = std::env::temp_dir().join(format!("trialgebra-export-{}", std::process::id()));
    let out = run(&["catalog", "export", "--dir", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let entries: Vec<PathBuf> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    assert_eq!(entries.len(), 34);
    // Re-export is bit-exact.
    let before = std::fs::read_to_string(dir.join("TH2.9.json")).unwrap();
    let out = run(&["catalog", "export", "--dir", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let after = std::fs::read_to_string(dir.join("TH2.9.json")).unwrap();
    assert_eq!(before, after);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn catalog_verify_emits_json_report() {
    let out = run(&["catalog", "verify", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(value["entries"].as_array().unwrap().len() >= 34);
    assert!(value["discrepancies"].as_array().unwrap().iter().any(|d| {
        d["kind"] == "axiom-failure" && d["id"] == "TH2.9"
    }));
}

#[test]
fn fingerprint_reports_centroid_dimension() {
    let out = stdout(&run(&["fingerprint", "--entry", "TH2.4", "--format", "json"]));
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["dim_centroid"], 2);
    assert_eq!(value["dim"], 2);
}
