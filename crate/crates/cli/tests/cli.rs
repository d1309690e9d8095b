use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn hodgerec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodgerec"))
        .args(args)
        .env_remove("HODGEREC_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn compute_prints_value_and_normalized_integer() {
    let o = hodgerec(&["compute", "--kind", "D", "--g", "2", "--index", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3/4\nnormalized: 6\n");

    let o = hodgerec(&["compute", "--kind", "d", "--g", "2", "--index", "1,1", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["numerator"], "2");
    assert_eq!(v["normalized_integer"], "16");
}

#[test]
fn empty_index_is_a_dash() {
    let o = hodgerec(&["compute", "--kind", "D", "--g", "0", "--index", "-"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("1/2\n"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["compute", "--kind", "X", "--g", "2", "--index", "1"][..],
        &["compute", "--kind", "D", "--g", "2", "--index", "1,x"],
        &["conjectures", "--g-max", "0", "--weight-max", "2"],
        &["table", "--g", "1", "--out", "/nonexistent/dir/table.csv"],
    ] {
        let o = hodgerec(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn genus_one_table() {
    let o = hodgerec(&["table", "--g", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "kind,g,index,numerator,denominator,normalized_integer\n\
         D,1,-,1,2,1\nD,1,1,1,4,1\nd,1,-,1,2,1\nd,1,1,1,2,2\n"
    );
}

#[test]
fn table_is_deterministic_and_counts_rows() {
    let a = hodgerec(&["table", "--g", "2", "--weight-max", "3"]);
    let b = hodgerec(&["table", "--g", "2", "--weight-max", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let body = stdout(&a);
    assert_eq!(body.lines().filter(|l| l.starts_with("D,")).count(), 6);
    assert_eq!(body.lines().filter(|l| l.starts_with("d,")).count(), 6);

    let j = hodgerec(&["table", "--g", "2", "--weight-max", "3", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 12);
}

#[test]
fn table_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let o = hodgerec(&["table", "--g", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&path).unwrap().lines().count(), 5);
}

#[test]
fn poly_reports_binomial_coefficients() {
    let o = hodgerec(&["poly", "--kind", "D", "--index", "2,1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for c in ["61", "364", "660", "360"] {
        assert!(text.contains(c), "{text}");
    }
}

#[test]
fn verify_exit_codes() {
    let ok = hodgerec(&["verify", "--suite", "golden"]);
    assert_eq!(ok.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(report["checks"], 84);

    let bad = hodgerec(&["verify", "--suite", "identity", "--n-max", "3"]);
    assert_eq!(bad.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&bad.stdout).unwrap();
    assert!(!report["failures"].as_array().unwrap().is_empty());
}

#[test]
fn conjecture_scan_holds_on_small_range() {
    let o = hodgerec(&["conjectures", "--g-max", "3", "--weight-max", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["violated"], 0);
}

#[test]
fn golden_export() {
    let o = hodgerec(&["golden", "--table", "values"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 85);
    let o = hodgerec(&["golden", "--table", "polynomials", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!rows.as_array().unwrap().is_empty());
}

fn first_record_line(path: &Path) -> String {
    fs::read_to_string(path).unwrap().lines().nth(1).unwrap().to_string()
}

#[test]
fn cache_flag_and_env_var() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("memo.jsonl");
    let p = path.to_str().unwrap();
    let o = hodgerec(&["--cache", p, "compute", "--kind", "D", "--g", "2", "--index", "2,1"]);
    assert_eq!(o.status.code(), Some(0));
    let saved = fs::read_to_string(&path).unwrap();
    assert!(saved.starts_with("{\"format\":\"hodgerec-cache\",\"version\":1}\n"));

    let o = Command::new(env!("CARGO_BIN_EXE_hodgerec"))
        .args(["--stats", "compute", "--kind", "D", "--g", "2", "--index", "2,1"])
        .env("HODGEREC_CACHE", p)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1/8\nnormalized: 2\n");
    assert!(stderr(&o).contains("0 misses"), "{}", stderr(&o));
    assert_eq!(fs::read_to_string(&path).unwrap(), saved);
}

#[test]
fn corrupted_cache_is_rejected_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("memo.jsonl");
    let p = path.to_str().unwrap();
    hodgerec(&["--cache", p, "compute", "--kind", "D", "--g", "2", "--index", "2,1"]);
    let line = first_record_line(&path);
    let broken = line.replace("\"numerator\":\"1\"", "\"numerator\":\"7\"");
    assert_ne!(line, broken);
    let text = fs::read_to_string(&path).unwrap().replacen(&line, &broken, 1);
    fs::write(&path, text).unwrap();

    let o = hodgerec(&["--cache", p, "compute", "--kind", "D", "--g", "2", "--index", "2,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("memo.jsonl:2:"), "{}", stderr(&o));

    fs::write(&path, "{\"format\":\"hodgerec-cache\",\"version\":2}\n").unwrap();
    let o = hodgerec(&["--cache", p, "compute", "--kind", "D", "--g", "1", "--index", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains(":1:"));
}
