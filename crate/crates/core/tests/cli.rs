use std::process::{Command, Output};

use serde_json::Value;

fn partmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partmod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON object per line"))
        .collect()
}

#[test]
fn classify_reports_product() {
    let out = partmod(&[
        "classify", "--p", "2", "--n", "9", "--lhs", "5,3,1+", "--rhs", "8,1", "--json",
    ]);
    assert!(out.status.success());
    let records = json_lines(&out);
    assert_eq!(records.len(), 1);
    let r = &records[0];
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["payload"]["verdict"], "Irreducible");
    assert_eq!(r["payload"]["product"], "4,3,2");
    assert_eq!(r["payload"]["citations"][0], "split-natural-char2");
}

#[test]
fn scan_only_irreducible() {
    let out = partmod(&[
        "scan",
        "--p",
        "3",
        "--n",
        "6",
        "--only",
        "irreducible",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let records = json_lines(&out);
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["payload"]["lhs"], "4,1,1+");
    assert_eq!(records[0]["payload"]["rhs"], "4,1,1-");
    assert_eq!(records[0]["payload"]["product"], "4,2");
}

#[test]
fn mullineux_fixed() {
    let out = partmod(&["mullineux", "--p", "3", "7,3,2", "--json"]);
    assert!(out.status.success());
    let r = &json_lines(&out)[0]["payload"];
    assert_eq!(r["fixed"], true);
    assert_eq!(r["image"], "7,3,2");
}

#[test]
fn scan_csv_has_header_and_quoted_labels() {
    let out = partmod(&["scan", "--p", "2", "--n", "6", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("p,n,lhs,rhs,verdict,product,mullineux_partner,citations")
    );
    let rows: Vec<&str> = lines.collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r.starts_with("2,6,")));
}

#[test]
fn output_is_deterministic() {
    let args = ["scan", "--p", "3", "--n", "7", "--json", "--jobs", "3"];
    let a = partmod(&args);
    let b = partmod(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_one_with_clean_stdout() {
    for args in [
        vec!["classify", "--p", "2"],
        vec!["classify", "--p", "5", "--lhs", "6", "--rhs", "6"],
        vec!["nodes", "--p", "2", "3,5"],
        vec!["scan", "--p", "2", "--n", "6", "--only", "maybe"],
        vec!["frobnicate"],
    ] {
        let out = partmod(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn nodes_reports_signatures() {
    let out = partmod(&["nodes", "--p", "2", "5,3,1", "--json"]);
    assert!(out.status.success());
    let r = &json_lines(&out)[0]["payload"];
    assert_eq!(r["normal_count"], 1);
    assert_eq!(r["js"], true);
    assert_eq!(
        r["residues"][0]["good"],
        serde_json::json!({"row": 1, "col": 5})
    );
    assert_eq!(r["residues"][1]["phi"], 2);
}

#[test]
fn oracle_commands() {
    let out = partmod(&["oracle", "dim", "--p", "2", "5,2", "--json"]);
    assert!(out.status.success());
    let r = &json_lines(&out)[0]["payload"];
    assert_eq!(
        (r["rank"].as_u64(), r["syt"].as_u64()),
        (Some(14), Some(14))
    );

    let out = partmod(&[
        "oracle",
        "verify-branching",
        "--p",
        "3",
        "--max-n",
        "8",
        "--json",
    ]);
    assert!(out.status.success());
    assert!(json_lines(&out)
        .iter()
        .all(|r| r["payload"]["holds"] == true));

    let out = partmod(&[
        "oracle",
        "verify-classifier",
        "--p",
        "3",
        "--max-n",
        "7",
        "--json",
    ]);
    assert!(out.status.success());
    let rows = json_lines(&out);
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["payload"]["holds"] == true));
}

#[test]
fn oracle_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_partmod"))
        .args(["oracle", "dim", "--p", "2", "5,2"])
        .env("PARTMOD_ORACLE_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn selftest_subset() {
    let out = partmod(&[
        "selftest",
        "--only",
        "fixed-family,classifier-instances",
        "--json",
    ]);
    assert!(out.status.success());
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r["payload"]["failure_count"] == 0));
}
