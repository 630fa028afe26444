//! End-to-end tests of the `bruhat-flip` binary: output values, the
//! exit-code contract, report files, caching, and worker-count
//! independence.

use std::path::Path;
use std::process::Command;
use std::str::FromStr;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bruhat-flip"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_json(args: &[&str]) -> serde_json::Value {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "args {args:?} failed: {stderr}");
    serde_json::from_str(&stdout).expect("valid JSON on stdout")
}

#[test]
fn rtilde_prints_the_reference_polynomials() {
    let (code, out, _) = run(&["rtilde", "--group", "A3", "--u", "1234", "--v", "4231"]);
    assert_eq!((code, out.trim()), (0, "q^5 + 2q^3 + q"));

    let (code, out, _) = run(&["rtilde", "--group", "A3", "--u", "1234", "--v", "1234"]);
    assert_eq!((code, out.trim()), (0, "1"));

    // The increasing-path evaluation agrees, under any valid ordering.
    let (code, out, _) = run(&[
        "rtilde", "--group", "A3", "--u", "1234", "--v", "4231", "--method", "dyer",
    ]);
    assert_eq!((code, out.trim()), (0, "q^5 + 2q^3 + q"));
    let (code, out, _) = run(&[
        "rtilde",
        "--group",
        "A3",
        "--u",
        "1234",
        "--v",
        "4231",
        "--method",
        "dyer",
        "--ordering",
        "s2 s1 s3 s2 s1 s3",
    ]);
    assert_eq!((code, out.trim()), (0, "q^5 + 2q^3 + q"));

    // Pairs not below one another give the zero polynomial: distinct
    // elements of equal length, and a reversed pair.
    let (code, out, _) = run(&["rtilde", "--group", "A3", "--u", "3214", "--v", "4123"]);
    assert_eq!((code, out.trim()), (0, "0"));
    let (code, out, _) = run(&["rtilde", "--group", "A3", "--u", "4231", "--v", "1234"]);
    assert_eq!((code, out.trim()), (0, "0"));
}

#[test]
fn exit_codes_follow_the_contract() {
    // 2: bad diagram, bad element, bad ordering, bad flags, csv misuse.
    assert_eq!(run(&["group-info", "--group", "Q7"]).0, 2);
    assert_eq!(
        run(&["rtilde", "--group", "A3", "--u", "1234", "--v", "1111"]).0,
        2
    );
    assert_eq!(
        run(&[
            "rtilde", "--group", "A3", "--u", "1234", "--v", "4231", "--method", "dyer",
            "--ordering", "s1 s1",
        ])
        .0,
        2
    );
    assert_eq!(run(&["no-such-command"]).0, 2);
    assert_eq!(run(&["group-info", "--group", "A3", "--format", "csv"]).0, 2);
    // Non-crystallographic groups are rejected from congruence pools.
    assert_eq!(
        run(&["congruence", "--groups", "H3", "--max-length", "2"]).0,
        2
    );

    // 3: resource caps.
    let (code, _, stderr) = run(&["group-info", "--group", "A4", "--cap-group", "10"]);
    assert_eq!(code, 3, "stderr: {stderr}");

    // 0: a search with an empty result is still a success.
    let (code, out, _) = run(&["crowns", "--group", "B3"]);
    assert_eq!(code, 0);
    assert!(out.contains("0 5-crown interval(s)"));
}

#[test]
fn group_info_json_embeds_version_hash_and_invocation() {
    let v = run_json(&["group-info", "--group", "B3", "--format", "json"]);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["config_hash"].as_str().unwrap().len(), 16);
    assert!(v["invocation"]
        .as_str()
        .unwrap()
        .starts_with("bruhat-flip group-info"));
    assert_eq!(v["elements"], 48);
    assert_eq!(v["reflections"], 9);
    assert_eq!(v["w0_length"], 9);
    assert_eq!(v["crystallographic"], true);
}

#[test]
fn flipclasses_counts_and_csv_agree() {
    let (code, out, _) = run(&["flipclasses", "--group", "B2", "--u", "e", "--h", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("4 flipclasses"), "got: {out}");

    let (code, csv, _) = run(&[
        "flipclasses", "--group", "B2", "--u", "e", "--h", "2", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    // Header plus one line per class.
    assert_eq!(csv.lines().count(), 5);
    assert!(csv.lines().next().unwrap().starts_with("end,paths,c,"));

    let (code, out, _) = run(&[
        "flipclasses", "--group", "B2", "--u", "e", "--h", "2", "--end", "s1 s2",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("1 flipclasses"), "got: {out}");
}

#[test]
fn valence_factors_the_diamond() {
    let (code, out, _) = run(&[
        "valence", "--group", "B2", "--u", "e", "--v", "s1 s2", "--h", "2",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("x^4 + 4*x^2*y + 4*y^2  =  (x^2 + 2*y)^2"), "got: {out}");

    let (code, out, _) = run(&["valence", "--group", "A1", "--u", "e", "--v", "s1", "--h", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("x^2 + 2*y  =  (x^2 + 2*y)  (irreducible)"), "got: {out}");
}

#[test]
fn sweep_cache_cold_and_warm_runs_agree() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let args = |cache: &Path| {
        vec![
            "sweep".to_string(),
            "--group".into(),
            "B3".into(),
            "--h".into(),
            "2".into(),
            "--format".into(),
            "json".into(),
            "--cache".into(),
            cache.display().to_string(),
        ]
    };
    let a: Vec<String> = args(&cache);
    let a: Vec<&str> = a.iter().map(String::as_str).collect();
    let (code1, cold, _) = run(&a);
    assert_eq!(code1, 0);
    let entries = std::fs::read_dir(&cache).unwrap().count();
    assert!(entries > 0, "cache directory was populated");
    let (code2, warm, _) = run(&a);
    assert_eq!(code2, 0);
    assert_eq!(cold, warm, "cold and warm cache runs print identical reports");
}

#[test]
fn worker_count_does_not_change_sweep_output() {
    let one = run_json(&[
        "sweep", "--group", "A3", "--h", "3", "--format", "json", "--jobs", "1",
    ]);
    let four = run_json(&[
        "sweep", "--group", "A3", "--h", "3", "--format", "json", "--jobs", "4",
    ]);
    // The meta block differs (the --jobs flag is part of the invocation);
    // every computed field must not.
    for key in ["starts", "flipclasses", "distinct_valence_polynomials", "items"] {
        assert_eq!(one[key], four[key], "field {key}");
    }
    assert_eq!(one["flipclasses"], 15);
}

#[test]
fn verify_writes_reports_whose_strings_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("reports");
    let (code, stdout, stderr) = run(&[
        "verify",
        "--rows",
        "A1,A2,B2,G2",
        "--out-dir",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "stderr: {stderr}");
    assert!(stdout.contains("violations 0"));

    let table = std::fs::read_to_string(out_dir.join("table1.csv")).unwrap();
    let mut lines = table.lines();
    assert_eq!(
        lines.next().unwrap(),
        "type,h,elements_to_check,flipclasses,valence_polynomials,\
         irreducible_valence_polynomials,new_irreducible_valence_polynomials"
    );
    assert_eq!(lines.next().unwrap(), "A1,1,1,1,1,1,1");

    let gamma: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("gamma.json")).unwrap())
            .unwrap();
    assert_eq!(gamma["version"], env!("CARGO_PKG_VERSION"));
    let entries = gamma["entries"].as_array().unwrap();
    assert!(!entries.is_empty());
    for entry in entries {
        // Round trip: every canonical polynomial string in a report
        // re-parses to exactly the same canonical string.
        let key = entry["key"].as_str().unwrap();
        let poly = bipoly::BiPoly::from_str(key).unwrap();
        assert_eq!(poly.to_string(), key);
    }

    let violations: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("violations.json")).unwrap())
            .unwrap();
    assert_eq!(violations["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn table1_matches_reference_rows_and_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.csv");
    let (code, stdout, _) = run(&[
        "table1",
        "--rows",
        "A1,A2,B2,G2,A3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("all rows match the reference table"));
    assert!(stdout.contains("A3 h=3: elements 3, flipclasses 15, dpolys 4"));
    assert_eq!(std::fs::read_to_string(out).unwrap().lines().count(), 6);
}

#[test]
fn congruence_command_reports_clean_buckets() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("congruence_report.json");
    let (code, _, stderr) = run(&[
        "congruence",
        "--groups",
        "A2,B2",
        "--max-length",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "stderr: {stderr}");
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(report["pool"], serde_json::json!(["A2", "B2"]));
    assert_eq!(report["intervals_checked"], 37);
    assert_eq!(report["discrepancies"].as_array().unwrap().len(), 0);
    assert!(report["invocation"].as_str().unwrap().contains("--max-length 3"));
}
