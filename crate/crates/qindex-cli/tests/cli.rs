//! End-to-end tests of the `qindex` binary: output formats, exit codes,
//! stdin piping, schema conformance of the JSON formats, and worker-count
//! independence of sweep output.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const CSV_HEADER: &str = "graph6,n,m,min_degree,max_degree,degeneracy,\
q,mu,bound_main,bound_cor1,bound_cor2,bound_thm_a_mu,bound_lipa,bound_llt,\
equality_main,equality_cor1,equality_thm_a,\
gap_main,gap_cor1,gap_cor2,gap_thm_a_mu,gap_lipa,gap_llt";

fn qindex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qindex"))
        .args(args)
        .env_remove("QINDEX_WORKERS")
        .output()
        .expect("binary should spawn")
}

fn qindex_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qindex"))
        .args(args)
        .env_remove("QINDEX_WORKERS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary should spawn");
    child
        .stdin
        .take()
        .expect("stdin is piped")
        .write_all(input.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary should finish")
}

fn stdout_of(out: &Output) -> String {
    assert!(
        out.status.success(),
        "expected success, got {:?}; stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn load_schema(name: &str) -> jsonschema::JSONSchema {
    let path = format!("{}/schemas/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).expect("schema file exists");
    let schema: serde_json::Value = serde_json::from_str(&text).expect("schema parses");
    jsonschema::JSONSchema::options()
        .with_draft(jsonschema::Draft::Draft7)
        .compile(&schema)
        .expect("schema compiles")
}

fn assert_valid(schema: &jsonschema::JSONSchema, line: &str) {
    let value: serde_json::Value = serde_json::from_str(line).expect("row parses as JSON");
    let messages: Vec<String> = match schema.validate(&value) {
        Ok(()) => Vec::new(),
        Err(errors) => errors.map(|e| e.to_string()).collect(),
    };
    assert!(messages.is_empty(), "schema violations for {line}: {messages:?}");
}

#[test]
fn analyze_csv_triangle() {
    let out = stdout_of(&qindex(&["analyze", "--g6", "Bw", "--format", "csv"]));
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    let row = lines.next().expect("one data row");
    assert_eq!(
        row,
        "Bw,3,3,2,2,2,4,2,4,4,4,2,4,4,true,true,true,0,0,0,0,0,0"
    );
    assert_eq!(lines.next(), None);
}

#[test]
fn analyze_csv_single_vertex() {
    let out = stdout_of(&qindex(&["analyze", "--g6", "@", "--format", "csv"]));
    let row = out.lines().nth(1).expect("one data row");
    assert_eq!(
        row,
        "@,1,0,0,0,0,0,0,0,0,0,0,0,0,true,true,true,0,0,0,0,0,0"
    );
}

#[test]
fn analyze_human_path_from_edge_file() {
    let path = std::env::temp_dir().join(format!("qindex-cli-p4-{}.txt", std::process::id()));
    std::fs::write(&path, "4 3\n0 1\n1 2\n2 3\n").expect("temp file writes");
    let out = stdout_of(&qindex(&["analyze", "--edges", path.to_str().unwrap()]));
    std::fs::remove_file(&path).ok();
    // P4: q = 2 + sqrt(2), main bound = (3 + sqrt(17)) / 2, both strict.
    assert!(out.contains("n=4 m=3 min_degree=1 max_degree=2 degeneracy=1"), "{out}");
    assert!(out.contains("q = 3.41421"), "{out}");
    assert!(out.contains("bound_main     = 3.56155 (strict"), "{out}");
    assert!(out.contains("bound_cor1     = 4.00000 (strict"), "{out}");
}

#[test]
fn gen_snk_reference_values() {
    assert_eq!(stdout_of(&qindex(&["gen", "--kind", "snk", "--n", "4", "--k", "2"])), "C}\n");
    assert_eq!(stdout_of(&qindex(&["gen", "--kind", "snk", "--n", "1", "--k", "1"])), "@\n");
}

#[test]
fn gen_random_is_seeded_and_piped_analyze_counts_rows() {
    let first = stdout_of(&qindex(&[
        "gen", "--kind", "random-degenerate", "--n", "6", "--k", "2", "--seed", "11",
        "--count", "4",
    ]));
    let second = stdout_of(&qindex(&[
        "gen", "--kind", "random-degenerate", "--n", "6", "--k", "2", "--seed", "11",
        "--count", "4",
    ]));
    assert_eq!(first, second, "generation must be deterministic in the seed");
    assert_eq!(first.lines().count(), 4);

    let analyzed = qindex_stdin(&["analyze", "--stdin", "--format", "csv"], &first);
    let table = stdout_of(&analyzed);
    // Header plus one row per piped graph.
    assert_eq!(table.lines().count(), 5);
    assert!(table.starts_with(CSV_HEADER));
    for row in table.lines().skip(1) {
        assert_eq!(row.split(',').count(), 23, "{row}");
    }
}

#[test]
fn encode_decode_roundtrip() {
    let edges = stdout_of(&qindex(&["decode", "--g6", "C}"]));
    assert_eq!(edges, "4 5\n0 1\n0 2\n0 3\n1 2\n1 3\n");
    let re_encoded = stdout_of(&qindex_stdin(&["encode", "--stdin"], &edges));
    assert_eq!(re_encoded, "C}\n");
}

#[test]
fn analyze_json_rows_conform_to_schema() {
    let schema = load_schema("bound_report.schema.json");
    let batch = stdout_of(&qindex(&[
        "gen", "--kind", "random-degenerate", "--n", "7", "--k", "3", "--seed", "5",
        "--count", "5",
    ]));
    let input = format!("@\nBw\n{batch}");
    let out = stdout_of(&qindex_stdin(&["analyze", "--stdin", "--format", "json"], &input));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 7);
    for line in lines {
        assert_valid(&schema, line);
    }
}

#[test]
fn sweep_reports_conform_to_schema() {
    let schema = load_schema("search_report.schema.json");
    for args in [
        vec!["verify", "--target", "bound", "--n", "4", "--format", "json"],
        vec!["verify", "--target", "q", "--n", "5", "--k", "2", "--format", "json"],
        vec!["verify", "--target", "edges", "--n", "5", "--k", "2", "--format", "json"],
        vec!["search-extremal", "--target", "mu", "--n", "5", "--k", "1", "--format", "json"],
    ] {
        let out = stdout_of(&qindex(&args));
        assert_valid(&schema, out.trim_end());
    }
}

#[test]
fn verify_exit_zero_and_summary_fields() {
    let out = qindex(&["verify", "--target", "q", "--n", "5", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("graphs scanned: 943"), "{text}");
    assert!(text.contains("violations: 0"), "{text}");
    assert!(text.contains("unique up to isomorphism: true"), "{text}");
}

#[test]
fn verify_csv_is_tightness_histogram() {
    let out = stdout_of(&qindex(&["verify", "--target", "bound", "--n", "4", "--format", "csv"]));
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("log2_bin,count"));
    assert_eq!(lines.next(), Some("zero,28"));
}

#[test]
fn usage_errors_exit_two() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["analyze", "--g6", "!!"],
        vec!["analyze", "--g6", "Bw", "--edges", "/nonexistent"],
        vec!["verify", "--target", "q", "--n", "5"],
        vec!["verify", "--target", "bound", "--n", "9"],
        vec!["verify", "--target", "bound", "--n", "8"],
        vec!["encode", "--g6", "Bw"],
        vec!["gen", "--kind", "snk", "--n", "3", "--k", "5"],
    ];
    for args in cases {
        let out = qindex(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(out.stdout.is_empty(), "usage errors must not write data: {args:?}");
        assert!(!out.stderr.is_empty(), "diagnostic expected on stderr: {args:?}");
    }
}

#[test]
fn worker_count_does_not_change_output() {
    let flagged = stdout_of(&qindex(&[
        "verify", "--target", "bound", "--n", "5", "--workers", "1", "--format", "json",
    ]));
    let from_env = Command::new(env!("CARGO_BIN_EXE_qindex"))
        .args(["verify", "--target", "bound", "--n", "5", "--format", "json"])
        .env("QINDEX_WORKERS", "3")
        .output()
        .expect("binary should spawn");
    assert_eq!(flagged, stdout_of(&from_env));
}
