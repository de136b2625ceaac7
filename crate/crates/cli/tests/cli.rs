//! End-to-end tests of the `signbounds` binary: flag handling, exact
//! table contents, byte determinism, and the exit-code contract
//! (0 all-pass, 1 verification failure, 2 usage/parse error).

use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_signbounds"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn bounds_single_tuple_matches_hand_computed_row() {
    let out = run(&["--cmd", "bounds", "--s", "1", "--k", "2", "--kprime", "1", "--d", "2",
        "--d0", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "s,k,kprime,d,d0,main_uniform,bpr8,tightness_lower,ratio\n\
         1,2,1,2,1,82,30,3,2.733333\n"
    );
}

#[test]
fn bounds_json_keeps_exact_ratio() {
    let out = run(&["--cmd", "bounds", "--s", "1", "--k", "2", "--kprime", "1", "--d", "2",
        "--d0", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows[0]["main_uniform"], "82");
    assert_eq!(rows[0]["bpr8"], "30");
    assert_eq!(rows[0]["ratio"], "41/15");
}

#[test]
fn bounds_sweep_is_ordered_and_byte_deterministic() {
    let args = ["--cmd", "bounds", "--s", "1", "--k", "2", "--kprime", "1", "--d", "2..4",
        "--d0", "1"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    let ds: Vec<&str> =
        text.lines().skip(1).map(|l| l.split(',').nth(3).unwrap()).collect();
    assert_eq!(ds, vec!["2", "3", "4"]);
}

#[test]
fn empty_sweep_is_a_usage_error() {
    let out = run(&["--cmd", "bounds", "--s", "1", "--k", "2", "--kprime", "1", "--d", "4..2",
        "--d0", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("empty sweep"));
}

#[test]
fn invalid_tuple_and_missing_flag_are_usage_errors() {
    let out = run(&["--cmd", "bounds", "--s", "1", "--k", "2", "--kprime", "3", "--d", "2",
        "--d0", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("kprime=3"));

    let out = run(&["--cmd", "bounds", "--s", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--k"));
}

#[test]
fn compare_labels_the_smaller_bound() {
    let out = run(&["--cmd", "compare", "--s", "6", "--k", "3", "--kprime", "1", "--d", "3",
        "--d0", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = text.lines().nth(1).unwrap();
    assert!(row.ends_with(",refined"), "{row}");
}

#[test]
fn verify_builtin_corpus_passes() {
    let out = run(&["--cmd", "verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 51, "header plus 50 corpus rows");
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")), "all rows pass");
}

#[test]
fn corrupted_oracle_counts_fail_verification() {
    let out = run(&["--cmd", "verify", "--corrupt-oracle", "1000000"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).lines().skip(1).all(|l| l.ends_with(",false")));
}

#[test]
fn verify_reads_univariate_instance_files() {
    let mut file = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    write!(file, r#"{{"nvars":1,"family":[{{"terms":[{{"exps":[1],"coef":"1/1"}}]}}]}}"#)
        .unwrap();
    let out = run(&["--cmd", "verify", "--input", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = text.lines().nth(1).unwrap();
    // One polynomial X: cells -, 0, + give three components under bound 32.
    assert!(row.contains("exact-univariate,3,32,true"), "{row}");
}

#[test]
fn verify_counts_plane_quadrants_on_the_grid() {
    let mut file = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    write!(
        file,
        r#"{{"nvars":2,"family":[{{"terms":[{{"exps":[1,0],"coef":"1"}}]}},
             {{"terms":[{{"exps":[0,1],"coef":"1"}}]}}]}}"#
    )
    .unwrap();
    let out =
        run(&["--cmd", "verify", "--input", file.path().to_str().unwrap(), "--resolution", "32"]);
    assert_eq!(out.status.code(), Some(0));
    let row = stdout(&out).lines().nth(1).unwrap().to_string();
    // The coordinate axes carve the plane into four strict quadrants.
    assert!(row.contains("grid-32,4,"), "{row}");
}

#[test]
fn malformed_instance_reports_position_and_exits_2() {
    let mut file = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    write!(file, r#"{{"family":[]}}"#).unwrap();
    let out = run(&["--cmd", "verify", "--input", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("nvars") && err.contains("line"), "{err}");
}

#[test]
fn tightness_reproduces_the_closed_form() {
    let out = run(&["--cmd", "tightness", "--s", "2", "--d", "2", "--d0", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = text.lines().nth(1).unwrap();
    let cells: Vec<&str> = row.split(',').collect();
    assert_eq!(cells[4], "15", "strict total");
    assert_eq!(cells[5], "15", "closed form");
    assert_eq!(cells[7], "true");
}

#[test]
fn grassmannian_witness_value() {
    let out = run(&["--cmd", "grassmannian", "--n", "3", "--k", "1", "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "n,k,d,bound\n3,1,2,5098\n");
}

#[test]
fn counterexample_overshoots_its_degree_product() {
    let out = run(&["--cmd", "counterexample", "--d", "4", "--k", "3", "--m", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "d,k,m,count,closed_form,degree_product,exceeds,pass\n\
         4,3,3,128,128,48,true,true\n"
    );
}

#[test]
fn counterexample_cap_is_enforced() {
    let out = run(&["--cmd", "counterexample", "--d", "4", "--k", "3", "--m", "3", "--cap",
        "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cap"));
}

#[test]
fn output_file_matches_stdout_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let to_stdout = run(&["--cmd", "bounds", "--s", "1..2", "--k", "2", "--kprime", "1",
        "--d", "2", "--d0", "1"]);
    let to_file = run(&["--cmd", "bounds", "--s", "1..2", "--k", "2", "--kprime", "1",
        "--d", "2", "--d0", "1", "--output", path.to_str().unwrap()]);
    assert_eq!(to_file.status.code(), Some(0));
    assert!(to_file.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), to_stdout.stdout);
}
