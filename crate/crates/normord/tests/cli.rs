//! End-to-end runs of the `normord` binary.

use std::path::Path;
use std::process::{Command, Output};

use normord::format::{
    normal_form_from_json, read_matrix_file, ExperimentJson, StirlingJson, TermJson,
};
use normord_core::{normal_order, stirling_matrix, BosonWord, FiniteMatrix};

fn normord(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_normord"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = normord(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    normord(args).status.code().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn normal_order_golden() {
    assert_eq!(
        stdout(&["no", "a a+ a a a+ a"]),
        "2 (a†)^0 a^2 + 4 (a†)^1 a^3 + 1 (a†)^2 a^4\n"
    );
    assert_eq!(stdout(&["no", "aa+"]), "1 + 1 (a†)^1 a^1\n");
    assert_eq!(stdout(&["no", "rs:[0,2;1,0]"]), "2 (a†)^0 a^1 + 1 (a†)^1 a^2\n");
}

#[test]
fn double_dot_golden() {
    assert_eq!(stdout(&["dd", "a a+ a a a+ a"]), "1 (a†)^2 a^4\n");
}

#[test]
fn stirling_golden() {
    assert_eq!(
        stdout(&["stirling", "a+ a", "--rows", "4"]),
        "1  0  0  0  0\n0  1  0  0  0\n0  1  1  0  0\n0  1  3  1  0\n0  1  7  6  1\n"
    );
    assert_eq!(
        stdout(&["stirling", "a+ a a+", "--rows", "3", "--format", "csv"]),
        "1\n1;1\n2;4;1\n6;18;9;1\n"
    );
}

#[test]
fn bell_and_bound_golden() {
    let bell = stdout(&["bell", "a+ a", "--rows", "6", "--format", "csv"]);
    assert_eq!(bell, "n,value\n0,1\n1,1\n2,2\n3,5\n4,15\n5,52\n6,203\n");
    assert_eq!(stdout(&["bound", "--size", "4", "--range", "100"]), "1/100\n");
    assert_eq!(stdout(&["bound", "--size", "3", "--range", "10"]), "1\n");
}

#[test]
fn classify_golden() {
    assert_eq!(
        stdout(&["classify", "a+ a a+ a+"]),
        "kind: substitution-with-prefunction\nr: 3\np: 2\nends with a: false\n"
    );
}

#[test]
fn json_round_trips() {
    let w: BosonWord = "a a+ a a a+ a".parse().unwrap();
    let terms: Vec<TermJson> =
        serde_json::from_str(&stdout(&["no", "a a+ a a a+ a", "--format", "json"])).unwrap();
    assert_eq!(normal_form_from_json(&terms).unwrap(), normal_order(&w));

    let doc: StirlingJson =
        serde_json::from_str(&stdout(&["stirling", "a+ a a+", "--rows", "5", "--format", "json"]))
            .unwrap();
    let w: BosonWord = "a+ a a+".parse().unwrap();
    assert_eq!(doc.to_matrix().unwrap(), stirling_matrix(&w, 5).unwrap());

    let doc: ExperimentJson = serde_json::from_str(&stdout(&[
        "montecarlo", "--size", "3", "--draws", "50", "--range", "10", "--seed", "2", "--format",
        "json",
    ]))
    .unwrap();
    let res = doc.to_result().unwrap();
    assert_eq!(res.successes, 50);
}

#[test]
fn stirling_file_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    let out = normord(&["stirling", "a+ a", "--rows", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: StirlingJson = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc.rows.len(), 4);
}

#[test]
fn build_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let p = path.to_str().unwrap();
    assert_eq!(code(&["build-subst", "--g", "1,1/2,-1", "--phi", "0,1,3", "--out", p]), 0);
    let m = read_matrix_file(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(m.size(), 3);
    assert_eq!(code(&["check-subst", p]), 0);
    let json = stdout(&["check-subst", p, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["verdict"], true);
}

#[test]
fn check_subst_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let file = |name, m: &FiniteMatrix| write(d, name, &normord::format::write_matrix_file(m));

    let identity = file("id.json", &FiniteMatrix::identity(5));
    assert_eq!(code(&["check-subst", &identity]), 0);

    let three = file("three.json", &FiniteMatrix::from_int_rows(&[&[1, 0, 0], &[7, 1, 0], &[2, 9, 1]]));
    assert_eq!(code(&["check-subst", &three]), 0);

    let ones = file(
        "ones.json",
        &FiniteMatrix::from_int_rows(&[&[1, 0, 0, 0], &[1, 1, 0, 0], &[1, 1, 1, 0], &[1, 1, 1, 1]]),
    );
    let out = normord(&["check-subst", &ones]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("approximate substitution: false\n"), "{text}");
    assert!(text.contains("column 2 fails"), "{text}");

    let junk = write(d, "junk.json", "{\"size\": 2, \"entries\": [[\"1\"]]}");
    assert_eq!(code(&["check-subst", &junk]), 2);
    let not_unipotent = file("nu.json", &FiniteMatrix::from_int_rows(&[&[2, 0], &[1, 1]]));
    assert_eq!(code(&["check-subst", &not_unipotent]), 2);
    assert_eq!(code(&["check-subst", &d.join("missing.json").to_string_lossy()]), 2);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&["no", "a x"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["montecarlo", "--size", "4", "--draws", "10", "--range", "10"]), 2);
    assert_eq!(code(&["montecarlo", "--size", "1", "--draws", "10", "--range", "10", "--seed", "0"]), 2);
    assert_eq!(code(&["stirling", "", "--rows", "3"]), 2);
    assert_eq!(code(&["build-subst", "--g", "2,1", "--phi", "0,1"]), 2);
    assert_eq!(code(&["--help"]), 0);
    let err = normord(&["no", "a x"]);
    assert!(err.stdout.is_empty());
    assert!(String::from_utf8(err.stderr).unwrap().starts_with("error:"));
}

#[test]
fn montecarlo_jobs_do_not_change_output() {
    let base = ["montecarlo", "--size", "4", "--draws", "600", "--range", "10", "--seed", "9", "--format", "csv"];
    let one = stdout(&[&base[..], &["--jobs", "1"]].concat());
    let four = stdout(&[&base[..], &["--jobs", "4"]].concat());
    assert_eq!(one, four);
    assert!(one.starts_with("size,draws,range,seed,successes,estimate,lo,hi,bound\n4,600,10,9,"));
}

#[test]
fn sweep_reports_ratio() {
    let out = stdout(&[
        "montecarlo", "--size", "4", "--draws", "200", "--sweep-range", "5,10", "--seed", "1",
        "--format", "csv",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].ends_with(",bound,ratio"));
}

#[test]
fn empty_word_and_json_term() {
    assert_eq!(stdout(&["no", ""]), "1\n");
    let terms: Vec<TermJson> = serde_json::from_str(&stdout(&["no", "a+ a", "--format", "json"])).unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!((terms[0].j, terms[0].l, terms[0].coeff.as_str()), (1, 1, "1"));
}

#[test]
fn stirling_full_tables() {
    assert_eq!(
        stdout(&["stirling", "a+ a", "--rows", "6"]),
        "1  0   0   0   0   0  0\n\
         0  1   0   0   0   0  0\n\
         0  1   1   0   0   0  0\n\
         0  1   3   1   0   0  0\n\
         0  1   7   6   1   0  0\n\
         0  1  15  25  10   1  0\n\
         0  1  31  90  65  15  1\n"
    );
    assert_eq!(stdout(&["stirling", "a+ a", "--rows", "0"]), "1\n");
    assert_eq!(
        stdout(&["stirling", "a+ a a+", "--rows", "6", "--format", "csv"]),
        "1\n1;1\n2;4;1\n6;18;9;1\n24;96;72;16;1\n120;600;600;200;25;1\n720;4320;5400;2400;450;36;1\n"
    );
}

#[test]
fn montecarlo_golden() {
    assert_eq!(
        stdout(&["montecarlo", "--size", "3", "--draws", "300", "--range", "10", "--seed", "1"]),
        "size  draws  range  seed  successes  estimate        lo        hi  bound\n   \
         3    300     10     1        300  1.000000  0.987357  1.000000      1\n"
    );
    assert_eq!(
        stdout(&["montecarlo", "--size", "4", "--draws", "275", "--range", "10", "--seed", "1"]),
        "size  draws  range  seed  successes  estimate        lo        hi  bound\n   \
         4    275     10     1          9  0.032727  0.017312  0.061018   1/10\n"
    );
}
