use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

fn strathom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strathom"))
        .args(args)
        .env_remove("STRATHOM_TABLE")
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invariant_of_curl_is_unknot() {
    let o = strathom(&["invariant", "--format", "pd", "X(1,2,2,1)"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["alexander"]["coefficients"], serde_json::json!([1]));
    assert_eq!(v["quotient_signatures"][0]["hom_count"], 6);
    assert_eq!(v["quotient_signatures"].as_array().unwrap().len(), 3);
    // same bytes as the empty diagram
    let u = strathom(&["invariant", ""]);
    assert_eq!(stdout(&u), stdout(&o));
}

#[test]
fn invariant_of_trefoil() {
    let o = strathom(&["invariant", "--format", "pd", TREFOIL]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["alexander"]["text"], "t^2 - t + 1");
    assert_eq!(v["abelianization"]["rank"], 1);
    assert_eq!(v["quotient_signatures"][0]["hom_count"], 12);
    assert_eq!(v["peripheral_checks"]["longitude_null"], true);
}

#[test]
fn invariant_reads_stdin_and_other_formats() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_strathom"))
        .args(["invariant", "--quotients", "3"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(TREFOIL.as_bytes()).unwrap();
    let piped = child.wait_with_output().unwrap();
    assert_eq!(code(&piped), 0);
    let g = strathom(&["invariant", "--quotients", "3", "--format", "gauss", "O1-U2-O3-U1-O2-U3-"]);
    let d = strathom(&["invariant", "--quotients", "3", "--format", "dt", "4 6 2"]);
    assert_eq!(stdout(&g), stdout(&piped));
    assert_eq!(stdout(&d), stdout(&piped));
}

#[test]
fn invalid_input_exits_2() {
    let o = strathom(&["invariant", "--format", "pd", "X(1,1,1,1)"]);
    assert_eq!(code(&o), 2);
    assert!(o.stdout.is_empty());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("exactly twice") && err.contains("1 (x4)"), "{err}");
    assert_eq!(code(&strathom(&["invariant", "X(1,2"])), 2);
    assert_eq!(code(&strathom(&["invariant", "--quotients", "0", TREFOIL])), 2);
    assert_eq!(code(&strathom(&["invariant", "--quotients", "6", TREFOIL])), 2);
    assert_eq!(code(&strathom(&["invariant", "--format", "gauss", "O1+U2+"])), 2);
    assert_eq!(code(&strathom(&["invariant", "--format", "dt", "3 5 1"])), 2);
    assert_eq!(code(&strathom(&["frobnicate"])), 2);
}

#[test]
fn compare_exit_codes() {
    let o = strathom(&["compare", TREFOIL, FIGURE_EIGHT]);
    assert_eq!(code(&o), 3);
    assert_eq!(stdout(&o), "Distinct(alexander)\n");
    let o = strathom(&["compare", "", TREFOIL]);
    assert_eq!((code(&o), stdout(&o)), (3, "Distinct(alexander)\n".to_string()));
    let o = strathom(&["compare", "--quotients", "4", "--fuzz", "10", "--seed", "3", TREFOIL, TREFOIL]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("Indistinguishable(alexander,hom_count[S3]"), "{}", stdout(&o));
}

#[test]
fn fuzz_is_seeded() {
    let a = strathom(&["fuzz", "--moves", "6", "--seed", "11", FIGURE_EIGHT]);
    let b = strathom(&["fuzz", "--moves", "6", "--seed", "11", FIGURE_EIGHT]);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    let fuzzed = stdout(&a);
    let c1 = strathom(&["invariant", "--quotients", "4", FIGURE_EIGHT]);
    let c2 = strathom(&["invariant", "--quotients", "4", fuzzed.trim()]);
    assert_eq!(stdout(&c1), stdout(&c2));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let o = strathom(&["invariant", "--quotients", "3", "--out", path.to_str().unwrap(), TREFOIL]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["quotient_signatures"][0]["target"], "S3");
}

#[test]
fn table_default_run() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("certs.jsonl");
    let o = strathom(&["table", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "3_1 4_1 Distinct(alexander)"), "{text}");
    assert!(text.lines().any(|l| l.starts_with("square granny Distinct(peripheral_signature[")));
    let certs = std::fs::read_to_string(&path).unwrap();
    assert_eq!(certs.lines().count(), 38);
    let again = strathom(&["table"]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn table_depth_one_is_alexander_only() {
    let o = strathom(&["table", "--quotients", "1"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let same = text.lines().filter(|l| l.contains("Indistinguishable(alexander)")).count();
    assert!(same >= 1, "{text}");
    assert!(text.lines().any(|l| l == "square granny Indistinguishable(alexander)"));
    assert!(!text.contains("hom_count"));
}

#[test]
fn table_file_errors() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "# no knots\n\n").unwrap();
    let o = strathom(&["table", "--table", empty.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let o = strathom(&["table", "--table", dir.path().join("missing").to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let small = dir.path().join("small.txt");
    std::fs::write(&small, format!("t: {TREFOIL}\nf: {FIGURE_EIGHT}\n")).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_strathom"))
        .args(["table", "--quotients", "3"])
        .env("STRATHOM_TABLE", &small)
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("t f Distinct(alexander)\n# 2 knots, 1 pairs\n"));
}

#[test]
fn presentation_and_strata() {
    let o = strathom(&["presentation", "--simplify", TREFOIL]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("gens: 2\nrel: "), "{text}");
    assert!(text.contains("\nmeridian: ") && text.contains("\nlongitude: "));
    let dir = tempfile::tempdir().unwrap();
    let k = dir.path().join("circle.txt");
    std::fs::write(&k, "elements: 0 1\n0 < 1\n0 0 : 0\n0 1 : 1\n0 2 : 1\n1 0 1 : 0 1\n1 1 2 : 1 1\n1 0 2 : 0 1\n").unwrap();
    let o = strathom(&["strata", k.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 2);
    let p = dir.path().join("p.txt");
    std::fs::write(&p, "elements: 0 1\n0 < 1\n").unwrap();
    let o = strathom(&["chains", p.to_str().unwrap()]);
    assert_eq!(stdout(&o).lines().count(), 3);
}
