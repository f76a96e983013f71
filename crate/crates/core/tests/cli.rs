use std::path::Path;
use std::process::{Command, Output};

use u3codes::report::{from_csv, ResultLine};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_u3codes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const EX1: [&str; 8] = ["--n", "3", "--g1", "x+1", "--a1", "1", "--g2", "x+1"];

#[test]
fn factor_lists_irreducibles() {
    let o = run(&["factor", "--n", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x+1, x^2+x+1\n");
    assert_eq!(
        stdout(&run(&["factor", "--n", "5"])),
        "x+1, x^4+x^3+x^2+x+1\n"
    );
    let even = run(&["factor", "--n", "4"]);
    assert_eq!(even.status.code(), Some(2));
    assert!(!even.stderr.is_empty());
}

#[test]
fn construct_emits_a_result_line() {
    let o = run(&[&["construct"][..], &EX1].concat());
    assert!(o.status.success());
    let line = ResultLine::from_json(stdout(&o).trim_end()).unwrap();
    assert_eq!(line.code_size_log2, 7);
    assert_eq!(
        (line.lee_distance.value, line.lee_distance.exact),
        (2, true)
    );
    assert!(!line.dual_containing.verdict);
    assert!(line.dual_containing.methods_agree);
    assert_eq!(line.to_json() + "\n", stdout(&o));
}

#[test]
fn construct_accepts_binary_coefficient_text() {
    let text = run(&[
        "construct",
        "--n",
        "7",
        "--g1",
        "x+1",
        "--a1",
        "1",
        "--g2",
        "x^3+x+1",
    ]);
    let bits = run(&[
        "construct",
        "--n",
        "7",
        "--g1",
        "11",
        "--a1",
        "1",
        "--g2",
        "1101",
    ]);
    assert_eq!(stdout(&text), stdout(&bits));
    let line = ResultLine::from_json(stdout(&text).trim_end()).unwrap();
    assert_eq!(
        line.quantum.map(|q| q.to_string()).as_deref(),
        Some("[[21,13,2]]")
    );
}

#[test]
fn construct_rejects_bad_triples() {
    let o = run(&[
        "construct",
        "--n",
        "3",
        "--g1",
        "x+1",
        "--a1",
        "x^2+x+1",
        "--g2",
        "x+1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("does not divide"));
    let o = run(&[
        "construct",
        "--n",
        "3",
        "--g1",
        "x+y",
        "--a1",
        "1",
        "--g2",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(run(&["construct", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn construct_csv() {
    let o = run(&[&["construct", "--emit", "csv"][..], &EX1].concat());
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("n,g1,a1,g2,code_size_log2,"));
    let lines = from_csv(&text).unwrap();
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0].code_size_log2, 7);
}

#[test]
fn dual_reports_sizes() {
    let o = run(&[&["dual"][..], &EX1].concat());
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim_end()).unwrap();
    assert_eq!(v["dual_size_log2"], 2);
    assert_eq!(v["generator_matches"], true);
}

#[test]
fn search_writes_records() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.jsonl");
    let o = run(&["search", "--n", "3", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("dual-containing codes of length 3"));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.ends_with('\n') && !text.contains('\r'));
    let lines: Vec<ResultLine> = text
        .lines()
        .map(|l| ResultLine::from_json(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 4);
    for l in &lines {
        assert!(l.dual_containing.verdict && l.quantum.is_some());
        assert_eq!(
            l.to_json(),
            ResultLine::from_json(&l.to_json()).unwrap().to_json()
        );
    }

    let again = dir.path().join("again.jsonl");
    run(&["search", "--n", "3", "--out", again.to_str().unwrap()]);
    assert_eq!(
        std::fs::read(&path).unwrap(),
        std::fs::read(&again).unwrap()
    );
}

#[test]
fn search_guards() {
    assert_eq!(run(&["search", "--n", "2"]).status.code(), Some(2));
    assert_eq!(
        run(&["search", "--n", "7", "--max-n", "5"]).status.code(),
        Some(2)
    );
    let unwritable = Path::new("/nonexistent-dir/r.jsonl");
    let o = run(&["search", "--n", "3", "--out", unwritable.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_paper_is_deterministic() {
    let first = run(&["verify-paper"]);
    let second = run(&["verify-paper"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), second.status.code());
    let text = stdout(&first);
    assert!(text.contains("[PASS] dual equals exhaustive dual"));
    assert!(text.contains("[NOTE] triple n=3 g1=x+1 a1=1 g2=x^2+x+1"));
    // exit status tracks the presence of failing checks
    assert_eq!(first.status.success(), !text.contains("[FAIL]"));
}
