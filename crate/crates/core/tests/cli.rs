use std::fs;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splay-deque"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn gen_is_deterministic() {
    let args = [
        "gen",
        "--kind",
        "random-mix",
        "--n",
        "8",
        "--m",
        "200",
        "--seed",
        "5",
    ];
    let a = bin(&args);
    let b = bin(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.contains("# seed 5 rng chacha8"));
    assert!(text.contains("init 8"));
}

#[test]
fn run_then_transcribe_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let wl = dir.path().join("w.txt");
    let tr = dir.path().join("t.txt");
    let seq = dir.path().join("s.txt");
    let csv = dir.path().join("c.csv");
    let w = wl.to_str().unwrap();
    let o = bin(&[
        "gen",
        "--kind",
        "random-mix",
        "--n",
        "32",
        "--m",
        "400",
        "--seed",
        "3",
        "--out",
        w,
    ]);
    assert_eq!(o.status.code(), Some(0));

    let o = bin(&[
        "run",
        w,
        "--mirror",
        "--strict",
        "--check-invariants",
        "--trace-out",
        tr.to_str().unwrap(),
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let report = fs::read_to_string(&csv).unwrap();
    assert!(report.starts_with("n,m,total_rotations,amortized"));
    assert_eq!(report.lines().count(), 2);

    let o = bin(&[
        "transcribe",
        tr.to_str().unwrap(),
        "--block-size",
        "2",
        "--split-bound",
        "2",
        "--strict",
        "--out",
        seq.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(fs::read_to_string(&seq).unwrap().lines().count(), 2);

    let o = bin(&[
        "check-pattern",
        "--pattern",
        "ababa",
        "--input",
        seq.to_str().unwrap(),
        "--strict",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn check_pattern_strict_reports_violation() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("seq.txt");
    fs::write(&f, "1 2 1 2 1\n1 2 3\n").unwrap();
    let o = bin(&[
        "check-pattern",
        "--pattern",
        "abab",
        "--input",
        f.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("1: contains"));
    assert!(text.contains("2: free"));
    let o = bin(&[
        "check-pattern",
        "--pattern",
        "abab",
        "--input",
        f.to_str().unwrap(),
        "--strict",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(bin(&["gen", "--kind", "bogus"]).status.code(), Some(2));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        bin(&["transcribe", "/nonexistent/trace"]).status.code(),
        Some(2)
    );
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.txt");
    fs::write(&f, "init 1\npop\npop\n").unwrap();
    assert_eq!(bin(&["run", f.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn ex_prints_value_and_witness() {
    let o = bin(&["ex", "--pattern", "abab", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("ex 5"));
    assert!(text.contains("exact true"));
    assert!(text.contains("witness"));
}

#[test]
fn report_is_sorted_and_deterministic() {
    let args = ["report", "--kind", "pop-only", "--sizes", "256,64"];
    let a = bin(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, bin(&args).stdout);
    let text = stdout(&a);
    let ns: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(ns, ["64", "256"]);
}
