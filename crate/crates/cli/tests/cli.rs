use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_hypergirth");

fn recipes() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("recipes")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(BIN).args(args).current_dir(dir).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn heawood_to_fano() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(code(&run_in(d, &["gen", "plane", "--q", "2", "-o", "g.bgt"])), 0);
    assert_eq!(code(&run_in(d, &["transform", "nbhd", "g.bgt", "-o", "h.hgt"])), 0);
    let r = run_in(d, &["girth", "h.hgt", "--oracle-max"]);
    assert_eq!(code(&r), 0, "{}", stderr(&r));
    let out = stdout(&r);
    assert!(out.starts_with("girth 3\nwitness "), "{out}");
    assert!(out.ends_with("oracle 3 agree\n"), "{out}");
    let rep = stdout(&run_in(d, &["report", "h.hgt"]));
    assert!(rep.contains("vertices 7"), "{rep}");
    assert!(rep.ends_with("girth 3\n"), "{rep}");
}

#[test]
fn split_and_pad() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("seven.hgt"), "hgt 1\nvertices 7\nedges 1\ne 0 1 2 3 4 5 6\n").unwrap();
    let r = run_in(d, &["transform", "split", "seven.hgt", "--r", "3", "-o", "s.hgt"]);
    assert_eq!(code(&r), 0, "{}", stderr(&r));
    let s = fs::read_to_string(d.join("s.hgt")).unwrap();
    assert_eq!(s, "hgt 1\nvertices 7\nedges 2\ne 0 1 2\ne 3 4 5\n");

    let r = run_in(d, &["transform", "pad", "s.hgt", "--to", "1000", "-o", "p.hgt"]);
    assert_eq!(code(&r), 0);
    let p = fs::read_to_string(d.join("p.hgt")).unwrap();
    assert!(p.starts_with("hgt 1\nvertices 1000\n"), "{p}");
    let r = run_in(d, &["transform", "pad", "p.hgt", "--to", "10"]);
    assert_eq!(code(&r), 3, "{}", stderr(&r));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    // i/o
    assert_eq!(code(&run_in(d, &["girth", "missing.hgt"])), 1);
    // parse and usage
    fs::write(d.join("junk.hgt"), "hgt 1\nvertices x\n").unwrap();
    assert_eq!(code(&run_in(d, &["girth", "junk.hgt"])), 2);
    assert_eq!(code(&run_in(d, &["plan", "--girth", "6", "--r", "3"])), 2);
    // precondition
    assert_eq!(code(&run_in(d, &["gen", "plane", "--q", "4"])), 3);
    let r = run_in(d, &["plan", "--girth", "6", "--p", "5", "--r", "3", "--N", "1000"]);
    assert_eq!(code(&r), 3);
    assert!(stderr(&r).contains("N*") || stderr(&r).contains("seed"), "{}", stderr(&r));
    // resource: Q_6 alone has millions of digits
    let r = run_in(d, &["plan", "--girth", "6", "--p", "5", "--r", "3", "--m", "2", "--n", "6"]);
    assert_eq!(code(&r), 4, "{}", stderr(&r));
    // verification
    let r = run_in(d, &["plan", "--girth", "6", "--p", "5", "--r", "3", "--m", "1", "--n", "1", "--cert", "c.txt"]);
    assert_eq!(code(&r), 5, "{}", stderr(&r));
    assert!(fs::read_to_string(d.join("c.txt")).unwrap().ends_with("status INVALID\n"));
}

#[test]
fn oracle_budget_and_corrupted_fast_path() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(code(&run_in(d, &["gen", "plane", "--q", "2", "-o", "g.bgt"])), 0);
    let r = Command::new(BIN)
        .args(["girth", "g.bgt", "--oracle-max", "8"])
        .env("HYPERGIRTH_ORACLE_BUDGET", "10")
        .current_dir(d)
        .output()
        .unwrap();
    assert_eq!(code(&r), 4, "{}", stderr(&r));
    let r = run_in(d, &["girth", "g.bgt", "--oracle-max", "--corrupt-fast-path"]);
    assert_eq!(code(&r), 5, "{}", stderr(&r));
}

#[test]
fn certificate_round_trip_and_tamper() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let r = run_in(d, &["plan", "--girth", "8", "--r", "3", "--m", "5", "--n", "2", "--cert", "c.txt"]);
    assert_eq!(code(&r), 0, "{}", stderr(&r));
    assert!(stdout(&r).contains("certificate VALID"));
    let r = run_in(d, &["report", "c.txt"]);
    assert_eq!(stdout(&r), "certificate reproduced, status VALID\n");

    let text = fs::read_to_string(d.join("c.txt")).unwrap();
    let tampered = text.replacen("value V_n ", "value V_n 1", 1);
    assert_ne!(tampered, text);
    fs::write(d.join("t.txt"), tampered).unwrap();
    assert_eq!(code(&run_in(d, &["report", "t.txt"])), 5);
}

#[test]
fn plan_from_vertex_count() {
    let dir = tempfile::tempdir().unwrap();
    let r = run_in(dir.path(), &["plan", "--girth", "6", "--p", "5", "--r", "3", "--N", "10000000000000000000000000000000000000000000000"]);
    assert_eq!(code(&r), 0, "{}", stderr(&r));
    let out = stdout(&r);
    assert!(out.contains("\nsandwich ok\n"), "{out}");
    assert!(out.contains("\ntheorem-exponent "), "{out}");
    assert!(out.ends_with("status VALID\n"), "{out}");
}

#[test]
fn pipeline_reverifies() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run");
    let recipe = recipes().join("hexagon-split.txt");
    let r = Command::new(BIN)
        .args(["pipeline", recipe.to_str().unwrap(), "--out-dir", out.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(code(&r), 0, "{}", stderr(&r));
    let report = fs::read_to_string(out.join("report.txt")).unwrap();
    assert_eq!(stdout(&r), report);
    assert!(report.ends_with("status ok\n"));

    let r = run_in(&out, &["report", "report.txt"]);
    assert_eq!(code(&r), 0, "{}", stderr(&r));
    assert!(stdout(&r).starts_with("report reproduced: 5 stages"), "{}", stdout(&r));
    let leftovers: Vec<_> = fs::read_dir(&out)
        .unwrap()
        .filter_map(|e| e.ok())
        .filter(|e| e.file_name().to_string_lossy().starts_with(".reverify"))
        .collect();
    assert!(leftovers.is_empty());

    // a hand-edited stage file no longer matches its recipe
    fs::write(out.join("stage-03.hgt"), "hgt 1\nvertices 2\nedges 0\n").unwrap();
    assert_eq!(code(&run_in(&out, &["report", "report.txt"])), 5);
}

#[test]
fn failing_pipeline_names_stage() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run");
    let recipe = recipes().join("target-too-high.txt");
    let r = Command::new(BIN)
        .args(["pipeline", recipe.to_str().unwrap(), "--out-dir", out.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(code(&r), 5);
    assert!(stderr(&r).contains("stage 1"), "{}", stderr(&r));
    let report = fs::read_to_string(out.join("report.txt")).unwrap();
    assert!(report.ends_with("status failed at stage 1\n"), "{report}");
}

#[test]
fn repeated_runs_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let args = ["gen", "greedy", "--left", "60", "--right", "12", "--deg", "5", "--girth", "8", "--seed", "7"];
    let a = run_in(d, &args);
    let b = run_in(d, &args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
}
