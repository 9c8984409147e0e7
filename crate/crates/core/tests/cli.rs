use std::fs;
use std::path::Path;
use std::process::Command;

use tempfile::TempDir;

fn qck(args: &[&str]) -> (i32, String, String) {
    qck_env(args, &[])
}

fn qck_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qck"));
    cmd.args(args).env_remove("QCK_SIZE_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8"),
        String::from_utf8(out.stderr).expect("utf8"),
    )
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().expect("utf8 path").to_string()
}

#[test]
fn build_then_check_all() {
    let dir = TempDir::new().unwrap();
    let b3 = path(&dir, "b3");
    assert_eq!(qck(&["build", "std", "--n", "3", "-o", &b3]).0, 0);
    let (code, out, _) = qck(&["check", &b3, "--axioms", "all"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("summary\t")));
    assert!(out.contains("summary\tstembridge\tpass"));
}

#[test]
fn decompose_quasi_cube() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g");
    assert_eq!(qck(&["build", "qtensor-power", "--n", "3", "--k", "3", "-o", &g]).0, 0);
    let (code, out, _) = qck(&["decompose", &g]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().filter(|l| l.starts_with("component\t")).collect();
    assert_eq!(lines.len(), 6);
    assert!(out.ends_with("components\t6\n"));
    assert!(lines[0].contains("hw=111\twt=(3,0,0)"));
}

#[test]
fn corrupted_file_reports_witness() {
    let dir = TempDir::new().unwrap();
    let file = path(&dir, "bad");
    fs::write(
        &file,
        "qcgraph v1\nrank 3\nvertex x wt 0,1,0 eps 0,1 phi -1,1\n",
    )
    .unwrap();
    let (code, out, _) = qck(&["check", &file, "--axioms", "lq1"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("LQ1\tx\t1,2\t"));
    assert!(out.contains("summary\tlq1\tfail\t1"));
}

#[test]
fn precondition_failures() {
    let dir = TempDir::new().unwrap();
    let file = path(&dir, "bad");
    fs::write(&file, "qcgraph v1\nrank 3\nvertex x wt 0,1,0 eps 0,1 phi -1,1\n").unwrap();
    // explicitly requested checker with an unmet precondition is an input error
    assert_eq!(qck(&["check", &file, "--axioms", "cases"]).0, 2);
    let (code, out, _) = qck(&["check", &file]);
    assert_eq!(code, 1);
    assert!(out.contains("summary\tcases\tskipped"));
}

#[test]
fn malformed_input_and_usage() {
    let dir = TempDir::new().unwrap();
    let file = path(&dir, "junk");
    fs::write(&file, "not a graph\n").unwrap();
    let (code, _, err) = qck(&["check", &file]);
    assert_eq!(code, 2);
    assert!(err.contains("line 1"));
    assert_eq!(qck(&["transmogrify"]).0, 2);
    assert_eq!(qck(&["check", &file, "--axioms", "bogus"]).0, 2);
}

#[test]
fn json_round_trip_and_determinism() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g");
    let j = path(&dir, "g.json");
    let back = path(&dir, "back");
    assert_eq!(qck(&["build", "qtensor-power", "--n", "3", "--k", "2", "-o", &g]).0, 0);
    assert_eq!(qck(&["export", "json", &g, "-o", &j]).0, 0);
    assert_eq!(qck(&["export", "text", &j, "-o", &back]).0, 0);
    assert_eq!(fs::read_to_string(&g).unwrap(), fs::read_to_string(&back).unwrap());
    let first = qck(&["decompose", &j]);
    let second = qck(&["decompose", &g]);
    assert_eq!(first, second);
}

#[test]
fn dot_export() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g");
    qck(&["build", "qtensor-power", "--n", "3", "--k", "2", "-o", &g]);
    let (code, out, _) = qck(&["export", "dot", &g]);
    assert_eq!(code, 0);
    assert!(out.contains("\"21\" -> \"21\" [label=\"1\", color=red, style=dashed];"));
}

#[test]
fn quasify_figure_instance() {
    let dir = TempDir::new().unwrap();
    let c = path(&dir, "c");
    let q = path(&dir, "q");
    assert_eq!(qck(&["build", "component", "--word", "3121", "--n", "3", "-o", &c]).0, 0);
    assert_eq!(qck(&["quasify", &c, "-o", &q]).0, 0);
    let (_, out, _) = qck(&["decompose", &q]);
    let mut hws: Vec<&str> = out
        .lines()
        .filter_map(|l| l.split('\t').find_map(|f| f.strip_prefix("hw=")))
        .collect();
    hws.sort();
    assert_eq!(hws, ["3121", "3221", "3231"]);
    assert_eq!(qck(&["check", &q]).0, 0);
}

#[test]
fn quasify_rejects_disconnected_input() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g");
    qck(&["build", "tensor-power", "--n", "3", "--k", "2", "-o", &g]);
    let (code, _, err) = qck(&["quasify", &g]);
    assert_eq!(code, 2);
    assert!(err.contains("components"));
}

#[test]
fn iso_between_files() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g");
    qck(&["build", "qtensor-power", "--n", "3", "--k", "3", "-o", &g]);
    let (_, listing, _) = qck(&["decompose", &g]);
    let same: Vec<usize> = listing
        .lines()
        .filter(|l| l.contains("wt=(2,1,0)"))
        .map(|l| l.split('\t').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(same.len(), 2);
    let (code, out, _) = qck(&["iso", &format!("{g}#{}", same[0]), &format!("{g}#{}", same[1])]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
    let (code, out, _) = qck(&["iso", &format!("{g}#0"), &format!("{g}#{}", same[0])]);
    assert_eq!((code, out.as_str()), (0, "NONE\n"));
    assert_eq!(qck(&["iso", &format!("{g}#99"), &format!("{g}#0")]).0, 2);
}

#[test]
fn counting_and_characters() {
    let (code, out, _) = qck(&["count", "--shape", "2,1", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("components=2\tf_lambda=2\tPASS"));
    let (code, out, _) = qck(&["count", "--shape", "2,2,1", "--n", "3"]);
    assert_eq!(code, 1);
    assert!(out.contains("components=3\tf_lambda=5\tFAIL"));

    let (code, out, _) = qck(&["verify", "schur", "--shape", "2,1", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("term\t")).count(), 2);
    assert!(out.contains("identity\tPASS\nmultiset\tPASS\n"));

    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g");
    qck(&["build", "std", "--n", "3", "-o", &g]);
    let (_, out, _) = qck(&["char", &g, "--per-component"]);
    assert_eq!(out, "component\t0\tx1 + x2 + x3\ntotal\tx1 + x2 + x3\n");
}

#[test]
fn size_cap_from_environment() {
    let (code, _, err) = qck_env(
        &["build", "qtensor-power", "--n", "3", "--k", "4"],
        &[("QCK_SIZE_CAP", "50")],
    );
    assert_eq!(code, 2);
    assert!(err.contains("81"));
    assert_eq!(qck(&["--size-cap", "100", "build", "qtensor-power", "--n", "3", "--k", "4"]).0, 0);
}

#[test]
fn fuzz_is_reproducible() {
    let a = qck(&["fuzz", "--seed", "5", "--count", "50"]);
    let b = qck(&["fuzz", "--seed", "5", "--count", "50"]);
    assert_eq!(a, b);
    assert!(a.1.lines().last().unwrap().starts_with("fuzz\tseed=5\tmutations=50\t"));
}

#[test]
fn run_matches_binary() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g");
    qck(&["build", "std", "--n", "4", "-o", &g]);
    let (code, text) = qcrystal::cli::run(["qck", "decompose", g.as_str()]);
    let (bin_code, bin_out, _) = qck(&["decompose", &g]);
    assert_eq!((code, text), (bin_code, bin_out));
    assert!(Path::new(&g).exists());
}
