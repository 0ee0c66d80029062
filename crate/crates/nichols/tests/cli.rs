//! End-to-end tests of the command-line front end: exit codes, output
//! determinism, and the file round trip through `reflect`.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use nichols::braiding::{instances, BraidingMatrix};
use nichols::scalar::{ScalarContext, UnitMonomial};

fn write_instance(dir: &Path, name: &str, q: &BraidingMatrix) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, q.serialize()).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nichols"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// A rank-2 matrix whose commutator towers never truncate in either
/// direction: q12*q21 = t^2 is no nonpositive power of q11 = t, and q11 has
/// infinite order.
fn unreflectable() -> BraidingMatrix {
    let ctx = ScalarContext::new(0, &["t"]);
    let t = |e: i64| UnitMonomial::new(&ctx, 0, vec![e]);
    BraidingMatrix::new(&ctx, 2, vec![t(1), t(2), t(0), t(1)])
}

/// Same diagonal as the generic rank-2 chain but with the off-diagonal
/// pair broken, so the two sides of the comparison cannot agree.
fn corrupted() -> BraidingMatrix {
    let ctx = ScalarContext::new(0, &["t"]);
    let t = |e: i64| UnitMonomial::new(&ctx, 0, vec![e]);
    BraidingMatrix::new(&ctx, 2, vec![t(1), t(-1), t(2), t(1)])
}

#[test]
fn analyze_succeeds_on_finite_type() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_instance(dir.path(), "a2.txt", &instances::a2_generic());
    let out = run(&["analyze", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("rank"), "unexpected report: {text}");
    assert!(text.contains("A2"), "missing type label: {text}");
}

#[test]
fn unreadable_and_malformed_files_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.txt");
    let out = run(&["analyze", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let garbage = dir.path().join("garbage.txt");
    std::fs::write(&garbage, "rank two\nentry 1 1 q\n").unwrap();
    for cmd in ["analyze", "oracle", "compare"] {
        let out = run(&[cmd, garbage.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "command {cmd}");
    }
}

#[test]
fn out_of_range_reflection_index_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_instance(dir.path(), "a2.txt", &instances::a2_generic());
    for index in ["0", "5"] {
        let out = run(&["reflect", file.to_str().unwrap(), index]);
        assert_eq!(out.status.code(), Some(2), "index {index}");
    }
}

#[test]
fn undefined_reflection_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_instance(dir.path(), "blocked.txt", &unreflectable());
    let out = run(&["reflect", file.to_str().unwrap(), "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn capped_analysis_succeeds_unless_finiteness_is_required() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_instance(dir.path(), "affine.txt", &instances::affine_rank2());
    let base = ["analyze", file.to_str().unwrap(), "--max-objects", "50"];
    let out = run(&base);
    assert_eq!(out.status.code(), Some(0));

    let mut strict = base.to_vec();
    strict.push("--require-finite");
    let out = run(&strict);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn disagreeing_sides_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_instance(dir.path(), "corrupted.txt", &corrupted());
    let out = run(&["compare", file.to_str().unwrap(), "--max-degree", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn agreeing_sides_exit_0() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_instance(dir.path(), "a2.txt", &instances::a2_generic());
    let out = run(&["compare", file.to_str().unwrap(), "--max-degree", "4"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn reflect_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let original = instances::a2_generic();
    let file = write_instance(dir.path(), "a2.txt", &original);
    let once = run(&["reflect", file.to_str().unwrap(), "2"]);
    assert_eq!(once.status.code(), Some(0));

    // The text output is itself a braiding file; reflecting it at the same
    // index must reproduce the input.
    let reflected = dir.path().join("reflected.txt");
    std::fs::write(&reflected, once.stdout).unwrap();
    let twice = run(&["reflect", reflected.to_str().unwrap(), "2"]);
    assert_eq!(twice.status.code(), Some(0));
    assert_eq!(stdout(&twice), original.serialize());
}

#[test]
fn json_reports_are_byte_identical_across_runs_and_threads() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_instance(dir.path(), "b2.txt", &instances::b2_fourth_root());
    let path = file.to_str().unwrap();

    let a = run(&["--json", "analyze", path]);
    let b = run(&["--json", "analyze", path]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));

    let one = run(&["--json", "--threads", "1", "oracle", path, "--max-degree", "5"]);
    let four = run(&["--json", "--threads", "4", "oracle", path, "--max-degree", "5"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn dot_export_writes_the_state_graph() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_instance(dir.path(), "a2.txt", &instances::a2_generic());
    let dot = dir.path().join("graph.dot");
    let out = run(&[
        "analyze",
        file.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph reflection_states {"));
    assert!(text.contains("--"), "expected at least one edge: {text}");
}

#[test]
fn zero_degree_cutoff_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_instance(dir.path(), "a2.txt", &instances::a2_generic());
    for cmd in ["oracle", "compare"] {
        let out = run(&[cmd, file.to_str().unwrap(), "--max-degree", "0"]);
        assert_eq!(out.status.code(), Some(2), "command {cmd}");
    }
}
