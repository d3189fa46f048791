//! End-to-end tests driving the compiled binary: write-then-verify round
//! trips, byte determinism, and the exit-code contract.

use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

const E1: &str = concat!(
    r#"{"elements":6,"matroid1":{"parts":[[0,1,2],[3,4,5]],"caps":[1,2]},"#,
    r#""matroid2":{"parts":[[0,3],[1,4],[2,5]],"caps":[1,1,2]}}"#
);

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gpm-color"))
}

fn run(args: &[&str], dir: &Path) -> Output {
    bin()
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn write(dir: &Path, name: &str, content: &str) {
    std::fs::write(dir.join(name), content).unwrap();
}

#[test]
fn chi_prints_exact_rationals_and_ceiling() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "e1.json", E1);
    let out = run(&["chi", "e1.json"], dir.path());
    assert!(out.status.success());
    assert_eq!(stdout(&out), "delta1 = 3/1\ndelta2 = 2/1\nchi = 3\n");

    let out = run(&["chi", "e1.json", "--format", "json"], dir.path());
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["delta1"], "3/1");
    assert_eq!(value["delta2"], "2/1");
    assert_eq!(value["chi"], 3);
}

#[test]
fn chi_matches_oracle_on_e1() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "e1.json", E1);
    let out = run(&["oracle", "chi", "e1.json"], dir.path());
    assert!(out.status.success());
    assert_eq!(stdout(&out), "chi = 3\n");
}

#[test]
fn gen_is_byte_deterministic() {
    let dir = TempDir::new().unwrap();
    let args = ["gen", "--seed", "7", "--elements", "15", "--output"];
    assert!(run(&[&args[..], &["a.json"]].concat(), dir.path())
        .status
        .success());
    assert!(run(&[&args[..], &["b.json"]].concat(), dir.path())
        .status
        .success());
    let a = std::fs::read(dir.path().join("a.json")).unwrap();
    let b = std::fs::read(dir.path().join("b.json")).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn color_output_passes_verify_coloring() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "e1.json", E1);
    let out = run(&["color", "e1.json", "-o", "c.json"], dir.path());
    assert!(out.status.success());
    let out = run(&["verify", "coloring", "e1.json", "c.json"], dir.path());
    assert!(out.status.success());
    assert!(stdout(&out).contains("ok"));
}

#[test]
fn verify_names_the_duplicated_element() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "e1.json", E1);
    write(
        dir.path(),
        "bad.json",
        r#"{"classes":[[0,4,5],[1,3],[2,4]]}"#,
    );
    let out = run(&["verify", "coloring", "e1.json", "bad.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("element 4"), "{}", stdout(&out));
}

#[test]
fn list_color_output_passes_verify_list() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "e1.json", E1);
    write(
        dir.path(),
        "lists.json",
        r#"{"lists":[["r","g","b"],["r","g","b"],["r","g","b"],["r","g","b"],["r","g","b"],["r","g","b"]]}"#,
    );
    let out = run(
        &[
            "list-color",
            "e1.json",
            "--lists",
            "lists.json",
            "-o",
            "a.json",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let out = run(
        &[
            "verify",
            "list",
            "e1.json",
            "--lists",
            "lists.json",
            "--assignment",
            "a.json",
        ],
        dir.path(),
    );
    assert!(out.status.success());
}

#[test]
fn short_lists_fail_with_a_per_element_report() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "e1.json", E1);
    write(
        dir.path(),
        "lists.json",
        r#"{"lists":[["r"],["r","g","b"],["r","g","b"],["r","g"],["r","g","b"],["r","g","b"]]}"#,
    );
    let out = run(
        &["list-color", "e1.json", "--lists", "lists.json"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("element 0"), "{text}");
    assert!(text.contains("element 3"), "{text}");
}

#[test]
fn kernel_from_coloring_passes_verify_kernel() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "e1.json", E1);
    assert!(run(&["color", "e1.json", "-o", "c.json"], dir.path())
        .status
        .success());
    let out = run(
        &["kernel", "e1.json", "--coloring", "c.json", "-o", "k.json"],
        dir.path(),
    );
    assert!(out.status.success());
    let out = run(
        &[
            "verify",
            "kernel",
            "e1.json",
            "--kernel",
            "k.json",
            "--coloring",
            "c.json",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stdout(&out));
}

#[test]
fn kernel_accepts_explicit_labels_and_ground() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "e1.json", E1);
    write(dir.path(), "labels.json", r#"{"labels":[6,5,4,3,2,1]}"#);
    let out = run(
        &[
            "kernel",
            "e1.json",
            "--labels",
            "labels.json",
            "--ground",
            "0,1,2,3",
            "-o",
            "k.json",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let out = run(
        &[
            "verify",
            "kernel",
            "e1.json",
            "--kernel",
            "k.json",
            "--labels",
            "labels.json",
            "--ground",
            "0,1,2,3",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stdout(&out));
}

#[test]
fn wrong_kernel_is_rejected() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "e1.json", E1);
    assert!(run(&["color", "e1.json", "-o", "c.json"], dir.path())
        .status
        .success());
    // elements 0 and 3 share the cap-1 part {0,3} of the second matroid
    write(dir.path(), "k.json", r#"{"kernel":[0,3],"rounds":1}"#);
    let out = run(
        &[
            "verify",
            "kernel",
            "e1.json",
            "--kernel",
            "k.json",
            "--coloring",
            "c.json",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("not common independent"));
}

#[test]
fn malformed_inputs_exit_2() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "bad.json", "{nope");
    let out = run(&["chi", "bad.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));

    write(
        dir.path(),
        "overlap.json",
        r#"{"elements":2,"matroid1":{"parts":[[0],[0,1]],"caps":[1,1]},"matroid2":{"parts":[[0,1]],"caps":[1]}}"#,
    );
    let out = run(&["chi", "overlap.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["chi", "missing.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bipartite_instances_are_auto_detected() {
    let dir = TempDir::new().unwrap();
    write(
        dir.path(),
        "k33.json",
        r#"{"left_caps":[1,1,1],"right_caps":[1,1,1],
            "edges":[[0,0],[0,1],[0,2],[1,0],[1,1],[1,2],[2,0],[2,1],[2,2]]}"#,
    );
    let out = run(&["chi", "k33.json"], dir.path());
    assert!(out.status.success());
    assert!(stdout(&out).contains("chi = 3"));
}

#[test]
fn oracle_list_reports_forced_conflicts() {
    let dir = TempDir::new().unwrap();
    write(
        dir.path(),
        "tiny.json",
        r#"{"elements":2,"matroid1":{"parts":[[0,1]],"caps":[1]},"matroid2":{"parts":[[0,1]],"caps":[1]}}"#,
    );
    write(dir.path(), "lists.json", r#"{"lists":[["a"],["a"]]}"#);
    let out = run(
        &["oracle", "list", "tiny.json", "--lists", "lists.json"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("no valid assignment"));
}

#[test]
fn bench_runs_and_reports_both_ops() {
    let dir = TempDir::new().unwrap();
    let out = run(
        &["bench", "--trials", "2", "--elements", "12", "--seed", "3"],
        dir.path(),
    );
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("color"));
    assert!(text.contains("list-color"));
}
