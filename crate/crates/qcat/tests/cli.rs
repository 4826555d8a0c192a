//! End-to-end checks of the `qcat` binary: exit codes, report lines, and
//! the file-driven subcommands.

use std::path::PathBuf;
use std::process::Command;

fn qcat() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qcat"))
}

fn tmp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("qcat-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn laws_run_reports_and_exits_zero() {
    let out = qcat()
        .args(["laws", "run", "--backend", "f5", "--max-size", "2", "--trials", "10", "--seed", "5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("backend=f5 seed=5 max-size=2 trials=10\n"));
    assert!(text.contains("thm-scalar-com PASS instances="));
    assert!(text.contains("qcat-minus-one PASS"));
    assert!(!text.contains(" FAIL "));
}

#[test]
fn single_law_filter_and_unknown_law() {
    let out = qcat()
        .args(["laws", "run", "--backend", "bool", "--law", "lemma-dense", "--trials", "5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("lemma-dense")).count(), 1);

    let out = qcat()
        .args(["laws", "run", "--backend", "bool", "--law", "no-such-law"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    let out = qcat().args(["laws", "run", "--backend", "octonion"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = qcat().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_exit_codes() {
    let dir = std::env::temp_dir().join("qcat-cli-ws");
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(
        dir.join("ws.qcat"),
        "object A : x, y\narrow f : x,y -> x,y @ rat\n1 2\n3 4\n",
    )
    .unwrap();
    let ws = dir.to_str().unwrap();

    // 0: a term that evaluates
    let out = qcat()
        .args(["eval", "--backend", "rat", "--workspace", ws, "f ; f*"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("arrow result"));

    // 1: well-formed but unevaluable (unknown name)
    let out = qcat()
        .args(["eval", "--backend", "rat", "--workspace", ws, "g ; f"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    // 2: syntax error
    let out = qcat()
        .args(["eval", "--backend", "rat", "--workspace", ws, "f ; ("])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn born_and_spectra_from_files() {
    let born = tmp_file("state.arrow", "arrow x : * -> L:p,R:q @ gauss\n1 i\n");
    let out = qcat().args(["born", "--input", born.to_str().unwrap()]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("sqnorm-left=1"));
    assert!(text.contains("sqnorm-total=2"));

    let bell = tmp_file(
        "bell.arrow",
        "arrow bell : * -> (a0,b0),(a0,b1),(a1,b0),(a1,b1) @ qsqrt2\n0+1/2~2 0 0 0+1/2~2\n",
    );
    let out = qcat().args(["spectra", "--input", bell.to_str().unwrap()]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("nonzero-spectra-match: true"));
}

#[test]
fn clone_check_exit_codes() {
    // a one-label object clones: exit 0
    let out = qcat()
        .args(["clone-check", "--backend", "gauss", "--object", "x"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("clone-check: Ok"));

    // a two-label object is defeated: exit 3 with a counterexample
    let out = qcat()
        .args(["clone-check", "--backend", "gauss", "--object", "x,y"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("clone-check: Counterexample"));
    assert!(text.contains("arrow probe"));
}

#[test]
fn reports_are_identical_across_processes() {
    let run = || {
        let out = qcat()
            .args(["laws", "run", "--backend", "gauss", "--max-size", "2", "--trials", "15", "--seed", "123"])
            .output()
            .unwrap();
        assert!(out.status.success());
        let text = String::from_utf8(out.stdout).unwrap();
        // strip the wall-time line, which is the one legitimate difference
        text.lines()
            .filter(|l| !l.starts_with("wall-time="))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(run(), run());
}

#[test]
fn group_commands_emit_reports() {
    for cmd in ["unit-laws", "tensor-laws", "biprod-laws"] {
        let out = qcat()
            .args([cmd, "--backend", "bool", "--trials", "5", "--seed", "3"])
            .output()
            .unwrap();
        assert!(out.status.success(), "{cmd} failed");
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.starts_with("backend=bool"), "{cmd} report header");
        assert!(text.contains(" PASS "), "{cmd} should pass something");
    }
}
