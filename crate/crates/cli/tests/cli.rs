//! End-to-end checks of the `pursuit` binary: exit codes, output shape,
//! and trace reproducibility.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn pursuit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pursuit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn copnumber_petersen_is_three() {
    let out = pursuit(&[
        "copnumber",
        fixture("petersen.txt").to_str().unwrap(),
        "--max-k",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "3");
}

#[test]
fn copnumber_respects_max_k() {
    let out = pursuit(&[
        "copnumber",
        fixture("petersen.txt").to_str().unwrap(),
        "--max-k",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), ">2");
}

#[test]
fn validate_rejects_duplicate_points() {
    let out = pursuit(&["validate", fixture("bad.tor").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("same point"), "got: {}", stdout(&out));
}

#[test]
fn validate_accepts_petersen_embedding() {
    let out = pursuit(&["validate", fixture("petersen.tor").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "ok");
}

#[test]
fn simulate_toroidal_catches_and_replays() {
    let dir = tempfile::tempdir().unwrap();
    let trc = dir.path().join("out.trc");
    let out = pursuit(&[
        "simulate",
        fixture("petersen.tor").to_str().unwrap(),
        "--cops",
        "toroidal3",
        "--robber",
        "greedy",
        "--k",
        "3",
        "--trace",
        trc.to_str().unwrap(),
        "--replay",
    ]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(text.contains("CAUGHT"), "got: {text}");
    assert!(text.contains("replay ok"), "got: {text}");
    let trace = std::fs::read_to_string(&trc).unwrap();
    assert!(trace.contains("OUTCOME CAUGHT"), "got: {trace}");
}

#[test]
fn traces_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let trc = dir.path().join(name);
        let out = pursuit(&[
            "simulate",
            fixture("c4ring.tor").to_str().unwrap(),
            "--cops",
            "toroidal3:margin=4",
            "--robber",
            "random:seed=11",
            "--k",
            "3",
            "--trace",
            trc.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        std::fs::read(&trc).unwrap()
    };
    assert_eq!(run("a.trc"), run("b.trc"));
}

#[test]
fn timeout_exits_two() {
    // one cop guarding a path never catches a greedy robber on Petersen
    let out = pursuit(&[
        "simulate",
        fixture("petersen.txt").to_str().unwrap(),
        "--cops",
        "guard-path",
        "--robber",
        "greedy",
        "--k",
        "1",
        "--max-moves",
        "30",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("TIMEOUT"));
}

#[test]
fn unknown_strategy_is_usage_error() {
    let out = pursuit(&[
        "simulate",
        fixture("petersen.txt").to_str().unwrap(),
        "--cops",
        "mystery",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown cop strategy"));
}

#[test]
fn strategy_fault_exits_four() {
    // optimal cops refuse to play a game the table says they cannot win
    let out = pursuit(&[
        "simulate",
        fixture("petersen.txt").to_str().unwrap(),
        "--cops",
        "optimal",
        "--robber",
        "greedy",
        "--k",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn solve_reports_game_value() {
    let out = pursuit(&[
        "solve",
        fixture("dodecahedron.txt").to_str().unwrap(),
        "--k",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("cop win"), "got: {}", stdout(&out));
}

#[test]
fn cover_exports_window_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("win.txt");
    let svg_path = dir.path().join("win.svg");
    let out = pursuit(&[
        "cover",
        fixture("petersen.tor").to_str().unwrap(),
        "--radius",
        "6",
        "--out",
        out_path.to_str().unwrap(),
        "--svg",
        svg_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out_path.exists());
    assert!(dir.path().join("win.pos").exists());
    assert!(std::fs::read_to_string(&svg_path).unwrap().starts_with("<svg"));
}

#[test]
fn play_reads_moves_from_stdin() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_pursuit"))
        .args([
            "play",
            fixture("petersen.txt").to_str().unwrap(),
            "--cops",
            "optimal",
            "--k",
            "3",
        ])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let mut stdin = child.stdin.take().unwrap();
    // feed the same vertex forever; optimal cops catch quickly
    std::thread::spawn(move || {
        for _ in 0..200 {
            if stdin.write_all(b"9\n").is_err() {
                return;
            }
        }
    });
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("CAUGHT"));
}
