//! End-to-end tests of the installed binary: every subcommand, every exit
//! code, and the byte-stability promise for reports.

use std::path::Path;
use std::process::{Command, Output};

fn chordal(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chordal"))
        .args(args)
        .current_dir(dir)
        .env_remove("CHORDAL_CAPS")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

#[test]
fn generate_writes_drawing_witnesses_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let out = chordal(&["generate", "ktt", "2", "--out", "k", "--svg"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let drawing: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("k.drawing.json")).unwrap())
            .unwrap();
    assert_eq!(drawing["order"].as_array().unwrap().len(), 8);

    let witnesses: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("k.witnesses.json")).unwrap(),
    )
    .unwrap();
    assert!(witnesses["witnesses"].get("bundles").is_some());

    let svg = std::fs::read_to_string(dir.path().join("k.svg")).unwrap();
    assert!(svg.starts_with("<svg "));
}

#[test]
fn generate_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(chordal(&["generate", "wat", "3"], dir.path()).status.code(), Some(2));
    assert_eq!(chordal(&["generate", "ktt"], dir.path()).status.code(), Some(2));
    assert_eq!(
        chordal(&["generate", "ktt", "1", "2"], dir.path()).status.code(),
        Some(2)
    );
    assert_eq!(chordal(&["generate", "ktt", "0"], dir.path()).status.code(), Some(2));
}

#[test]
fn analyze_reports_crossing_treewidth_of_the_chord_diagram() {
    let dir = tempfile::tempdir().unwrap();
    assert!(chordal(&["generate", "ktt", "3", "--out", "k3"], dir.path())
        .status
        .success());
    let out = chordal(&["analyze", "k3.drawing.json"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["crossing_graph"]["treewidth"], 3);
    assert_eq!(v["bounds"]["tw_xd"], 3);
    assert_eq!(v["report"]["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn analyze_accepts_linear_straight_line_drawings() {
    let dir = tempfile::tempdir().unwrap();
    assert!(chordal(&["generate", "expander", "3", "--out", "e3"], dir.path())
        .status
        .success());
    let out = chordal(&["analyze", "e3.drawing.json"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert!(v.get("bounds").is_some(), "linear drawings get the full check set");
    assert!(v["graph"]["radius"].is_i64());
}

#[test]
fn analyze_rejects_junk_and_respects_caps() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("junk.json"), "{not json").unwrap();
    assert_eq!(
        chordal(&["analyze", "junk.json"], dir.path()).status.code(),
        Some(2)
    );

    assert!(chordal(&["generate", "ktt", "2", "--out", "k"], dir.path())
        .status
        .success());
    let strict = chordal(
        &["analyze", "k.drawing.json", "--caps", "treewidth=1"],
        dir.path(),
    );
    assert_eq!(strict.status.code(), Some(2));

    let forced = chordal(
        &["analyze", "k.drawing.json", "--caps", "treewidth=1", "--force"],
        dir.path(),
    );
    assert!(forced.status.success(), "{}", String::from_utf8_lossy(&forced.stderr));
    let v = stdout_json(&forced);
    assert!(v["graph"].get("treewidth").is_none(), "over-cap solver skipped");
    assert!(v.get("bounds").is_none(), "over-cap inequality set skipped");
}

#[test]
fn caps_come_from_the_environment_too() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_chordal"))
        .args(["verify", "nok2k", "--k", "1"])
        .current_dir(dir.path())
        .env("CHORDAL_CAPS", "enumeration=4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_are_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "section3", "--seeds", "12", "--out", "report.json"];
    let first = chordal(&args, dir.path());
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stderr));
    let written = std::fs::read(dir.path().join("report.json")).unwrap();
    let second = chordal(&args, dir.path());
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(std::fs::read(dir.path().join("report.json")).unwrap(), written);

    let v = stdout_json(&first);
    assert_eq!(v["suite"], "section3");
    assert_eq!(v["instances"], 12);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_counts_every_enumerated_order() {
    let dir = tempfile::tempdir().unwrap();
    let out = chordal(&["verify", "nok2k", "--k", "1"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout_json(&out)["instances"], 12);
}

#[test]
fn verify_rejects_unknown_suites() {
    let dir = tempfile::tempdir().unwrap();
    let out = chordal(&["verify", "nope"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn export_svg_renders_both_drawing_kinds() {
    let dir = tempfile::tempdir().unwrap();
    assert!(chordal(&["generate", "ktt", "2", "--out", "k"], dir.path())
        .status
        .success());
    assert!(chordal(&["generate", "star_forest", "3", "--out", "s"], dir.path())
        .status
        .success());
    for stem in ["k", "s"] {
        let input = format!("{stem}.drawing.json");
        let out = chordal(&["export-svg", &input], dir.path());
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        let svg = std::fs::read_to_string(dir.path().join(format!("{stem}.drawing.svg")))
            .or_else(|_| std::fs::read_to_string(dir.path().join(format!("{stem}.svg"))))
            .unwrap();
        assert!(svg.starts_with("<svg "));
    }
}
