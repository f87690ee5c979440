use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn cgraph(args: &[&str]) -> Output {
    cgraph_with_stdin(args, None)
}

fn cgraph_with_stdin(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cgraph"))
        .args(args)
        .env("CGRAPH_FIXTURES", fixtures())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or_default()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout_ok(args: &[&str]) -> String {
    let out = cgraph(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn fixture(name: &str) -> String {
    fixtures().join(name).to_string_lossy().into_owned()
}

#[test]
fn manifest_regenerates_identically() {
    let dir = tempfile::tempdir().unwrap();
    fs::copy(fixtures().join("MANIFEST"), dir.path().join("MANIFEST")).unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_cgraph"))
        .args(["fixtures", "regen", "--fixtures-dir"])
        .arg(dir.path())
        .stdout(Stdio::null())
        .status()
        .unwrap();
    assert!(status.success());
    let mut count = 0;
    for entry in fs::read_dir(dir.path()).unwrap() {
        let name = entry.unwrap().file_name();
        let fresh = fs::read(dir.path().join(&name)).unwrap();
        let stored = fs::read(fixtures().join(&name)).unwrap();
        assert!(fresh == stored, "{name:?} differs from its manifest build");
        count += 1;
    }
    assert!(count > 20);
    let check = stdout_ok(&["fixtures", "check"]);
    assert!(check.contains("stale = 0"), "{check}");
}

#[test]
fn homology_of_r1() {
    assert_eq!(stdout_ok(&["homology", &fixture("r1.cg")]), "H_0 = Z\nH_1 = Z^2\nH_2 = Z\nchi = 0\n");
    assert_eq!(stdout_ok(&["--format", "kv", "euler", "r1.cg"]), "chi=0\n");
}

#[test]
fn degree_of_necklace() {
    let out = stdout_ok(&["degree", &fixture("necklace.cg")]);
    assert_eq!(out.lines().filter(|l| l.starts_with("jacket ")).count(), 3);
    assert!(out.contains("degree = 1\n"));
    assert!(out.contains("faces = 8\n"));
    assert_eq!(stdout_ok(&["melonic", "necklace.cg"]), "melonic = false\n");
    assert_eq!(stdout_ok(&["melonic", "dipole3.cg"]), "melonic = true\n");
}

#[test]
fn tg_boundary_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let t1 = dir.path().join("t1.cg");
    let t1 = t1.to_str().unwrap();
    stdout_ok(&["build", "tg", "--genus", "1", "-o", t1]);
    let boundary = stdout_ok(&["boundary", t1]);
    let out = cgraph_with_stdin(&["iso", "-", &fixture("c1.cg")], Some(boundary.as_bytes()));
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "isomorphic\n");
    assert_eq!(stdout_ok(&["iso", "c1.cg", "c2.cg"]), "not isomorphic\n");
}

#[test]
fn build_forms_agree() {
    let a = stdout_ok(&["build", "qgbc", "0", "1", "1"]);
    let b = stdout_ok(&["build", "qgbc(0,1,1)"]);
    assert_eq!(a, b);
    assert_eq!(stdout_ok(&["build", "qg", "--genus", "2"]), fs::read_to_string(fixture("q2.cg")).unwrap());
}

#[test]
fn report_sections() {
    let r1 = stdout_ok(&["report", "r1.cg"]);
    assert!(r1.contains("2-bubbles: {01}:1 {02}:1 {12}:2\n"), "{r1}");
    assert!(r1.contains("boundary: empty\n"));
    assert!(r1.contains("H_1 = Z^2\n"));
    let l = stdout_ok(&["report", "l23.cg"]);
    assert!(l.contains("boundary components: 2\n"), "{l}");
    assert!(l.contains("boundary genera: 2, 3\n"));
    assert!(l.contains("member phi4-rank3: true\n"));
    assert_eq!(l, stdout_ok(&["report", "l23.cg"]));
}

#[test]
fn ribbon_files() {
    assert_eq!(stdout_ok(&["genus", "w.rb"]), "genus = 1\n");
    assert_eq!(stdout_ok(&["bc", "w.rb"]), "bc = 1\n");
    assert_eq!(stdout_ok(&["genus", "q.rb"]), "genus = 0\n");
    assert_eq!(stdout_ok(&["bc", "q.rb"]), "bc = 3\n");
    assert_eq!(stdout_ok(&["genus", "r.rb"]), "genus = 1\n");
    assert_eq!(stdout_ok(&["genus", "r1.cg"]), "genus = 1\n");
}

#[test]
fn surgery_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let opened = dir.path().join("open.cg");
    let opened = opened.to_str().unwrap();
    stdout_ok(&["open", "necklace.cg", "e0", "-o", opened]);
    let capped = stdout_ok(&["cap", opened, "e0.w", "e0.b"]);
    let out = cgraph_with_stdin(&["iso", "-", "necklace.cg"], Some(capped.as_bytes()));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "isomorphic\n");
    assert_eq!(stdout_ok(&["cap", opened, "--all"]), capped);

    let sum = stdout_ok(&["sum", "r1.cg", "e1", "r1.cg", "e1"]);
    let out = cgraph_with_stdin(&["euler", "-"], Some(sum.as_bytes()));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "chi = -2\n");

    let cone = stdout_ok(&["cone", "c1.cg"]);
    let boundary = cgraph_with_stdin(&["boundary", "-"], Some(cone.as_bytes())).stdout;
    let out = cgraph_with_stdin(&["iso", "-", "c1.cg"], Some(&boundary));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "isomorphic\n");
}

#[test]
fn models() {
    let m = stdout_ok(&["member", "t1.cg", "--model", "phi4-rank3"]);
    assert!(m.starts_with("member = true\n"));
    assert_eq!(
        stdout_ok(&["enumerate", "--model", "phi4-matrix", "-k", "2", "--dedup", "--connected"]),
        "raw = 24\ngraphs = 5\n"
    );
    let dir = tempfile::tempdir().unwrap();
    let s = stdout_ok(&["find-separators", "--model", "phi4-rank3", "-o", dir.path().to_str().unwrap()]);
    assert!(s.contains("p.vertices = 8\n"));
    let out = cgraph(&["iso", dir.path().join("p.cg").to_str().unwrap(), "p.cg"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "isomorphic\n");
}

#[test]
fn dot_and_bubbles() {
    let dot = stdout_ok(&["export-dot", "dipole3.cg"]);
    assert!(dot.starts_with("graph G {"));
    assert_eq!(dot.matches(" -- ").count(), 3);
    let b = stdout_ok(&["bubbles", "r1.cg", "--colors", "12"]);
    assert!(b.starts_with("count = 2\n"), "{b}");
}

#[test]
fn exit_codes() {
    assert_eq!(cgraph(&["homology", "missing.cg"]).status.code(), Some(1));
    assert_eq!(cgraph(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cgraph(&["homology"]).status.code(), Some(2));
    let bad = cgraph_with_stdin(&["homology", "-"], Some(b"colors 3 closed\nv a w\n"));
    assert_eq!(bad.status.code(), Some(1));
    let invalid = cgraph_with_stdin(&["validate", "-"], Some(b"colors 2 closed\nv a w\nv b b\ne x 1 a b\n"));
    assert_eq!(invalid.status.code(), Some(1));
    assert!(String::from_utf8(invalid.stdout).unwrap().starts_with("invalid: "));
    assert_eq!(cgraph(&["homology", "two_point.cg"]).status.code(), Some(1));
    assert_eq!(cgraph(&["build", "nosuch"]).status.code(), Some(1));
}
