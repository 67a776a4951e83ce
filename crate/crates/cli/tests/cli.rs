use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_multigroup"));
    c.env_remove("MULTIGROUP_GUARD");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn spec_file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

const PASSING: &str = "carrier cyclic(5);\nop q = core_quandle();\ncheck quandle q;\n";
const FAILING: &str = "carrier cyclic(5);\nop q = core_quandle();\ncheck assoc q;\n";

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let ok = run(&["verify", path(&spec_file(&dir, "ok.mg", PASSING))]);
    assert_eq!(ok.status.code(), Some(0), "{}", stderr(&ok));
    assert!(stdout(&ok).contains("verdict: pass"));

    let bad = run(&["verify", path(&spec_file(&dir, "bad.mg", FAILING))]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("witness ("), "{}", stdout(&bad));

    let broken = run(&["verify", path(&spec_file(&dir, "broken.mg", "carrier cyclic(5);\nop q = nope();\n"))]);
    assert_eq!(broken.status.code(), Some(2));
    assert!(stderr(&broken).contains("broken.mg:2:8: error"), "{}", stderr(&broken));
    assert!(stdout(&broken).is_empty());

    let missing = run(&["verify", path(&dir.path().join("absent.mg"))]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn compile_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let singular = spec_file(&dir, "s.mg", "carrier gl(2,2); op g = gl_group_op(M=[[1,1],[1,1]]);");
    let o = run(&["verify", path(&singular)]);
    assert_eq!(o.status.code(), Some(2));
    let large = spec_file(&dir, "l.mg", "carrier gl(3,5);");
    let o = run(&["verify", path(&large)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("above the guard"), "{}", stderr(&o));
}

#[test]
fn warnings_do_not_change_exit_code() {
    let dir = TempDir::new().unwrap();
    let f =
        spec_file(&dir, "w.mg", "carrier cyclic(5); op q = core_quandle(); op unused = group_op(); check quandle q;");
    let o = run(&["verify", path(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("warning"), "{}", stderr(&o));
}

#[test]
fn json_is_byte_stable() {
    let dir = TempDir::new().unwrap();
    let text = "carrier symmetric(3);\nop a = conj_quandle();\nop b = core_quandle();\ncheck quandle a;\ncheck multiquandle a b;\n";
    let f = spec_file(&dir, "s.mg", text);
    let args = ["verify", path(&f), "--format", "json", "--no-timing"];
    let first = run(&args);
    let second = run(&args);
    let single = bin().args(["--threads", "1"]).args(args).output().unwrap();
    assert_eq!(first.status.code(), Some(1));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, single.stdout);

    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["checks", "spec", "verdict"]);
    assert_eq!(v["verdict"], "fail");
    assert_eq!(v["spec"]["declared_class"], "quandle-system");
    assert_eq!(v["checks"][0]["report"]["verdict"], "pass");
    assert!(v["checks"][0].get("wall_ms").is_none());

    let timed = run(&["verify", path(&f), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&timed.stdout).unwrap();
    assert!(v["checks"][1]["wall_ms"].is_number());
}

#[test]
fn enumerate_counts() {
    for (expr, n) in
        [("gl(2,2)", 6), ("gl(2,3)", 48), ("cyclic(7)", 7), ("symmetric(4)", 24), ("cyclic(2) x gl(2,2)", 12)]
    {
        let o = run(&["enumerate", expr]);
        assert_eq!(o.status.code(), Some(0), "{expr}: {}", stderr(&o));
        assert_eq!(stdout(&o).trim(), n.to_string(), "{expr}");
    }
    let listed = run(&["enumerate", "cyclic(3)", "--list"]);
    assert_eq!(stdout(&listed), "3\n0\n1\n2\n");
}

#[test]
fn enumerate_guard() {
    let o = run(&["enumerate", "gl(3,5)"]);
    assert_eq!(o.status.code(), Some(2));
    let o = bin().args(["enumerate", "cyclic(7)"]).env("MULTIGROUP_GUARD", "5").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = bin().args(["enumerate", "cyclic(7)"]).env("MULTIGROUP_GUARD", "lots").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("MULTIGROUP_GUARD"));
    let o = run(&["enumerate", "gl(2,"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn demo_single_claims() {
    let o = run(&["demo", "S5-zbrace-counterexample"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("a⊣(b⊣c) = 1"), "{out}");
    assert!(out.contains("a⊣(b⊢c) = 9"), "{out}");

    let o = run(&["demo", "S3-unit"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("[REFUTED-AS-STATED] S3-unit"));

    let o = run(&["demo", "S3-group", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["claims"][0]["status"], "PASS");
    assert_eq!(v["verdict"], "pass");

    let o = run(&["demo", "S9-missing"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown claim 'S9-missing'"));
}

#[test]
fn demo_all_json_is_stable_across_thread_counts() {
    let a = run(&["demo", "--format", "json"]);
    let b = bin().args(["--threads", "1", "demo", "all", "--format", "json"]).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["claims"].as_array().unwrap().len(), 13);
}

#[test]
fn bundled_specs() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../specs");
    let mut seen = 0;
    for entry in std::fs::read_dir(&root).unwrap() {
        let p = entry.unwrap().path();
        if p.extension().and_then(|e| e.to_str()) != Some("mg") {
            continue;
        }
        seen += 1;
        let want = if p.file_name().unwrap() == "not_a_dimonoid.mg" { 1 } else { 0 };
        let o = run(&["verify", "--no-timing", path(&p)]);
        assert_eq!(o.status.code(), Some(want), "{}: {}{}", p.display(), stdout(&o), stderr(&o));
    }
    assert!(seen >= 5);
}
