use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn config(name: &str) -> PathBuf {
    root().join("configs").join(format!("{name}.cfg"))
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn lihull(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lihull")).args(args).output().expect("binary runs")
}

fn run_ok(args: &[&str]) -> String {
    let out = lihull(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn field<'a>(report: &'a str, key: &str) -> &'a str {
    report
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        .unwrap_or_else(|| panic!("no `{key}` in\n{report}"))
}

#[test]
fn ideal_families_match_golden_files() {
    for name in ["naturals", "free2", "cone2", "ns23", "axb"] {
        let cfg = config(name);
        let got = run_ok(&["ideals", cfg.to_str().unwrap()]);
        let want = fs::read_to_string(golden(&format!("ideals_{name}.txt"))).unwrap();
        assert_eq!(got, want, "{name}");
    }
}

#[test]
fn matrix_exports_match_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config("naturals");
    run_ok(&["matrix", cfg.to_str().unwrap(), "--window", "6", "--length", "1", "--out", dir.path().to_str().unwrap()]);
    let want_dir = golden("matrix_naturals");
    let mut names: Vec<_> = fs::read_dir(&want_dir).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    let mut got_names: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    got_names.sort();
    assert_eq!(got_names, names);
    for name in names {
        let got = fs::read_to_string(dir.path().join(&name)).unwrap();
        let want = fs::read_to_string(want_dir.join(&name)).unwrap();
        assert_eq!(got, want, "{name:?}");
    }
}

#[test]
fn analyze_naturals() {
    let cfg = config("naturals");
    let r = run_ok(&["analyze", cfg.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(field(&r, "left_reversible"), "yes");
    assert_eq!(field(&r, "clifford"), "holds");
    assert_eq!(field(&r, "independence"), "independent");
    assert!(field(&r, "estar").starts_with("strongly E*-unitary"));
    assert_eq!(field(&r, "group"), "Z");
}

#[test]
fn analyze_free_monoid_has_reversibility_witness() {
    let cfg = config("free2");
    let r = run_ok(&["analyze", cfg.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(field(&r, "left_reversible"), "no");
    assert_eq!(field(&r, "left_reversible.witness"), "a,b");
}

#[test]
fn analyze_two_three() {
    let cfg = config("ns23");
    let r = run_ok(&["analyze", cfg.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(field(&r, "clifford"), "fails");
    assert_eq!(field(&r, "clifford.witness"), "2,3");
    assert_eq!(field(&r, "independence"), "fails");
    assert_eq!(field(&r, "independence.witness"), "{2,4..} ∪ {3,5..} = {2..}");
}

#[test]
fn flags_override_config_bounds() {
    let cfg = config("naturals");
    let r = run_ok(&["ideals", cfg.to_str().unwrap(), "--depth", "1", "--format", "machine"]);
    assert_eq!(field(&r, "count"), "2");
}

#[test]
fn hull_oracle_reports_window() {
    let cfg = config("cone2");
    let out = run_ok(&["hull", cfg.to_str().unwrap(), "--oracle", "--window", "20"]);
    assert_eq!(out.lines().filter(|l| l.contains(" | ")).count(), 25);
    assert!(out.lines().last().unwrap().starts_with("# oracle: 25 elements, window 20"), "{out}");
}

#[test]
fn filters_are_listed_by_minimal_element() {
    let cfg = config("free2");
    let out = run_ok(&["filters", cfg.to_str().unwrap(), "--depth", "1"]);
    assert_eq!(out, "[S]\n[aS]\n[bS]\n");
}

#[test]
fn group_reports_folner_table() {
    let cfg = config("naturals");
    let out = run_ok(&["group", cfg.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(field(&out, "group"), "Z");
    assert_eq!(field(&out, "folner(2+S)"), "c=2 N=10:4/5 N=100:49/50 N=1000:499/500");
}

#[test]
fn check_is_deterministic() {
    let cfg = config("cone2");
    let a = run_ok(&["check", cfg.to_str().unwrap()]);
    let b = run_ok(&["check", cfg.to_str().unwrap()]);
    assert_eq!(a, b);
    assert!(a.ends_with("0 failed\n"), "{a}");
}

#[test]
fn exit_status_contract() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.cfg");
    fs::write(&bad, "kind = cone\nparams = two\n").unwrap();
    let out = lihull(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2: field `params`"));

    assert_eq!(lihull(&["analyze", "missing.cfg"]).status.code(), Some(2));
    assert_eq!(lihull(&["frobnicate"]).status.code(), Some(2));

    let cfg = config("free2");
    let out = lihull(&["group", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not left reversible"));
}
