use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use qcoh::rings::RingTable;

fn qcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcoh"))
        .args(args)
        .output()
        .expect("run qcoh")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write_bundled(dir: &Path, name: &str) -> PathBuf {
    let p = dir.join(format!("{name}.qring"));
    std::fs::write(&p, RingTable::bundled(name).unwrap().unwrap().to_text()).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_then_analyze_p4() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("p4.qring");
    let o = qcoh(&["build", "--variety", "pn:4", "-o", s(&f)]);
    assert_eq!(code(&o), 0);
    let o = qcoh(&["analyze", s(&f)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("semisimple: true"));
}

#[test]
fn analyze_ig26_summary() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_bundled(dir.path(), "ig26");
    let o = qcoh(&["analyze", s(&f)]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o).lines().next().unwrap(),
        "radical dim: 1; semisimple: false; Q_Y positive definite: true"
    );
}

#[test]
fn deform_ig26_point() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_bundled(dir.path(), "ig26");
    let o = qcoh(&["deform", s(&f), "--tau", "pt"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o).lines().next().unwrap(),
        "OBSTRUCTED: 4-point candidate 2/3 ∉ ℤ≥0"
    );
}

#[test]
fn deform_ig28_congruence() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_bundled(dir.path(), "ig28");
    let o = qcoh(&["deform", s(&f), "--tau", "s:a2+2a3+a4"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("OBSTRUCTED"), "{out}");
    assert!(out.contains("in lattice: false"));
}

#[test]
fn json_carries_every_text_field() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["ig26", "f4p4"] {
        let f = write_bundled(dir.path(), name);
        let text = stdout(&qcoh(&["analyze", s(&f)]));
        let json: serde_json::Value =
            serde_json::from_str(&stdout(&qcoh(&["analyze", s(&f), "--json"]))).unwrap();
        let obj = json.as_object().unwrap();
        for line in text.lines().skip(1) {
            let (key, value) = line.split_once(": ").unwrap();
            let v = obj
                .get(key)
                .unwrap_or_else(|| panic!("{key} missing from JSON"));
            let rendered = match v {
                serde_json::Value::String(s) => s.clone(),
                v => v.to_string(),
            };
            assert_eq!(rendered, value, "{key}");
        }
        assert_eq!(obj.len(), text.lines().count() - 1);
    }
}

#[test]
fn analyze_is_stable_under_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.qring");
    assert_eq!(
        code(&qcoh(&["build", "--variety", "gr2:6", "-o", s(&a)])),
        0
    );
    let first = stdout(&qcoh(&["analyze", s(&a)]));
    let t = qcoh::rings::load_ring(&a).unwrap();
    let b = dir.path().join("b.qring");
    qcoh::rings::save_ring(&t, &b).unwrap();
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(first, stdout(&qcoh(&["analyze", s(&b)])));
    assert_eq!(first, stdout(&qcoh(&["analyze", s(&a)])));
}

#[test]
fn build_every_variety_kind() {
    let dir = tempfile::tempdir().unwrap();
    for spec in ["pn:3", "ci:4:3", "ci:5:2,2", "gr2:5", "coadj:C3"] {
        let f = dir.path().join("x.qring");
        let o = qcoh(&["build", "--variety", spec, "-o", s(&f)]);
        assert_eq!(
            code(&o),
            0,
            "{spec}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert!(qcoh::rings::load_ring(&f).is_ok());
    }
}

#[test]
fn catalog_lists_tables() {
    let o = qcoh(&["catalog"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("# cominuscule"));
    assert!(out.contains("# adjoint"));
    assert!(out.contains("E7/P7"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn verify_paper_suite() {
    let o = qcoh(&["verify", "--suite", "paper"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("report paper\n"));
    assert!(out.contains("\nfail 0\n"));
}

#[test]
fn verify_with_wrong_table_fails() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("p5.qring");
    assert_eq!(code(&qcoh(&["build", "--variety", "pn:5", "-o", s(&f)])), 0);
    let arg = format!("ig26={}", s(&f));
    let o = qcoh(&["verify", "--table", &arg]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("status FAIL"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["frobnicate"],
        vec!["build", "--variety", "xx:4", "-o", "/tmp/never.qring"],
        vec!["build", "--variety", "pn:four", "-o", "/tmp/never.qring"],
        vec!["verify", "--suite", "fast"],
        vec![],
    ] {
        let o = qcoh(&args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn data_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.qring");
    assert_eq!(code(&qcoh(&["analyze", s(&missing)])), 3);

    let bad = dir.path().join("bad.qring");
    let text = RingTable::bundled("ig26").unwrap().unwrap().to_text();
    let corrupted = text.replacen("0 0 -> 0 0 1/1", "0 0 -> 0 0 2/1", 1);
    assert_ne!(text, corrupted);
    std::fs::write(&bad, corrupted).unwrap();
    let o = qcoh(&["analyze", s(&bad)]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("bad.qring"));

    assert_eq!(
        code(&qcoh(&["build", "--variety", "ci:4:4", "-o", s(&bad)])),
        3
    );
}

#[test]
fn help_exits_0() {
    let o = qcoh(&["--help"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("verify"));
}

#[test]
fn run_in_process() {
    let mut out = String::new();
    let argv: Vec<String> = ["qcoh", "catalog"].iter().map(|s| s.to_string()).collect();
    assert_eq!(qcoh_cli::run(&argv, &mut out), qcoh_cli::EXIT_OK);
    assert!(out.contains("dim F = 2(c1 - dim Gamma2)"));
}
