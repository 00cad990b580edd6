//! The `hyperideal` binary against frozen outputs.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn doc() -> String {
    root().join("examples/data/paper-example.json").display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperideal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(root().join("tests/golden").join(name)).unwrap()
}

fn check(args: &[&str], code: i32, name: &str) {
    let out = run(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden(name), "{args:?}");
}

#[test]
fn verify_worked_example() {
    check(&["verify", &doc()], 0, "verify_paper_example.txt");
}

#[test]
fn classify_worked_example() {
    check(
        &["classify", &doc(), "--ideal", "0,2", "--s", "2", "--mode", "lenient"],
        0,
        "classify_paper_example.txt",
    );
    assert!(golden("classify_paper_example.txt")
        .starts_with("not an S-hyperideal; witness (1,1,2) at position 3\n"));
}

#[test]
fn single_theorem_json() {
    check(&["theorems", &doc(), "--only", "T5", "--format", "json"], 0, "theorems_t5.json");
    let v: serde_json::Value = serde_json::from_str(&golden("theorems_t5.json")).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["status"], "holds");
}

#[test]
fn ideals_and_quotient() {
    check(&["ideals", "fixture:z6", "--format", "json"], 0, "ideals_z6.json");
    check(&["quotient", "fixture:z6", "--ideal", "0,3", "--format", "json"], 0, "quotient_z6.json");
    check(&["fixtures"], 0, "fixtures.txt");
}

#[test]
fn default_suite_is_reproducible() {
    // the suite reports counterexamples on the example ring, hence exit 1
    check(&["theorems", "--format", "json"], 1, "suite_default.json");
    let a = run(&["theorems", "--format", "json"]).stdout;
    let b = run(&["theorems", "--format", "json"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn quotient_document_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z6-mod.json");
    let p = path.display().to_string();
    let out = run(&["quotient", "fixture:z6", "--ideal", "0,3", "--out", &p]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let out = run(&["verify", &p, "--mode", "strict"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().ends_with("all axioms hold\n"));
    let out = run(&["product", &p, "fixture:z2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 6);
}

#[test]
fn expectations_and_errors() {
    let d = doc();
    let expect = |e: &str| {
        run(&["classify", &d, "--ideal", "0,2", "--s", "2", "--expect", e])
            .status
            .code()
    };
    assert_eq!(expect("neither"), Some(0));
    assert_eq!(expect("s-hyperideal"), Some(1));
    assert_eq!(expect("bogus"), Some(2));

    let out = run(&["classify", &d, "--ideal", "0,x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("x"));

    let out = run(&["verify", &d, "--mode", "strict"]);
    assert_eq!(out.status.code(), Some(2));

    let missing = Path::new("/nonexistent/ring.json").display().to_string();
    let out = run(&["verify", &missing]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains(&missing));

    assert_eq!(run(&["theorems", "--only", "T5,NOPE"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn broken_document_names_the_key() {
    let dir = tempfile::tempdir().unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(doc()).unwrap()).unwrap();
    v["g"].as_object_mut().unwrap().remove("1,1,2");
    let path = dir.path().join("broken.json");
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let out = run(&["verify", &path.display().to_string()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1,1,2"));
}
