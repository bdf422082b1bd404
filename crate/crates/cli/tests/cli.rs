use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const Z_SAMPLED: &str = r#"{"instance":{"kind":"group","group":{"kind":"int"}},"gradings":[["identity","negation"]],"enum":{"mode":"sampled","count":200,"seed":42,"window":8}}"#;

struct Work {
    dir: TempDir,
}

impl Work {
    fn new() -> Work {
        Work { dir: tempfile::tempdir().unwrap() }
    }

    fn spec(&self, name: &str, body: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        fs::write(&p, body).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

fn mhag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mhag")).args(args).env("MHAG_THREADS", "2").output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sampled_integers_pass_all_suites() {
    let w = Work::new();
    let spec = w.spec("z.json", Z_SAMPLED);
    let o = mhag(&["verify", "--spec", spec.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let reports: Vec<Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!reports.is_empty());
    for r in &reports {
        let keys: Vec<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["axiom", "cases", "counterexample", "status"]);
        assert_eq!(r["status"], "pass");
    }
}

#[test]
fn corrupted_antipode_fails_with_named_axiom() {
    let w = Work::new();
    let body = Z_SAMPLED.replace(r#""instance""#, r#""mutation":"antipode-sign","instance""#);
    let spec = w.spec("z.json", &body);
    let o = mhag(&["verify", "--spec", spec.to_str().unwrap(), "--suite", "hopf"]);
    assert_eq!(code(&o), 1);
    let reports: Vec<Value> = serde_json::from_str(&stdout(&o)).unwrap();
    let failed: Vec<&Value> = reports.iter().filter(|r| r["status"] == "fail").collect();
    assert!(failed.iter().any(|r| r["axiom"].as_str().unwrap().starts_with("antipode axiom")));
    for r in failed {
        let cx = &r["counterexample"];
        assert_ne!(cx["lhs"], cx["rhs"]);
    }
}

#[test]
fn input_errors_exit_2() {
    let w = Work::new();
    let bad = w.spec("bad.json", "{");
    assert_eq!(code(&mhag(&["verify", "--spec", bad.to_str().unwrap()])), 2);
    let unknown = w.spec("u.json", r#"{"instance":{"kind":"lie-algebra"}}"#);
    assert_eq!(code(&mhag(&["verify", "--spec", unknown.to_str().unwrap()])), 2);
    let spec = w.spec("z.json", Z_SAMPLED);
    assert_eq!(code(&mhag(&["verify", "--spec", spec.to_str().unwrap(), "--suite", "nope"])), 2);
    assert_eq!(code(&mhag(&["verify", "--spec", w.path("missing.json").to_str().unwrap()])), 2);
    assert_eq!(code(&mhag(&["verify", "--spec", spec.to_str().unwrap(), "--window", "0"])), 2);
    assert_eq!(code(&mhag(&["frobnicate"])), 2);
}

#[test]
fn non_automorphism_is_rejected() {
    let w = Work::new();
    let spec = w.spec(
        "c3.json",
        r#"{"instance":{"kind":"group","group":{"kind":"cyclic","order":3}},"gradings":[["identity",{"kind":"map","images":{"0":"0","1":"1","2":"1"}}]]}"#,
    );
    let o = mhag(&["verify", "--spec", spec.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}

#[test]
fn reports_are_deterministic() {
    let w = Work::new();
    let body = Z_SAMPLED.replace(r#""instance""#, r#""mutation":"antipode-sign","instance""#);
    let spec = w.spec("z.json", &body);
    let a = mhag(&["verify", "--spec", spec.to_str().unwrap(), "--seed", "7"]);
    let b = mhag(&["verify", "--spec", spec.to_str().unwrap(), "--seed", "7"]);
    assert_eq!(code(&a), 1);
    assert_eq!(a.stdout, b.stdout);
    let c = mhag(&["verify", "--spec", spec.to_str().unwrap(), "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn export_of_integers_is_refused() {
    let w = Work::new();
    let spec = w.spec("z.json", Z_SAMPLED);
    let o = mhag(&["export", "--spec", spec.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("infinite instance"));
}

#[test]
fn export_is_byte_stable_and_sized() {
    let w = Work::new();
    let spec = w.spec("z2.json", r#"{"instance":{"kind":"group","group":{"kind":"cyclic","order":2}}}"#);
    let (p1, p2) = (w.path("a.json"), w.path("b.json"));
    assert_eq!(code(&mhag(&["export", "--spec", spec.to_str().unwrap(), "--out", p1.to_str().unwrap()])), 0);
    assert_eq!(code(&mhag(&["export", "--spec", spec.to_str().unwrap(), "--out", p2.to_str().unwrap()])), 0);
    let (a, b) = (fs::read(&p1).unwrap(), fs::read(&p2).unwrap());
    assert_eq!(a, b);
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["basis"].as_array().unwrap().len(), 4);
    let product = v["product"].as_array().unwrap();
    assert!(product.len() <= 16);
    let idx: Vec<(u64, u64, u64)> = product.iter().map(|e| (e[0].as_u64().unwrap(), e[1].as_u64().unwrap(), e[2].as_u64().unwrap())).collect();
    let mut sorted = idx.clone();
    sorted.sort();
    assert_eq!(idx, sorted);
}

#[test]
fn eval_renders_results() {
    let w = Work::new();
    let spec = w.spec("s3.json", r#"{"instance":{"kind":"group","group":{"kind":"symmetric","degree":3}}}"#);
    let s = spec.to_str().unwrap();
    let o = mhag(&["eval", "--spec", s, "mul", r#"["identity","identity"]"#, r#"[["(12)","(12)"]]"#, r#"[["(12)","(13)"]]"#]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "δ_(12)⋈(132)");
    let o = mhag(&["eval", "--spec", s, "counit", r#"[[3,"e","(123)"]]"#]);
    assert_eq!(stdout(&o).trim(), "3");
    let o = mhag(&["eval", "--spec", s, "ginv", r#"[{"kind":"inner","by":"(12)"},"identity"]"#]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&mhag(&["eval", "--spec", s, "mul", "[]"])), 2);
    assert_eq!(code(&mhag(&["eval", "--spec", s, "bogus"])), 2);
}

#[test]
fn oracle_compare_passes_for_s3() {
    let w = Work::new();
    let spec = w.spec("s3.json", r#"{"instance":{"kind":"group","group":{"kind":"symmetric","degree":3}},"gradings":"inner"}"#);
    let o = mhag(&["oracle-compare", "--spec", spec.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["checked"].as_array().unwrap().iter().all(|r| r["status"] == "pass"));
}

#[test]
fn suite_list_selects_suites() {
    let w = Work::new();
    let spec = w.spec("c2.json", r#"{"instance":{"kind":"group","group":{"kind":"cyclic","order":2}}}"#);
    let o = mhag(&["verify", "--spec", spec.to_str().unwrap(), "--suite", "crossing,lemma42"]);
    assert_eq!(code(&o), 0);
    let reports: Vec<Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(reports.iter().any(|r| r["axiom"] == "xi action"));
    assert!(reports.iter().any(|r| r["axiom"] == "w intertwines b"));
    assert!(!reports.iter().any(|r| r["axiom"] == "coassociativity"));
}
