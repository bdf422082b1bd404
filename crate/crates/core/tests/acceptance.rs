//! End-to-end acceptance run: one pass/fail line per criterion, exact equality
//! throughout. Built with `harness = false`; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use mhag_core::crossed::Mutation;
use mhag_core::suite::{self, literal_comparison, AxiomReport, Context};
use mhag_core::session::Session;

struct Outcome {
    ok: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { ok: true, notes: vec![] }
    }

    fn require(&mut self, what: &str, reports: &[AxiomReport]) {
        let cases: usize = reports.iter().map(|r| r.cases).sum();
        let failed: Vec<&AxiomReport> = reports.iter().filter(|r| !r.passed()).collect();
        if reports.is_empty() {
            self.ok = false;
            self.notes.push(format!("{what}: nothing checked"));
        } else if failed.is_empty() {
            self.notes.push(format!("{what}: {} identities, {cases} cases", reports.len()));
        } else {
            self.ok = false;
            for r in failed {
                self.notes.push(format!("{what}: FAILED {} {}", r.axiom, serde_json::to_string(&r.counterexample).unwrap()));
            }
        }
    }

    fn within(&mut self, t: Duration, limit: u64) {
        if t.as_secs() >= limit {
            self.ok = false;
            self.notes.push(format!("took {t:.1?}, limit {limit}s"));
        }
    }
}

fn group(v: Value) -> Value {
    json!({"kind": "group", "group": v})
}

fn cyclic(n: usize) -> Value {
    json!({"kind": "cyclic", "order": n})
}

fn s3() -> Value {
    json!({"kind": "symmetric", "degree": 3})
}

fn exhaustive() -> Value {
    json!({"mode": "exhaustive"})
}

fn sampled(count: usize, window: i64) -> Value {
    json!({"mode": "sampled", "count": count, "seed": 42, "window": window})
}

fn inner(by: &str) -> Value {
    json!({"kind": "inner", "by": by})
}

/// `{(ι,ι), (ι,inv), (inv,ι), (inv,inv)}` with `inv` the inversion of `ℤ/n`.
fn cyclic_gradings(n: usize) -> Value {
    let inv = json!({"kind": "map", "images": {"1": (n - 1).to_string()}});
    json!([["identity", "identity"], ["identity", inv], [inv, "identity"], [inv, inv]])
}

/// Four pairwise non-commuting gradings of `S3`.
fn s3_gradings() -> Value {
    json!([["identity", "identity"], [inner("(12)"), inner("(123)")], [inner("(123)"), inner("(12)")], [inner("(13)"), inner("(23)")]])
}

fn sign_gradings() -> Value {
    json!([["identity", "identity"], ["identity", "negation"], ["negation", "identity"], ["negation", "negation"]])
}

fn ctx(instance: Value, gradings: Value, mode: Value) -> Context {
    ctx_with(json!({"instance": instance, "gradings": gradings, "enum": mode}))
}

fn ctx_with(spec: Value) -> Context {
    Session::from_json(&spec).and_then(|s| s.context()).unwrap_or_else(|e| panic!("{spec}: {e}"))
}

fn suite(name: &str, c: &Context) -> Vec<AxiomReport> {
    suite::lookup(name).unwrap().run(c)
}

fn only(reports: Vec<AxiomReport>, keep: impl Fn(&str) -> bool) -> Vec<AxiomReport> {
    reports.into_iter().filter(|r| keep(&r.axiom)).collect()
}

fn group_oracle() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    o.require("Z/4 trivial", &suite("oracle", &ctx(group(cyclic(4)), json!([["identity", "identity"]]), exhaustive())));
    o.require("S3 36 inner pairs", &suite("oracle", &ctx(group(s3()), json!("inner"), exhaustive())));
    o.within(t.elapsed(), 60);
    o
}

fn double_oracle() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let c = ctx(json!({"kind": "drinfeld-double", "group": s3()}), json!("inner"), sampled(2000, 1));
    let checked = only(suite("oracle", &c), |a| a.contains("product") || a.contains("antipode"));
    o.require("D(S3) corrected closed forms, 2000 seeded cases", &checked);
    for r in literal_comparison(&c) {
        o.notes.push(format!("informational: literal {} {}", r.axiom, if r.passed() { "agrees" } else { "disagrees" }));
    }
    o.within(t.elapsed(), 120);
    o
}

const HOPF: &[&str] = &["coassociativity", "counit", "antipode axiom", "delta multiplicative", "antipode anti-homomorphism"];

fn hopf_axioms() -> Outcome {
    let mut o = Outcome::new();
    let keep = |a: &str| HOPF.iter().any(|h| a.starts_with(h));
    for n in 2..=6 {
        o.require(&format!("Z/{n}"), &only(suite("hopf", &ctx(group(cyclic(n)), cyclic_gradings(n), exhaustive())), keep));
    }
    o.require("S3", &only(suite("hopf", &ctx(group(s3()), s3_gradings(), exhaustive())), keep));
    let ks3 = json!({"kind": "finite-dim-hopf", "group": s3()});
    o.require("KS3 structure constants", &only(suite("hopf", &ctx(ks3, s3_gradings(), exhaustive())), keep));
    o.require("Z sampled 200, window 8", &only(suite("hopf", &ctx(group(json!({"kind": "int"})), sign_gradings(), sampled(200, 8))), keep));
    o
}

fn crossing() -> Outcome {
    let mut o = Outcome::new();
    o.require("S3 36 inner pairs", &suite("crossing", &ctx(group(s3()), json!("inner"), exhaustive())));
    o
}

fn quasitriangular() -> Outcome {
    let mut o = Outcome::new();
    for n in [2, 3] {
        o.require(&format!("Z/{n}"), &suite("quasitriangular", &ctx(group(cyclic(n)), cyclic_gradings(n), exhaustive())));
    }
    o.require("S3", &suite("quasitriangular", &ctx(group(s3()), s3_gradings(), exhaustive())));
    o.require("Z sampled", &suite("quasitriangular", &ctx(group(json!({"kind": "int"})), sign_gradings(), sampled(200, 8))));
    for (name, g, gr) in [("KZ/2", cyclic(2), cyclic_gradings(2)), ("KZ/3", cyclic(3), cyclic_gradings(3)), ("KS3", s3(), s3_gradings())] {
        let c = ctx(json!({"kind": "finite-dim-hopf", "group": g}), gr, exhaustive());
        o.require(&format!("{name} dual-basis R vs group form"), &only(suite("oracle", &c), |a| a == "closed form r"));
        o.require(&format!("{name} axioms"), &suite("quasitriangular", &c));
    }
    o
}

fn lemma() -> Outcome {
    let mut o = Outcome::new();
    for n in [2, 3, 4] {
        o.require(&format!("Z/{n}"), &suite("lemma42", &ctx(group(cyclic(n)), cyclic_gradings(n), exhaustive())));
    }
    o.require("S3", &suite("lemma42", &ctx(group(s3()), s3_gradings(), exhaustive())));
    o.require("KS3", &suite("lemma42", &ctx(json!({"kind": "finite-dim-hopf", "group": s3()}), s3_gradings(), exhaustive())));
    o.require("Z 200 seeded covers", &suite("lemma42", &ctx(group(json!({"kind": "int"})), sign_gradings(), sampled(200, 8))));
    o
}

fn commutation() -> Outcome {
    let mut o = Outcome::new();
    let keep = |a: &str| a == "commutation rule";
    for n in 2..=6 {
        o.require(&format!("Z/{n}"), &only(suite("cograded", &ctx(group(cyclic(n)), cyclic_gradings(n), exhaustive())), keep));
    }
    o.require("S3 36 inner pairs", &only(suite("cograded", &ctx(group(s3()), json!("inner"), exhaustive())), keep));
    o
}

fn structural() -> Outcome {
    let mut o = Outcome::new();
    let c = ctx(group(s3()), json!("inner"), exhaustive());
    let reports = suite("cograded", &c);
    o.require("group law, 36 pairs", &only(reports.clone(), |a| a.starts_with("group law")));
    o.require("t-map roundtrips", &only(reports.clone(), |a| a.starts_with("t-map")));
    o.require("non-degeneracy ranks", &only(reports, |a| a == "non-degeneracy"));
    let ks3 = ctx(json!({"kind": "finite-dim-hopf", "group": s3()}), s3_gradings(), exhaustive());
    o.require("KS3 t-maps and ranks", &only(suite("cograded", &ks3), |a| a.starts_with("t-map") || a == "non-degeneracy"));
    o
}

fn mutations() -> Outcome {
    let mut o = Outcome::new();
    let base = json!({"instance": group(s3()), "gradings": s3_gradings(), "enum": exhaustive()});
    let clean: Vec<AxiomReport> = suite::registry().iter().flat_map(|s| s.run(&ctx_with(base.clone()))).collect();
    o.require("unmutated baseline", &clean);
    for m in Mutation::ALL {
        let mut spec = base.clone();
        spec["mutation"] = json!(m.name());
        let c = ctx_with(spec);
        let caught: Vec<String> = suite::registry()
            .iter()
            .flat_map(|s| s.run(&c).into_iter().filter(|r| !r.passed() && r.counterexample.is_some()).map(|r| format!("{}/{}", s.name(), r.axiom)).collect::<Vec<_>>())
            .collect();
        if caught.is_empty() {
            o.ok = false;
            o.notes.push(format!("{}: NOT detected", m.name()));
        } else {
            o.notes.push(format!("{}: caught by {}", m.name(), caught.join(", ")));
        }
    }
    o
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("group oracle equivalence", group_oracle),
        ("drinfeld double oracle equivalence", double_oracle),
        ("hopf axioms", hopf_axioms),
        ("crossing action", crossing),
        ("quasitriangularity", quasitriangular),
        ("intertwining residuals", lemma),
        ("commutation rule", commutation),
        ("structural sanity", structural),
        ("mutation sensitivity", mutations),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = f();
        all &= o.ok;
        println!("criterion {} {name}: {} ({:.1?})", i + 1, if o.ok { "PASS" } else { "FAIL" }, t.elapsed());
        for n in &o.notes {
            println!("    {n}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
