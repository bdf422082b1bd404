//! Axiom suites behind a common trait, looked up by name.
//!
//! A suite turns a [`Context`] into one [`AxiomReport`] per identity. Each identity
//! declares its input slots (gradings, crossed basis elements, covers, basis labels
//! of `A` or `B`); the cases are enumerated by [`CaseSet`] and checked in parallel,
//! and the lowest failing case index is reported.
//!
//! Covers: finite instances are unital, so exhaustive runs use the unit `1⋈1` as the
//! only cover. `Δ(x)(1⊗y) = Δ(x)(1⊗1)(1⊗y)` and `R(x⊗y) = R(1⊗1)(x⊗y)`, so checking
//! at the unit decides the identity for every cover. Sampled runs and infinite
//! instances draw basis covers.

mod cograded;
mod crossing;
mod hopf;
mod intertwining;
mod oracle;
mod quasitri;

use std::sync::Arc;

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::aut::AutPair;
use crate::crossed::Double;
use crate::enumerate::{CaseSet, Enumeration};
use crate::error::{input, Result};
use crate::group::Group;
use crate::linear::{CElem, CLabel, Label, Lc};

pub use oracle::literal_comparison;

/// What the instance was built from; decides which closed-form oracles apply.
#[derive(Clone, Debug)]
pub enum Family {
    /// `⟨K(H), KH⟩` for a group `H`.
    Group(Group),
    /// `⟨(KH)*, KH⟩` from structure constants of a finite group algebra.
    GroupAlgebra(Group),
    /// `⟨H*, H⟩` for user-supplied structure constants.
    FiniteDim,
    /// `⟨D(H)*, D(H)⟩`.
    DrinfeldDouble(Group),
}

/// Everything a suite needs: the instance, grading set and enumeration policy.
pub struct Context {
    pub double: Double,
    pub family: Family,
    pub gradings: Vec<AutPair>,
    pub mode: Enumeration,
    pool: Arc<rayon::ThreadPool>,
    xs: Vec<CLabel>,
    a_labels: Vec<Label>,
    b_labels: Vec<Label>,
    unit: Option<CElem>,
}

/// Worker count: `MHAG_THREADS` if set and positive, else rayon's default.
pub fn thread_count() -> Option<usize> {
    std::env::var("MHAG_THREADS").ok()?.trim().parse().ok().filter(|&n| n > 0)
}

impl Context {
    pub fn new(double: Double, family: Family, gradings: Vec<AutPair>, mode: Enumeration) -> Result<Context> {
        if gradings.is_empty() {
            return input("grading set is empty");
        }
        for p in &gradings {
            double.check_grading(p)?;
        }
        let pr = double.pairing();
        let finite = pr.a().basis().is_some() && pr.b().basis().is_some();
        let w = mode.window();
        if !finite && w < 1 {
            return input("window must be at least 1 for infinite instances");
        }
        let a_labels = pr.a().basis().unwrap_or_else(|| pr.a().window(w));
        let b_labels = pr.b().basis().unwrap_or_else(|| pr.b().window(w));
        let xs = a_labels.iter().flat_map(|a| b_labels.iter().map(move |b| (*a, *b))).collect();
        let exhaustive = matches!(mode, Enumeration::Exhaustive { .. });
        let unit = if finite && exhaustive { double.unit() } else { None };
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = thread_count() {
            builder = builder.num_threads(n);
        }
        let pool = builder.build().map_err(|e| crate::Error::Input(format!("thread pool: {e}")))?;
        Ok(Context { double, family, gradings, mode, pool: Arc::new(pool), xs, a_labels, b_labels, unit })
    }

    pub fn is_finite(&self) -> bool {
        self.double.pairing().a().basis().is_some()
    }

    /// Dimension of one crossed component, when finite.
    pub fn dim(&self) -> Option<usize> {
        self.is_finite().then_some(self.xs.len())
    }

    pub fn identity_grading(&self) -> AutPair {
        AutPair::unit_like(&self.gradings[0].first)
    }

    fn size(&self, d: Dom) -> usize {
        match d {
            Dom::G => self.gradings.len(),
            Dom::X => self.xs.len(),
            Dom::C => {
                if self.unit.is_some() {
                    1
                } else {
                    self.xs.len()
                }
            }
            Dom::A => self.a_labels.len(),
            Dom::B => self.b_labels.len(),
        }
    }

    /// Runs one identity over all its cases.
    pub fn check<F>(&self, axiom: &str, slots: &[(&str, Dom)], f: F) -> AxiomReport
    where
        F: Fn(&Case) -> Option<(String, String)> + Sync,
    {
        let sizes: Vec<usize> = slots.iter().map(|(_, d)| self.size(*d)).collect();
        let cases = CaseSet::new(&sizes, &self.mode, axiom);
        let n = cases.len();
        let found = self.pool.install(|| {
            (0..n).into_par_iter().find_map_first(|i| {
                let case = Case { ctx: self, slots, idx: cases.get(i) };
                f(&case).map(|(lhs, rhs)| Counterexample { inputs: Inputs(case.render()), lhs, rhs })
            })
        });
        AxiomReport {
            axiom: axiom.to_string(),
            status: if found.is_some() { Status::Fail } else { Status::Pass },
            cases: n,
            counterexample: found,
        }
    }
}

/// Input slot kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dom {
    /// A grading from the configured set.
    G,
    /// A crossed basis element `a⋈b`.
    X,
    /// A cover: the unit in exhaustive runs over finite instances, else a crossed basis element.
    C,
    /// A basis label of `A`.
    A,
    /// A basis label of `B`.
    B,
}

/// One enumerated case.
pub struct Case<'a> {
    ctx: &'a Context,
    slots: &'a [(&'a str, Dom)],
    idx: Vec<usize>,
}

impl Case<'_> {
    fn at(&self, k: usize, d: Dom) -> usize {
        assert_eq!(self.slots[k].1, d, "slot {k} kind");
        self.idx[k]
    }

    pub fn g(&self, k: usize) -> &AutPair {
        &self.ctx.gradings[self.at(k, Dom::G)]
    }

    pub fn x_label(&self, k: usize) -> CLabel {
        self.ctx.xs[self.at(k, Dom::X)]
    }

    pub fn x(&self, k: usize) -> CElem {
        Lc::basis(self.x_label(k), self.ctx.double.one())
    }

    pub fn c(&self, k: usize) -> CElem {
        let i = self.at(k, Dom::C);
        match &self.ctx.unit {
            Some(u) => u.clone(),
            None => Lc::basis(self.ctx.xs[i], self.ctx.double.one()),
        }
    }

    pub fn a(&self, k: usize) -> Label {
        self.ctx.a_labels[self.at(k, Dom::A)]
    }

    pub fn b(&self, k: usize) -> Label {
        self.ctx.b_labels[self.at(k, Dom::B)]
    }

    fn render(&self) -> Vec<(String, String)> {
        let pr = self.ctx.double.pairing();
        self.slots
            .iter()
            .enumerate()
            .map(|(k, (name, d))| {
                let v = match d {
                    Dom::G => self.g(k).to_string(),
                    Dom::X => self.ctx.double.render(&self.x(k)),
                    Dom::C => self.ctx.double.render(&self.c(k)),
                    Dom::A => pr.a().fmt_label(&self.a(k)),
                    Dom::B => pr.b().fmt_label(&self.b(k)),
                };
                (name.to_string(), v)
            })
            .collect()
    }
}

/// `Some((lhs, rhs))` when the sides differ.
pub fn differ<T: PartialEq>(lhs: T, rhs: T, show: impl Fn(&T) -> String) -> Option<(String, String)> {
    (lhs != rhs).then(|| (show(&lhs), show(&rhs)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Named inputs of a counterexample, serialized in slot order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inputs(pub Vec<(String, String)>);

impl Serialize for Inputs {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub inputs: Inputs,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axiom: String,
    pub status: Status,
    pub cases: usize,
    pub counterexample: Option<Counterexample>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;

    fn run(&self, ctx: &Context) -> Vec<AxiomReport>;
}

/// All suites, in the order `verify` runs them.
pub fn registry() -> Vec<Box<dyn Suite>> {
    vec![
        Box::new(cograded::Cograded),
        Box::new(hopf::Hopf),
        Box::new(crossing::Crossing),
        Box::new(quasitri::Quasitriangular),
        Box::new(intertwining::Intertwining),
        Box::new(oracle::Oracle),
    ]
}

pub fn names() -> Vec<&'static str> {
    registry().iter().map(|s| s.name()).collect()
}

pub fn lookup(name: &str) -> Result<Box<dyn Suite>> {
    registry()
        .into_iter()
        .find(|s| s.name() == name)
        .map_or_else(|| input(format!("unknown suite {name:?}; known: {}", names().join(", "))), Ok)
}

/// Tags each report with its suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub reports: Vec<AxiomReport>,
}

pub fn run_suites(ctx: &Context, suites: &[Box<dyn Suite>]) -> Vec<SuiteReport> {
    suites.iter().map(|s| SuiteReport { suite: s.name().to_string(), reports: s.run(ctx) }).collect()
}
