//! Diagonal crossed products `A⋈B_(α,β)`:
//! `(a⋈b)(a'⋈b') = a(α(b₁)▶a'◀S⁻¹β(b₃)) ⋈ b₂b'`.
//!
//! Everything is computed from honest elements: `B` has a finite
//! comultiplication, and the actions on `A` are evaluated through covered
//! T-maps, so no truncation ever happens.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, RwLock};

use crate::aut::{AutPair, Automorphism};
use crate::error::{Error, Result};
use crate::linear::{CElem, CLabel, CTensor, Elem, Label, Lc, Tensor};
use crate::pairing::{Pairing, SharedPairing};
use crate::scalar::Scalar;

/// Deliberate corruptions used to check that the axiom suites have teeth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mutation {
    /// `S ↦ -S`.
    AntipodeSign,
    /// `R` loses the summand at the first basis label.
    DropRSummand,
    /// `Δ^{cop}(a)` replaced by `Δ(a)` in the graded comultiplication.
    SwapDeltaLegs,
    /// Grading law `(α,β)*(γ,δ) = (αγ, δγβγ⁻¹)`.
    WrongTwist,
    /// Crossing action uses `αγβ⁻¹γ⁻¹` on the `B` leg.
    WrongXi,
    /// `R = Σ β⁻¹(e_i)⊗S⁻¹(e^i)` instead of `Σ β⁻¹(e_i)⊗e^i`.
    RSinv,
}

impl Mutation {
    pub const ALL: [Mutation; 6] = [
        Mutation::AntipodeSign,
        Mutation::DropRSummand,
        Mutation::SwapDeltaLegs,
        Mutation::WrongTwist,
        Mutation::WrongXi,
        Mutation::RSinv,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Mutation::AntipodeSign => "antipode-sign",
            Mutation::DropRSummand => "drop-r-summand",
            Mutation::SwapDeltaLegs => "swap-delta-legs",
            Mutation::WrongTwist => "wrong-twist",
            Mutation::WrongXi => "wrong-xi",
            Mutation::RSinv => "r-antipode-inverse",
        }
    }

    pub fn from_name(s: &str) -> Option<Mutation> {
        Mutation::ALL.into_iter().find(|m| m.name() == s)
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A homogeneous element of `A⋈B_(α,β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedElem {
    pub grading: AutPair,
    pub value: CElem,
}

impl CrossedElem {
    pub fn new(grading: AutPair, value: CElem) -> Self {
        CrossedElem { grading, value }
    }
}

/// A shared memo table; lookups never change results, only their cost.
/// Starts over once it holds `MEMO_CAP` entries.
pub(crate) struct Memo<K, V>(RwLock<HashMap<K, V>>);

const MEMO_CAP: usize = 1 << 17;

impl<K: Hash + Eq, V: Clone> Memo<K, V> {
    fn new() -> Self {
        Memo(RwLock::new(HashMap::new()))
    }

    pub(crate) fn get_or(&self, key: K, f: impl FnOnce() -> V) -> V {
        if let Some(v) = self.0.read().expect("memo lock").get(&key) {
            return v.clone();
        }
        let v = f();
        let mut map = self.0.write().expect("memo lock");
        if map.len() >= MEMO_CAP {
            map.clear();
        }
        map.insert(key, v.clone());
        v
    }
}

type Table<V> = Arc<RwLock<HashMap<(CLabel, CLabel), V>>>;

/// Memo keyed by a pair of gradings and a pair of basis labels. The gradings are
/// looked up once per call, so per-term lookups clone no automorphisms.
pub(crate) struct SplitMemo<V> {
    tables: RwLock<HashMap<AutPair, HashMap<AutPair, Table<V>>>>,
    size: AtomicUsize,
}

impl<V: Clone> SplitMemo<V> {
    fn new() -> Self {
        SplitMemo { tables: RwLock::new(HashMap::new()), size: AtomicUsize::new(0) }
    }

    pub(crate) fn table(&self, p: &AutPair, q: &AutPair) -> Table<V> {
        if let Some(t) = self.tables.read().expect("memo lock").get(p).and_then(|m| m.get(q)) {
            return t.clone();
        }
        let mut tables = self.tables.write().expect("memo lock");
        tables.entry(p.clone()).or_default().entry(q.clone()).or_default().clone()
    }

    pub(crate) fn get_or(&self, table: &Table<V>, key: (CLabel, CLabel), f: impl FnOnce() -> V) -> V {
        if let Some(v) = table.read().expect("memo lock").get(&key) {
            return v.clone();
        }
        let v = f();
        if self.size.fetch_add(1, Ordering::Relaxed) >= MEMO_CAP {
            // tables handed out earlier stay valid; they just stop being shared
            self.tables.write().expect("memo lock").clear();
            self.size.store(0, Ordering::Relaxed);
        }
        table.write().expect("memo lock").insert(key, v.clone());
        v
    }
}

pub(crate) struct Memos {
    twist: Memo<(AutPair, Label, Label), CElem>,
    twist_inv: Memo<(AutPair, Label, Label), Tensor>,
    pub(crate) w_unit: Memo<(bool, Label), Tensor>,
    pub(crate) delta_right: SplitMemo<CTensor>,
    pub(crate) delta_left: SplitMemo<CTensor>,
    pub(crate) xi_auts: Memo<(AutPair, AutPair), (Automorphism, Automorphism)>,
}

/// The cograded object `D(A,B)` over a pairing, optionally corrupted.
#[derive(Clone)]
pub struct Double {
    pairing: SharedPairing,
    mutation: Option<Mutation>,
    pub(crate) memo: Arc<Memos>,
}

impl Double {
    pub fn new(pairing: SharedPairing) -> Self {
        Double::with_mutation(pairing, None)
    }

    pub fn with_mutation(pairing: SharedPairing, mutation: Option<Mutation>) -> Self {
        let memo = Memos {
            twist: Memo::new(),
            twist_inv: Memo::new(),
            w_unit: Memo::new(),
            delta_right: SplitMemo::new(),
            delta_left: SplitMemo::new(),
            xi_auts: Memo::new(),
        };
        Double { pairing, mutation, memo: Arc::new(memo) }
    }

    pub fn mutation(&self) -> Option<Mutation> {
        self.mutation
    }

    pub(crate) fn is(&self, m: Mutation) -> bool {
        self.mutation == Some(m)
    }

    pub fn pairing(&self) -> &dyn Pairing {
        &*self.pairing
    }

    pub fn shared_pairing(&self) -> SharedPairing {
        self.pairing.clone()
    }

    pub fn one(&self) -> Scalar {
        self.pairing.field().one()
    }

    pub fn zero_scalar(&self) -> Scalar {
        self.pairing.field().zero()
    }

    /// Grading law, honouring the twist mutation.
    pub fn gmul(&self, p: &AutPair, q: &AutPair) -> AutPair {
        if self.is(Mutation::WrongTwist) {
            let (b, c, d) = (&p.second, &q.first, &q.second);
            let second = d.compose(c).and_then(|x| x.compose(b)).and_then(|x| x.compose(&c.inverse())).expect("same backend");
            return AutPair::new(p.first.compose(c).expect("same backend"), second);
        }
        p.mul(q).expect("gradings over one backend")
    }

    pub fn ginv(&self, p: &AutPair) -> AutPair {
        if self.is(Mutation::WrongTwist) {
            // the unique q with p*q = (ι,ι) under the corrupted law: q = (α⁻¹, α⁻¹β⁻¹α)
            let a = &p.first;
            let ai = a.inverse();
            let second = ai.compose(&p.second.inverse()).and_then(|x| x.compose(a)).expect("same backend");
            return AutPair::new(ai, second);
        }
        p.inv()
    }

    pub fn check_grading(&self, p: &AutPair) -> Result<()> {
        self.pairing.check_aut(&p.first)?;
        self.pairing.check_aut(&p.second)
    }

    pub fn basis_celem(&self, a: Label, b: Label) -> CElem {
        Lc::basis((a, b), self.one())
    }

    pub fn b_aut(&self, aut: &Automorphism, b: &Elem) -> Elem {
        if aut.is_identity() {
            return b.clone();
        }
        self.pairing().aut_b(aut, b)
    }

    fn b_elem(&self, l: Label) -> Elem {
        Lc::basis(l, self.one())
    }

    /// `Σ b₁⊗b₂⊗b₃`.
    pub fn delta2_b(&self, b: &Label) -> Vec<((Label, Label, Label), Scalar)> {
        let bi = self.pairing.b();
        let d = bi.comul_basis(b).expect("finite comultiplication on B");
        let mut out = Lc::<(Label, Label, Label)>::zero();
        for ((x, y), c) in &d {
            for ((x1, x2), e) in &bi.comul_basis(x).expect("finite comultiplication on B") {
                out.add_term((*x1, *x2, *y), c * e);
            }
        }
        out.iter().map(|(k, v)| (*k, v.clone())).collect()
    }

    /// `T(b⊗a) = (α(b₁)▶a◀S⁻¹β(b₃)) ⋈ b₂`, i.e. `(1⋈b)(a⋈1)`.
    pub fn twist_basis(&self, p: &AutPair, b: &Label, a: &Label) -> CElem {
        self.memo.twist.get_or((p.clone(), *b, *a), || self.twist_basis_raw(p, b, a))
    }

    fn twist_basis_raw(&self, p: &AutPair, b: &Label, a: &Label) -> CElem {
        let pr = self.pairing();
        let bi = pr.b();
        let aa = Lc::basis(*a, self.one());
        let mut out = CElem::zero();
        for ((b1, b2, b3), c) in self.delta2_b(b) {
            let x = self.b_aut(&p.first, &self.b_elem(b1));
            let y = bi.antipode_inv(&self.b_aut(&p.second, &self.b_elem(b3)));
            let w = pr.two_sided(&x, &aa, &y);
            for (al, v) in &w {
                out.add_term((*al, b2), &c * v);
            }
        }
        out
    }

    /// `T` on `B⊗A`.
    pub fn twist(&self, p: &AutPair, x: &Tensor) -> CElem {
        x.lift(|(b, a)| self.twist_basis(p, b, a))
    }

    /// `T⁻¹(a⊗b) = Σ b₂⊗(S⁻¹α(b₁)▶a◀β(b₃))`, an element of `B⊗A`.
    pub fn twist_inv_basis(&self, p: &AutPair, a: &Label, b: &Label) -> Tensor {
        self.memo.twist_inv.get_or((p.clone(), *a, *b), || self.twist_inv_basis_raw(p, a, b))
    }

    fn twist_inv_basis_raw(&self, p: &AutPair, a: &Label, b: &Label) -> Tensor {
        let pr = self.pairing();
        let bi = pr.b();
        let aa = Lc::basis(*a, self.one());
        let mut out = Tensor::zero();
        for ((b1, b2, b3), c) in self.delta2_b(b) {
            let x = bi.antipode_inv(&self.b_aut(&p.first, &self.b_elem(b1)));
            let y = self.b_aut(&p.second, &self.b_elem(b3));
            let w = pr.two_sided(&x, &aa, &y);
            for (al, v) in &w {
                out.add_term((b2, *al), &c * v);
            }
        }
        out
    }

    pub fn twist_inv(&self, p: &AutPair, x: &CElem) -> Tensor {
        x.lift(|(a, b)| self.twist_inv_basis(p, a, b))
    }

    /// `t1(a⊗b) = α(b₁)▶a⊗b₂`, or its inverse `S⁻¹α(b₁)▶a⊗b₂`.
    pub fn t1(&self, p: &AutPair, x: &CElem, inverse: bool) -> CElem {
        let pr = self.pairing();
        x.lift(|(a, b)| {
            let aa = Lc::basis(*a, self.one());
            let d = pr.b().comul_basis(b).expect("finite comultiplication on B");
            d.lift(|(b1, b2)| {
                let mut u = self.b_aut(&p.first, &self.b_elem(*b1));
                if inverse {
                    u = pr.b().antipode_inv(&u);
                }
                pr.b_act_a(&u, &aa).map_labels(|al| (*al, *b2))
            })
        })
    }

    /// `t2(a⊗b) = a◀β(b₂)⊗b₁`, or its inverse `a◀S⁻¹β(b₂)⊗b₁`.
    pub fn t2(&self, p: &AutPair, x: &CElem, inverse: bool) -> CElem {
        let pr = self.pairing();
        x.lift(|(a, b)| {
            let aa = Lc::basis(*a, self.one());
            let d = pr.b().comul_basis(b).expect("finite comultiplication on B");
            d.lift(|(b1, b2)| {
                let mut u = self.b_aut(&p.second, &self.b_elem(*b2));
                if inverse {
                    u = pr.b().antipode_inv(&u);
                }
                pr.a_act_b(&aa, &u).map_labels(|al| (*al, *b1))
            })
        })
    }

    /// `(a⋈b)(a'⋈b')` at grading `p`.
    pub fn mul(&self, p: &AutPair, x: &CElem, y: &CElem) -> CElem {
        let pr = self.pairing();
        let mut out = CElem::zero();
        for ((a, b), s) in x {
            let aa = Lc::basis(*a, self.one());
            for ((a2, b2), t) in y {
                let w = self.twist_basis(p, b, a2);
                let st = s * t;
                for ((wa, wb), c) in &w {
                    let left = pr.a().mul(&aa, &Lc::basis(*wa, self.one()));
                    let right = pr.b().mul_basis(wb, b2);
                    out.add_scaled(&(&st * c), &left.tensor(&right));
                }
            }
        }
        out
    }

    /// `(1⋈u)·x`.
    pub fn left_b(&self, p: &AutPair, u: &Elem, x: &CElem) -> CElem {
        let pr = self.pairing();
        let mut out = CElem::zero();
        for (b, s) in u {
            for ((a2, b2), t) in x {
                let w = self.twist_basis(p, b, a2);
                let st = s * t;
                for ((wa, wb), c) in &w {
                    out.add_scaled(&(&st * c), &pr.b().mul_basis(wb, b2).map_labels(|r| (*wa, *r)));
                }
            }
        }
        out
    }

    /// `x·(1⋈u)`.
    pub fn right_b(&self, x: &CElem, u: &Elem) -> CElem {
        let bi = self.pairing.b();
        x.lift(|(a, b)| bi.mul(&Lc::basis(*b, self.one()), u).map_labels(|r| (*a, *r)))
    }

    /// `(a⋈1)·x`.
    pub fn left_a(&self, a: &Elem, x: &CElem) -> CElem {
        let ai = self.pairing.a();
        x.lift(|(a2, b2)| ai.mul(a, &Lc::basis(*a2, self.one())).map_labels(|l| (*l, *b2)))
    }

    /// `x·(a⋈1)`.
    pub fn right_a(&self, p: &AutPair, x: &CElem, a: &Elem) -> CElem {
        let pr = self.pairing();
        let mut out = CElem::zero();
        for ((xa, xb), s) in x {
            let xa = Lc::basis(*xa, self.one());
            for (al, t) in a {
                let w = self.twist_basis(p, xb, al);
                for ((wa, wb), c) in &w {
                    let left = pr.a().mul(&xa, &Lc::basis(*wa, self.one()));
                    out.add_scaled(&(&(s * t) * c), &left.map_labels(|l| (*l, *wb)));
                }
            }
        }
        out
    }

    /// The unit `1⋈1` when `A` is unital.
    pub fn unit(&self) -> Option<CElem> {
        let ua = self.pairing.a().unit()?;
        let ub = self.pairing.b().unit()?;
        Some(ua.tensor(&ub))
    }

    /// LHS − RHS of the commutation rule applied to `x`:
    /// `Σ⟨a₁,b₂⟩(1⋈β⁻¹(b₁))(a₂x) − Σ⟨a₂,αβ⁻¹(b₁)⟩(a₁⋈β⁻¹(b₂))x`.
    pub fn commutation_residual(&self, p: &AutPair, a: &Elem, b: &Elem, x: &CElem) -> CElem {
        let pr = self.pairing();
        let bi = pr.b();
        let binv = p.second.inverse();
        let ab = p.first.compose(&binv).expect("same backend");
        let d = bi.comul(b).expect("finite comultiplication on B");
        let mut out = CElem::zero();
        for ((b1, b2), c) in &d {
            let b1e = Lc::basis(*b1, c.clone());
            let b2e = Lc::basis(*b2, self.one());
            // Σ⟨a₁,b₂⟩a₂ = a◀b₂
            let lhs_a = pr.a_act_b(a, &b2e);
            let lhs = self.left_b(p, &self.b_aut(&binv, &b1e), &self.left_a(&lhs_a, x));
            // Σ⟨a₂,αβ⁻¹(b₁)⟩a₁ = αβ⁻¹(b₁)▶a
            let rhs_a = pr.b_act_a(&self.b_aut(&ab, &b1e), a);
            let rhs = self.left_a(&rhs_a, &self.left_b(p, &self.b_aut(&binv, &b2e), x));
            out = out.add(&lhs).sub(&rhs);
        }
        out
    }

    pub fn dcp_mul(&self, x: &CrossedElem, y: &CrossedElem) -> Result<CrossedElem> {
        if x.grading != y.grading {
            return Err(Error::Grading(format!("{} vs {}", x.grading, y.grading)));
        }
        Ok(CrossedElem::new(x.grading.clone(), self.mul(&x.grading, &x.value, &y.value)))
    }

    pub fn render(&self, x: &CElem) -> String {
        let pr = self.pairing();
        crate::linear::render(x, |(a, b)| format!("{}⋈{}", pr.a().fmt_label(a), pr.b().fmt_label(b)))
    }

    pub fn render_label(&self, l: &CLabel) -> String {
        let pr = self.pairing();
        format!("{}⋈{}", pr.a().fmt_label(&l.0), pr.b().fmt_label(&l.1))
    }
}
