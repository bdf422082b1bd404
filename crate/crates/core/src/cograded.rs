//! Graded structure maps of `D(A,B) = ⊕ A⋈B_(α,β)`.
//!
//! `Δ_{(α,β),(γ,δ)}(a⋈b) = Σ (a₂⋈γ(b₁)) ⊗ (a₁⋈γ⁻¹βγ(b₂))` for `a⋈b` at `(α,β)*(γ,δ)`,
//! `ε(a⋈b) = ε(a)ε(b)`, `S_(α,β)(a⋈b) = T_{(α,β)⁻¹}(αβS(b)⊗S⁻¹(a))`,
//! `ξ_(α,β)(a⋈b) = a∘βα⁻¹ ⋈ αγ⁻¹β⁻¹γ(b)` on the component `(γ,δ)`.
//! The comultiplication is only ever evaluated against a cover on one leg.

use std::collections::BTreeMap;

use crate::aut::{AutPair, Automorphism};
use crate::crossed::{CrossedElem, Double, Mutation};
use crate::linear::{CElem, CTensor, Lc};
use crate::mha::TKind;
use crate::scalar::Scalar;

fn compose(xs: &[&Automorphism]) -> Automorphism {
    let mut it = xs.iter();
    let first = (*it.next().expect("nonempty")).clone();
    it.fold(first, |acc, x| acc.compose(x).expect("same backend"))
}

impl Double {
    /// `γ⁻¹βγ` for the split `((α,β),(γ,δ))`.
    fn second_leg_aut(&self, p: &AutPair, q: &AutPair) -> Automorphism {
        compose(&[&q.first.inverse(), &p.second, &q.first])
    }

    /// Splits `Δ(a)` against an `A`-element `w`: returns `(first leg, second leg)`
    /// pairs of `Σ a₂ ⊗ a₁w` (or `Σ a₁ ⊗ a₂w` under the swapped-legs mutation).
    fn cop_right(&self, a: &crate::linear::Label, w: &crate::linear::Label) -> crate::linear::Tensor {
        let ai = self.pairing().a();
        if self.is(Mutation::SwapDeltaLegs) {
            ai.t_basis(TKind::T1, a, w)
        } else {
            ai.t_basis(TKind::T3, a, w).map_labels(|(x, y)| (*y, *x))
        }
    }

    /// `Σ w a₂ ⊗ a₁` (or `Σ w a₁ ⊗ a₂` under the swapped-legs mutation).
    fn cop_left(&self, w: &crate::linear::Label, a: &crate::linear::Label) -> crate::linear::Tensor {
        let ai = self.pairing().a();
        if self.is(Mutation::SwapDeltaLegs) {
            ai.t_basis(TKind::T2, w, a)
        } else {
            ai.t_basis(TKind::T4, w, a).map_labels(|(x, y)| (*y, *x))
        }
    }

    /// `Δ_{p,q}(x)(1⊗y)` for `x` at `p*q` and `y` at `q`.
    pub fn delta_right(&self, p: &AutPair, q: &AutPair, x: &CElem, y: &CElem) -> CTensor {
        let mut out = CTensor::zero();
        let table = self.memo.delta_right.table(p, q);
        for (xl, s) in x {
            for (yl, t) in y {
                let d = self.memo.delta_right.get_or(&table, (*xl, *yl), || {
                    self.delta_right_raw(p, q, &Lc::basis(*xl, self.one()), &Lc::basis(*yl, self.one()))
                });
                out.add_scaled(&(s * t), &d);
            }
        }
        out
    }

    fn delta_right_raw(&self, p: &AutPair, q: &AutPair, x: &CElem, y: &CElem) -> CTensor {
        let pr = self.pairing();
        let bi = pr.b();
        let c = self.second_leg_aut(p, q);
        let mut out = CTensor::zero();
        for ((a, b), s) in x {
            let db = bi.comul_basis(b).expect("finite comultiplication on B");
            for ((b1, b2), t) in &db {
                let g_b1 = self.b_aut(&q.first, &Lc::basis(*b1, self.one()));
                let c_b2 = self.b_aut(&c, &Lc::basis(*b2, self.one()));
                let w = self.left_b(q, &c_b2, y);
                let st = s * t;
                for ((wa, wb), u) in &w {
                    let stu = &st * u;
                    for ((f, g), v) in &self.cop_right(a, wa) {
                        let coeff = &stu * v;
                        for (gb, z) in &g_b1 {
                            out.add_term(((*f, *gb), (*g, *wb)), &coeff * z);
                        }
                    }
                }
            }
        }
        out
    }

    /// `(y⊗1)Δ_{p,q}(x)` for `y` at `p` and `x` at `p*q`.
    pub fn delta_left(&self, p: &AutPair, q: &AutPair, y: &CElem, x: &CElem) -> CTensor {
        let mut out = CTensor::zero();
        let table = self.memo.delta_left.table(p, q);
        for (yl, s) in y {
            for (xl, t) in x {
                let d = self.memo.delta_left.get_or(&table, (*yl, *xl), || {
                    self.delta_left_raw(p, q, &Lc::basis(*yl, self.one()), &Lc::basis(*xl, self.one()))
                });
                out.add_scaled(&(s * t), &d);
            }
        }
        out
    }

    fn delta_left_raw(&self, p: &AutPair, q: &AutPair, y: &CElem, x: &CElem) -> CTensor {
        let pr = self.pairing();
        let bi = pr.b();
        let c = self.second_leg_aut(p, q);
        // y = Σ (1⋈u)(a'⋈1)
        let split = self.twist_inv(p, y);
        let mut out = CTensor::zero();
        for ((u, a3), s) in &split {
            let ue = Lc::basis(*u, self.one());
            for ((a, b), t) in x {
                let db = bi.comul_basis(b).expect("finite comultiplication on B");
                let st = s * t;
                for ((b1, b2), r) in &db {
                    let g_b1 = self.b_aut(&q.first, &Lc::basis(*b1, self.one()));
                    let c_b2 = self.b_aut(&c, &Lc::basis(*b2, self.one()));
                    let str_ = &st * r;
                    for ((f, g), v) in &self.cop_left(a3, a) {
                        let first = self.left_b(p, &ue, &Lc::basis(*f, self.one()).tensor(&g_b1));
                        let second = Lc::basis(*g, self.one()).tensor(&c_b2);
                        out.add_scaled(&(&str_ * v), &first.tensor(&second));
                    }
                }
            }
        }
        out
    }

    pub fn counit(&self, x: &CElem) -> Scalar {
        let pr = self.pairing();
        x.eval(self.zero_scalar(), |(a, b)| &pr.a().counit_basis(a) * &pr.b().counit_basis(b))
    }

    /// `S_p(x)`, graded at `p⁻¹`.
    pub fn antipode(&self, p: &AutPair, x: &CElem) -> CElem {
        let pr = self.pairing();
        let ab = p.first.compose(&p.second).expect("same backend");
        let target = self.ginv(p);
        let mut out = CElem::zero();
        for ((a, b), s) in x {
            let sb = self.b_aut(&ab, &pr.b().antipode_basis(b));
            let sa = pr.a().antipode_inv_basis(a);
            out.add_scaled(s, &self.twist(&target, &sb.tensor(&sa)));
        }
        if self.is(Mutation::AntipodeSign) {
            out = out.neg();
        }
        out
    }

    /// Inverse of `S_p`: takes an element at `p⁻¹` back to `p`.
    pub fn antipode_inv(&self, p: &AutPair, z: &CElem) -> CElem {
        let pr = self.pairing();
        let ab_inv = p.first.compose(&p.second).expect("same backend").inverse();
        let split = self.twist_inv(&self.ginv(p), z);
        let mut out = CElem::zero();
        for ((u, v), s) in &split {
            let a = pr.a().antipode_basis(v);
            let b = pr.b().antipode_inv(&self.b_aut(&ab_inv, &Lc::basis(*u, self.one())));
            out.add_scaled(s, &a.tensor(&b));
        }
        if self.is(Mutation::AntipodeSign) {
            out = out.neg();
        }
        out
    }

    /// Grading of `ξ_m` applied to the component `q`: `m*q*m⁻¹`.
    pub fn xi_target(&self, m: &AutPair, q: &AutPair) -> AutPair {
        self.gmul(&self.gmul(m, q), &self.ginv(m))
    }

    /// `ξ_m` on the component `q`.
    pub fn xi(&self, m: &AutPair, q: &AutPair, x: &CElem) -> CElem {
        let pr = self.pairing();
        let (on_a, on_b) = self.memo.xi_auts.get_or((m.clone(), q.clone()), || {
            let (al, be) = (&m.first, &m.second);
            let ga = &q.first;
            let on_b = if self.is(Mutation::WrongXi) {
                compose(&[al, ga, &be.inverse(), &ga.inverse()])
            } else {
                compose(&[al, &ga.inverse(), &be.inverse(), ga])
            };
            (compose(&[be, &al.inverse()]), on_b)
        });
        x.lift(|(a, b)| {
            let na = if on_a.is_identity() { Lc::basis(*a, self.one()) } else { pr.precompose(a, &on_a) };
            na.tensor(&self.b_aut(&on_b, &Lc::basis(*b, self.one())))
        })
    }

    /// `(ξ_{q⁻¹}⊗ι)(Δ_{p,q}(x)(1⊗y))`.
    pub fn delta_tilde_right(&self, p: &AutPair, q: &AutPair, x: &CElem, y: &CElem) -> CTensor {
        let d = self.delta_right(p, q, x, y);
        let qi = self.ginv(q);
        self.map_first_leg(&d, |l| self.xi(&qi, p, &Lc::basis(*l, self.one())))
    }

    /// Applies a linear map to the first leg of a tensor.
    pub fn map_first_leg(&self, t: &CTensor, mut f: impl FnMut(&crate::linear::CLabel) -> CElem) -> CTensor {
        t.lift(|(l, r)| f(l).map_labels(|x| (*x, *r)))
    }

    pub fn map_second_leg(&self, t: &CTensor, mut f: impl FnMut(&crate::linear::CLabel) -> CElem) -> CTensor {
        t.lift(|(l, r)| f(r).map_labels(|x| (*l, *x)))
    }

    pub fn render_tensor(&self, t: &CTensor) -> String {
        crate::linear::render(t, |(l, r)| format!("({})⊗({})", self.render_label(l), self.render_label(r)))
    }
}

/// A finite sum of homogeneous components.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedElem {
    parts: BTreeMap<AutPair, CElem>,
}

impl GradedElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn homogeneous(x: CrossedElem) -> Self {
        let mut g = GradedElem::zero();
        g.add(&x);
        g
    }

    pub fn add(&mut self, x: &CrossedElem) {
        let entry = self.parts.entry(x.grading.clone()).or_default();
        *entry = entry.add(&x.value);
        if entry.is_zero() {
            self.parts.remove(&x.grading);
        }
    }

    pub fn component(&self, p: &AutPair) -> Option<&CElem> {
        self.parts.get(p)
    }

    pub fn gradings(&self) -> impl Iterator<Item = &AutPair> {
        self.parts.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// Componentwise product; components at different gradings multiply to zero.
    pub fn mul(&self, d: &Double, other: &GradedElem) -> GradedElem {
        let mut out = GradedElem::zero();
        for (p, x) in &self.parts {
            if let Some(y) = other.parts.get(p) {
                out.add(&CrossedElem::new(p.clone(), d.mul(p, x, y)));
            }
        }
        out
    }

    pub fn counit(&self, d: &Double) -> Scalar {
        self.parts.values().fold(d.zero_scalar(), |acc, x| &acc + &d.counit(x))
    }
}
