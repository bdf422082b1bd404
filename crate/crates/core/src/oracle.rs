//! Closed forms written with group arithmetic only, used as independent oracles.
//!
//! Group case `A = K(H)`, `B = KH`: a basis element `δ_p⋈g` is the pair `(p, g)`.
//! Drinfeld-double case `A = D(H)*`, `B = D(H)` with inner gradings given by two
//! elements `α, β`: `(l⊗δ_q)⋈(δ_p⊗h)` is `((l, q), (p, h))`.

use crate::aut::AutPair;
use crate::group::{Elt, Group};
use crate::linear::{CElem, CTensor, Label, Lc};
use crate::scalar::Field;

pub type Pt = (Elt, Elt);

fn ap(aut: &crate::aut::Automorphism, x: Elt) -> Elt {
    aut.apply(x).expect("group automorphism")
}

pub fn group_celem(x: Pt, field: Field) -> CElem {
    Lc::basis((Label::one(x.0), Label::one(x.1)), field.one())
}

pub fn group_ctensor(x: Pt, y: Pt, field: Field) -> CTensor {
    Lc::basis(((Label::one(x.0), Label::one(x.1)), (Label::one(y.0), Label::one(y.1))), field.one())
}

pub struct GroupOracle<'a> {
    pub group: &'a Group,
}

impl GroupOracle<'_> {
    /// `(δ_p⋈g)(δ_q⋈h) = [p = β(g)qα(g)⁻¹] δ_p⋈gh`.
    pub fn mul(&self, p: &AutPair, x: Pt, y: Pt) -> Option<Pt> {
        let g = self.group;
        let (al, be) = (&p.first, &p.second);
        let m = g.prod(&[ap(be, x.1), y.0, g.inv(ap(al, x.1))]);
        (m == x.0).then(|| (x.0, g.mul(x.1, y.1)))
    }

    /// `Δ_{p,q}(δ_a⋈h)(1⊗(δ_b⋈l)) = (δ_{s⁻¹a}⋈γ(h))⊗(δ_s⋈c(h)l)` with `c = γ⁻¹βγ`
    /// and `s = β_q(c(h))·b·α_q(c(h))⁻¹`.
    pub fn delta_right(&self, p: &AutPair, q: &AutPair, x: Pt, y: Pt) -> (Pt, Pt) {
        let g = self.group;
        let (ga, de) = (&q.first, &q.second);
        let c = ap(&ga.inverse(), ap(&p.second, ap(ga, x.1)));
        let s = g.prod(&[ap(de, c), y.0, g.inv(ap(ga, c))]);
        ((g.mul(g.inv(s), x.0), ap(ga, x.1)), (s, g.mul(c, y.1)))
    }

    pub fn counit(&self, x: Pt) -> bool {
        x.0 == self.group.identity()
    }

    /// `S_(α,β)(δ_p⋈h) = δ_{α(h⁻¹)p⁻¹β(h)} ⋈ αβ(h⁻¹)`.
    pub fn antipode(&self, p: &AutPair, x: Pt) -> Pt {
        let g = self.group;
        let (al, be) = (&p.first, &p.second);
        let hi = g.inv(x.1);
        (g.prod(&[ap(al, hi), g.inv(x.0), ap(be, x.1)]), ap(al, ap(be, hi)))
    }

    /// `R_{p,q}·(x⊗y)`, zero-free: with `k = β⁻¹(b)` the result is
    /// `(δ_{β(k)aα(k)⁻¹}⋈kh) ⊗ (δ_b⋈l)`.
    pub fn r_left(&self, p: &AutPair, x: Pt, y: Pt) -> (Pt, Pt) {
        let g = self.group;
        let (al, be) = (&p.first, &p.second);
        let k = ap(&be.inverse(), y.0);
        ((g.prod(&[ap(be, k), x.0, g.inv(ap(al, k))]), g.mul(k, x.1)), y)
    }

    /// `ξ_(α,β)` on the component `(γ,δ)`: `δ_p⋈h ↦ δ_{αβ⁻¹(p)} ⋈ αγ⁻¹β⁻¹γ(h)`.
    pub fn xi(&self, m: &AutPair, q: &AutPair, x: Pt) -> Pt {
        let (al, be) = (&m.first, &m.second);
        let ga = &q.first;
        let a = ap(al, ap(&be.inverse(), x.0));
        let b = ap(al, ap(&ga.inverse(), ap(&be.inverse(), ap(ga, x.1))));
        (a, b)
    }
}

/// Closed forms for `D(H)* ⋈ D(H)` graded by `(inner(α), inner(β))`.
pub struct DoubleOracle<'a> {
    pub group: &'a Group,
    pub alpha: Elt,
    pub beta: Elt,
}

impl DoubleOracle<'_> {
    fn w(&self, xs: &[Elt]) -> Elt {
        self.group.prod(xs)
    }

    /// `(h⊗δ_p)(l⊗δ_q) = [p=q] lh⊗δ_p`.
    pub fn a_mul(&self, x: Pt, y: Pt) -> Option<Pt> {
        (x.1 == y.1).then(|| (self.group.mul(y.0, x.0), x.1))
    }

    /// `(δ_p⊗h)(δ_q⊗l) = [p = hqh⁻¹] δ_p⊗hl`.
    pub fn b_mul(&self, x: Pt, y: Pt) -> Option<Pt> {
        (x.0 == self.group.conj(x.1, y.0)).then(|| (x.0, self.group.mul(x.1, y.1)))
    }

    /// `(1⋈(δ_p⊗h))((l⊗δ_q)⋈1)`.
    pub fn twist(&self, b: Pt, a: Pt) -> (Pt, Pt) {
        let g = self.group;
        let (al, be) = (self.alpha, self.beta);
        let (ai, bi) = (g.inv(al), g.inv(be));
        let ((p, h), (l, q)) = (b, a);
        let hi = g.inv(h);
        let a1 = self.w(&[be, h, bi, l, be, hi, bi]);
        let a2 = self.w(&[be, h, bi, q, al, hi, ai]);
        let b1 = self.w(&[h, bi, l, be, hi, p, h, ai, g.inv(q), g.inv(l), q, al, hi]);
        ((a1, a2), (b1, h))
    }

    /// The twist taken literally from the reference closed form, with its typos; only
    /// its disagreement is reported.
    pub fn twist_literal(&self, b: Pt, a: Pt) -> (Pt, Pt) {
        let g = self.group;
        let (al, be) = (self.alpha, self.beta);
        let (ai, bi) = (g.inv(al), g.inv(be));
        let ((p, h), (l, q)) = (b, a);
        let hi = g.inv(h);
        let a1 = self.w(&[be, h, bi, l, be, hi, bi]);
        let a2 = self.w(&[be, h, bi, q, al, hi, ai]);
        let b1 = self.w(&[ai, g.inv(l), al, p, h, bi, l, hi]);
        ((a1, a2), (b1, h))
    }

    /// `(a⋈b)(a'⋈b') = a·T(b⊗a')·b'` built from the closed forms.
    pub fn mul(&self, x: (Pt, Pt), y: (Pt, Pt), literal: bool) -> Option<(Pt, Pt)> {
        let (ta, tb) = if literal { self.twist_literal(x.1, y.0) } else { self.twist(x.1, y.0) };
        Some((self.a_mul(x.0, ta)?, self.b_mul(tb, y.1)?))
    }

    /// `S_(α,β)((l⊗δ_q)⋈(δ_p⊗h))`.
    pub fn antipode(&self, x: (Pt, Pt)) -> (Pt, Pt) {
        let g = self.group;
        let (al, be) = (self.alpha, self.beta);
        let (ai, bi) = (g.inv(al), g.inv(be));
        let ((l, q), (p, h)) = x;
        let (hi, qi, li) = (g.inv(h), g.inv(q), g.inv(l));
        let s1 = self.w(&[al, hi, ai, qi, li, q, al, h, ai]);
        let s2 = self.w(&[al, hi, ai, qi, be, h, bi]);
        let s3 = self.w(&[al, be, hi, ai, qi, li, q, al, g.inv(p), bi, l, be, h, bi, ai]);
        let s4 = self.w(&[al, be, hi, bi, ai]);
        ((s1, s2), (s3, s4))
    }

    /// The antipode taken literally from the reference closed form.
    pub fn antipode_literal(&self, x: (Pt, Pt)) -> (Pt, Pt) {
        let g = self.group;
        let (al, be) = (self.alpha, self.beta);
        let (ai, bi) = (g.inv(al), g.inv(be));
        let ((l, q), (p, h)) = x;
        let (hi, qi, li) = (g.inv(h), g.inv(q), g.inv(l));
        let s1 = self.w(&[al, hi, ai, qi, l, q, al, h, ai]);
        let s2 = self.w(&[al, hi, ai, qi, be, h, bi]);
        let s3 = self.w(&[al, qi, li, q, be, hi, p, ai, qi, l, q, al, be, h, bi, ai]);
        let s4 = self.w(&[al, be, hi, bi, ai]);
        ((s1, s2), (s3, s4))
    }
}

pub fn double_celem(x: (Pt, Pt), field: Field) -> CElem {
    Lc::basis((Label(x.0 .0, x.0 .1), Label(x.1 .0, x.1 .1)), field.one())
}
