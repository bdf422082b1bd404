//! The generalized R-matrix `R_{p,q} = Σ (1⋈β⁻¹(e_i)) ⊗ (e^i⋈1)` built from the
//! canonical multiplier `W = Σ e_i⊗e^i`, and the four quasitriangularity axioms in
//! applied form. `β` is the second component of `p`; `q` only enters through the
//! twist needed to multiply on the right.
//!
//! Every identity returns both sides applied to explicit elements. "Left" forms
//! multiply the multipliers onto the elements from the left, "right" forms from the right.

use crate::aut::{AutPair, Automorphism};
use crate::crossed::{Double, Mutation};
use crate::linear::{CElem, CLabel, CTensor, Elem, Label, Lc, Tensor};
use crate::mha::TKind;
use crate::pairing::Side;

pub type CTensor3 = Lc<(CLabel, CLabel, CLabel)>;

/// `B ⊗ (A⋈B)`, where the intertwining identity with a `B` leg lives.
pub type BCTensor = Lc<(Label, CLabel)>;

/// `(A⋈B) ⊗ A`.
pub type CATensor = Lc<(CLabel, Label)>;

pub type Tensor3 = Lc<(Label, Label, Label)>;

pub fn t3(x: &CElem, y: &CElem, z: &CElem) -> CTensor3 {
    x.tensor(y).tensor(z).map_labels(|((a, b), c)| (*a, *b, *c))
}

fn compose(xs: &[&Automorphism]) -> Automorphism {
    let mut it = xs.iter();
    let first = (*it.next().expect("nonempty")).clone();
    it.fold(first, |acc, x| acc.compose(x).expect("same backend"))
}

/// Applies `f` to the legs `(i, j)` of every term, leaving the third leg in place.
fn on_legs(t: &CTensor3, i: usize, j: usize, mut f: impl FnMut(&CElem, &CElem) -> CTensor) -> CTensor3 {
    let mut out = CTensor3::zero();
    for ((a, b, c), s) in t {
        let legs = [*a, *b, *c];
        let k = 3 - i - j;
        let one = s.field().one();
        let r = f(&Lc::basis(legs[i], one.clone()), &Lc::basis(legs[j], one));
        for ((u, v), w) in &r {
            let mut new = legs;
            new[i] = *u;
            new[j] = *v;
            new[k] = legs[k];
            out.add_term((new[0], new[1], new[2]), s * w);
        }
    }
    out
}

fn pairwise(t: &CTensor, mut f: impl FnMut(&CElem, &CElem) -> CTensor) -> CTensor {
    let mut out = CTensor::zero();
    for ((a, b), s) in t {
        let one = s.field().one();
        out.add_scaled(s, &f(&Lc::basis(*a, one.clone()), &Lc::basis(*b, one)));
    }
    out
}

impl Double {
    fn b_unit(&self) -> Elem {
        self.pairing().b().unit().expect("unital B")
    }

    fn beta_inv(&self, p: &AutPair) -> Automorphism {
        p.second.inverse()
    }

    /// `e_i` as it enters `R`, after the configured corruption.
    fn r_leg(&self, u: &Label) -> Option<Elem> {
        if self.is(Mutation::DropRSummand) && *u == Label(0, 0) {
            return None;
        }
        let e = Lc::basis(*u, self.one());
        if self.is(Mutation::RSinv) {
            return Some(self.pairing().b().antipode_inv(&e));
        }
        Some(e)
    }

    /// `W(1⊗a)` or `(1⊗a)W`.
    fn w_unit(&self, side: Side, a: &Label) -> Tensor {
        self.memo.w_unit.get_or((side == Side::Left, *a), || self.w_unit_raw(side, a))
    }

    fn w_unit_raw(&self, side: Side, a: &Label) -> Tensor {
        let pr = self.pairing();
        let mut out = Tensor::zero();
        for (u, c) in &self.b_unit() {
            out.add_scaled(c, &pr.w_apply(side, false, u, a).expect("canonical multiplier"));
        }
        out
    }

    /// `Σ e_i ⊗ (e^i⋈1)z` as pairs `(e_i, (e^i⋈1)z)`.
    pub fn w_left_terms(&self, z: &CElem) -> Vec<(Elem, CElem)> {
        let mut acc = Lc::<(Label, CLabel)>::zero();
        for ((za, zb), s) in z {
            for ((u, v), c) in &self.w_unit(Side::Left, za) {
                acc.add_term((*u, (*v, *zb)), s * c);
            }
        }
        acc.iter()
            .filter_map(|((u, l), c)| Some((self.r_leg(u)?, Lc::basis(*l, c.clone()))))
            .collect()
    }

    /// `Σ e_i ⊗ z(e^i⋈1)` for `z` at `q`, as pairs. Uses
    /// `z(e^i⋈1) = z_a(α(z₁)▶e^i◀S⁻¹β(z₃)) ⋈ z₂` and `Σ e_i ⊗ (s▶e^i◀t) = Σ t e_i s ⊗ e^i`.
    pub fn w_right_terms(&self, q: &AutPair, z: &CElem) -> Vec<(Elem, CElem)> {
        let bi = self.pairing().b();
        let mut out = vec![];
        for ((za, zb), s) in z {
            let w = self.w_unit(Side::Right, za);
            for ((b1, b2, b3), c) in self.delta2_b(zb) {
                let sv = self.b_aut(&q.first, &Lc::basis(b1, self.one()));
                let tv = bi.antipode_inv(&self.b_aut(&q.second, &Lc::basis(b3, self.one())));
                for ((u, v), d) in &w {
                    let Some(e) = self.r_leg(u) else { continue };
                    let first = bi.mul(&bi.mul(&tv, &e), &sv);
                    if first.is_zero() {
                        continue;
                    }
                    out.push((first, Lc::basis((*v, b2), &(s * &c) * d)));
                }
            }
        }
        out
    }

    /// The coefficients of `R_{p,q}` against `y`: `Σ β⁻¹(e_i) ⊗ (e^i⋈1)y`.
    pub fn r_coefficients(&self, p: &AutPair, y: &CElem) -> BCTensor {
        let bi = self.beta_inv(p);
        let mut out = BCTensor::zero();
        for (e, y2) in self.w_left_terms(y) {
            out = out.add(&self.b_aut(&bi, &e).tensor(&y2));
        }
        out
    }

    /// `R_{p,q}(x⊗y)`.
    pub fn r_left(&self, p: &AutPair, x: &CElem, y: &CElem) -> CTensor {
        let bi = self.beta_inv(p);
        let mut out = CTensor::zero();
        for (e, y2) in self.w_left_terms(y) {
            let x2 = self.left_b(p, &self.b_aut(&bi, &e), x);
            out = out.add(&x2.tensor(&y2));
        }
        out
    }

    /// `(x⊗y)R_{p,q}`.
    pub fn r_right(&self, p: &AutPair, q: &AutPair, x: &CElem, y: &CElem) -> CTensor {
        let bi = self.beta_inv(p);
        let mut out = CTensor::zero();
        for (e, y2) in self.w_right_terms(q, y) {
            let x2 = self.right_b(x, &self.b_aut(&bi, &e));
            out = out.add(&x2.tensor(&y2));
        }
        out
    }

    pub fn r_left_tensor(&self, p: &AutPair, t: &CTensor) -> CTensor {
        pairwise(t, |x, y| self.r_left(p, x, y))
    }

    pub fn r_right_tensor(&self, p: &AutPair, q: &AutPair, t: &CTensor) -> CTensor {
        pairwise(t, |x, y| self.r_right(p, q, x, y))
    }

    /// `A`-labels that can carry a nonzero dual-basis term against the given inputs.
    /// Finite `A`: the whole basis. Infinite `A` (functions on ℤ): a window wide enough
    /// to contain every shift built from at most six input labels.
    pub fn dual_indices<'a>(&self, labels: impl IntoIterator<Item = &'a CElem>) -> Vec<Label> {
        let ai = self.pairing().a();
        if let Some(b) = ai.basis() {
            return b;
        }
        let mut m = 0i64;
        for x in labels {
            for ((a, b), _) in x {
                m = m.max(a.0.abs()).max(a.1.abs()).max(b.0.abs()).max(b.1.abs());
            }
        }
        ai.window(6 * m + 6)
    }

    /// `e^i ⋈ 1` for a basis functional `e^i`.
    fn dual_elem(&self, e: &Label) -> CElem {
        Lc::basis(*e, self.one()).tensor(&self.b_unit())
    }

    fn xi_tensor_leg(&self, t: &CTensor, first: bool, m: &AutPair, q: &AutPair) -> CTensor {
        if first {
            self.map_first_leg(t, |l| self.xi(m, q, &Lc::basis(*l, self.one())))
        } else {
            self.map_second_leg(t, |l| self.xi(m, q, &Lc::basis(*l, self.one())))
        }
    }

    /// `(ξ_m⊗ξ_m)R_{p,q} = R_{mpm⁻¹,mqm⁻¹}`, applied to `x⊗y`.
    pub fn qt_xi_invariance(&self, side: Side, m: &AutPair, p: &AutPair, q: &AutPair, x: &CElem, y: &CElem) -> (CTensor, CTensor) {
        let (mp, mq) = (self.xi_target(m, p), self.xi_target(m, q));
        let (xx, yy) = (self.xi(m, p, x), self.xi(m, q, y));
        let lhs = match side {
            Side::Left => self.r_left(p, x, y),
            Side::Right => self.r_right(p, q, x, y),
        };
        let lhs = self.xi_tensor_leg(&self.xi_tensor_leg(&lhs, true, m, p), false, m, q);
        let rhs = match side {
            Side::Left => self.r_left(&mp, &xx, &yy),
            Side::Right => self.r_right(&mp, &mq, &xx, &yy),
        };
        (lhs, rhs)
    }

    /// `(Δ_{p,q}⊗ι)R_{p*q,n} = ((ι⊗ξ_{q⁻¹})R_{p,qnq⁻¹})₁₃(R_{q,n})₂₃`,
    /// applied to `x⊗y⊗z` with `x, y, z` at `p, q, n`.
    pub fn qt_coproduct_first(
        &self,
        side: Side,
        p: &AutPair,
        q: &AutPair,
        n: &AutPair,
        x: &CElem,
        y: &CElem,
        z: &CElem,
    ) -> (CTensor3, CTensor3) {
        let bi = self.pairing().b();
        let pq = self.gmul(p, q);
        let bpq = self.beta_inv(&pq);
        let ga = &q.first;
        let c = compose(&[&ga.inverse(), &p.second, ga]);
        let qnq = self.xi_target(q, n);
        let qi = self.ginv(q);
        // Δ(1⋈u) = Σ (1⋈γ(u₁)) ⊗ (1⋈γ⁻¹βγ(u₂))
        let split = |e: &Elem| -> Vec<(Elem, Elem)> {
            let d = bi.comul(&self.b_aut(&bpq, e)).expect("finite comultiplication on B");
            d.iter()
                .map(|((u1, u2), s)| {
                    (self.b_aut(ga, &Lc::basis(*u1, s.clone())), self.b_aut(&c, &Lc::basis(*u2, self.one())))
                })
                .collect()
        };
        let mut lhs = CTensor3::zero();
        let rhs;
        match side {
            Side::Left => {
                for (e, z2) in self.w_left_terms(z) {
                    for (g1, g2) in split(&e) {
                        lhs = lhs.add(&t3(&self.left_b(p, &g1, x), &self.left_b(q, &g2, y), &z2));
                    }
                }
                let first = t3(x, y, z);
                let s23 = on_legs(&first, 1, 2, |a, b| self.r_left(q, a, b));
                let s13 = on_legs(&s23, 0, 2, |a, b| {
                    let t = self.r_left(p, a, &self.xi(q, n, b));
                    self.xi_tensor_leg(&t, false, &qi, &qnq)
                });
                rhs = s13;
            }
            Side::Right => {
                for (e, z2) in self.w_right_terms(n, z) {
                    for (g1, g2) in split(&e) {
                        lhs = lhs.add(&t3(&self.right_b(x, &g1), &self.right_b(y, &g2), &z2));
                    }
                }
                let first = t3(x, y, z);
                let s13 = on_legs(&first, 0, 2, |a, b| {
                    let t = self.r_right(p, &qnq, a, &self.xi(q, n, b));
                    self.xi_tensor_leg(&t, false, &qi, &qnq)
                });
                rhs = on_legs(&s13, 1, 2, |a, b| self.r_right(q, n, a, b));
            }
        }
        (lhs, rhs)
    }

    /// `(ι⊗Δ_{q,n})R_{p,q*n} = (R_{p,n})₁₃(R_{p,q})₁₂`, applied to `x⊗y⊗z`.
    pub fn qt_coproduct_second(
        &self,
        side: Side,
        p: &AutPair,
        q: &AutPair,
        n: &AutPair,
        x: &CElem,
        y: &CElem,
        z: &CElem,
    ) -> (CTensor3, CTensor3) {
        let bi = self.beta_inv(p);
        let mut lhs = CTensor3::zero();
        for e in self.dual_indices([x, y, z]) {
            let Some(u) = self.r_leg(&e) else { continue };
            let u = self.b_aut(&bi, &u);
            let m = self.dual_elem(&e);
            match side {
                Side::Left => {
                    let d = self.delta_right(q, n, &m, z);
                    if d.is_zero() {
                        continue;
                    }
                    let x2 = self.left_b(p, &u, x);
                    for ((l, r), s) in &d {
                        let l2 = self.mul(q, &Lc::basis(*l, s.clone()), y);
                        lhs = lhs.add(&t3(&x2, &l2, &Lc::basis(*r, self.one())));
                    }
                }
                Side::Right => {
                    let d = self.delta_left(q, n, y, &m);
                    if d.is_zero() {
                        continue;
                    }
                    let x2 = self.right_b(x, &u);
                    for ((l, r), s) in &d {
                        let r2 = self.mul(n, z, &Lc::basis(*r, s.clone()));
                        lhs = lhs.add(&t3(&x2, &Lc::basis(*l, self.one()), &r2));
                    }
                }
            }
        }
        let first = t3(x, y, z);
        let rhs = match side {
            Side::Left => {
                let s12 = on_legs(&first, 0, 1, |a, b| self.r_left(p, a, b));
                on_legs(&s12, 0, 2, |a, b| self.r_left(p, a, b))
            }
            Side::Right => {
                let s13 = on_legs(&first, 0, 2, |a, b| self.r_right(p, n, a, b));
                on_legs(&s13, 0, 1, |a, b| self.r_right(p, q, a, b))
            }
        };
        (lhs, rhs)
    }

    /// `R_{p,q}Δ_{p,q}(x) = Δ̃^{cop}_{pqp⁻¹,p}(x)R_{p,q}` for `x` at `p*q`,
    /// applied to `y⊗z` with `y, z` at `p, q`.
    pub fn qt_intertwines_coproduct(&self, side: Side, p: &AutPair, q: &AutPair, x: &CElem, y: &CElem, z: &CElem) -> (CTensor, CTensor) {
        let r = self.xi_target(p, q);
        let pi = self.ginv(p);
        let swap = |t: &CTensor| t.map_labels(|(a, b)| (*b, *a));
        match side {
            Side::Left => {
                // R·Δ(x)(y⊗z)
                let d = self.delta_right(p, q, x, z);
                let d = self.map_first_leg(&d, |l| self.mul(p, &Lc::basis(*l, self.one()), y));
                let lhs = self.r_left_tensor(p, &d);
                // Δ̃^cop(x)·R(y⊗z)
                let mut rhs = CTensor::zero();
                for ((y2, z2), s) in &self.r_left(p, y, z) {
                    let y2 = Lc::basis(*y2, s.clone());
                    let zx = self.xi(p, q, &Lc::basis(*z2, self.one()));
                    let d = self.delta_right(&r, p, x, &y2);
                    let d = self.map_first_leg(&d, |l| self.mul(&r, &Lc::basis(*l, self.one()), &zx));
                    let d = self.xi_tensor_leg(&d, true, &pi, &r);
                    rhs = rhs.add(&swap(&d));
                }
                (lhs, rhs)
            }
            Side::Right => {
                // (y⊗z)R·Δ(x)
                let mut lhs = CTensor::zero();
                for ((y2, z2), s) in &self.r_right(p, q, y, z) {
                    let d = self.delta_left(p, q, &Lc::basis(*y2, s.clone()), x);
                    let z2 = Lc::basis(*z2, self.one());
                    lhs = lhs.add(&self.map_second_leg(&d, |l| self.mul(q, &z2, &Lc::basis(*l, self.one()))));
                }
                // (y⊗z)Δ̃^cop(x)·R
                let d = self.delta_left(&r, p, &self.xi(p, q, z), x);
                let d = self.map_second_leg(&d, |l| self.mul(p, y, &Lc::basis(*l, self.one())));
                let d = swap(&self.xi_tensor_leg(&d, true, &pi, &r));
                (lhs, self.r_right_tensor(p, q, &d))
            }
        }
    }

    /// `(β⁻¹⊗ι)(W)Δ^{cop}(a) = (Δ(a)∘(ι⊗αβ⁻¹))(β⁻¹⊗ι)(W)` in
    /// `M(A⋈B_p ⊗ A)`, both sides applied to `x⊗a'`.
    pub fn w_intertwines_a(&self, p: &AutPair, a: &Label, x: &CElem, a2: &Label) -> (CATensor, CATensor) {
        let pr = self.pairing();
        let ai = pr.a();
        let bi = self.beta_inv(p);
        let phi = p.first.compose(&bi).expect("same backend");
        let phi_inv = phi.inverse();
        let mut lhs = CATensor::zero();
        // Σ a₂ ⊗ a₁a'
        let cop = if self.is(Mutation::SwapDeltaLegs) {
            ai.t_basis(TKind::T1, a, a2)
        } else {
            ai.t_basis(TKind::T3, a, a2).map_labels(|(u, v)| (*v, *u))
        };
        for ((f, g), s) in &cop {
            let x2 = self.left_a(&Lc::basis(*f, s.clone()), x);
            for ((u, v), c) in &self.w_unit(Side::Left, g) {
                let x3 = self.left_b(p, &self.b_aut(&bi, &Lc::basis(*u, c.clone())), &x2);
                lhs = lhs.add(&x3.tensor(&Lc::basis(*v, self.one())));
            }
        }
        let mut rhs = CATensor::zero();
        for ((u, v), c) in &self.w_unit(Side::Left, a2) {
            let x2 = self.left_b(p, &self.b_aut(&bi, &Lc::basis(*u, c.clone())), x);
            let w = pr.precompose(v, &phi_inv);
            // Σ a₁ ⊗ a₂(v∘φ⁻¹), then precompose the second leg with φ
            let t = ai.t_map(TKind::T1, &Lc::basis(*a, self.one()).tensor(&w));
            for ((f, g), s) in &t {
                let x3 = self.left_a(&Lc::basis(*f, s.clone()), &x2);
                rhs = rhs.add(&x3.tensor(&pr.precompose(g, &phi)));
            }
        }
        (lhs, rhs)
    }

    /// `(β⁻¹⊗ι)(W)(γ⊗γ⁻¹βγ)Δ(b) = (β⁻¹δγ⁻¹βγ⊗γ⁻¹βγ)Δ^{cop}(b)(β⁻¹⊗ι)(W)`
    /// in `M(B ⊗ A⋈B_q)` with `β` from `p` and `(γ,δ) = q`, applied to `u⊗y`.
    pub fn w_intertwines_b(&self, p: &AutPair, q: &AutPair, b: &Label, u: &Label, y: &CElem) -> (BCTensor, BCTensor) {
        let bi_inst = self.pairing().b();
        let bi = self.beta_inv(p);
        let (ga, de) = (&q.first, &q.second);
        let c = compose(&[&ga.inverse(), &p.second, ga]);
        let psi = compose(&[&bi, de, &ga.inverse(), &p.second, ga]);
        let ue = Lc::basis(*u, self.one());
        let db = bi_inst.comul_basis(b).expect("finite comultiplication on B");
        let w_terms = |y: &CElem| -> Vec<(Elem, CElem)> {
            let mut out = vec![];
            for ((ya, yb), s) in y {
                for ((e, v), c) in &self.w_unit(Side::Left, ya) {
                    out.push((self.b_aut(&bi, &Lc::basis(*e, s * c)), Lc::basis((*v, *yb), self.one())));
                }
            }
            out
        };
        let mut lhs = BCTensor::zero();
        let mut rhs = BCTensor::zero();
        for ((b1, b2), s) in &db {
            let b1e = Lc::basis(*b1, s.clone());
            let b2e = Lc::basis(*b2, self.one());
            let w = bi_inst.mul(&self.b_aut(ga, &b1e), &ue);
            let y2 = self.left_b(q, &self.b_aut(&c, &b2e), y);
            for (e, v) in w_terms(&y2) {
                lhs = lhs.add(&bi_inst.mul(&e, &w).tensor(&v));
            }
            for (e, v) in w_terms(y) {
                let first = bi_inst.mul(&bi_inst.mul(&self.b_aut(&psi, &b2e), &e), &ue);
                let second = self.left_b(q, &self.b_aut(&c, &b1e), &v);
                rhs = rhs.add(&first.tensor(&second));
            }
        }
        (lhs, rhs)
    }

    /// `(Δ_B⊗ι)W = W¹³W²³`, applied to `b⊗b'⊗a`.
    pub fn w_identity_b(&self, b: &Label, b2: &Label, a: &Label) -> (Tensor3, Tensor3) {
        let pr = self.pairing();
        let bi = pr.b();
        let cover = Lc::basis(*b, self.one()).tensor(&Lc::basis(*b2, self.one()));
        let mut lhs = Tensor3::zero();
        for ((u, v), c) in &self.w_unit(Side::Left, a) {
            let d = bi.comul(&Lc::basis(*u, c.clone())).expect("finite comultiplication on B");
            let d = mul_tensor(bi, &d, &cover);
            lhs = lhs.add(&d.tensor(&Lc::basis(*v, self.one())).map_labels(|((x, y), z)| (*x, *y, *z)));
        }
        let mut rhs = Tensor3::zero();
        for ((u, v), c) in &pr.w_apply(Side::Left, false, b2, a).expect("canonical multiplier") {
            for ((u2, v2), d) in &pr.w_apply(Side::Left, false, b, v).expect("canonical multiplier") {
                rhs.add_term((*u2, *u, *v2), c * d);
            }
        }
        (lhs, rhs)
    }

    /// `(ι⊗Δ_A)W = W¹²W¹³`, applied to `b⊗a⊗a'`.
    pub fn w_identity_a(&self, b: &Label, a: &Label, a2: &Label) -> (Tensor3, Tensor3) {
        let pr = self.pairing();
        let (ai, bi) = (pr.a(), pr.b());
        let probe = [Lc::basis((*a, *b), self.one()), Lc::basis((*a2, *a2), self.one())];
        let mut lhs = Tensor3::zero();
        for e in self.dual_indices(probe.iter()) {
            let left = bi.mul(&Lc::basis(e, self.one()), &Lc::basis(*b, self.one()));
            if left.is_zero() {
                continue;
            }
            let t = ai.t_basis(TKind::T1, &e, a2);
            let t = t.lift(|(f, g)| ai.mul_basis(f, a).map_labels(|h| (*h, *g)));
            lhs = lhs.add(&left.tensor(&t).map_labels(|(x, (y, z))| (*x, *y, *z)));
        }
        let mut rhs = Tensor3::zero();
        for ((u, v), c) in &pr.w_apply(Side::Left, false, b, a2).expect("canonical multiplier") {
            for ((u2, v2), d) in &pr.w_apply(Side::Left, false, u, a).expect("canonical multiplier") {
                rhs.add_term((*u2, *v2, *v), c * d);
            }
        }
        (lhs, rhs)
    }

    /// `R_{p,q}` applied to `x⊗y` through the closed form for the Drinfeld double,
    /// `Σ_{g,h} (1⋈(δ_{β⁻¹gβ}⊗β⁻¹hβ)) ⊗ ((g⊗δ_h)⋈1)` with `β` an inner automorphism.
    pub fn r_left_double_closed(&self, p: &AutPair, x: &CElem, y: &CElem) -> Option<CTensor> {
        let group = self.pairing().group()?.clone();
        let b = match *p.second.kind() {
            crate::aut::AutKind::Inner(b) => b,
            crate::aut::AutKind::Identity => group.identity(),
            _ => return None,
        };
        let bi = group.inv(b);
        let els = group.elements()?;
        let mut out = CTensor::zero();
        for &g in &els {
            for &h in &els {
                let first = Lc::basis(Label(group.conj(bi, g), group.conj(bi, h)), self.one());
                let second = Lc::basis(Label(g, h), self.one());
                out = out.add(&self.left_b(p, &first, x).tensor(&self.left_a(&second, y)));
            }
        }
        Some(out)
    }
}

/// Componentwise product of two tensors in the same algebra.
fn mul_tensor(m: &dyn crate::mha::Mha, x: &Tensor, y: &Tensor) -> Tensor {
    let mut out = Tensor::zero();
    for ((a, b), s) in x {
        for ((c, d), t) in y {
            let l = m.mul_basis(a, c);
            let r = m.mul_basis(b, d);
            out.add_scaled(&(s * t), &l.tensor(&r));
        }
    }
    out
}
