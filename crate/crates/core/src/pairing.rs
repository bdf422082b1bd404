//! Non-degenerate pairings `⟨A, B⟩`, the induced module actions, and the
//! canonical multiplier `W = Σ e_i⊗e^i` of `M(B⊗A)`.
//!
//! Action conventions, with `Δ(a) = a₁⊗a₂`:
//! `b▶a = Σ⟨a₂,b⟩a₁`, `a◀b = Σ⟨a₁,b⟩a₂`, `a▶b = Σ⟨a,b₂⟩b₁`, `b◀a = Σ⟨a,b₁⟩b₂`.
//! `B` is always unital with finite comultiplication; `A` may be neither.

use std::sync::Arc;

use crate::aut::Automorphism;
use crate::error::{input, Error, Result};
use crate::group::Group;
use crate::linear::{Elem, Label, Lc, Tensor};
use crate::mha::{DoubleDual, DrinfeldDouble, FiniteDimHopf, FunctionAlgebra, GroupAlgebra, Mha, TKind};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

pub trait Pairing: Send + Sync {
    fn name(&self) -> String;

    fn a(&self) -> &dyn Mha;

    fn b(&self) -> &dyn Mha;

    /// The group behind the instance, when automorphisms are group-induced.
    fn group(&self) -> Option<&Group>;

    fn pair_basis(&self, a: &Label, b: &Label) -> Scalar;

    /// An element `e ∈ A` with `⟨e a, b⟩ = ⟨a e, b⟩ = ⟨a, b⟩` for all `a`.
    fn a_cover(&self, b: &Label) -> Elem {
        let _ = b;
        self.a().unit().expect("unital left algebra")
    }

    /// Checks that an automorphism is a Hopf automorphism of `B` this pairing understands.
    fn check_aut(&self, aut: &Automorphism) -> Result<()>;

    /// `φ(b)`.
    fn apply_aut(&self, aut: &Automorphism, b: &Label) -> Elem;

    /// `a∘φ`, the functional `b ↦ ⟨a, φ(b)⟩`.
    fn precompose(&self, a: &Label, aut: &Automorphism) -> Elem;

    /// `W(b⊗a)` (left) or `(b⊗a)W` (right); `inverse` uses `W⁻¹`.
    fn w_apply(&self, side: Side, inverse: bool, b: &Label, a: &Label) -> Result<Tensor>;
}

impl dyn Pairing + '_ {
    pub fn field(&self) -> Field {
        self.b().field()
    }

    pub fn pair(&self, a: &Elem, b: &Elem) -> Scalar {
        let mut acc = self.field().zero();
        for (x, s) in a {
            for (y, t) in b {
                let v = self.pair_basis(x, y);
                if !v.is_zero() {
                    acc = &acc + &(&(s * t) * &v);
                }
            }
        }
        acc
    }

    /// `b▶a = Σ⟨a₂,b⟩a₁`, through `T1(a⊗e) = Σ a₁⊗a₂e`.
    pub fn b_act_a(&self, b: &Elem, a: &Elem) -> Elem {
        let mut out = Elem::zero();
        for (y, t) in b {
            let e = self.a_cover(y);
            let legs = self.a().t_map(TKind::T1, &a.tensor(&e));
            for ((a1, a2), c) in &legs {
                let v = self.pair_basis(a2, y);
                if !v.is_zero() {
                    out.add_term(*a1, &(c * t) * &v);
                }
            }
        }
        out
    }

    /// `a◀b = Σ⟨a₁,b⟩a₂`, through `T2(e⊗a) = Σ e a₁⊗a₂`.
    pub fn a_act_b(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = Elem::zero();
        for (y, t) in b {
            let e = self.a_cover(y);
            let legs = self.a().t_map(TKind::T2, &e.tensor(a));
            for ((a1, a2), c) in &legs {
                let v = self.pair_basis(a1, y);
                if !v.is_zero() {
                    out.add_term(*a2, &(c * t) * &v);
                }
            }
        }
        out
    }

    /// `x▶a◀y`.
    pub fn two_sided(&self, x: &Elem, a: &Elem, y: &Elem) -> Elem {
        self.a_act_b(&self.b_act_a(x, a), y)
    }

    /// `a▶b = Σ⟨a,b₂⟩b₁`.
    pub fn a_on_b(&self, a: &Elem, b: &Elem) -> Elem {
        let d = self.b().comul(b).expect("finite comultiplication on B");
        let mut out = Elem::zero();
        for ((b1, b2), c) in &d {
            let v = self.pair(a, &Lc::basis(*b2, c.clone()));
            out.add_term(*b1, v);
        }
        out
    }

    /// `b◀a = Σ⟨a,b₁⟩b₂`.
    pub fn b_on_a(&self, b: &Elem, a: &Elem) -> Elem {
        let d = self.b().comul(b).expect("finite comultiplication on B");
        let mut out = Elem::zero();
        for ((b1, b2), c) in &d {
            let v = self.pair(a, &Lc::basis(*b1, c.clone()));
            out.add_term(*b2, v);
        }
        out
    }

    pub fn aut_b(&self, aut: &Automorphism, b: &Elem) -> Elem {
        b.lift(|l| self.apply_aut(aut, l))
    }

    pub fn precompose_a(&self, a: &Elem, aut: &Automorphism) -> Elem {
        a.lift(|l| self.precompose(l, aut))
    }

    pub fn w_apply_tensor(&self, side: Side, inverse: bool, x: &Tensor) -> Result<Tensor> {
        let mut out = Tensor::zero();
        for ((b, a), c) in x {
            out.add_scaled(c, &self.w_apply(side, inverse, b, a)?);
        }
        Ok(out)
    }
}

fn aut_on_group_label(aut: &Automorphism, x: i64) -> i64 {
    aut.apply(x).expect("automorphism checked against the backend")
}

fn check_group_aut(group: &Group, aut: &Automorphism) -> Result<()> {
    match (group, aut.perm(), aut.sign()) {
        (Group::Finite(_), Some(p), _) if Some(p.len()) == group.order() && aut.group().is_some() => Ok(()),
        (Group::Integers, _, Some(_)) => Ok(()),
        _ => Err(Error::BackendMismatch),
    }
}

/// `⟨K(H), KH⟩` with `⟨δ_p, g⟩ = [p = g]`; `W = Σ_g g⊗δ_g` applied lazily.
pub struct GroupPairing {
    pub a: FunctionAlgebra,
    pub b: GroupAlgebra,
}

impl GroupPairing {
    pub fn new(group: Group, field: Field) -> Self {
        GroupPairing { a: FunctionAlgebra::new(group.clone(), field), b: GroupAlgebra::new(group, field) }
    }
}

impl Pairing for GroupPairing {
    fn name(&self) -> String {
        "⟨K(H), KH⟩".into()
    }

    fn a(&self) -> &dyn Mha {
        &self.a
    }

    fn b(&self) -> &dyn Mha {
        &self.b
    }

    fn group(&self) -> Option<&Group> {
        Some(&self.b.group)
    }

    fn pair_basis(&self, a: &Label, b: &Label) -> Scalar {
        if a.0 == b.0 {
            self.b.field.one()
        } else {
            self.b.field.zero()
        }
    }

    fn a_cover(&self, b: &Label) -> Elem {
        Lc::basis(*b, self.b.field.one())
    }

    fn check_aut(&self, aut: &Automorphism) -> Result<()> {
        check_group_aut(&self.b.group, aut)
    }

    fn apply_aut(&self, aut: &Automorphism, b: &Label) -> Elem {
        Lc::basis(Label::one(aut_on_group_label(aut, b.0)), self.b.field.one())
    }

    fn precompose(&self, a: &Label, aut: &Automorphism) -> Elem {
        Lc::basis(Label::one(aut_on_group_label(&aut.inverse(), a.0)), self.b.field.one())
    }

    fn w_apply(&self, side: Side, inverse: bool, b: &Label, a: &Label) -> Result<Tensor> {
        // only g = p meets δ_p
        let g = &self.b.group;
        let p = if inverse { g.inv(a.0) } else { a.0 };
        let x = match side {
            Side::Left => g.mul(p, b.0),
            Side::Right => g.mul(b.0, p),
        };
        Ok(Lc::basis((Label::one(x), *a), self.b.field.one()))
    }
}

/// `W` or `W⁻¹` for pairings where the `A`-label dual to `b` is `b` itself.
fn dual_basis_w(a_inst: &dyn Mha, b_inst: &dyn Mha, side: Side, inverse: bool, b: &Label, a: &Label) -> Tensor {
    let one = b_inst.field().one();
    let bb = Lc::basis(*b, one.clone());
    let aa = Lc::basis(*a, one.clone());
    let mut out = Tensor::zero();
    for ei in b_inst.basis().expect("finite") {
        let left = if inverse { b_inst.antipode_basis(&ei) } else { Lc::basis(ei, one.clone()) };
        let dual = Lc::basis(ei, one.clone());
        let (x, y) = match side {
            Side::Left => (b_inst.mul(&left, &bb), a_inst.mul(&dual, &aa)),
            Side::Right => (b_inst.mul(&bb, &left), a_inst.mul(&aa, &dual)),
        };
        if !x.is_zero() && !y.is_zero() {
            out.add_scaled(&one, &x.tensor(&y));
        }
    }
    out
}

/// `⟨H*, H⟩` for a finite-dimensional Hopf algebra given by structure constants.
pub struct FiniteDimPairing {
    pub a: FiniteDimHopf,
    pub b: FiniteDimHopf,
}

impl FiniteDimPairing {
    pub fn new(b: FiniteDimHopf, dual_names: Option<Vec<String>>) -> Self {
        FiniteDimPairing { a: b.dual(dual_names), b }
    }

    /// `KH` as structure constants, paired with `K(H)` written as `δ_g`.
    pub fn group_algebra(group: &Group, field: Field) -> Result<Self> {
        let b = FiniteDimHopf::group_algebra(group, field)?;
        let names = b.names().iter().map(|n| format!("δ_{n}")).collect();
        Ok(FiniteDimPairing::new(b, Some(names)))
    }

    fn dim(&self) -> usize {
        self.b.names().len()
    }
}

impl Pairing for FiniteDimPairing {
    fn name(&self) -> String {
        format!("⟨H*, H⟩ (dim {})", self.dim())
    }

    fn a(&self) -> &dyn Mha {
        &self.a
    }

    fn b(&self) -> &dyn Mha {
        &self.b
    }

    fn group(&self) -> Option<&Group> {
        None
    }

    fn pair_basis(&self, a: &Label, b: &Label) -> Scalar {
        if a == b {
            self.b.field().one()
        } else {
            self.b.field().zero()
        }
    }

    fn check_aut(&self, aut: &Automorphism) -> Result<()> {
        let n = self.dim();
        let ok = aut.perm().is_some_and(|p| p.len() == n) || aut.matrix().is_some_and(|m| m.len() == n);
        if !ok {
            return Err(Error::BackendMismatch);
        }
        // a linear bijection must also be a Hopf map of B
        let b = &self.b as &dyn Mha;
        let f = b.field();
        let phi = |x: &Elem| x.lift(|l| self.apply_aut(aut, l));
        let phi2 = |t: &Tensor| t.lift(|(x, y)| phi(&Lc::basis(*x, f.one())).tensor(&phi(&Lc::basis(*y, f.one()))));
        for i in b.basis().unwrap() {
            let ei = b.basis_elem(i);
            if b.comul(&phi(&ei)) != b.comul(&ei).map(|t| phi2(&t)) {
                return input(format!("automorphism {aut} does not commute with Δ at {}", b.fmt_label(&i)));
            }
            if b.counit(&phi(&ei)) != b.counit_basis(&i) {
                return input(format!("automorphism {aut} does not preserve ε at {}", b.fmt_label(&i)));
            }
            for j in b.basis().unwrap() {
                let ej = b.basis_elem(j);
                if phi(&b.mul(&ei, &ej)) != b.mul(&phi(&ei), &phi(&ej)) {
                    return input(format!("automorphism {aut} is not multiplicative"));
                }
            }
        }
        Ok(())
    }

    fn apply_aut(&self, aut: &Automorphism, b: &Label) -> Elem {
        let f = self.b.field();
        if let Some(p) = aut.perm() {
            return Lc::basis(Label::one(p[b.0 as usize]), f.one());
        }
        let m = aut.matrix().expect("checked automorphism");
        (0..self.dim()).map(|i| (Label::one(i as i64), m[i][b.0 as usize].clone())).collect()
    }

    fn precompose(&self, a: &Label, aut: &Automorphism) -> Elem {
        // (e^i∘φ)(e_j) = φ_ij
        let f = self.b.field();
        if let Some(p) = aut.perm() {
            let j = p.iter().position(|&x| x == a.0).expect("permutation");
            return Lc::basis(Label::one(j as i64), f.one());
        }
        let m = aut.matrix().expect("checked automorphism");
        (0..self.dim()).map(|j| (Label::one(j as i64), m[a.0 as usize][j].clone())).collect()
    }

    fn w_apply(&self, side: Side, inverse: bool, b: &Label, a: &Label) -> Result<Tensor> {
        Ok(dual_basis_w(&self.a, &self.b, side, inverse, b, a))
    }
}

/// `⟨D(H)*, D(H)⟩` for a finite group `H`; automorphisms of `H` act on both legs.
pub struct DoublePairing {
    pub a: DoubleDual,
    pub b: DrinfeldDouble,
}

impl DoublePairing {
    pub fn new(group: Group, field: Field) -> Result<Self> {
        Ok(DoublePairing { a: DoubleDual::new(group.clone(), field)?, b: DrinfeldDouble::new(group, field)? })
    }
}

impl Pairing for DoublePairing {
    fn name(&self) -> String {
        "⟨D(H)*, D(H)⟩".into()
    }

    fn a(&self) -> &dyn Mha {
        &self.a
    }

    fn b(&self) -> &dyn Mha {
        &self.b
    }

    fn group(&self) -> Option<&Group> {
        Some(&self.b.group)
    }

    fn pair_basis(&self, a: &Label, b: &Label) -> Scalar {
        if a == b {
            self.b.field.one()
        } else {
            self.b.field.zero()
        }
    }

    fn check_aut(&self, aut: &Automorphism) -> Result<()> {
        check_group_aut(&self.b.group, aut)
    }

    fn apply_aut(&self, aut: &Automorphism, b: &Label) -> Elem {
        Lc::basis(Label(aut_on_group_label(aut, b.0), aut_on_group_label(aut, b.1)), self.b.field.one())
    }

    fn precompose(&self, a: &Label, aut: &Automorphism) -> Elem {
        let inv = aut.inverse();
        Lc::basis(Label(aut_on_group_label(&inv, a.0), aut_on_group_label(&inv, a.1)), self.b.field.one())
    }

    fn w_apply(&self, side: Side, inverse: bool, b: &Label, a: &Label) -> Result<Tensor> {
        Ok(dual_basis_w(&self.a, &self.b, side, inverse, b, a))
    }
}

pub type SharedPairing = Arc<dyn Pairing>;
