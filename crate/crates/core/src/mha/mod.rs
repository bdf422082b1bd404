//! Regular multiplier Hopf algebras presented through multiplication, the four
//! covered comultiplication maps, counit and antipode.
//!
//! For `x, y` basis labels:
//! `T1(x⊗y) = Δ(x)(1⊗y)`, `T2(x⊗y) = (x⊗1)Δ(y)`,
//! `T3(x⊗y) = Δ(x)(y⊗1)`, `T4(x⊗y) = (1⊗x)Δ(y)`.

mod double;
mod finite_dim;
mod function_algebra;
mod group_algebra;

pub use double::{DoubleDual, DrinfeldDouble};
pub use finite_dim::FiniteDimHopf;
pub use function_algebra::FunctionAlgebra;
pub use group_algebra::GroupAlgebra;

use std::fmt;

use serde_json::Value;

use crate::error::Result;
use crate::linear::{Elem, Label, Lc, Tensor};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TKind {
    T1,
    T2,
    T3,
    T4,
}

impl TKind {
    pub const ALL: [TKind; 4] = [TKind::T1, TKind::T2, TKind::T3, TKind::T4];
}

impl fmt::Display for TKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub trait Mha: Send + Sync {
    fn name(&self) -> String;

    fn field(&self) -> Field;

    /// The full basis, or `None` for infinite-dimensional instances.
    fn basis(&self) -> Option<Vec<Label>>;

    /// Basis labels used for sampled enumeration; the full basis if finite.
    fn window(&self, radius: i64) -> Vec<Label>;

    fn fmt_label(&self, l: &Label) -> String;

    fn parse_label(&self, v: &Value) -> Result<Label>;

    fn mul_basis(&self, x: &Label, y: &Label) -> Elem;

    fn t_basis(&self, kind: TKind, x: &Label, y: &Label) -> Tensor;

    fn t_inv_basis(&self, kind: TKind, x: &Label, y: &Label) -> Tensor;

    fn counit_basis(&self, x: &Label) -> Scalar;

    fn antipode_basis(&self, x: &Label) -> Elem;

    fn antipode_inv_basis(&self, x: &Label) -> Elem;

    fn unit(&self) -> Option<Elem>;

    /// An element acting as a two-sided unit on everything supported in `support`.
    fn local_unit(&self, support: &[Label]) -> Elem {
        let _ = support;
        self.unit().expect("unital instances use their unit as local unit")
    }

    /// `Δ(x)` when it lies in the algebraic tensor square (unital instances).
    fn comul_basis(&self, x: &Label) -> Option<Tensor>;
}

impl dyn Mha + '_ {
    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = Elem::zero();
        for (a, u) in x {
            for (b, v) in y {
                out.add_scaled(&(u * v), &self.mul_basis(a, b));
            }
        }
        out
    }

    pub fn t_map(&self, kind: TKind, x: &Tensor) -> Tensor {
        x.lift(|(a, b)| self.t_basis(kind, a, b))
    }

    pub fn t_map_inv(&self, kind: TKind, x: &Tensor) -> Tensor {
        x.lift(|(a, b)| self.t_inv_basis(kind, a, b))
    }

    pub fn counit(&self, x: &Elem) -> Scalar {
        x.eval(self.field().zero(), |l| self.counit_basis(l))
    }

    pub fn antipode(&self, x: &Elem) -> Elem {
        x.lift(|l| self.antipode_basis(l))
    }

    pub fn antipode_inv(&self, x: &Elem) -> Elem {
        x.lift(|l| self.antipode_inv_basis(l))
    }

    pub fn comul(&self, x: &Elem) -> Option<Tensor> {
        let mut out = Tensor::zero();
        for (l, c) in x {
            out.add_scaled(c, &self.comul_basis(l)?);
        }
        Some(out)
    }

    pub fn basis_elem(&self, l: Label) -> Elem {
        Lc::basis(l, self.field().one())
    }

    pub fn render(&self, x: &Elem) -> String {
        crate::linear::render(x, |l| self.fmt_label(l))
    }

    pub fn render_tensor(&self, x: &Tensor) -> String {
        crate::linear::render(x, |(a, b)| format!("{}⊗{}", self.fmt_label(a), self.fmt_label(b)))
    }

    pub fn is_unital(&self) -> bool {
        self.unit().is_some()
    }
}

/// T-maps and their inverses for unital instances whose comultiplication is finite,
/// via `T1⁻¹(a⊗b) = a₁⊗S(a₂)b`, `T2⁻¹(a⊗b) = aS(b₁)⊗b₂`,
/// `T3⁻¹(a⊗b) = b₂⊗S⁻¹(b₁)a`, `T4⁻¹(a⊗b) = bS⁻¹(a₂)⊗a₁`.
pub(crate) fn t_from_comul<M: Mha + ?Sized>(m: &M, kind: TKind, x: &Label, y: &Label, inverse: bool) -> Tensor {
    let one = m.field().one();
    let by = Lc::basis(*y, one.clone());
    let bx = Lc::basis(*x, one);
    let mul = |u: &Elem, v: &Elem| -> Elem {
        let mut out = Elem::zero();
        for (a, s) in u {
            for (b, t) in v {
                out.add_scaled(&(s * t), &m.mul_basis(a, b));
            }
        }
        out
    };
    let comul = |l: &Label| m.comul_basis(l).expect("finite comultiplication");
    let mut out = Tensor::zero();
    match (kind, inverse) {
        (TKind::T1, false) => {
            for ((a1, a2), c) in &comul(x) {
                let r = mul(&Lc::basis(*a2, c.clone()), &by);
                out.add_scaled(&m.field().one(), &Lc::basis(*a1, m.field().one()).tensor(&r));
            }
        }
        (TKind::T2, false) => {
            for ((b1, b2), c) in &comul(y) {
                let l = mul(&bx, &Lc::basis(*b1, c.clone()));
                out.add_scaled(&m.field().one(), &l.tensor(&Lc::basis(*b2, m.field().one())));
            }
        }
        (TKind::T3, false) => {
            for ((a1, a2), c) in &comul(x) {
                let l = mul(&Lc::basis(*a1, c.clone()), &by);
                out.add_scaled(&m.field().one(), &l.tensor(&Lc::basis(*a2, m.field().one())));
            }
        }
        (TKind::T4, false) => {
            for ((b1, b2), c) in &comul(y) {
                let r = mul(&bx, &Lc::basis(*b2, c.clone()));
                out.add_scaled(&m.field().one(), &Lc::basis(*b1, m.field().one()).tensor(&r));
            }
        }
        (TKind::T1, true) => {
            for ((a1, a2), c) in &comul(x) {
                let r = mul(&m.antipode_basis(a2).scale(c), &by);
                out.add_scaled(&m.field().one(), &Lc::basis(*a1, m.field().one()).tensor(&r));
            }
        }
        (TKind::T2, true) => {
            for ((b1, b2), c) in &comul(y) {
                let l = mul(&bx, &m.antipode_basis(b1).scale(c));
                out.add_scaled(&m.field().one(), &l.tensor(&Lc::basis(*b2, m.field().one())));
            }
        }
        (TKind::T3, true) => {
            for ((b1, b2), c) in &comul(y) {
                let r = mul(&m.antipode_inv_basis(b1).scale(c), &bx);
                out.add_scaled(&m.field().one(), &Lc::basis(*b2, m.field().one()).tensor(&r));
            }
        }
        (TKind::T4, true) => {
            for ((a1, a2), c) in &comul(x) {
                let l = mul(&by, &m.antipode_inv_basis(a2).scale(c));
                out.add_scaled(&m.field().one(), &l.tensor(&Lc::basis(*a1, m.field().one())));
            }
        }
    }
    out
}

/// Parses a label written as an integer index or a `[x, y]` pair.
pub(crate) fn parse_index_label(v: &Value, names: &[String]) -> Result<Label> {
    if let Some(s) = v.as_str() {
        if let Some(i) = names.iter().position(|n| n == s) {
            return Ok(Label::one(i as i64));
        }
    }
    match v.as_u64() {
        Some(i) if (i as usize) < names.len() => Ok(Label::one(i as i64)),
        _ => crate::error::input(format!("{v} is not a basis element")),
    }
}
