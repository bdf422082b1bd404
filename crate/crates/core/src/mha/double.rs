//! The Drinfeld double `D(H) = K(H) ⋊ KH` of a finite group and its dual.
//!
//! `D(H)` labels are `(p, h)` for `δ_p⊗h`; dual labels are `(h, p)` for `h⊗δ_p`,
//! and `⟨h⊗δ_p, δ_q⊗l⟩ = [h=q][p=l]`.

use serde_json::Value;

use super::{t_from_comul, Mha, TKind};
use crate::error::{input, Error, Result};
use crate::group::Group;
use crate::linear::{Elem, Label, Lc, Tensor};
use crate::scalar::{Field, Scalar};

fn parse_pair(group: &Group, v: &Value) -> Result<Label> {
    match v.as_array().map(Vec::as_slice) {
        Some([x, y]) => Ok(Label(group.parse(x)?, group.parse(y)?)),
        _ => input(format!("{v} is not a [x, y] pair of group elements")),
    }
}

fn pair_window(group: &Group) -> Vec<Label> {
    let els = group.elements().expect("finite group");
    els.iter().flat_map(|&x| els.iter().map(move |&y| Label(x, y))).collect()
}

/// `(δ_p⊗h)(δ_q⊗l) = [p = hqh⁻¹] δ_p⊗hl`, `Δ(δ_p⊗h) = Σ_s (δ_{s⁻¹p}⊗h)⊗(δ_s⊗h)`,
/// `ε(δ_p⊗h) = [p=e]`, `S(δ_p⊗h) = δ_{h⁻¹p⁻¹h}⊗h⁻¹`.
pub struct DrinfeldDouble {
    pub group: Group,
    pub field: Field,
}

impl DrinfeldDouble {
    pub fn new(group: Group, field: Field) -> Result<Self> {
        if !group.is_finite() {
            return Err(Error::Infinite);
        }
        Ok(DrinfeldDouble { group, field })
    }

    fn e(&self, p: i64, h: i64) -> Elem {
        Lc::basis(Label(p, h), self.field.one())
    }
}

impl Mha for DrinfeldDouble {
    fn name(&self) -> String {
        "D(H)".into()
    }

    fn field(&self) -> Field {
        self.field
    }

    fn basis(&self) -> Option<Vec<Label>> {
        Some(pair_window(&self.group))
    }

    fn window(&self, _radius: i64) -> Vec<Label> {
        pair_window(&self.group)
    }

    fn fmt_label(&self, l: &Label) -> String {
        format!("δ_{}⊗{}", self.group.name(l.0), self.group.name(l.1))
    }

    fn parse_label(&self, v: &Value) -> Result<Label> {
        parse_pair(&self.group, v)
    }

    fn mul_basis(&self, x: &Label, y: &Label) -> Elem {
        let g = &self.group;
        let (Label(p, h), Label(q, l)) = (*x, *y);
        if p == g.conj(h, q) {
            self.e(p, g.mul(h, l))
        } else {
            Elem::zero()
        }
    }

    fn t_basis(&self, kind: TKind, x: &Label, y: &Label) -> Tensor {
        t_from_comul(self, kind, x, y, false)
    }

    fn t_inv_basis(&self, kind: TKind, x: &Label, y: &Label) -> Tensor {
        t_from_comul(self, kind, x, y, true)
    }

    fn counit_basis(&self, x: &Label) -> Scalar {
        if x.0 == self.group.identity() {
            self.field.one()
        } else {
            self.field.zero()
        }
    }

    fn antipode_basis(&self, x: &Label) -> Elem {
        let g = &self.group;
        let hi = g.inv(x.1);
        self.e(g.conj(hi, g.inv(x.0)), hi)
    }

    fn antipode_inv_basis(&self, x: &Label) -> Elem {
        // the antipode is an involution
        self.antipode_basis(x)
    }

    fn unit(&self) -> Option<Elem> {
        let e = self.group.identity();
        Some(self.group.elements()?.into_iter().map(|p| (Label(p, e), self.field.one())).collect())
    }

    fn comul_basis(&self, x: &Label) -> Option<Tensor> {
        let g = &self.group;
        let (p, h) = (x.0, x.1);
        Some(g.elements()?.into_iter().map(|s| ((Label(g.mul(g.inv(s), p), h), Label(s, h)), self.field.one())).collect())
    }
}

/// Dual of `D(H)`: `(h⊗δ_p)(l⊗δ_q) = lh⊗δ_pδ_q`,
/// `Δ(h⊗δ_p) = Σ_t (h⊗δ_t)⊗(t⁻¹ht⊗δ_{t⁻¹p})`, `ε(h⊗δ_p) = [p=e]`,
/// `S(h⊗δ_p) = p⁻¹h⁻¹p⊗δ_{p⁻¹}`.
pub struct DoubleDual {
    pub group: Group,
    pub field: Field,
}

impl DoubleDual {
    pub fn new(group: Group, field: Field) -> Result<Self> {
        if !group.is_finite() {
            return Err(Error::Infinite);
        }
        Ok(DoubleDual { group, field })
    }

    fn e(&self, h: i64, p: i64) -> Elem {
        Lc::basis(Label(h, p), self.field.one())
    }
}

impl Mha for DoubleDual {
    fn name(&self) -> String {
        "D(H)*".into()
    }

    fn field(&self) -> Field {
        self.field
    }

    fn basis(&self) -> Option<Vec<Label>> {
        Some(pair_window(&self.group))
    }

    fn window(&self, _radius: i64) -> Vec<Label> {
        pair_window(&self.group)
    }

    fn fmt_label(&self, l: &Label) -> String {
        format!("{}⊗δ_{}", self.group.name(l.0), self.group.name(l.1))
    }

    fn parse_label(&self, v: &Value) -> Result<Label> {
        parse_pair(&self.group, v)
    }

    fn mul_basis(&self, x: &Label, y: &Label) -> Elem {
        let (Label(h, p), Label(l, q)) = (*x, *y);
        if p == q {
            self.e(self.group.mul(l, h), p)
        } else {
            Elem::zero()
        }
    }

    fn t_basis(&self, kind: TKind, x: &Label, y: &Label) -> Tensor {
        t_from_comul(self, kind, x, y, false)
    }

    fn t_inv_basis(&self, kind: TKind, x: &Label, y: &Label) -> Tensor {
        t_from_comul(self, kind, x, y, true)
    }

    fn counit_basis(&self, x: &Label) -> Scalar {
        if x.1 == self.group.identity() {
            self.field.one()
        } else {
            self.field.zero()
        }
    }

    fn antipode_basis(&self, x: &Label) -> Elem {
        let g = &self.group;
        let pi = g.inv(x.1);
        self.e(g.conj(pi, g.inv(x.0)), pi)
    }

    fn antipode_inv_basis(&self, x: &Label) -> Elem {
        self.antipode_basis(x)
    }

    fn unit(&self) -> Option<Elem> {
        let e = self.group.identity();
        Some(self.group.elements()?.into_iter().map(|p| (Label(e, p), self.field.one())).collect())
    }

    fn comul_basis(&self, x: &Label) -> Option<Tensor> {
        let g = &self.group;
        let (h, p) = (x.0, x.1);
        Some(
            g.elements()?
                .into_iter()
                .map(|t| {
                    let ti = g.inv(t);
                    ((Label(h, t), Label(g.conj(ti, h), g.mul(ti, p))), self.field.one())
                })
                .collect(),
        )
    }
}
