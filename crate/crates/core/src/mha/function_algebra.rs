use serde_json::Value;

use super::{Mha, TKind};
use crate::error::Result;
use crate::group::Group;
use crate::linear::{Elem, Label, Lc, Tensor};
use crate::scalar::{Field, Scalar};

/// Finitely supported functions `K(H)` with basis `δ_p`; unital only for finite `H`.
pub struct FunctionAlgebra {
    pub group: Group,
    pub field: Field,
}

impl FunctionAlgebra {
    pub fn new(group: Group, field: Field) -> Self {
        FunctionAlgebra { group, field }
    }

    fn e(&self, g: i64) -> Elem {
        Lc::basis(Label::one(g), self.field.one())
    }

    fn t(&self, a: i64, b: i64) -> Tensor {
        Lc::basis((Label::one(a), Label::one(b)), self.field.one())
    }
}

impl Mha for FunctionAlgebra {
    fn name(&self) -> String {
        "K(H)".into()
    }

    fn field(&self) -> Field {
        self.field
    }

    fn basis(&self) -> Option<Vec<Label>> {
        self.group.elements().map(|v| v.into_iter().map(Label::one).collect())
    }

    fn window(&self, radius: i64) -> Vec<Label> {
        self.group.window(radius).into_iter().map(Label::one).collect()
    }

    fn fmt_label(&self, l: &Label) -> String {
        format!("δ_{}", self.group.name(l.0))
    }

    fn parse_label(&self, v: &Value) -> Result<Label> {
        if let Some(s) = v.as_str().and_then(|s| s.strip_prefix("δ_").or_else(|| s.strip_prefix("d_"))) {
            return self.group.parse_str(s).map(Label::one);
        }
        self.group.parse(v).map(Label::one)
    }

    fn mul_basis(&self, x: &Label, y: &Label) -> Elem {
        if x == y {
            self.e(x.0)
        } else {
            Elem::zero()
        }
    }

    // Δ(δ_p) = Σ_{xy=p} δ_x⊗δ_y, truncated by the cover
    fn t_basis(&self, kind: TKind, x: &Label, y: &Label) -> Tensor {
        let g = &self.group;
        let (p, q) = (x.0, y.0);
        match kind {
            TKind::T1 => self.t(g.mul(p, g.inv(q)), q),
            TKind::T2 => self.t(p, g.mul(g.inv(p), q)),
            TKind::T3 => self.t(q, g.mul(g.inv(q), p)),
            TKind::T4 => self.t(g.mul(q, g.inv(p)), p),
        }
    }

    fn t_inv_basis(&self, kind: TKind, x: &Label, y: &Label) -> Tensor {
        let g = &self.group;
        let (m, q) = (x.0, y.0);
        match kind {
            TKind::T1 => self.t(g.mul(m, q), q),
            TKind::T2 => self.t(m, g.mul(m, q)),
            TKind::T3 => self.t(g.mul(m, q), m),
            TKind::T4 => self.t(q, g.mul(m, q)),
        }
    }

    fn counit_basis(&self, x: &Label) -> Scalar {
        if x.0 == self.group.identity() {
            self.field.one()
        } else {
            self.field.zero()
        }
    }

    fn antipode_basis(&self, x: &Label) -> Elem {
        self.e(self.group.inv(x.0))
    }

    fn antipode_inv_basis(&self, x: &Label) -> Elem {
        self.e(self.group.inv(x.0))
    }

    fn unit(&self) -> Option<Elem> {
        let els = self.group.elements()?;
        Some(els.into_iter().map(|g| (Label::one(g), self.field.one())).collect())
    }

    fn local_unit(&self, support: &[Label]) -> Elem {
        support.iter().map(|l| (*l, self.field.one())).collect::<std::collections::BTreeMap<_, _>>().into_iter().collect()
    }

    fn comul_basis(&self, x: &Label) -> Option<Tensor> {
        let els = self.group.elements()?;
        let g = &self.group;
        Some(els.into_iter().map(|s| ((Label::one(g.mul(x.0, g.inv(s))), Label::one(s)), self.field.one())).collect())
    }
}
