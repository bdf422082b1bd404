use serde_json::Value;

use super::{Mha, TKind};
use crate::error::Result;
use crate::group::Group;
use crate::linear::{Elem, Label, Lc, Tensor};
use crate::scalar::{Field, Scalar};

/// The group algebra `KH`: basis `H`, grouplike comultiplication.
pub struct GroupAlgebra {
    pub group: Group,
    pub field: Field,
}

impl GroupAlgebra {
    pub fn new(group: Group, field: Field) -> Self {
        GroupAlgebra { group, field }
    }

    fn e(&self, g: i64) -> Elem {
        Lc::basis(Label::one(g), self.field.one())
    }

    fn t(&self, a: i64, b: i64) -> Tensor {
        Lc::basis((Label::one(a), Label::one(b)), self.field.one())
    }
}

impl Mha for GroupAlgebra {
    fn name(&self) -> String {
        "KH".into()
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
        self.group.name(l.0)
    }

    fn parse_label(&self, v: &Value) -> Result<Label> {
        self.group.parse(v).map(Label::one)
    }

    fn mul_basis(&self, x: &Label, y: &Label) -> Elem {
        self.e(self.group.mul(x.0, y.0))
    }

    fn t_basis(&self, kind: TKind, x: &Label, y: &Label) -> Tensor {
        let g = &self.group;
        let (a, b) = (x.0, y.0);
        match kind {
            TKind::T1 => self.t(a, g.mul(a, b)),
            TKind::T2 => self.t(g.mul(a, b), b),
            TKind::T3 => self.t(g.mul(a, b), a),
            TKind::T4 => self.t(b, g.mul(a, b)),
        }
    }

    fn t_inv_basis(&self, kind: TKind, x: &Label, y: &Label) -> Tensor {
        let g = &self.group;
        let (a, b) = (x.0, y.0);
        match kind {
            TKind::T1 => self.t(a, g.mul(g.inv(a), b)),
            TKind::T2 => self.t(g.mul(a, g.inv(b)), b),
            TKind::T3 => self.t(b, g.mul(g.inv(b), a)),
            TKind::T4 => self.t(g.mul(b, g.inv(a)), a),
        }
    }

    fn counit_basis(&self, _x: &Label) -> Scalar {
        self.field.one()
    }

    fn antipode_basis(&self, x: &Label) -> Elem {
        self.e(self.group.inv(x.0))
    }

    fn antipode_inv_basis(&self, x: &Label) -> Elem {
        self.e(self.group.inv(x.0))
    }

    fn unit(&self) -> Option<Elem> {
        Some(self.e(self.group.identity()))
    }

    fn comul_basis(&self, x: &Label) -> Option<Tensor> {
        Some(self.t(x.0, x.0))
    }
}
