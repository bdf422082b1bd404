use serde_json::Value;

use super::{parse_index_label, t_from_comul, Mha, TKind};
use crate::error::{input, Error, Result};
use crate::group::Group;
use crate::linalg::{self, Matrix};
use crate::linear::{Elem, Label, Lc, Tensor};
use crate::scalar::{Field, Scalar};

/// A finite-dimensional Hopf algebra given by structure constants on a basis `e_0..e_{n-1}`.
#[derive(Clone, Debug)]
pub struct FiniteDimHopf {
    field: Field,
    names: Vec<String>,
    unit: Elem,
    /// `mul[i*n + j] = e_i e_j`
    mul: Vec<Elem>,
    comul: Vec<Tensor>,
    counit: Vec<Scalar>,
    antipode: Vec<Elem>,
    antipode_inv: Vec<Elem>,
}

fn l(i: usize) -> Label {
    Label::one(i as i64)
}

fn scalar_of(field: Field, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => field.parse(s),
        Value::Number(n) if n.is_i64() => Ok(field.int(n.as_i64().unwrap())),
        _ => input(format!("{v} is not an exact rational")),
    }
}

fn index_of(v: &Value, n: usize, what: &str) -> Result<usize> {
    match v.as_u64() {
        Some(i) if (i as usize) < n => Ok(i as usize),
        _ => input(format!("{what}: index {v} out of range 0..{n}")),
    }
}

impl FiniteDimHopf {
    /// Validates every Hopf axiom on the basis before accepting the data.
    pub fn new(
        field: Field,
        names: Vec<String>,
        unit: Elem,
        mul: Vec<Elem>,
        comul: Vec<Tensor>,
        counit: Vec<Scalar>,
        antipode: Vec<Elem>,
    ) -> Result<FiniteDimHopf> {
        let n = names.len();
        if n == 0 || mul.len() != n * n || comul.len() != n || counit.len() != n || antipode.len() != n {
            return input("structure constants have inconsistent dimensions");
        }
        let mut s = Matrix::new();
        for i in 0..n {
            s.push((0..n).map(|j| antipode[j].coeff(&l(i)).cloned().unwrap_or_else(|| field.zero())).collect());
        }
        let Some(sinv) = linalg::mat_inv(&s, field) else {
            return Err(Error::Axiom { axiom: "antipode bijectivity".into(), detail: "antipode matrix is singular".into() });
        };
        let antipode_inv = (0..n)
            .map(|j| (0..n).map(|i| (l(i), sinv[i][j].clone())).collect())
            .collect();
        let h = FiniteDimHopf { field, names, unit, mul, comul, counit, antipode, antipode_inv };
        h.validate()?;
        Ok(h)
    }

    fn dim(&self) -> usize {
        self.names.len()
    }

    fn fail(&self, axiom: &str, idx: &[usize]) -> Error {
        let who: Vec<&str> = idx.iter().map(|&i| self.names[i].as_str()).collect();
        Error::Axiom { axiom: axiom.into(), detail: format!("fails at basis ({})", who.join(", ")) }
    }

    fn mulx(&self, x: &Elem, y: &Elem) -> Elem {
        (self as &dyn Mha).mul(x, y)
    }

    fn comul_x(&self, x: &Elem) -> Tensor {
        x.lift(|l| self.comul[l.0 as usize].clone())
    }

    fn tmul(&self, x: &Tensor, y: &Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for ((a, b), s) in x {
            for ((c, d), t) in y {
                let u = self.mul[a.0 as usize * self.dim() + c.0 as usize].clone();
                let v = self.mul[b.0 as usize * self.dim() + d.0 as usize].clone();
                out.add_scaled(&(s * t), &u.tensor(&v));
            }
        }
        out
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        let e = |i: usize| Lc::basis(l(i), self.field.one());
        for i in 0..n {
            if self.mulx(&self.unit, &e(i)) != e(i) || self.mulx(&e(i), &self.unit) != e(i) {
                return Err(self.fail("unit law", &[i]));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = &self.mul[i * n + j];
                for k in 0..n {
                    let left = self.mulx(ij, &e(k));
                    let right = self.mulx(&e(i), &self.mul[j * n + k]);
                    if left != right {
                        return Err(self.fail("associativity", &[i, j, k]));
                    }
                }
            }
        }
        for i in 0..n {
            let d = &self.comul[i];
            let left: Lc<(Label, Label, Label)> = d.lift(|(a, b)| self.comul[a.0 as usize].map_labels(|(x, y)| (*x, *y, *b)));
            let right: Lc<(Label, Label, Label)> = d.lift(|(a, b)| self.comul[b.0 as usize].map_labels(|(x, y)| (*a, *x, *y)));
            if left != right {
                return Err(self.fail("coassociativity", &[i]));
            }
            let c1: Elem = d.lift(|(a, b)| Lc::basis(*b, self.counit[a.0 as usize].clone()));
            let c2: Elem = d.lift(|(a, b)| Lc::basis(*a, self.counit[b.0 as usize].clone()));
            if c1 != e(i) || c2 != e(i) {
                return Err(self.fail("counit law", &[i]));
            }
        }
        let eps = |x: &Elem| x.eval(self.field.zero(), |l| self.counit[l.0 as usize].clone());
        if self.comul_x(&self.unit) != self.unit.tensor(&self.unit) || !eps(&self.unit).is_one() {
            return Err(Error::Axiom { axiom: "unit is grouplike".into(), detail: "Δ(1) ≠ 1⊗1 or ε(1) ≠ 1".into() });
        }
        for i in 0..n {
            for j in 0..n {
                let ij = &self.mul[i * n + j];
                if self.comul_x(ij) != self.tmul(&self.comul[i], &self.comul[j]) {
                    return Err(self.fail("multiplicativity of Δ", &[i, j]));
                }
                if eps(ij) != &self.counit[i] * &self.counit[j] {
                    return Err(self.fail("multiplicativity of ε", &[i, j]));
                }
            }
        }
        for i in 0..n {
            let expect = self.unit.scale(&self.counit[i]);
            let left = self.comul[i].lift(|(a, b)| self.mulx(&self.antipode[a.0 as usize], &e(b.0 as usize)));
            let right = self.comul[i].lift(|(a, b)| self.mulx(&e(a.0 as usize), &self.antipode[b.0 as usize]));
            if left != expect || right != expect {
                return Err(self.fail("antipode law", &[i]));
            }
        }
        Ok(())
    }

    /// Reads the JSON structure-constant format.
    pub fn from_json(v: &Value, field: Field) -> Result<FiniteDimHopf> {
        let Some(n) = v.get("dim").and_then(Value::as_u64).filter(|&n| n >= 1) else {
            return input("hopf.dim must be a positive integer");
        };
        let n = n as usize;
        let names: Vec<String> = match v.get("basis").and_then(Value::as_array) {
            Some(b) if b.len() == n => b.iter().map(|x| x.as_str().map(str::to_string).unwrap_or_else(|| x.to_string())).collect(),
            Some(_) => return input("hopf.basis must list dim names"),
            None => (0..n).map(|i| format!("e{i}")).collect(),
        };
        let arr = |key: &str| -> Result<&Vec<Value>> {
            v.get(key).and_then(Value::as_array).ok_or_else(|| Error::Input(format!("hopf.{key} must be an array")))
        };
        let unit_v = arr("unit")?;
        if unit_v.len() != n {
            return input("hopf.unit must have dim coefficients");
        }
        let mut unit = Elem::zero();
        for (i, c) in unit_v.iter().enumerate() {
            unit.add_term(l(i), scalar_of(field, c)?);
        }
        let counit_v = arr("counit")?;
        if counit_v.len() != n {
            return input("hopf.counit must have dim coefficients");
        }
        let counit = counit_v.iter().map(|c| scalar_of(field, c)).collect::<Result<Vec<_>>>()?;
        let mut mul = vec![Elem::zero(); n * n];
        for r in arr("mul")? {
            let Some([i, j, k, c]) = r.as_array().map(Vec::as_slice).and_then(|s| <&[Value; 4]>::try_from(s).ok()) else {
                return input(format!("hopf.mul entry {r} is not [i, j, k, coeff]"));
            };
            let (i, j, k) = (index_of(i, n, "mul")?, index_of(j, n, "mul")?, index_of(k, n, "mul")?);
            mul[i * n + j].add_term(l(k), scalar_of(field, c)?);
        }
        let mut comul = vec![Tensor::zero(); n];
        for r in arr("comul")? {
            let Some([i, j, k, c]) = r.as_array().map(Vec::as_slice).and_then(|s| <&[Value; 4]>::try_from(s).ok()) else {
                return input(format!("hopf.comul entry {r} is not [i, j, k, coeff]"));
            };
            let (i, j, k) = (index_of(i, n, "comul")?, index_of(j, n, "comul")?, index_of(k, n, "comul")?);
            comul[i].add_term((l(j), l(k)), scalar_of(field, c)?);
        }
        let mut antipode = vec![Elem::zero(); n];
        for r in arr("antipode")? {
            let Some([i, j, c]) = r.as_array().map(Vec::as_slice).and_then(|s| <&[Value; 3]>::try_from(s).ok()) else {
                return input(format!("hopf.antipode entry {r} is not [i, j, coeff]"));
            };
            let (i, j) = (index_of(i, n, "antipode")?, index_of(j, n, "antipode")?);
            antipode[i].add_term(l(j), scalar_of(field, c)?);
        }
        FiniteDimHopf::new(field, names, unit, mul, comul, counit, antipode)
    }

    /// Structure constants of the group algebra of a finite group; basis index = element index.
    pub fn group_algebra(group: &Group, field: Field) -> Result<FiniteDimHopf> {
        let Some(els) = group.elements() else {
            return Err(Error::Infinite);
        };
        let n = els.len();
        let one = field.one();
        let e = |g: i64| Lc::basis(Label::one(g), one.clone());
        let mul = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| e(group.mul(i as i64, j as i64))).collect();
        let comul = els.iter().map(|&g| Lc::basis((Label::one(g), Label::one(g)), one.clone())).collect();
        let counit = vec![one.clone(); n];
        let antipode = els.iter().map(|&g| e(group.inv(g))).collect();
        let names = els.iter().map(|&g| group.name(g)).collect();
        FiniteDimHopf::new(field, names, e(group.identity()), mul, comul, counit, antipode)
    }

    /// The dual Hopf algebra, by transposing structure constants. Basis `e^i` is dual to `e_i`.
    pub fn dual(&self, names: Option<Vec<String>>) -> FiniteDimHopf {
        let n = self.dim();
        let f = self.field;
        let names = names.unwrap_or_else(|| self.names.iter().map(|s| format!("{s}*")).collect());
        let mut mul = vec![Elem::zero(); n * n];
        for k in 0..n {
            for ((i, j), c) in &self.comul[k] {
                mul[i.0 as usize * n + j.0 as usize].add_term(l(k), c.clone());
            }
        }
        let mut comul = vec![Tensor::zero(); n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.mul[i * n + j] {
                    comul[k.0 as usize].add_term((l(i), l(j)), c.clone());
                }
            }
        }
        let counit = (0..n).map(|i| self.unit.coeff(&l(i)).cloned().unwrap_or_else(|| f.zero())).collect();
        let unit = (0..n).map(|i| (l(i), self.counit[i].clone())).collect();
        let mut antipode = vec![Elem::zero(); n];
        let mut antipode_inv = vec![Elem::zero(); n];
        for j in 0..n {
            for (i, c) in &self.antipode[j] {
                antipode[i.0 as usize].add_term(l(j), c.clone());
            }
            for (i, c) in &self.antipode_inv[j] {
                antipode_inv[i.0 as usize].add_term(l(j), c.clone());
            }
        }
        FiniteDimHopf { field: f, names, unit, mul, comul, counit, antipode, antipode_inv }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

impl Mha for FiniteDimHopf {
    fn name(&self) -> String {
        format!("Hopf(dim {})", self.dim())
    }

    fn field(&self) -> Field {
        self.field
    }

    fn basis(&self) -> Option<Vec<Label>> {
        Some((0..self.dim()).map(l).collect())
    }

    fn window(&self, _radius: i64) -> Vec<Label> {
        self.basis().unwrap()
    }

    fn fmt_label(&self, x: &Label) -> String {
        self.names[x.0 as usize].clone()
    }

    fn parse_label(&self, v: &Value) -> Result<Label> {
        parse_index_label(v, &self.names)
    }

    fn mul_basis(&self, x: &Label, y: &Label) -> Elem {
        self.mul[x.0 as usize * self.dim() + y.0 as usize].clone()
    }

    fn t_basis(&self, kind: TKind, x: &Label, y: &Label) -> Tensor {
        t_from_comul(self, kind, x, y, false)
    }

    fn t_inv_basis(&self, kind: TKind, x: &Label, y: &Label) -> Tensor {
        t_from_comul(self, kind, x, y, true)
    }

    fn counit_basis(&self, x: &Label) -> Scalar {
        self.counit[x.0 as usize].clone()
    }

    fn antipode_basis(&self, x: &Label) -> Elem {
        self.antipode[x.0 as usize].clone()
    }

    fn antipode_inv_basis(&self, x: &Label) -> Elem {
        self.antipode_inv[x.0 as usize].clone()
    }

    fn unit(&self) -> Option<Elem> {
        Some(self.unit.clone())
    }

    fn comul_basis(&self, x: &Label) -> Option<Tensor> {
        Some(self.comul[x.0 as usize].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_json() -> Value {
        serde_json::json!({
            "dim": 2, "basis": ["e", "u"], "unit": ["1", "0"],
            "mul": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[1,1,0,"1"]],
            "comul": [[0,0,0,"1"],[1,1,1,"1"]],
            "counit": ["1","1"],
            "antipode": [[0,0,"1"],[1,1,"1"]]
        })
    }

    #[test]
    fn loads_group_algebra_of_z2() {
        let h = FiniteDimHopf::from_json(&z2_json(), Field::Rational).unwrap();
        let d = h.dual(None);
        // the dual of KZ/2 has orthogonal idempotents as its basis
        let m = &d as &dyn Mha;
        let e0 = m.basis_elem(l(0));
        assert_eq!(m.mul(&e0, &e0), e0);
        assert!(m.mul(&e0, &m.basis_elem(l(1))).is_zero());
        d.validate().unwrap();
    }

    #[test]
    fn rejects_non_coassociative_comul() {
        let mut v = z2_json();
        v["comul"] = serde_json::json!([[0,0,0,"1"],[1,1,1,"1"],[1,0,1,"1"]]);
        let err = FiniteDimHopf::from_json(&v, Field::Rational).unwrap_err();
        assert!(matches!(err, Error::Axiom { .. }), "{err}");
        let mut v = z2_json();
        v["antipode"] = serde_json::json!([[0,0,"1"],[1,1,"-1"]]);
        assert!(FiniteDimHopf::from_json(&v, Field::Rational).is_err());
    }

    #[test]
    fn group_algebra_t_maps_roundtrip() {
        let h = FiniteDimHopf::group_algebra(&Group::symmetric(3), Field::Rational).unwrap();
        let m = &h as &dyn Mha;
        for k in TKind::ALL {
            for a in 0..6 {
                for b in 0..6 {
                    let t = Lc::basis((l(a), l(b)), Field::Rational.one());
                    assert_eq!(m.t_map_inv(k, &m.t_map(k, &t)), t);
                    assert_eq!(m.t_map(k, &m.t_map_inv(k, &t)), t);
                }
            }
        }
    }
}
