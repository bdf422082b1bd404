//! Session specs: the JSON document a run is configured from.
//!
//! ```json
//! {"scalar": "rational",
//!  "instance": {"kind": "group", "group": {"kind": "int"}},
//!  "gradings": [["identity", "negation"]],
//!  "enum": {"mode": "sampled", "count": 200, "seed": 42, "window": 8}}
//! ```
//!
//! `scalar` is `"rational"` (default) or `{"prime": p}`. `gradings` is a list of
//! pairs, or `"inner"` for every pair of inner automorphisms of a finite group.
//! `enum` defaults to exhaustive. An optional `"mutation"` names a deliberate
//! corruption of the construction, used to test that the suites notice it.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::Value;

use crate::aut::{inner_pairs, AutPair, Automorphism};
use crate::crossed::{Double, Mutation};
use crate::enumerate::Enumeration;
use crate::error::{input, Error, Result};
use crate::group::Group;
use crate::linear::{CElem, CLabel, Lc};
use crate::mha::FiniteDimHopf;
use crate::pairing::{DoublePairing, FiniteDimPairing, GroupPairing, SharedPairing};
use crate::scalar::{Field, Scalar};
use crate::suite::{Context, Family};

/// How gradings of an instance are written.
#[derive(Clone, Debug)]
pub enum AutSyntax {
    /// Automorphisms of a group, as accepted by [`Automorphism::from_json`].
    Group(Group),
    /// Linear automorphisms of a `dim`-dimensional Hopf algebra: `"identity"`,
    /// `{"kind":"permutation","images":[..]}` or `{"kind":"matrix","rows":[[..]]}`.
    Linear { dim: usize, field: Field },
}

impl AutSyntax {
    pub fn automorphism(&self, v: &Value) -> Result<Automorphism> {
        match self {
            AutSyntax::Group(g) => Automorphism::from_json(g, v),
            AutSyntax::Linear { dim, field } => linear_automorphism(*dim, *field, v),
        }
    }

    pub fn pair(&self, v: &Value) -> Result<AutPair> {
        match v.as_array().map(Vec::as_slice) {
            Some([a, b]) => Ok(AutPair::new(self.automorphism(a)?, self.automorphism(b)?)),
            _ => input(format!("grading {v} must be a pair [α, β]")),
        }
    }

    fn inner_all(&self) -> Result<Vec<AutPair>> {
        match self {
            AutSyntax::Group(g) if g.is_finite() => Ok(inner_pairs(g)),
            _ => input("\"inner\" gradings need a finite group"),
        }
    }

    fn identity(&self) -> Automorphism {
        match self {
            AutSyntax::Group(g) => Automorphism::identity(g),
            AutSyntax::Linear { dim, .. } => Automorphism::identity_linear(*dim),
        }
    }
}

fn linear_automorphism(dim: usize, field: Field, v: &Value) -> Result<Automorphism> {
    let kind = match v {
        Value::String(s) => s.as_str(),
        _ => v.get("kind").and_then(Value::as_str).unwrap_or(""),
    };
    match kind {
        "identity" | "id" => Ok(Automorphism::identity_linear(dim)),
        "permutation" => {
            let Some(imgs) = v.get("images").and_then(Value::as_array) else {
                return input("permutation automorphism needs an \"images\" array");
            };
            let images = imgs.iter().map(|x| x.as_i64().ok_or_else(|| Error::Input(format!("bad index {x}")))).collect::<Result<Vec<_>>>()?;
            if images.len() != dim {
                return input(format!("permutation must have {dim} images"));
            }
            Automorphism::basis_permutation(images)
        }
        "matrix" => {
            let Some(rows) = v.get("rows").and_then(Value::as_array) else {
                return input("matrix automorphism needs \"rows\"");
            };
            let m = rows
                .iter()
                .map(|r| r.as_array().ok_or_else(|| Error::Input("matrix rows must be arrays".into()))?.iter().map(|c| scalar(field, c)).collect())
                .collect::<Result<Vec<Vec<Scalar>>>>()?;
            if m.len() != dim {
                return input(format!("matrix must be {dim}×{dim}"));
            }
            Automorphism::linear(m, field)
        }
        _ => input(format!("unknown automorphism {v}")),
    }
}

fn scalar(field: Field, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => field.parse(s),
        Value::Number(n) if n.is_i64() => Ok(field.int(n.as_i64().unwrap_or_default())),
        _ => input(format!("{v} is not an exact scalar")),
    }
}

/// A built instance, before gradings are attached.
pub struct Built {
    pub pairing: SharedPairing,
    pub family: Family,
    pub autos: AutSyntax,
}

/// One kind of instance, selected by the spec's `instance.kind`.
pub trait InstanceKind: Send + Sync {
    fn name(&self) -> &'static str;

    fn build(&self, spec: &Value, field: Field) -> Result<Built>;
}

fn group_of(spec: &Value) -> Result<Group> {
    match spec.get("group") {
        Some(g) => Group::from_json(g),
        None => input("instance needs a \"group\""),
    }
}

/// `⟨K(H), KH⟩` for a group `H`, possibly infinite.
pub struct GroupInstance;

impl InstanceKind for GroupInstance {
    fn name(&self) -> &'static str {
        "group"
    }

    fn build(&self, spec: &Value, field: Field) -> Result<Built> {
        let g = group_of(spec)?;
        Ok(Built {
            pairing: Arc::new(GroupPairing::new(g.clone(), field)),
            family: Family::Group(g.clone()),
            autos: AutSyntax::Group(g),
        })
    }
}

/// `⟨H*, H⟩` from structure constants (`"hopf"`) or a finite group algebra (`"group"`).
pub struct FiniteDimInstance;

impl InstanceKind for FiniteDimInstance {
    fn name(&self) -> &'static str {
        "finite-dim-hopf"
    }

    fn build(&self, spec: &Value, field: Field) -> Result<Built> {
        if let Some(h) = spec.get("hopf") {
            let b = FiniteDimHopf::from_json(h, field)?;
            let dim = b.names().len();
            return Ok(Built {
                pairing: Arc::new(FiniteDimPairing::new(b, None)),
                family: Family::FiniteDim,
                autos: AutSyntax::Linear { dim, field },
            });
        }
        let g = group_of(spec).map_err(|_| Error::Input("finite-dim-hopf needs \"hopf\" or \"group\"".into()))?;
        Ok(Built {
            pairing: Arc::new(FiniteDimPairing::group_algebra(&g, field)?),
            family: Family::GroupAlgebra(g.clone()),
            autos: AutSyntax::Group(g),
        })
    }
}

/// `⟨D(H)*, D(H)⟩` for a finite group `H`.
pub struct DrinfeldDoubleInstance;

impl InstanceKind for DrinfeldDoubleInstance {
    fn name(&self) -> &'static str {
        "drinfeld-double"
    }

    fn build(&self, spec: &Value, field: Field) -> Result<Built> {
        let g = group_of(spec)?;
        Ok(Built {
            pairing: Arc::new(DoublePairing::new(g.clone(), field)?),
            family: Family::DrinfeldDouble(g.clone()),
            autos: AutSyntax::Group(g),
        })
    }
}

pub fn instance_registry() -> Vec<Box<dyn InstanceKind>> {
    vec![Box::new(GroupInstance), Box::new(FiniteDimInstance), Box::new(DrinfeldDoubleInstance)]
}

fn parse_field(v: Option<&Value>) -> Result<Field> {
    match v {
        None => Ok(Field::Rational),
        Some(Value::String(s)) if s == "rational" => Ok(Field::Rational),
        Some(v) => match v.get("prime").and_then(Value::as_u64) {
            Some(p) => Field::prime(p),
            None => input(format!("scalar must be \"rational\" or {{\"prime\": p}}, got {v}")),
        },
    }
}

/// A parsed session spec.
pub struct Session {
    pub double: Double,
    pub family: Family,
    pub gradings: Vec<AutPair>,
    pub mode: Enumeration,
    pub autos: AutSyntax,
    pub export: Option<Value>,
}

impl Session {
    pub fn parse(text: &str) -> Result<Session> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Input(format!("spec is not valid JSON: {e}")))?;
        Session::from_json(&v)
    }

    pub fn from_json(v: &Value) -> Result<Session> {
        if !v.is_object() {
            return input("spec must be a JSON object");
        }
        let field = parse_field(v.get("scalar"))?;
        let Some(inst) = v.get("instance") else {
            return input("spec needs an \"instance\"");
        };
        let kind = inst.get("kind").and_then(Value::as_str).unwrap_or("");
        let registry = instance_registry();
        let Some(builder) = registry.iter().find(|k| k.name() == kind) else {
            let known: Vec<_> = registry.iter().map(|k| k.name()).collect();
            return input(format!("unknown instance kind {kind:?}; known: {}", known.join(", ")));
        };
        let built = builder.build(inst, field)?;

        let mutation = match v.get("mutation") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) => Some(Mutation::from_name(s).ok_or_else(|| Error::Input(format!("unknown mutation {s:?}")))?),
            Some(m) => return input(format!("mutation must be a name, got {m}")),
        };
        let double = Double::with_mutation(built.pairing, mutation);

        let gradings = match v.get("gradings") {
            None => {
                let id = built.autos.identity();
                vec![AutPair::new(id.clone(), id)]
            }
            Some(Value::String(s)) if s == "inner" => built.autos.inner_all()?,
            Some(Value::Array(ps)) => ps.iter().map(|p| built.autos.pair(p)).collect::<Result<_>>()?,
            Some(g) => return input(format!("gradings must be a list of pairs or \"inner\", got {g}")),
        };
        for p in &gradings {
            double.check_grading(p)?;
        }

        let mode = match v.get("enum") {
            None => Enumeration::Exhaustive { window: None },
            Some(e) => serde_json::from_value(e.clone()).map_err(|err| Error::Input(format!("bad enum: {err}")))?,
        };
        Ok(Session { double, family: built.family, gradings, mode, autos: built.autos, export: v.get("export").cloned() })
    }

    pub fn is_finite(&self) -> bool {
        let pr = self.double.pairing();
        pr.a().basis().is_some() && pr.b().basis().is_some()
    }

    /// The suite context; `Double` shares its memo tables with the session.
    pub fn context(&self) -> Result<Context> {
        let d = self.double.clone();
        Context::new(d, self.family.clone(), self.gradings.clone(), self.mode.clone())
    }

    /// Parses a crossed element: a list of terms `[a, b]` or `[coeff, a, b]`.
    pub fn element(&self, v: &Value) -> Result<CElem> {
        let pr = self.double.pairing();
        let Some(terms) = v.as_array() else {
            return input(format!("element {v} must be a list of terms"));
        };
        let mut x = CElem::zero();
        for t in terms {
            let (c, a, b) = match t.as_array().map(Vec::as_slice) {
                Some([a, b]) => (self.double.one(), a, b),
                Some([c, a, b]) => (scalar(pr.field(), c)?, a, b),
                _ => return input(format!("term {t} must be [a, b] or [coeff, a, b]")),
            };
            x.add_term((pr.a().parse_label(a)?, pr.b().parse_label(b)?), c);
        }
        Ok(x)
    }
}

/// Structure constants of one component and of the comultiplication into it.
struct Export {
    instance: String,
    grading: String,
    basis: Vec<String>,
    product: Vec<(usize, usize, usize, Scalar)>,
    comultiplication: Vec<ExportSplit>,
}

fn js<T: serde::Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

fn entries_json(es: &[(usize, usize, usize, Scalar)], indent: &str) -> String {
    if es.is_empty() {
        return "[]".into();
    }
    let rows: Vec<String> = es.iter().map(|e| format!("{indent}  {}", js(e))).collect();
    format!("[\n{}\n{indent}]", rows.join(",\n"))
}

impl Export {
    /// Pretty-printed, one tensor entry per line.
    fn to_json(&self) -> String {
        let splits: Vec<String> = self
            .comultiplication
            .iter()
            .map(|s| format!("    {{\n      \"split\": {},\n      \"entries\": {}\n    }}", js(&s.split), entries_json(&s.entries, "      ")))
            .collect();
        format!(
            "{{\n  \"instance\": {},\n  \"grading\": {},\n  \"basis\": {},\n  \"product\": {},\n  \"comultiplication\": [\n{}\n  ]\n}}",
            js(&self.instance),
            js(&self.grading),
            js(&self.basis),
            entries_json(&self.product, "  "),
            splits.join(",\n")
        )
    }
}

struct ExportSplit {
    split: (String, String),
    /// `Δ(x_i)(1⊗1) = Σ c x_j⊗x_k` as `[i, j, k, c]`.
    entries: Vec<(usize, usize, usize, Scalar)>,
}

/// Byte-stable JSON: basis in label order, entries sorted by index.
///
/// The grading is `export.grading` of the spec, else the first configured one;
/// splits are `export.splits`, else `(p, 1)` and `(1, p)`. Comultiplication
/// entries are the images under the unit cover.
pub fn export(session: &Session) -> Result<String> {
    if !session.is_finite() {
        return Err(Error::Infinite);
    }
    let d = &session.double;
    let pr = d.pairing();
    let cfg = session.export.as_ref();
    let p = match cfg.and_then(|c| c.get("grading")) {
        Some(g) => session.autos.pair(g)?,
        None => session.gradings[0].clone(),
    };
    d.check_grading(&p)?;
    let e = AutPair::unit_like(&p.first);
    let splits = match cfg.and_then(|c| c.get("splits")) {
        Some(Value::Array(s)) => s
            .iter()
            .map(|pq| match pq.as_array().map(Vec::as_slice) {
                Some([a, b]) => Ok((session.autos.pair(a)?, session.autos.pair(b)?)),
                _ => input(format!("split {pq} must be [p, q]")),
            })
            .collect::<Result<Vec<_>>>()?,
        Some(s) => return input(format!("export.splits must be a list, got {s}")),
        None if p.is_unit() => vec![(p.clone(), e)],
        None => vec![(p.clone(), e.clone()), (e, p.clone())],
    };

    let a = pr.a().basis().ok_or(Error::Infinite)?;
    let b = pr.b().basis().ok_or(Error::Infinite)?;
    let mut xs: Vec<CLabel> = a.iter().flat_map(|a| b.iter().map(move |b| (*a, *b))).collect();
    xs.sort();
    let index: BTreeMap<CLabel, usize> = xs.iter().enumerate().map(|(i, x)| (*x, i)).collect();
    let el = |x: &CLabel| Lc::basis(*x, d.one());

    let mut product = vec![];
    for (i, x) in xs.iter().enumerate() {
        for (j, y) in xs.iter().enumerate() {
            for (z, c) in d.mul(&p, &el(x), &el(y)).iter() {
                product.push((i, j, index[z], c.clone()));
            }
        }
    }
    let unit = d.unit().ok_or_else(|| Error::Input("instance has no unit".into()))?;
    let mut comultiplication = vec![];
    for (p1, p2) in splits {
        d.check_grading(&p1)?;
        d.check_grading(&p2)?;
        let mut entries = vec![];
        for (i, x) in xs.iter().enumerate() {
            for ((l, r), c) in d.delta_right(&p1, &p2, &el(x), &unit).iter() {
                entries.push((i, index[l], index[r], c.clone()));
            }
        }
        entries.sort_by_key(|t| (t.0, t.1, t.2));
        comultiplication.push(ExportSplit { split: (p1.to_string(), p2.to_string()), entries });
    }
    let out = Export {
        instance: pr.name(),
        grading: p.to_string(),
        basis: xs.iter().map(|x| d.render_label(x)).collect(),
        product,
        comultiplication,
    };
    Ok(out.to_json())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn parses_the_sampled_integer_spec() {
        let s = Session::parse(r#"{"instance":{"kind":"group","group":{"kind":"int"}},"gradings":[["identity","negation"]],"enum":{"mode":"sampled","count":200,"seed":42,"window":8}}"#).unwrap();
        assert!(!s.is_finite());
        assert_eq!(s.gradings.len(), 1);
        assert_eq!(s.mode, Enumeration::Sampled { count: 200, seed: 42, window: Some(8) });
        assert!(matches!(export(&s), Err(Error::Infinite)));
    }

    #[test]
    fn defaults_and_shorthands() {
        let s = Session::from_json(&json!({"instance": {"kind": "group", "group": {"kind": "symmetric", "degree": 3}}})).unwrap();
        assert_eq!(s.gradings.len(), 1);
        assert!(s.gradings[0].is_unit());
        assert_eq!(s.mode, Enumeration::Exhaustive { window: None });
        let all = Session::from_json(&json!({"instance": {"kind": "group", "group": {"kind": "symmetric", "degree": 3}}, "gradings": "inner"})).unwrap();
        assert_eq!(all.gradings.len(), 36);
    }

    #[test]
    fn scalar_modes() {
        let spec = |scalar: Value| json!({"scalar": scalar, "instance": {"kind": "group", "group": {"kind": "cyclic", "order": 2}}});
        let s = Session::from_json(&spec(json!({"prime": 7}))).unwrap();
        assert_eq!(s.double.pairing().field(), Field::Prime(7));
        assert!(Session::from_json(&spec(json!({"prime": 8}))).is_err());
        assert!(Session::from_json(&spec(json!("real"))).is_err());
    }

    #[test]
    fn diagnostics_name_the_problem() {
        let err = |v: Value| Session::from_json(&v).err().map(|e| e.to_string()).unwrap_or_default();
        assert!(err(json!({"instance": {"kind": "lie"}})).contains("unknown instance kind"));
        assert!(err(json!({"instance": {"kind": "group"}})).contains("group"));
        assert!(err(json!({"instance": {"kind": "group", "group": {"kind": "int"}}, "gradings": "inner"})).contains("finite group"));
        assert!(err(json!({"instance": {"kind": "group", "group": {"kind": "int"}}, "mutation": "gremlins"})).contains("unknown mutation"));
        assert!(err(json!({"instance": {"kind": "group", "group": {"kind": "int"}}, "enum": {"mode": "random"}})).contains("bad enum"));
        // negation is not available on a finite group
        assert!(!err(json!({"instance": {"kind": "group", "group": {"kind": "cyclic", "order": 3}}, "gradings": [["identity", "negation"]]})).is_empty());
    }

    #[test]
    fn linear_gradings_must_be_hopf_automorphisms() {
        let hopf = json!({"dim": 2, "basis": ["e", "u"], "unit": [1, 0], "mul": [[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1]],
                          "comul": [[0,0,0,1],[1,1,1,1]], "counit": [1, 1], "antipode": [[0,0,1],[1,1,1]]});
        let with = |g: Value| Session::from_json(&json!({"instance": {"kind": "finite-dim-hopf", "hopf": hopf}, "gradings": [[g, "identity"]]}));
        assert!(with(json!({"kind": "permutation", "images": [0, 1]})).is_ok());
        // swapping the unit with the other grouplike breaks the unit
        assert!(with(json!({"kind": "permutation", "images": [1, 0]})).is_err());
        assert!(with(json!({"kind": "matrix", "rows": [[1, 0], [0, 2]]})).is_err());
        assert!(with(json!({"kind": "matrix", "rows": [[1, 0]]})).is_err());
    }

    #[test]
    fn elements_accept_both_term_forms() {
        let s = Session::from_json(&json!({"instance": {"kind": "group", "group": {"kind": "int"}}})).unwrap();
        let x = s.element(&json!([[1, 2], ["1/2", 3, 4], [-1, 1, 2]])).unwrap();
        assert_eq!(s.double.render(&x), s.double.render(&s.element(&json!([["1/2", 3, 4]])).unwrap()));
        assert!(s.element(&json!([[1]])).is_err());
        assert!(s.element(&json!("δ_1⋈2")).is_err());
    }

    #[test]
    fn export_is_stable_and_finite() {
        let s = Session::from_json(&json!({"instance": {"kind": "group", "group": {"kind": "cyclic", "order": 2}}})).unwrap();
        let a = export(&s).unwrap();
        assert_eq!(a, export(&s).unwrap());
        let v: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["basis"].as_array().unwrap().len(), 4);
        assert_eq!(v["product"].as_array().unwrap().len(), 8);
        assert_eq!(v["comultiplication"].as_array().unwrap().len(), 1);
    }
}
