//! Hopf automorphisms of the right-hand algebra and the grading group of pairs.
//!
//! Composition applies the right factor first: `(φ∘ψ)(x) = φ(ψ(x))`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde_json::Value;

use crate::error::{input, Error, Result};
use crate::group::{Elt, Group};
use crate::linalg::{self, Matrix};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    /// Image of each element (finite groups) or of each basis index.
    Perm(Arc<[Elt]>),
    /// ℤ backend: `x ↦ x` or `x ↦ -x`.
    Sign(bool),
    /// Column `j` is the image of basis vector `j`.
    Linear(Arc<Matrix>),
}

/// How an automorphism was described; only used for display.
#[derive(Clone, Debug)]
pub enum AutKind {
    Identity,
    Inner(Elt),
    Map,
    Negation,
    Linear,
}

#[derive(Clone)]
pub struct Automorphism {
    repr: Repr,
    kind: AutKind,
    group: Option<Group>,
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr
    }
}
impl Eq for Automorphism {}
impl Hash for Automorphism {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.repr.hash(state)
    }
}
impl PartialOrd for Automorphism {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Automorphism {
    fn cmp(&self, other: &Self) -> Ordering {
        self.repr.cmp(&other.repr)
    }
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "ι");
        }
        match (&self.kind, &self.group) {
            (AutKind::Inner(g), Some(grp)) => write!(f, "inner({})", grp.name(*g)),
            (AutKind::Negation, _) => write!(f, "neg"),
            (_, _) => match &self.repr {
                Repr::Perm(p) => {
                    let imgs: Vec<String> = match &self.group {
                        Some(g) => g.generators().iter().map(|&x| format!("{}↦{}", g.name(x), g.name(p[x as usize]))).collect(),
                        None => p.iter().enumerate().map(|(i, y)| format!("{i}↦{y}")).collect(),
                    };
                    write!(f, "map[{}]", imgs.join(", "))
                }
                Repr::Sign(_) => write!(f, "neg"),
                Repr::Linear(m) => {
                    let cols: Vec<String> = (0..m.len())
                        .map(|j| m.iter().map(|r| r[j].to_string()).collect::<Vec<_>>().join(" "))
                        .collect();
                    write!(f, "linear[{}]", cols.join("; "))
                }
            },
        }
    }
}

fn identity_perm(n: usize) -> Repr {
    Repr::Perm((0..n as Elt).collect())
}

impl Automorphism {
    pub fn identity(group: &Group) -> Automorphism {
        let repr = match group {
            Group::Finite(g) => identity_perm(g.order()),
            Group::Integers => Repr::Sign(false),
        };
        Automorphism { repr, kind: AutKind::Identity, group: Some(group.clone()) }
    }

    /// `x ↦ g x g⁻¹`.
    pub fn inner(group: &Group, g: Elt) -> Result<Automorphism> {
        if !group.contains(g) {
            return input(format!("{g} is not an element of the group"));
        }
        let repr = match group {
            Group::Finite(_) => Repr::Perm(group.elements().unwrap().into_iter().map(|x| group.conj(g, x)).collect()),
            Group::Integers => Repr::Sign(false),
        };
        let mut a = Automorphism { repr, kind: AutKind::Inner(g), group: Some(group.clone()) };
        a.normalize_kind();
        Ok(a)
    }

    /// `x ↦ -x` on ℤ.
    pub fn negation(group: &Group) -> Result<Automorphism> {
        match group {
            Group::Integers => Ok(Automorphism { repr: Repr::Sign(true), kind: AutKind::Negation, group: Some(group.clone()) }),
            Group::Finite(_) => input("negation is only available on the integers"),
        }
    }

    /// Extends images of generators to a homomorphism and checks it is bijective.
    pub fn from_images(group: &Group, images: &[(Elt, Elt)]) -> Result<Automorphism> {
        match group {
            Group::Integers => {
                let mut sign = None;
                for &(x, y) in images {
                    if x == 0 {
                        if y != 0 {
                            return input("0 must map to 0");
                        }
                        continue;
                    }
                    let s = if y == x { false } else if y == -x { true } else {
                        return input(format!("{x} ↦ {y} does not extend to an automorphism of ℤ"));
                    };
                    if sign.replace(s).is_some_and(|t| t != s) {
                        return input("inconsistent images for an automorphism of ℤ");
                    }
                }
                let neg = sign.unwrap_or(false);
                let kind = if neg { AutKind::Negation } else { AutKind::Identity };
                Ok(Automorphism { repr: Repr::Sign(neg), kind, group: Some(group.clone()) })
            }
            Group::Finite(_) => {
                let n = group.order().unwrap();
                let e = group.identity();
                let mut img: Vec<Option<Elt>> = vec![None; n];
                img[e as usize] = Some(e);
                let mut queue = VecDeque::from([e]);
                for &(x, y) in images {
                    if !group.contains(x) || !group.contains(y) {
                        return input("automorphism image outside the group");
                    }
                }
                while let Some(x) = queue.pop_front() {
                    let fx = img[x as usize].unwrap();
                    for &(s, fs) in images {
                        let xs = group.mul(x, s);
                        let v = group.mul(fx, fs);
                        match img[xs as usize] {
                            None => {
                                img[xs as usize] = Some(v);
                                queue.push_back(xs);
                            }
                            Some(w) if w != v => {
                                return input(format!("images do not define a homomorphism (conflict at {})", group.name(xs)));
                            }
                            Some(_) => {}
                        }
                    }
                }
                let Some(p) = img.into_iter().collect::<Option<Vec<Elt>>>() else {
                    return input("automorphism images are not given on a generating set");
                };
                let mut seen = vec![false; n];
                for &y in &p {
                    if std::mem::replace(&mut seen[y as usize], true) {
                        return input("automorphism is not bijective");
                    }
                }
                for a in 0..n as Elt {
                    for b in 0..n as Elt {
                        if p[group.mul(a, b) as usize] != group.mul(p[a as usize], p[b as usize]) {
                            return input("automorphism is not a homomorphism");
                        }
                    }
                }
                let mut a = Automorphism { repr: Repr::Perm(p.into()), kind: AutKind::Map, group: Some(group.clone()) };
                a.normalize_kind();
                Ok(a)
            }
        }
    }

    /// A linear automorphism of a finite-dimensional algebra given by its matrix.
    /// Permutation matrices are stored as permutations of basis indices.
    pub fn linear(matrix: Matrix, field: Field) -> Result<Automorphism> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return input("automorphism matrix must be square");
        }
        if linalg::mat_inv(&matrix, field).is_none() {
            return input("automorphism matrix is singular");
        }
        let mut perm = Vec::with_capacity(n);
        for j in 0..n {
            let nz: Vec<usize> = (0..n).filter(|&i| !matrix[i][j].is_zero()).collect();
            match nz.as_slice() {
                [i] if matrix[*i][j].is_one() => perm.push(*i as Elt),
                _ => break,
            }
        }
        let repr = if perm.len() == n { Repr::Perm(perm.into()) } else { Repr::Linear(Arc::new(matrix)) };
        let mut a = Automorphism { repr, kind: AutKind::Linear, group: None };
        a.normalize_kind();
        Ok(a)
    }

    /// Permutation of basis indices `0..n`.
    pub fn basis_permutation(images: Vec<Elt>) -> Result<Automorphism> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &y in &images {
            if y < 0 || y as usize >= n || std::mem::replace(&mut seen[y as usize], true) {
                return input("not a permutation of the basis");
            }
        }
        let mut a = Automorphism { repr: Repr::Perm(images.into()), kind: AutKind::Linear, group: None };
        a.normalize_kind();
        Ok(a)
    }

    pub fn identity_linear(n: usize) -> Automorphism {
        Automorphism { repr: identity_perm(n), kind: AutKind::Identity, group: None }
    }

    fn normalize_kind(&mut self) {
        if self.is_identity() {
            self.kind = AutKind::Identity;
        }
    }

    pub fn is_identity(&self) -> bool {
        match &self.repr {
            Repr::Perm(p) => p.iter().enumerate().all(|(i, &x)| i as Elt == x),
            Repr::Sign(neg) => !neg,
            Repr::Linear(_) => false,
        }
    }

    pub fn kind(&self) -> &AutKind {
        &self.kind
    }

    pub fn group(&self) -> Option<&Group> {
        self.group.as_ref()
    }

    /// Image of a group element (or basis index for permutation-type automorphisms).
    pub fn apply(&self, g: Elt) -> Result<Elt> {
        match &self.repr {
            Repr::Perm(p) => p.get(usize::try_from(g).map_err(|_| Error::Input(format!("{g} is not in the backend")))?).copied().ok_or_else(|| Error::Input(format!("{g} is not in the backend"))),
            Repr::Sign(neg) => Ok(if *neg { -g } else { g }),
            Repr::Linear(_) => input("linear automorphism has no action on group elements"),
        }
    }

    /// Permutation data, when the automorphism permutes elements or basis indices.
    pub fn perm(&self) -> Option<&[Elt]> {
        match &self.repr {
            Repr::Perm(p) => Some(p),
            _ => None,
        }
    }

    pub fn sign(&self) -> Option<bool> {
        match &self.repr {
            Repr::Sign(s) => Some(*s),
            _ => None,
        }
    }

    pub fn matrix(&self) -> Option<&Matrix> {
        match &self.repr {
            Repr::Linear(m) => Some(m),
            _ => None,
        }
    }

    /// Dense matrix of a basis-level automorphism of an `n`-dimensional algebra.
    pub fn to_matrix(&self, n: usize, field: Field) -> Option<Matrix> {
        match &self.repr {
            Repr::Linear(m) => Some((**m).clone()),
            Repr::Perm(p) if p.len() == n => {
                let mut m = linalg::identity(n, field);
                for row in m.iter_mut() {
                    row.iter_mut().for_each(|x| *x = field.zero());
                }
                for (j, &i) in p.iter().enumerate() {
                    m[i as usize][j] = field.one();
                }
                Some(m)
            }
            _ => None,
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        let repr = match (&self.repr, &other.repr) {
            (Repr::Perm(a), Repr::Perm(b)) if a.len() == b.len() => Repr::Perm(b.iter().map(|&x| a[x as usize]).collect()),
            (Repr::Sign(a), Repr::Sign(b)) => Repr::Sign(a ^ b),
            (Repr::Linear(_), Repr::Perm(_)) | (Repr::Perm(_), Repr::Linear(_)) | (Repr::Linear(_), Repr::Linear(_)) => {
                let n = self.dim().unwrap();
                if other.dim() != Some(n) {
                    return Err(Error::BackendMismatch);
                }
                let f = self.field().or(other.field()).unwrap_or_default();
                let m = linalg::mat_mul(&self.to_matrix(n, f).unwrap(), &other.to_matrix(n, f).unwrap(), f);
                return Automorphism::linear(m, f);
            }
            _ => return Err(Error::BackendMismatch),
        };
        let kind = match (&self.kind, &other.kind, &self.group) {
            (AutKind::Inner(g), AutKind::Inner(h), Some(grp)) => AutKind::Inner(grp.mul(*g, *h)),
            (k, AutKind::Identity, _) => k.clone(),
            (AutKind::Identity, k, _) => k.clone(),
            (AutKind::Negation, AutKind::Negation, _) => AutKind::Identity,
            (AutKind::Linear, _, _) | (_, AutKind::Linear, _) => AutKind::Linear,
            _ => AutKind::Map,
        };
        let mut a = Automorphism { repr, kind, group: self.group.clone().or(other.group.clone()) };
        a.normalize_kind();
        Ok(a)
    }

    pub fn inverse(&self) -> Automorphism {
        let repr = match &self.repr {
            Repr::Perm(p) => {
                let mut q = vec![0; p.len()];
                for (i, &x) in p.iter().enumerate() {
                    q[x as usize] = i as Elt;
                }
                Repr::Perm(q.into())
            }
            Repr::Sign(s) => Repr::Sign(*s),
            Repr::Linear(m) => {
                let f = self.field().unwrap_or_default();
                let inv = linalg::mat_inv(m, f).expect("automorphism matrices are invertible");
                return Automorphism::linear(inv, f).expect("inverse is invertible");
            }
        };
        let kind = match (&self.kind, &self.group) {
            (AutKind::Inner(g), Some(grp)) => AutKind::Inner(grp.inv(*g)),
            (k, _) => k.clone(),
        };
        Automorphism { repr, kind, group: self.group.clone() }
    }

    fn dim(&self) -> Option<usize> {
        match &self.repr {
            Repr::Perm(p) => Some(p.len()),
            Repr::Linear(m) => Some(m.len()),
            Repr::Sign(_) => None,
        }
    }

    fn field(&self) -> Option<Field> {
        self.matrix().and_then(|m| m.iter().flatten().next().map(Scalar::field))
    }

    /// Reads `{"kind":"identity"|"inner","by":..|"map","images":{..}|"negation"}`.
    pub fn from_json(group: &Group, v: &Value) -> Result<Automorphism> {
        let kind = match v {
            Value::String(s) => s.as_str(),
            _ => v.get("kind").and_then(Value::as_str).unwrap_or(""),
        };
        match kind {
            "identity" | "id" => Ok(Automorphism::identity(group)),
            "negation" | "neg" => Automorphism::negation(group),
            "inner" => {
                let Some(by) = v.get("by") else {
                    return input("inner automorphism needs \"by\"");
                };
                Automorphism::inner(group, group.parse(by)?)
            }
            "map" => {
                let Some(imgs) = v.get("images").and_then(Value::as_object) else {
                    return input("map automorphism needs an \"images\" object");
                };
                let mut pairs = vec![];
                for (k, y) in imgs {
                    pairs.push((group.parse(&Value::String(k.clone()))?, group.parse(y)?));
                }
                Automorphism::from_images(group, &pairs)
            }
            _ => input(format!("unknown automorphism {v}")),
        }
    }
}

/// An element `(α, β)` of the grading group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AutPair {
    pub first: Automorphism,
    pub second: Automorphism,
}

impl fmt::Debug for AutPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AutPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

impl AutPair {
    pub fn new(first: Automorphism, second: Automorphism) -> AutPair {
        AutPair { first, second }
    }

    pub fn unit_like(a: &Automorphism) -> AutPair {
        let id = a.compose(&a.inverse()).expect("same backend");
        AutPair::new(id.clone(), id)
    }

    pub fn is_unit(&self) -> bool {
        self.first.is_identity() && self.second.is_identity()
    }

    /// `(α,β)*(γ,δ) = (αγ, δγ⁻¹βγ)`.
    pub fn mul(&self, other: &AutPair) -> Result<AutPair> {
        let (a, b) = (&self.first, &self.second);
        let (c, d) = (&other.first, &other.second);
        let first = a.compose(c)?;
        let second = d.compose(&c.inverse().compose(&b.compose(c)?)?)?;
        Ok(AutPair { first, second })
    }

    /// `(α,β)⁻¹ = (α⁻¹, αβ⁻¹α⁻¹)`.
    pub fn inv(&self) -> AutPair {
        let a = &self.first;
        let ai = a.inverse();
        let second = a.compose(&self.second.inverse()).and_then(|x| x.compose(&ai)).expect("same backend");
        AutPair { first: ai, second }
    }

    pub fn from_json(group: &Group, v: &Value) -> Result<AutPair> {
        match v.as_array().map(Vec::as_slice) {
            Some([a, b]) => Ok(AutPair::new(Automorphism::from_json(group, a)?, Automorphism::from_json(group, b)?)),
            _ => input(format!("grading {v} must be a pair [α, β]")),
        }
    }
}

/// All pairs of inner automorphisms of a finite group, deduplicated and sorted.
pub fn inner_pairs(group: &Group) -> Vec<AutPair> {
    let inner: BTreeMap<Automorphism, ()> = group
        .elements()
        .unwrap_or_else(|| vec![group.identity()])
        .into_iter()
        .map(|g| (Automorphism::inner(group, g).unwrap(), ()))
        .collect();
    let auts: Vec<Automorphism> = inner.into_keys().collect();
    let mut out = vec![];
    for a in &auts {
        for b in &auts {
            out.push(AutPair::new(a.clone(), b.clone()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inner_conjugation() {
        let s3 = Group::symmetric(3);
        let c = s3.parse_str("(123)").unwrap();
        let phi = Automorphism::inner(&s3, c).unwrap();
        assert_eq!(s3.name(phi.apply(s3.parse_str("(12)").unwrap()).unwrap()), "(23)");
        assert!(Automorphism::inner(&s3, s3.identity()).unwrap().is_identity());
        let z4 = Group::cyclic(4);
        assert!(Automorphism::inner(&z4, 3).unwrap().is_identity());
    }

    #[test]
    fn composition_rules() {
        let s3 = Group::symmetric(3);
        let g = s3.parse_str("(123)").unwrap();
        let h = s3.parse_str("(12)").unwrap();
        let ig = Automorphism::inner(&s3, g).unwrap();
        let ih = Automorphism::inner(&s3, h).unwrap();
        let comp = ig.compose(&ih).unwrap();
        assert_eq!(comp, Automorphism::inner(&s3, s3.mul(g, h)).unwrap());
        assert!(matches!(comp.kind(), AutKind::Inner(_)));
        let z = Group::Integers;
        let n = Automorphism::negation(&z).unwrap();
        assert!(n.compose(&n).unwrap().is_identity());
        assert_eq!(n.apply(5).unwrap(), -5);
        assert_eq!(ig.compose(&Automorphism::identity(&s3)).unwrap(), ig);
        assert_eq!(ig.compose(&n), Err(Error::BackendMismatch));
    }

    #[test]
    fn pair_law_examples() {
        let s3 = Group::symmetric(3);
        let id = Automorphism::identity(&s3);
        let a = Automorphism::inner(&s3, s3.parse_str("(12)").unwrap()).unwrap();
        let b = Automorphism::inner(&s3, s3.parse_str("(123)").unwrap()).unwrap();
        let c = Automorphism::inner(&s3, s3.parse_str("(13)").unwrap()).unwrap();
        let p = AutPair::new(a.clone(), id.clone());
        let q = AutPair::new(c.clone(), id.clone());
        assert_eq!(p.mul(&q).unwrap(), AutPair::new(a.compose(&c).unwrap(), id.clone()));
        let p = AutPair::new(id.clone(), b.clone());
        let q = AutPair::new(id.clone(), c.clone());
        assert_eq!(p.mul(&q).unwrap(), AutPair::new(id.clone(), c.compose(&b).unwrap()));
        let p = AutPair::new(a.clone(), b.clone());
        let explicit = AutPair::new(a.inverse(), a.compose(&b.inverse()).unwrap().compose(&a.inverse()).unwrap());
        assert!(p.mul(&explicit).unwrap().is_unit());
        assert!(AutPair::new(id.clone(), b.clone()).inv() == AutPair::new(id, b.inverse()));
    }

    #[test]
    fn generator_maps() {
        let s3 = Group::symmetric(3);
        let t = s3.parse_str("(12)").unwrap();
        let c = s3.parse_str("(123)").unwrap();
        let t2 = s3.parse_str("(23)").unwrap();
        let phi = Automorphism::from_images(&s3, &[(t, t2), (c, c)]).unwrap();
        let inner = Automorphism::inner(&s3, c).unwrap();
        assert_eq!(phi, inner);
        assert!(Automorphism::from_images(&s3, &[(t, c), (c, c)]).is_err());
        let z = Group::Integers;
        assert_eq!(Automorphism::from_images(&z, &[(1, -1)]).unwrap(), Automorphism::negation(&z).unwrap());
        assert!(Automorphism::from_images(&z, &[(1, 2)]).is_err());
    }
}
