//! Finitely supported linear combinations over ordered basis labels.

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;

use crate::scalar::Scalar;

/// A basis label. Instances decide what the two coordinates mean
/// (a group element, an index, or a pair such as `δ_p⊗h`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct Label(pub i64, pub i64);

impl Label {
    pub fn one(x: i64) -> Label {
        Label(x, 0)
    }
}

/// Labels of `A ⋈ B`: an `A`-label and a `B`-label.
pub type CLabel = (Label, Label);

/// A sparse exact linear combination. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lc<L: Ord> {
    terms: BTreeMap<L, Scalar>,
}

pub type Elem = Lc<Label>;
pub type Tensor = Lc<(Label, Label)>;
pub type CElem = Lc<CLabel>;
pub type CTensor = Lc<(CLabel, CLabel)>;

impl<L: Ord> Default for Lc<L> {
    fn default() -> Self {
        Lc { terms: BTreeMap::new() }
    }
}

impl<L: Ord + Clone> Lc<L> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(label: L, coeff: Scalar) -> Self {
        let mut x = Self::zero();
        x.add_term(label, coeff);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, label: &L) -> Option<&Scalar> {
        self.terms.get(label)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, L, Scalar> {
        self.terms.iter()
    }

    /// Labels with nonzero coefficient, in increasing order.
    pub fn support(&self) -> Vec<L> {
        self.terms.keys().cloned().collect()
    }

    /// Adds `coeff·label`, dropping the entry if it cancels.
    pub fn add_term(&mut self, label: L, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(label) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let s = &*o.get() + &coeff;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (l, v) in &other.terms {
            let t = if c.is_one() { v.clone() } else { c * v };
            self.add_term(l.clone(), t);
        }
    }

    /// `x + c·y`.
    pub fn combine(x: &Self, c: &Scalar, y: &Self) -> Self {
        let mut out = x.clone();
        out.add_scaled(c, y);
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, v) in &other.terms {
            out.add_term(l.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, v) in &other.terms {
            out.add_term(l.clone(), -v);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Lc {
            terms: self.terms.iter().map(|(l, v)| (l.clone(), -v)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Lc {
            terms: self.terms.iter().map(|(l, v)| (l.clone(), c * v)).collect(),
        }
    }

    pub fn tensor<M: Ord + Clone>(&self, other: &Lc<M>) -> Lc<(L, M)> {
        let mut out = Lc::zero();
        for (l, v) in &self.terms {
            for (m, w) in &other.terms {
                out.add_term((l.clone(), m.clone()), v * w);
            }
        }
        out
    }

    /// Linear extension of a map defined on basis labels.
    pub fn lift<M: Ord + Clone>(&self, mut f: impl FnMut(&L) -> Lc<M>) -> Lc<M> {
        let mut out = Lc::zero();
        for (l, v) in &self.terms {
            out.add_scaled(v, &f(l));
        }
        out
    }

    /// Relabels basis elements through an injective-or-not map, summing collisions.
    pub fn map_labels<M: Ord + Clone>(&self, mut f: impl FnMut(&L) -> M) -> Lc<M> {
        let mut out = Lc::zero();
        for (l, v) in &self.terms {
            out.add_term(f(l), v.clone());
        }
        out
    }

    /// Linear functional from its values on basis labels.
    pub fn eval(&self, zero: Scalar, mut f: impl FnMut(&L) -> Scalar) -> Scalar {
        let mut acc = zero;
        for (l, v) in &self.terms {
            let x = f(l);
            if !x.is_zero() {
                acc = &acc + &(v * &x);
            }
        }
        acc
    }
}

impl<L: Ord + Clone> FromIterator<(L, Scalar)> for Lc<L> {
    fn from_iter<I: IntoIterator<Item = (L, Scalar)>>(iter: I) -> Self {
        let mut out = Lc::zero();
        for (l, c) in iter {
            out.add_term(l, c);
        }
        out
    }
}

impl<'a, L: Ord> IntoIterator for &'a Lc<L> {
    type Item = (&'a L, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, L, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<L: Ord + fmt::Debug> fmt::Debug for Lc<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{v}·{l:?}")?;
        }
        Ok(())
    }
}

/// Renders a combination with a label formatter, e.g. `2·δ_3 + -1·δ_5`.
pub fn render<L: Ord + Clone>(x: &Lc<L>, mut fmt_label: impl FnMut(&L) -> String) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::with_capacity(x.len());
    for (l, v) in x {
        let s = fmt_label(l);
        if v.is_one() {
            parts.push(s);
        } else {
            parts.push(format!("{v}·{s}"));
        }
    }
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn q(s: &str) -> Scalar {
        Field::Rational.parse(s).unwrap()
    }

    #[test]
    fn combine_examples() {
        let a = Label::one(0);
        let b = Label::one(1);
        let x = Lc::basis(a, q("2"));
        let y = Lc::basis(a, q("3"));
        assert_eq!(Lc::combine(&x, &q("1"), &y), Lc::basis(a, q("5")));
        let d = Lc::basis(a, q("1"));
        assert!(Lc::combine(&d, &q("-1"), &d).is_zero());
        let z = Lc::combine(&d, &q("1/2"), &Lc::basis(b, q("1")));
        assert_eq!(z.coeff(&b), Some(&q("1/2")));
        assert_eq!(z.len(), 2);
    }

    #[test]
    fn tensor_examples() {
        let (a, b, c) = (Label::one(0), Label::one(1), Label::one(2));
        let one = q("1");
        let t = Lc::basis(a, one.clone()).tensor(&Lc::basis(b, one.clone()));
        assert_eq!(t.support(), vec![(a, b)]);
        let s = Lc::basis(a, one.clone()).add(&Lc::basis(b, one.clone()));
        let t = s.tensor(&Lc::basis(c, one.clone()));
        assert_eq!(t.support(), vec![(a, c), (b, c)]);
        assert!(Elem::zero().tensor(&s).is_zero());
    }

    #[test]
    fn support_is_ordered() {
        let one = q("1");
        let x = Lc::basis(Label::one(2), one.clone()).add(&Lc::basis(Label::one(1), one));
        assert_eq!(x.support(), vec![Label::one(1), Label::one(2)]);
        assert!(Elem::zero().support().is_empty());
    }
}
