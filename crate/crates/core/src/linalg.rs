//! Exact elimination: ranks of sparse vector families and dense matrix inverses.

use std::collections::BTreeMap;

use crate::linear::Lc;
use crate::scalar::{Field, Scalar};

/// Incremental row echelon basis of a subspace spanned by sparse vectors.
pub struct Echelon<C: Ord + Clone> {
    pivots: BTreeMap<C, Lc<C>>,
}

impl<C: Ord + Clone> Default for Echelon<C> {
    fn default() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }
}

impl<C: Ord + Clone> Echelon<C> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, v: &Lc<C>) -> Lc<C> {
        let mut row = v.clone();
        let mut done: Lc<C> = Lc::zero();
        // repeatedly clear the smallest label that has a pivot
        while let Some((lead, c)) = row.iter().next().map(|(l, c)| (l.clone(), c.clone())) {
            match self.pivots.get(&lead) {
                Some(p) => row.add_scaled(&-&c, p),
                None => {
                    done.add_term(lead.clone(), c.clone());
                    row.add_term(lead, -&c);
                }
            }
        }
        done
    }

    /// Inserts a vector; returns whether it enlarged the span.
    pub fn insert(&mut self, v: &Lc<C>) -> bool {
        let r = self.reduce(v);
        let Some((lead, c)) = r.iter().next().map(|(l, c)| (l.clone(), c.clone())) else {
            return false;
        };
        let inv = c.inv().expect("nonzero pivot");
        let r = r.scale(&inv);
        // keep the basis fully reduced so `reduce` only needs one pass per label
        let ids: Vec<C> = self.pivots.keys().cloned().collect();
        for id in ids {
            let row = self.pivots.get_mut(&id).unwrap();
            if let Some(k) = row.coeff(&lead).cloned() {
                row.add_scaled(&-&k, &r);
            }
        }
        self.pivots.insert(lead, r);
        true
    }

    pub fn contains(&self, v: &Lc<C>) -> bool {
        self.reduce(v).is_zero()
    }
}

pub fn rank<C: Ord + Clone>(vectors: impl IntoIterator<Item = Lc<C>>) -> usize {
    let mut e = Echelon::default();
    for v in vectors {
        e.insert(&v);
    }
    e.rank()
}

/// Dense square matrix, `m[i][j]` is row `i`, column `j`.
pub type Matrix = Vec<Vec<Scalar>>;

pub fn identity(n: usize, f: Field) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { f.one() } else { f.zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix, f: Field) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![f.zero(); m]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(aik * &b[k][j]);
                }
            }
        }
    }
    out
}

/// Gauss-Jordan inverse; `None` if singular.
pub fn mat_inv(a: &Matrix, f: Field) -> Option<Matrix> {
    let n = a.len();
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .zip(identity(n, f))
        .map(|(r, e)| r.iter().cloned().chain(e).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].inv()?;
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let k = m[r][col].clone();
                for c in 0..2 * n {
                    let t = &k * &m[col][c];
                    m[r][c] = &m[r][c] - &t;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::Label;

    #[test]
    fn rank_of_dependent_family() {
        let f = Field::Rational;
        let v = |xs: &[(i64, i64)]| -> Lc<Label> {
            xs.iter().map(|&(l, c)| (Label::one(l), f.int(c))).collect()
        };
        let fam = vec![v(&[(0, 1), (1, 2)]), v(&[(1, 1), (2, 1)]), v(&[(0, 1), (1, 4), (2, 2)])];
        assert_eq!(rank(fam), 2);
        let mut e = Echelon::default();
        e.insert(&v(&[(0, 1), (1, 2)]));
        assert!(e.contains(&v(&[(0, 2), (1, 4)])));
        assert!(!e.contains(&v(&[(0, 1)])));
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Field::Rational;
        let a: Matrix = vec![vec![f.int(2), f.int(1)], vec![f.int(1), f.int(1)]];
        let b = mat_inv(&a, f).unwrap();
        assert_eq!(mat_mul(&a, &b, f), identity(2, f));
        let s: Matrix = vec![vec![f.int(1), f.int(2)], vec![f.int(2), f.int(4)]];
        assert!(mat_inv(&s, f).is_none());
    }
}
