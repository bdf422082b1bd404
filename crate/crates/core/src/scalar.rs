//! Exact scalars: rationals of arbitrary size, or residues modulo a prime.
//!
//! Rationals keep an `i64` fast path and spill into big integers on overflow.
//! The representation is canonical, so derived equality is value equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::{BigRational, Ratio};
use num::traits::{CheckedAdd, CheckedMul, CheckedSub, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field of a session.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::Input(format!("{p} is not a supported prime modulus")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        match *self {
            Field::Rational => Scalar(Repr::Small(Ratio::from_integer(n))),
            Field::Prime(p) => Scalar(Repr::Mod {
                v: n.rem_euclid(p as i64) as u64,
                p,
            }),
        }
    }

    /// Parses `"n"` or `"n/d"`.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::Input(format!("malformed rational {s:?}"));
        let (n, d) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n = BigInt::from_str(n).map_err(|_| bad())?;
        let d = BigInt::from_str(d).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        if let Field::Prime(p) = self {
            if big_mod(&d, *p) == 0 {
                return Err(Error::Input(format!("{s:?} has a denominator divisible by {p}")));
            }
        }
        let q = Scalar::from_big(BigRational::new(n, d));
        Ok(self.coerce(&q))
    }

    /// Maps a rational scalar into this field.
    pub fn coerce(&self, x: &Scalar) -> Scalar {
        match (*self, &x.0) {
            (Field::Rational, _) => x.clone(),
            (Field::Prime(p), Repr::Mod { .. }) => {
                debug_assert_eq!(x.modulus(), Some(p));
                x.clone()
            }
            (Field::Prime(p), _) => {
                let q = x.to_big();
                let n = big_mod(q.numer(), p);
                let d = big_mod(q.denom(), p);
                Scalar(Repr::Mod {
                    v: mul_mod(n, inv_mod(d, p), p),
                    p,
                })
            }
        }
    }
}

fn big_mod(n: &BigInt, p: u64) -> u64 {
    let r = n % BigInt::from(p);
    let r = if r < BigInt::zero() { r + BigInt::from(p) } else { r };
    r.to_u64().expect("residue fits")
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "division by zero in F_{p}");
    let mut r = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    r
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Small(Ratio<i64>),
    Big(BigRational),
    Mod { v: u64, p: u64 },
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(Repr);

impl Scalar {
    fn from_big(q: BigRational) -> Scalar {
        match (q.numer().to_i64(), q.denom().to_i64()) {
            // i64::MIN is excluded so negation never overflows in the fast path
            (Some(n), Some(d)) if n != i64::MIN => Scalar(Repr::Small(Ratio::new_raw(n, d))),
            _ => Scalar(Repr::Big(q)),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Repr::Big(q) => q.clone(),
            Repr::Mod { .. } => panic!("prime-field scalar used as a rational"),
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            Repr::Mod { p, .. } => Some(p),
            _ => None,
        }
    }

    pub fn field(&self) -> Field {
        match self.0 {
            Repr::Mod { p, .. } => Field::Prime(p),
            _ => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_zero(),
            Repr::Big(q) => q.is_zero(),
            Repr::Mod { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_one(),
            Repr::Big(q) => q.is_one(),
            Repr::Mod { v, .. } => *v == 1,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(r) if *r.numer() != i64::MIN => Scalar(Repr::Small(r.recip())),
            Repr::Mod { v, p } => Scalar(Repr::Mod { v: inv_mod(*v, *p), p: *p }),
            _ => Scalar::from_big(self.to_big().recip()),
        })
    }

    /// Brings two scalars into a common field; a rational meeting a residue is reduced.
    fn align<'a>(&'a self, other: &'a Scalar) -> (std::borrow::Cow<'a, Scalar>, std::borrow::Cow<'a, Scalar>) {
        use std::borrow::Cow;
        match (&self.0, &other.0) {
            (Repr::Mod { p, .. }, Repr::Small(_) | Repr::Big(_)) => {
                (Cow::Borrowed(self), Cow::Owned(Field::Prime(*p).coerce(other)))
            }
            (Repr::Small(_) | Repr::Big(_), Repr::Mod { p, .. }) => {
                (Cow::Owned(Field::Prime(*p).coerce(self)), Cow::Borrowed(other))
            }
            _ => (Cow::Borrowed(self), Cow::Borrowed(other)),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Small(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Repr::Big(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Repr::Big(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Repr::Mod { v, .. } => write!(f, "{v}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let (a, b) = self.align(rhs);
        match (&a.0, &b.0) {
            (Repr::Small(x), Repr::Small(y)) => match x.checked_add(y) {
                Some(z) if *z.numer() != i64::MIN => Scalar(Repr::Small(z)),
                _ => Scalar::from_big(a.to_big() + b.to_big()),
            },
            (Repr::Mod { v: x, p }, Repr::Mod { v: y, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar(Repr::Mod { v: (x + y) % p, p: *p })
            }
            _ => Scalar::from_big(a.to_big() + b.to_big()),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let (a, b) = self.align(rhs);
        match (&a.0, &b.0) {
            (Repr::Small(x), Repr::Small(y)) => match x.checked_sub(y) {
                Some(z) if *z.numer() != i64::MIN => Scalar(Repr::Small(z)),
                _ => Scalar::from_big(a.to_big() - b.to_big()),
            },
            (Repr::Mod { .. }, Repr::Mod { .. }) => &*a + &(-&*b),
            _ => Scalar::from_big(a.to_big() - b.to_big()),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let (a, b) = self.align(rhs);
        match (&a.0, &b.0) {
            (Repr::Small(x), Repr::Small(y)) => match x.checked_mul(y) {
                Some(z) if *z.numer() != i64::MIN => Scalar(Repr::Small(z)),
                _ => Scalar::from_big(a.to_big() * b.to_big()),
            },
            (Repr::Mod { v: x, p }, Repr::Mod { v: y, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar(Repr::Mod { v: mul_mod(*x, *y, *p), p: *p })
            }
            _ => Scalar::from_big(a.to_big() * b.to_big()),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Small(r) => Scalar(Repr::Small(-r)),
            Repr::Big(q) => Scalar::from_big(-q),
            Repr::Mod { v, p } => Scalar(Repr::Mod { v: (p - v) % p, p: *p }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_canonical_form() {
        let q = Field::Rational;
        assert_eq!(q.parse("2/4").unwrap(), q.parse("1/2").unwrap());
        assert_eq!(q.parse("3/-6").unwrap().to_string(), "-1/2");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }

    #[test]
    fn overflow_spills_to_big() {
        let q = Field::Rational;
        let big = q.int(i64::MAX);
        let s = &big + &big;
        assert_eq!(s.to_string(), "18446744073709551614");
        let back = &s - &big;
        assert_eq!(back, big);
        let sq = &big * &big;
        assert_eq!(&sq * &big.inv().unwrap(), big);
    }

    #[test]
    fn prime_field() {
        let f = Field::prime(7).unwrap();
        let half = f.parse("1/2").unwrap();
        assert_eq!(half.to_string(), "4");
        assert_eq!(&half * &f.int(2), f.one());
        assert_eq!(-&f.int(3), f.int(4));
        assert!(Field::prime(8).is_err());
    }

    #[test]
    fn rational_meets_residue() {
        let f = Field::prime(5);
        let f = f.unwrap();
        let r = Field::Rational.parse("1/3").unwrap();
        assert_eq!(&f.int(3) * &r, f.one());
    }
}
