//! Exact scalar arithmetic: arbitrary-precision rationals and prime fields.
//!
//! A [`Field`] is a lightweight context value; scalars do not know their
//! field, so all arithmetic goes through field methods. Prime-field elements
//! are kept canonical in `0..p`, which makes derived equality and ordering
//! meaningful and lets scalars serve as `BTreeMap` keys.

use crate::error::{Error, Result};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Largest admitted prime modulus. Products of two canonical representatives
/// must fit in u128 with room to spare; 2^31 keeps all intermediates tiny.
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Field {
    Rationals,
    Prime(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Rat(BigRational),
    /// Canonical representative in `0..p`.
    Mod(u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Extended Euclid on (a, p) with p prime and 0 < a < p; returns a^-1 mod p.
fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(p as i128) as u64
}

impl Field {
    pub fn rationals() -> Field {
        Field::Rationals
    }

    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 || p > MAX_PRIME || !is_prime(p) {
            return Err(Error::FieldTooSmall { needed: 2 });
        }
        Ok(Field::Prime(p))
    }

    /// Number of elements, `None` for the rationals.
    pub fn size(&self) -> Option<u64> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(*p),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::Prime(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::one()),
            Field::Prime(_) => Scalar::Mod(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Mod((n as i128).rem_euclid(*p as i128) as u64),
        }
    }

    pub fn from_u64(&self, n: u64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Mod(n % p),
        }
    }

    /// Fraction a/b; `b` must be nonzero in the field.
    pub fn from_fraction(&self, a: i64, b: i64) -> Result<Scalar> {
        let num = self.from_i64(a);
        let den = self.from_i64(b);
        let inv = self.inv(&den)?;
        Ok(self.mul(&num, &inv))
    }

    pub fn is_zero(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod(m) => *m == 0,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod((x + y) % p),
            _ => panic!("scalar/field kind mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod((x + p - y) % p),
            _ => panic!("scalar/field kind mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar/field kind mismatch"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (Field::Prime(p), Scalar::Mod(x)) => Scalar::Mod(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar/field kind mismatch"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::DimensionMismatch { expected: 1, got: 0, context: "inverse of zero" });
        }
        Ok(match (self, a) {
            (Field::Rationals, Scalar::Rat(x)) => Scalar::Rat(x.recip()),
            (Field::Prime(p), Scalar::Mod(x)) => Scalar::Mod(inv_mod(*x, *p)),
            _ => panic!("scalar/field kind mismatch"),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// All field elements in canonical order; only for finite fields.
    pub fn elements(&self) -> Result<Vec<Scalar>> {
        match self {
            Field::Rationals => Err(Error::BudgetExceeded {
                budget: 0,
                needed: u64::MAX,
                context: "enumerating an infinite field",
            }),
            Field::Prime(p) => Ok((0..*p).map(Scalar::Mod).collect()),
        }
    }

    /// Renders `a/b` for non-integral rationals, plain integer otherwise.
    pub fn render(&self, s: &Scalar) -> String {
        match s {
            Scalar::Rat(r) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    let mut out = r.numer().to_string();
                    out.push('/');
                    out.push_str(&r.denom().to_string());
                    out
                }
            }
            Scalar::Mod(m) => m.to_string(),
        }
    }

    /// Signed magnitude used by pivot selection to keep rational entries small.
    pub fn is_one(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod(m) => *m == 1,
        }
    }

    /// True when `s` is a canonical scalar of this field's kind.
    pub fn owns(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rationals, Scalar::Rat(_)) => true,
            (Field::Prime(p), Scalar::Mod(m)) => m < p,
            _ => false,
        }
    }
}

impl Scalar {
    /// Integer value when the scalar is a (small) integer; used by reports.
    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rat(r) if r.is_integer() => {
                let n = r.numer();
                if n.bits() <= 62 {
                    let mag: i64 = n.abs().try_into().ok()?;
                    Some(if n.is_negative() { -mag } else { mag })
                } else {
                    None
                }
            }
            Scalar::Mod(m) if *m <= i64::MAX as u64 => Some(*m as i64),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_filter() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(101).is_ok());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(91).is_err());
        assert!(Field::prime(0).is_err());
    }

    #[test]
    fn mod_arithmetic_canonical() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(-3);
        assert_eq!(a, Scalar::Mod(4));
        let b = f.from_i64(5);
        assert_eq!(f.add(&a, &b), Scalar::Mod(2));
        assert_eq!(f.mul(&a, &b), Scalar::Mod(6));
        assert_eq!(f.sub(&f.zero(), &b), Scalar::Mod(2));
        assert_eq!(f.neg(&b), Scalar::Mod(2));
    }

    #[test]
    fn inverses_round_trip() {
        let f7 = Field::prime(7).unwrap();
        for n in 1..7 {
            let s = f7.from_u64(n);
            let inv = f7.inv(&s).unwrap();
            assert!(f7.is_one(&f7.mul(&s, &inv)));
        }
        let q = Field::rationals();
        let s = q.from_fraction(3, 4).unwrap();
        let inv = q.inv(&s).unwrap();
        assert!(q.is_one(&q.mul(&s, &inv)));
        assert!(q.inv(&q.zero()).is_err());
    }

    #[test]
    fn rational_rendering() {
        let q = Field::rationals();
        assert_eq!(q.render(&q.from_i64(-5)), "-5");
        assert_eq!(q.render(&q.from_fraction(1, 2).unwrap()), "1/2");
        assert_eq!(q.render(&q.from_fraction(-2, 4).unwrap()), "-1/2");
    }

    #[test]
    fn element_enumeration() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.elements().unwrap(), alloc::vec![Scalar::Mod(0), Scalar::Mod(1), Scalar::Mod(2)]);
        assert!(Field::rationals().elements().is_err());
    }

    #[test]
    fn ownership_check() {
        let f7 = Field::prime(7).unwrap();
        assert!(f7.owns(&Scalar::Mod(6)));
        assert!(!f7.owns(&Scalar::Mod(7)));
        assert!(!f7.owns(&Field::rationals().zero()));
    }
}
