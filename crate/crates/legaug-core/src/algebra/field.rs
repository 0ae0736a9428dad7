//! Exact field arithmetic: the rationals and prime fields `F_p`.

use alloc::format;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Which field augmentations take values in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    /// `F_p`; construct through [`FieldSpec::prime`] to have `p` checked.
    Prime(u64),
}

/// A value in a [`FieldSpec`]: a reduced fraction or a canonical residue.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldValue {
    Rational(BigRational),
    Mod { value: u64, p: u64 },
}

/// Deterministic primality test for `u64` by trial division.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
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

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

impl FieldSpec {
    /// `F_p`, rejecting composite `p`.
    pub fn prime(p: u64) -> Result<Self, Error> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// Parses `Q` or `Fp:<p>`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let t = text.trim();
        if t == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let p = t
            .strip_prefix("Fp:")
            .and_then(|s| s.parse::<u64>().ok())
            .ok_or_else(|| Error::Syntax { line: 1, message: format!("bad field `{t}`, expected Q or Fp:<p>") })?;
        FieldSpec::prime(p)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    pub fn zero(&self) -> FieldValue {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldValue {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldValue {
        match *self {
            FieldSpec::Rationals => FieldValue::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => FieldValue::Mod { value: v.rem_euclid(p as i64) as u64, p },
        }
    }

    /// Maps an exact rational into the field; fails when the denominator
    /// vanishes mod `p`.
    pub fn from_rational(&self, q: &BigRational) -> Option<FieldValue> {
        match *self {
            FieldSpec::Rationals => Some(FieldValue::Rational(q.clone())),
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(p);
                let n = ((q.numer() % &pb) + &pb) % &pb;
                let d = ((q.denom() % &pb) + &pb) % &pb;
                let n = n.to_u64()?;
                let d = d.to_u64()?;
                if d == 0 {
                    return None;
                }
                Some(FieldValue::Mod { value: mul_mod(n, pow_mod(d, p - 2, p), p), p })
            }
        }
    }

    /// Parses `a`, `-a` or `a/b` into the field.
    pub fn parse_value(&self, text: &str) -> Result<FieldValue, Error> {
        let t = text.trim();
        let bad = || Error::Syntax { line: 1, message: format!("bad field value `{t}`") };
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim().parse::<BigInt>().map_err(|_| bad())?, d.trim().parse::<BigInt>().map_err(|_| bad())?),
            None => (t.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        if d.is_zero() {
            return Err(bad());
        }
        self.from_rational(&BigRational::new(n, d)).ok_or_else(bad)
    }

    /// Every element of a finite field, in canonical order `0..p`.
    pub fn elements(&self) -> Option<impl Iterator<Item = FieldValue>> {
        match *self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some((0..p).map(move |value| FieldValue::Mod { value, p })),
        }
    }
}

impl FieldValue {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldValue::Rational(q) => q.is_zero(),
            FieldValue::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldValue::Rational(q) => q.is_one(),
            FieldValue::Mod { value, .. } => *value == 1,
        }
    }

    pub fn spec(&self) -> FieldSpec {
        match self {
            FieldValue::Rational(_) => FieldSpec::Rationals,
            FieldValue::Mod { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn add(&self, other: &FieldValue) -> FieldValue {
        match (self, other) {
            (FieldValue::Rational(a), FieldValue::Rational(b)) => FieldValue::Rational(a + b),
            (FieldValue::Mod { value: a, p }, FieldValue::Mod { value: b, .. }) => {
                FieldValue::Mod { value: ((*a as u128 + *b as u128) % *p as u128) as u64, p: *p }
            }
            _ => panic!("field mismatch"),
        }
    }

    pub fn neg(&self) -> FieldValue {
        match self {
            FieldValue::Rational(a) => FieldValue::Rational(-a),
            FieldValue::Mod { value, p } => FieldValue::Mod { value: (p - value) % p, p: *p },
        }
    }

    pub fn sub(&self, other: &FieldValue) -> FieldValue {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldValue) -> FieldValue {
        match (self, other) {
            (FieldValue::Rational(a), FieldValue::Rational(b)) => FieldValue::Rational(a * b),
            (FieldValue::Mod { value: a, p }, FieldValue::Mod { value: b, .. }) => {
                FieldValue::Mod { value: mul_mod(*a, *b, *p), p: *p }
            }
            _ => panic!("field mismatch"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<FieldValue> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldValue::Rational(a) => FieldValue::Rational(a.recip()),
            FieldValue::Mod { value, p } => FieldValue::Mod { value: pow_mod(*value, p - 2, *p), p: *p },
        })
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, e: i64) -> Option<FieldValue> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.spec().one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Some(acc)
    }

    pub fn scale(&self, k: i64) -> FieldValue {
        self.mul(&self.spec().from_i64(k))
    }

    /// The value as an integer, if it is one (rationals) or its canonical
    /// residue (prime fields).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            FieldValue::Rational(q) if q.is_integer() => q.numer().to_i64(),
            FieldValue::Rational(_) => None,
            FieldValue::Mod { value, .. } => i64::try_from(*value).ok(),
        }
    }

    pub fn is_negative_rational(&self) -> bool {
        matches!(self, FieldValue::Rational(q) if q.is_negative())
    }
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldValue::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldValue::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// Shorthand for building exact rationals in tests and fixtures.
pub fn rational(n: i64, d: i64) -> FieldValue {
    FieldValue::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

