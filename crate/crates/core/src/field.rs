//! Coefficient fields: the rationals and prime fields GF(p).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Default prime for fast exploratory runs.
pub const DEFAULT_PRIME: u32 = 32003;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u32),
}

/// An element of a [`Field`]. Rationals are kept in lowest terms and
/// residues in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rational),
    Fp { value: u32, modulus: u32 },
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rational::from_i64(n)),
            Field::Prime(p) => Scalar::Fp { value: n.rem_euclid(*p as i64) as u32, modulus: *p },
        }
    }

    fn reduce_bigint(p: u32, n: &BigInt) -> u32 {
        let r = n % BigInt::from(p);
        let r = r.to_i64().expect("residue fits");
        r.rem_euclid(p as i64) as u32
    }

    /// The image of `num / den` in this field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Field::Rational => Ok(Scalar::Q(
                Rational::from_bigints(num.clone(), den.clone()).ok_or(Error::DivisionByZero)?,
            )),
            Field::Prime(p) => {
                let n = Scalar::Fp { value: Self::reduce_bigint(*p, num), modulus: *p };
                let d = Scalar::Fp { value: Self::reduce_bigint(*p, den), modulus: *p };
                Ok(n.mul(&d.inv().ok_or(Error::DivisionByZero)?))
            }
        }
    }

    /// Maps a scalar of any field into this one (rationals reduce mod p).
    pub fn convert(&self, s: &Scalar) -> Result<Scalar> {
        match (self, s) {
            (Field::Rational, Scalar::Q(_)) => Ok(s.clone()),
            (Field::Prime(p), Scalar::Fp { modulus, .. }) if p == modulus => Ok(s.clone()),
            (_, Scalar::Q(r)) => self.from_ratio(&r.numer(), &r.denom()),
            (Field::Rational, Scalar::Fp { .. }) | (Field::Prime(_), Scalar::Fp { .. }) => {
                Err(Error::Invalid(format!("cannot map {s} into {self}")))
            }
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "QQ" || t == "Q" {
            return Ok(Field::Rational);
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix("ZZ/"))
            .ok_or_else(|| Error::Invalid(format!("unknown field `{t}` (expected QQ or GF(p))")))?;
        let p: u64 = inner
            .trim()
            .parse()
            .map_err(|_| Error::Invalid(format!("bad prime in `{t}`")))?;
        Field::prime(p)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::Fp { value: a, modulus }, Scalar::Fp { value: b, modulus: m2 }) => {
                debug_assert_eq!(modulus, m2);
                let s = (*a as u64 + *b as u64) % *modulus as u64;
                Scalar::Fp { value: s as u32, modulus: *modulus }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::Fp { value, modulus } => {
                Scalar::Fp { value: if *value == 0 { 0 } else { modulus - value }, modulus: *modulus }
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::Fp { value: a, modulus }, Scalar::Fp { value: b, modulus: m2 }) => {
                debug_assert_eq!(modulus, m2);
                let s = (*a as u64 * *b as u64) % *modulus as u64;
                Scalar::Fp { value: s as u32, modulus: *modulus }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        match self {
            Scalar::Q(a) => a.inv().map(Scalar::Q),
            Scalar::Fp { value, modulus } => {
                if *value == 0 {
                    None
                } else {
                    let v = mod_pow(*value as u64, *modulus as u64 - 2, *modulus as u64);
                    Some(Scalar::Fp { value: v as u32, modulus: *modulus })
                }
            }
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv().ok_or(Error::DivisionByZero)?))
    }

    /// True when the printed form should carry a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_negative(),
            Scalar::Fp { .. } => false,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Q(r) => Some(r),
            Scalar::Fp { .. } => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
