//! Exact rationals with an inline small representation.
//!
//! Almost every coefficient met while computing with binomial and apolar
//! ideals fits in a machine word, so values are kept as a reduced `i64`
//! fraction and only promoted to a heap-allocated [`BigRational`] on
//! overflow. The representation is canonical: a value that fits the small
//! form is never stored as `Big`, so structural equality is value equality.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rational {
    /// `num / den` with `den > 0` and `gcd(num, den) = 1`.
    Small { num: i64, den: i64 },
    Big(Box<BigRational>),
}

impl Rational {
    pub fn zero() -> Self {
        Rational::Small { num: 0, den: 1 }
    }

    pub fn one() -> Self {
        Rational::Small { num: 1, den: 1 }
    }

    pub fn from_i64(n: i64) -> Self {
        Rational::Small { num: n, den: 1 }
    }

    /// Builds `num / den`; returns `None` when `den` is zero.
    pub fn from_bigints(num: BigInt, den: BigInt) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::from_big(BigRational::new(num, den)))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(num), Ok(den)) => Rational::Small { num, den },
            _ => Rational::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        // BigRational::new already reduced; try to shrink
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(num), Some(den)) => Rational::Small { num, den },
            _ => Rational::Big(Box::new(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small { num, den } => BigRational::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Rational::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small { num, .. } => BigInt::from(*num),
            Rational::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small { den, .. } => BigInt::from(*den),
            Rational::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small { num: 1, den: 1 })
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rational::Small { num, .. } => *num < 0,
            Rational::Big(b) => b.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small { den, .. } => *den == 1,
            Rational::Big(b) => b.is_integer(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) => {
                if b == d {
                    Self::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    let n = *a as i128 * *d as i128 + *c as i128 * *b as i128;
                    Self::from_i128(n, *b as i128 * *d as i128)
                }
            }
            _ => Self::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) => {
                if *a == 0 || *c == 0 {
                    return Self::zero();
                }
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Self::from_big(self.to_big() * other.to_big()),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Rational::Small { num, den } => Self::from_i128(-(*num as i128), *den as i128),
            Rational::Big(b) => Self::from_big(-(**b).clone()),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Rational::Small { num, den } => Self::from_i128(*den as i128, *num as i128),
            Rational::Big(b) => Self::from_big(b.recip()),
        })
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small { num, den: 1 } => write!(f, "{num}"),
            Rational::Small { num, den } => write!(f, "{num}/{den}"),
            Rational::Big(b) if b.denom().is_one() => write!(f, "{}", b.numer()),
            Rational::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rational::from_i64(i64::MAX);
        let sq = big.mul(&big);
        assert!(matches!(sq, Rational::Big(_)));
        let back = sq.mul(&big.inv().unwrap());
        assert_eq!(back, big);
        assert!(matches!(back, Rational::Small { .. }));
    }

    #[test]
    fn min_value_negation() {
        let m = Rational::from_i64(i64::MIN);
        let n = m.neg();
        assert!(matches!(n, Rational::Big(_)));
        assert_eq!(n.neg(), m);
    }

    #[test]
    fn lowest_terms() {
        let r = Rational::from_bigints(BigInt::from(6), BigInt::from(-4)).unwrap();
        assert_eq!(r, Rational::Small { num: -3, den: 2 });
        assert_eq!(r.to_string(), "-3/2");
        assert!(Rational::from_bigints(BigInt::from(1), BigInt::from(0)).is_none());
    }

    proptest! {
        #[test]
        fn matches_bigrational(a in any::<i64>(), b in 1i64.., c in any::<i64>(), d in 1i64..) {
            let x = Rational::from_bigints(a.into(), b.into()).unwrap();
            let y = Rational::from_bigints(c.into(), d.into()).unwrap();
            let bx = BigRational::new(a.into(), b.into());
            let by = BigRational::new(c.into(), d.into());
            prop_assert_eq!(x.add(&y).to_big(), &bx + &by);
            prop_assert_eq!(x.sub(&y).to_big(), &bx - &by);
            prop_assert_eq!(x.mul(&y).to_big(), &bx * &by);
            prop_assert_eq!(x.cmp(&y), bx.cmp(&by));
        }
    }
}
