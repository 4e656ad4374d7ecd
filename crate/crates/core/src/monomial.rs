//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u16; 16]>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, n), degree: 0 }
    }

    pub fn new(exps: impl Into<Exponents>) -> Self {
        let exps = exps.into();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn from_slice(exps: &[u16]) -> Self {
        Self::new(Exponents::from_slice(exps))
    }

    pub fn variable(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Self) -> Self {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect::<Exponents>())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect::<Exponents>())
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Bitmask of variables in the support (first 64 variables).
    pub fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.exps.iter().enumerate().take(64) {
            if e > 0 {
                m |= 1 << i;
            }
        }
        m
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Appends a block of zero exponents (new trailing variables).
    pub fn extend_zeros(&self, extra: usize) -> Self {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat_n(0, extra));
        Monomial { exps, degree: self.degree }
    }

    /// Reindexes into a ring of `n` variables: variable `i` goes to `map[i]`.
    pub fn remap(&self, map: &[usize], n: usize) -> Self {
        let mut exps: Exponents = SmallVec::from_elem(0, n);
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                exps[map[i]] += e;
            }
        }
        Monomial { exps, degree: self.degree }
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{e}", names[i])),
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Grevlex with the declaration order, without allocating an order value.
pub fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    let c = a.degree.cmp(&b.degree);
    if c != Ordering::Equal {
        return c;
    }
    for (ea, eb) in a.exps.iter().zip(&b.exps).rev() {
        if ea != eb {
            return eb.cmp(ea);
        }
    }
    Ordering::Equal
}

/// Enumerates all monomials of degree `d` in `n` variables, descending
/// in lex order with the declaration order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i == n - 1 {
            cur[i] = left as u16;
            out.push(Monomial::from_slice(cur));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Degree reverse lexicographic; `ranking[0]` is the largest variable.
    Revlex { ranking: Vec<usize> },
    Lex { ranking: Vec<usize> },
    /// Compares the degree in `front` first, then `inner` on the whole monomial.
    Block { front: Vec<usize>, inner: Box<MonomialOrder> },
}

fn check_permutation(ranking: &[usize], n: usize) -> Result<()> {
    if ranking.len() != n {
        return Err(Error::Arity { expected: n, found: ranking.len() });
    }
    let mut seen = vec![false; n];
    for &i in ranking {
        if i >= n || seen[i] {
            return Err(Error::InvalidOrder(format!("{ranking:?} is not a permutation of 0..{n}")));
        }
        seen[i] = true;
    }
    Ok(())
}

impl MonomialOrder {
    pub fn revlex(ranking: Vec<usize>) -> Result<Self> {
        check_permutation(&ranking, ranking.len())?;
        Ok(MonomialOrder::Revlex { ranking })
    }

    pub fn lex(ranking: Vec<usize>) -> Result<Self> {
        check_permutation(&ranking, ranking.len())?;
        Ok(MonomialOrder::Lex { ranking })
    }

    pub fn block(front: Vec<usize>, inner: MonomialOrder) -> Result<Self> {
        let n = inner.arity();
        let mut seen = vec![false; n];
        for &i in &front {
            if i >= n || seen[i] {
                return Err(Error::InvalidOrder(format!("bad block {front:?}")));
            }
            seen[i] = true;
        }
        Ok(MonomialOrder::Block { front, inner: Box::new(inner) })
    }

    /// Grevlex with the declaration order `x0 > x1 > ...`.
    pub fn grevlex(n: usize) -> Self {
        MonomialOrder::Revlex { ranking: (0..n).collect() }
    }

    pub fn arity(&self) -> usize {
        match self {
            MonomialOrder::Revlex { ranking } | MonomialOrder::Lex { ranking } => ranking.len(),
            MonomialOrder::Block { inner, .. } => inner.arity(),
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        match self {
            MonomialOrder::Revlex { ranking } | MonomialOrder::Lex { ranking } => check_permutation(ranking, n),
            MonomialOrder::Block { front, inner } => {
                if front.iter().any(|&i| i >= n) {
                    return Err(Error::InvalidOrder(format!("block {front:?} out of range")));
                }
                inner.validate(n)
            }
        }
    }

    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::Revlex { .. })
    }

    /// Total comparison with an arity check.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        let n = self.arity();
        for m in [a, b] {
            if m.arity() != n {
                return Err(Error::Arity { expected: n, found: m.arity() });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Comparison without arity checks; callers guarantee compatibility.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Revlex { ranking } => {
                let c = a.degree.cmp(&b.degree);
                if c != Ordering::Equal {
                    return c;
                }
                for &v in ranking.iter().rev() {
                    let (ea, eb) = (a.exps[v], b.exps[v]);
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex { ranking } => {
                for &v in ranking {
                    let (ea, eb) = (a.exps[v], b.exps[v]);
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block { front, inner } => {
                let da: u32 = front.iter().map(|&v| a.exps[v] as u32).sum();
                let db: u32 = front.iter().map(|&v| b.exps[v] as u32).sum();
                da.cmp(&db).then_with(|| inner.cmp(a, b))
            }
        }
    }

    /// Parses `revlex:x3,x1,x2` or `lex:...` against variable names;
    /// a bare `revlex` or `lex` uses the declaration order.
    pub fn parse(spec: &str, names: &[String]) -> Result<Self> {
        let spec = spec.trim();
        let (kind, rest) = match spec.split_once(':') {
            Some((k, r)) => (k.trim(), Some(r)),
            None => (spec, None),
        };
        let ranking = match rest {
            None => (0..names.len()).collect(),
            Some(r) => {
                let mut out = Vec::new();
                for tok in r.split(',') {
                    let tok = tok.trim();
                    let i = names
                        .iter()
                        .position(|n| n == tok)
                        .ok_or_else(|| Error::UnknownVariable(tok.to_string()))?;
                    out.push(i);
                }
                out
            }
        };
        check_permutation(&ranking, names.len())?;
        match kind {
            "revlex" | "grevlex" => Ok(MonomialOrder::Revlex { ranking }),
            "lex" => Ok(MonomialOrder::Lex { ranking }),
            other => Err(Error::InvalidOrder(format!("unknown order kind `{other}`"))),
        }
    }

    pub fn describe(&self, names: &[String]) -> String {
        let list = |r: &[usize]| r.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join(",");
        match self {
            MonomialOrder::Revlex { ranking } => format!("revlex:{}", list(ranking)),
            MonomialOrder::Lex { ranking } => format!("lex:{}", list(ranking)),
            MonomialOrder::Block { front, inner } => format!("block[{}]({})", list(front), inner.describe(names)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_slice(e)
    }

    #[test]
    fn revlex_examples() {
        let o = MonomialOrder::grevlex(3);
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])).unwrap(), Ordering::Less);
        let o2 = MonomialOrder::revlex(vec![2, 0, 1]).unwrap();
        assert_eq!(o2.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])).unwrap(), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1, 1]), &m(&[1, 1, 1])).unwrap(), Ordering::Equal);
    }

    #[test]
    fn arity_mismatch() {
        let o = MonomialOrder::grevlex(3);
        assert!(matches!(o.compare(&m(&[1, 0]), &m(&[0, 2, 0])), Err(Error::Arity { .. })));
        assert!(MonomialOrder::revlex(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn block_order_front_first() {
        let o = MonomialOrder::block(vec![0], MonomialOrder::grevlex(3)).unwrap();
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 1, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn parse_order() {
        let names: Vec<String> = ["x1", "x2", "x3"].iter().map(|s| s.to_string()).collect();
        let o = MonomialOrder::parse("revlex:x3,x1,x2", &names).unwrap();
        assert_eq!(o, MonomialOrder::Revlex { ranking: vec![2, 0, 1] });
        assert_eq!(o.describe(&names), "revlex:x3,x1,x2");
        assert!(MonomialOrder::parse("revlex:x3,x1", &names).is_err());
        assert!(MonomialOrder::parse("revlex:x3,x1,y", &names).is_err());
    }

    #[test]
    fn degree_enumeration() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(2, 0), vec![Monomial::one(2)]);
    }

    fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
        Just((0..n).collect::<Vec<_>>()).prop_shuffle()
    }

    proptest! {
        #[test]
        fn revlex_refines_divisibility(a in prop::collection::vec(0u16..3, 4),
                                       b in prop::collection::vec(0u16..3, 4),
                                       r in perm(4)) {
            let o = MonomialOrder::revlex(r).unwrap();
            let (ma, mb) = (m(&a), m(&b));
            let prod = ma.mul(&mb);
            if !mb.is_one() {
                prop_assert_eq!(o.cmp(&ma, &prod), Ordering::Less);
            }
            prop_assert_eq!(o.cmp(&ma, &mb), o.cmp(&mb, &ma).reverse());
        }

        #[test]
        fn orders_are_multiplicative(a in prop::collection::vec(0u16..3, 4),
                                     b in prop::collection::vec(0u16..3, 4),
                                     c in prop::collection::vec(0u16..3, 4),
                                     r in perm(4)) {
            for o in [MonomialOrder::revlex(r.clone()).unwrap(), MonomialOrder::lex(r.clone()).unwrap()] {
                let (ma, mb, mc) = (m(&a), m(&b), m(&c));
                prop_assert_eq!(o.cmp(&ma, &mb), o.cmp(&ma.mul(&mc), &mb.mul(&mc)));
            }
        }
    }
}
