//! Sparse polynomials over a named ring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::monomial::{grevlex_cmp, Monomial, MonomialOrder};

pub type Term = (Monomial, Scalar);

/// Variable names and coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    field: Field,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new(names: Vec<String>, field: Field) -> Result<RingRef> {
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().next().unwrap().is_alphabetic() && !n.starts_with('_') {
                return Err(Error::Invalid(format!("bad variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::Invalid(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Arc::new(Ring { names, field }))
    }

    /// Builds a ring from `&str` names; panics on invalid names.
    pub fn with_names(names: &[&str], field: Field) -> RingRef {
        Ring::new(names.iter().map(|s| s.to_string()).collect(), field).expect("valid names")
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn with_field(&self, field: Field) -> RingRef {
        Arc::new(Ring { names: self.names.clone(), field })
    }
}

/// Adds two term lists sorted descending under `cmp`.
pub(crate) fn merge_terms(
    a: &[Term],
    b: &[Term],
    cmp: impl Fn(&Monomial, &Monomial) -> Ordering,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = a[i].1.add(&b[j].1);
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Sorts descending under `cmp`, combining equal monomials and dropping zeros.
pub(crate) fn canonicalize(mut terms: Vec<Term>, cmp: impl Fn(&Monomial, &Monomial) -> Ordering) -> Vec<Term> {
    terms.sort_by(|a, b| cmp(&b.0, &a.0));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        if let Some(last) = out.last_mut() {
            if last.0 == m {
                last.1 = last.1.add(&c);
                continue;
            }
        }
        out.push((m, c));
    }
    out.retain(|t| !t.1.is_zero());
    out
}

#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    /// Descending under grevlex with the declaration order.
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &RingRef, c: Scalar) -> Self {
        Self::from_terms(ring, vec![(Monomial::one(ring.nvars()), c)])
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::variable(ring.nvars(), i), ring.field().one())] }
    }

    pub fn var_named(ring: &RingRef, name: &str) -> Result<Self> {
        Ok(Self::var(ring, ring.index_of(name)?))
    }

    pub fn monomial(ring: &RingRef, m: Monomial) -> Self {
        Polynomial { ring: ring.clone(), terms: vec![(m, ring.field().one())] }
    }

    /// Builds a polynomial from arbitrary terms (any order, repeats allowed).
    pub fn from_terms(ring: &RingRef, terms: Vec<Term>) -> Self {
        debug_assert!(terms.iter().all(|(m, c)| m.arity() == ring.nvars() && c.field() == ring.field()));
        Polynomial { ring: ring.clone(), terms: canonicalize(terms, grevlex_cmp) }
    }

    /// Integer-coefficient constructor, convenient for tests and galleries.
    pub fn from_int_terms(ring: &RingRef, terms: &[(i64, &[u16])]) -> Self {
        let f = ring.field();
        Self::from_terms(ring, terms.iter().map(|(c, e)| (Monomial::from_slice(e), f.from_i64(*c))).collect())
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.0)
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .binary_search_by(|t| grevlex_cmp(m, &t.0))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| self.field().zero())
    }

    fn check_ring(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "polynomials from different rings"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_ring(other);
        Polynomial { ring: self.ring.clone(), terms: merge_terms(&self.terms, &other.terms, grevlex_cmp) }
    }

    pub fn neg(&self) -> Self {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, d)| (m.clone(), d.mul(c))).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        // multiplication by a monomial preserves any monomial order
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(n, d)| (n.mul(m), d.mul(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other);
        let mut acc: Vec<Term> = Vec::with_capacity(self.len() * other.len());
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                acc.push((m.mul(n), c.mul(d)));
            }
        }
        Polynomial { ring: self.ring.clone(), terms: canonicalize(acc, grevlex_cmp) }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn total_degree(&self) -> Result<u32> {
        self.terms.iter().map(|t| t.0.degree()).max().ok_or(Error::ZeroPolynomial)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|t| t.0.degree() == m.degree()),
        }
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Result<&Term> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Result<&Monomial> {
        Ok(&self.leading_term(order)?.0)
    }

    /// Terms sorted descending under `order`.
    pub fn terms_in_order(&self, order: &MonomialOrder) -> Vec<Term> {
        let mut t = self.terms.clone();
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        t
    }

    /// Scales so the leading coefficient under `order` is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Result<Self> {
        let lc = self.leading_term(order)?.1.clone();
        Ok(self.scale(&lc.inv().expect("nonzero")))
    }

    /// Each variable divides at most one monomial of the support.
    pub fn is_tidy(&self) -> bool {
        let mut seen = vec![false; self.nvars()];
        for (m, _) in &self.terms {
            for v in m.support() {
                if seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        true
    }

    /// Kills the variables in `ys`, staying in the same ring.
    pub fn set_variables_to_zero(&self, ys: &[usize]) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| ys.iter().all(|&y| m.exp(y) == 0)).cloned().collect(),
        }
    }

    /// Replaces variables by polynomials of degree at most one; variables
    /// absent from `map` are fixed.
    pub fn substitute_linear(&self, map: &BTreeMap<usize, Polynomial>) -> Result<Self> {
        let n = self.nvars();
        for (&v, img) in map {
            if v >= n || img.nvars() != n {
                return Err(Error::Arity { expected: n, found: img.nvars().max(v + 1) });
            }
            if !img.is_zero() && img.total_degree()? > 1 {
                return Err(Error::Invalid(format!("image of {} is not linear", self.ring.names[v])));
            }
        }
        let mut powers: BTreeMap<(usize, u16), Polynomial> = BTreeMap::new();
        let mut acc: Vec<Term> = Vec::new();
        for (m, c) in &self.terms {
            let mut fixed = Monomial::one(n);
            let mut prod = Polynomial::constant(&self.ring, c.clone());
            for v in m.support() {
                let e = m.exp(v);
                match map.get(&v) {
                    None => fixed = fixed.mul(&Monomial::variable(n, v).pow_exp(e)),
                    Some(img) => {
                        let p = powers.entry((v, e)).or_insert_with(|| img.pow(e as u32)).clone();
                        prod = prod.mul(&p);
                    }
                }
            }
            acc.extend(prod.terms.into_iter().map(|(mm, cc)| (mm.mul(&fixed), cc)));
        }
        Ok(Polynomial { ring: self.ring.clone(), terms: canonicalize(acc, grevlex_cmp) })
    }

    /// Rebuilds the polynomial in another ring of the same arity and
    /// characteristic-compatible field (e.g. reduction mod p).
    pub fn change_ring(&self, ring: &RingRef) -> Result<Self> {
        if ring.nvars() != self.nvars() {
            return Err(Error::Arity { expected: ring.nvars(), found: self.nvars() });
        }
        let f = ring.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.clone(), f.convert(c)?));
        }
        Ok(Self::from_terms(ring, terms))
    }

    /// Moves into a ring with different variables; variable `i` becomes `map[i]`.
    pub fn remap(&self, ring: &RingRef, map: &[usize]) -> Self {
        let n = ring.nvars();
        Self::from_terms(ring, self.terms.iter().map(|(m, c)| (m.remap(map, n), c.clone())).collect())
    }

    /// Partial derivative with respect to variable `v`.
    pub fn derivative(&self, v: usize) -> Self {
        let f = self.field();
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let mut ex = m.exps().to_vec();
            ex[v] -= 1;
            terms.push((Monomial::from_slice(&ex), c.mul(&f.from_i64(e as i64))));
        }
        Self::from_terms(&self.ring, terms)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }
}

impl Monomial {
    fn pow_exp(&self, e: u16) -> Monomial {
        Monomial::new(self.exps().iter().map(|&x| x * e).collect::<crate::monomial::Exponents>())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.fmt_with(&self.ring.names))?;
            } else {
                write!(f, "{abs}*{}", m.fmt_with(&self.ring.names))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xyz() -> RingRef {
        Ring::with_names(&["x1", "x2", "x3"], Field::Rational)
    }

    #[test]
    fn display_and_arith() {
        let r = xyz();
        let f = Polynomial::from_int_terms(&r, &[(1, &[1, 0, 1]), (-1, &[0, 2, 0])]);
        assert_eq!(f.to_string(), "-x2^2 + x1*x3");
        let g = f.add(&f.neg());
        assert!(g.is_zero());
        assert_eq!(g.to_string(), "0");
        let h = Polynomial::var(&r, 0).mul(&Polynomial::var(&r, 0));
        assert_eq!(h.to_string(), "x1^2");
        assert!(g.total_degree().is_err());
    }

    #[test]
    fn tidy_examples() {
        let r = xyz();
        assert!(Polynomial::from_int_terms(&r, &[(1, &[1, 0, 1]), (-1, &[0, 2, 0])]).is_tidy());
        assert!(!Polynomial::from_int_terms(&r, &[(1, &[2, 0, 0]), (1, &[1, 1, 0])]).is_tidy());
    }

    #[test]
    fn substitution_examples() {
        let r = Ring::with_names(&["x", "y"], Field::Rational);
        let f = Polynomial::from_int_terms(&r, &[(1, &[2, 0]), (-1, &[0, 2])]);
        let mut map = BTreeMap::new();
        map.insert(0, Polynomial::var(&r, 0).add(&Polynomial::var(&r, 1)));
        let g = f.substitute_linear(&map).unwrap();
        assert_eq!(g, Polynomial::from_int_terms(&r, &[(1, &[2, 0]), (2, &[1, 1])]));
        assert_eq!(f.substitute_linear(&BTreeMap::new()).unwrap(), f);
        let mut bad = BTreeMap::new();
        bad.insert(0, f.clone());
        assert!(f.substitute_linear(&bad).is_err());
    }

    #[test]
    fn projection_examples() {
        let r = xyz();
        let f = Polynomial::from_int_terms(&r, &[(1, &[1, 0, 1]), (-1, &[0, 2, 0])]);
        assert_eq!(f.set_variables_to_zero(&[2]), Polynomial::from_int_terms(&r, &[(-1, &[0, 2, 0])]));
        assert!(Polynomial::from_int_terms(&r, &[(1, &[0, 1, 1])]).set_variables_to_zero(&[2]).is_zero());
    }

    fn poly_strategy(r: RingRef) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-3i64..=3, prop::collection::vec(0u16..3, 3)), 0..5).prop_map(move |ts| {
            let f = r.field();
            Polynomial::from_terms(&r, ts.into_iter().map(|(c, e)| (Monomial::from_slice(&e), f.from_i64(c))).collect())
        })
    }

    proptest! {
        #[test]
        fn projection_is_ring_map(f in poly_strategy(xyz()), g in poly_strategy(xyz()), y in 0usize..3) {
            let ys = [y];
            prop_assert_eq!(f.add(&g).set_variables_to_zero(&ys),
                            f.set_variables_to_zero(&ys).add(&g.set_variables_to_zero(&ys)));
            prop_assert_eq!(f.mul(&g).set_variables_to_zero(&ys),
                            f.set_variables_to_zero(&ys).mul(&g.set_variables_to_zero(&ys)));
        }

        #[test]
        fn tidy_invariant_under_scaling(f in poly_strategy(xyz()), c in 1i64..5) {
            let s = f.scale(&Field::Rational.from_i64(c));
            prop_assert_eq!(f.is_tidy(), s.is_tidy());
        }

        #[test]
        fn invertible_substitution_round_trip(f in poly_strategy(xyz()), a in -3i64..=3, b in -3i64..=3) {
            // x1 -> x1 + a*x2, x2 -> x2 + b*x3 has inverse x2 -> x2 - b*x3, x1 -> x1 - a*(x2 - b*x3)
            let r = xyz();
            let q = r.field();
            let (x1, x2, x3) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1), Polynomial::var(&r, 2));
            let mut fwd = BTreeMap::new();
            fwd.insert(0, x1.add(&x2.scale(&q.from_i64(a))));
            fwd.insert(1, x2.add(&x3.scale(&q.from_i64(b))));
            let mut inv = BTreeMap::new();
            let x2_back = x2.sub(&x3.scale(&q.from_i64(b)));
            inv.insert(0, x1.sub(&x2_back.scale(&q.from_i64(a))));
            inv.insert(1, x2_back);
            let g = f.substitute_linear(&fwd).unwrap().substitute_linear(&inv).unwrap();
            prop_assert_eq!(g, f);
        }
    }
}
