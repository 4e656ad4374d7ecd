//! Term-list kernels shared by division and Buchberger's algorithm.
//!
//! A term list is sorted descending under the working order, so its first
//! entry is the leading term.

use crate::field::Scalar;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{merge_terms, Term};

/// A divisor with its leading monomial cached for fast divisibility tests.
#[derive(Clone, Debug)]
pub(crate) struct Divisor {
    pub terms: Vec<Term>,
    pub mask: u64,
}

impl Divisor {
    pub fn new(terms: Vec<Term>) -> Self {
        let mask = terms[0].0.support_mask();
        Divisor { terms, mask }
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    #[inline]
    pub fn divides(&self, m: &Monomial, m_mask: u64) -> bool {
        self.mask & !m_mask == 0 && self.lm().divides(m)
    }
}

/// `p - c * m * g` for term lists under `order`.
pub(crate) fn sub_scaled(p: &[Term], c: &Scalar, m: &Monomial, g: &[Term], order: &MonomialOrder) -> Vec<Term> {
    let neg = c.neg();
    let shifted: Vec<Term> = g.iter().map(|(gm, gc)| (gm.mul(m), gc.mul(&neg))).collect();
    merge_terms(p, &shifted, |a, b| order.cmp(a, b))
}

/// Full reduction of `f` by `divs`: the highest reducible monomial is
/// reduced first, using the first divisor (in stored order) whose leading
/// monomial divides it. Divisors need not be monic.
pub(crate) fn reduce_full(f: Vec<Term>, divs: &[Divisor], order: &MonomialOrder) -> Vec<Term> {
    reduce_traced(f, divs, order, &mut None)
}

pub(crate) fn reduce_traced(
    f: Vec<Term>,
    divs: &[Divisor],
    order: &MonomialOrder,
    trace: &mut Option<&mut Vec<Scalar>>,
) -> Vec<Term> {
    let mut rem: Vec<Term> = Vec::new();
    let mut p = f;
    let mut start = 0;
    while start < p.len() {
        let (m, c) = &p[start];
        let mask = m.support_mask();
        match divs.iter().find(|d| d.divides(m, mask)) {
            Some(d) => {
                let (lm, lc) = &d.terms[0];
                let q = lm.quotient_of(m).expect("divides");
                let coef = if lc.is_one() {
                    c.clone()
                } else {
                    if let Some(t) = trace.as_mut() {
                        t.push(lc.clone());
                    }
                    c.div(lc).expect("nonzero leading coefficient")
                };
                p = sub_scaled(&p[start + 1..], &coef, &q, &d.terms[1..], order);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    rem
}

/// Only checks whether `f` reduces to zero, stopping at the first
/// irreducible term.
pub(crate) fn reduces_to_zero(f: Vec<Term>, divs: &[Divisor], order: &MonomialOrder) -> Option<Vec<Term>> {
    let mut p = f;
    while let Some((m, c)) = p.first() {
        let mask = m.support_mask();
        match divs.iter().find(|d| d.divides(m, mask)) {
            Some(d) => {
                let (lm, lc) = &d.terms[0];
                let q = lm.quotient_of(m).expect("divides");
                let coef = c.div(lc).expect("nonzero leading coefficient");
                p = sub_scaled(&p[1..], &coef, &q, &d.terms[1..], order);
            }
            None => return Some(reduce_full(p, divs, order)),
        }
    }
    None
}

/// S-polynomial of two term lists; `None` when the leading monomials are coprime.
pub(crate) fn s_poly(a: &[Term], b: &[Term], order: &MonomialOrder) -> Vec<Term> {
    let (am, ac) = &a[0];
    let (bm, bc) = &b[0];
    let l = am.lcm(bm);
    let qa = am.quotient_of(&l).unwrap();
    let qb = bm.quotient_of(&l).unwrap();
    // bc * qa * a - ac * qb * b, with the leading terms cancelling
    let left: Vec<Term> = a[1..].iter().map(|(m, c)| (m.mul(&qa), c.mul(bc))).collect();
    sub_scaled(&left, ac, &qb, &b[1..], order)
}

pub(crate) fn make_monic(mut t: Vec<Term>, trace: &mut Option<&mut Vec<Scalar>>) -> Vec<Term> {
    if let Some((_, lc)) = t.first() {
        if !lc.is_one() {
            if let Some(tr) = trace.as_mut() {
                tr.push(lc.clone());
            }
            let inv = lc.inv().expect("nonzero");
            for (_, c) in t.iter_mut() {
                *c = c.mul(&inv);
            }
        }
    }
    t
}

pub(crate) fn sort_terms(mut t: Vec<Term>, order: &MonomialOrder) -> Vec<Term> {
    t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    t
}
