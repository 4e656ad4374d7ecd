//! Division, Buchberger's algorithm and the ideal operations built on it.

mod buchberger;
mod monomial_ideal;
pub(crate) mod reduce;

use std::ops::Range;
use std::sync::Arc;

pub use buchberger::BuchbergerOptions;
pub use monomial_ideal::MonomialIdeal;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::ideal::IdealPresentation;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring, RingRef, Term};

use buchberger::groebner_from_unsorted;
use reduce::{reduce_full, reduces_to_zero, s_poly, sort_terms, Divisor};

/// A reduced monic Gröbner basis, sorted ascending by leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: RingRef,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    divisors: Vec<Divisor>,
}

impl GroebnerBasis {
    fn from_terms(ring: &RingRef, order: &MonomialOrder, polys: Vec<Vec<Term>>) -> Self {
        let basis = polys.iter().map(|t| Polynomial::from_terms(ring, t.clone())).collect();
        let divisors = polys.into_iter().map(Divisor::new).collect();
        GroebnerBasis { ring: ring.clone(), order: order.clone(), basis, divisors }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Always true: bases produced here are interreduced.
    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn is_unit(&self) -> bool {
        self.divisors.iter().any(|d| d.lm().is_one())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.divisors.iter().map(|d| d.lm().clone()).collect()
    }

    /// Elements as term lists sorted under the basis order.
    pub fn sorted_terms(&self) -> impl Iterator<Item = &[Term]> {
        self.divisors.iter().map(|d| d.terms.as_slice())
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ring.nvars(), self.leading_monomials())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let t = sort_terms(f.terms().to_vec(), &self.order);
        Polynomial::from_terms(&self.ring, reduce_full(t, &self.divisors, &self.order))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        let t = sort_terms(f.terms().to_vec(), &self.order);
        reduces_to_zero(t, &self.divisors, &self.order).is_none()
    }

    pub fn max_degree(&self) -> u32 {
        self.divisors.iter().map(|d| d.lm().degree()).max().unwrap_or(0)
    }

    pub fn has_element_with_leading(&self, m: &Monomial) -> bool {
        self.divisors.iter().any(|d| d.lm() == m)
    }
}

/// Reduced Gröbner basis of `gens` under `order`.
pub fn buchberger_polys(ring: &RingRef, gens: &[Polynomial], order: &MonomialOrder, opts: &BuchbergerOptions) -> GroebnerBasis {
    let t = gens.iter().map(|g| g.terms().to_vec()).collect();
    GroebnerBasis::from_terms(ring, order, groebner_from_unsorted(t, order, opts, &mut None))
}

/// As [`buchberger_polys`], also recording every coefficient divided by.
pub fn buchberger_traced(ring: &RingRef, gens: &[Polynomial], order: &MonomialOrder, trace: &mut Vec<Scalar>) -> GroebnerBasis {
    let t = gens.iter().map(|g| g.terms().to_vec()).collect();
    let polys = groebner_from_unsorted(t, order, &BuchbergerOptions::default(), &mut Some(trace));
    GroebnerBasis::from_terms(ring, order, polys)
}

/// Memoized reduced Gröbner basis of an ideal.
pub fn buchberger(ideal: &IdealPresentation, order: &MonomialOrder) -> Arc<GroebnerBasis> {
    ideal.groebner(order)
}

/// Remainder of `f` on division by `g` (highest reducible monomial first,
/// first matching divisor in the given sequence).
pub fn normal_form(f: &Polynomial, g: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let divs: Vec<Divisor> = g.iter().filter(|p| !p.is_zero()).map(|p| Divisor::new(p.terms_in_order(order))).collect();
    let t = f.terms_in_order(order);
    Polynomial::from_terms(f.ring(), reduce_full(t, &divs, order))
}

/// A pair whose S-polynomial does not reduce to zero.
#[derive(Clone, Debug, PartialEq)]
pub struct SPairFailure {
    pub i: usize,
    pub j: usize,
    pub remainder: Polynomial,
}

pub(crate) fn failing_pair_terms(divs: &[Divisor], order: &MonomialOrder) -> Option<(usize, usize, Vec<Term>)> {
    for j in 1..divs.len() {
        for i in 0..j {
            if divs[i].lm().is_coprime(divs[j].lm()) {
                continue;
            }
            let s = s_poly(&divs[i].terms, &divs[j].terms, order);
            if let Some(r) = reduces_to_zero(s, divs, order) {
                return Some((i, j, r));
            }
        }
    }
    None
}

pub(crate) fn divisors_for(g: &[Polynomial], order: &MonomialOrder) -> Vec<Divisor> {
    g.iter().filter(|p| !p.is_zero()).map(|p| Divisor::new(p.terms_in_order(order))).collect()
}

/// First pair (i < j, ordered by j then i) of `g` whose S-polynomial has a
/// nonzero remainder. Indices refer to the nonzero members of `g`.
pub fn find_failing_pair(g: &[Polynomial], order: &MonomialOrder) -> Option<SPairFailure> {
    let ring = g.first()?.ring().clone();
    let divs = divisors_for(g, order);
    failing_pair_terms(&divs, order).map(|(i, j, r)| SPairFailure { i, j, remainder: Polynomial::from_terms(&ring, r) })
}

pub fn is_groebner_basis(g: &[Polynomial], order: &MonomialOrder) -> bool {
    find_failing_pair(g, order).is_none()
}

pub fn initial_ideal(ideal: &IdealPresentation, order: &MonomialOrder) -> MonomialIdeal {
    ideal.groebner(order).initial_ideal()
}

/// `dim (S/I)_d` for each `d` in `degrees`.
pub fn hilbert_function(ideal: &IdealPresentation, degrees: Range<u32>) -> Result<Vec<u64>> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let init = initial_ideal(ideal, &ideal.default_order());
    Ok(init.hilbert_function(degrees))
}

/// Hilbert function up to the last nonzero value; `None` when not Artinian.
pub fn hilbert_vector(ideal: &IdealPresentation) -> Result<Option<Vec<u64>>> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let init = initial_ideal(ideal, &ideal.default_order());
    if !init.is_artinian() {
        return Ok(None);
    }
    Ok(Some(init.hilbert_vector()))
}

pub fn is_artinian(ideal: &IdealPresentation) -> Result<bool> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(initial_ideal(ideal, &ideal.default_order()).is_artinian())
}

pub fn membership(f: &Polynomial, ideal: &IdealPresentation) -> bool {
    ideal.groebner(&ideal.default_order()).contains(f)
}

/// `a / f` when `f` divides `a` exactly.
pub fn divide_exact(a: &Polynomial, f: &Polynomial) -> Result<Option<Polynomial>> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let order = MonomialOrder::grevlex(a.nvars());
    let ft = f.terms_in_order(&order);
    let (lm, lc) = ft[0].clone();
    let mut rem = a.terms_in_order(&order);
    let mut quot: Vec<Term> = Vec::new();
    while let Some((m, c)) = rem.first() {
        let Some(q) = lm.quotient_of(m) else { return Ok(None) };
        let coef = c.div(&lc)?;
        rem = reduce::sub_scaled(&rem[1..], &coef, &q, &ft[1..], &order);
        quot.push((q, coef));
    }
    Ok(Some(Polynomial::from_terms(a.ring(), quot)))
}

fn fresh_name(names: &[String], base: &str) -> String {
    let mut name = base.to_string();
    let mut k = 0;
    while names.contains(&name) {
        k += 1;
        name = format!("{base}{k}");
    }
    name
}

/// `I ∩ k[remaining variables]`, presented in the original ring.
pub fn eliminate(ideal: &IdealPresentation, front: &[usize]) -> Result<IdealPresentation> {
    let n = ideal.nvars();
    if let Some(&v) = front.iter().find(|&&v| v >= n) {
        return Err(Error::Arity { expected: n, found: v + 1 });
    }
    if front.is_empty() {
        return Ok(ideal.clone());
    }
    let order = MonomialOrder::block(front.to_vec(), MonomialOrder::grevlex(n))?;
    let gb = ideal.groebner(&order);
    let kept = gb
        .basis()
        .iter()
        .filter(|g| g.support().all(|m| front.iter().all(|&v| m.exp(v) == 0)))
        .cloned()
        .collect();
    ideal.with_gens(kept)
}

/// Generators of `I : f` by elimination of an auxiliary variable `t`:
/// `I ∩ (f)` is read off `(t·I, (1 - t)·f)` and divided by `f`. The result
/// is the reduced grevlex basis of the colon.
pub fn colon_by_polynomial(ideal: &IdealPresentation, f: &Polynomial) -> Result<Vec<Polynomial>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut names = ring.names().to_vec();
    names.push(fresh_name(&names, "t"));
    let big = Ring::new(names, ring.field())?;
    let embed: Vec<usize> = (0..n).collect();
    let t = Polynomial::var(&big, n);
    let one_minus_t = Polynomial::one(&big).sub(&t);
    let mut gens: Vec<Polynomial> = ideal.gens().iter().map(|g| g.remap(&big, &embed).mul(&t)).collect();
    gens.push(f.remap(&big, &embed).mul(&one_minus_t));
    let order = MonomialOrder::block(vec![n], MonomialOrder::grevlex(n + 1))?;
    let gb = buchberger_polys(&big, &gens, &order, &BuchbergerOptions::default());
    let mut quotients = Vec::new();
    for g in gb.basis() {
        if g.support().any(|m| m.exp(n) > 0) {
            continue;
        }
        let back = Polynomial::from_terms(
            ring,
            g.terms().iter().map(|(m, c)| (Monomial::from_slice(&m.exps()[..n]), c.clone())).collect(),
        );
        let q = divide_exact(&back, f)?.ok_or_else(|| Error::Invalid("intersection element not divisible by f".into()))?;
        quotients.push(q);
    }
    let gb = buchberger_polys(ring, &quotients, &MonomialOrder::grevlex(n), &BuchbergerOptions::default());
    Ok(gb.basis().to_vec())
}

/// Revlex ranking with the declaration order except that `x` comes last.
pub fn revlex_with_last(n: usize, x: usize) -> MonomialOrder {
    let mut ranking: Vec<usize> = (0..n).filter(|&v| v != x).collect();
    ranking.push(x);
    MonomialOrder::Revlex { ranking }
}

/// Reduced Gröbner basis of `I : x` for a variable `x` and homogeneous `I`,
/// in revlex with `x` smallest. There, `x` divides `lm(g)` only when it
/// divides `g`, so dividing those elements by `x` yields a basis of the colon.
pub fn colon_by_variable(ideal: &IdealPresentation, x: usize) -> Result<GroebnerBasis> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = ideal.nvars();
    if x >= n {
        return Err(Error::Arity { expected: n, found: x + 1 });
    }
    let order = revlex_with_last(n, x);
    let gb = ideal.groebner(&order);
    let xm = Monomial::variable(n, x);
    let mut out: Vec<Vec<Term>> = Vec::with_capacity(gb.len());
    for t in gb.sorted_terms() {
        if xm.divides(&t[0].0) {
            out.push(t.iter().map(|(m, c)| (xm.quotient_of(m).expect("x divides every term"), c.clone())).collect());
        } else {
            out.push(t.to_vec());
        }
    }
    let polys = buchberger::interreduce(out, &order, &mut None);
    Ok(GroebnerBasis::from_terms(ideal.ring(), &order, polys))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::parse::parse_polynomial;

    fn remark() -> IdealPresentation {
        IdealPresentation::parse("vars: x1, x2, x3\nfield: QQ\nx1*x3 - x2^2\nx2*x3\nx3^2\n").unwrap()
    }

    fn p(i: &IdealPresentation, s: &str) -> Polynomial {
        parse_polynomial(i.ring(), s).unwrap()
    }

    #[test]
    fn remark_gb_both_orders() {
        let i = remark();
        let gb = buchberger(&i, &MonomialOrder::grevlex(3));
        let expect: Vec<Polynomial> = ["x3^2", "x2*x3", "x2^2 - x1*x3"].iter().map(|s| p(&i, s)).collect();
        assert_eq!(gb.basis(), expect.as_slice());
        let o = MonomialOrder::revlex(vec![2, 0, 1]).unwrap();
        let gb2 = buchberger(&i, &o);
        assert!(gb2.basis().contains(&p(&i, "x2^3")));
        assert!(!is_groebner_basis(i.gens(), &o));
        assert!(is_groebner_basis(i.gens(), &MonomialOrder::grevlex(3)));
    }

    #[test]
    fn normal_form_examples() {
        let i = remark();
        let o = MonomialOrder::grevlex(3);
        assert_eq!(normal_form(&p(&i, "x2^2"), &[p(&i, "x2^2 - x1*x3")], &o), p(&i, "x1*x3"));
        assert_eq!(normal_form(&p(&i, "x1"), &[p(&i, "x2")], &o), p(&i, "x1"));
        assert!(membership(&p(&i, "x2^3"), &i));
        assert!(!membership(&p(&i, "x1"), &i));
    }

    #[test]
    fn initial_ideal_and_hilbert() {
        let i = remark();
        let init = initial_ideal(&i, &MonomialOrder::grevlex(3));
        assert_eq!(init.gens().len(), 3);
        assert_eq!(hilbert_function(&i, 0..4).unwrap(), vec![1, 3, 3, 3]);
        assert!(!is_artinian(&i).unwrap());
    }

    #[test]
    fn colon_examples() {
        let i = IdealPresentation::parse("vars: x, y\nfield: QQ\nx^2 - x*y\n").unwrap();
        let c = colon_by_polynomial(&i, &p(&i, "x")).unwrap();
        assert_eq!(c, vec![p(&i, "x - y")]);
        let c = colon_by_polynomial(&i, &p(&i, "x^2 - x*y")).unwrap();
        assert_eq!(c, vec![p(&i, "1")]);
        let j = IdealPresentation::parse("vars: x, y\nfield: QQ\nx^2\nx*y\n").unwrap();
        let c = colon_by_polynomial(&j, &p(&j, "x")).unwrap();
        assert_eq!(c, vec![p(&j, "y"), p(&j, "x")]);
        let fast = colon_by_variable(&j, 0).unwrap();
        assert_eq!(fast.len(), 2);
        let fast = colon_by_variable(&i, 0).unwrap();
        assert_eq!(fast.basis(), &[p(&i, "y - x")]);
    }

    #[test]
    fn eliminate_examples() {
        let i = IdealPresentation::parse("vars: t, x, y\nfield: QQ\nt*x\n(1 - t)*y\n").unwrap();
        let e = eliminate(&i, &[0]).unwrap();
        assert_eq!(e.gens(), &[p(&i, "x*y")]);
        assert_eq!(eliminate(&i, &[]).unwrap().gens(), i.gens());
        let i = IdealPresentation::parse("vars: t, x\nfield: QQ\nt - x\n").unwrap();
        assert!(eliminate(&i, &[0]).unwrap().gens().is_empty());
    }

    #[test]
    fn artinian_examples() {
        let i = IdealPresentation::parse("vars: x, y, z, t\nfield: QQ\nx^2+2*y*z\ny^2+2*z*t\nz^2+2*t*x\nt^2+2*x*y\n").unwrap();
        assert!(is_artinian(&i).unwrap());
        let j = IdealPresentation::parse("vars: x, y\nfield: QQ\nx*y\n").unwrap();
        assert!(!is_artinian(&j).unwrap());
        let k = IdealPresentation::parse("vars: x, y\nfield: QQ\nx^2\ny^2\n").unwrap();
        assert!(is_artinian(&k).unwrap());
        let nh = IdealPresentation::parse("vars: x\nfield: QQ\nx^2 - x\n").unwrap();
        assert!(matches!(hilbert_function(&nh, 0..2), Err(Error::NotHomogeneous)));
    }

    #[test]
    fn monomial_generators_pass_through() {
        let i = IdealPresentation::parse("vars: x, y\nfield: GF(7)\nx^2\nx^3*y\ny^4\n").unwrap();
        let gb = buchberger(&i, &MonomialOrder::grevlex(2));
        assert_eq!(gb.len(), 2);
        assert!(is_groebner_basis(i.gens(), &MonomialOrder::lex(vec![1, 0]).unwrap()));
        let _ = Field::Prime(7);
    }

    #[test]
    fn exact_division() {
        let i = remark();
        let f = p(&i, "x1 + x2");
        let a = f.mul(&p(&i, "x3 - x1"));
        assert_eq!(divide_exact(&a, &f).unwrap().unwrap(), p(&i, "x3 - x1"));
        assert!(divide_exact(&a.add(&p(&i, "x3")), &f).unwrap().is_none());
    }
}
