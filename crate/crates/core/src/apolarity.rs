//! Inverse systems under the contraction action, the differentiation pairing
//! on quadrics, the obstruction to quadratic Gröbner bases after any linear
//! change of coordinates, and diagonalization of quadrics.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{is_prime, Field, Scalar};
use crate::grobner::{buchberger_polys, buchberger_traced, BuchbergerOptions};
use crate::ideal::IdealPresentation;
use crate::linalg::{kernel, kernel_traced, rank, rref, Matrix};
use crate::monomial::{grevlex_cmp, monomials_of_degree, Monomial, MonomialOrder};
use crate::parse::parse_file;
use crate::poly::{Polynomial, Ring, RingRef};

/// A nonzero homogeneous form in the dual variables.
#[derive(Clone, Debug, PartialEq)]
pub struct DualForm {
    poly: Polynomial,
    degree: u32,
}

impl DualForm {
    pub fn new(poly: Polynomial) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !poly.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let degree = poly.total_degree()?;
        Ok(DualForm { poly, degree })
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn ring(&self) -> &RingRef {
        self.poly.ring()
    }
}

impl fmt::Display for DualForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// The ring of dual variables: each name upper-cased.
pub fn dual_ring(ring: &Ring) -> RingRef {
    let names: Vec<String> = ring.names().iter().map(|s| s.to_uppercase()).collect();
    Ring::new(names.clone(), ring.field()).unwrap_or_else(|_| {
        let fallback = ring.names().iter().map(|s| format!("D{s}")).collect();
        Ring::new(fallback, ring.field()).expect("prefixed names are distinct")
    })
}

/// The acting ring of a dual ring: each name lower-cased.
pub fn acting_ring(dual: &Ring) -> Result<RingRef> {
    Ring::new(dual.names().iter().map(|s| s.to_lowercase()).collect(), dual.field())
}

fn check_arity(f: &Polynomial, g: &Polynomial) -> Result<()> {
    if f.nvars() != g.nvars() {
        return Err(Error::Arity { expected: g.nvars(), found: f.nvars() });
    }
    Ok(())
}

/// `x^a ∘ X^b = X^(b-a)` when `a ≤ b`, zero otherwise, extended bilinearly.
/// The result lives in the ring of `big_f`.
pub fn contract(f: &Polynomial, big_f: &Polynomial) -> Result<Polynomial> {
    check_arity(f, big_f)?;
    let mut terms = Vec::new();
    for (a, c) in f.terms() {
        for (b, d) in big_f.terms() {
            if let Some(q) = a.quotient_of(b) {
                terms.push((q, c.mul(d)));
            }
        }
    }
    Ok(Polynomial::from_terms(big_f.ring(), terms))
}

/// Same as [`contract`] but with `x_i` acting as `∂/∂X_i`.
pub fn differentiate(f: &Polynomial, big_f: &Polynomial) -> Result<Polynomial> {
    check_arity(f, big_f)?;
    let field = big_f.field();
    let mut terms = Vec::new();
    for (a, c) in f.terms() {
        for (b, d) in big_f.terms() {
            if let Some(q) = a.quotient_of(b) {
                let mut k = c.mul(d);
                for v in a.support() {
                    for j in 0..a.exp(v) {
                        k = k.mul(&field.from_i64((b.exp(v) - j) as i64));
                    }
                }
                terms.push((q, k));
            }
        }
    }
    Ok(Polynomial::from_terms(big_f.ring(), terms))
}

/// A module of the dual generated by forms of one common degree.
#[derive(Clone, Debug)]
pub struct InverseSystemModule {
    ring: RingRef,
    gens: Vec<DualForm>,
    degree: u32,
}

impl InverseSystemModule {
    /// `ring` is the acting ring; generators must share its arity and field.
    pub fn new(ring: &RingRef, gens: Vec<DualForm>) -> Result<Self> {
        let first = gens.first().ok_or_else(|| Error::Invalid("module needs at least one generator".into()))?;
        let degree = first.degree();
        for g in &gens {
            if g.poly().nvars() != ring.nvars() {
                return Err(Error::Arity { expected: ring.nvars(), found: g.poly().nvars() });
            }
            if g.poly().field() != ring.field() {
                return Err(Error::Invalid("dual form over a different field".into()));
            }
            if g.degree() != degree {
                return Err(Error::NotLevel);
            }
        }
        let module = InverseSystemModule { ring: ring.clone(), gens, degree };
        if module.top_rank() != module.gens.len() {
            return Err(Error::DependentGenerators);
        }
        Ok(module)
    }

    /// Builds the module from dual polynomials, with the acting ring named
    /// by lower-casing.
    pub fn from_polys(polys: Vec<Polynomial>) -> Result<Self> {
        let first = polys.first().ok_or_else(|| Error::Invalid("module needs at least one generator".into()))?;
        let ring = acting_ring(first.ring())?;
        let gens = polys.into_iter().map(DualForm::new).collect::<Result<Vec<_>>>()?;
        Self::new(&ring, gens)
    }

    /// Reads a `dualvars:` file.
    pub fn parse(text: &str) -> Result<Self> {
        let parsed = parse_file(text)?;
        if !parsed.dual {
            return Err(Error::Parse { line: 1, message: "expected a `dualvars:` header".into() });
        }
        Self::from_polys(parsed.polys)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[DualForm] {
        &self.gens
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    fn top_rank(&self) -> usize {
        let cols = monomials_of_degree(self.ring.nvars(), self.degree);
        let m: Matrix = self.gens.iter().map(|g| cols.iter().map(|c| g.poly().coefficient(c)).collect()).collect();
        rank(&m, cols.len())
    }

    /// Matrix of the contraction map `S_d → ⊕ D_{s-d}`: columns are the
    /// degree-`d` monomials, rows pair a generator with a degree-`(s-d)`
    /// monomial. Its rank is `dim M_d`.
    fn contraction_matrix(&self, d: u32) -> (Matrix, Vec<Monomial>) {
        let n = self.ring.nvars();
        let cols = monomials_of_degree(n, d);
        let field = self.ring.field();
        let mut rows = Vec::new();
        if d <= self.degree {
            let comps = monomials_of_degree(n, self.degree - d);
            for g in &self.gens {
                let coeffs: HashMap<&Monomial, &Scalar> = g.poly().terms().iter().map(|(m, c)| (m, c)).collect();
                for b in &comps {
                    let row: Vec<Scalar> =
                        cols.iter().map(|a| coeffs.get(&a.mul(b)).map_or_else(|| field.zero(), |&c| c.clone())).collect();
                    if row.iter().any(|c| !c.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        (rows, cols)
    }
}

/// `dim_k M_d`, the rank of the span of all contractions of the
/// generators by monomials of degree `s - d`.
pub fn module_graded_dimension(module: &InverseSystemModule, d: u32) -> usize {
    if d > module.degree {
        return 0;
    }
    let (m, cols) = module.contraction_matrix(d);
    rank(&m, cols.len())
}

fn poly_from_vector(ring: &RingRef, cols: &[Monomial], v: &[Scalar]) -> Polynomial {
    Polynomial::from_terms(ring, cols.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m.clone(), c.clone())).collect())
}

/// Row-reduced basis of the span of `polys`, all of degree `d`.
fn span_basis(ring: &RingRef, polys: &[Polynomial], cols: &[Monomial]) -> Vec<Polynomial> {
    let index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let field = ring.field();
    let mut m: Matrix = polys
        .iter()
        .map(|p| {
            let mut row = vec![field.zero(); cols.len()];
            for (mono, c) in p.terms() {
                row[index[mono]] = c.clone();
            }
            row
        })
        .collect();
    let r = rref(&mut m, cols.len(), &mut None).len();
    m.truncate(r);
    m.iter().map(|row| poly_from_vector(ring, cols, row)).collect()
}

/// Minimal generators of `ann(M)`, degree by degree up to `s + 1`.
pub fn apolar_ideal(module: &InverseSystemModule) -> Result<IdealPresentation> {
    let ring = module.ring();
    let n = ring.nvars();
    let order = MonomialOrder::grevlex(n);
    let opts = BuchbergerOptions::default();
    let mut gens: Vec<Polynomial> = Vec::new();
    for d in 1..=module.degree + 1 {
        // columns in descending grevlex, so reduced rows lead with their largest monomial
        let gb = (!gens.is_empty()).then(|| buchberger_polys(ring, &gens, &order, &opts));
        let fresh: Vec<Polynomial> = if d <= module.degree {
            let (m, cols) = module.contraction_matrix(d);
            let ker = kernel(&m, cols.len(), ring.field());
            let reduced: Vec<Polynomial> = ker
                .iter()
                .map(|v| {
                    let p = poly_from_vector(ring, &cols, v);
                    gb.as_ref().map_or(p.clone(), |g| g.normal_form(&p))
                })
                .filter(|p| !p.is_zero())
                .collect();
            let mut desc = cols.clone();
            desc.sort_by(|a, b| order.cmp(b, a));
            span_basis(ring, &reduced, &desc)
        } else {
            // every form of degree s + 1 is annihilated
            let std = match &gb {
                Some(g) => g.initial_ideal().standard_monomials(d).pop().unwrap_or_default(),
                None => monomials_of_degree(n, d),
            };
            let mut std: Vec<Monomial> = std.into_iter().filter(|m| m.degree() == d).collect();
            std.sort_by(|a, b| order.cmp(b, a));
            std.into_iter().map(|m| Polynomial::monomial(ring, m)).collect()
        };
        gens.extend(fresh);
    }
    IdealPresentation::new(ring, gens)
}

fn gate_char_two(field: Field, what: &'static str) -> Result<()> {
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicTwo(what));
    }
    Ok(())
}

/// `a!` for the exponent vector of `m`, as a field element.
fn factorial_weight(m: &Monomial, field: Field) -> Scalar {
    let mut w = field.one();
    for v in m.support() {
        for k in 2..=m.exp(v) as i64 {
            w = w.mul(&field.from_i64(k));
        }
    }
    w
}

type Trace<'a, 'b> = &'a mut Option<&'b mut Vec<Scalar>>;

/// Basis of the degree-2 component of `I`, as coefficient rows over `cols`.
fn quadric_part(ideal: &IdealPresentation, cols: &[Monomial], trace: Trace) -> Result<Vec<Polynomial>> {
    let ring = ideal.ring();
    let mut t = Vec::new();
    let gb = buchberger_traced(ring, ideal.gens(), &ideal.default_order(), &mut t);
    if let Some(tr) = trace.as_mut() {
        tr.extend(t);
    }
    let nfs: Vec<Polynomial> = cols.iter().map(|m| gb.normal_form(&Polynomial::monomial(ring, m.clone()))).collect();
    let mut targets: Vec<Monomial> = nfs.iter().flat_map(|p| p.support().cloned()).collect();
    targets.sort_by(grevlex_cmp);
    targets.dedup();
    let field = ring.field();
    // columns are the degree-2 monomials, rows their normal-form coordinates
    let m: Matrix = targets.iter().map(|t| nfs.iter().map(|p| p.coefficient(t)).collect()).collect();
    let ker = kernel_traced(&m, cols.len(), field, trace);
    Ok(ker.iter().map(|v| poly_from_vector(ring, cols, v)).collect())
}

fn perp_of(ring: &RingRef, quadrics: &[Polynomial], cols: &[Monomial], trace: Trace) -> Vec<Polynomial> {
    let field = ring.field();
    let weights: Vec<Scalar> = cols.iter().map(|m| factorial_weight(m, field)).collect();
    let m: Matrix = quadrics
        .iter()
        .map(|q| cols.iter().zip(&weights).map(|(c, w)| q.coefficient(c).mul(w)).collect())
        .collect();
    kernel_traced(&m, cols.len(), field, trace).iter().map(|v| poly_from_vector(ring, cols, v)).collect()
}

fn desc_quadric_monomials(n: usize) -> Vec<Monomial> {
    let order = MonomialOrder::grevlex(n);
    let mut cols = monomials_of_degree(n, 2);
    cols.sort_by(|a, b| order.cmp(b, a));
    cols
}

/// Basis of `(I_2)^⊥` under the differentiation pairing `⟨x^a, x^b⟩ = δ_ab·a!`.
pub fn perp_quadrics(ideal: &IdealPresentation) -> Result<Vec<Polynomial>> {
    gate_char_two(ideal.field(), "perp_quadrics")?;
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let cols = desc_quadric_monomials(ideal.nvars());
    let quadrics = quadric_part(ideal, &cols, &mut None)?;
    Ok(span_basis(ideal.ring(), &perp_of(ideal.ring(), &quadrics, &cols, &mut None), &cols))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    /// No quadratic Gröbner basis in any linear coordinates, over the
    /// algebraic closure of the field.
    NoQuadraticGbAfterAnyLinearChange,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub vars: Vec<String>,
    pub field: String,
    pub ideal: Vec<String>,
    pub artinian: bool,
    pub quadratically_generated: bool,
    pub quadric_space_dim: usize,
    pub perp_basis: Vec<String>,
    pub perp_artinian: bool,
    pub conclusion: Conclusion,
    /// Characteristics for which the conclusion is not claimed.
    pub excluded_characteristics: Vec<u64>,
    /// Integers left unfactored while searching for bad primes.
    pub unfactored: Vec<String>,
    pub caveat: String,
}

impl ObstructionReport {
    pub fn is_obstructed(&self) -> bool {
        self.conclusion == Conclusion::NoQuadraticGbAfterAnyLinearChange
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct ObstructionCore {
    artinian: bool,
    quadratically_generated: bool,
    quadric_space_dim: usize,
    perp_artinian: bool,
}

impl ObstructionCore {
    fn conclusion(&self) -> Conclusion {
        if self.artinian && self.quadratically_generated && self.perp_artinian {
            Conclusion::NoQuadraticGbAfterAnyLinearChange
        } else {
            Conclusion::Inconclusive
        }
    }
}

fn obstruction_core(ideal: &IdealPresentation, trace: Trace) -> Result<(ObstructionCore, Vec<Polynomial>)> {
    let ring = ideal.ring();
    let order = ideal.default_order();
    let cols = desc_quadric_monomials(ideal.nvars());
    let mut t = Vec::new();
    let gb = buchberger_traced(ring, ideal.gens(), &order, &mut t);
    let init = gb.initial_ideal();
    let artinian = init.is_artinian();
    let quadrics = quadric_part(ideal, &cols, trace)?;
    let sub = buchberger_traced(ring, &quadrics, &order, &mut t);
    let quadratically_generated = artinian && sub.initial_ideal().hilbert_vector() == init.hilbert_vector();
    let perp = perp_of(ring, &quadrics, &cols, trace);
    let jgb = buchberger_traced(ring, &perp, &order, &mut t);
    let perp_artinian = !perp.is_empty() && jgb.initial_ideal().is_artinian();
    if let Some(tr) = trace.as_mut() {
        tr.extend(t);
    }
    let core = ObstructionCore { artinian, quadratically_generated, quadric_space_dim: quadrics.len(), perp_artinian };
    Ok((core, perp))
}

/// Adds the prime factors of `n` to `out`; returns the cofactor left
/// after trial division when it could not be classified.
fn prime_factors(n: &BigInt, out: &mut BTreeSet<u64>) -> Option<BigInt> {
    let mut n = if n < &BigInt::zero() { -n } else { n.clone() };
    if n.is_zero() {
        return None;
    }
    let mut p: u64 = 2;
    while p < 1 << 20 {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        while (&n % &bp).is_zero() {
            out.insert(p);
            n /= &bp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        return None;
    }
    match n.to_u64() {
        Some(v) if is_prime(v) => {
            out.insert(v);
            None
        }
        _ => Some(n),
    }
}

/// Checks the hypotheses of the obstruction lemma: `S/I` Artinian, `I`
/// generated by quadrics, and `(I_2)^⊥` generating an Artinian ideal. Over
/// ℚ the computation is repeated modulo every prime dividing a pivot or
/// coefficient it used, and the primes where the outcome changes are
/// excluded alongside 2.
pub fn ert_obstruction(ideal: &IdealPresentation) -> Result<ObstructionReport> {
    gate_char_two(ideal.field(), "ert_obstruction")?;
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let mut trace = Vec::new();
    for g in ideal.gens() {
        trace.extend(g.terms().iter().map(|(_, c)| c.clone()));
    }
    let (core, perp) = obstruction_core(ideal, &mut Some(&mut trace))?;
    let conclusion = core.conclusion();
    let mut excluded = BTreeSet::new();
    let mut unfactored = Vec::new();
    match ideal.field() {
        Field::Rational => {
            excluded.insert(2);
            let mut candidates = BTreeSet::new();
            for s in &trace {
                if let Some(q) = s.as_rational() {
                    for part in [q.numer(), q.denom()] {
                        if let Some(rest) = prime_factors(&part, &mut candidates) {
                            unfactored.push(rest.to_string());
                        }
                    }
                }
            }
            for p in candidates.into_iter().filter(|&p| p > 2) {
                let flips = match ideal.change_field(Field::Prime(p as u32)) {
                    Ok(modp) => obstruction_core(&modp, &mut None)?.0.conclusion() != conclusion,
                    Err(_) => true,
                };
                if flips {
                    excluded.insert(p);
                }
            }
        }
        Field::Prime(_) => {}
    }
    unfactored.sort();
    unfactored.dedup();
    let excluded: Vec<u64> = excluded.into_iter().collect();
    let list = excluded.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
    let caveat = match ideal.field() {
        Field::Rational => format!("over an algebraically closed field of characteristic not in {{{list}}}"),
        Field::Prime(p) => format!("over the algebraic closure of GF({p})"),
    };
    Ok(ObstructionReport {
        vars: ideal.ring().names().to_vec(),
        field: ideal.field().to_string(),
        ideal: ideal.gens().iter().map(ToString::to_string).collect(),
        artinian: core.artinian,
        quadratically_generated: core.quadratically_generated,
        quadric_space_dim: core.quadric_space_dim,
        perp_basis: perp.iter().map(ToString::to_string).collect(),
        perp_artinian: core.perp_artinian,
        conclusion,
        excluded_characteristics: excluded,
        unfactored,
        caveat,
    })
}

/// A linear substitution `x_i ↦ map[i]` taking a quadric to `Σ λ_i x_i²`.
#[derive(Clone, Debug)]
pub struct QuadricDiagonalization {
    pub map: BTreeMap<usize, Polynomial>,
    pub diagonal: Polynomial,
    pub lambdas: Vec<Scalar>,
}

impl QuadricDiagonalization {
    /// Matrix of the substitution, row `i` holding the coefficients of `map[i]`.
    pub fn matrix(&self) -> Matrix {
        let n = self.diagonal.nvars();
        (0..n)
            .map(|i| (0..n).map(|j| self.map[&i].coefficient(&Monomial::variable(n, j))).collect())
            .collect()
    }

    pub fn is_invertible(&self) -> bool {
        rank(&self.matrix(), self.diagonal.nvars()) == self.diagonal.nvars()
    }
}

fn compose(map: &mut BTreeMap<usize, Polynomial>, step: &BTreeMap<usize, Polynomial>) -> Result<()> {
    for img in map.values_mut() {
        *img = img.substitute_linear(step)?;
    }
    Ok(())
}

/// Symmetric Gaussian elimination on a quadratic form.
#[allow(clippy::needless_range_loop)]
pub fn diagonalize_quadric(f: &Polynomial) -> Result<QuadricDiagonalization> {
    gate_char_two(f.field(), "diagonalize_quadric")?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_homogeneous() || f.total_degree()? != 2 {
        return Err(Error::Invalid("diagonalize_quadric expects a quadratic form".into()));
    }
    let ring = f.ring().clone();
    let n = ring.nvars();
    let field = ring.field();
    let var = |i: usize| Polynomial::var(&ring, i);
    let sq = |i: usize| Monomial::variable(n, i).mul(&Monomial::variable(n, i));
    let cross = |i: usize, j: usize| Monomial::variable(n, i).mul(&Monomial::variable(n, j));
    let mut map: BTreeMap<usize, Polynomial> = (0..n).map(|i| (i, var(i))).collect();
    let mut g = f.clone();
    let mut lambdas = vec![field.zero(); n];
    for k in 0..n {
        if (k..n).all(|i| g.coefficient(&sq(i)).is_zero()) {
            let Some((i, j)) =
                (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !g.coefficient(&cross(i, j)).is_zero())
            else {
                break;
            };
            // x_j ↦ x_j + x_i gives x_i² the coefficient of x_i x_j
            let step: BTreeMap<usize, Polynomial> = [(j, var(j).add(&var(i)))].into_iter().collect();
            g = g.substitute_linear(&step)?;
            compose(&mut map, &step)?;
        }
        let i = (k..n).find(|&i| !g.coefficient(&sq(i)).is_zero()).expect("a square term exists");
        if i != k {
            let swap: BTreeMap<usize, Polynomial> = [(i, var(k)), (k, var(i))].into_iter().collect();
            g = g.substitute_linear(&swap)?;
            compose(&mut map, &swap)?;
        }
        let a = g.coefficient(&sq(k));
        let two_a = a.add(&a);
        // x_k ↦ x_k - L/(2a), with L the cross terms of x_k
        let mut shift = var(k);
        for j in k + 1..n {
            let c = g.coefficient(&cross(k, j));
            if !c.is_zero() {
                shift = shift.sub(&var(j).scale(&c.div(&two_a)?));
            }
        }
        let complete: BTreeMap<usize, Polynomial> = [(k, shift)].into_iter().collect();
        g = g.substitute_linear(&complete)?;
        compose(&mut map, &complete)?;
        lambdas[k] = a;
    }
    Ok(QuadricDiagonalization { map, diagonal: g, lambdas })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grobner::hilbert_vector;
    use crate::parse::parse_polynomial;

    fn dual(names: &[&str], text: &str) -> Polynomial {
        parse_polynomial(&Ring::with_names(names, Field::Rational), text).unwrap()
    }

    fn act(names: &[&str], text: &str) -> Polynomial {
        parse_polynomial(&Ring::with_names(names, Field::Rational), text).unwrap()
    }

    const XYZT: [&str; 4] = ["x", "y", "z", "t"];
    const DXYZT: [&str; 4] = ["X", "Y", "Z", "T"];

    #[test]
    fn contraction_rule() {
        let f = dual(&["X", "Y"], "X*Y");
        assert_eq!(contract(&act(&["x", "y"], "x"), &f).unwrap().to_string(), "Y");
        assert!(contract(&act(&["x", "y"], "x^2"), &f).unwrap().is_zero());
        let cl = dual(&DXYZT, "X^2*Y + Y^2*Z + Z^2*T + T^2*X");
        let c = contract(&act(&XYZT, "x"), &cl).unwrap();
        assert_eq!(c, dual(&DXYZT, "X*Y + T^2"));
    }

    #[test]
    fn differentiation_weights() {
        let f = dual(&["X", "Y"], "X^3*Y");
        assert_eq!(differentiate(&act(&["x", "y"], "x^2"), &f).unwrap(), dual(&["X", "Y"], "6*X*Y"));
        assert_eq!(contract(&act(&["x", "y"], "x^2"), &f).unwrap(), dual(&["X", "Y"], "X*Y"));
    }

    #[test]
    fn clebsch_apolar_ideal() {
        let m = InverseSystemModule::from_polys(vec![dual(&DXYZT, "X^2*Y + Y^2*Z + Z^2*T + T^2*X")]).unwrap();
        assert_eq!((0..=3).map(|d| module_graded_dimension(&m, d)).collect::<Vec<_>>(), vec![1, 4, 4, 1]);
        let i = apolar_ideal(&m).unwrap();
        assert_eq!(i.gens().len(), 6);
        let expected: Vec<Polynomial> =
            ["x^2 - y*z", "y^2 - z*t", "z^2 - t*x", "t^2 - x*y", "x*z", "y*t"].iter().map(|s| act(&XYZT, s)).collect();
        let e = IdealPresentation::new(i.ring(), expected.iter().map(|p| p.change_ring(i.ring()).unwrap()).collect()).unwrap();
        assert!(i.gens().iter().all(|g| e.groebner(&e.default_order()).contains(g)));
        assert!(e.gens().iter().all(|g| i.groebner(&i.default_order()).contains(g)));
        assert_eq!(hilbert_vector(&i).unwrap(), Some(vec![1, 4, 4, 1]));
    }

    #[test]
    fn xy_apolar_ideal() {
        let m = InverseSystemModule::from_polys(vec![dual(&["X", "Y"], "X*Y")]).unwrap();
        let i = apolar_ideal(&m).unwrap();
        let shown: Vec<String> = i.gens().iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["x^2", "y^2"]);
    }

    #[test]
    fn module_checks() {
        let a = dual(&["X", "Y"], "X*Y");
        let b = dual(&["X", "Y"], "X");
        assert!(matches!(InverseSystemModule::from_polys(vec![a.clone(), b]), Err(Error::NotLevel)));
        assert!(matches!(
            InverseSystemModule::from_polys(vec![a.clone(), a.scale(&Field::Rational.from_i64(2))]),
            Err(Error::DependentGenerators)
        ));
        let m = InverseSystemModule::parse("dualvars: X, Y\nX*Y\nX^2\n").unwrap();
        assert_eq!(module_graded_dimension(&m, 2), 2);
        assert_eq!(module_graded_dimension(&m, 3), 0);
        assert!(InverseSystemModule::parse("vars: x\nx\n").is_err());
    }

    #[test]
    fn clebsch_perp_and_obstruction() {
        let i = IdealPresentation::parse(
            "vars: x, y, z, t\nx^2 - y*z\ny^2 - z*t\nz^2 - t*x\nt^2 - x*y\nx*z\ny*t\n",
        )
        .unwrap();
        let perp = perp_quadrics(&i).unwrap();
        let expected = ["x^2 + 2*y*z", "y^2 + 2*z*t", "z^2 + 2*x*t", "t^2 + 2*x*y"];
        let want = span_basis(i.ring(), &expected.iter().map(|s| parse_polynomial(i.ring(), s).unwrap()).collect::<Vec<_>>(), &desc_quadric_monomials(4));
        assert_eq!(perp, want);
        let r = ert_obstruction(&i).unwrap();
        assert!(r.is_obstructed());
        assert_eq!(r.excluded_characteristics, vec![2, 3, 5]);
        assert_eq!(r.quadric_space_dim, 6);
    }

    #[test]
    fn squares_block_obstruction() {
        let i = IdealPresentation::parse("vars: x, y\nx^2\nx*y\n").unwrap();
        let r = ert_obstruction(&i).unwrap();
        assert!(!r.is_obstructed());
        assert!(!r.artinian);
        let full = IdealPresentation::parse("vars: x, y\nx^2\nx*y\ny^2\n").unwrap();
        assert!(perp_quadrics(&full).unwrap().is_empty());
    }

    #[test]
    fn arithmetic_remark_perp() {
        // the kernel of the pairing is spanned by a·x² − y²
        let i = IdealPresentation::parse("vars: x, y\nx^2 + 3*y^2\nx*y\n").unwrap();
        let perp = perp_quadrics(&i).unwrap();
        assert_eq!(perp.len(), 1);
        assert_eq!(perp[0], parse_polynomial(i.ring(), "x^2 - 1/3*y^2").unwrap());
    }

    #[test]
    fn characteristic_two_rejected() {
        let i = IdealPresentation::parse("vars: x, y\nfield: GF(2)\nx*y\n").unwrap();
        assert!(matches!(perp_quadrics(&i), Err(Error::CharacteristicTwo(_))));
        assert!(matches!(ert_obstruction(&i), Err(Error::CharacteristicTwo(_))));
        assert!(matches!(diagonalize_quadric(&i.gens()[0]), Err(Error::CharacteristicTwo(_))));
    }

    fn check_diag(f: &Polynomial) -> QuadricDiagonalization {
        let d = diagonalize_quadric(f).unwrap();
        assert_eq!(f.substitute_linear(&d.map).unwrap(), d.diagonal);
        assert!(d.is_invertible());
        for (m, _) in d.diagonal.terms() {
            assert_eq!(m.support().count(), 1);
        }
        d
    }

    #[test]
    fn diagonalize_examples() {
        let r = ["x", "y"];
        let d = check_diag(&act(&r, "x*y"));
        let nz: Vec<&Scalar> = d.lambdas.iter().filter(|l| !l.is_zero()).collect();
        assert_eq!(nz.len(), 2);
        assert!(nz[0].is_negative() != nz[1].is_negative());
        let d = check_diag(&act(&r, "x^2"));
        assert_eq!(d.diagonal, act(&r, "x^2"));
        assert_eq!(d.map[&0], act(&r, "x"));
        let d = check_diag(&act(&r, "x^2 + 2*x*y + y^2"));
        assert_eq!(d.lambdas.iter().filter(|l| !l.is_zero()).count(), 1);
        check_diag(&act(&["a", "b", "c"], "b*c"));
        check_diag(&act(&["a", "b", "c", "d"], "a*b + c*d - 2*a*d + 3*b^2"));
    }
}
