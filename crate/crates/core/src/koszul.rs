//! Strong Koszulness with respect to the variables.
//!
//! For every proper subset `Y` of the variables and every `x ∉ Y` the colon
//! `(I + Y) : x` must equal `I + (V)` for a set of variables `V`. Since
//! `I ⊆ (I + Y) : x` always holds, the test reduces to: with `V` the
//! variables lying in the colon, every colon generator lies in `I + (V)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grobner::{colon_by_polynomial, colon_by_variable, GroebnerBasis};
use crate::ideal::IdealPresentation;
use crate::monomial::MonomialOrder;
use crate::poly::{Polynomial, Ring};
use crate::universal::{check_revlex_universal, UniversalGBReport, UniversalMode};

pub const DEFAULT_KOSZUL_CAP: usize = 12;
pub const CERTIFICATE_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum KoszulMode {
    Exhaustive { cap: usize },
    Sampled { count: usize, seed: u64 },
    /// Tidy, quadratic and revlex-universal generators imply the property.
    TheoremShortcut { universal: UniversalMode },
}

impl KoszulMode {
    pub fn exhaustive() -> Self {
        KoszulMode::Exhaustive { cap: DEFAULT_KOSZUL_CAP }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Certified,
    NotStronglyKoszul,
    NoCounterexampleFound,
    Inconclusive,
}

/// One checked pair: `(I + Y) : x = I + (V)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    #[serde(rename = "Y")]
    pub y: Vec<String>,
    pub x: String,
    #[serde(rename = "V")]
    pub v: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulWitness {
    #[serde(rename = "Y")]
    pub y: Vec<String>,
    pub x: String,
    /// Variables contained in the colon.
    #[serde(rename = "V")]
    pub v: Vec<String>,
    /// A colon generator outside `I + (V)`.
    pub generator: String,
    /// Its normal form modulo `I + (V)`.
    pub residue: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StrongKoszulCertificate {
    pub schema: u32,
    pub ideal_hash: String,
    pub vars: Vec<String>,
    pub mode: KoszulMode,
    pub pairs_checked: u64,
    pub pairs: Vec<PairRecord>,
    pub verdict: Verdict,
    pub witness: Option<KoszulWitness>,
    pub universal: Option<UniversalGBReport>,
}

impl StrongKoszulCertificate {
    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

fn mask_of(vars: &[usize]) -> u64 {
    vars.iter().fold(0, |m, &v| m | (1 << v))
}

fn vars_of(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn names_of(ring: &Ring, vars: &[usize]) -> Vec<String> {
    vars.iter().map(|&v| ring.names()[v].clone()).collect()
}

/// Generators of `I + Y` with the generators of `I` projected modulo `Y`.
fn plus_variables(ideal: &IdealPresentation, ys: &[usize]) -> Result<IdealPresentation> {
    let ring = ideal.ring();
    let mut gens: Vec<Polynomial> = ideal.gens().iter().map(|g| g.set_variables_to_zero(ys)).collect();
    gens.extend(ys.iter().map(|&y| Polynomial::var(ring, y)));
    IdealPresentation::new(ring, gens)
}

/// Reduced Gröbner basis of `(I + Y) : x`, in revlex with `x` smallest.
pub fn colon_variables(ideal: &IdealPresentation, ys: &[usize], x: usize) -> Result<GroebnerBasis> {
    if ys.contains(&x) {
        return Err(Error::Invalid("x must not lie in Y".into()));
    }
    colon_by_variable(&plus_variables(ideal, ys)?, x)
}

/// Same colon through the elimination route; used as an independent check.
pub fn colon_variables_by_elimination(ideal: &IdealPresentation, ys: &[usize], x: usize) -> Result<Vec<Polynomial>> {
    let p = plus_variables(ideal, ys)?;
    colon_by_polynomial(&p, &Polynomial::var(ideal.ring(), x))
}

/// Memo of grevlex bases of `I + (V)` keyed by the bitmask of `V`.
struct Memo<'a> {
    ideal: &'a IdealPresentation,
    bases: Mutex<HashMap<u64, Arc<GroebnerBasis>>>,
}

impl<'a> Memo<'a> {
    fn new(ideal: &'a IdealPresentation) -> Self {
        Memo { ideal, bases: Mutex::new(HashMap::new()) }
    }

    fn get(&self, mask: u64) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.bases.lock().expect("memo lock").get(&mask) {
            return Ok(gb.clone());
        }
        let n = self.ideal.nvars();
        let p = plus_variables(self.ideal, &vars_of(mask, n))?;
        let gb = p.groebner(&MonomialOrder::grevlex(n));
        Ok(self.bases.lock().expect("memo lock").entry(mask).or_insert(gb).clone())
    }
}

enum PairOutcome {
    Ok(u64),
    Fail { v: u64, generator: Polynomial, residue: Polynomial },
}

/// Decides whether `(I + Y) : x` is generated by variables modulo `I`.
fn check_pair(memo: &Memo, ys: &[usize], x: usize) -> Result<PairOutcome> {
    let ideal = memo.ideal;
    let n = ideal.nvars();
    let ring = ideal.ring();
    let ymask = mask_of(ys);
    let iy = memo.get(ymask)?;
    if iy.contains(&Polynomial::var(ring, x)) {
        return Ok(PairOutcome::Ok((1u64 << n) - 1));
    }
    let colon = colon_variables(ideal, ys, x)?;
    let mut vmask = ymask;
    for v in (0..n).filter(|v| !ys.contains(v)) {
        if colon.contains(&Polynomial::var(ring, v)) {
            vmask |= 1 << v;
        }
    }
    let iv = memo.get(vmask)?;
    for h in colon.basis() {
        let r = iv.normal_form(h);
        if !r.is_zero() {
            return Ok(PairOutcome::Fail { v: vmask, generator: h.clone(), residue: r });
        }
    }
    Ok(PairOutcome::Ok(vmask))
}

/// Checks one pair `(Y, x)`; returns the witness when the colon is not
/// generated by variables modulo `I`.
pub fn check_koszul_pair(ideal: &IdealPresentation, ys: &[usize], x: usize) -> Result<Option<KoszulWitness>> {
    let n = ideal.nvars();
    if x >= n || ys.iter().any(|&y| y >= n) {
        return Err(Error::Arity { expected: n, found: ys.iter().copied().chain([x]).max().unwrap_or(0) + 1 });
    }
    match check_pair(&Memo::new(ideal), ys, x)? {
        PairOutcome::Ok(_) => Ok(None),
        PairOutcome::Fail { v, generator, residue } => Ok(Some(witness_for(ideal, ys, x, v, &generator, &residue))),
    }
}

/// All proper subsets of `0..n`, by size and then lexicographically.
pub fn subsets_in_sweep_order(n: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for k in 0..n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// `(Y, x)` pairs in sweep order: subsets by size then lexicographically,
/// `x` in declaration order.
pub fn pairs_in_sweep_order(n: usize) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    for ys in subsets_in_sweep_order(n) {
        for x in (0..n).filter(|x| !ys.contains(x)) {
            out.push((ys.clone(), x));
        }
    }
    out
}

fn witness_for(ideal: &IdealPresentation, ys: &[usize], x: usize, v: u64, generator: &Polynomial, residue: &Polynomial) -> KoszulWitness {
    let ring = ideal.ring();
    KoszulWitness {
        y: names_of(ring, ys),
        x: ring.names()[x].clone(),
        v: names_of(ring, &vars_of(v, ideal.nvars())),
        generator: generator.to_string(),
        residue: residue.to_string(),
    }
}

fn new_certificate(ideal: &IdealPresentation, mode: KoszulMode) -> StrongKoszulCertificate {
    StrongKoszulCertificate {
        schema: CERTIFICATE_SCHEMA,
        ideal_hash: ideal.hash(),
        vars: ideal.ring().names().to_vec(),
        mode,
        pairs_checked: 0,
        pairs: Vec::new(),
        verdict: Verdict::Inconclusive,
        witness: None,
        universal: None,
    }
}

pub fn strong_koszul_certify(ideal: &IdealPresentation, mode: KoszulMode) -> Result<StrongKoszulCertificate> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = ideal.nvars();
    if n > 63 {
        return Err(Error::Invalid("at most 63 variables are supported".into()));
    }
    let mut cert = new_certificate(ideal, mode);
    match mode {
        KoszulMode::TheoremShortcut { universal } => {
            let report = check_revlex_universal(ideal.gens(), universal)?;
            // a sampled universality check stands in for all n! orders; the
            // embedded report records which mode was used
            cert.verdict = if report.universal && report.is_tidy_set && report.is_quadratic {
                Verdict::Certified
            } else {
                Verdict::Inconclusive
            };
            cert.universal = Some(report);
        }
        KoszulMode::Exhaustive { cap } => {
            if n > cap {
                return Err(Error::CapExceeded { what: "exhaustive strong-Koszul certification", n, cap });
            }
            let memo = Memo::new(ideal);
            let pairs = pairs_in_sweep_order(n);
            // chunks follow the sweep order, so the first failing chunk holds the least witness
            for block in pairs.chunks(64) {
                let outcomes: Vec<Result<PairOutcome>> =
                    block.par_iter().map(|(ys, x)| check_pair(&memo, ys, *x)).collect();
                for ((ys, x), out) in block.iter().zip(outcomes) {
                    cert.pairs_checked += 1;
                    match out? {
                        PairOutcome::Ok(v) => cert.pairs.push(PairRecord {
                            y: names_of(ideal.ring(), ys),
                            x: ideal.ring().names()[*x].clone(),
                            v: names_of(ideal.ring(), &vars_of(v, n)),
                        }),
                        PairOutcome::Fail { v, generator, residue } => {
                            cert.verdict = Verdict::NotStronglyKoszul;
                            cert.witness = Some(witness_for(ideal, ys, *x, v, &generator, &residue));
                            return Ok(cert);
                        }
                    }
                }
            }
            cert.verdict = Verdict::Certified;
        }
        KoszulMode::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut drawn: Vec<(Vec<usize>, usize)> = Vec::with_capacity(count);
            if n > 0 {
                for _ in 0..count {
                    let x = rng.gen_range(0..n);
                    let ys: Vec<usize> = (0..n).filter(|&v| v != x && rng.gen_bool(0.5)).collect();
                    drawn.push((ys, x));
                }
            }
            let memo = Memo::new(ideal);
            let outcomes: Vec<Result<PairOutcome>> = drawn.par_iter().map(|(ys, x)| check_pair(&memo, ys, *x)).collect();
            let mut fails = Vec::new();
            for ((ys, x), out) in drawn.iter().zip(outcomes) {
                cert.pairs_checked += 1;
                if let PairOutcome::Fail { v, generator, residue } = out? {
                    fails.push((ys.len(), ys.clone(), *x, v, generator, residue));
                }
            }
            fails.sort_by(|a, b| (a.0, &a.1, a.2).cmp(&(b.0, &b.1, b.2)));
            cert.verdict = match fails.first() {
                Some((_, ys, x, v, g, r)) => {
                    cert.witness = Some(witness_for(ideal, ys, *x, *v, g, r));
                    Verdict::NotStronglyKoszul
                }
                None => Verdict::NoCounterexampleFound,
            };
        }
    }
    Ok(cert)
}

/// Re-checks every stored pair of a certificate using only elimination
/// colons and normal forms: each `v ∈ V` has `v·x ∈ I + Y`, and every colon
/// generator reduces to zero modulo `I + (V)`.
pub fn verify_certificate(ideal: &IdealPresentation, cert: &StrongKoszulCertificate) -> Result<bool> {
    let ring = ideal.ring();
    if cert.vars != ring.names() || cert.ideal_hash != ideal.hash() {
        return Ok(false);
    }
    let idx = |names: &[String]| names.iter().map(|s| ring.index_of(s)).collect::<Result<Vec<_>>>();
    for rec in &cert.pairs {
        let ys = idx(&rec.y)?;
        let x = ring.index_of(&rec.x)?;
        let vs = idx(&rec.v)?;
        let iy = plus_variables(ideal, &ys)?;
        let gb_y = crate::grobner::buchberger_polys(ring, iy.gens(), &ideal.default_order(), &Default::default());
        let xp = Polynomial::var(ring, x);
        for &v in &vs {
            if !gb_y.contains(&Polynomial::var(ring, v).mul(&xp)) {
                return Ok(false);
            }
        }
        let iv = plus_variables(ideal, &vs)?;
        let gb_v = crate::grobner::buchberger_polys(ring, iv.gens(), &ideal.default_order(), &Default::default());
        for h in colon_by_polynomial(&iy, &xp)? {
            if !gb_v.contains(&h) {
                return Ok(false);
            }
        }
    }
    Ok(cert.verdict != Verdict::Certified || cert.pairs.len() as u64 == cert.pairs_checked)
}

/// Presentation of `S/(I + (A))` on the variables outside `A`.
pub fn quotient_by_variables(ideal: &IdealPresentation, a: &[usize]) -> Result<IdealPresentation> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let keep: Vec<usize> = (0..n).filter(|v| !a.contains(v)).collect();
    let new_ring = Ring::new(names_of(ring, &keep), ring.field())?;
    let gens = ideal
        .gens()
        .iter()
        .map(|g| g.set_variables_to_zero(a))
        .filter(|g| !g.is_zero())
        .map(|g| {
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| {
                    let e: Vec<u16> = keep.iter().map(|&v| m.exp(v)).collect();
                    (crate::monomial::Monomial::from_slice(&e), c.clone())
                })
                .collect();
            Polynomial::from_terms(&new_ring, terms)
        })
        .collect();
    IdealPresentation::new(&new_ring, gens)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Tensor,
    Fiber,
}

#[derive(Clone, Debug)]
pub struct ProductPresentation {
    pub ideal: IdealPresentation,
    /// 1 or 2 for each combined variable.
    pub factor: Vec<u8>,
    pub kind: ProductKind,
}

fn product(i1: &IdealPresentation, i2: &IdealPresentation, kind: ProductKind) -> Result<ProductPresentation> {
    if i1.field() != i2.field() {
        return Err(Error::Invalid("factors over different fields".into()));
    }
    let (n1, n2) = (i1.nvars(), i2.nvars());
    let mut names = i1.ring().names().to_vec();
    for name in i2.ring().names() {
        let mut cand = name.clone();
        let mut k = 2;
        while names.contains(&cand) || (cand != *name && i2.ring().names().contains(&cand)) {
            cand = format!("{name}_{k}");
            k += 1;
        }
        names.push(cand);
    }
    let ring = Ring::new(names, i1.field())?;
    let m1: Vec<usize> = (0..n1).collect();
    let m2: Vec<usize> = (n1..n1 + n2).collect();
    let mut gens: Vec<Polynomial> = i1.gens().iter().map(|g| g.remap(&ring, &m1)).collect();
    gens.extend(i2.gens().iter().map(|g| g.remap(&ring, &m2)));
    if kind == ProductKind::Fiber {
        for a in 0..n1 {
            for b in n1..n1 + n2 {
                gens.push(Polynomial::var(&ring, a).mul(&Polynomial::var(&ring, b)));
            }
        }
    }
    let factor = std::iter::repeat_n(1, n1).chain(std::iter::repeat_n(2, n2)).collect();
    Ok(ProductPresentation { ideal: IdealPresentation::new(&ring, gens)?, factor, kind })
}

/// `S1/I1 ⊗ S2/I2`; clashing names in the second factor get a `_k` suffix.
pub fn tensor_presentation(i1: &IdealPresentation, i2: &IdealPresentation) -> Result<ProductPresentation> {
    product(i1, i2, ProductKind::Tensor)
}

/// Fiber product over the residue field: tensor plus all cross products.
pub fn fiber_presentation(i1: &IdealPresentation, i2: &IdealPresentation) -> Result<ProductPresentation> {
    product(i1, i2, ProductKind::Fiber)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(text: &str) -> IdealPresentation {
        IdealPresentation::parse(text).unwrap()
    }

    #[test]
    fn sweep_order() {
        let p = pairs_in_sweep_order(3);
        assert_eq!(p.len(), 3 * 4);
        assert_eq!(p[0], (vec![], 0));
        assert_eq!(p[3], (vec![0], 1));
        assert_eq!(p.last().unwrap(), &(vec![1, 2], 0));
    }

    #[test]
    fn remark_ideal_certified() {
        let i = ideal("vars: x1, x2, x3\nfield: QQ\nx1*x3 - x2^2\nx2*x3\nx3^2\n");
        let c = strong_koszul_certify(&i, KoszulMode::exhaustive()).unwrap();
        assert_eq!(c.verdict, Verdict::Certified);
        assert_eq!(c.pairs.len(), 12);
        assert!(verify_certificate(&i, &c).unwrap());
    }

    #[test]
    fn non_variable_colon_fails() {
        let i = ideal("vars: x, y\nfield: QQ\nx^2 - x*y\n");
        let c = strong_koszul_certify(&i, KoszulMode::exhaustive()).unwrap();
        assert_eq!(c.verdict, Verdict::NotStronglyKoszul);
        let w = c.witness.unwrap();
        assert_eq!((w.y.len(), w.x.as_str()), (0, "x"));
        assert_eq!(w.generator, "-x + y");
    }

    #[test]
    fn colon_examples() {
        let i = ideal("vars: x, y\nfield: QQ\nx^2 - x*y\n");
        let c = colon_variables(&i, &[], 0).unwrap();
        assert_eq!(c.basis().len(), 1);
        let e = colon_variables_by_elimination(&i, &[], 0).unwrap();
        assert_eq!(e[0].to_string(), "x - y");
        let sq = ideal("vars: x\nfield: QQ\nx^2\n");
        assert_eq!(colon_variables(&sq, &[], 0).unwrap().basis()[0].to_string(), "x");
    }

    #[test]
    fn products() {
        let a = ideal("vars: x\nfield: QQ\nx^2\n");
        let b = ideal("vars: y\nfield: QQ\ny^2\n");
        let f = fiber_presentation(&a, &b).unwrap();
        let s: Vec<String> = f.ideal.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(s, ["x^2", "y^2", "x*y"]);
        let t = tensor_presentation(&a, &a).unwrap();
        assert_eq!(t.ideal.ring().names(), ["x", "x_2"]);
        assert_eq!(t.ideal.gens().len(), 2);
        assert_eq!(t.factor, vec![1, 2]);
    }

    #[test]
    fn quotients() {
        let i = ideal("vars: x1, x2, x3\nfield: QQ\nx1*x3 - x2^2\nx2*x3\nx3^2\n");
        assert_eq!(quotient_by_variables(&i, &[]).unwrap().gens(), i.gens());
        let z = quotient_by_variables(&i, &[0, 1, 2]).unwrap();
        assert_eq!(z.nvars(), 0);
        assert!(z.gens().is_empty());
        let q = quotient_by_variables(&i, &[2]).unwrap();
        assert_eq!(q.ring().names(), ["x1", "x2"]);
        assert_eq!(q.gens()[0].to_string(), "-x2^2");
    }

    #[test]
    fn sampled_never_certifies() {
        let i = ideal("vars: x, y\nfield: QQ\nx^2\ny^2\n");
        let c = strong_koszul_certify(&i, KoszulMode::Sampled { count: 20, seed: 1 }).unwrap();
        assert_eq!(c.verdict, Verdict::NoCounterexampleFound);
    }
}
