//! The twelve acceptance checks, runnable from tests and the command line.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::apolarity::{
    apolar_ideal, contract, differentiate, diagonalize_quadric, ert_obstruction, module_graded_dimension, InverseSystemModule,
};
use crate::error::Error;
use crate::field::Field;
use crate::gallery::{self, MatrixShape};
use crate::grobner::{
    buchberger_polys, colon_by_polynomial, hilbert_function, hilbert_vector, is_groebner_basis, BuchbergerOptions,
};
use crate::ideal::IdealPresentation;
use crate::koszul::{
    check_koszul_pair, colon_variables, fiber_presentation, strong_koszul_certify, tensor_presentation, verify_certificate,
    KoszulMode, Verdict,
};
use crate::linalg::{rank, Matrix};
use crate::monomial::{monomials_of_degree, Monomial, MonomialOrder};
use crate::parse::parse_polynomial;
use crate::poly::{Polynomial, Ring, RingRef};
use crate::universal::{check_revlex_universal, project_universal_gb, UniversalMode};

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
    /// Run the optional 9! exhaustive universality check.
    pub full: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0, samples: crate::universal::DEFAULT_SAMPLES, full: false }
    }
}

impl SuiteConfig {
    fn sampled(&self) -> UniversalMode {
        UniversalMode::Sampled { count: self.samples, seed: self.seed }
    }
}

#[derive(Debug)]
pub struct CheckFailure(pub String);

impl From<Error> for CheckFailure {
    fn from(e: Error) -> Self {
        CheckFailure(e.to_string())
    }
}

impl From<String> for CheckFailure {
    fn from(s: String) -> Self {
        CheckFailure(s)
    }
}

type Outcome = Result<Vec<String>, CheckFailure>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(CheckFailure(format!($($fmt)*)));
        }
    };
}

pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub tag: &'static str,
    run: fn(&SuiteConfig) -> Outcome,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: u32,
    pub name: String,
    pub tag: String,
    pub passed: bool,
    pub seconds: f64,
    pub details: Vec<String>,
    pub failure: Option<String>,
}

impl CheckResult {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("criterion {:>2} [{}] {:<12} {} ({:.1}s)", self.id, status, self.tag, self.name, self.seconds);
        if let Some(f) = &self.failure {
            s.push_str(&format!(": {f}"));
        }
        s
    }
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, name: "order-dependent Groebner basis of a tidy ideal", tag: "remark", run: c1_remark },
        Criterion { id: 2, name: "2-minors are revlex-universal", tag: "minors", run: c2_minors },
        Criterion { id: 3, name: "Grassmannian Gr(2,5) is not strongly Koszul", tag: "grassmannian", run: c3_grassmannian },
        Criterion { id: 4, name: "Hilbert functions of minor and Pfaffian inverse systems", tag: "hilbert", run: c4_hilbert },
        Criterion { id: 5, name: "explicit apolar quadrics", tag: "apolar", run: c5_apolar },
        Criterion { id: 6, name: "27 lines and the Cayley cubic", tag: "severi", run: c6_cayley },
        Criterion { id: 7, name: "Veronese, Segre and Pluecker secant cubics", tag: "severi-i-iii", run: c7_severi_small },
        Criterion { id: 8, name: "four-variable Gorenstein counterexample", tag: "clebsch", run: c8_clebsch },
        Criterion { id: 9, name: "cycle family counterexamples", tag: "cycle", run: c9_cycle },
        Criterion { id: 10, name: "tensor and fiber products", tag: "products", run: c10_products },
        Criterion { id: 11, name: "quadric hypersurfaces", tag: "quadric", run: c11_quadrics },
        Criterion { id: 12, name: "invariant oracles", tag: "invariants", run: c12_invariants },
    ]
}

/// Whether `filter` selects the criterion: its number or its tag.
pub fn selects(c: &Criterion, filter: &str) -> bool {
    filter.split(',').map(str::trim).any(|f| f == c.tag || f.parse::<u32>().ok() == Some(c.id))
}

pub fn run_criterion(c: &Criterion, cfg: &SuiteConfig) -> CheckResult {
    let start = Instant::now();
    let out = (c.run)(cfg);
    let seconds = start.elapsed().as_secs_f64();
    let (passed, details, failure) = match out {
        Ok(d) => (true, d, None),
        Err(CheckFailure(f)) => (false, Vec::new(), Some(f)),
    };
    CheckResult { id: c.id, name: c.name.into(), tag: c.tag.into(), passed, seconds, details, failure }
}

/// Runs every criterion selected by `filter` (all when `None`).
pub fn run_suite(filter: Option<&str>, cfg: &SuiteConfig) -> Vec<CheckResult> {
    criteria()
        .iter()
        .filter(|c| filter.is_none_or(|f| selects(c, f)))
        .map(|c| run_criterion(c, cfg))
        .collect()
}

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

fn order_of(ring: &RingRef, spec: &str) -> Result<MonomialOrder, CheckFailure> {
    Ok(MonomialOrder::parse(spec, ring.names())?)
}

/// Both generator lists generate the same ideal.
fn same_ideal(a: &IdealPresentation, b: &[Polynomial]) -> Result<bool, CheckFailure> {
    let b = IdealPresentation::new(a.ring(), b.iter().map(|p| p.change_ring(a.ring())).collect::<Result<Vec<_>, _>>()?)?;
    let ga = a.groebner(&a.default_order());
    let gb = b.groebner(&b.default_order());
    Ok(b.gens().iter().all(|g| ga.contains(g)) && a.gens().iter().all(|g| gb.contains(g)))
}

fn c1_remark(_: &SuiteConfig) -> Outcome {
    let ideal = gallery::remark_ideal(Field::Rational)?;
    let ring = ideal.ring().clone();
    let natural = ideal.groebner(&order_of(&ring, "revlex:x1,x2,x3")?);
    ensure!(natural.max_degree() == 2, "GB under x1>x2>x3 has degree {}", natural.max_degree());
    let twisted = ideal.groebner(&order_of(&ring, "revlex:x3,x1,x2")?);
    let cube = parse_polynomial(&ring, "x2^3")?;
    ensure!(twisted.basis().contains(&cube), "x2^3 missing from the GB under x3>x1>x2");
    let cert = strong_koszul_certify(&ideal, KoszulMode::exhaustive())?;
    ensure!(cert.is_certified(), "not certified: {:?}", cert.witness);
    ensure!(cert.pairs_checked == 12, "{} pairs checked", cert.pairs_checked);
    ensure!(verify_certificate(&ideal, &cert)?, "certificate failed independent verification");
    let uni = check_revlex_universal(ideal.gens(), UniversalMode::exhaustive())?;
    ensure!(!uni.universal, "generators reported universal");
    Ok(vec![
        format!("GB sizes {} and {}", natural.len(), twisted.len()),
        format!("least failing order {}", uni.witness.map(|w| w.order).unwrap_or_default()),
    ])
}

fn universal_exhaustive(ideal: &IdealPresentation, expected_orders: u64) -> Result<(), CheckFailure> {
    let r = check_revlex_universal(ideal.gens(), UniversalMode::exhaustive())?;
    ensure!(r.universal, "not universal: {:?}", r.witness);
    ensure!(r.orders_checked == expected_orders, "{} orders checked", r.orders_checked);
    ensure!(r.is_tidy_set && r.is_quadratic, "not tidy and quadratic");
    Ok(())
}

fn c2_minors(cfg: &SuiteConfig) -> Outcome {
    let mut notes = Vec::new();
    universal_exhaustive(&gallery::minors2(&MatrixShape::generic(2, 3), Field::Rational)?, 720)?;
    universal_exhaustive(&gallery::minors2(&MatrixShape::symmetric(3), Field::Rational)?, 720)?;
    let g33 = gallery::minors2(&MatrixShape::generic(3, 3), Field::Rational)?;
    let r = check_revlex_universal(g33.gens(), cfg.sampled())?;
    ensure!(r.universal && r.is_tidy_set && r.is_quadratic, "generic 3x3 failed: {:?}", r.witness);
    notes.push(format!("generic 3x3: {} sampled orders", r.orders_checked));
    if cfg.full {
        let r = check_revlex_universal(g33.gens(), UniversalMode::Exhaustive { cap: 9 })?;
        ensure!(r.universal && r.orders_checked == 362_880, "generic 3x3 exhaustive failed");
        notes.push("generic 3x3: all 362880 orders".into());
    }
    let sparse = [
        (MatrixShape::generic(3, 3), vec![(0, 0), (1, 2)]),
        (MatrixShape::generic(2, 3), vec![(0, 1)]),
        (MatrixShape::symmetric(3), vec![(0, 0), (1, 2)]),
        (MatrixShape::symmetric(4), vec![(0, 3), (2, 2)]),
    ];
    for (dense_shape, zeros) in sparse {
        let dense = gallery::minors2(&dense_shape, Field::Rational)?;
        let shape = dense_shape.clone().with_zeros(zeros)?;
        let s = gallery::minors2(&shape, Field::Rational)?;
        let killed: Vec<usize> = {
            let (r, c) = shape.dims();
            let mut v: BTreeSet<usize> = BTreeSet::new();
            for &(i, j) in &shape.zeros {
                if i < r && j < c {
                    v.extend(dense_shape.entry(i, j).map(|e| e.0));
                }
            }
            v.into_iter().collect()
        };
        let projected = project_universal_gb(dense.gens(), &killed);
        ensure!(
            projected.len() == s.gens().len() && projected.iter().all(|p| s.gens().contains(p) || s.gens().contains(&p.neg())),
            "sparse minors differ from the projection for {:?}",
            shape.zeros
        );
        let r = check_revlex_universal(&projected, cfg.sampled())?;
        ensure!(r.universal && r.is_tidy_set, "projection of {:?} not universal", shape.kind);
    }
    notes.push("4 sparse shapes pass via projection".into());
    Ok(notes)
}

fn names_to_indices(ring: &Ring, names: &[&str]) -> Result<Vec<usize>, CheckFailure> {
    names.iter().map(|s| ring.index_of(s).map_err(CheckFailure::from)).collect()
}

fn c3_grassmannian(_: &SuiteConfig) -> Outcome {
    let pf = gallery::pfaffians(5, 4, Field::Rational)?;
    let ring = pf[0].ring().clone();
    let ideal = IdealPresentation::new(&ring, pf)?;
    let ring = ideal.ring().clone();
    let cert = strong_koszul_certify(&ideal, KoszulMode::exhaustive())?;
    ensure!(cert.verdict == Verdict::NotStronglyKoszul, "verdict {:?}", cert.verdict);
    let w = cert.witness.clone().ok_or_else(|| CheckFailure("no witness".into()))?;
    let ys = names_to_indices(&ring, &["x23", "x35", "x45"])?;
    let x = ring.index_of("x24")?;
    let colon = colon_variables(&ideal, &ys, x)?;
    let target = parse_polynomial(&ring, "x13*x15")?;
    ensure!(colon.contains(&target), "x13*x15 is not in the colon");
    let pw = check_koszul_pair(&ideal, &ys, x)?.ok_or_else(|| CheckFailure("the stated pair does not fail".into()))?;
    let vs: Vec<&str> = pw.v.iter().map(String::as_str).collect();
    let iv = ideal.plus(&names_to_indices(&ring, &vs)?.iter().map(|&v| Polynomial::var(&ring, v)).collect::<Vec<_>>())?;
    ensure!(!iv.groebner(&iv.default_order()).contains(&target), "x13*x15 lies in I + (V)");
    Ok(vec![
        format!("{} pairs checked before the first failure", cert.pairs_checked),
        format!("sweep witness Y={:?} x={} generator {}", w.y, w.x, w.generator),
        format!("stated witness Y={:?} x={} V={:?}: x13*x15 in the colon, outside I+(V)", pw.y, pw.x, pw.v),
    ])
}

fn hilbert_matches(m: &InverseSystemModule, expected: &[u64]) -> Result<(), CheckFailure> {
    let a = apolar_ideal(m)?;
    let s = m.degree();
    let hf = hilbert_function(&a, 0..s + 2)?;
    let mut want = expected.to_vec();
    want.push(0);
    ensure!(hf == want, "HF {hf:?}, expected {want:?}");
    for d in 0..=s {
        ensure!(module_graded_dimension(m, d) as u64 == expected[d as usize], "dim M_{d} mismatch");
    }
    Ok(())
}

fn c4_hilbert(_: &SuiteConfig) -> Outcome {
    let mut notes = Vec::new();
    for (m, n) in [(2, 2), (2, 3), (3, 3)] {
        let want: Vec<u64> = (0..=m).map(|s| binom(m, s) * binom(n, s)).collect();
        hilbert_matches(&gallery::maximal_minors_module(m, n, Field::Rational)?, &want)?;
        notes.push(format!("{m}x{n} minors: {want:?}"));
    }
    for big_n in [4, 5, 6] {
        let want: Vec<u64> = (0..=big_n / 2).map(|s| binom(big_n, 2 * s)).collect();
        hilbert_matches(&gallery::pfaffian_module(big_n, Field::Rational)?, &want)?;
        notes.push(format!("N={big_n} Pfaffians: {want:?}"));
    }
    Ok(notes)
}

fn apolar_case(m: &InverseSystemModule, set: &[Polynomial], count: u64, cfg: &SuiteConfig) -> Result<String, CheckFailure> {
    ensure!(set.len() as u64 == count, "{} listed quadrics, expected {count}", set.len());
    let a = apolar_ideal(m)?;
    ensure!(same_ideal(&a, set)?, "apolar ideal differs from the listed set");
    let cert = strong_koszul_certify(&a.with_gens(set.to_vec())?, KoszulMode::TheoremShortcut { universal: cfg.sampled() })?;
    let rep = cert.universal.as_ref().ok_or_else(|| CheckFailure("missing universality report".into()))?;
    ensure!(rep.universal && rep.is_tidy_set && rep.is_quadratic, "sampled universality failed: {:?}", rep.witness);
    ensure!(cert.is_certified(), "theorem shortcut did not certify");
    Ok(format!("{} quadrics in {} variables, {} sampled orders", set.len(), a.nvars(), rep.orders_checked))
}

fn c5_apolar(cfg: &SuiteConfig) -> Outcome {
    let mut notes = Vec::new();
    for (m, n) in [(2, 2), (2, 3), (3, 3)] {
        let module = gallery::maximal_minors_module(m, n, Field::Rational)?;
        let set = gallery::minors_apolar_gens(m, n, Field::Rational)?;
        notes.push(format!("minors {m}x{n}: {}", apolar_case(&module, &set, binom(m + 1, 2) * binom(n + 1, 2), cfg)?));
    }
    for big_n in [4, 5, 6] {
        let module = gallery::pfaffian_module(big_n, Field::Rational)?;
        let set = gallery::pfaffian_apolar_gens(big_n, Field::Rational)?;
        let count = binom(big_n, 2) + 3 * binom(big_n, 3) + 3 * binom(big_n, 4);
        notes.push(format!("Pfaffians N={big_n}: {}", apolar_case(&module, &set, count, cfg)?));
    }
    let set = gallery::minors_apolar_gens(2, 2, Field::Rational)?;
    let ideal = IdealPresentation::new(&set[0].ring().clone(), set)?;
    let cert = strong_koszul_certify(&ideal, KoszulMode::exhaustive())?;
    ensure!(cert.is_certified() && cert.pairs_checked == 32, "exhaustive 2x2 certification failed");
    notes.push("2x2 exhaustively certified over 32 pairs".into());
    Ok(notes)
}

fn structured_orders() -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..27).collect();
    let rev: Vec<usize> = (0..27).rev().collect();
    let c_first: Vec<usize> = (12..27).chain(0..12).collect();
    let interleaved: Vec<usize> = (0..6).flat_map(|i| [i, 6 + i]).chain(12..27).collect();
    let b_first: Vec<usize> = (6..12).chain((12..27).rev()).chain(0..6).collect();
    vec![id, rev, c_first, interleaved, b_first]
}

fn c6_cayley(cfg: &SuiteConfig) -> Outcome {
    let l = gallery::lines27();
    ensure!(l.lines.len() == 27 && l.planes.len() == 45, "wrong line or plane count");
    ensure!((0..27).all(|x| l.planes_through(x).len() == 5), "a line is not in exactly 5 planes");
    let lemma = gallery::verify_lemma_27lines(&l);
    ensure!(lemma.holds(), "incidence lemma fails: {lemma:?}");
    ensure!(lemma.four_subsets_checked == 17_550 && lemma.line_plane_pairs_checked == 1080, "wrong sweep sizes");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut orders = structured_orders();
    for _ in 0..50 {
        let mut r: Vec<usize> = (0..27).collect();
        r.shuffle(&mut rng);
        orders.push(r);
    }
    for r in &orders {
        let (_, rep) = gallery::cayley_monomial_ideal(&l, r)?;
        ensure!(rep.holds(), "claims fail for order {:?}: {rep:?}", rep.ranking);
    }
    Ok(vec![format!("claims A, B, C and HF (1,27,27,1) for {} orders", orders.len())])
}

fn c7_severi_small(cfg: &SuiteConfig) -> Outcome {
    let module = gallery::symmetric_determinant_module(3, Field::Rational)?;
    let ideal = apolar_ideal(&module)?;
    let cert = strong_koszul_certify(&ideal, KoszulMode::exhaustive())?;
    ensure!(cert.is_certified(), "symmetric determinant not certified: {:?}", cert.witness);
    ensure!(hilbert_vector(&ideal)? == Some(vec![1, 6, 6, 1]), "unexpected Hilbert function");
    let mut notes = vec![format!("symmetric 3x3 determinant: {} generators, {} pairs", ideal.gens().len(), cert.pairs_checked)];
    let segre = gallery::maximal_minors_module(3, 3, Field::Rational)?;
    notes.push(format!("3x3 determinant: {}", apolar_case(&segre, &gallery::minors_apolar_gens(3, 3, Field::Rational)?, 36, cfg)?));
    let plucker = gallery::pfaffian_module(6, Field::Rational)?;
    notes.push(format!(
        "6x6 Pfaffian: {}",
        apolar_case(&plucker, &gallery::pfaffian_apolar_gens(6, Field::Rational)?, 15 + 60 + 45, cfg)?
    ));
    Ok(notes)
}

fn c8_clebsch(_: &SuiteConfig) -> Outcome {
    let ideal = gallery::clebsch_ideal(Field::Rational)?;
    ensure!(hilbert_vector(&ideal)? == Some(vec![1, 4, 4, 1]), "HF differs from (1,4,4,1)");
    let a = apolar_ideal(&gallery::clebsch_form(Field::Rational)?)?;
    ensure!(same_ideal(&a, ideal.gens())?, "apolar ideal of the cubic differs");
    let g = gallery::clebsch_gb(Field::Rational)?;
    ensure!(g.len() == 16, "{} elements", g.len());
    ensure!(same_ideal(&ideal, &g)?, "the 16 elements generate a different ideal");
    let r = check_revlex_universal(&g, UniversalMode::exhaustive())?;
    ensure!(r.universal && r.orders_checked == 24 && r.is_tidy_set, "universality over 4! orders failed");
    let cert = strong_koszul_certify(&ideal, KoszulMode::exhaustive())?;
    ensure!(cert.is_certified() && cert.pairs_checked == 32, "SK certification failed: {:?}", cert.witness);
    let obs = ert_obstruction(&ideal)?;
    ensure!(obs.is_obstructed(), "no obstruction: {obs:?}");
    ensure!(obs.excluded_characteristics == [2, 3, 5], "excluded {:?}", obs.excluded_characteristics);
    Ok(vec![format!("certified and obstructed; {}", obs.caveat)])
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn c9_cycle(_: &SuiteConfig) -> Outcome {
    let mut notes = Vec::new();
    for n in [5usize, 6, 7] {
        let ideal = gallery::cycle_family(n, Field::Rational)?;
        ensure!(hilbert_vector(&ideal)? == Some(vec![1, n as u64, n as u64]), "n={n}: HF differs");
        let a = apolar_ideal(&gallery::cycle_module(n, Field::Rational)?)?;
        ensure!(same_ideal(&a, ideal.gens())?, "n={n}: apolar ideal differs");
        let g = gallery::cycle_family_gb(n, Field::Rational)?;
        let quadrics = g.iter().filter(|p| p.total_degree().ok() == Some(2)).count() as u64;
        ensure!(quadrics == binom(n, 2) && g.len() as u64 == binom(n, 2) + 3 * n as u64, "n={n}: wrong GB counts");
        ensure!(same_ideal(&ideal, &g)?, "n={n}: the listed set generates a different ideal");
        let fact: u64 = (1..=n as u64).product();
        let r = check_revlex_universal(&g, UniversalMode::exhaustive())?;
        ensure!(r.universal && r.orders_checked == fact && r.is_tidy_set, "n={n}: universality failed");
        let cert = strong_koszul_certify(&ideal, KoszulMode::exhaustive())?;
        ensure!(cert.is_certified() && cert.pairs_checked == n as u64 * (1 << (n - 1)), "n={n}: SK failed");
        let obs = ert_obstruction(&ideal)?;
        ensure!(obs.is_obstructed(), "n={n}: no obstruction");
        let bound = (1u64 << n) as i64 + if n % 2 == 1 { 1 } else { -1 };
        let mut want = vec![2];
        want.extend(prime_divisors(bound as u64));
        want.sort_unstable();
        want.dedup();
        ensure!(obs.excluded_characteristics == want, "n={n}: excluded {:?}, expected {want:?}", obs.excluded_characteristics);
        notes.push(format!("n={n}: {fact} orders, {} pairs, excluded {:?} ({bound})", cert.pairs_checked, want));
    }
    Ok(notes)
}

fn pool() -> Result<Vec<IdealPresentation>, CheckFailure> {
    let texts = [
        "vars: x1, x2, x3\nx1*x3 - x2^2\nx2*x3\nx3^2\n",
        "vars: x\nx^2\n",
        "vars: x, y\nx*y\n",
        "vars: x, y\nx^2 + y^2\nx*y\n",
        "vars: x, y\nx^2 - x*y\n",
        "vars: x, y, z\nx^2 - x*y\ny*z\n",
        "vars: a, b, c\na*b - c^2\n",
        "vars: a, b\na^2\na*b\nb^2\n",
        "vars: u, v, w\nu^2 - v*w - u*v\n",
        "vars: x, y, z, t\nx^2 - y*z\ny^2 - z*t\nz^2 - t*x\nt^2 - x*y\nx*z\ny*t\n",
    ];
    Ok(texts.iter().map(|t| IdealPresentation::parse(t)).collect::<Result<_, _>>()?)
}

fn c10_products(cfg: &SuiteConfig) -> Outcome {
    let pool = pool()?;
    let verdicts: Vec<bool> = pool
        .iter()
        .map(|i| strong_koszul_certify(i, KoszulMode::exhaustive()).map(|c| c.is_certified()))
        .collect::<Result<_, _>>()?;
    ensure!(verdicts.iter().any(|&v| v) && verdicts.iter().any(|&v| !v), "pool lacks both verdicts: {verdicts:?}");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut mixed = 0;
    for _ in 0..20 {
        let (a, b) = (rng.gen_range(0..pool.len()), rng.gen_range(0..pool.len()));
        let want = verdicts[a] && verdicts[b];
        mixed += usize::from(verdicts[a] != verdicts[b]);
        for p in [tensor_presentation(&pool[a], &pool[b])?, fiber_presentation(&pool[a], &pool[b])?] {
            let got = strong_koszul_certify(&p.ideal, KoszulMode::exhaustive())?.is_certified();
            ensure!(got == want, "{:?} of pool[{a}] and pool[{b}] gives {got}, expected {want}", p.kind);
        }
    }
    Ok(vec![format!("20 random pairs, {mixed} with differing factor verdicts")])
}

fn random_quadric(rng: &mut ChaCha8Rng) -> Result<Polynomial, CheckFailure> {
    let n = rng.gen_range(1..=5);
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let ring = Ring::new(names, Field::Rational)?;
    loop {
        let terms = monomials_of_degree(n, 2)
            .into_iter()
            .filter_map(|m| rng.gen_bool(0.5).then(|| (m, Field::Rational.from_i64(rng.gen_range(-4..=4)))))
            .collect();
        let f = Polynomial::from_terms(&ring, terms);
        if !f.is_zero() {
            return Ok(f);
        }
    }
}

fn c11_quadrics(cfg: &SuiteConfig) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut ranks = BTreeMap::new();
    for _ in 0..25 {
        let f = random_quadric(&mut rng)?;
        let d = diagonalize_quadric(&f)?;
        let changed = f.substitute_linear(&d.map)?;
        ensure!(changed == d.diagonal, "substitution check failed for {f}");
        ensure!(d.is_invertible(), "singular change of coordinates for {f}");
        ensure!(d.diagonal.support().all(|m| m.support().count() == 1), "not diagonal: {}", d.diagonal);
        let diag = IdealPresentation::new(f.ring(), vec![d.diagonal.clone()])?;
        let shortcut = strong_koszul_certify(&diag, KoszulMode::TheoremShortcut { universal: UniversalMode::exhaustive() })?;
        ensure!(shortcut.is_certified(), "shortcut failed for {}", d.diagonal);
        let after = IdealPresentation::new(f.ring(), vec![changed])?;
        ensure!(strong_koszul_certify(&after, KoszulMode::exhaustive())?.is_certified(), "exhaustive failed for {f}");
        *ranks.entry(d.lambdas.iter().filter(|l| !l.is_zero()).count()).or_insert(0) += 1;
    }
    Ok(vec![format!("25 quadrics; rank distribution {ranks:?}")])
}

fn random_homogeneous(ring: &RingRef, d: u32, rng: &mut ChaCha8Rng, density: f64) -> Polynomial {
    let terms = monomials_of_degree(ring.nvars(), d)
        .into_iter()
        .filter_map(|m| rng.gen_bool(density).then(|| (m, ring.field().from_i64(rng.gen_range(-3..=3)))))
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// Membership of a homogeneous `f` by linear algebra on all monomial
/// multiples of the generators in degree `deg f`.
fn macaulay_member(gens: &[Polynomial], f: &Polynomial) -> Result<bool, CheckFailure> {
    if f.is_zero() {
        return Ok(true);
    }
    let n = f.nvars();
    let d = f.total_degree()?;
    let cols = monomials_of_degree(n, d);
    let index: BTreeMap<Vec<u16>, usize> = cols.iter().enumerate().map(|(i, m)| (m.exps().to_vec(), i)).collect();
    let field = f.field();
    let row_of = |p: &Polynomial| {
        let mut row = vec![field.zero(); cols.len()];
        for (m, c) in p.terms() {
            row[index[m.exps()]] = c.clone();
        }
        row
    };
    let mut rows: Matrix = Vec::new();
    for g in gens {
        let gd = g.total_degree()?;
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(n, d - gd) {
            rows.push(row_of(&g.mul_term(&m, &field.one())));
        }
    }
    let base = rank(&rows, cols.len());
    rows.push(row_of(f));
    Ok(rank(&rows, cols.len()) == base)
}

fn buchberger_oracle(rng: &mut ChaCha8Rng) -> Result<(), CheckFailure> {
    let n = rng.gen_range(2..=3);
    let field = if rng.gen_bool(0.5) { Field::Rational } else { Field::Prime(101) };
    let ring = Ring::new((1..=n).map(|i| format!("x{i}")).collect(), field)?;
    let count = rng.gen_range(1..=3);
    let gens: Vec<Polynomial> = (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=3);
            random_homogeneous(&ring, d, rng, 0.6)
        })
        .filter(|p| !p.is_zero())
        .collect();
    if gens.is_empty() {
        return Ok(());
    }
    let order = MonomialOrder::grevlex(n);
    let plain = buchberger_polys(&ring, &gens, &order, &BuchbergerOptions::default());
    let chain = buchberger_polys(&ring, &gens, &order, &BuchbergerOptions { chain_criterion: true });
    ensure!(plain.basis() == chain.basis(), "chain criterion changed the reduced basis");
    ensure!(is_groebner_basis(plain.basis(), &order), "S-pair test failed");
    let mut shuffled = gens.clone();
    shuffled.shuffle(rng);
    let again = buchberger_polys(&ring, &shuffled, &order, &BuchbergerOptions::default());
    ensure!(plain.basis() == again.basis(), "reduced basis depends on generator order");
    for _ in 0..4 {
        let d = rng.gen_range(1..=4);
        let mut f = random_homogeneous(&ring, d, rng, 0.5);
        if rng.gen_bool(0.5) {
            // a combination of the generators
            f = Polynomial::zero(&ring);
            for g in &gens {
                let gd = g.total_degree()?;
                if gd <= d {
                    f = f.add(&g.mul(&random_homogeneous(&ring, d - gd, rng, 0.7)));
                }
            }
        }
        let nf_zero = plain.normal_form(&f).is_zero();
        ensure!(nf_zero == macaulay_member(&gens, &f)?, "membership oracle disagrees on {f}");
    }
    Ok(())
}

fn squarefree_agreement(rng: &mut ChaCha8Rng) -> Result<(), CheckFailure> {
    let n = rng.gen_range(3..=5);
    let dual = Ring::new((1..=n).map(|i| format!("X{i}")).collect(), Field::Rational)?;
    let acting = Ring::new((1..=n).map(|i| format!("x{i}")).collect(), Field::Rational)?;
    let d = rng.gen_range(2..=3.min(n as u32));
    let terms = monomials_of_degree(n, d)
        .into_iter()
        .filter(|m| m.is_squarefree())
        .filter_map(|m| rng.gen_bool(0.6).then(|| (m, Field::Rational.from_i64(rng.gen_range(-3..=3)))))
        .collect();
    let big_f = Polynomial::from_terms(&dual, terms);
    for k in 0..=d {
        for m in monomials_of_degree(n, k) {
            let f = Polynomial::monomial(&acting, m);
            ensure!(contract(&f, &big_f)? == differentiate(&f, &big_f)?, "actions differ on {big_f}");
        }
    }
    Ok(())
}

fn artinian_gallery() -> Result<Vec<(String, IdealPresentation)>, CheckFailure> {
    let mut out = vec![
        ("clebsch".to_string(), gallery::clebsch_ideal(Field::Rational)?),
        ("symdet3".to_string(), apolar_ideal(&gallery::symmetric_determinant_module(3, Field::Rational)?)?),
    ];
    for n in [5, 6, 7] {
        out.push((format!("cycle{n}"), gallery::cycle_family(n, Field::Rational)?));
    }
    for (m, n) in [(2, 2), (2, 3)] {
        let set = gallery::minors_apolar_gens(m, n, Field::Rational)?;
        out.push((format!("apolar minors {m}x{n}"), IdealPresentation::new(&set[0].ring().clone(), set)?));
    }
    let set = gallery::pfaffian_apolar_gens(4, Field::Rational)?;
    out.push(("apolar pf4".into(), IdealPresentation::new(&set[0].ring().clone(), set)?));
    Ok(out)
}

/// Dimension of `((I + Y) : x)_d` as the kernel of `f ↦ NF(x f)` on `S_d`.
fn brute_colon_dim(iy: &IdealPresentation, x: usize, d: u32) -> usize {
    let ring = iy.ring();
    let gb = iy.groebner(&iy.default_order());
    let n = ring.nvars();
    let xm = Monomial::variable(n, x);
    let cols = monomials_of_degree(n, d);
    let images: Vec<Polynomial> = cols.iter().map(|m| gb.normal_form(&Polynomial::monomial(ring, m.mul(&xm)))).collect();
    let mut targets: Vec<Monomial> = images.iter().flat_map(|p| p.support().cloned()).collect();
    targets.sort_by(crate::monomial::grevlex_cmp);
    targets.dedup();
    let m: Matrix = targets.iter().map(|t| images.iter().map(|p| p.coefficient(t)).collect()).collect();
    cols.len() - rank(&m, cols.len())
}

fn colon_oracle(name: &str, ideal: &IdealPresentation, rng: &mut ChaCha8Rng) -> Result<usize, CheckFailure> {
    let n = ideal.nvars();
    let socle = hilbert_vector(ideal)?.map(|h| h.len() as u32 - 1).ok_or_else(|| CheckFailure(format!("{name} not Artinian")))?;
    let mut pairs = crate::koszul::pairs_in_sweep_order(n);
    if pairs.len() > 96 {
        pairs.shuffle(rng);
        pairs.truncate(96);
    }
    for (ys, x) in &pairs {
        let colon = colon_variables(ideal, ys, *x)?;
        let mut gens: Vec<Polynomial> = ideal.gens().iter().map(|g| g.set_variables_to_zero(ys)).collect();
        gens.extend(ys.iter().map(|&y| Polynomial::var(ideal.ring(), y)));
        let iy = IdealPresentation::new(ideal.ring(), gens)?;
        let colon_ideal = IdealPresentation::new(ideal.ring(), colon.basis().to_vec())?;
        let hf = hilbert_function(&colon_ideal, 0..socle + 1)?;
        for d in 0..=socle {
            let total = binom(n + d as usize - 1, d as usize) as usize;
            let want = brute_colon_dim(&iy, *x, d);
            ensure!(total - hf[d as usize] as usize == want, "{name}: colon dimension mismatch at Y={ys:?} x={x} d={d}");
        }
        if ys.len() + 1 == n && rng.gen_bool(0.25) {
            let by_elim = colon_by_polynomial(&iy, &Polynomial::var(ideal.ring(), *x))?;
            ensure!(same_ideal(&colon_ideal, &by_elim)?, "{name}: elimination colon differs");
        }
    }
    Ok(pairs.len())
}

fn c12_invariants(cfg: &SuiteConfig) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..100 {
        buchberger_oracle(&mut rng)?;
    }
    for _ in 0..30 {
        squarefree_agreement(&mut rng)?;
    }
    let mut notes = vec!["100 Buchberger instances, 30 squarefree forms".to_string()];
    for (name, ideal) in artinian_gallery()? {
        let k = colon_oracle(&name, &ideal, &mut rng)?;
        notes.push(format!("{name}: {k} colon pairs"));
    }
    Ok(notes)
}
