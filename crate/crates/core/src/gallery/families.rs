//! Small explicit ideals: the four-variable Gorenstein example, the cycle
//! family, forms of simplicial complexes and the three-variable ideal whose
//! Gröbner basis depends on the revlex order.

use std::collections::BTreeMap;

use crate::apolarity::{DualForm, InverseSystemModule};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::IdealPresentation;
use crate::monomial::Monomial;
use crate::parse::parse_polynomial;
use crate::poly::{Polynomial, Ring, RingRef};

fn polys(ring: &RingRef, texts: &[&str]) -> Result<Vec<Polynomial>> {
    texts.iter().map(|t| parse_polynomial(ring, t)).collect()
}

/// `(x1*x3 - x2^2, x2*x3, x3^2)`.
pub fn remark_ideal(field: Field) -> Result<IdealPresentation> {
    let ring = Ring::new(vec!["x1".into(), "x2".into(), "x3".into()], field)?;
    IdealPresentation::new(&ring, polys(&ring, &["x1*x3 - x2^2", "x2*x3", "x3^2"])?)
}

fn xyzt(field: Field, upper: bool) -> Result<RingRef> {
    let names = if upper { ["X", "Y", "Z", "T"] } else { ["x", "y", "z", "t"] };
    Ring::new(names.iter().map(|s| s.to_string()).collect(), field)
}

pub fn clebsch_ideal(field: Field) -> Result<IdealPresentation> {
    let ring = xyzt(field, false)?;
    IdealPresentation::new(&ring, polys(&ring, &["x^2 - y*z", "y^2 - z*t", "z^2 - t*x", "t^2 - x*y", "x*z", "y*t"])?)
}

/// The 16-element universal Gröbner basis of [`clebsch_ideal`].
pub fn clebsch_gb(field: Field) -> Result<Vec<Polynomial>> {
    let ring = xyzt(field, false)?;
    polys(
        &ring,
        &[
            "x^2 - y*z", "y^2 - z*t", "z^2 - t*x", "t^2 - x*y", "x*z", "y*t", "x^3", "y^3", "z^3", "t^3", "x*y^2",
            "y*z^2", "z*t^2", "t*x^2", "x^2*y - z^2*t", "y^2*z - t^2*x",
        ],
    )
}

/// `X^2 Y + Y^2 Z + Z^2 T + T^2 X`.
pub fn clebsch_form(field: Field) -> Result<InverseSystemModule> {
    let ring = xyzt(field, true)?;
    InverseSystemModule::from_polys(polys(&ring, &["X^2*Y + Y^2*Z + Z^2*T + T^2*X"])?)
}

fn cycle_ring(n: usize, field: Field, prefix: &str) -> Result<RingRef> {
    if n < 5 {
        return Err(Error::Invalid(format!("the cycle family needs n ≥ 5, got {n}")));
    }
    Ring::new((1..=n).map(|i| format!("{prefix}{i}")).collect(), field)
}

/// `k = ⌊(n+1)/2⌋`.
pub fn cycle_shift(n: usize) -> usize {
    n.div_ceil(2)
}

fn adjacent(n: usize, i: usize, j: usize) -> bool {
    (i + 1) % n == j || (j + 1) % n == i
}

fn mono(ring: &RingRef, vars: &[usize]) -> Polynomial {
    let n = ring.nvars();
    Polynomial::monomial(ring, vars.iter().fold(Monomial::one(n), |m, &v| m.mul(&Monomial::variable(n, v))))
}

fn cycle_quadrics(ring: &RingRef) -> Vec<Polynomial> {
    let n = ring.nvars();
    let k = cycle_shift(n);
    let mut out: Vec<Polynomial> =
        (0..n).map(|i| mono(ring, &[i, i]).sub(&mono(ring, &[(i + k - 1) % n, (i + k) % n]))).collect();
    for i in 0..n {
        for j in i + 1..n {
            if !adjacent(n, i, j) {
                out.push(mono(ring, &[i, j]));
            }
        }
    }
    out
}

/// Binomials `x_i^2 - x_{i+k-1} x_{i+k}` and the monomials `x_i x_j` for
/// non-adjacent `i, j` on the `n`-cycle, indices mod `n`.
pub fn cycle_family(n: usize, field: Field) -> Result<IdealPresentation> {
    let ring = cycle_ring(n, field, "x")?;
    IdealPresentation::new(&ring, cycle_quadrics(&ring))
}

/// The quadrics of [`cycle_family`] with the cubics `x_i^3`, `x_i^2 x_{i+1}`, `x_i^2 x_{i-1}`.
pub fn cycle_family_gb(n: usize, field: Field) -> Result<Vec<Polynomial>> {
    let ring = cycle_ring(n, field, "x")?;
    let mut out = cycle_quadrics(&ring);
    for i in 0..n {
        out.push(mono(&ring, &[i, i, i]));
        out.push(mono(&ring, &[i, i, (i + 1) % n]));
        out.push(mono(&ring, &[i, i, (i + n - 1) % n]));
    }
    Ok(out)
}

/// The forms `X_i^2 + X_{i+k-1} X_{i+k}`.
pub fn cycle_module(n: usize, field: Field) -> Result<InverseSystemModule> {
    let ring = cycle_ring(n, field, "X")?;
    let k = cycle_shift(n);
    let forms = (0..n).map(|i| mono(&ring, &[i, i]).add(&mono(&ring, &[(i + k - 1) % n, (i + k) % n]))).collect();
    InverseSystemModule::from_polys(forms)
}

/// `F = Σ_G Z_G · Π_{i∈G} X_i` over the facets `G` (1-based vertices), in
/// the dual ring `X1..Xn, Z_G`.
pub fn simplicial_form(n: usize, facets: &[Vec<usize>], field: Field) -> Result<DualForm> {
    if facets.is_empty() {
        return Err(Error::Invalid("a simplicial complex needs a facet".into()));
    }
    let size = facets[0].len();
    if facets.iter().any(|f| f.len() != size) {
        return Err(Error::Invalid("the complex must be pure".into()));
    }
    if facets.iter().flatten().any(|&v| v == 0 || v > n) {
        return Err(Error::Invalid(format!("vertices must lie in 1..={n}")));
    }
    let wide = n > 9;
    let mut names: Vec<String> = (1..=n).map(|i| format!("X{i}")).collect();
    for f in facets {
        let parts: Vec<String> = f.iter().map(ToString::to_string).collect();
        names.push(format!("Z{}", parts.join(if wide { "_" } else { "" })));
    }
    let ring = Ring::new(names, field)?;
    let mut f = Polynomial::zero(&ring);
    for (g, facet) in facets.iter().enumerate() {
        let mut vars: Vec<usize> = facet.iter().map(|v| v - 1).collect();
        vars.push(n + g);
        f = f.add(&mono(&ring, &vars));
    }
    DualForm::new(f)
}

/// The substitution on `x11, x12, x13, x22, x23, x33` turning the symmetric
/// 3 × 3 determinant into a signed sum of 16 squarefree cubics.
pub fn veronese_twist(ring: &RingRef) -> Result<BTreeMap<usize, Polynomial>> {
    let images = [
        ("x11", "x11 - x12 - x13"),
        ("x12", "x12"),
        ("x13", "x13"),
        ("x22", "-x12 + x22 - x23"),
        ("x23", "x23"),
        ("x33", "-x13 - x23 + x33"),
    ];
    let mut map = BTreeMap::new();
    for (v, img) in images {
        map.insert(ring.index_of(v)?, parse_polynomial(ring, img)?);
    }
    Ok(map)
}
