//! Generic, symmetric, skew-symmetric and Hankel matrices of variables,
//! their 2-minors and Pfaffians, and the quadrics apolar to maximal minors
//! and Pfaffians.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::apolarity::{dual_ring, DualForm, InverseSystemModule};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::IdealPresentation;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring, RingRef};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MatrixKind {
    Generic { m: usize, n: usize },
    Symmetric { n: usize },
    Skew { n: usize },
    Hankel { m: usize, n: usize },
}

/// A matrix of variables with some entries set to zero. Zero positions are
/// 0-based; for symmetric matrices they are stored with `i ≤ j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixShape {
    pub kind: MatrixKind,
    pub zeros: BTreeSet<(usize, usize)>,
}

fn pair_name(prefix: &str, i: usize, j: usize, wide: bool) -> String {
    if wide {
        format!("{prefix}{i}_{j}")
    } else {
        format!("{prefix}{i}{j}")
    }
}

impl MatrixShape {
    pub fn generic(m: usize, n: usize) -> Self {
        MatrixShape { kind: MatrixKind::Generic { m, n }, zeros: BTreeSet::new() }
    }

    pub fn symmetric(n: usize) -> Self {
        MatrixShape { kind: MatrixKind::Symmetric { n }, zeros: BTreeSet::new() }
    }

    pub fn skew(n: usize) -> Self {
        MatrixShape { kind: MatrixKind::Skew { n }, zeros: BTreeSet::new() }
    }

    pub fn hankel(m: usize, n: usize) -> Self {
        MatrixShape { kind: MatrixKind::Hankel { m, n }, zeros: BTreeSet::new() }
    }

    /// Sets entries to zero: edges of a bipartite graph for generic
    /// matrices, edges or loops of a graph for symmetric ones.
    pub fn with_zeros(mut self, zeros: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let (rows, cols) = self.dims();
        for (i, j) in zeros {
            if i >= rows || j >= cols {
                return Err(Error::Invalid(format!("zero position ({}, {}) outside the matrix", i + 1, j + 1)));
            }
            match self.kind {
                MatrixKind::Generic { .. } => self.zeros.insert((i, j)),
                MatrixKind::Symmetric { .. } => self.zeros.insert((i.min(j), i.max(j))),
                _ => return Err(Error::Invalid("zero patterns apply to generic and symmetric matrices".into())),
            };
        }
        Ok(self)
    }

    pub fn dims(&self) -> (usize, usize) {
        match self.kind {
            MatrixKind::Generic { m, n } | MatrixKind::Hankel { m, n } => (m, n),
            MatrixKind::Symmetric { n } | MatrixKind::Skew { n } => (n, n),
        }
    }

    /// Variable names: `xij` (1-based; `xi_j` once an index exceeds 9),
    /// `xk` for Hankel entries `x_{i+j-1}`.
    pub fn variable_names(&self) -> Vec<String> {
        let (rows, cols) = self.dims();
        let wide = rows.max(cols) > 9;
        match self.kind {
            MatrixKind::Generic { m, n } => {
                (1..=m).flat_map(|i| (1..=n).map(move |j| pair_name("x", i, j, wide))).collect()
            }
            MatrixKind::Symmetric { n } => (1..=n).flat_map(|i| (i..=n).map(move |j| pair_name("x", i, j, wide))).collect(),
            MatrixKind::Skew { n } => (1..=n).flat_map(|i| (i + 1..=n).map(move |j| pair_name("x", i, j, wide))).collect(),
            MatrixKind::Hankel { m, n } => (1..m + n).map(|k| format!("x{k}")).collect(),
        }
    }

    pub fn ring(&self, field: Field) -> Result<RingRef> {
        Ring::new(self.variable_names(), field)
    }

    /// Variable index at entry `(i, j)` (0-based) and its sign, or `None`
    /// for a zero entry.
    pub fn entry(&self, i: usize, j: usize) -> Option<(usize, bool)> {
        match self.kind {
            MatrixKind::Generic { n, .. } => (!self.zeros.contains(&(i, j))).then_some((i * n + j, true)),
            MatrixKind::Symmetric { n } => {
                let (a, b) = (i.min(j), i.max(j));
                (!self.zeros.contains(&(a, b))).then(|| (sym_index(n, a, b), true))
            }
            MatrixKind::Skew { n } => match i.cmp(&j) {
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Less => Some((skew_index(n, i, j), true)),
                std::cmp::Ordering::Greater => Some((skew_index(n, j, i), false)),
            },
            MatrixKind::Hankel { .. } => Some((i + j, true)),
        }
    }

    fn entry_poly(&self, ring: &RingRef, i: usize, j: usize) -> Polynomial {
        match self.entry(i, j) {
            None => Polynomial::zero(ring),
            Some((v, true)) => Polynomial::var(ring, v),
            Some((v, false)) => Polynomial::var(ring, v).neg(),
        }
    }

    /// Determinant of the submatrix on `rows` × `cols`, in `ring`.
    pub fn minor(&self, ring: &RingRef, rows: &[usize], cols: &[usize]) -> Polynomial {
        if rows.is_empty() {
            return Polynomial::one(ring);
        }
        let mut acc = Polynomial::zero(ring);
        for (k, &c) in cols.iter().enumerate() {
            let e = self.entry_poly(ring, rows[0], c);
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = e.mul(&self.minor(ring, &rows[1..], &rest));
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }
}

fn sym_index(n: usize, i: usize, j: usize) -> usize {
    // rows before i hold n, n-1, ..., n-i+1 entries
    i * n - i * i.saturating_sub(1) / 2 + (j - i)
}

fn skew_index(n: usize, i: usize, j: usize) -> usize {
    // entries (a, b) with a < i come first: sum over a of (n - 1 - a)
    i * (n - 1) - i * i.saturating_sub(1) / 2 + (j - i - 1)
}

/// All nonzero 2-minors, up to sign, in the order rows `i < k`, columns `j < l`.
pub fn minors2(shape: &MatrixShape, field: Field) -> Result<IdealPresentation> {
    if matches!(shape.kind, MatrixKind::Skew { .. }) {
        return Err(Error::Invalid("2-minors are built for generic, symmetric and Hankel matrices".into()));
    }
    let ring = shape.ring(field)?;
    let (rows, cols) = shape.dims();
    let mut out: Vec<Polynomial> = Vec::new();
    for i in 0..rows {
        for k in i + 1..rows {
            for j in 0..cols {
                for l in j + 1..cols {
                    let p = shape.minor(&ring, &[i, k], &[j, l]);
                    if !p.is_zero() && !out.iter().any(|q| *q == p || *q == p.neg()) {
                        out.push(p);
                    }
                }
            }
        }
    }
    IdealPresentation::new(&ring, out)
}

fn skew_ring(n: usize, field: Field) -> Result<RingRef> {
    MatrixShape::skew(n).ring(field)
}

fn pfaffian_of(shape: &MatrixShape, ring: &RingRef, idx: &[usize]) -> Polynomial {
    if idx.is_empty() {
        return Polynomial::one(ring);
    }
    let mut acc = Polynomial::zero(ring);
    for k in 1..idx.len() {
        let rest: Vec<usize> = idx.iter().enumerate().filter(|&(p, _)| p != 0 && p != k).map(|(_, &v)| v).collect();
        let term = shape.entry_poly(ring, idx[0], idx[k]).mul(&pfaffian_of(shape, ring, &rest));
        // expansion along the first row: sign (-1)^(k+1) for 0-based column k
        acc = if k % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All `size`-Pfaffians of the generic `n × n` skew-symmetric matrix, one
/// per principal index set in lexicographic order.
pub fn pfaffians(n: usize, size: usize, field: Field) -> Result<Vec<Polynomial>> {
    if size % 2 == 1 {
        return Err(Error::Invalid("Pfaffians have even size".into()));
    }
    if size > n {
        return Err(Error::Invalid(format!("size {size} exceeds the matrix size {n}")));
    }
    let shape = MatrixShape::skew(n);
    let ring = skew_ring(n, field)?;
    Ok(subsets(n, size).iter().map(|h| pfaffian_of(&shape, &ring, h)).collect())
}

/// Pfaffian of the principal submatrix on `idx` in the skew ring of size `n`.
pub fn pfaffian_in(ring: &RingRef, n: usize, idx: &[usize]) -> Polynomial {
    pfaffian_of(&MatrixShape::skew(n), ring, idx)
}

/// Maximal minors of the generic `m × n` matrix, in dual variables.
pub fn maximal_minors_module(m: usize, n: usize, field: Field) -> Result<InverseSystemModule> {
    if m > n {
        return Err(Error::Invalid("expected m ≤ n".into()));
    }
    let shape = MatrixShape::generic(m, n);
    let ring = shape.ring(field)?;
    let dual = dual_ring(&ring);
    let rows: Vec<usize> = (0..m).collect();
    let forms = subsets(n, m).iter().map(|c| DualForm::new(shape.minor(&dual, &rows, c))).collect::<Result<Vec<_>>>()?;
    InverseSystemModule::new(&ring, forms)
}

/// Maximal permanents of the generic `m × n` matrix, in dual variables.
pub fn maximal_permanents_module(m: usize, n: usize, field: Field) -> Result<InverseSystemModule> {
    if m > n {
        return Err(Error::Invalid("expected m ≤ n".into()));
    }
    let shape = MatrixShape::generic(m, n);
    let ring = shape.ring(field)?;
    let dual = dual_ring(&ring);
    let rows: Vec<usize> = (0..m).collect();
    let forms = subsets(n, m).iter().map(|c| DualForm::new(permanent(&shape, &dual, &rows, c))).collect::<Result<Vec<_>>>()?;
    InverseSystemModule::new(&ring, forms)
}

fn permanent(shape: &MatrixShape, ring: &RingRef, rows: &[usize], cols: &[usize]) -> Polynomial {
    if rows.is_empty() {
        return Polynomial::one(ring);
    }
    let mut acc = Polynomial::zero(ring);
    for &c in cols {
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        acc = acc.add(&shape.entry_poly(ring, rows[0], c).mul(&permanent(shape, ring, &rows[1..], &rest)));
    }
    acc
}

/// Maximal even Pfaffians of the generic `n × n` skew matrix, in dual variables.
pub fn pfaffian_module(n: usize, field: Field) -> Result<InverseSystemModule> {
    let ring = skew_ring(n, field)?;
    let dual = dual_ring(&ring);
    let shape = MatrixShape::skew(n);
    let forms = subsets(n, 2 * (n / 2)).iter().map(|h| DualForm::new(pfaffian_of(&shape, &dual, h))).collect::<Result<Vec<_>>>()?;
    InverseSystemModule::new(&ring, forms)
}

/// Determinant of the generic symmetric `n × n` matrix, in dual variables.
pub fn symmetric_determinant_module(n: usize, field: Field) -> Result<InverseSystemModule> {
    let shape = MatrixShape::symmetric(n);
    let ring = shape.ring(field)?;
    let dual = dual_ring(&ring);
    let idx: Vec<usize> = (0..n).collect();
    InverseSystemModule::new(&ring, vec![DualForm::new(shape.minor(&dual, &idx, &idx))?])
}

fn quad(ring: &RingRef, a: usize, b: usize) -> Polynomial {
    let n = ring.nvars();
    Polynomial::monomial(ring, Monomial::variable(n, a).mul(&Monomial::variable(n, b)))
}

fn generic_apolar(m: usize, n: usize, field: Field, plus: bool) -> Result<Vec<Polynomial>> {
    let ring = MatrixShape::generic(m, n).ring(field)?;
    let v = |i: usize, k: usize| i * n + k;
    let mut out = Vec::new();
    for i in 0..m {
        for k in 0..n {
            out.push(quad(&ring, v(i, k), v(i, k)));
        }
    }
    for k in 0..n {
        for i in 0..m {
            for j in i + 1..m {
                out.push(quad(&ring, v(i, k), v(j, k)));
            }
        }
    }
    for i in 0..m {
        for k in 0..n {
            for l in k + 1..n {
                out.push(quad(&ring, v(i, k), v(i, l)));
            }
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            for k in 0..n {
                for l in k + 1..n {
                    let a = quad(&ring, v(i, k), v(j, l));
                    let b = quad(&ring, v(i, l), v(j, k));
                    out.push(if plus { a.add(&b) } else { a.sub(&b) });
                }
            }
        }
    }
    Ok(out)
}

/// Quadrics apolar to the maximal minors of the generic `m × n` matrix.
pub fn minors_apolar_gens(m: usize, n: usize, field: Field) -> Result<Vec<Polynomial>> {
    generic_apolar(m, n, field, true)
}

/// Quadrics apolar to the maximal permanents of the generic `m × n` matrix.
pub fn permanent_apolar_gens(m: usize, n: usize, field: Field) -> Result<Vec<Polynomial>> {
    generic_apolar(m, n, field, false)
}

/// Nonzero permanents of 2 × 2 submatrices with rows `i1 ≤ i2` and columns
/// `j1 ≤ j2`, repeats allowed, up to scalars.
pub fn generalized_permanents(m: usize, n: usize, field: Field) -> Result<Vec<Polynomial>> {
    let ring = MatrixShape::generic(m, n).ring(field)?;
    let v = |i: usize, k: usize| i * n + k;
    let mut out: Vec<Polynomial> = Vec::new();
    for i1 in 0..m {
        for i2 in i1..m {
            for j1 in 0..n {
                for j2 in j1..n {
                    let p = quad(&ring, v(i1, j1), v(i2, j2)).add(&quad(&ring, v(i1, j2), v(i2, j1)));
                    if p.is_zero() {
                        continue;
                    }
                    let order = crate::monomial::MonomialOrder::grevlex(ring.nvars());
                    let p = p.monic(&order)?;
                    if !out.contains(&p) {
                        out.push(p);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Quadrics apolar to the maximal even Pfaffians of the `n × n` skew matrix.
pub fn pfaffian_apolar_gens(n: usize, field: Field) -> Result<Vec<Polynomial>> {
    let ring = skew_ring(n, field)?;
    let v = |i: usize, j: usize| skew_index(n, i, j);
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(quad(&ring, v(i, j), v(i, j)));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push(quad(&ring, v(i, j), v(i, k)));
                out.push(quad(&ring, v(i, j), v(j, k)));
                out.push(quad(&ring, v(i, k), v(j, k)));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let ij_kl = quad(&ring, v(i, j), v(k, l));
                    let ik_jl = quad(&ring, v(i, k), v(j, l));
                    let il_jk = quad(&ring, v(i, l), v(j, k));
                    out.push(ij_kl.add(&ik_jl));
                    out.push(il_jk.add(&ik_jl));
                    out.push(ij_kl.sub(&il_jk));
                }
            }
        }
    }
    Ok(out)
}


#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn index_maps_are_bijective() {
        for n in 1..8 {
            let s = MatrixShape::symmetric(n);
            let names = s.variable_names();
            let mut seen = vec![false; names.len()];
            for i in 0..n {
                for j in i..n {
                    let (v, _) = s.entry(i, j).unwrap();
                    assert_eq!(names[v], pair_name("x", i + 1, j + 1, false));
                    seen[v] = true;
                }
            }
            assert!(seen.iter().all(|&b| b));
            let k = MatrixShape::skew(n);
            let names = k.variable_names();
            for i in 0..n {
                for j in i + 1..n {
                    assert_eq!(names[k.entry(i, j).unwrap().0], pair_name("x", i + 1, j + 1, false));
                }
            }
        }
    }

    #[test]
    fn generic_2x2_minor() {
        let i = minors2(&MatrixShape::generic(2, 2), Field::Rational).unwrap();
        let shown: Vec<String> = i.gens().iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["-x12*x21 + x11*x22"]);
    }

    #[test]
    fn symmetric_minors_count() {
        // C(4,2)^2 minors of a symmetric 3x3 matrix collapse to 6 up to sign
        let i = minors2(&MatrixShape::symmetric(3), Field::Rational).unwrap();
        assert_eq!(i.nvars(), 6);
        assert_eq!(i.gens().len(), 6);
    }

    #[test]
    fn hankel_projects_to_remark_ideal() {
        let i = minors2(&MatrixShape::hankel(2, 3), Field::Rational).unwrap();
        assert_eq!(i.nvars(), 4);
        let projected = crate::universal::project_universal_gb(i.gens(), &[3]);
        let shown: Vec<String> = projected.iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["-x2^2 + x1*x3", "-x2*x3", "-x3^2"]);
    }

    #[test]
    fn zeros_drop_minors() {
        let s = MatrixShape::generic(2, 3).with_zeros([(0, 0)]).unwrap();
        let sparse = minors2(&s, Field::Rational).unwrap();
        let dense = minors2(&MatrixShape::generic(2, 3), Field::Rational).unwrap();
        let proj = crate::universal::project_universal_gb(dense.gens(), &[0]);
        assert_eq!(sparse.gens(), proj.as_slice());
        assert!(MatrixShape::skew(3).with_zeros([(0, 1)]).is_err());
        assert!(MatrixShape::generic(2, 2).with_zeros([(2, 0)]).is_err());
    }

    #[test]
    fn four_pfaffian() {
        let p = pfaffians(4, 4, Field::Rational).unwrap();
        assert_eq!(p.len(), 1);
        let ring = p[0].ring().clone();
        let want = crate::parse::parse_polynomial(&ring, "x12*x34 - x13*x24 + x14*x23").unwrap();
        assert_eq!(p[0], want);
        assert_eq!(pfaffians(5, 4, Field::Rational).unwrap().len(), 5);
        let two = pfaffians(4, 2, Field::Rational).unwrap();
        assert!(two.iter().all(|q| q.is_monomial() && q.total_degree().unwrap() == 1));
        assert!(pfaffians(4, 3, Field::Rational).is_err());
    }

    #[test]
    fn pfaffian_squares_to_determinant() {
        let p = pfaffians(4, 4, Field::Rational).unwrap();
        let ring = p[0].ring().clone();
        let s = MatrixShape::skew(4);
        let all: Vec<usize> = (0..4).collect();
        assert_eq!(s.minor(&ring, &all, &all), p[0].mul(&p[0]));
    }

    #[test]
    fn apolar_set_sizes() {
        for (m, n) in [(1, 3), (2, 2), (2, 3), (3, 3)] {
            let want = binom(m + 1, 2) * binom(n + 1, 2);
            assert_eq!(minors_apolar_gens(m, n, Field::Rational).unwrap().len(), want);
            assert_eq!(permanent_apolar_gens(m, n, Field::Rational).unwrap().len(), want);
        }
        for n in 2..=6 {
            let want = binom(n, 2) + 3 * binom(n, 3) + 3 * binom(n, 4);
            assert_eq!(pfaffian_apolar_gens(n, Field::Rational).unwrap().len(), want);
        }
        assert_eq!(pfaffian_apolar_gens(4, Field::Rational).unwrap().len(), 21);
    }

    #[test]
    fn generalized_permanents_match_apolar_set() {
        // away from characteristic 2 they agree with the apolar quadrics up to scalars
        let gp = generalized_permanents(2, 3, Field::Rational).unwrap();
        let order = crate::monomial::MonomialOrder::grevlex(6);
        let apolar: Vec<Polynomial> =
            minors_apolar_gens(2, 3, Field::Rational).unwrap().iter().map(|p| p.monic(&order).unwrap()).collect();
        assert_eq!(gp.len(), apolar.len());
        assert!(gp.iter().all(|p| apolar.contains(p)));
        let row = generalized_permanents(1, 3, Field::Rational).unwrap();
        assert_eq!(row.len(), 6);
        assert!(row.iter().all(Polynomial::is_monomial));
        // in characteristic 2 only the genuine 2-minors survive
        let gf2 = generalized_permanents(2, 2, Field::Prime(2)).unwrap();
        assert_eq!(gf2.len(), 1);
    }
}
