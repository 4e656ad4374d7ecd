//! Dense exact linear algebra over a [`Field`]: row reduction, rank, kernels.

use crate::field::{Field, Scalar};

pub type Matrix = Vec<Vec<Scalar>>;

/// Row-reduces in place to reduced echelon form and returns the pivot
/// columns. Pivot values divided by are pushed onto `trace` when present.
pub fn rref(m: &mut Matrix, ncols: usize, trace: &mut Option<&mut Vec<Scalar>>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let piv = m[row][col].clone();
        if !piv.is_one() {
            if let Some(t) = trace.as_mut() {
                t.push(piv.clone());
            }
            let inv = piv.inv().expect("nonzero pivot");
            for x in &mut m[row][col..ncols] {
                *x = x.mul(&inv);
            }
        }
        let prow = m[row].clone();
        for (r, line) in m.iter_mut().enumerate() {
            if r == row || line[col].is_zero() {
                continue;
            }
            let factor = line[col].clone();
            for c in col..ncols {
                if !prow[c].is_zero() {
                    line[c] = line[c].sub(&factor.mul(&prow[c]));
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(m: &Matrix, ncols: usize) -> usize {
    let mut a = m.clone();
    rref(&mut a, ncols, &mut None).len()
}

/// Basis of `{v : M v = 0}`.
pub fn kernel(m: &Matrix, ncols: usize, field: Field) -> Vec<Vec<Scalar>> {
    kernel_traced(m, ncols, field, &mut None)
}

pub fn kernel_traced(m: &Matrix, ncols: usize, field: Field, trace: &mut Option<&mut Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    let mut a = m.clone();
    let pivots = rref(&mut a, ncols, trace);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = a[r][free].neg();
        }
        out.push(v);
    }
    out
}

pub fn mat_vec(m: &Matrix, v: &[Scalar], field: Field) -> Vec<Scalar> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(field.zero(), |acc, (a, b)| acc.add(&a.mul(b))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| Field::Rational.from_i64(x)).collect()).collect()
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(rank(&m, 3), 1);
        let k = kernel(&m, 3, Field::Rational);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(mat_vec(&m, v, Field::Rational).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn prime_field_rank_drops() {
        let m: Matrix = [[1i64, 2], [3, 1]]
            .iter()
            .map(|r| r.iter().map(|&x| Field::Prime(5).from_i64(x)).collect())
            .collect();
        assert_eq!(rank(&m, 2), 1);
        assert_eq!(rank(&q(&[&[1, 2], &[3, 1]]), 2), 2);
    }

    #[test]
    fn pivots_are_traced() {
        let mut m = q(&[&[3, 1], &[1, 1]]);
        let mut t = Vec::new();
        rref(&mut m, 2, &mut Some(&mut t));
        assert!(!t.is_empty());
    }
}
