//! Verification that a polynomial set is a Gröbner basis for every
//! revlex order, plus tidiness and projection modulo variables.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grobner::{divisors_for, failing_pair_terms};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;

pub const DEFAULT_UNIVERSAL_CAP: usize = 9;
pub const DEFAULT_SAMPLES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum UniversalMode {
    Exhaustive { cap: usize },
    Sampled { count: usize, seed: u64 },
}

impl UniversalMode {
    pub fn exhaustive() -> Self {
        UniversalMode::Exhaustive { cap: DEFAULT_UNIVERSAL_CAP }
    }

    pub fn sampled(seed: u64) -> Self {
        UniversalMode::Sampled { count: DEFAULT_SAMPLES, seed }
    }

    /// Exhaustive when `n` is within the default cap, sampled otherwise.
    pub fn auto(n: usize, seed: u64) -> Self {
        if n <= DEFAULT_UNIVERSAL_CAP {
            Self::exhaustive()
        } else {
            Self::sampled(seed)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalWitness {
    /// Variable indices, largest first.
    pub ranking: Vec<usize>,
    pub order: String,
    pub pair: [String; 2],
    pub pair_index: [usize; 2],
    pub remainder: String,
}

impl UniversalWitness {
    /// Re-runs the Gröbner test for the witness order.
    pub fn recheck(&self, g: &[Polynomial]) -> bool {
        let order = MonomialOrder::Revlex { ranking: self.ranking.clone() };
        let divs = divisors_for(g, &order);
        failing_pair_terms(&divs, &order).is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalGBReport {
    pub candidate: Vec<String>,
    pub mode: UniversalMode,
    pub orders_checked: u64,
    pub universal: bool,
    pub witness: Option<UniversalWitness>,
    pub is_tidy_set: bool,
    pub is_quadratic: bool,
}

pub fn is_tidy_set(g: &[Polynomial]) -> bool {
    g.iter().all(Polynomial::is_tidy)
}

pub fn is_quadratic_set(g: &[Polynomial]) -> bool {
    g.iter().all(|p| p.is_homogeneous() && p.total_degree().ok() == Some(2))
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The `k`-th permutation of `0..n` in lexicographic order.
pub fn nth_permutation(n: usize, mut k: u64) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f = factorial(i);
        let idx = (k / f) as usize;
        k %= f;
        out.push(pool.remove(idx));
    }
    out
}

fn check_order(g: &[Polynomial], ranking: &[usize]) -> Option<UniversalWitness> {
    let order = MonomialOrder::Revlex { ranking: ranking.to_vec() };
    let divs = divisors_for(g, &order);
    let (i, j, r) = failing_pair_terms(&divs, &order)?;
    let ring = g[0].ring();
    let nonzero: Vec<&Polynomial> = g.iter().filter(|p| !p.is_zero()).collect();
    Some(UniversalWitness {
        ranking: ranking.to_vec(),
        order: order.describe(ring.names()),
        pair: [nonzero[i].to_string(), nonzero[j].to_string()],
        pair_index: [i, j],
        remainder: Polynomial::from_terms(ring, r).to_string(),
    })
}

pub fn check_revlex_universal(g: &[Polynomial], mode: UniversalMode) -> Result<UniversalGBReport> {
    let n = g.first().map_or(0, Polynomial::nvars);
    let candidate = g.iter().map(ToString::to_string).collect();
    let mut report = UniversalGBReport {
        candidate,
        mode,
        orders_checked: 0,
        universal: true,
        witness: None,
        is_tidy_set: is_tidy_set(g),
        is_quadratic: is_quadratic_set(g),
    };
    match mode {
        UniversalMode::Exhaustive { cap } => {
            if n > cap {
                return Err(Error::CapExceeded { what: "exhaustive revlex-universal check", n, cap });
            }
            let total = factorial(n);
            // find_first returns the lexicographically least failing order
            let hit = (0..total).into_par_iter().find_map_first(|k| {
                let ranking = nth_permutation(n, k);
                check_order(g, &ranking).map(|w| (k, w))
            });
            match hit {
                Some((k, w)) => {
                    report.orders_checked = k + 1;
                    report.universal = false;
                    report.witness = Some(w);
                }
                None => report.orders_checked = total,
            }
        }
        UniversalMode::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let orders: Vec<Vec<usize>> = (0..count)
                .map(|_| {
                    let mut p: Vec<usize> = (0..n).collect();
                    p.shuffle(&mut rng);
                    p
                })
                .collect();
            let failures: Vec<UniversalWitness> = orders.par_iter().filter_map(|r| check_order(g, r)).collect();
            report.orders_checked = count as u64;
            if let Some(w) = failures.into_iter().min_by(|a, b| a.ranking.cmp(&b.ranking)) {
                report.universal = false;
                report.witness = Some(w);
            }
        }
    }
    Ok(report)
}

/// Images of `g` with the variables `ys` set to zero, zeros dropped.
pub fn project_universal_gb(g: &[Polynomial], ys: &[usize]) -> Vec<Polynomial> {
    g.iter().map(|p| p.set_variables_to_zero(ys)).filter(|p| !p.is_zero()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_file;

    fn polys(text: &str) -> Vec<Polynomial> {
        parse_file(text).unwrap().polys
    }

    #[test]
    fn permutations_in_lex_order() {
        assert_eq!(nth_permutation(3, 0), vec![0, 1, 2]);
        assert_eq!(nth_permutation(3, 1), vec![0, 2, 1]);
        assert_eq!(nth_permutation(3, 5), vec![2, 1, 0]);
    }

    #[test]
    fn remark_ideal_not_universal() {
        let g = polys("vars: x1, x2, x3\nx1*x3 - x2^2\nx2*x3\nx3^2\n");
        let r = check_revlex_universal(&g, UniversalMode::exhaustive()).unwrap();
        assert!(!r.universal);
        let w = r.witness.unwrap();
        assert!(w.recheck(&g));
        assert_eq!(w.ranking, vec![0, 2, 1]);
        assert_eq!(r.orders_checked, 2);
        assert!(r.is_tidy_set && r.is_quadratic);
    }

    #[test]
    fn monomials_are_universal() {
        let g = polys("vars: a, b, c\na^2*b\nb*c\nc^3\n");
        let r = check_revlex_universal(&g, UniversalMode::exhaustive()).unwrap();
        assert!(r.universal);
        assert_eq!(r.orders_checked, 6);
        let s = check_revlex_universal(&g, UniversalMode::Sampled { count: 10, seed: 3 }).unwrap();
        assert!(s.universal);
        assert_eq!(s.orders_checked, 10);
    }

    #[test]
    fn cap_is_enforced() {
        let g = polys("vars: a, b, c\na*b\n");
        assert!(matches!(
            check_revlex_universal(&g, UniversalMode::Exhaustive { cap: 2 }),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn tidy_sets() {
        assert!(is_tidy_set(&[]));
        assert!(!is_tidy_set(&polys("vars: x, y\nx^2 + x*y\n")));
    }

    #[test]
    fn projection_drops_zeros() {
        let g = polys("vars: x, y, z\nx*y - z^2\ny*z\n");
        let p = project_universal_gb(&g, &[0]);
        assert_eq!(p.len(), 2);
        assert_eq!(p[0].to_string(), "-z^2");
        assert_eq!(project_universal_gb(&g, &[]), g);
        assert_eq!(project_universal_gb(&g, &[1, 2]).len(), 0);
    }
}
