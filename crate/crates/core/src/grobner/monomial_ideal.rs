use std::ops::Range;

use crate::monomial::{grevlex_cmp, Monomial};

/// A monomial ideal kept as its minimal generators, sorted by grevlex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
    masks: Vec<u64>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        let mut gens = gens;
        gens.sort_by(grevlex_cmp);
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        let masks = minimal.iter().map(Monomial::support_mask).collect();
        MonomialIdeal { nvars, gens: minimal, masks }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        let mask = m.support_mask();
        self.gens.iter().zip(&self.masks).any(|(g, gm)| gm & !mask == 0 && g.divides(m))
    }

    /// Sum with another monomial ideal in the same ring.
    pub fn plus(&self, other: &[Monomial]) -> Self {
        let mut g = self.gens.clone();
        g.extend_from_slice(other);
        MonomialIdeal::new(self.nvars, g)
    }

    pub fn is_artinian(&self) -> bool {
        (0..self.nvars).all(|v| self.gens.iter().any(|g| g.exp(v) > 0 && g.degree() == g.exp(v) as u32))
    }

    /// Standard monomials of degrees `0..=max`, grouped by degree. Each
    /// degree is built from the previous one, since a divisor of a standard
    /// monomial is standard.
    pub fn standard_monomials(&self, max: u32) -> Vec<Vec<Monomial>> {
        let n = self.nvars;
        let one = Monomial::one(n);
        let mut levels = vec![if self.contains(&one) { vec![] } else { vec![one] }];
        for _ in 1..=max {
            let prev = levels.last().unwrap();
            let mut next = Vec::new();
            for m in prev {
                // extend only by variables at or after the last one used
                let last = m.support().last().unwrap_or(0);
                for v in last..n {
                    let c = m.mul(&Monomial::variable(n, v));
                    if !self.contains(&c) {
                        next.push(c);
                    }
                }
            }
            let empty = next.is_empty();
            levels.push(next);
            if empty {
                break;
            }
        }
        levels
    }

    /// Number of standard monomials in each degree of `degrees`.
    pub fn hilbert_function(&self, degrees: Range<u32>) -> Vec<u64> {
        if degrees.is_empty() {
            return Vec::new();
        }
        let levels = self.standard_monomials(degrees.end - 1);
        degrees.map(|d| levels.get(d as usize).map_or(0, |l| l.len() as u64)).collect()
    }

    /// Hilbert function up to its last nonzero entry (Artinian ideals only;
    /// otherwise this does not terminate early and is capped at degree 64).
    pub fn hilbert_vector(&self) -> Vec<u64> {
        let mut levels = self.standard_monomials(64);
        while levels.last().is_some_and(|l| l.is_empty()) {
            levels.pop();
        }
        levels.iter().map(|l| l.len() as u64).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::monomials_of_degree;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_slice(e)
    }

    #[test]
    fn minimalizes() {
        let i = MonomialIdeal::new(2, vec![m(&[2, 0]), m(&[3, 1]), m(&[0, 4]), m(&[2, 0])]);
        assert_eq!(i.gens(), &[m(&[2, 0]), m(&[0, 4])]);
        assert!(i.is_artinian());
        assert_eq!(i.hilbert_vector(), vec![1, 2, 2, 2, 1]);
    }

    #[test]
    fn incremental_count_matches_brute_force() {
        let i = MonomialIdeal::new(3, vec![m(&[1, 1, 0]), m(&[0, 0, 2]), m(&[3, 0, 0]), m(&[0, 2, 1])]);
        for d in 0..6u32 {
            let brute = monomials_of_degree(3, d).iter().filter(|x| !i.contains(x)).count() as u64;
            assert_eq!(i.hilbert_function(d..d + 1), vec![brute]);
        }
    }
}
