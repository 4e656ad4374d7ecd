//! Ideals given by generators, with a memo of reduced Gröbner bases.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::grobner::{buchberger_polys, BuchbergerOptions, GroebnerBasis};
use crate::monomial::MonomialOrder;
use crate::parse::{parse_file, render_file};
use crate::poly::{Polynomial, RingRef};

pub struct IdealPresentation {
    ring: RingRef,
    gens: Vec<Polynomial>,
    homogeneous: bool,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for IdealPresentation {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().expect("cache lock").clone();
        IdealPresentation {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            homogeneous: self.homogeneous,
            cache: Mutex::new(cache),
        }
    }
}

impl fmt::Debug for IdealPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdealPresentation")
            .field("vars", &self.ring.names())
            .field("field", &self.ring.field())
            .field("gens", &self.gens)
            .finish()
    }
}

impl IdealPresentation {
    /// Zero generators are dropped.
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != ring.nvars() {
                return Err(Error::Arity { expected: ring.nvars(), found: g.nvars() });
            }
            if g.ring().as_ref() != ring.as_ref() {
                return Err(Error::Invalid("generator from a different ring".into()));
            }
        }
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let homogeneous = gens.iter().all(Polynomial::is_homogeneous);
        Ok(IdealPresentation { ring: ring.clone(), gens, homogeneous, cache: Mutex::new(HashMap::new()) })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let f = parse_file(text)?;
        if f.dual {
            return Err(Error::Invalid("expected `vars:`, found a dual-form file".into()));
        }
        Self::new(&f.ring, f.polys)
    }

    pub fn render(&self) -> String {
        render_file(&self.ring, &self.gens, false)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// True when every generator has degree 2.
    pub fn is_quadratic(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous() && g.total_degree().ok() == Some(2))
    }

    /// Reduced Gröbner basis, memoized per order. Concurrent callers may
    /// compute the same basis twice; the stored result is identical.
    pub fn groebner(&self, order: &MonomialOrder) -> Arc<GroebnerBasis> {
        if let Some(gb) = self.cache.lock().expect("cache lock").get(order) {
            return gb.clone();
        }
        let gb = Arc::new(buchberger_polys(&self.ring, &self.gens, order, &BuchbergerOptions::default()));
        self.cache.lock().expect("cache lock").entry(order.clone()).or_insert(gb).clone()
    }

    /// Grevlex in declaration order.
    pub fn default_order(&self) -> MonomialOrder {
        MonomialOrder::grevlex(self.nvars())
    }

    pub fn with_gens(&self, gens: Vec<Polynomial>) -> Result<Self> {
        Self::new(&self.ring, gens)
    }

    /// `I + (extra)`.
    pub fn plus(&self, extra: &[Polynomial]) -> Result<Self> {
        let mut g = self.gens.clone();
        g.extend_from_slice(extra);
        Self::new(&self.ring, g)
    }

    /// Reduces coefficients into another field (e.g. QQ to GF(p)).
    pub fn change_field(&self, field: Field) -> Result<Self> {
        let r = self.ring.with_field(field);
        let gens = self.gens.iter().map(|g| g.change_ring(&r)).collect::<Result<Vec<_>>>()?;
        Self::new(&r, gens)
    }

    /// SHA-256 over the rendered presentation, hex-encoded.
    pub fn hash(&self) -> String {
        let digest = Sha256::digest(self.render().as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_render_round_trip() {
        let i = IdealPresentation::parse("vars: x1, x2, x3\nfield: QQ\nx1*x3 - x2^2\nx2*x3\nx3^2\n").unwrap();
        assert!(i.is_homogeneous());
        assert!(i.is_quadratic());
        let j = IdealPresentation::parse(&i.render()).unwrap();
        assert_eq!(i.gens(), j.gens());
        assert_eq!(i.hash(), j.hash());
        assert_eq!(i.hash().len(), 64);
    }

    #[test]
    fn homogeneity_is_computed() {
        let i = IdealPresentation::parse("vars: t, x\nfield: QQ\nt - x^2\n").unwrap();
        assert!(!i.is_homogeneous());
    }
}
