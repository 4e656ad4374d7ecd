//! Exact Gröbner-basis machinery for strong Koszulness, apolarity and
//! quadratic Gröbner-basis obstructions.

pub mod apolarity;
pub mod error;
pub mod field;
pub mod gallery;
pub mod grobner;
pub mod ideal;
pub mod koszul;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod suite;
pub mod universal;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use grobner::{GroebnerBasis, MonomialIdeal};
pub use ideal::IdealPresentation;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Polynomial, Ring, RingRef};
pub use rational::Rational;
