//! Field arithmetic and dense univariate polynomials.
//!
//! Everything else in the crate is built on [`FieldValue`] and
//! [`Polynomial`]. Arithmetic is exact: rationals are arbitrary precision
//! and residues are reduced modulo a small prime.

mod field;
mod matrix;
mod poly;
mod series;

pub use field::{is_prime, Field, FieldValue};
pub use matrix::DenseMatrix;
pub use poly::Polynomial;
pub use series::{power_series_inverse, series_coefficients_of_quotient, taylor_coefficients};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("denominator vanishes at the expansion center")]
    PoleAtCenter,
    #[error("{0}")]
    Parse(String),
}
