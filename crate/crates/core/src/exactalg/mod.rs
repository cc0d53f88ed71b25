//! Exact arithmetic over the rationals: polynomials and rational functions in one
//! variable `t`, matrices over `Q(t)`, and truncated power series.

mod matrix;
mod polynomial;
mod rational_function;

pub use matrix::{convolve, first_mismatch, RatMatrix, SeriesMatrix};
pub use polynomial::Polynomial;
pub use rational_function::RationalFunction;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("singular matrix")]
    Singular,
    #[error("{0} has a pole at t = 0 and no power series expansion")]
    NotAPowerSeries(String),
}

/// `-t/(1+t)`, the substitution turning an f-polynomial into a reciprocal growth series.
pub fn minus_t_over_one_plus_t() -> RationalFunction {
    RationalFunction::from_ints(&[0, -1], &[1, 1])
}

/// `t^2/(1-t^2)`
pub fn t2_over_one_minus_t2() -> RationalFunction {
    RationalFunction::from_ints(&[0, 0, 1], &[1, 0, -1])
}

/// `-t/(1-t^2)`
pub fn minus_t_over_one_minus_t2() -> RationalFunction {
    RationalFunction::from_ints(&[0, -1], &[1, 0, -1])
}
