//! Exact coefficient field: rationals and reduced rational functions in
//! integer-indexed formal variables.

mod bracket;
mod det;
mod factored;
mod fraction_sum;
mod gcd;
mod monomial;
mod parse;
mod poly;
mod scalar;
mod series;
mod subst;

use thiserror::Error;

pub use bracket::{bracket, var_bracket, BracketConvention};
pub use det::{bareiss_det, cofactor_det, det_exact};
pub use factored::FactoredFraction;
pub use fraction_sum::FractionSum;
pub use gcd::{gcd, normalize};
pub use monomial::{Monomial, Variable};
pub use parse::parse_scalar;
pub use poly::LaurentPoly;
pub use scalar::Scalar;
pub use series::{series_truncate, TruncatedSeries};
pub use subst::{specialize, specialize_family};

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator {factor} vanishes under the substitution")]
    Pole { factor: String },
    #[error("no value assigned to variable {0}")]
    Unassigned(String),
    #[error("{0} is not a unit in the power-series ring")]
    NotAUnit(String),
    #[error("{0} has negative exponents and is not a power series")]
    NotPowerSeries(String),
    #[error("matrix has {rows} rows but a row of length {cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// The symbol used for the single-variable specialization.
pub fn q() -> Variable {
    Variable::symbol('q')
}
