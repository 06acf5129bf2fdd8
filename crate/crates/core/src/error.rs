use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::shapes::ShapeError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error("point ({i},{j}) is not in the lattice")]
    OutsideLattice { i: i64, j: i64 },
    #[error("{0} lies outside the declared window")]
    Window(String),
    #[error("({i},{j}) is not a convex corner")]
    NotCorner { i: i64, j: i64 },
    #[error("profile must be weakly decreasing: {0:?}")]
    BadProfile(Vec<i64>),
    #[error("no weight rule applies to the vertical edge below ({i},{j})")]
    NoWeightRule { i: i64, j: i64 },
    #[error("tau minor vanishes at (s,t,n) = ({s},{t},{n})")]
    SingularMinor { s: i64, t: i64, n: i64 },
    #[error("solution value {field}({s},{t},{n}) vanishes")]
    Vanishing { field: char, s: i64, t: i64, n: i64 },
    #[error("no alpha is defined at ({u},{v})")]
    UndefinedAlpha { u: i64, v: i64 },
    #[error("alpha at ({u},{v}) needs level {k}, outside [0, {n})")]
    AlphaRange { u: i64, v: i64, k: i64, n: i64 },
    #[error("rpp weight undefined at cell ({i},{j}): {reason}")]
    Weight { i: usize, j: usize, reason: String },
    #[error("bijection: {0}")]
    Bijection(String),
    #[error("gauge factor for column {0} is zero")]
    ZeroGauge(i64),
    #[error("no nonsingular sample found after {0} attempts")]
    ResampleExhausted(u32),
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
