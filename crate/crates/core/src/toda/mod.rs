//! The discrete two-dimensional Toda molecule: solutions built from sample
//! functions through Hankel-type determinants, closed-form solutions, and exact
//! checks of the evolution equations and the path-sum identities.

mod checks;
mod closed_form;
mod sample;

use crate::algebra::{Scalar, Variable};
use crate::error::Result;

pub use checks::{
    corner_deletion_check, fundamental_check, gauge_check, ni_sum_check, ni_sum_values,
    sample_until, verify_bilinear, verify_evolution, Window,
};
pub use closed_form::{ClosedForm, Family};
pub use sample::{ab_from_f, AbSolution, SampleFunction};

/// Evaluators for the fields `a^(s,t)_n` and `b^(s,t)_n`.
///
/// Implementations hardwire `b(s, t, 0) = 0`.
pub trait TodaSolution: Sync {
    fn a(&self, s: i64, t: i64, n: i64) -> Result<Scalar>;
    fn b(&self, s: i64, t: i64, n: i64) -> Result<Scalar>;
}

/// Every `a^(s,t)_n` and `b^(s,t)_n` (n >= 1) an independent formal variable.
///
/// This does not solve the evolution equations; it exposes which labels a
/// combinatorial quantity consumes.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeLabels;

impl FreeLabels {
    fn encode(s: i64, t: i64, n: i64) -> i32 {
        assert!((-100..100).contains(&s) && (-100..100).contains(&t) && (0..100).contains(&n));
        (((s + 100) * 200 + (t + 100)) * 100 + n) as i32
    }

    /// Inverse of the variable index encoding: `(s, t, n)`.
    pub fn decode(index: i32) -> (i64, i64, i64) {
        let k = index as i64;
        let n = k % 100;
        let st = k / 100;
        (st / 200 - 100, st % 200 - 100, n)
    }
}

impl TodaSolution for FreeLabels {
    fn a(&self, s: i64, t: i64, n: i64) -> Result<Scalar> {
        Ok(Scalar::var(Variable::indexed(
            'a',
            FreeLabels::encode(s, t, n),
        )))
    }

    fn b(&self, s: i64, t: i64, n: i64) -> Result<Scalar> {
        if n == 0 {
            return Ok(Scalar::zero());
        }
        Ok(Scalar::var(Variable::indexed(
            'b',
            FreeLabels::encode(s, t, n),
        )))
    }
}

impl<T: TodaSolution + ?Sized> TodaSolution for &T {
    fn a(&self, s: i64, t: i64, n: i64) -> Result<Scalar> {
        (**self).a(s, t, n)
    }

    fn b(&self, s: i64, t: i64, n: i64) -> Result<Scalar> {
        (**self).b(s, t, n)
    }
}
