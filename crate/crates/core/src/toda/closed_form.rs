use std::fmt;
use std::sync::Arc;

use rand::Rng;

use super::TodaSolution;
use crate::algebra::{bracket, BracketConvention, Rational, Scalar, Variable};
use crate::error::{Error, Result};

/// A parameter sequence `l -> z_l`.
pub type Family = Arc<dyn Fn(i64) -> Scalar + Send + Sync>;

/// The explicit solution
///
/// ```text
/// a(s,t,n) = [p]_{s+1}^{s+n} (1 - a [p]_1^s [q]_1^{t+n})
/// b(s,t,n) = a [p]_1^{s+n-1} [q]_1^t (1 - [q]_{t+1}^{t+n})
/// ```
///
/// with products `[z]_m^n` read through `conv` when the range is reversed.
#[derive(Clone)]
pub struct ClosedForm {
    pub a: Scalar,
    pub p: Family,
    pub q: Family,
    pub conv: BracketConvention,
}

impl fmt::Debug for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClosedForm")
            .field("a", &self.a)
            .field("conv", &self.conv)
            .finish()
    }
}

impl ClosedForm {
    pub fn new(a: Scalar, p: Family, q: Family, conv: BracketConvention) -> Self {
        ClosedForm { a, p, q, conv }
    }

    /// Formal parameters: `a`, `p_l`, `q_l`.
    pub fn symbolic(conv: BracketConvention) -> Self {
        ClosedForm {
            a: Scalar::var(Variable::symbol('a')),
            p: Arc::new(|l| Scalar::var(Variable::indexed('p', l as i32))),
            q: Arc::new(|l| Scalar::var(Variable::indexed('q', l as i32))),
            conv,
        }
    }

    /// Random nonzero rationals `num/den` with `|num|, den` in `1..=9`, drawn
    /// for indices `-span..=span`. Indices outside that range panic.
    pub fn random_rational<R: Rng>(rng: &mut R, span: i64, conv: BracketConvention) -> Self {
        let draw = |rng: &mut R| {
            let num: i64 = rng.random_range(1..=9) * if rng.random_bool(0.5) { 1 } else { -1 };
            let den: i64 = rng.random_range(1..=9);
            Scalar::from_rational(Rational::new(num.into(), den.into()))
        };
        let a = draw(rng);
        let ps: Vec<Scalar> = (-span..=span).map(|_| draw(rng)).collect();
        let qs: Vec<Scalar> = (-span..=span).map(|_| draw(rng)).collect();
        let table = |v: Vec<Scalar>| -> Family {
            Arc::new(move |l| {
                let k = l + span;
                assert!(
                    k >= 0 && (k as usize) < v.len(),
                    "parameter index {l} outside sampled range"
                );
                v[k as usize].clone()
            })
        };
        ClosedForm {
            a,
            p: table(ps),
            q: table(qs),
            conv,
        }
    }

    fn br(&self, z: &Family, m: i64, n: i64) -> Result<Scalar> {
        Ok(bracket(|l| z(l as i64), m as i32, n as i32, self.conv)?)
    }

    /// The formula for `a` without the vanishing check.
    pub fn a_value(&self, s: i64, t: i64, n: i64) -> Result<Scalar> {
        let lead = self.br(&self.p, s + 1, s + n)?;
        let inner = &(&self.a * &self.br(&self.p, 1, s)?) * &self.br(&self.q, 1, t + n)?;
        Ok(&lead * &(&Scalar::one() - &inner))
    }

    /// The formula for `b` without the vanishing check.
    pub fn b_value(&self, s: i64, t: i64, n: i64) -> Result<Scalar> {
        let lead = &(&self.a * &self.br(&self.p, 1, s + n - 1)?) * &self.br(&self.q, 1, t)?;
        Ok(&lead * &(&Scalar::one() - &self.br(&self.q, t + 1, t + n)?))
    }
}

impl TodaSolution for ClosedForm {
    fn a(&self, s: i64, t: i64, n: i64) -> Result<Scalar> {
        let v = self.a_value(s, t, n)?;
        if v.is_zero() {
            return Err(Error::Vanishing {
                field: 'a',
                s,
                t,
                n,
            });
        }
        Ok(v)
    }

    fn b(&self, s: i64, t: i64, n: i64) -> Result<Scalar> {
        if n == 0 {
            return Ok(Scalar::zero());
        }
        let v = self.b_value(s, t, n)?;
        if v.is_zero() {
            return Err(Error::Vanishing {
                field: 'b',
                s,
                t,
                n,
            });
        }
        Ok(v)
    }
}
