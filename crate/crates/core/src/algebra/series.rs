use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::monomial::Monomial;
use super::poly::LaurentPoly;
use super::{AlgebraError, Rational, Scalar};

/// A power series truncated at total degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    degree: u32,
    poly: LaurentPoly,
}

impl TruncatedSeries {
    pub fn zero(degree: u32) -> Self {
        TruncatedSeries {
            degree,
            poly: LaurentPoly::zero(),
        }
    }

    pub fn one(degree: u32) -> Self {
        TruncatedSeries {
            degree,
            poly: LaurentPoly::one(),
        }
    }

    /// Truncates a polynomial; negative exponents are rejected.
    pub fn from_poly(p: &LaurentPoly, degree: u32) -> Result<Self, AlgebraError> {
        if !p
            .terms()
            .all(|(m, _)| m.exponents().iter().all(|&(_, e)| e > 0))
        {
            return Err(AlgebraError::NotPowerSeries(p.to_canonical_string()));
        }
        Ok(TruncatedSeries {
            degree,
            poly: LaurentPoly::from_terms(
                p.terms()
                    .filter(|(m, _)| m.total_degree() <= degree as i64)
                    .map(|(m, c)| (m.clone(), c.clone())),
            ),
        })
    }

    pub fn monomial(m: &Monomial, degree: u32) -> Result<Self, AlgebraError> {
        TruncatedSeries::from_poly(&LaurentPoly::term(m.clone(), Rational::one()), degree)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.poly.coefficient(m)
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let degree = self.degree.min(other.degree);
        let p = &self.poly + &other.poly;
        TruncatedSeries::from_poly(&p, degree).expect("sum of series")
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let degree = self.degree.min(other.degree);
        let bound = degree as i64;
        let mut out = LaurentPoly::zero();
        for (ma, ca) in self.poly.terms() {
            let da = ma.total_degree();
            if da > bound {
                continue;
            }
            for (mb, cb) in other.poly.terms() {
                if da + mb.total_degree() <= bound {
                    out.add_term(ma.mul(mb), ca * cb);
                }
            }
        }
        TruncatedSeries { degree, poly: out }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<TruncatedSeries, AlgebraError> {
        let c0 = self.poly.constant_term();
        if c0.is_zero() {
            return Err(AlgebraError::NotAUnit(self.poly.to_canonical_string()));
        }
        let inv0 = c0.recip();
        // 1/s = inv0 * sum_k (1 - inv0*s)^k, and (1 - inv0*s) has no constant term.
        let mut nil = self.scale(&-inv0.clone());
        nil.poly.add_term(Monomial::one(), Rational::one());
        let mut acc = TruncatedSeries::one(self.degree);
        let mut power = TruncatedSeries::one(self.degree);
        for _ in 0..self.degree {
            power = power.mul(&nil);
            if power.poly.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc.scale(&inv0))
    }

    pub fn scale(&self, c: &Rational) -> TruncatedSeries {
        TruncatedSeries {
            degree: self.degree,
            poly: self.poly.scale(c),
        }
    }

    /// Applies a degree-preserving monomial substitution such as `x_l -> q`.
    pub fn map_monomials<F: FnMut(&Monomial) -> Monomial>(&self, f: F) -> TruncatedSeries {
        let p = self.poly.map_monomials(f);
        TruncatedSeries::from_poly(&p, self.degree).expect("substitution keeps exponents positive")
    }
}

/// Power-series expansion of `s` up to total degree `degree`.
pub fn series_truncate(s: &Scalar, degree: u32) -> Result<TruncatedSeries, AlgebraError> {
    let den = s.denom();
    if den.constant_term().is_zero() {
        return Err(AlgebraError::NotAUnit(den.to_canonical_string()));
    }
    let num = TruncatedSeries::from_poly(s.numer(), degree)?;
    let den = TruncatedSeries::from_poly(den, degree)?;
    Ok(num.mul(&den.inverse()?))
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}+O({})",
            self.poly.to_canonical_string(),
            self.degree + 1
        )
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Variable;

    fn q() -> Scalar {
        Scalar::var(Variable::symbol('q'))
    }

    #[test]
    fn geometric_series() {
        let one = Scalar::one();
        let s = series_truncate(&(&one / &(&one - &q())), 3).unwrap();
        assert_eq!(s.poly().to_canonical_string(), "1+q+q^2+q^3");
    }

    #[test]
    fn polynomial_quotient() {
        let one = Scalar::one();
        let q2 = &q() * &q();
        let s = series_truncate(&(&(&one - &q2) / &(&one - &q())), 4).unwrap();
        assert_eq!(s.poly().to_canonical_string(), "1+q");
        assert_eq!(series_truncate(&one, 5).unwrap(), TruncatedSeries::one(5));
    }

    #[test]
    fn non_unit_denominator_fails() {
        let s = &Scalar::one() / &(&q() + &(&q() * &q()));
        assert!(series_truncate(&s, 3).is_err());
    }
}
