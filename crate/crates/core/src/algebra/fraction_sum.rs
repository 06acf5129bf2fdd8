use super::factored::FactoredFraction;
use super::poly::LaurentPoly;
use super::{AlgebraError, Scalar};

/// Accumulates fractions whose denominators come as explicit factor lists.
///
/// The running denominator is kept factored so the sum never needs a gcd
/// until [`FractionSum::finish`].
#[derive(Clone, Debug, Default)]
pub struct FractionSum {
    acc: FactoredFraction,
}

impl FractionSum {
    pub fn new() -> Self {
        FractionSum::default()
    }

    /// Adds `num / prod(den_factors)`.
    pub fn add(
        &mut self,
        num: &LaurentPoly,
        den_factors: &[LaurentPoly],
    ) -> Result<(), AlgebraError> {
        if num.is_zero() {
            return Ok(());
        }
        let term = FactoredFraction::new(num.clone(), den_factors)?;
        self.acc = self.acc.add(&term);
        Ok(())
    }

    pub fn add_fraction(&mut self, term: &FactoredFraction) {
        self.acc = self.acc.add(term);
    }

    /// Reduces the accumulated fraction to a canonical scalar.
    pub fn finish(self) -> Scalar {
        self.acc.to_scalar()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Variable;

    fn x(i: i32) -> LaurentPoly {
        LaurentPoly::var(Variable::x(i))
    }

    #[test]
    fn matches_scalar_addition() {
        let one = LaurentPoly::one();
        let f1 = &one - &x(0);
        let f2 = &one - &(&x(0) * &x(1));
        let mut acc = FractionSum::new();
        acc.add(&one, std::slice::from_ref(&f1)).unwrap();
        acc.add(&x(1), &[f1.clone(), f2.clone()]).unwrap();
        acc.add(&(-&x(0)), &[-&f1, f2.clone()]).unwrap();
        let s1 = Scalar::from_fraction(one.clone(), f1.clone()).unwrap();
        let s2 = Scalar::from_fraction(x(1), &f1 * &f2).unwrap();
        let s3 = Scalar::from_fraction(x(0), &f1 * &f2).unwrap();
        assert_eq!(acc.finish(), &(&s1 + &s2) + &s3);
    }

    #[test]
    fn cancellation_to_polynomial() {
        let one = LaurentPoly::one();
        let q = LaurentPoly::var(Variable::symbol('q'));
        let f = &one - &q;
        let mut acc = FractionSum::new();
        acc.add(&one, std::slice::from_ref(&f)).unwrap();
        acc.add(&(-&q), std::slice::from_ref(&f)).unwrap();
        assert!(acc.finish().is_one());
    }
}
