use std::collections::BTreeMap;

use super::gcd::{certified_irreducible, normalize};
use super::poly::LaurentPoly;
use super::{AlgebraError, Scalar};

/// A fraction whose denominator is kept as a multiset of normalized factors.
///
/// Sums only ever lift numerators by the factors they miss, so no gcd is
/// needed until [`FactoredFraction::to_scalar`].
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FactoredFraction {
    num: LaurentPoly,
    den: BTreeMap<String, (LaurentPoly, u32)>,
}

impl FactoredFraction {
    pub fn zero() -> Self {
        FactoredFraction::default()
    }

    pub fn one() -> Self {
        FactoredFraction::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        FactoredFraction {
            num,
            den: BTreeMap::new(),
        }
    }

    /// `num / prod(den_factors)`.
    pub fn new(num: LaurentPoly, den_factors: &[LaurentPoly]) -> Result<Self, AlgebraError> {
        let mut out = FactoredFraction::from_poly(num);
        for f in den_factors {
            out.divide_by(f)?;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    /// Denominator factors with multiplicities.
    pub fn factors(&self) -> impl Iterator<Item = (&LaurentPoly, u32)> {
        self.den.values().map(|(f, k)| (f, *k))
    }

    /// Divides by one more factor.
    pub fn divide_by(&mut self, f: &LaurentPoly) -> Result<(), AlgebraError> {
        if f.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let g = normalize(f);
        // f = unit * g; fold the unit into the numerator.
        let unit = f.div_exact(&g).expect("normalized factor divides");
        let (m, c) = unit.as_term().expect("unit is a term");
        self.num = self.num.mul_monomial(&m.inv()).scale(&c.recip());
        if !g.is_one() {
            let slot = self.den.entry(g.to_canonical_string()).or_insert((g, 0));
            slot.1 += 1;
        }
        Ok(())
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        FactoredFraction {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &FactoredFraction) -> Self {
        let mut den = self.den.clone();
        for (name, (f, k)) in &other.den {
            den.entry(name.clone()).or_insert((f.clone(), 0)).1 += k;
        }
        FactoredFraction {
            num: &self.num * &other.num,
            den,
        }
    }

    /// Sum over the least common multiple of the two factor multisets.
    pub fn add(&self, other: &FactoredFraction) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let mut den = self.den.clone();
        for (name, (f, k)) in &other.den {
            let slot = den.entry(name.clone()).or_insert((f.clone(), 0));
            slot.1 = slot.1.max(*k);
        }
        let lift = |x: &FactoredFraction| {
            let mut p = LaurentPoly::one();
            for (name, (f, k)) in &den {
                let have = x.den.get(name).map_or(0, |e| e.1);
                for _ in have..*k {
                    p = &p * f;
                }
            }
            if p.is_one() {
                x.num.clone()
            } else {
                &x.num * &p
            }
        };
        FactoredFraction {
            num: &lift(self) + &lift(other),
            den,
        }
    }

    /// Cancels denominator factors that divide the numerator.
    pub fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        for (f, k) in self.den.values_mut() {
            while *k > 0 {
                match self
                    .num
                    .div_linear(f)
                    .unwrap_or_else(|| self.num.div_exact(f))
                {
                    Some(q) => {
                        self.num = q;
                        *k -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|_, (_, k)| *k > 0);
    }

    /// The canonical scalar. When every remaining factor is certified
    /// irreducible, cancelling the factors that divide the numerator is
    /// already a full reduction.
    pub fn to_scalar(mut self) -> Scalar {
        self.reduce();
        if self.num.is_zero() {
            return Scalar::zero();
        }
        let mut den = LaurentPoly::one();
        let mut all_irreducible = true;
        for (f, k) in self.den.values() {
            all_irreducible &= certified_irreducible(f);
            for _ in 0..*k {
                den = &den * f;
            }
        }
        if all_irreducible {
            Scalar::from_coprime(self.num, den)
        } else {
            Scalar::from_fraction(self.num, den).expect("nonzero denominator")
        }
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
    fn agrees_with_scalar_arithmetic() {
        let one = LaurentPoly::one();
        let f1 = &one - &x(0);
        let f2 = &one - &(&x(0) * &x(1));
        let a = FactoredFraction::new(x(1), &[f1.clone(), f2.clone()]).unwrap();
        let b = FactoredFraction::new(-&x(0), &[-&f1]).unwrap();
        let sa = Scalar::from_fraction(x(1), &f1 * &f2).unwrap();
        let sb = Scalar::from_fraction(x(0), f1.clone()).unwrap();
        assert_eq!(a.add(&b).to_scalar(), &sa + &sb);
        assert_eq!(a.mul(&b).to_scalar(), &sa * &sb);
        let mut c = FactoredFraction::new(&f1 * &f2, &[f1.clone(), f1.clone()]).unwrap();
        c.reduce();
        assert_eq!(c.factors().count(), 1);
        assert_eq!(c.to_scalar(), Scalar::from_fraction(f2, f1).unwrap());
    }
}
