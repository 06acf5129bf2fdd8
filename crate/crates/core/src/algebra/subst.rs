use std::collections::BTreeMap;

use super::monomial::{Monomial, Variable};
use super::poly::LaurentPoly;
use super::{AlgebraError, Scalar};

/// Evaluates `s` under the assignment `sigma`, which must cover every
/// variable occurring in `s`.
pub fn specialize<F>(s: &Scalar, sigma: F) -> Result<Scalar, AlgebraError>
where
    F: Fn(Variable) -> Option<Scalar>,
{
    let mut images: BTreeMap<Variable, Scalar> = BTreeMap::new();
    for v in s.variables() {
        let img = sigma(v).ok_or_else(|| AlgebraError::Unassigned(v.to_string()))?;
        images.insert(v, img);
    }
    let monomial_images: Option<BTreeMap<Variable, Monomial>> = images
        .iter()
        .map(|(v, img)| as_unit_monomial(img).map(|m| (*v, m)))
        .collect();
    let (num, den) = match monomial_images {
        Some(map) => {
            let f = |m: &Monomial| {
                m.exponents()
                    .iter()
                    .fold(Monomial::one(), |acc, &(v, e)| acc.mul(&map[&v].pow(e)))
            };
            (
                Scalar::from_poly(s.numer().map_monomials(f)),
                Scalar::from_poly(s.denom().map_monomials(f)),
            )
        }
        None => (
            eval_poly(s.numer(), &images)?,
            eval_poly(s.denom(), &images)?,
        ),
    };
    if den.is_zero() {
        return Err(AlgebraError::Pole {
            factor: s.denom().to_canonical_string(),
        });
    }
    num.checked_div(&den)
}

/// Specializes every variable of the given family to the same value.
pub fn specialize_family(s: &Scalar, family: char, value: &Scalar) -> Result<Scalar, AlgebraError> {
    specialize(s, |v| {
        (v.family() == family)
            .then(|| value.clone())
            .or_else(|| Some(Scalar::var(v)))
    })
}

fn as_unit_monomial(s: &Scalar) -> Option<Monomial> {
    let p = s.as_poly()?;
    let (m, c) = p.as_term()?;
    use num_traits::One;
    c.is_one().then(|| m.clone())
}

fn eval_poly(p: &LaurentPoly, images: &BTreeMap<Variable, Scalar>) -> Result<Scalar, AlgebraError> {
    let mut terms = Vec::with_capacity(p.len());
    for (m, c) in p.terms() {
        let mut t = Scalar::from_rational(c.clone());
        for &(v, e) in m.exponents() {
            t = &t * &images[&v].pow(e)?;
        }
        terms.push(t);
    }
    Ok(terms.into_iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::var(Variable::symbol('q'))
    }

    #[test]
    fn linear_substitution() {
        let s = &Scalar::x(0) + &Scalar::x(1);
        let r = specialize_family(&s, 'x', &q()).unwrap();
        assert_eq!(r, &Scalar::from_int(2) * &q());
    }

    #[test]
    fn fraction_substitution_reduces() {
        let one = Scalar::one();
        let s = &(&one - &(&Scalar::x(-1) * &Scalar::x(0))) / &(&one - &Scalar::x(0));
        let r = specialize_family(&s, 'x', &q()).unwrap();
        assert_eq!(r, &one + &q());
    }

    #[test]
    fn pole_is_reported() {
        let one = Scalar::one();
        let s = &one / &(&one - &Scalar::x(0));
        let r = specialize(&s, |_| Some(Scalar::one()));
        assert!(matches!(r, Err(AlgebraError::Pole { .. })));
    }

    #[test]
    fn missing_assignment_is_reported() {
        let r = specialize(&Scalar::x(4), |_| None);
        assert!(matches!(r, Err(AlgebraError::Unassigned(_))));
    }
}
