use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};

use super::gcd::gcd;
use super::monomial::{Monomial, Variable};
use super::poly::LaurentPoly;
use super::{AlgebraError, Rational};

/// An exact element of Q(x_i): a reduced fraction of Laurent polynomials.
///
/// The denominator is always a genuine polynomial without monomial content
/// whose lowest-degree term (the first one printed) has coefficient 1, and it
/// shares no factor with the numerator. Two scalars are therefore equal exactly when their
/// representations are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(k: i64) -> Self {
        Scalar::from_poly(LaurentPoly::from_int(k))
    }

    pub fn from_rational(c: Rational) -> Self {
        Scalar::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_bigint(k: BigInt) -> Self {
        Scalar::from_rational(Rational::from_integer(k))
    }

    pub fn var(v: Variable) -> Self {
        Scalar::from_poly(LaurentPoly::var(v))
    }

    pub fn x(i: i32) -> Self {
        Scalar::var(Variable::x(i))
    }

    pub fn monomial(m: Monomial) -> Self {
        Scalar::from_poly(LaurentPoly::term(m, Rational::one()))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Scalar {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// Builds `num / den` in canonical form.
    pub fn from_fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Scalar::reduce(num, den))
    }

    /// Trusts the caller that `den` is canonical and coprime to `num`.
    pub(crate) fn from_coprime(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            Scalar::zero()
        } else {
            Scalar { num, den }
        }
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        if let Some((m, c)) = den.as_term() {
            let inv = c.recip();
            let minv = m.inv();
            return Scalar::from_poly(num.mul_monomial(&minv).scale(&inv));
        }
        let content = den.monomial_content();
        let (mut num, mut den) = if content.is_one() {
            (num, den)
        } else {
            let ci = content.inv();
            (num.mul_monomial(&ci), den.mul_monomial(&ci))
        };
        let lc = den.display_leading_term().map(|(_, c)| c.clone()).unwrap();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        let g = gcd(&num, &den);
        if g.is_one() {
            return Scalar { num, den };
        }
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        // Dividing by a monic content-free factor keeps the denominator canonical.
        Scalar { num, den }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a rational number, if it has no variables.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }

    pub fn recip(&self) -> Result<Scalar, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        // Swapping keeps the pair coprime; only the new denominator needs
        // normalizing.
        let (num, den) = (self.den.clone(), self.num.clone());
        if let Some((m, c)) = den.as_term() {
            let inv = c.recip();
            return Ok(Scalar::from_poly(num.mul_monomial(&m.inv()).scale(&inv)));
        }
        let content = den.monomial_content();
        let ci = content.inv();
        let den = den.mul_monomial(&ci);
        let num = num.mul_monomial(&ci);
        let lc = den.display_leading_term().map(|(_, c)| c.clone()).unwrap();
        let inv = lc.recip();
        Ok(Scalar {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, AlgebraError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, k: i32) -> Result<Scalar, AlgebraError> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let k = k.unsigned_abs();
        if let Some((m, c)) = base.num.as_term() {
            if base.den.is_one() {
                let mut cc = Rational::one();
                for _ in 0..k {
                    cc *= c;
                }
                return Ok(Scalar::from_poly(LaurentPoly::term(m.pow(k as i32), cc)));
            }
        }
        Ok(Scalar {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    pub fn variables(&self) -> std::collections::BTreeSet<Variable> {
        let mut v = self.num.variables();
        v.extend(self.den.variables());
        v
    }

    /// Canonical text form: `num` or `(num)/(den)`.
    pub fn to_canonical_string(&self) -> String {
        if self.den.is_one() {
            return self.num.to_canonical_string();
        }
        let n = self.num.to_canonical_string();
        let d = self.den.to_canonical_string();
        if self.num.len() == 1 && !n.contains('/') {
            format!("{n}/({d})")
        } else {
            format!("({n})/({d})")
        }
    }
}

fn add_scalars(a: &Scalar, b: &Scalar) -> Scalar {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.den.is_one() && b.den.is_one() {
        return Scalar::from_poly(&a.num + &b.num);
    }
    if a.den == b.den {
        return Scalar::reduce(&a.num + &b.num, a.den.clone());
    }
    let g = gcd(&a.den, &b.den);
    if g.is_one() {
        // Coprime denominators: the sum is already reduced.
        let num = &(&a.num * &b.den) + &(&b.num * &a.den);
        if num.is_zero() {
            return Scalar::zero();
        }
        return Scalar {
            num,
            den: &a.den * &b.den,
        };
    }
    let bd = a.den.div_exact(&g).unwrap();
    let dd = b.den.div_exact(&g).unwrap();
    let num = &(&a.num * &dd) + &(&b.num * &bd);
    if num.is_zero() {
        return Scalar::zero();
    }
    // Only factors of g can survive in common; repeated factors may need
    // several rounds.
    let (mut num, mut g) = (num, g);
    loop {
        let g2 = gcd(&num, &g);
        if g2.is_one() {
            break;
        }
        num = num.div_exact(&g2).unwrap();
        g = g.div_exact(&g2).unwrap();
    }
    Scalar {
        num,
        den: &(&bd * &dd) * &g,
    }
}

fn mul_scalars(a: &Scalar, b: &Scalar) -> Scalar {
    if a.is_zero() || b.is_zero() {
        return Scalar::zero();
    }
    if a.is_constant() && b.is_constant() {
        return Scalar::from_poly(&a.num * &b.num);
    }
    if a.den.is_one() && b.den.is_one() {
        return Scalar::from_poly(&a.num * &b.num);
    }
    let (an, bd) = cancel(&a.num, &b.den);
    let (bn, ad) = cancel(&b.num, &a.den);
    let num = &an * &bn;
    let den = &ad * &bd;
    Scalar { num, den }
}

fn cancel(n: &LaurentPoly, d: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    if d.is_one() || n.len() == 1 {
        return (n.clone(), d.clone());
    }
    let g = gcd(n, d);
    if g.is_one() {
        (n.clone(), d.clone())
    } else {
        (n.div_exact(&g).unwrap(), d.div_exact(&g).unwrap())
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        add_scalars(self, rhs)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        add_scalars(self, &-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        mul_scalars(self, rhs)
    }
}

/// Panics on division by zero; use [`Scalar::checked_div`] where the divisor
/// may vanish.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -self.num,
            den: self.den,
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: &'a Scalar) -> Scalar {
                (&self).$f(rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl Sum for Scalar {
    /// Pairwise summation keeps intermediate denominators small.
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut items: Vec<Scalar> = iter.collect();
        if items.is_empty() {
            return Scalar::zero();
        }
        while items.len() > 1 {
            let mut next = Vec::with_capacity(items.len().div_ceil(2));
            let mut it = items.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(&a + &b),
                    None => next.push(a),
                }
            }
            items = next;
        }
        items.pop().unwrap()
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.cloned().sum()
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| &acc * &x)
    }
}

impl<'a> Product<&'a Scalar> for Scalar {
    fn product<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| &acc * x)
    }
}

impl From<i64> for Scalar {
    fn from(k: i64) -> Self {
        Scalar::from_int(k)
    }
}

impl From<Rational> for Scalar {
    fn from(c: Rational) -> Self {
        Scalar::from_rational(c)
    }
}

impl From<LaurentPoly> for Scalar {
    fn from(p: LaurentPoly) -> Self {
        Scalar::from_poly(p)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_canonical_string())
    }
}
