use std::cmp::Ordering;
use std::fmt;

/// A formal indeterminate such as `x[-1]`, `p[3]` or a bare `q`.
///
/// Variables order by family first, then by index (an unindexed variable
/// sorts before every indexed member of its family).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variable {
    family: char,
    index: Option<i32>,
}

impl Variable {
    pub const fn indexed(family: char, index: i32) -> Self {
        Variable {
            family,
            index: Some(index),
        }
    }

    pub const fn symbol(family: char) -> Self {
        Variable {
            family,
            index: None,
        }
    }

    /// Shorthand for the diagonal variables `x[l]` used throughout the
    /// partition-function identities.
    pub const fn x(index: i32) -> Self {
        Variable::indexed('x', index)
    }

    pub fn family(&self) -> char {
        self.family
    }

    pub fn index(&self) -> Option<i32> {
        self.index
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{}[{}]", self.family, i),
            None => write!(f, "{}", self.family),
        }
    }
}

/// A Laurent monomial: a sparse exponent vector sorted by variable, with no
/// zero exponents stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Variable, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Variable) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn var_pow(v: Variable, e: i32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    /// Builds a monomial from arbitrary (variable, exponent) pairs, merging
    /// repeats and dropping zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (Variable, i32)>>(pairs: I) -> Self {
        let mut v: Vec<(Variable, i32)> = pairs.into_iter().collect();
        v.sort_by_key(|a| a.0);
        let mut out: Vec<(Variable, i32)> = Vec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        out.retain(|&(_, e)| e != 0);
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[(Variable, i32)] {
        &self.0
    }

    pub fn exponent(&self, v: Variable) -> i32 {
        match self.0.binary_search_by(|p| p.0.cmp(&v)) {
            Ok(k) => self.0[k].1,
            Err(_) => 0,
        }
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&(_, e)| e > 0)
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.combine(other, 1)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.combine(other, -1)
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// True when `other` divides `self` in the polynomial sense, i.e. the
    /// quotient has no negative exponents.
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        other.0.iter().all(|&(v, e)| self.exponent(v) >= e)
    }

    /// Splits off the part of the monomial in the given variables.
    pub fn split<F: Fn(Variable) -> bool>(&self, pred: F) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.0.iter().partition(|&&(v, _)| pred(v));
        (Monomial(a), Monomial(b))
    }

    /// Exponent-wise minimum, treating missing variables as exponent zero.
    pub fn gcd_with(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.0, &other.0);
        while i < a.len() || j < b.len() {
            let take = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => match x.0.cmp(&y.0) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (x.0, x.1.min(y.1))
                    }
                    Ordering::Less => {
                        i += 1;
                        (x.0, x.1.min(0))
                    }
                    Ordering::Greater => {
                        j += 1;
                        (y.0, y.1.min(0))
                    }
                },
                (Some(x), None) => {
                    i += 1;
                    (x.0, x.1.min(0))
                }
                (None, Some(y)) => {
                    j += 1;
                    (y.0, y.1.min(0))
                }
                (None, None) => unreachable!(),
            };
            if take.1 != 0 {
                out.push(take);
            }
        }
        Monomial(out)
    }

    fn combine(&self, other: &Monomial, sign: i32) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, sign * b[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + sign * b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(v, e)| (v, sign * e)));
        Monomial(out)
    }
}

/// Lexicographic monomial order: the smallest variable is the most
/// significant. Compatible with multiplication, so it is a valid term order on
/// polynomials and a total group order on Laurent monomials.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(x), None) => return x.1.cmp(&0),
                (None, Some(y)) => return 0.cmp(&y.1),
                (Some(x), Some(y)) => match x.0.cmp(&y.0) {
                    Ordering::Equal => {
                        if x.1 != y.1 {
                            return x.1.cmp(&y.1);
                        }
                        i += 1;
                        j += 1;
                    }
                    Ordering::Less => return x.1.cmp(&0),
                    Ordering::Greater => return 0.cmp(&y.1),
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: i32) -> Variable {
        Variable::x(i)
    }

    #[test]
    fn lex_order_is_multiplicative() {
        let a = Monomial::from_pairs([(x(0), 1)]);
        let b = Monomial::from_pairs([(x(1), 5)]);
        assert!(a > b);
        let m = Monomial::from_pairs([(x(2), 3), (x(-1), -1)]);
        assert_eq!(a.mul(&m).cmp(&b.mul(&m)), Ordering::Greater);
        assert!(Monomial::one() < Monomial::var(x(7)));
        assert!(Monomial::one() > Monomial::var_pow(x(7), -1));
    }

    #[test]
    fn merging_drops_zero_exponents() {
        let m = Monomial::from_pairs([(x(0), 2), (x(1), 1), (x(0), -2)]);
        assert_eq!(m, Monomial::var(x(1)));
        assert!(m.mul(&m.inv()).is_one());
    }

    #[test]
    fn gcd_with_uses_zero_for_missing() {
        let a = Monomial::from_pairs([(x(0), 2), (x(1), -1)]);
        let b = Monomial::from_pairs([(x(0), 1), (x(2), 3)]);
        assert_eq!(
            a.gcd_with(&b),
            Monomial::from_pairs([(x(0), 1), (x(1), -1)])
        );
    }

    #[test]
    fn display() {
        let m = Monomial::from_pairs([(x(-1), 1), (x(0), 2), (Variable::symbol('q'), 1)]);
        assert_eq!(m.to_string(), "q*x[-1]*x[0]^2");
    }
}
