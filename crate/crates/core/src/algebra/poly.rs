use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, Variable};
use super::Rational;

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
///
/// Terms are kept in lexicographic monomial order; zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        LaurentPoly::term(Monomial::one(), c)
    }

    pub fn from_int(c: i64) -> Self {
        LaurentPoly::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: Variable) -> Self {
        LaurentPoly::term(Monomial::var(v), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                == Some(true)
    }

    /// Returns the value when the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    /// A single term with coefficient of any value.
    pub fn as_term(&self) -> Option<(&Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    /// Lexicographically leading term.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// The first term in canonical display order (lowest total degree, then
    /// lexicographically largest). Its coefficient fixes the scaling of a
    /// normalized denominator.
    pub fn display_leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().min_by(|a, b| display_order(a.0, b.0))
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms.keys().flat_map(|m| m.variables()).collect()
    }

    pub fn degree_in(&self, v: Variable) -> i32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn min_total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .min()
            .unwrap_or(0)
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.is_polynomial())
    }

    /// The largest monomial dividing every term (exponent-wise minimum, with
    /// absent variables counted as exponent zero).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => m.clone(),
            None => return Monomial::one(),
        };
        // Start from the first term, then clamp by every other term.
        let mut acc: BTreeMap<Variable, i32> = first.exponents().iter().copied().collect();
        let mut seen_all: BTreeSet<Variable> = acc.keys().copied().collect();
        for m in it {
            for (v, e) in m.exponents() {
                if !seen_all.contains(v) {
                    seen_all.insert(*v);
                    acc.insert(*v, (*e).min(0));
                } else {
                    let slot = acc.entry(*v).or_insert(0);
                    *slot = (*slot).min(*e);
                }
            }
            for (v, slot) in acc.iter_mut() {
                if m.exponent(*v) == 0 {
                    *slot = (*slot).min(0);
                }
            }
        }
        Monomial::from_pairs(acc)
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        if m.is_one() {
            return self.clone();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Groups terms by their exponents in `v`: `self = sum_e v^e * coeff[e]`.
    pub fn coefficients_in(&self, v: Variable) -> BTreeMap<i32, LaurentPoly> {
        let mut out: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let rest = m.div(&Monomial::var_pow(v, e));
            out.entry(e).or_default().terms.insert(rest, c.clone());
        }
        out
    }

    /// Exact polynomial division. Both operands are treated as ordinary
    /// polynomials (the quotient may not introduce negative exponents beyond
    /// those already present); returns `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if let Some((m, c)) = divisor.as_term() {
            let inv = c.recip();
            return Some(LaurentPoly {
                terms: self
                    .terms
                    .iter()
                    .map(|(k, a)| (k.div(m), a * &inv))
                    .collect(),
            });
        }
        // Quick degree test: a divisor cannot exceed the dividend's spread.
        for v in divisor.variables() {
            let (dl, dh) = exponent_range(divisor, v);
            let (nl, nh) = exponent_range(self, v);
            if dh - dl > nh - nl {
                return None;
            }
        }
        let (lm, lc) = divisor
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let lc_inv = lc.recip();
        // The divisor's trailing term bounds how far the remainder may descend.
        let (tm, _) = divisor.terms.iter().next().unwrap();
        let (low_self, _) = self.terms.iter().next().unwrap();
        let floor = low_self.div(tm);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = m.div(&lm);
            if qm < floor || !laurent_quotient_ok(&m, &lm, &qm, self, divisor) {
                return None;
            }
            let qc = &c * &lc_inv;
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quot.terms.insert(qm, qc);
        }
        Some(quot)
    }

    /// Exact division in the Laurent ring by a divisor of degree one in some
    /// variable `v` whose `v`-free part is a single term. Monomials are units
    /// here, so the quotient may carry new negative exponents.
    ///
    /// Returns `None` when no such variable exists, `Some(None)` on a
    /// remainder.
    pub(crate) fn div_linear(&self, divisor: &LaurentPoly) -> Option<Option<LaurentPoly>> {
        let (v, parts) = divisor.variables().into_iter().find_map(|v| {
            let parts = divisor.coefficients_in(v);
            let ok = parts.len() == 2
                && parts.contains_key(&0)
                && parts.contains_key(&1)
                && parts[&0].as_term().is_some();
            ok.then_some((v, parts))
        })?;
        let (m0, c0) = parts[&0]
            .as_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let f1 = &parts[&1];
        let inv_m0 = m0.inv();
        let inv_c0 = c0.recip();
        let rows = self.coefficients_in(v);
        let (Some(&lo), Some(&hi)) = (rows.keys().next(), rows.keys().next_back()) else {
            return Some(Some(LaurentPoly::zero()));
        };
        let zero = LaurentPoly::zero();
        let mut quot = LaurentPoly::zero();
        let mut prev = LaurentPoly::zero();
        for e in lo..=hi {
            let r = rows.get(&e).unwrap_or(&zero) - &(f1 * &prev);
            if e == hi {
                if !r.is_zero() {
                    return Some(None);
                }
                break;
            }
            let q = r.mul_monomial(&inv_m0).scale(&inv_c0);
            for (m, c) in &q.terms {
                quot.terms
                    .insert(m.mul(&Monomial::var_pow(v, e)), c.clone());
            }
            prev = q;
        }
        Some(Some(quot))
    }

    /// Substitutes `v -> value` termwise, keeping everything else.
    pub fn map_monomials<F: FnMut(&Monomial) -> Monomial>(&self, mut f: F) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Formats with terms in ascending (total degree, lex) order; this is the
    /// canonical text form used in JSON output.
    pub fn to_canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut ts: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        ts.sort_by(|a, b| display_order(a.0, b.0));
        let mut s = String::new();
        for (k, (m, c)) in ts.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                s.push('-');
            } else if k > 0 {
                s.push('+');
            }
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                s.push_str(&m.to_string());
            }
        }
        s
    }
}

fn display_order(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| b.cmp(a))
}

fn exponent_range(p: &LaurentPoly, v: Variable) -> (i32, i32) {
    let mut lo = i32::MAX;
    let mut hi = i32::MIN;
    for m in p.terms.keys() {
        let e = m.exponent(v);
        lo = lo.min(e);
        hi = hi.max(e);
    }
    (lo, hi)
}

// In the Laurent setting the quotient exponents are bounded per variable by
// the dividend's range shifted by the divisor's; a term outside that box can
// never cancel, so the division is inexact.
fn laurent_quotient_ok(
    _m: &Monomial,
    _lm: &Monomial,
    qm: &Monomial,
    dividend: &LaurentPoly,
    divisor: &LaurentPoly,
) -> bool {
    for &(v, e) in qm.exponents() {
        let (nl, nh) = exponent_range(dividend, v);
        let (dl, dh) = exponent_range(divisor, v);
        if e < nl - dl || e > nh - dh {
            return false;
        }
    }
    true
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

fn mul_polys(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero();
    }
    if let Some((m, c)) = a.as_term() {
        return b.mul_monomial(m).scale(c);
    }
    if let Some((m, c)) = b.as_term() {
        return a.mul_monomial(m).scale(c);
    }
    let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(a.len() * b.len());
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let m = ma.mul(mb);
            let c = ca * cb;
            match acc.get_mut(&m) {
                Some(slot) => *slot += c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
    }
    LaurentPoly {
        terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        mul_polys(self, rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
