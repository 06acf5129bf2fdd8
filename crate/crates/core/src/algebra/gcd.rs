//! Multivariate polynomial gcd over Q.
//!
//! Inputs are Laurent polynomials; monomials are units in the Laurent ring so
//! the result is always a true polynomial with no monomial content, scaled so
//! that its first term in display order has coefficient one.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::monomial::{Monomial, Variable};
use super::poly::LaurentPoly;
use super::Rational;

/// Strips monomial content and scales the first displayed term to coefficient one.
pub fn normalize(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let content = p.monomial_content();
    let q = if content.is_one() {
        p.clone()
    } else {
        p.mul_monomial(&content.inv())
    };
    let lc = q.display_leading_term().map(|(_, c)| c.clone()).unwrap();
    if lc.is_one() {
        q
    } else {
        q.scale(&lc.recip())
    }
}

/// Greatest common divisor, normalized. `gcd(0, 0) = 0`.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    gcd_normalized(&normalize(a), &normalize(b))
}

fn gcd_normalized(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_constant() || b.is_constant() {
        return LaurentPoly::one();
    }
    if a == b {
        return a.clone();
    }
    let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if big.div_exact(small).is_some() {
        return small.clone();
    }
    if certified_irreducible(small) {
        return LaurentPoly::one();
    }
    if certified_irreducible(big) {
        return match small.div_exact(big) {
            Some(_) => big.clone(),
            None => LaurentPoly::one(),
        };
    }

    let va = a.variables();
    let vb = b.variables();
    if va.is_disjoint(&vb) {
        return LaurentPoly::one();
    }
    if let Some(g) = split_extra_variables(a, &va, b, &vb) {
        return g;
    }
    if let Some(g) = split_extra_variables(b, &vb, a, &va) {
        return g;
    }
    // Same variable set from here on.
    if va.len() == 1 {
        let v = *va.iter().next().unwrap();
        return univariate_gcd(a, b, v);
    }
    let x = *va
        .iter()
        .min_by_key(|&&v| a.degree_in(v).max(b.degree_in(v)))
        .unwrap();
    recursive_gcd(a, b, x)
}

/// When `p` involves variables that `other` lacks, the gcd must divide every
/// coefficient of `p` with respect to those variables.
fn split_extra_variables(
    p: &LaurentPoly,
    vp: &BTreeSet<Variable>,
    other: &LaurentPoly,
    vo: &BTreeSet<Variable>,
) -> Option<LaurentPoly> {
    let extra: BTreeSet<Variable> = vp.difference(vo).copied().collect();
    if extra.is_empty() {
        return None;
    }
    let mut groups: std::collections::BTreeMap<Monomial, LaurentPoly> = Default::default();
    for (m, c) in p.terms() {
        let (ex, rest) = m.split(|v| extra.contains(&v));
        groups.entry(ex).or_default().add_term(rest, c.clone());
    }
    let mut coeffs: Vec<LaurentPoly> = groups.into_values().map(|g| normalize(&g)).collect();
    coeffs.sort_by_key(|c| c.len());
    let mut g = normalize(other);
    for c in coeffs {
        g = gcd_normalized(&g, &c);
        if g.is_one() {
            break;
        }
    }
    Some(g)
}

/// A normalized polynomial of degree one in some variable whose two
/// coefficients cannot share a factor (one of them is a single term).
pub(crate) fn certified_irreducible(p: &LaurentPoly) -> bool {
    for v in p.variables() {
        if p.degree_in(v) != 1 {
            continue;
        }
        let mut zero_terms = 0usize;
        let mut one_terms = 0usize;
        let mut negative = false;
        for (m, _) in p.terms() {
            match m.exponent(v) {
                0 => zero_terms += 1,
                1 => one_terms += 1,
                _ => negative = true,
            }
        }
        if !negative && zero_terms > 0 && (zero_terms == 1 || one_terms == 1) {
            return true;
        }
    }
    false
}

fn univariate_gcd(a: &LaurentPoly, b: &LaurentPoly, v: Variable) -> LaurentPoly {
    let mut x = to_dense(a, v);
    let mut y = to_dense(b, v);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = dense_rem(&x, &y);
        x = y;
        y = r;
    }
    normalize(&from_dense(&x, v))
}

fn to_dense(p: &LaurentPoly, v: Variable) -> Vec<Rational> {
    let deg = p.degree_in(v).max(0) as usize;
    let mut out = vec![Rational::zero(); deg + 1];
    for (m, c) in p.terms() {
        out[m.exponent(v) as usize] = c.clone();
    }
    trim(&mut out);
    out
}

fn from_dense(c: &[Rational], v: Variable) -> LaurentPoly {
    LaurentPoly::from_terms(
        c.iter()
            .enumerate()
            .map(|(e, k)| (Monomial::var_pow(v, e as i32), k.clone())),
    )
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().map(|c| c.is_zero()) == Some(true) {
        v.pop();
    }
}

fn dense_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = b[db].recip();
    while r.len() > db {
        let k = r.len() - 1;
        let q = &r[k] * &inv;
        if !q.is_zero() {
            let shift = k - db;
            for (i, bc) in b.iter().enumerate() {
                let t = bc * &q;
                r[shift + i] -= t;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn content_in(p: &LaurentPoly, x: Variable) -> LaurentPoly {
    let mut coeffs: Vec<LaurentPoly> = p.coefficients_in(x).into_values().collect();
    coeffs.sort_by_key(|c| c.len());
    let mut g = normalize(&coeffs[0]);
    for c in &coeffs[1..] {
        if g.is_one() {
            break;
        }
        g = gcd_normalized(&g, &normalize(c));
    }
    g
}

fn primitive_in(p: &LaurentPoly, x: Variable) -> (LaurentPoly, LaurentPoly) {
    let c = content_in(p, x);
    if c.is_one() {
        (c, normalize(p))
    } else {
        let q = p.div_exact(&c).expect("content divides");
        (c, normalize(&q))
    }
}

fn leading_in(p: &LaurentPoly, x: Variable) -> (i32, LaurentPoly) {
    let d = p.degree_in(x);
    let lc = LaurentPoly::from_terms(
        p.terms()
            .filter(|(m, _)| m.exponent(x) == d)
            .map(|(m, c)| (m.div(&Monomial::var_pow(x, d)), c.clone())),
    );
    (d, lc)
}

fn recursive_gcd(a: &LaurentPoly, b: &LaurentPoly, x: Variable) -> LaurentPoly {
    let (ca, pa) = primitive_in(a, x);
    let (cb, pb) = primitive_in(b, x);
    let c = gcd_normalized(&ca, &cb);
    let (mut p, mut q) = if pa.degree_in(x) >= pb.degree_in(x) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    let g = loop {
        if q.is_zero() {
            break p;
        }
        if q.degree_in(x) == 0 {
            // Primitive in x and free of x means a unit.
            break LaurentPoly::one();
        }
        let r = pseudo_rem(&p, &q, x);
        if r.is_zero() {
            break q;
        }
        let (_, rp) = primitive_in(&normalize(&r), x);
        p = q;
        q = rp;
    };
    let (_, g) = primitive_in(&g, x);
    normalize(&(&c * &g))
}

fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly, x: Variable) -> LaurentPoly {
    let (db, lcb) = leading_in(b, x);
    let mut r = a.clone();
    while !r.is_zero() {
        let (dr, lcr) = leading_in(&r, x);
        if dr < db {
            break;
        }
        let shift = Monomial::var_pow(x, dr - db);
        let t = (&lcr * b).mul_monomial(&shift);
        r = &(&lcb * &r) - &t;
    }
    r
}
