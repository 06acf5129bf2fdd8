use std::collections::BTreeMap;

use num_traits::One;
use rayon::prelude::*;
use serde_json::json;

use crate::algebra::{
    q, series_truncate, specialize_family, var_bracket, BracketConvention, FactoredFraction,
    FractionSum, LaurentPoly, Monomial, Rational, Scalar, TruncatedSeries, Variable,
};
use crate::error::Result;
use crate::report::Report;
use crate::shapes::{enumerate_rpp, enumerate_rpp_up_to_size, Cell, PartitionShape, RppTable};

/// `[x]_m^n` on the diagonal variables. Every bracket below is on the forward
/// branch, so the convention never matters here.
fn xb(m: i64, n: i64) -> Monomial {
    var_bracket('x', m as i32, n as i32, BracketConvention::default())
}

fn one_minus(m: &Monomial) -> LaurentPoly {
    &LaurentPoly::one() - &LaurentPoly::term(m.clone(), Rational::one())
}

fn qvar() -> Scalar {
    Scalar::var(q())
}

/// `m - lambda'_m`, the lower end of the hook-type brackets.
fn low(shape: &PartitionShape, m: i64) -> i64 {
    m - shape.conj_ext(m as i32) as i64
}

/// The diagonal-variable weight of a filling split into its parts: the trace
/// monomial and, for each cell level, the bracket monomials `A` and `B` of
/// the correction factor `(1 - A) / (1 - B)`.
pub struct XWeightParts {
    pub trace: Monomial,
    pub corrections: Vec<(Monomial, Monomial)>,
}

pub fn weight_x_parts(shape: &PartitionShape, n: u32, pi: &RppTable) -> XWeightParts {
    let n = n as i64;
    let trace = Monomial::from_pairs(
        pi.traces()
            .into_iter()
            .map(|(l, t)| (Variable::x(l), t as i32)),
    );
    let mut corrections = Vec::new();
    for cell in shape.cells() {
        let (i, j) = (cell.i as i64, cell.j as i64);
        for k in 1..=pi.get(cell) as i64 {
            let num = xb(low(shape, -n + j + k - 1), j - i - 1);
            let den = xb(low(shape, -n + j + k), j - i);
            corrections.push((num, den));
        }
    }
    XWeightParts { trace, corrections }
}

/// The weight of `pi` obtained from the solution specialized to the diagonal
/// variables `x_l`: the trace monomial times one correction factor per cell
/// level.
pub fn weight_x(shape: &PartitionShape, n: u32, pi: &RppTable) -> Scalar {
    let parts = weight_x_parts(shape, n, pi);
    let mut w = Scalar::monomial(parts.trace);
    for (a, b) in &parts.corrections {
        let f = Scalar::from_fraction(one_minus(a), one_minus(b))
            .expect("nonzero correction denominator");
        w = &w * &f;
    }
    w
}

/// Sum over RPP(shape, n) of a weight that factors over cells, by a
/// transfer-matrix pass in reverse row-major order. The state holds the value
/// last placed in each column, an upper bound for the cell above; partial sums
/// are reduced after every cell. Summing from the bottom lets the correction
/// factors telescope, which keeps the partial sums small.
pub fn rpp_cell_sum<F>(shape: &PartitionShape, n: u32, cell_factor: F) -> FactoredFraction
where
    F: Fn(Cell, u32) -> FactoredFraction,
{
    let c = shape.cols();
    let mut states: BTreeMap<Vec<u32>, FactoredFraction> = BTreeMap::new();
    states.insert(vec![n; c], FactoredFraction::one());
    for i in (1..=shape.rows()).rev() {
        for j in (1..=shape.part(i)).rev() {
            let cell = Cell { i, j };
            let factors: Vec<FactoredFraction> = (0..=n).map(|v| cell_factor(cell, v)).collect();
            let mut next: BTreeMap<Vec<u32>, FactoredFraction> = BTreeMap::new();
            for (state, val) in &states {
                let upper = if j < shape.part(i) {
                    state[j - 1].min(state[j])
                } else {
                    state[j - 1]
                };
                for v in 0..=upper {
                    let mut key = state.clone();
                    key[j - 1] = v;
                    let term = val.mul(&factors[v as usize]);
                    let slot = next.entry(key).or_default();
                    *slot = slot.add(&term);
                }
            }
            for val in next.values_mut() {
                val.reduce();
            }
            states = next;
        }
    }
    let mut total = FactoredFraction::zero();
    for val in states.values() {
        total = total.add(val);
    }
    total
}

/// The factor [`weight_x`] picks up from one cell holding `v`.
fn weight_x_cell(shape: &PartitionShape, n: u32, cell: Cell, v: u32) -> FactoredFraction {
    let n = n as i64;
    let (i, j) = (cell.i as i64, cell.j as i64);
    let mut num = LaurentPoly::term(
        Monomial::var_pow(Variable::x((j - i) as i32), v as i32),
        Rational::one(),
    );
    let mut den = Vec::with_capacity(v as usize);
    for k in 1..=v as i64 {
        num = &num * &one_minus(&xb(low(shape, -n + j + k - 1), j - i - 1));
        den.push(one_minus(&xb(low(shape, -n + j + k), j - i)));
    }
    // Consecutive levels telescope; cancel before the factor is reused.
    let mut f = FactoredFraction::new(num, &den).expect("nonzero correction denominators");
    f.reduce();
    f
}

/// Sum of [`weight_x`] over RPP(shape, n).
pub fn pf_x_lhs(shape: &PartitionShape, n: u32) -> Scalar {
    rpp_cell_sum(shape, n, |cell, v| weight_x_cell(shape, n, cell, v)).to_scalar()
}

/// [`pf_x_lhs`] by summing every filling's weight one at a time.
pub fn pf_x_lhs_direct(shape: &PartitionShape, n: u32) -> Scalar {
    let mut sum = FractionSum::new();
    for pi in enumerate_rpp(shape, n) {
        let p = weight_x_parts(shape, n, &pi);
        let mut num = LaurentPoly::term(p.trace, Rational::one());
        let mut dens = Vec::with_capacity(p.corrections.len());
        for (a, b) in p.corrections {
            num = &num * &one_minus(&a);
            dens.push(one_minus(&b));
        }
        sum.add(&num, &dens)
            .expect("nonzero correction denominators");
    }
    sum.finish()
}

/// `prod_{(i,j)} (1 - [x]_{-n+j-lambda'_{-n+j}}^{lambda_i-i}) / (1 - [x]_{j-lambda'_j}^{lambda_i-i})`.
pub fn pf_x_rhs(shape: &PartitionShape, n: u32) -> Scalar {
    let n = n as i64;
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for cell in shape.cells() {
        let (i, j) = (cell.i as i64, cell.j as i64);
        let top = shape.part(cell.i) as i64 - i;
        num = &num * &one_minus(&xb(low(shape, -n + j), top));
        den = &den * &one_minus(&xb(low(shape, j), top));
    }
    Scalar::from_fraction(num, den).expect("nonzero hook product")
}

/// Compares [`pf_x_lhs`] with [`pf_x_rhs`].
pub fn pf_x_check(shape: &PartitionShape, n: u32) -> Report {
    let mut rep = Report::new();
    rep.compare(
        json!({ "shape": shape, "n": n }),
        &pf_x_lhs(shape, n),
        &pf_x_rhs(shape, n),
    );
    rep
}

/// Every `x_l` set to `q`.
pub fn x_to_q(s: &Scalar) -> Scalar {
    specialize_family(s, 'x', &qvar()).expect("q-specialization has no poles here")
}

/// [`weight_x`] with every `x_l` set to `q`.
pub fn q_weight(shape: &PartitionShape, n: u32, pi: &RppTable) -> Scalar {
    x_to_q(&weight_x(shape, n, pi))
}

fn one_minus_q(e: i64) -> LaurentPoly {
    one_minus(&Monomial::var_pow(q(), e as i32))
}

/// The single-variable weight written out directly:
/// `q^|pi| prod (1 - q^(n-i-k+1+lambda'_{-n+j+k-1})) / (1 - q^(n-i-k+1+lambda'_{-n+j+k}))`.
pub fn q_weight_explicit(shape: &PartitionShape, n: u32, pi: &RppTable) -> Scalar {
    let n = n as i64;
    let mut num = LaurentPoly::term(Monomial::var_pow(q(), pi.size() as i32), Rational::one());
    let mut den = LaurentPoly::one();
    for cell in shape.cells() {
        let (i, j) = (cell.i as i64, cell.j as i64);
        for k in 1..=pi.get(cell) as i64 {
            let conj = |m: i64| shape.conj_ext(m as i32) as i64;
            num = &num * &one_minus_q(n - i - k + 1 + conj(-n + j + k - 1));
            den = &den * &one_minus_q(n - i - k + 1 + conj(-n + j + k));
        }
    }
    Scalar::from_fraction(num, den).expect("nonzero correction denominators")
}

/// `prod_{(i,j)} (1 - q^(lambda_i+lambda'_{j-n}-i-j+n+1)) / (1 - q^(lambda_i+lambda'_j-i-j+1))`.
pub fn q_rhs(shape: &PartitionShape, n: u32) -> Scalar {
    let n = n as i64;
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for cell in shape.cells() {
        let (i, j) = (cell.i as i64, cell.j as i64);
        let li = shape.part(cell.i) as i64;
        let conj = |m: i64| shape.conj_ext(m as i32) as i64;
        num = &num * &one_minus_q(li + conj(j - n) - i - j + n + 1);
        den = &den * &one_minus_q(li + conj(j) - i - j + 1);
    }
    Scalar::from_fraction(num, den).expect("nonzero hook product")
}

/// Single-variable checks for one `(shape, n)`: each weight against its
/// explicit form, the weight sum against the product, and the sum against
/// the specialized multivariate sum.
pub fn q_check(shape: &PartitionShape, n: u32) -> Report {
    let mut rep = Report::new();
    let mut sum = Scalar::zero();
    for pi in enumerate_rpp(shape, n) {
        let w = q_weight(shape, n, &pi);
        rep.compare(
            json!({ "pi": pi, "vs": "explicit" }),
            &w,
            &q_weight_explicit(shape, n, &pi),
        );
        sum = &sum + &w;
    }
    rep.compare(
        json!({ "shape": shape, "n": n, "vs": "product" }),
        &sum,
        &q_rhs(shape, n),
    );
    rep.compare(
        json!({ "shape": shape, "n": n, "vs": "specialized" }),
        &sum,
        &x_to_q(&pf_x_lhs(shape, n)),
    );
    rep
}

/// `prod_{i<=r, j<=c, k<=n} (1 - q^(i+j+k-1)) / (1 - q^(i+j+k-2))`.
pub fn macmahon_rhs(r: u32, c: u32, n: u32) -> Scalar {
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for i in 1..=r as i64 {
        for j in 1..=c as i64 {
            for k in 1..=n as i64 {
                num = &num * &one_minus_q(i + j + k - 1);
                den = &den * &one_minus_q(i + j + k - 2);
            }
        }
    }
    Scalar::from_fraction(num, den).expect("nonzero box product")
}

/// `sum q^|pi|` over fillings of the `r x c` box with entries at most `n`.
pub fn macmahon_lhs(r: u32, c: u32, n: u32) -> Scalar {
    let shape = PartitionShape::rectangle(r as usize, c as usize);
    let mut poly = LaurentPoly::zero();
    for pi in enumerate_rpp(&shape, n) {
        poly.add_term(Monomial::var_pow(q(), pi.size() as i32), Rational::one());
    }
    Scalar::from_poly(poly)
}

pub fn macmahon_check(r: u32, c: u32, n: u32) -> Report {
    let mut rep = Report::new();
    rep.compare(
        json!({ "r": r, "c": c, "n": n }),
        &macmahon_lhs(r, c, n),
        &macmahon_rhs(r, c, n),
    );
    rep
}

/// `prod_{(i,j)} 1 / (1 - [x]_{j-lambda'_j}^{lambda_i-i})` up to total degree `degree`.
pub fn gansner_rhs_truncated(shape: &PartitionShape, degree: u32) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::one(degree);
    for cell in shape.cells() {
        let top = shape.part(cell.i) as i64 - cell.i as i64;
        let hook = one_minus(&xb(low(shape, cell.j as i64), top));
        acc = acc.mul(&TruncatedSeries::from_poly(&hook, degree)?.inverse()?);
    }
    Ok(acc)
}

/// [`weight_x`] expanded as a power series up to total degree `degree`.
pub fn weight_x_series(
    shape: &PartitionShape,
    n: u32,
    pi: &RppTable,
    degree: u32,
) -> Result<TruncatedSeries> {
    let parts = weight_x_parts(shape, n, pi);
    let mut acc = TruncatedSeries::monomial(&parts.trace, degree)?;
    for (a, b) in &parts.corrections {
        acc = acc.mul(&TruncatedSeries::from_poly(&one_minus(a), degree)?);
        acc = acc.mul(&TruncatedSeries::from_poly(&one_minus(b), degree)?.inverse()?);
    }
    Ok(acc)
}

/// Truncated sum of [`weight_x`] over RPP(shape, n). Fillings of size above
/// `degree` only contribute beyond the truncation and are skipped.
pub fn gansner_lhs_truncated(
    shape: &PartitionShape,
    n: u32,
    degree: u32,
) -> Result<TruncatedSeries> {
    let fillings = enumerate_rpp_up_to_size(shape, n, degree as u64);
    let terms: Vec<Result<TruncatedSeries>> = fillings
        .par_iter()
        .map(|pi| weight_x_series(shape, n, pi, degree))
        .collect();
    let mut acc = TruncatedSeries::zero(degree);
    for t in terms {
        acc = acc.add(&t?);
    }
    Ok(acc)
}

/// Sends every `x_l` to `q`, keeping the truncation degree.
pub fn series_x_to_q(s: &TruncatedSeries) -> TruncatedSeries {
    s.map_monomials(|m| Monomial::var_pow(q(), m.total_degree() as i32))
}

/// The bound at which the truncated sums stabilise: `degree + r + c`.
pub fn gansner_bound(shape: &PartitionShape, degree: u32) -> u32 {
    degree + shape.rows() as u32 + shape.cols() as u32
}

/// Compares the truncated sums at bound `n` with the truncated hook product,
/// multivariate and with every `x_l` set to `q`.
pub fn gansner_check_at(shape: &PartitionShape, degree: u32, n: u32) -> Result<Report> {
    let lhs = gansner_lhs_truncated(shape, n, degree)?;
    let rhs = gansner_rhs_truncated(shape, degree)?;
    let mut rep = Report::new();
    let as_scalar = |s: &TruncatedSeries| Scalar::from_poly(s.poly().clone());
    rep.compare(
        json!({ "shape": shape, "degree": degree, "n": n, "grading": "x" }),
        &as_scalar(&lhs),
        &as_scalar(&rhs),
    );
    rep.compare(
        json!({ "shape": shape, "degree": degree, "n": n, "grading": "q" }),
        &as_scalar(&series_x_to_q(&lhs)),
        &as_scalar(&series_x_to_q(&rhs)),
    );
    Ok(rep)
}

pub fn gansner_check(shape: &PartitionShape, degree: u32) -> Result<Report> {
    gansner_check_at(shape, degree, gansner_bound(shape, degree))
}

/// Truncated expansion of `pf_x_rhs` with every `x_l` set to `q`.
pub fn q_rhs_series(shape: &PartitionShape, n: u32, degree: u32) -> Result<TruncatedSeries> {
    Ok(series_truncate(&x_to_q(&pf_x_rhs(shape, n)), degree)?)
}
