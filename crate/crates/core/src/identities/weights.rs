use rand::Rng;
use serde_json::json;

use super::alpha::AlphaGrid;
use super::bijection::{partition_lattice, rpp_to_lp};
use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::report::Report;
use crate::shapes::{enumerate_rpp, PartitionShape, RppTable};
use crate::toda::{ab_from_f, SampleFunction, TodaSolution};

/// Row and column ranges of a sample function large enough for every minor
/// the weight identities of `shape` with bound `n` consume.
pub fn sample_window(shape: &PartitionShape, n: u32) -> ((i64, i64), (i64, i64)) {
    let r = shape.rows() as i64;
    let c = shape.cols() as i64;
    let n = n as i64;
    ((0, 2 * r + 2 * n + 2), (0, r + c + 2 * n + 2))
}

/// A uniform random integer sample in `1..=9` on [`sample_window`].
pub fn random_sample<R: Rng>(rng: &mut R, shape: &PartitionShape, n: u32) -> SampleFunction {
    let (rows, cols) = sample_window(shape, n);
    SampleFunction::random_integer(rng, rows, cols, 1, 9)
}

/// Product over cells of `alpha(i+k-1, j+k-2) / alpha(i+k-1, j+k-1)` for
/// `k = 1..=pi(i,j)`.
pub fn rpp_weight(
    shape: &PartitionShape,
    n: u32,
    sol: &dyn TodaSolution,
    pi: &RppTable,
) -> Result<Scalar> {
    let grid = AlphaGrid::new(shape, n, sol);
    let mut num = Scalar::one();
    let mut den = Scalar::one();
    for cell in shape.cells() {
        let (i, j) = (cell.i as i64, cell.j as i64);
        let fail = |reason: String| Error::Weight {
            i: cell.i,
            j: cell.j,
            reason,
        };
        // Undefined positions are a fault of the cell; solution failures pass through.
        let lookup = |u: i64, v: i64| {
            grid.get(u, v).map_err(|e| match e {
                Error::UndefinedAlpha { .. } | Error::AlphaRange { .. } => fail(e.to_string()),
                other => other,
            })
        };
        for k in 1..=pi.get(cell) as i64 {
            let up = lookup(i + k - 1, j + k - 2)?;
            let down = lookup(i + k - 1, j + k - 1)?;
            if up.is_zero() || down.is_zero() {
                return Err(fail(format!("alpha vanishes at level {k}")));
            }
            num = &num * &up;
            den = &den * &down;
        }
    }
    Ok(&num / &den)
}

/// `prod_{i=1}^r prod_{k=1}^n a^(r-i, c-lambda_i)_{k-1}`.
pub fn frozen_product(shape: &PartitionShape, n: u32, sol: &dyn TodaSolution) -> Result<Scalar> {
    border_product(shape, n, sol, |i| {
        shape.cols() as i64 - shape.part(i) as i64
    })
}

fn border_product<F>(
    shape: &PartitionShape,
    n: u32,
    sol: &dyn TodaSolution,
    col: F,
) -> Result<Scalar>
where
    F: Fn(usize) -> i64,
{
    let r = shape.rows() as i64;
    let mut acc = Scalar::one();
    for i in 1..=shape.rows() {
        for k in 1..=n as i64 {
            acc = &acc * &sol.a(r - i as i64, col(i), k - 1)?;
        }
    }
    Ok(acc)
}

/// Sum of [`rpp_weight`] over all of RPP(shape, n).
pub fn pf_lhs(shape: &PartitionShape, n: u32, sol: &dyn TodaSolution) -> Result<Scalar> {
    let mut terms = Vec::new();
    for pi in enumerate_rpp(shape, n) {
        terms.push(rpp_weight(shape, n, sol, &pi)?);
    }
    Ok(terms.into_iter().sum())
}

/// `prod_{i,k} a^(r-i, c)_{k-1} / a^(r-i, c-lambda_i)_{k-1}`.
pub fn pf_rhs(shape: &PartitionShape, n: u32, sol: &dyn TodaSolution) -> Result<Scalar> {
    let top = border_product(shape, n, sol, |_| shape.cols() as i64)?;
    Ok(&top / &frozen_product(shape, n, sol)?)
}

/// Compares each filling's weight with the weight of its path family divided
/// by [`frozen_product`], under the solution generated by `f`.
pub fn weight_transport_check(
    shape: &PartitionShape,
    n: u32,
    f: &SampleFunction,
) -> Result<Report> {
    let sol = ab_from_f(f);
    let lattice = partition_lattice(shape, n);
    let frozen = frozen_product(shape, n, &sol)?;
    let mut report = Report::new();
    for pi in enumerate_rpp(shape, n) {
        let lhs = rpp_weight(shape, n, &sol, &pi)?;
        let mut paths = Scalar::one();
        for p in rpp_to_lp(&pi, shape, n)? {
            paths = &paths * &lattice.path_weight(&sol, &p)?;
        }
        let rhs = &paths / &frozen;
        report.compare(json!({ "pi": pi }), &lhs, &rhs);
    }
    Ok(report)
}

/// One instance of the main identity: [`pf_lhs`] against [`pf_rhs`].
pub fn pf_check(shape: &PartitionShape, n: u32, sol: &dyn TodaSolution) -> Result<Report> {
    let mut report = Report::new();
    let lhs = pf_lhs(shape, n, sol)?;
    let rhs = pf_rhs(shape, n, sol)?;
    report.compare(json!({ "shape": shape, "n": n }), &lhs, &rhs);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toda::{sample_until, FreeLabels};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_cell_weight() {
        let shape: PartitionShape = "1".parse().unwrap();
        let pi = RppTable::new(shape.clone(), 1, vec![vec![1]]).unwrap();
        let w = rpp_weight(&shape, 1, &FreeLabels, &pi).unwrap();
        assert_eq!(
            w,
            &FreeLabels.b(0, 0, 1).unwrap() / &FreeLabels.a(0, 0, 0).unwrap()
        );
        let zero = RppTable::zeros(&shape, 1);
        assert_eq!(
            rpp_weight(&shape, 1, &FreeLabels, &zero).unwrap(),
            Scalar::one()
        );
    }

    #[test]
    fn main_identity_small_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for text in ["", "1", "2", "1,1", "2,1"] {
            let shape: PartitionShape = text.parse().unwrap();
            for n in 0..=2 {
                let (_, rep) = sample_until(
                    &mut rng,
                    100,
                    |r| random_sample(r, &shape, n),
                    |f| {
                        let mut rep = pf_check(&shape, n, &ab_from_f(f))?;
                        rep.merge(weight_transport_check(&shape, n, f)?);
                        Ok(rep)
                    },
                )
                .unwrap();
                assert!(
                    rep.is_empty(),
                    "{shape} n={n}: {:?}",
                    rep.violations.first()
                );
            }
        }
    }
}
