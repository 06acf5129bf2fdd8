//! Substituting diagonal-variable brackets for the parameters of the closed
//! form solution, with a free auxiliary partition `mu` whose relation to the
//! shape is chosen by [`MuReading`].

use std::sync::Arc;

use serde_json::json;

use super::specialized::weight_x;
use super::weights::rpp_weight;
use crate::algebra::{var_bracket, BracketConvention, Scalar};
use crate::error::Result;
use crate::report::Report;
use crate::shapes::{enumerate_rpp, PartitionShape};
use crate::toda::{ClosedForm, Family};

/// Candidate identifications of the auxiliary partition `mu`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MuReading {
    /// `mu = lambda`.
    Shape,
    /// `mu = lambda'`.
    Conjugate,
    /// The complement of `lambda` in its `r x c` box, turned half a revolution.
    RotatedComplement,
}

impl MuReading {
    pub const ALL: [MuReading; 3] = [
        MuReading::Shape,
        MuReading::Conjugate,
        MuReading::RotatedComplement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MuReading::Shape => "shape",
            MuReading::Conjugate => "conjugate",
            MuReading::RotatedComplement => "rotated-complement",
        }
    }

    /// `(mu_i, mu'_j)` on all integers, padded like the shape's own extension.
    fn parts(
        self,
        shape: &PartitionShape,
    ) -> (
        impl Fn(i64) -> i64 + Send + Sync + Clone,
        impl Fn(i64) -> i64 + Send + Sync + Clone,
    ) {
        let sh = shape.clone();
        let r = shape.rows() as i64;
        let c = shape.cols() as i64;
        let reading = self;
        let sh2 = sh.clone();
        let mu = move |i: i64| match reading {
            MuReading::Shape => sh.part_ext(i as i32) as i64,
            MuReading::Conjugate => sh.conj_ext(i as i32) as i64,
            MuReading::RotatedComplement => c - sh.part_ext((r + 1 - i) as i32) as i64,
        };
        let mu_conj = move |j: i64| match reading {
            MuReading::Shape => sh2.conj_ext(j as i32) as i64,
            MuReading::Conjugate => sh2.part_ext(j as i32) as i64,
            MuReading::RotatedComplement => r - sh2.conj_ext((c + 1 - j) as i32) as i64,
        };
        (mu, mu_conj)
    }
}

/// The closed form with
/// `a = [x]_{c-lambda'_c}^{lambda_r-r}`,
/// `p_i = [x]_{c-r+i-mu_i}^{c-r+i-mu_{i+1}}` and
/// `q_j = [x]_{mu'_{j+1}-j-r+c}^{mu'_j-j-r+c}`.
pub fn specialized_solution(
    shape: &PartitionShape,
    reading: MuReading,
    conv: BracketConvention,
) -> ClosedForm {
    let r = shape.rows() as i64;
    let c = shape.cols() as i64;
    let xb = move |m: i64, n: i64| Scalar::monomial(var_bracket('x', m as i32, n as i32, conv));
    let a = xb(
        c - shape.conj_ext(c as i32) as i64,
        shape.part_ext(r as i32) as i64 - r,
    );
    let (mu, mu_conj) = reading.parts(shape);
    let p: Family = Arc::new(move |i| xb(c - r + i - mu(i), c - r + i - mu(i + 1)));
    let q: Family = Arc::new(move |j| xb(mu_conj(j + 1) - j - r + c, mu_conj(j) - j - r + c));
    ClosedForm::new(a, p, q, conv)
}

/// Compares, filling by filling, the general weight under
/// [`specialized_solution`] with [`weight_x`].
pub fn mu_check(
    shape: &PartitionShape,
    n: u32,
    reading: MuReading,
    conv: BracketConvention,
) -> Result<Report> {
    let sol = specialized_solution(shape, reading, conv);
    let mut rep = Report::new();
    for pi in enumerate_rpp(shape, n) {
        let lhs = rpp_weight(shape, n, &sol, &pi)?;
        rep.compare(
            json!({ "pi": pi, "mu": reading.name() }),
            &lhs,
            &weight_x(shape, n, &pi),
        );
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn passes(reading: MuReading, conv: BracketConvention) -> bool {
        ["1", "2", "1,1", "2,1", "3,1", "2,2", "3,2,1"]
            .iter()
            .all(|text| {
                let shape: PartitionShape = text.parse().unwrap();
                (0..=2).all(|n| mu_check(&shape, n, reading, conv).is_ok_and(|r| r.is_empty()))
            })
    }

    #[test]
    fn only_the_rotated_complement_matches() {
        assert!(passes(
            MuReading::RotatedComplement,
            BracketConvention::Telescoping
        ));
        assert!(!passes(
            MuReading::RotatedComplement,
            BracketConvention::Verbatim
        ));
        for conv in [BracketConvention::Verbatim, BracketConvention::Telescoping] {
            assert!(!passes(MuReading::Shape, conv));
            assert!(!passes(MuReading::Conjugate, conv));
        }
    }
}
