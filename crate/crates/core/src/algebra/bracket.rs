use super::monomial::{Monomial, Variable};
use super::{AlgebraError, Scalar};

/// How `[z]_m^n` is read when `m >= n + 2`.
///
/// `Verbatim` inverts `z_n .. z_{m-1}`; `Telescoping` inverts
/// `z_{n+1} .. z_{m-1}`, which is the only reading with
/// `[z]_m^n = P(n) / P(m-1)` for the prefix products `P`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum BracketConvention {
    #[default]
    Verbatim,
    Telescoping,
}

impl BracketConvention {
    /// Index range (inclusive) whose product is inverted on the reversed branch.
    fn reversed_range(self, m: i32, n: i32) -> (i32, i32) {
        match self {
            BracketConvention::Verbatim => (n, m - 1),
            BracketConvention::Telescoping => (n + 1, m - 1),
        }
    }
}

/// `[z]_m^n`: the product `z_m ... z_n` when `m <= n`, `1` when `m = n + 1`,
/// and an inverted product otherwise.
pub fn bracket<F>(z: F, m: i32, n: i32, conv: BracketConvention) -> Result<Scalar, AlgebraError>
where
    F: Fn(i32) -> Scalar,
{
    if m <= n {
        return Ok((m..=n).map(&z).product());
    }
    if m == n + 1 {
        return Ok(Scalar::one());
    }
    let (lo, hi) = conv.reversed_range(m, n);
    let p: Scalar = (lo..=hi).map(&z).product();
    p.recip()
}

/// `[v]_m^n` for a family of formal variables; always a Laurent monomial.
pub fn var_bracket(family: char, m: i32, n: i32, conv: BracketConvention) -> Monomial {
    if m <= n {
        return Monomial::from_pairs((m..=n).map(|l| (Variable::indexed(family, l), 1)));
    }
    if m == n + 1 {
        return Monomial::one();
    }
    let (lo, hi) = conv.reversed_range(m, n);
    Monomial::from_pairs((lo..=hi).map(|l| (Variable::indexed(family, l), -1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(l: i32) -> Scalar {
        Scalar::var(Variable::indexed('z', l))
    }

    #[test]
    fn three_branches() {
        let v = BracketConvention::Verbatim;
        assert_eq!(bracket(z, 1, 3, v).unwrap(), &(&z(1) * &z(2)) * &z(3));
        assert!(bracket(z, 3, 2, v).unwrap().is_one());
        assert_eq!(
            bracket(z, 4, 2, v).unwrap(),
            (&z(2) * &z(3)).recip().unwrap()
        );
        assert_eq!(
            bracket(z, 4, 2, BracketConvention::Telescoping).unwrap(),
            z(3).recip().unwrap()
        );
    }

    #[test]
    fn reversed_branch_rejects_zero() {
        let zero = |_| Scalar::zero();
        assert_eq!(
            bracket(zero, 5, 2, BracketConvention::Verbatim),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn variable_bracket_matches_generic() {
        for conv in [BracketConvention::Verbatim, BracketConvention::Telescoping] {
            for m in -3..4 {
                for n in -3..4 {
                    let a = Scalar::monomial(var_bracket('z', m, n, conv));
                    assert_eq!(a, bracket(z, m, n, conv).unwrap(), "m={m} n={n}");
                }
            }
        }
    }
}
