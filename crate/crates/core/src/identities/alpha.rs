use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::shapes::PartitionShape;
use crate::toda::TodaSolution;

/// Which clause defines the weight variable on a diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaClause {
    /// Diagonal `lambda_i - i`; the start row is `i`.
    Row { i: usize },
    /// Diagonal `j - 1 - lambda'_j`; the start row is `lambda'_j`.
    Column { j: usize },
}

/// The weight variables `alpha(u, v)` attached to a shape, a bound and a
/// solution of the Toda molecule.
///
/// Position `(u, v)` lies on diagonal `v - u`. On a row-type diagonal
/// `lambda_i - i` it reads `a^(r-i, c-lambda_i)_{n-k-1}` with `k = u - i`; on a
/// column-type diagonal `j - 1 - lambda'_j` it reads `b^(r-lambda'_j, c-j)_{n-k}`
/// with `k = u - lambda'_j`. Both need `k < n`.
pub struct AlphaGrid<'s> {
    shape: PartitionShape,
    n: u32,
    sol: &'s dyn TodaSolution,
}

impl<'s> AlphaGrid<'s> {
    pub fn new(shape: &PartitionShape, n: u32, sol: &'s dyn TodaSolution) -> Self {
        AlphaGrid {
            shape: shape.clone(),
            n,
            sol,
        }
    }

    pub fn shape(&self) -> &PartitionShape {
        &self.shape
    }

    /// Every clause that claims diagonal `l`.
    pub fn clauses(shape: &PartitionShape, l: i64) -> Vec<AlphaClause> {
        let mut out = Vec::new();
        for i in 1..=shape.rows() {
            if shape.part(i) as i64 - i as i64 == l {
                out.push(AlphaClause::Row { i });
            }
        }
        for j in 1..=shape.cols() {
            if j as i64 - 1 - shape.conj_ext(j as i32) as i64 == l {
                out.push(AlphaClause::Column { j });
            }
        }
        out
    }

    pub fn get(&self, u: i64, v: i64) -> Result<Scalar> {
        let r = self.shape.rows() as i64;
        let c = self.shape.cols() as i64;
        let n = self.n as i64;
        let clause = match AlphaGrid::clauses(&self.shape, v - u).as_slice() {
            [one] => *one,
            _ => return Err(Error::UndefinedAlpha { u, v }),
        };
        match clause {
            AlphaClause::Row { i } => {
                let k = u - i as i64;
                if k >= n {
                    return Err(Error::AlphaRange { u, v, k, n });
                }
                let li = self.shape.part(i) as i64;
                self.sol.a(r - i as i64, c - li, n - k - 1)
            }
            AlphaClause::Column { j } => {
                let lj = self.shape.conj_ext(j as i32) as i64;
                let k = u - lj;
                if k >= n {
                    return Err(Error::AlphaRange { u, v, k, n });
                }
                self.sol.b(r - lj, c - j as i64, n - k)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toda::FreeLabels;

    #[test]
    fn single_cell_entries() {
        let shape: PartitionShape = "1".parse().unwrap();
        let grid = AlphaGrid::new(&shape, 1, &FreeLabels);
        assert_eq!(grid.get(1, 1).unwrap(), FreeLabels.a(0, 0, 0).unwrap());
        assert_eq!(grid.get(1, 0).unwrap(), FreeLabels.b(0, 0, 1).unwrap());
        assert!(matches!(grid.get(2, 2), Err(Error::AlphaRange { .. })));
        assert!(matches!(grid.get(0, 5), Err(Error::UndefinedAlpha { .. })));
    }

    #[test]
    fn diagonals_of_two_one() {
        let shape: PartitionShape = "2,1".parse().unwrap();
        let rows: Vec<i64> = (-3..=2)
            .filter(|&l| {
                matches!(
                    AlphaGrid::clauses(&shape, l).as_slice(),
                    [AlphaClause::Row { .. }]
                )
            })
            .collect();
        let cols: Vec<i64> = (-3..=2)
            .filter(|&l| {
                matches!(
                    AlphaGrid::clauses(&shape, l).as_slice(),
                    [AlphaClause::Column { .. }]
                )
            })
            .collect();
        assert_eq!(rows, vec![-1, 1]);
        assert_eq!(cols, vec![-2, 0]);
    }
}
