use super::{AlgebraError, Scalar};

fn check_square(m: &[Vec<Scalar>]) -> Result<usize, AlgebraError> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(AlgebraError::NotSquare {
                rows: n,
                cols: row.len(),
            });
        }
    }
    Ok(n)
}

/// Exact determinant. Small matrices use cofactor expansion, larger ones
/// fraction-free elimination. The empty matrix has determinant 1.
pub fn det_exact(m: &[Vec<Scalar>]) -> Result<Scalar, AlgebraError> {
    let n = check_square(m)?;
    if n <= 4 {
        Ok(cofactor(m))
    } else {
        Ok(bareiss(m.to_vec()))
    }
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<Scalar>]) -> Result<Scalar, AlgebraError> {
    check_square(m)?;
    Ok(cofactor(m))
}

/// Bareiss elimination with row pivoting.
pub fn bareiss_det(m: &[Vec<Scalar>]) -> Result<Scalar, AlgebraError> {
    check_square(m)?;
    Ok(bareiss(m.to_vec()))
}

fn cofactor(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    let cols: Vec<usize> = (0..n).collect();
    cofactor_rec(m, 0, &cols)
}

fn cofactor_rec(m: &[Vec<Scalar>], row: usize, cols: &[usize]) -> Scalar {
    match cols.len() {
        0 => Scalar::one(),
        1 => m[row][cols[0]].clone(),
        2 => {
            let a = &m[row][cols[0]] * &m[row + 1][cols[1]];
            let b = &m[row][cols[1]] * &m[row + 1][cols[0]];
            &a - &b
        }
        _ => {
            let mut acc = Scalar::zero();
            for (k, &c) in cols.iter().enumerate() {
                let e = &m[row][c];
                if e.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&d| d != c).collect();
                let term = e * &cofactor_rec(m, row + 1, &rest);
                acc = if k % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}

fn bareiss(mut a: Vec<Vec<Scalar>>) -> Scalar {
    let n = a.len();
    if n == 0 {
        return Scalar::one();
    }
    let mut sign = false;
    let mut prev = Scalar::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return Scalar::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = &t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(v: &[&[i64]]) -> Vec<Vec<Scalar>> {
        v.iter()
            .map(|r| r.iter().map(|&k| Scalar::from_int(k)).collect())
            .collect()
    }

    #[test]
    fn small_cases() {
        assert!(det_exact(&[]).unwrap().is_one());
        assert_eq!(det_exact(&mat(&[&[7]])).unwrap(), Scalar::from_int(7));
        assert!(det_exact(&mat(&[&[1, 1], &[1, 2]])).unwrap().is_one());
    }

    #[test]
    fn non_square_is_rejected() {
        let m = vec![vec![Scalar::one(), Scalar::one()]];
        assert!(matches!(det_exact(&m), Err(AlgebraError::NotSquare { .. })));
    }

    #[test]
    fn bareiss_matches_cofactor_with_pivoting() {
        let m = mat(&[
            &[0, 2, 1, 4, 1],
            &[3, 0, 1, 1, 2],
            &[1, 1, 0, 5, 3],
            &[2, 7, 1, 0, 1],
            &[1, 1, 1, 1, 0],
        ]);
        assert_eq!(bareiss_det(&m).unwrap(), cofactor_det(&m).unwrap());
    }
}
