use std::collections::HashMap;
use std::sync::RwLock;

use rand::Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::TodaSolution;
use crate::algebra::{det_exact, Scalar};
use crate::error::{Error, Result};

/// A function `f(i, j)` on a finite rectangular window of Z^2.
///
/// Hankel-type minors `tau^(s,t)_n = det(f(s+k, t+l))_{0<=k,l<n}` are cached.
pub struct SampleFunction {
    row0: i64,
    col0: i64,
    rows: usize,
    cols: usize,
    values: Vec<Scalar>,
    memo: RwLock<HashMap<(i64, i64, i64), Scalar>>,
}

impl SampleFunction {
    /// `rows` and `cols` are inclusive index ranges.
    pub fn from_fn<F>(rows: (i64, i64), cols: (i64, i64), mut f: F) -> Self
    where
        F: FnMut(i64, i64) -> Scalar,
    {
        let nr = (rows.1 - rows.0 + 1).max(0) as usize;
        let nc = (cols.1 - cols.0 + 1).max(0) as usize;
        let mut values = Vec::with_capacity(nr * nc);
        for i in rows.0..=rows.1 {
            for j in cols.0..=cols.1 {
                values.push(f(i, j));
            }
        }
        SampleFunction {
            row0: rows.0,
            col0: cols.0,
            rows: nr,
            cols: nc,
            values,
            memo: RwLock::default(),
        }
    }

    /// Independent uniform integers in `lo..=hi`, drawn row-major.
    pub fn random_integer<R: Rng>(
        rng: &mut R,
        rows: (i64, i64),
        cols: (i64, i64),
        lo: i64,
        hi: i64,
    ) -> Self {
        SampleFunction::from_fn(rows, cols, |_, _| {
            Scalar::from_int(rng.random_range(lo..=hi))
        })
    }

    pub fn ones(rows: (i64, i64), cols: (i64, i64)) -> Self {
        SampleFunction::from_fn(rows, cols, |_, _| Scalar::one())
    }

    pub fn row_range(&self) -> (i64, i64) {
        (self.row0, self.row0 + self.rows as i64 - 1)
    }

    pub fn col_range(&self) -> (i64, i64) {
        (self.col0, self.col0 + self.cols as i64 - 1)
    }

    fn in_window(&self, i: i64, j: i64) -> bool {
        let (r0, r1) = self.row_range();
        let (c0, c1) = self.col_range();
        (r0..=r1).contains(&i) && (c0..=c1).contains(&j)
    }

    pub fn get(&self, i: i64, j: i64) -> Result<&Scalar> {
        if !self.in_window(i, j) {
            return Err(Error::Window(format!("f({i},{j})")));
        }
        let k = (i - self.row0) as usize * self.cols + (j - self.col0) as usize;
        Ok(&self.values[k])
    }

    /// `tau^(s,t)_n`, with `tau_0 = 1`.
    pub fn tau(&self, s: i64, t: i64, n: i64) -> Result<Scalar> {
        if n < 0 {
            return Err(Error::Window(format!("tau^({s},{t})_{n}")));
        }
        if n == 0 {
            return Ok(Scalar::one());
        }
        if let Some(v) = self
            .memo
            .read()
            .expect("tau cache poisoned")
            .get(&(s, t, n))
        {
            return Ok(v.clone());
        }
        if !self.in_window(s, t) || !self.in_window(s + n - 1, t + n - 1) {
            return Err(Error::Window(format!("tau^({s},{t})_{n}")));
        }
        let m: Vec<Vec<Scalar>> = (0..n)
            .map(|k| {
                (0..n)
                    .map(|l| self.get(s + k, t + l).cloned())
                    .collect::<Result<_>>()
            })
            .collect::<Result<_>>()?;
        let d = det_exact(&m)?;
        self.memo
            .write()
            .expect("tau cache poisoned")
            .insert((s, t, n), d.clone());
        Ok(d)
    }

    fn tau_nonzero(&self, s: i64, t: i64, n: i64) -> Result<Scalar> {
        let d = self.tau(s, t, n)?;
        if d.is_zero() {
            return Err(Error::SingularMinor { s, t, n });
        }
        Ok(d)
    }

    /// `f(i, j) * phi(j)`: the column gauge transformation.
    pub fn gauge<F>(&self, phi: F) -> Result<SampleFunction>
    where
        F: Fn(i64) -> Scalar,
    {
        let (c0, c1) = self.col_range();
        let factors: Vec<Scalar> = (c0..=c1).map(&phi).collect();
        if let Some(k) = factors.iter().position(Scalar::is_zero) {
            return Err(Error::ZeroGauge(c0 + k as i64));
        }
        Ok(SampleFunction::from_fn(
            self.row_range(),
            self.col_range(),
            |i, j| self.get(i, j).expect("inside window") * &factors[(j - c0) as usize],
        ))
    }
}

impl Clone for SampleFunction {
    fn clone(&self) -> Self {
        SampleFunction {
            row0: self.row0,
            col0: self.col0,
            rows: self.rows,
            cols: self.cols,
            values: self.values.clone(),
            memo: RwLock::new(self.memo.read().expect("tau cache poisoned").clone()),
        }
    }
}

impl PartialEq for SampleFunction {
    fn eq(&self, other: &Self) -> bool {
        self.row0 == other.row0
            && self.col0 == other.col0
            && self.rows == other.rows
            && self.cols == other.cols
            && self.values == other.values
    }
}

impl std::fmt::Debug for SampleFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SampleFunction")
            .field("rows", &self.row_range())
            .field("cols", &self.col_range())
            .field("values", &self.values)
            .finish()
    }
}

impl Serialize for SampleFunction {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let (r0, r1) = self.row_range();
        let (c0, c1) = self.col_range();
        let mut st = ser.serialize_struct("SampleFunction", 2)?;
        st.serialize_field("window", &[[r0, r1], [c0, c1]])?;
        let vals: Vec<String> = self
            .values
            .iter()
            .map(Scalar::to_canonical_string)
            .collect();
        st.serialize_field("values", &vals)?;
        st.end()
    }
}

/// The solution `(a, b)` generated by a sample function through its tau minors.
#[derive(Clone, Copy, Debug)]
pub struct AbSolution<'f> {
    f: &'f SampleFunction,
}

pub fn ab_from_f(f: &SampleFunction) -> AbSolution<'_> {
    AbSolution { f }
}

impl AbSolution<'_> {
    pub fn sample(&self) -> &SampleFunction {
        self.f
    }
}

impl TodaSolution for AbSolution<'_> {
    fn a(&self, s: i64, t: i64, n: i64) -> Result<Scalar> {
        let f = self.f;
        let num = &f.tau_nonzero(s + 1, t, n + 1)? * &f.tau_nonzero(s, t, n)?;
        let den = &f.tau_nonzero(s + 1, t, n)? * &f.tau_nonzero(s, t, n + 1)?;
        Ok(&num / &den)
    }

    fn b(&self, s: i64, t: i64, n: i64) -> Result<Scalar> {
        if n == 0 {
            return Ok(Scalar::zero());
        }
        let f = self.f;
        let num = &f.tau_nonzero(s, t + 1, n - 1)? * &f.tau_nonzero(s, t, n + 1)?;
        let den = &f.tau_nonzero(s, t + 1, n)? * &f.tau_nonzero(s, t, n)?;
        Ok(&num / &den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tau_small_cases() {
        let f = SampleFunction::from_fn((0, 3), (0, 3), |i, j| Scalar::from_int(i + 2 * j + 1));
        assert_eq!(f.tau(0, 0, 0).unwrap(), Scalar::one());
        assert_eq!(f.tau(1, 2, 1).unwrap(), Scalar::from_int(6));
        // Rank-two entries: every 3x3 minor vanishes.
        assert_eq!(f.tau(0, 0, 3).unwrap(), Scalar::zero());
        assert_eq!(f.tau(0, 0, 2).unwrap(), Scalar::from_int(4 - 3 * 2));
        assert!(matches!(f.tau(2, 2, 3), Err(Error::Window(_))));
        let sol = ab_from_f(&f);
        assert!(matches!(sol.a(0, 0, 2), Err(Error::SingularMinor { .. })));
    }

    #[test]
    fn all_ones_solution() {
        let f = SampleFunction::ones((0, 4), (0, 4));
        let sol = ab_from_f(&f);
        assert_eq!(sol.b(0, 0, 0).unwrap(), Scalar::zero());
        // tau_1 = 1 and tau_2 = 0 for the all-ones matrix.
        assert_eq!(sol.a(0, 0, 0).unwrap(), Scalar::one());
        assert!(sol.a(0, 0, 1).is_err());
    }

    #[test]
    fn serialization_and_gauge() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = SampleFunction::random_integer(&mut rng, (0, 1), (-1, 0), 1, 9);
        let json = serde_json::to_value(&f).unwrap();
        assert_eq!(json["window"], serde_json::json!([[0, 1], [-1, 0]]));
        assert_eq!(json["values"].as_array().unwrap().len(), 4);
        let g = f.gauge(|j| Scalar::from_int(j + 3)).unwrap();
        assert_eq!(
            g.get(1, -1).unwrap(),
            &(f.get(1, -1).unwrap() * &Scalar::from_int(2))
        );
        assert!(matches!(
            f.gauge(|j| Scalar::from_int(j + 1)),
            Err(Error::ZeroGauge(-1))
        ));
        assert_eq!(f.clone(), f);
    }
}
