use rand::Rng;
use rayon::prelude::*;
use serde_json::json;

use super::{ab_from_f, SampleFunction, TodaSolution};
use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::lattice::{Point, RegularLattice};
use crate::report::Report;

/// Inclusive ranges of `(s, t, n)` sites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub s: (i64, i64),
    pub t: (i64, i64),
    pub n: (i64, i64),
}

impl Window {
    pub fn new(s: (i64, i64), t: (i64, i64), n: (i64, i64)) -> Self {
        Window { s, t, n }
    }

    /// `|s|, |t| <= radius` and `0 <= n <= n_max`.
    pub fn centered(radius: i64, n_max: i64) -> Self {
        Window {
            s: (-radius, radius),
            t: (-radius, radius),
            n: (0, n_max),
        }
    }

    pub fn sites(&self) -> Vec<(i64, i64, i64)> {
        let mut out = Vec::new();
        for s in self.s.0..=self.s.1 {
            for t in self.t.0..=self.t.1 {
                for n in self.n.0..=self.n.1 {
                    out.push((s, t, n));
                }
            }
        }
        out
    }

    /// A sample window large enough for every minor the evolution check on
    /// this window consumes.
    pub fn sample_rows_cols(&self) -> ((i64, i64), (i64, i64)) {
        let pad = self.n.1 + 3;
        ((self.s.0, self.s.1 + pad), (self.t.0, self.t.1 + pad))
    }
}

fn collect_reports(parts: Vec<Result<Report>>) -> Result<Report> {
    let mut total = Report::new();
    for p in parts {
        total.merge(p?);
    }
    Ok(total)
}

/// Checks both evolution equations at every site of `w`:
///
/// ```text
/// a(s,t+1,n) + b(s+1,t,n)     = a(s,t,n) + b(s,t,n+1)
/// a(s,t+1,n) * b(s+1,t,n+1)   = a(s,t,n+1) * b(s,t,n+1)
/// ```
pub fn verify_evolution(sol: &dyn TodaSolution, w: &Window) -> Result<Report> {
    let parts: Vec<Result<Report>> = w
        .sites()
        .into_par_iter()
        .map(|(s, t, n)| {
            let mut r = Report::new();
            let a_up = sol.a(s, t + 1, n)?;
            let b_next = sol.b(s, t, n + 1)?;
            let lhs = &a_up + &sol.b(s + 1, t, n)?;
            let rhs = &sol.a(s, t, n)? + &b_next;
            r.compare(json!({"eq": "sum", "s": s, "t": t, "n": n}), &lhs, &rhs);
            let lhs = &a_up * &sol.b(s + 1, t, n + 1)?;
            let rhs = &sol.a(s, t, n + 1)? * &b_next;
            r.compare(json!({"eq": "product", "s": s, "t": t, "n": n}), &lhs, &rhs);
            Ok(r)
        })
        .collect();
    collect_reports(parts)
}

/// Checks the bilinear identity for the tau minors of `f` at every site of
/// `w` with `n >= 1`:
///
/// ```text
/// tau(s+1,t+1,n-1) tau(s,t,n+1) - tau(s+1,t+1,n) tau(s,t,n) + tau(s+1,t,n) tau(s,t+1,n) = 0
/// ```
pub fn verify_bilinear(f: &SampleFunction, w: &Window) -> Result<Report> {
    let sites: Vec<_> = w.sites().into_iter().filter(|&(_, _, n)| n >= 1).collect();
    let parts: Vec<Result<Report>> = sites
        .into_par_iter()
        .map(|(s, t, n)| {
            let mut r = Report::new();
            let lhs = &(&(&f.tau(s + 1, t + 1, n - 1)? * &f.tau(s, t, n + 1)?)
                - &(&f.tau(s + 1, t + 1, n)? * &f.tau(s, t, n)?))
                + &(&f.tau(s + 1, t, n)? * &f.tau(s, t + 1, n)?);
            r.compare(json!({"s": s, "t": t, "n": n}), &lhs, &Scalar::zero());
            Ok(r)
        })
        .collect();
    collect_reports(parts)
}

/// Compares `f(i, j) / f(x(j), j)` with the weighted path sum from
/// `(i, y(i))` to `(x(j), j)` under the solution generated by `f`.
pub fn fundamental_check(f: &SampleFunction, lattice: &RegularLattice, p: Point) -> Result<Report> {
    if !lattice.contains(p) {
        return Err(Error::OutsideLattice { i: p.i, j: p.j });
    }
    let sol = ab_from_f(f);
    let xj = lattice.x_of(p.j)?;
    let lhs = f.get(p.i, p.j)? / f.get(xj, p.j)?;
    let from = Point::new(p.i, lattice.y_of(p.i)?);
    let rhs = lattice.g_sum(&sol, from, Point::new(xj, p.j))?;
    let mut r = Report::new();
    r.compare(json!({"i": p.i, "j": p.j}), &lhs, &rhs);
    Ok(r)
}

/// The three quantities compared at `(s, t)` with `n` paths: the minor ratio
/// `tau(s,t,n) / tau(x(t),t,n)`, the non-intersecting path sum, and the
/// product of `a(s-i, t, k-1)` over `1 <= i <= s - x(t)`, `1 <= k <= n`.
pub fn ni_sum_values(
    f: &SampleFunction,
    lattice: &RegularLattice,
    s: i64,
    t: i64,
    n: usize,
) -> Result<(Scalar, Scalar, Scalar)> {
    let sol = ab_from_f(f);
    let xt = lattice.x_of(t)?;
    let ratio = &f.tau(s, t, n as i64)? / &f.tau(xt, t, n as i64)?;
    let paths = lattice.ni_weight_sum(&sol, s, t, n)?;
    let mut prod = Scalar::one();
    for i in 1..=(s - xt) {
        for k in 1..=n as i64 {
            prod = &prod * &sol.a(s - i, t, k - 1)?;
        }
    }
    Ok((ratio, paths, prod))
}

/// Three-way comparison of [`ni_sum_values`].
pub fn ni_sum_check(
    f: &SampleFunction,
    lattice: &RegularLattice,
    s: i64,
    t: i64,
    n: usize,
) -> Result<Report> {
    let (ratio, paths, prod) = ni_sum_values(f, lattice, s, t, n)?;
    let mut r = Report::new();
    r.compare(
        json!({"s": s, "t": t, "n": n, "vs": "paths"}),
        &ratio,
        &paths,
    );
    r.compare(
        json!({"s": s, "t": t, "n": n, "vs": "product"}),
        &ratio,
        &prod,
    );
    Ok(r)
}

/// Compares path sums `from -> to` on `lattice` and on `lattice` with the
/// convex corner `corner` deleted. Both endpoints must be off the corner's
/// diagonal.
pub fn corner_deletion_check(
    sol: &dyn TodaSolution,
    lattice: &RegularLattice,
    corner: Point,
    from: Point,
    to: Point,
) -> Result<Report> {
    let smaller = lattice.delete_corner(corner)?;
    let diag = corner.i - corner.j;
    if from.i - from.j == diag || to.i - to.j == diag {
        return Err(Error::Window(format!(
            "endpoint on the diagonal of {corner}"
        )));
    }
    let mut r = Report::new();
    r.compare(
        json!({"corner": [corner.i, corner.j], "from": [from.i, from.j], "to": [to.i, to.j]}),
        &lattice.g_sum(sol, from, to)?,
        &smaller.g_sum(sol, from, to)?,
    );
    Ok(r)
}

/// Compares the solutions generated by `f` and by `g` on every site of `w`.
pub fn gauge_check(f: &SampleFunction, g: &SampleFunction, w: &Window) -> Result<Report> {
    let (sf, sg) = (ab_from_f(f), ab_from_f(g));
    let mut r = Report::new();
    for (s, t, n) in w.sites() {
        r.compare(
            json!({"field": "a", "s": s, "t": t, "n": n}),
            &sf.a(s, t, n)?,
            &sg.a(s, t, n)?,
        );
        r.compare(
            json!({"field": "b", "s": s, "t": t, "n": n}),
            &sf.b(s, t, n)?,
            &sg.b(s, t, n)?,
        );
    }
    Ok(r)
}

/// Draws samples until `accept` succeeds without hitting a vanishing minor or
/// field value. Any other error is returned as is.
pub fn sample_until<R, T, D, A>(
    rng: &mut R,
    max_attempts: u32,
    mut draw: D,
    mut accept: A,
) -> Result<(SampleFunction, T)>
where
    R: Rng,
    D: FnMut(&mut R) -> SampleFunction,
    A: FnMut(&SampleFunction) -> Result<T>,
{
    for _ in 0..max_attempts {
        let f = draw(rng);
        match accept(&f) {
            Ok(v) => return Ok((f, v)),
            Err(Error::SingularMinor { .. } | Error::Vanishing { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::ResampleExhausted(max_attempts))
}
