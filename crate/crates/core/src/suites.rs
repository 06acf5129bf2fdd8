//! Seeded verification runs shared by the command line and the integration
//! tests. Every run is a list of [`CheckRecord`]s in a fixed order.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::algebra::{BracketConvention, Scalar};
use crate::error::{Error, Result};
use crate::identities::{
    gansner_bound, gansner_lhs_truncated, gansner_rhs_truncated, macmahon_lhs, macmahon_rhs,
    partition_lattice, pf_lhs, pf_rhs, pf_x_lhs, pf_x_rhs, q_rhs, q_weight, q_weight_explicit,
    random_sample, series_x_to_q, weight_transport_check, x_to_q,
};
use crate::lattice::{Point, RegularLattice};
use crate::report::{CheckRecord, Report};
use crate::shapes::{enumerate_rpp, PartitionShape};
use crate::toda::{
    ab_from_f, corner_deletion_check, fundamental_check, gauge_check, ni_sum_values, sample_until,
    verify_bilinear, verify_evolution, ClosedForm, SampleFunction, Window,
};

/// The checks a run can select.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// Sample ratio against the single-path sum.
    PathRatio,
    /// Minor ratio, non-intersecting sum and the product of `a` values.
    PathFamilies,
    /// Sum of general filling weights against the product of `a` ratios.
    MainIdentity,
    /// Diagonal-variable weight sum against its hook-type product.
    DiagonalProduct,
    /// Path sums unchanged by deleting a convex corner.
    CornerDeletion,
    /// Filling weight against the weight of its path family.
    WeightTransport,
    /// Box fillings counted by size against the triple product.
    BoxProduct,
    /// Large-bound truncated sums against the hook product.
    HookLimit,
    /// Single-variable weights and product.
    SingleVariable,
    /// The evolution equations.
    Evolution,
    /// The bilinear minor identity.
    Bilinear,
}

impl Identity {
    pub const ALL: [Identity; 11] = [
        Identity::BoxProduct,
        Identity::DiagonalProduct,
        Identity::MainIdentity,
        Identity::PathFamilies,
        Identity::PathRatio,
        Identity::CornerDeletion,
        Identity::WeightTransport,
        Identity::Evolution,
        Identity::Bilinear,
        Identity::HookLimit,
        Identity::SingleVariable,
    ];

    /// The name used on the command line and in output records.
    pub fn name(self) -> &'static str {
        match self {
            Identity::PathRatio => "thm3.2",
            Identity::PathFamilies => "thm3.3",
            Identity::MainIdentity => "thm4.3",
            Identity::DiagonalProduct => "thm5.1",
            Identity::CornerDeletion => "lemma3.2",
            Identity::WeightTransport => "lemma4.2",
            Identity::BoxProduct => "macmahon",
            Identity::HookLimit => "gansner",
            Identity::SingleVariable => "qspec",
            Identity::Evolution => "evolution",
            Identity::Bilinear => "bilinear",
        }
    }

    pub fn from_name(s: &str) -> Option<Identity> {
        Identity::ALL.into_iter().find(|i| i.name() == s)
    }
}

/// Parameters of a run. Unset shape or bound means a sweep (deterministic
/// suites) or a random pick per trial (seeded suites).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub shape: Option<PartitionShape>,
    pub n: Option<u32>,
    pub seed: u64,
    pub trials: u32,
    pub degree: u32,
    pub max_resample: u32,
    /// Largest shape size drawn or swept when no shape is given.
    pub max_cells: usize,
    /// Largest bound drawn or swept when no bound is given.
    pub max_n: u32,
    /// Half-width of the `(s, t)` window of the evolution and bilinear checks.
    pub radius: i64,
    /// Points (or endpoint pairs) per trial for the path-sum checks.
    pub points: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            shape: None,
            n: None,
            seed: 0,
            trials: 3,
            degree: 4,
            max_resample: 100,
            max_cells: 3,
            max_n: 2,
            radius: 2,
            points: 5,
        }
    }
}

/// ChaCha8 seeded with `seed`, on stream `trial`.
pub fn trial_rng(seed: u64, trial: u32) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

fn run_trials<F>(cfg: &SuiteConfig, body: F) -> Result<Vec<CheckRecord>>
where
    F: Fn(u32, &mut ChaCha8Rng) -> Result<Vec<CheckRecord>> + Sync,
{
    let parts: Vec<Result<Vec<CheckRecord>>> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| body(t, &mut trial_rng(cfg.seed, t)))
        .collect();
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

fn sweep<T, F>(items: Vec<T>, body: F) -> Result<Vec<CheckRecord>>
where
    T: Send,
    F: Fn(T) -> Result<Vec<CheckRecord>> + Sync + Send,
{
    let parts: Vec<Result<Vec<CheckRecord>>> = items.into_par_iter().map(body).collect();
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

fn pick_shape<R: Rng>(cfg: &SuiteConfig, rng: &mut R) -> PartitionShape {
    match &cfg.shape {
        Some(s) => s.clone(),
        None => PartitionShape::all_up_to(cfg.max_cells)
            .choose(rng)
            .cloned()
            .expect("at least the empty shape"),
    }
}

fn pick_n<R: Rng>(cfg: &SuiteConfig, rng: &mut R) -> u32 {
    cfg.n.unwrap_or_else(|| rng.random_range(0..=cfg.max_n))
}

fn shape_sweep(cfg: &SuiteConfig) -> Vec<PartitionShape> {
    match &cfg.shape {
        Some(s) => vec![s.clone()],
        None => PartitionShape::all_up_to(cfg.max_cells),
    }
}

fn n_sweep(cfg: &SuiteConfig) -> Vec<u32> {
    match cfg.n {
        Some(n) => vec![n],
        None => (0..=cfg.max_n).collect(),
    }
}

fn instances(cfg: &SuiteConfig) -> Vec<(PartitionShape, u32)> {
    let ns = n_sweep(cfg);
    shape_sweep(cfg)
        .into_iter()
        .flat_map(|s| ns.iter().map(move |&n| (s.clone(), n)))
        .collect()
}

/// Runs one identity.
pub fn run(identity: Identity, cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    match identity {
        Identity::BoxProduct => box_product(cfg),
        Identity::DiagonalProduct => diagonal_product(cfg),
        Identity::SingleVariable => single_variable(cfg),
        Identity::HookLimit => hook_limit(cfg),
        Identity::MainIdentity => main_trials(cfg, false),
        Identity::PathFamilies => main_trials(cfg, true),
        Identity::WeightTransport => weight_transport(cfg),
        Identity::PathRatio => path_ratio(cfg),
        Identity::CornerDeletion => corner_deletion(cfg),
        Identity::Evolution => evolution(cfg),
        Identity::Bilinear => bilinear(cfg),
    }
}

/// Runs every identity in [`Identity::ALL`] order.
pub fn run_all(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for id in Identity::ALL {
        out.extend(run(id, cfg)?);
    }
    Ok(out)
}

/// Boxes `r x c`: the given rectangle, or every box up to `max_cells` per side.
pub fn box_dims(cfg: &SuiteConfig) -> Vec<(u32, u32)> {
    match &cfg.shape {
        Some(s) if s.is_rectangle() => vec![(s.rows() as u32, s.cols() as u32)],
        Some(_) => Vec::new(),
        None => {
            let k = cfg.max_cells.max(1) as u32;
            (1..=k).flat_map(|r| (1..=k).map(move |c| (r, c))).collect()
        }
    }
}

fn box_product(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let ns = n_sweep(cfg);
    let items: Vec<(u32, u32, u32)> = box_dims(cfg)
        .into_iter()
        .flat_map(|(r, c)| ns.iter().map(move |&n| (r, c, n)))
        .collect();
    sweep(items, |(r, c, n)| {
        Ok(vec![CheckRecord::new(
            Identity::BoxProduct.name(),
            json!({"r": r, "c": c, "n": n}),
            &macmahon_lhs(r, c, n),
            &macmahon_rhs(r, c, n),
        )])
    })
}

fn diagonal_product(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    sweep(instances(cfg), |(shape, n)| {
        Ok(vec![CheckRecord::new(
            Identity::DiagonalProduct.name(),
            json!({"shape": shape, "n": n}),
            &pf_x_lhs(&shape, n),
            &pf_x_rhs(&shape, n),
        )])
    })
}

fn single_variable(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let name = Identity::SingleVariable.name();
    sweep(instances(cfg), |(shape, n)| {
        let mut explicit = Report::new();
        let mut sum = Scalar::zero();
        for pi in enumerate_rpp(&shape, n) {
            let w = q_weight(&shape, n, &pi);
            explicit.compare(json!({"pi": pi}), &w, &q_weight_explicit(&shape, n, &pi));
            sum = &sum + &w;
        }
        let inst = |vs: &str| json!({"shape": shape, "n": n, "vs": vs});
        let mut out = vec![
            CheckRecord::from_report(name, inst("explicit"), &explicit),
            CheckRecord::new(name, inst("product"), &sum, &q_rhs(&shape, n)),
            CheckRecord::new(
                name,
                inst("specialized"),
                &sum,
                &x_to_q(&pf_x_lhs(&shape, n)),
            ),
        ];
        if shape.is_rectangle() && !shape.is_empty() {
            let (r, c) = (shape.rows() as u32, shape.cols() as u32);
            out.push(CheckRecord::new(
                name,
                inst("box"),
                &sum,
                &macmahon_rhs(r, c, n),
            ));
        }
        Ok(out)
    })
}

fn hook_limit(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let name = Identity::HookLimit.name();
    let d = cfg.degree;
    sweep(shape_sweep(cfg), |shape| {
        let n = gansner_bound(&shape, d);
        let lhs = gansner_lhs_truncated(&shape, n, d)?;
        let rhs = gansner_rhs_truncated(&shape, d)?;
        let inst = |g: &str| json!({"shape": shape, "degree": d, "n": n, "grading": g});
        Ok(vec![
            CheckRecord::from_text(name, inst("x"), lhs.to_string(), rhs.to_string()),
            CheckRecord::from_text(
                name,
                inst("q"),
                series_x_to_q(&lhs).to_string(),
                series_x_to_q(&rhs).to_string(),
            ),
        ])
    })
}

/// One seeded trial of the main identity and the path-family comparison on
/// the same sample, so both suites see identical draws.
fn main_trials(cfg: &SuiteConfig, families: bool) -> Result<Vec<CheckRecord>> {
    run_trials(cfg, |trial, rng| {
        let shape = pick_shape(cfg, rng);
        let n = pick_n(cfg, rng);
        let lattice = partition_lattice(&shape, n);
        let (r, c) = (shape.rows() as i64, shape.cols() as i64);
        let (_, (lhs, rhs, ratio, paths, prod)) = sample_until(
            rng,
            cfg.max_resample,
            |g| random_sample(g, &shape, n),
            |f| {
                let sol = ab_from_f(f);
                let lhs = pf_lhs(&shape, n, &sol)?;
                let rhs = pf_rhs(&shape, n, &sol)?;
                let (ratio, paths, prod) = ni_sum_values(f, &lattice, r, c, n as usize)?;
                Ok((lhs, rhs, ratio, paths, prod))
            },
        )?;
        let inst = |vs: Option<&str>| match vs {
            Some(vs) => json!({"trial": trial, "shape": shape, "n": n, "vs": vs}),
            None => json!({"trial": trial, "shape": shape, "n": n}),
        };
        Ok(if families {
            let name = Identity::PathFamilies.name();
            vec![
                CheckRecord::new(name, inst(Some("paths")), &ratio, &paths),
                CheckRecord::new(name, inst(Some("product")), &ratio, &prod),
            ]
        } else {
            vec![CheckRecord::new(
                Identity::MainIdentity.name(),
                inst(None),
                &lhs,
                &rhs,
            )]
        })
    })
}

fn weight_transport(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    run_trials(cfg, |trial, rng| {
        let shape = pick_shape(cfg, rng);
        let n = pick_n(cfg, rng);
        let (_, rep) = sample_until(
            rng,
            cfg.max_resample,
            |g| random_sample(g, &shape, n),
            |f| weight_transport_check(&shape, n, f),
        )?;
        Ok(vec![CheckRecord::from_report(
            Identity::WeightTransport.name(),
            json!({"trial": trial, "shape": shape, "n": n}),
            &rep,
        )])
    })
}

/// A random staircase lattice for the path-sum checks.
pub fn random_lattice<R: Rng>(rng: &mut R) -> RegularLattice {
    RegularLattice::random(rng, 0, 5, 4, 6)
}

/// A sample window covering every label a path sum on `lattice` consumes.
pub fn lattice_window(lattice: &RegularLattice) -> ((i64, i64), (i64, i64)) {
    let h = lattice.bottom() - lattice.top() + 1;
    (
        (lattice.top(), lattice.bottom() + h + 2),
        (lattice.col_min(), lattice.col_max() + h + 2),
    )
}

fn random_point<R: Rng>(rng: &mut R, lattice: &RegularLattice) -> Point {
    let i = rng.random_range(lattice.top()..=lattice.bottom());
    let lo = lattice.profile()[(i - lattice.top()) as usize];
    Point::new(i, rng.random_range(lo..=lattice.col_max()))
}

fn path_ratio(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    run_trials(cfg, |trial, rng| {
        let lattice = random_lattice(rng);
        let points: Vec<Point> = (0..cfg.points)
            .map(|_| random_point(rng, &lattice))
            .collect();
        let (rows, cols) = lattice_window(&lattice);
        let (_, reports) = sample_until(
            rng,
            cfg.max_resample,
            |g| SampleFunction::random_integer(g, rows, cols, 1, 9),
            |f| {
                points
                    .iter()
                    .map(|&p| fundamental_check(f, &lattice, p))
                    .collect::<Result<Vec<Report>>>()
            },
        )?;
        Ok(points
            .iter()
            .zip(reports)
            .map(|(p, rep)| {
                CheckRecord::from_report(
                    Identity::PathRatio.name(),
                    json!({"trial": trial, "lattice": lattice, "point": [p.i, p.j]}),
                    &rep,
                )
            })
            .collect())
    })
}

fn corner_deletion(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    run_trials(cfg, |trial, rng| {
        let (lattice, corner) = loop {
            let l = random_lattice(rng);
            // Keep corners strictly inside the window so deletion stays regular.
            let corners: Vec<Point> = l
                .corners()
                .into_iter()
                .filter(|p| p.i < l.bottom() && p.j < l.col_max())
                .collect();
            if let Some(&p) = corners.choose(rng) {
                break (l, p);
            }
        };
        let smaller = lattice.delete_corner(corner)?;
        let diag = corner.i - corner.j;
        let mut pairs = Vec::with_capacity(cfg.points);
        while pairs.len() < cfg.points {
            let a = random_point(rng, &smaller);
            let b = random_point(rng, &smaller);
            let (from, to) = if a.i >= b.i { (a, b) } else { (b, a) };
            if to.j >= from.j && from.i - from.j != diag && to.i - to.j != diag {
                pairs.push((from, to));
            }
        }
        let (rows, cols) = lattice_window(&lattice);
        let (_, reports) = sample_until(
            rng,
            cfg.max_resample,
            |g| SampleFunction::random_integer(g, rows, cols, 1, 9),
            |f| {
                let sol = ab_from_f(f);
                pairs
                    .iter()
                    .map(|&(from, to)| corner_deletion_check(&sol, &lattice, corner, from, to))
                    .collect::<Result<Vec<Report>>>()
            },
        )?;
        Ok(pairs
            .iter()
            .zip(reports)
            .map(|((from, to), rep)| {
                CheckRecord::from_report(
                    Identity::CornerDeletion.name(),
                    json!({
                        "trial": trial,
                        "lattice": lattice,
                        "corner": [corner.i, corner.j],
                        "from": [from.i, from.j],
                        "to": [to.i, to.j],
                    }),
                    &rep,
                )
            })
            .collect())
    })
}

fn evolution_window(cfg: &SuiteConfig) -> Window {
    Window::centered(cfg.radius, cfg.n.map_or(cfg.max_n as i64, |n| n as i64))
}

/// Random rational closed forms until one has no vanishing value on `w`.
pub fn random_closed_form<R: Rng>(
    rng: &mut R,
    w: &Window,
    max_resample: u32,
) -> Result<(ClosedForm, Report)> {
    let span =
        w.s.1
            .abs()
            .max(w.s.0.abs())
            .max(w.t.1.abs())
            .max(w.t.0.abs())
            + w.n.1
            + 4;
    for _ in 0..max_resample {
        let cf = ClosedForm::random_rational(rng, span, BracketConvention::Telescoping);
        match verify_evolution(&cf, w) {
            Ok(rep) => return Ok((cf, rep)),
            Err(Error::Vanishing { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::ResampleExhausted(max_resample))
}

fn evolution(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let name = Identity::Evolution.name();
    let w = evolution_window(cfg);
    let (rows, cols) = w.sample_rows_cols();
    let window = json!({"s": [w.s.0, w.s.1], "t": [w.t.0, w.t.1], "n": [w.n.0, w.n.1]});
    let symbolic = verify_evolution(&ClosedForm::symbolic(BracketConvention::Telescoping), &w)?;
    let mut out = vec![CheckRecord::from_report(
        name,
        json!({"solution": "closed-form-symbolic", "window": window}),
        &symbolic,
    )];
    out.extend(run_trials(cfg, |trial, rng| {
        let (_, rep) = sample_until(
            rng,
            cfg.max_resample,
            |g| SampleFunction::random_integer(g, rows, cols, 1, 9),
            |f| verify_evolution(&ab_from_f(f), &w),
        )?;
        let (_, closed) = random_closed_form(rng, &w, cfg.max_resample)?;
        Ok(vec![
            CheckRecord::from_report(
                name,
                json!({"trial": trial, "solution": "sample", "window": window}),
                &rep,
            ),
            CheckRecord::from_report(
                name,
                json!({"trial": trial, "solution": "closed-form-rational", "window": window}),
                &closed,
            ),
        ])
    })?);
    Ok(out)
}

fn bilinear(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let name = Identity::Bilinear.name();
    let w = evolution_window(cfg);
    let (rows, cols) = w.sample_rows_cols();
    let window = json!({"s": [w.s.0, w.s.1], "t": [w.t.0, w.t.1], "n": [w.n.0, w.n.1]});
    let ones = verify_bilinear(&SampleFunction::ones(rows, cols), &w)?;
    let mut out = vec![CheckRecord::from_report(
        name,
        json!({"sample": "ones", "window": window}),
        &ones,
    )];
    out.extend(run_trials(cfg, |trial, rng| {
        let f = SampleFunction::random_integer(rng, rows, cols, 1, 9);
        Ok(vec![CheckRecord::from_report(
            name,
            json!({"trial": trial, "sample": "random", "window": window}),
            &verify_bilinear(&f, &w)?,
        )])
    })?);
    Ok(out)
}

/// Column gauges: random nonzero integers in `-9..=9` on the sample's columns.
pub fn gauge_trials(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let w = evolution_window(cfg);
    let (rows, cols) = w.sample_rows_cols();
    run_trials(cfg, |trial, rng| {
        let (f, _) = sample_until(
            rng,
            cfg.max_resample,
            |g| SampleFunction::random_integer(g, rows, cols, 1, 9),
            |f| verify_evolution(&ab_from_f(f), &w),
        )?;
        let phi: Vec<i64> = (cols.0..=cols.1)
            .map(|_| {
                let k: i64 = rng.random_range(1..=9);
                if rng.random_bool(0.5) {
                    k
                } else {
                    -k
                }
            })
            .collect();
        let g = f.gauge(|j| Scalar::from_int(phi[(j - cols.0) as usize]))?;
        Ok(vec![CheckRecord::from_report(
            "gauge",
            json!({"trial": trial, "phi": phi}),
            &gauge_check(&f, &g, &w)?,
        )])
    })
}
