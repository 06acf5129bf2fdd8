//! Command-line front end. Every command writes JSON.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::identities::{
    gansner_rhs_truncated, lp_to_rpp, macmahon_rhs, pf_x_rhs, q_rhs, q_weight, random_sample,
    rpp_to_lp, rpp_weight, weight_x,
};
use crate::report::CheckRecord;
use crate::shapes::{enumerate_rpp, PartitionShape, RppTable};
use crate::suites::{self, trial_rng, Identity, SuiteConfig};
use crate::toda::{ab_from_f, sample_until};

/// Environment variable overriding the resample limit.
pub const MAX_RESAMPLE_VAR: &str = "TODA_RPP_MAX_RESAMPLE";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESAMPLE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "toda-rpp",
    version,
    about = "Exact checks of Toda molecule and plane partition identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Partition as comma-separated parts, e.g. `3,2,1`; empty for the empty shape.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub shape: Option<String>,
    /// Rows of a rectangular shape.
    #[arg(long, global = true)]
    pub r: Option<u32>,
    /// Columns of a rectangular shape.
    #[arg(long, global = true)]
    pub c: Option<u32>,
    /// Upper bound on filling entries.
    #[arg(long, global = true)]
    pub n: Option<u32>,
    /// Coefficients used by `enumerate`.
    #[arg(long, global = true, value_enum, default_value_t = Mode::X)]
    pub mode: Mode,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub trials: Option<u32>,
    /// Truncation degree for series.
    #[arg(long, global = true, default_value_t = 4)]
    pub degree: u32,
    #[arg(long, global = true, value_enum)]
    pub identity: Option<IdentityArg>,
    /// Largest shape size swept or drawn when `--shape` is absent.
    #[arg(long, global = true)]
    pub max_cells: Option<usize>,
    /// Largest bound swept or drawn when `--n` is absent.
    #[arg(long, global = true)]
    pub max_n: Option<u32>,
    /// Write JSON here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Check identities exactly and report each instance.
    Verify,
    /// List fillings with size, traces and weight.
    Enumerate,
    /// Print a closed-form generating function.
    Genfun,
    /// Map fillings to path families and back.
    Bijection,
    /// Check the evolution, bilinear and gauge properties of sampled solutions.
    TodaCheck,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Weights from a seeded random integer sample.
    Rational,
    /// Single-variable weights.
    Q,
    /// Diagonal-variable weights.
    X,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityArg {
    #[value(name = "thm3.2")]
    PathRatio,
    #[value(name = "thm3.3")]
    PathFamilies,
    #[value(name = "thm4.3")]
    MainIdentity,
    #[value(name = "thm5.1")]
    DiagonalProduct,
    #[value(name = "lemma3.2")]
    CornerDeletion,
    #[value(name = "lemma4.2")]
    WeightTransport,
    #[value(name = "macmahon")]
    BoxProduct,
    #[value(name = "gansner")]
    HookLimit,
    #[value(name = "qspec")]
    SingleVariable,
    #[value(name = "evolution")]
    Evolution,
    #[value(name = "bilinear")]
    Bilinear,
}

impl From<IdentityArg> for Identity {
    fn from(a: IdentityArg) -> Identity {
        match a {
            IdentityArg::PathRatio => Identity::PathRatio,
            IdentityArg::PathFamilies => Identity::PathFamilies,
            IdentityArg::MainIdentity => Identity::MainIdentity,
            IdentityArg::DiagonalProduct => Identity::DiagonalProduct,
            IdentityArg::CornerDeletion => Identity::CornerDeletion,
            IdentityArg::WeightTransport => Identity::WeightTransport,
            IdentityArg::BoxProduct => Identity::BoxProduct,
            IdentityArg::HookLimit => Identity::HookLimit,
            IdentityArg::SingleVariable => Identity::SingleVariable,
            IdentityArg::Evolution => Identity::Evolution,
            IdentityArg::Bilinear => Identity::Bilinear,
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
/// JSON goes to `out` unless `--out` names a file; diagnostics go to `err`.
pub fn main_with<I, T>(
    args: I,
    max_resample: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, max_resample) {
        Ok((value, ok)) => {
            let text = serde_json::to_string_pretty(&value).expect("JSON values serialize");
            let written = match &cli.out {
                Some(path) => std::fs::write(path, format!("{text}\n")),
                None => writeln!(out, "{text}"),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_FAILED;
            }
            if ok {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Usage(_) | Error::Shape(_) => EXIT_USAGE,
                Error::ResampleExhausted(_) => EXIT_RESAMPLE,
                _ => EXIT_FAILED,
            }
        }
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

/// The shape from `--shape` or `--r`/`--c`.
fn shape_of(cli: &Cli) -> Result<Option<PartitionShape>> {
    let rect = match (cli.r, cli.c) {
        (Some(r), Some(c)) => Some(PartitionShape::rectangle(r as usize, c as usize)),
        (None, None) => None,
        _ => return Err(usage("--r and --c must be given together")),
    };
    let parsed = cli
        .shape
        .as_deref()
        .map(str::parse::<PartitionShape>)
        .transpose()?;
    match (parsed, rect) {
        (Some(s), Some(r)) if s != r => Err(usage("--shape disagrees with --r/--c")),
        (s, r) => Ok(s.or(r)),
    }
}

fn need_shape(cli: &Cli) -> Result<PartitionShape> {
    shape_of(cli)?.ok_or_else(|| usage("this command needs --shape or --r/--c"))
}

fn need_n(cli: &Cli) -> Result<u32> {
    cli.n.ok_or_else(|| usage("this command needs --n"))
}

fn config(cli: &Cli, max_resample: Option<&str>) -> Result<SuiteConfig> {
    let mut cfg = SuiteConfig {
        shape: shape_of(cli)?,
        n: cli.n,
        seed: cli.seed,
        degree: cli.degree,
        ..SuiteConfig::default()
    };
    if let Some(t) = cli.trials {
        cfg.trials = t;
    }
    if let Some(m) = cli.max_cells {
        cfg.max_cells = m;
    }
    if let Some(m) = cli.max_n {
        cfg.max_n = m;
    }
    if let Some(v) = max_resample {
        cfg.max_resample = v.trim().parse().map_err(|_| {
            usage(format!(
                "{MAX_RESAMPLE_VAR} must be a nonnegative integer, got {v:?}"
            ))
        })?;
    }
    Ok(cfg)
}

fn execute(cli: &Cli, max_resample: Option<&str>) -> Result<(Value, bool)> {
    let cfg = config(cli, max_resample)?;
    match cli.command {
        Command::Verify => {
            let records = match cli.identity {
                Some(id) => suites::run(id.into(), &cfg)?,
                None => suites::run_all(&cfg)?,
            };
            Ok(results(records))
        }
        Command::TodaCheck => {
            let records = match cli.identity.map(Identity::from) {
                Some(id @ (Identity::Evolution | Identity::Bilinear)) => suites::run(id, &cfg)?,
                Some(id) => return Err(usage(format!("toda-check does not run {}", id.name()))),
                None => {
                    let mut v = suites::run(Identity::Evolution, &cfg)?;
                    v.extend(suites::run(Identity::Bilinear, &cfg)?);
                    v.extend(suites::gauge_trials(&cfg)?);
                    v
                }
            };
            Ok(results(records))
        }
        Command::Enumerate => Ok((enumerate(cli, &cfg)?, true)),
        Command::Genfun => Ok((genfun(cli)?, true)),
        Command::Bijection => bijection(cli),
    }
}

fn results(records: Vec<CheckRecord>) -> (Value, bool) {
    let ok = records.iter().all(|r| r.equal);
    (json!({"results": records, "all_equal": ok}), ok)
}

#[derive(Serialize)]
struct EnumRecord<'a> {
    pi: &'a RppTable,
    size: u64,
    traces: Vec<(i32, u64)>,
    w: Scalar,
}

fn enumerate(cli: &Cli, cfg: &SuiteConfig) -> Result<Value> {
    let shape = need_shape(cli)?;
    let n = need_n(cli)?;
    let fillings: Vec<RppTable> = enumerate_rpp(&shape, n).collect();
    let weights: Vec<Scalar> = match cli.mode {
        Mode::X => fillings.iter().map(|pi| weight_x(&shape, n, pi)).collect(),
        Mode::Q => fillings.iter().map(|pi| q_weight(&shape, n, pi)).collect(),
        Mode::Rational => {
            let mut rng = trial_rng(cfg.seed, 0);
            sample_until(
                &mut rng,
                cfg.max_resample,
                |g| random_sample(g, &shape, n),
                |f| {
                    let sol = ab_from_f(f);
                    fillings
                        .iter()
                        .map(|pi| rpp_weight(&shape, n, &sol, pi))
                        .collect::<Result<Vec<_>>>()
                },
            )?
            .1
        }
    };
    let records: Vec<EnumRecord> = fillings
        .iter()
        .zip(weights)
        .map(|(pi, w)| EnumRecord {
            pi,
            size: pi.size(),
            traces: pi.traces(),
            w,
        })
        .collect();
    Ok(serde_json::to_value(records).expect("records serialize"))
}

fn genfun(cli: &Cli) -> Result<Value> {
    let id = cli
        .identity
        .map(Identity::from)
        .ok_or_else(|| usage("genfun needs --identity"))?;
    let (instance, value) = match id {
        Identity::BoxProduct => {
            let shape = need_shape(cli)?;
            if !shape.is_rectangle() || shape.is_empty() {
                return Err(usage("macmahon needs a nonempty rectangle"));
            }
            let n = need_n(cli)?;
            let (r, c) = (shape.rows() as u32, shape.cols() as u32);
            (
                json!({"r": r, "c": c, "n": n}),
                macmahon_rhs(r, c, n).to_string(),
            )
        }
        Identity::HookLimit => {
            let shape = need_shape(cli)?;
            let s = gansner_rhs_truncated(&shape, cli.degree)?;
            (json!({"shape": shape, "degree": cli.degree}), s.to_string())
        }
        Identity::DiagonalProduct => {
            let shape = need_shape(cli)?;
            let n = need_n(cli)?;
            (
                json!({"shape": shape, "n": n}),
                pf_x_rhs(&shape, n).to_string(),
            )
        }
        Identity::SingleVariable => {
            let shape = need_shape(cli)?;
            let n = need_n(cli)?;
            (
                json!({"shape": shape, "n": n}),
                q_rhs(&shape, n).to_string(),
            )
        }
        other => {
            return Err(usage(format!(
                "genfun has no closed form for {}",
                other.name()
            )))
        }
    };
    Ok(json!({"identity": id.name(), "instance": instance, "value": value}))
}

fn bijection(cli: &Cli) -> Result<(Value, bool)> {
    let shape = need_shape(cli)?;
    let n = need_n(cli)?;
    let mut ok = true;
    let mut records = Vec::new();
    for pi in enumerate_rpp(&shape, n) {
        let tuple = rpp_to_lp(&pi, &shape, n)?;
        let back = lp_to_rpp(&tuple, &shape, n)?;
        let roundtrip = back == pi;
        ok &= roundtrip;
        records.push(json!({"pi": pi, "paths": tuple, "roundtrip": roundtrip}));
    }
    Ok((
        json!({"shape": shape, "n": n, "records": records, "all_roundtrip": ok}),
        ok,
    ))
}
