//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use toda_rpp::identities::{lp_to_rpp, random_sample, rpp_to_lp, weight_transport_check};
use toda_rpp::lattice::{LatticePath, Point};
use toda_rpp::report::CheckRecord;
use toda_rpp::shapes::{enumerate_rpp, PartitionShape};
use toda_rpp::suites::{self, gauge_trials, trial_rng, Identity, SuiteConfig};
use toda_rpp::toda::sample_until;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const SEED: u64 = 20240601;

fn all_equal(label: &str, records: &[CheckRecord], expected: usize) -> Outcome {
    if records.len() != expected {
        return Err(format!(
            "{label}: {} records, expected {expected}",
            records.len()
        ));
    }
    match records.iter().find(|r| !r.equal) {
        Some(r) => Err(format!(
            "{label}: {} lhs={} rhs={}",
            r.instance, r.lhs, r.rhs
        )),
        None => Ok(format!("{label}: {} records equal", records.len())),
    }
}

fn run(id: Identity, c: &SuiteConfig) -> Result<Vec<CheckRecord>, String> {
    suites::run(id, c).map_err(|e| e.to_string())
}

fn cfg() -> SuiteConfig {
    SuiteConfig {
        seed: SEED,
        ..SuiteConfig::default()
    }
}

fn shapes_count(max_cells: usize) -> usize {
    PartitionShape::all_up_to(max_cells).len()
}

fn box_product() -> Outcome {
    let c = SuiteConfig {
        max_cells: 3,
        n: None,
        max_n: 3,
        ..cfg()
    };
    let start = Instant::now();
    let mut recs = run(Identity::BoxProduct, &c)?;
    let elapsed = start.elapsed();
    recs.retain(|r| r.instance["n"].as_u64() != Some(0));
    if elapsed > Duration::from_secs(30) {
        return Err(format!("took {elapsed:?}"));
    }
    all_equal("27 boxes", &recs, 27).map(|s| format!("{s} in {elapsed:.2?}"))
}

fn diagonal_product() -> Outcome {
    let c = SuiteConfig {
        max_cells: 6,
        max_n: 3,
        ..cfg()
    };
    let recs = run(Identity::DiagonalProduct, &c)?;
    let anchor = |shape: &str, n: u32, expected: &str| -> std::result::Result<(), String> {
        let c = SuiteConfig {
            shape: Some(shape.parse().unwrap()),
            n: Some(n),
            ..cfg()
        };
        let r = &run(Identity::DiagonalProduct, &c)?[0];
        if r.equal && r.lhs == expected {
            Ok(())
        } else {
            Err(format!("anchor ({shape}) n={n}: {} vs {expected}", r.lhs))
        }
    };
    anchor("1", 1, "(1-x[-1]*x[0])/(1-x[0])")?;
    anchor("1", 2, "(1-x[-2]*x[-1]*x[0])/(1-x[0])")?;
    all_equal("shapes x n", &recs, shapes_count(6) * 4).map(|s| s + ", anchors match")
}

fn main_cfg() -> SuiteConfig {
    SuiteConfig {
        trials: 50,
        max_cells: 8,
        max_n: 3,
        ..cfg()
    }
}

fn main_identity() -> Outcome {
    all_equal("trials", &run(Identity::MainIdentity, &main_cfg())?, 50)
}

fn path_families() -> Outcome {
    let main = run(Identity::MainIdentity, &main_cfg())?;
    let fam = run(Identity::PathFamilies, &main_cfg())?;
    // Both suites must have drawn the same instances.
    for (m, pair) in main.iter().zip(fam.chunks(2)) {
        for f in pair {
            if f.instance["shape"] != m.instance["shape"] || f.instance["n"] != m.instance["n"] {
                return Err(format!(
                    "instance mismatch {} vs {}",
                    m.instance, f.instance
                ));
            }
        }
    }
    all_equal("ratio = paths = product", &fam, 100)
}

fn path_ratio() -> Outcome {
    let c = SuiteConfig {
        trials: 10,
        points: 20,
        ..cfg()
    };
    all_equal(
        "10 lattices x 20 points",
        &run(Identity::PathRatio, &c)?,
        200,
    )
}

fn corner_deletion() -> Outcome {
    let c = SuiteConfig {
        trials: 20,
        points: 10,
        ..cfg()
    };
    all_equal(
        "20 profiles x 10 pairs",
        &run(Identity::CornerDeletion, &c)?,
        200,
    )
}

fn printed_filling() -> std::result::Result<(), String> {
    let shape: PartitionShape = "5,4,4,2,1".parse().unwrap();
    let words = ["NEENEENNNE", "NEEENENNEN", "ENEEENENNN", "EEENENENNN"];
    let tuple: Vec<LatticePath> = words
        .iter()
        .enumerate()
        .map(|(k, w)| LatticePath::from_word(Point::new(5 + k as i64, k as i64), w).unwrap())
        .collect();
    let pi = lp_to_rpp(&tuple, &shape, 4).map_err(|e| e.to_string())?;
    let rows: Vec<Vec<u32>> = vec![
        vec![0, 0, 1, 1, 2],
        vec![0, 2, 3, 4],
        vec![2, 4, 4, 4],
        vec![2, 4],
        vec![3],
    ];
    if pi.rows() != rows.as_slice() {
        return Err(format!("printed filling mismatch: {:?}", pi.rows()));
    }
    if rpp_to_lp(&pi, &shape, 4).map_err(|e| e.to_string())? != tuple {
        return Err("printed tuple does not come back".into());
    }
    Ok(())
}

fn bijection() -> Outcome {
    printed_filling()?;
    let mut fillings = 0usize;
    let mut instance = 0u32;
    for shape in PartitionShape::all_up_to(6) {
        for n in 0..=3 {
            for pi in enumerate_rpp(&shape, n) {
                let t = rpp_to_lp(&pi, &shape, n).map_err(|e| e.to_string())?;
                if lp_to_rpp(&t, &shape, n).map_err(|e| e.to_string())? != pi {
                    return Err(format!("roundtrip ({shape}) n={n} {:?}", pi.rows()));
                }
                fillings += 1;
            }
            let mut rng = trial_rng(SEED, instance);
            instance += 1;
            let (_, rep) = sample_until(
                &mut rng,
                100,
                |g| random_sample(g, &shape, n),
                |f| weight_transport_check(&shape, n, f),
            )
            .map_err(|e| e.to_string())?;
            if !rep.is_empty() {
                return Err(format!(
                    "weight transport ({shape}) n={n}: {:?}",
                    rep.violations[0]
                ));
            }
        }
    }
    Ok(format!(
        "{fillings} fillings roundtrip with equal weights, printed instance ok"
    ))
}

fn evolution_and_bilinear() -> Outcome {
    let c = SuiteConfig {
        trials: 20,
        radius: 3,
        max_n: 3,
        ..cfg()
    };
    let bil = run(Identity::Bilinear, &c)?;
    all_equal("bilinear", &bil, 21)?;
    if bil[0].instance["sample"] != "ones" {
        return Err("missing the all-ones sample".into());
    }
    let c = SuiteConfig { trials: 5, ..c };
    let evo = run(Identity::Evolution, &c)?;
    let kinds = ["closed-form-symbolic", "sample", "closed-form-rational"];
    for k in kinds {
        if !evo.iter().any(|r| r.instance["solution"] == k) {
            return Err(format!("no {k} run"));
        }
    }
    all_equal("evolution", &evo, 11)?;
    Ok(format!(
        "{} bilinear and {} evolution records empty",
        bil.len(),
        evo.len()
    ))
}

fn gauge() -> Outcome {
    let c = SuiteConfig {
        trials: 10,
        radius: 3,
        max_n: 3,
        ..cfg()
    };
    all_equal("gauges", &gauge_trials(&c).map_err(|e| e.to_string())?, 10)
}

fn hook_limit() -> Outcome {
    let c = SuiteConfig {
        max_cells: 5,
        degree: 6,
        ..cfg()
    };
    all_equal(
        "x and q gradings",
        &run(Identity::HookLimit, &c)?,
        shapes_count(5) * 2,
    )
}

fn single_variable() -> Outcome {
    let c = SuiteConfig {
        max_cells: 6,
        max_n: 3,
        ..cfg()
    };
    let recs = run(Identity::SingleVariable, &c)?;
    let boxes = recs.iter().filter(|r| r.instance["vs"] == "box").count();
    let rects = PartitionShape::all_up_to(6)
        .iter()
        .filter(|s| s.is_rectangle() && !s.is_empty())
        .count();
    all_equal(
        "explicit, product, specialized, box",
        &recs,
        shapes_count(6) * 4 * 3 + rects * 4,
    )
    .map(|s| format!("{s} ({boxes} against boxes)"))
}

fn determinism() -> Outcome {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_toda-rpp"))
            .args(["verify", "--seed", "42"])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("exit {:?}", out.status.code()));
        }
        Ok(out.stdout)
    };
    let a = run()?;
    let b = run()?;
    if a == b && !a.is_empty() {
        Ok(format!("{} identical bytes", a.len()))
    } else {
        Err("outputs differ".into())
    }
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("box product", box_product),
        ("diagonal-variable product", diagonal_product),
        ("main identity, 50 trials", main_identity),
        ("minor ratio, path families, product", path_families),
        ("sample ratio against path sum", path_ratio),
        ("corner deletion", corner_deletion),
        ("bijection and weight transport", bijection),
        ("evolution and bilinear", evolution_and_bilinear),
        ("gauge invariance", gauge),
        ("hook product limit", hook_limit),
        ("single-variable specialization", single_variable),
        ("seeded determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{t:.2?}]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{t:.2?}]", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
