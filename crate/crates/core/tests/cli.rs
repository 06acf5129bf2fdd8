use std::process::Command;

use serde_json::Value;
use toda_rpp::cli::{main_with, EXIT_FAILED, EXIT_OK, EXIT_RESAMPLE, EXIT_USAGE};

fn run(args: &[&str]) -> (i32, Value) {
    run_env(args, None)
}

fn run_env(args: &[&str], max_resample: Option<&str>) -> (i32, Value) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("toda-rpp").chain(args.iter().copied());
    let code = main_with(argv, max_resample, &mut out, &mut err);
    let v = serde_json::from_slice(&out).unwrap_or(Value::Null);
    (code, v)
}

#[test]
fn verify_box_product() {
    let (code, v) = run(&[
        "verify",
        "--identity",
        "macmahon",
        "--r",
        "2",
        "--c",
        "2",
        "--n",
        "2",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["all_equal"], true);
    assert_eq!(v["results"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_main_identity_trials() {
    let (code, v) = run(&[
        "verify",
        "--identity",
        "thm4.3",
        "--shape",
        "2,1",
        "--n",
        "2",
        "--seed",
        "7",
        "--trials",
        "10",
    ]);
    assert_eq!(code, EXIT_OK);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 10);
    assert!(results.iter().all(|r| r["equal"] == true));
}

#[test]
fn verify_single_cell_symbolic() {
    let (code, v) = run(&["verify", "--identity", "thm5.1", "--shape", "1", "--n", "1"]);
    assert_eq!(code, EXIT_OK);
    let r = &v["results"][0];
    assert_eq!(r["lhs"], "(1-x[-1]*x[0])/(1-x[0])");
    assert_eq!(r["rhs"], r["lhs"]);
}

#[test]
fn enumerate_modes() {
    let (code, v) = run(&["enumerate", "--shape", "1", "--n", "1", "--mode", "q"]);
    assert_eq!(code, EXIT_OK);
    let recs = v.as_array().unwrap();
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[0]["pi"], serde_json::json!([[0]]));
    assert_eq!(recs[0]["w"], "1");
    assert_eq!(recs[1]["pi"], serde_json::json!([[1]]));
    assert_eq!(recs[1]["w"], "q");

    assert_eq!(
        run(&["enumerate", "--shape", "2,1", "--n", "1"])
            .1
            .as_array()
            .unwrap()
            .len(),
        5
    );
    assert_eq!(
        run(&["enumerate", "--shape", "", "--n", "3"])
            .1
            .as_array()
            .unwrap()
            .len(),
        1
    );

    let (code, v) = run(&[
        "enumerate",
        "--shape",
        "2,1",
        "--n",
        "2",
        "--mode",
        "rational",
        "--seed",
        "5",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v.as_array().unwrap()[0]["w"], "1");
}

#[test]
fn genfun_closed_forms() {
    let (_, v) = run(&[
        "genfun",
        "--identity",
        "macmahon",
        "--r",
        "1",
        "--c",
        "1",
        "--n",
        "1",
    ]);
    assert_eq!(v["value"], "1+q");
    let (_, v) = run(&["genfun", "--identity", "thm5.1", "--shape", "1", "--n", "2"]);
    assert_eq!(v["value"], "(1-x[-2]*x[-1]*x[0])/(1-x[0])");
    // 1/((1 - x0 x1)(1 - x1)) to total degree 4.
    let (_, v) = run(&[
        "genfun",
        "--identity",
        "gansner",
        "--shape",
        "2",
        "--degree",
        "4",
    ]);
    assert_eq!(
        v["value"],
        "1+x[1]+x[0]*x[1]+x[1]^2+x[0]*x[1]^2+x[1]^3+x[0]^2*x[1]^2+x[0]*x[1]^3+x[1]^4+O(5)"
    );
    assert_eq!(run(&["genfun", "--identity", "thm3.2"]).0, EXIT_USAGE);
}

#[test]
fn bijection_roundtrips() {
    let (code, v) = run(&["bijection", "--shape", "2,1", "--n", "2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["all_roundtrip"], true);
    assert_eq!(v["records"].as_array().unwrap().len(), 14);
}

#[test]
fn toda_check_runs_all_three() {
    let (code, v) = run(&["toda-check", "--seed", "3", "--trials", "2"]);
    assert_eq!(code, EXIT_OK);
    let ids: Vec<&str> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["identity"].as_str().unwrap())
        .collect();
    for id in ["evolution", "bilinear", "gauge"] {
        assert!(ids.contains(&id), "{id}");
    }
    assert_eq!(run(&["toda-check", "--identity", "macmahon"]).0, EXIT_USAGE);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["verify", "--bogus"]).0, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "--identity", "thm9.9"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "--shape", "1,x"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "--shape", "1,2"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "--r", "2"]).0, EXIT_USAGE);
    assert_eq!(run(&["enumerate", "--shape", "1"]).0, EXIT_USAGE);
    assert_eq!(
        run_env(&["verify", "--identity", "macmahon"], Some("lots")).0,
        EXIT_USAGE
    );
}

#[test]
fn resample_exhaustion() {
    let (code, _) = run_env(
        &["verify", "--identity", "thm4.3", "--trials", "1"],
        Some("0"),
    );
    assert_eq!(code, EXIT_RESAMPLE);
}

#[test]
fn out_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("toda-rpp-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, v) = run(&["verify", "--identity", "qspec", "--seed", "1", "--out", p]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v, Value::Null);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(
        written,
        run(&["verify", "--identity", "qspec", "--seed", "1"]).1
    );
}

#[test]
fn binary_exit_codes_and_env() {
    let bin = env!("CARGO_BIN_EXE_toda-rpp");
    let st = Command::new(bin)
        .args(["verify", "--identity", "bilinear"])
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(EXIT_OK));
    let st = Command::new(bin)
        .args(["verify", "--identity", "lemma4.2", "--trials", "1"])
        .env("TODA_RPP_MAX_RESAMPLE", "0")
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(EXIT_RESAMPLE));
    let st = Command::new(bin)
        .arg("verify")
        .arg("--n")
        .arg("-1")
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(EXIT_USAGE));
    let _ = EXIT_FAILED;
}

#[test]
fn seeded_output_is_byte_identical() {
    let bin = env!("CARGO_BIN_EXE_toda-rpp");
    let once = || {
        Command::new(bin)
            .args(["verify", "--seed", "42"])
            .output()
            .unwrap()
            .stdout
    };
    let a = once();
    assert!(!a.is_empty());
    assert_eq!(a, once());
}
