use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;
use ulocal::json::{transvections_from_json, MatJson, TransvectionJson};
use ulocal::localring::{Ring, RingSpec};
use ulocal::matform::{FormSpace, Mat};

fn run(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> (i32, Value, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ulocal"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let v = serde_json::from_str(&text).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v, text)
}

fn mat_json(x: &Mat) -> String {
    serde_json::to_string(&MatJson::from_mat(x)).unwrap()
}

#[test]
fn identity_factors_to_empty_word() {
    let r = Ring::new(RingSpec::zmod(5, 2)).unwrap();
    let (code, v, _) = run(&["bruhat", "factor"], &mat_json(&Mat::identity(&r, 2)), &[]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["word"], serde_json::json!([]));
}

#[test]
fn malformed_json_is_usage_error() {
    let (code, v, _) = run(&["bruhat", "factor"], "{not json", &[]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "error");
    assert_eq!(v["error_kind"], "SchemaError");
    let (code, v, _) = run(&["bruhat", "frobnicate"], "", &[]);
    assert_eq!(code, 1);
    assert_eq!(v["error_kind"], "UsageError");
}

#[test]
fn small_residue_field_rejected() {
    let (code, v, _) = run(&["gauss", "--ring", "Z/3"], "", &[]);
    assert_eq!(code, 2);
    assert_eq!(v["error_kind"], "HypothesisViolated");
    let (code, v, _) = run(&["weil", "build", "--ring", "Z/3"], "", &[]);
    assert_eq!(code, 2);
    assert_eq!(v["error_kind"], "HypothesisViolated");
}

#[test]
fn gauss_square_identity() {
    let (code, v, _) = run(&["gauss", "--ring", "Z/25", "--lambda", "[2]"], "", &[]);
    assert_eq!(code, 0);
    assert_eq!(v["square_identity"], true);
    let (code, v, _) = run(&["gauss", "--ring", "Z/25", "--lambda", "[5]"], "", &[]);
    assert_eq!(code, 2);
    assert_eq!(v["error_kind"], "NotPrimitive");
}

#[test]
fn suites() {
    let (code, v, _) = run(&["suite", "unknown"], "", &[]);
    assert_eq!(code, 2);
    assert_eq!(v["error_kind"], "UnknownSuite");
    let (code, v, _) = run(&["suite", "controls"], "", &[]);
    assert_eq!(code, 0);
    assert_eq!(v["ok"], true);
    let (code, v, _) = run(&["suite", "correction-q5"], "", &[]);
    assert_eq!(code, 0);
    assert!(v["claims"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn output_is_deterministic() {
    let args = ["bruhat", "verify", "--ring", "F25", "--words", "50", "--seed", "3"];
    let (c1, _, a) = run(&args, "", &[]);
    let (c2, _, b) = run(&args, "", &[]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
}

#[test]
fn enumeration_cap_from_environment() {
    let (code, v, _) = run(&["bruhat", "census", "--ring", "F25", "--m", "2"], "", &[("MAX_ENUM", "10")]);
    assert_eq!(code, 2);
    assert_eq!(v["error_kind"], "SearchSpaceTooLarge");
    let (code, v, _) = run(&["bruhat", "census", "--ring", "F25", "--m", "2"], "", &[]);
    assert_eq!(code, 0);
    assert_eq!(v["exceeds_bound"], true);
}

#[test]
fn transvection_factor_round_trip() {
    let r = Ring::new(RingSpec::zmod(5, 2)).unwrap();
    let x = Mat::from_ints(&r, &[&[2, 7], &[1, 4]]);
    assert_eq!(x.det().unwrap(), r.one());
    let (code, v, _) = run(&["sp", "factor"], &mat_json(&x), &[]);
    assert_eq!(code, 0);
    let word: Vec<TransvectionJson> = serde_json::from_value(v["word"].clone()).unwrap();
    let space = FormSpace::new(&r, 1);
    assert_eq!(transvections_from_json(&r, &word).unwrap().eval(&space).unwrap(), x);
    let (code, v, _) = run(&["su", "factor"], &mat_json(&Mat::from_ints(&r, &[&[1, 1], &[1, 1]])), &[]);
    assert_eq!(code, 2);
    assert_eq!(v["error_kind"], "NotInSU");
}

#[test]
fn lift_then_project() {
    let f = Ring::new(RingSpec::galois(5, 1)).unwrap();
    let t = f.generator();
    // diag(t, (t*)^-1) is unitary with determinant t / t*
    let z = Mat::diag(&f, &[t, f.inv(f.star(t)).unwrap()]);
    let (code, v, _) = run(&["reduce", "lift", "--ring", "GR(25,2)", "--gen", "[5]"], &mat_json(&z), &[]);
    assert_eq!(code, 0, "{v}");
    let lifted = serde_json::to_string(&v["matrix"]).unwrap();
    let (code, v, _) = run(&["reduce", "project", "--ring", "GR(25,2)", "--gen", "[5]"], &lifted, &[]);
    assert_eq!(code, 0);
    let back: MatJson = serde_json::from_value(v["matrix"].clone()).unwrap();
    assert_eq!(back.to_mat_over(&f).unwrap(), z);
}

#[test]
fn ramified_norm_one_obstruction() {
    let (code, v, _) = run(&["reduce", "norm-one", "--ring", "Z/5[t]/(t^2)", "--elem", "[4]"], "", &[]);
    assert_eq!(code, 2);
    assert_eq!(v["error_kind"], "RamifiedObstruction");
}

#[test]
fn weil_build_writes_table() {
    let dir = std::env::temp_dir().join(format!("ulocal-weil-{}", std::process::id()));
    let path = dir.to_str().unwrap().to_string();
    let (code, v, _) = run(&["weil", "build", "--ring", "Z/5", "--out", &path], "", &[]);
    assert_eq!(code, 0);
    assert_eq!(v["dim"], 5);
    let table: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(table["operators"]["h"].as_array().unwrap().len(), 4);
    assert_eq!(table["operators"]["u"].as_array().unwrap().len(), 5);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn witt_extension_gram() {
    let input = "[[[1],[0],[0],[5]],[[0],[0],[1],[0]]]";
    let (code, v, _) = run(&["witt", "extend", "--ring", "Z/25", "--m", "2"], input, &[]);
    assert_eq!(code, 0);
    let r = Ring::new(RingSpec::zmod(5, 2)).unwrap();
    let s = FormSpace::new(&r, 2);
    let basis: Vec<Vec<Vec<i64>>> = serde_json::from_value(v["basis"].clone()).unwrap();
    let basis: Vec<_> = basis.iter().map(|b| ulocal::json::vector_from_json(&r, b).unwrap()).collect();
    let gram = Mat::from_fn(&r, 4, 4, |i, j| s.form(&basis[i], &basis[j]));
    assert_eq!(gram, *s.gram());
}
