use std::path::PathBuf;

use hermite_wronskian_cli::{run, Item, Report, EXIT_FAILED_CHECK, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn hwron(args: &[&str]) -> hermite_wronskian_cli::Outcome {
    run(std::iter::once("hwron").chain(args.iter().copied()))
}

fn report(args: &[&str]) -> Report {
    let out = hwron(args);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn schema() -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/report.schema.json");
    let text = std::fs::read_to_string(path).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

#[test]
fn omega_one_two() {
    let out = hwron(&["omega", "--set", "1,2"]);
    assert_eq!(out.code, EXIT_OK);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    let item = &v["results"][0];
    assert_eq!(item["polynomial"], serde_json::json!(["4", "0", "8"]));
    assert_eq!(item["degree"], 2);
    assert_eq!(v["schema_version"], "1.0");
}

#[test]
fn certify_segment_one_three() {
    let r = report(&["certify", "--set", "S(1,3)"]);
    match &r.results[0] {
        Item::Certificate(c) => {
            assert!(c.squarefree);
            assert_eq!(c.real_root_count, 1);
            assert_eq!(c.set.elements(), &[1, 2, 3]);
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn scan_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.json");
    let p = path.to_str().unwrap();
    let out = hwron(&["scan", "--max-element", "6", "--max-size", "3", "--out", p]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.is_empty());
    let r: Report = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r.results.len(), 6 + 15 + 20);
    assert_eq!(r.timing.len(), r.results.len());
    assert!(r.ok);
}

#[test]
fn output_is_deterministic_apart_from_timing() {
    let args = ["scan", "--max-element", "5", "--par", "3"];
    let a = report(&args).without_timing();
    let b = report(&["scan", "--max-element", "5", "--par", "1"]).without_timing();
    assert_eq!(a.results, b.results);
    let c = report(&args).without_timing();
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&c).unwrap()
    );
}

#[test]
fn reports_round_trip() {
    for args in [
        &["omega", "--set", "2,3,7"][..],
        &["roots", "--set", "1,2,3", "--lo", "-1/2", "--hi", "inf"],
        &["duality", "--max-element", "4", "--max-size", "2"],
        &["orthogonality", "--set", "1,2", "--n1", "0", "--n2", "3"],
        &["karlin-szego", "--n", "1..3", "--k", "1..2"],
    ] {
        let out = hwron(args);
        let r: Report = serde_json::from_str(&out.stdout).unwrap();
        let again = serde_json::to_string_pretty(&r).unwrap() + "\n";
        assert_eq!(again, out.stdout, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(hwron(&["omega", "--set", "0,1"]).code, EXIT_USAGE);
    assert_eq!(hwron(&["omega", "--set", "2,2"]).code, EXIT_USAGE);
    assert_eq!(hwron(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(
        hwron(&["scan", "--max-element", "3", "--par", "0"]).code,
        EXIT_USAGE
    );
    let bad = hwron(&["orthogonality", "--set", "1", "--n1", "0", "--n2", "2"]);
    assert_eq!(bad.code, EXIT_USAGE, "F={{1}} is not admissible");
    assert!(bad.stderr.starts_with("error:"));
    assert_eq!(hwron(&["sylvester", "--set", "3"]).code, EXIT_USAGE);
    // a tolerance below rounding noise makes the numeric check fail
    let strict = hwron(&[
        "orthogonality",
        "--set",
        "1,2",
        "--n1",
        "0",
        "--n2",
        "3",
        "--tol",
        "0",
    ]);
    assert_eq!(strict.code, EXIT_FAILED_CHECK);
    assert_eq!(hwron(&["--help"]).code, EXIT_OK);
}

#[test]
fn admissible_family_matches_real_roots() {
    let r = report(&["admissible", "--max-element", "6"]);
    assert_eq!(r.results.len(), 63);
    for item in &r.results {
        let Item::Admissible {
            admissible,
            real_root_count,
            ..
        } = item
        else {
            panic!()
        };
        assert_eq!(*admissible, *real_root_count == 0);
    }
}

#[test]
fn sylvester_modes() {
    let r = report(&["sylvester", "--set", "1,2,4"]);
    assert_eq!(r.results.len(), 9);
    let r = report(&["sylvester", "--random", "20", "--seed", "3"]);
    assert_eq!(r.results.len(), 20);
    let r = report(&["sylvester", "--recurrence", "--p", "1..3", "--q", "1..2"]);
    assert_eq!(r.inputs["sign"], -1);
    assert_eq!(r.results.len(), 6);
}

#[test]
fn ode_modes() {
    let r = report(&["ode", "--set", "S(2,2)"]);
    assert_eq!(r.results.len(), 5);
    let r = report(&["ode", "--segment", "--p", "1..3", "--q", "0..2"]);
    assert_eq!(r.results.len(), 9);
}

#[test]
fn root_cloud_csv() {
    let out = hwron(&["root-cloud", "--set", "2,3", "--csv"]);
    assert_eq!(out.code, EXIT_OK);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("re,im"));
    let rows: Vec<(f64, f64)> = lines
        .map(|l| {
            let (a, b) = l.split_once(',').unwrap();
            (a.parse().unwrap(), b.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 4);
}

#[test]
fn every_command_matches_schema() {
    let validator = schema();
    let commands: &[&[&str]] = &[
        &["omega", "--set", "1,3"],
        &["roots", "--set", "1,3"],
        &["certify", "--set", "1,3"],
        &["segment-check", "--p", "1..2", "--q", "1..2"],
        &["duality", "--set", "1,2,5"],
        &["sylvester", "--set", "1,2"],
        &["ode", "--set", "1,2"],
        &["admissible", "--set", "2,3"],
        &["karlin-szego", "--n", "2", "--k", "3"],
        &["scan", "--max-element", "3"],
        &["root-cloud", "--set", "1,2"],
        &["orthogonality", "--set", "1,2"],
    ];
    for args in commands {
        let out = hwron(args);
        assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}

#[test]
fn binary_exit_status() {
    let status = std::process::Command::new(env!("CARGO_BIN_EXE_hwron"))
        .args(["omega", "--set", "1,2"])
        .output()
        .unwrap();
    assert!(status.status.success());
    let status = std::process::Command::new(env!("CARGO_BIN_EXE_hwron"))
        .args(["omega", "--set", "x"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(2));
}
