//! End-to-end tests of the suite runner and the `cqg` binary.

use std::process::Command;

use cqg_cli::{run_suite, CliError, Overrides, Report, RunConfig, Status};

fn cfg(suites: &[&str]) -> RunConfig {
    RunConfig { suites: suites.iter().map(|s| s.to_string()).collect(), ..RunConfig::default() }
}

fn cqg(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_cqg")).args(args).output().expect("the binary runs")
}

#[test]
fn quiver_and_jacobi_suites_pass_on_default_grid() {
    let report = run_suite(&cfg(&["quiver-audit", "jacobi"])).unwrap();
    assert!(report.success(), "{}", report.to_json());
    assert_eq!(report.summary.total, 20);
    assert_eq!(report.with_prefix("jacobi/{0,1,2}/").count(), 5);
    assert_eq!(report.conventions.pairing_side, "cop-plus");
}

#[test]
fn hopf_axioms_pass_on_polynomial_presentations() {
    for p in ["Uq", "UqTilde", "ClassicalU"] {
        let mut c = cfg(&["hopf-axioms"]);
        c.apply(&Overrides { presentation: Some(p.into()), ..Overrides::default() }).unwrap();
        c.hopf_samples = 10;
        c.pairs = 20;
        let report = run_suite(&c).unwrap();
        assert!(report.success(), "{}", report.to_json());
        assert_eq!(report.summary.total, 8, "two sub-grids × four laws");
    }
}

#[test]
fn membership_of_unrescaled_element_fails_with_witness() {
    let mut c = cfg(&["qdp-membership"]);
    c.apply(&Overrides { expr: Some("H[0,1)".into()), ..Overrides::default() }).unwrap();
    let report = run_suite(&c).unwrap();
    let rec = report.checks.iter().find(|r| r.name == "qdp-membership/Uq/{0,1,2}/element/H[0,1)").expect("element check");
    assert_eq!(rec.status, Status::Fail);
    assert_eq!(rec.witness.as_deref(), Some("n=1: coefficient 1 of H[0,1) is not divisible by t^1"));
    // Every control passes; only the user element fails.
    assert_eq!(report.summary.fail, 1);
    assert!(!report.success());
}

#[test]
fn unknown_suite_is_a_configuration_error() {
    let err = run_suite(&cfg(&["quiver-audit", "no-such-suite"])).unwrap_err();
    assert!(err.is_config());
    assert!(err.to_string().contains("no-such-suite"));
    assert!(matches!(err, CliError::Core(cqg_core::Error::Config(_))));
}

#[test]
fn reports_are_deterministic() {
    let c = cfg(&["confluence", "commutativity", "dual-shape"]);
    let a = run_suite(&c).unwrap().without_timings();
    let b = run_suite(&c).unwrap().without_timings();
    assert_eq!(a, b);
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn report_round_trips_through_json() {
    let report = run_suite(&cfg(&["quiver-audit"])).unwrap();
    let back: Report = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(back, report);
}

#[test]
fn binary_run_writes_report_and_exits_zero_on_success() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = cqg(&["run", "--suite", "quiver-audit", "--suite", "jacobi", "--grid", "0,1/2,1,2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let report: Report = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report.summary.total, 30);
    assert!(report.checks.iter().any(|r| r.name == "quiver-audit/{0,1/2,1,2}/b-identity"));
}

#[test]
fn binary_exit_codes() {
    // Failing check: exit 1, report still emitted.
    let o = cqg(&["--suite", "qdp-membership", "--expr", "X+[0,1)"]);
    assert_eq!(o.status.code(), Some(1));
    let report: Report = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report.summary.fail, 1);
    // Configuration error: exit 2, no report.
    let o = cqg(&["--suite", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown suite `bogus`"));
    let o = cqg(&["--suite", "qdp-membership", "--depth", "8", "--order", "8"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn binary_reads_config_file_and_flags_override_it() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cfg.json");
    std::fs::write(&path, r#"{"grid": ["0", "1"], "suites": ["jacobi"]}"#).unwrap();
    let o = cqg(&["--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let report: Report = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report.summary.total, 5);
    let o = cqg(&["--config", path.to_str().unwrap(), "--grid", "0,1,2"]);
    let report: Report = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report.summary.total, 10);
    std::fs::write(&path, r#"{"grid": ["0", "1"], "colour": "red"}"#).unwrap();
    assert_eq!(cqg(&["--config", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn binary_one_shot_subcommands() {
    let text = |args: &[&str]| {
        let o = cqg(args);
        assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        String::from_utf8(o.stdout).unwrap().trim_end().to_string()
    };
    // X+X- is the leading term of X-X+, and the commutator is Cartan-only.
    assert!(text(&["normalform", "X-[0,1)*X+[0,1)"]).contains(" + X+[0,1)*X-[0,1) + "));
    let commutator = text(&["normalform", "X+[0,1)*X-[0,1) - X-[0,1)*X+[0,1)"]);
    assert!(!commutator.contains('X') && commutator.contains("K^-1[0,1)"), "{commutator}");
    assert_eq!(text(&["antipode", "K[1,2)"]), "K^-1[1,2)");
    assert_eq!(text(&["--presentation", "UhTrunc", "--order", "3", "coproduct", "Xi[0,1)"]), "1 (x) Xi[0,1) + Xi[0,1) (x) 1");
    assert_eq!(text(&["--presentation", "UhTrunc", "--order", "3", "antipode", "Xi[0,1)"]), "(-1 + O(h^3))*Xi[0,1)");
    let json: serde_json::Value = serde_json::from_str(&text(&["--json", "limit", "X+[0,1)"])).unwrap();
    assert_eq!(json["result"], "(2)*x+[0,1)");
    let o = cqg(&["membership", "(q-1)*X+[0,2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("(-1 + q)*X+[0,2): pass"));
    let o = cqg(&["membership", "X+[0,2)"]);
    assert_eq!(o.status.code(), Some(1));
    let o = cqg(&["normalform", "X+[0,7)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}
