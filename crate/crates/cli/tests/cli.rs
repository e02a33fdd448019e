use std::process::{Command, Output};

use nf_core::report::{Isometry, Report};

fn nf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nf")).args(args).output().expect("run nf")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn inspect_text() {
    let o = nf(&["inspect", "x^2 + 1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("disc              -4"), "{s}");
    assert!(s.contains("signature         (0, 1)"), "{s}");
}

#[test]
fn inspect_json_round_trips() {
    let o = nf(&["inspect", "[-15, -8, 0, 1]", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.fields.len(), 1);
    assert_eq!(r.fields[0].disc, "-4027");
    assert!(r.verdicts.is_none());
}

#[test]
fn compare_json_has_verdicts_and_evidence() {
    let o = nf(&["compare", "x^4-x^3+4x^2+68x+152", "x^4-15x^2-21x+121", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("\"per_prime\""));
    let r = Report::from_json(&text).unwrap();
    let v = r.verdicts.unwrap();
    assert!(v.weak_ae);
    assert_eq!(v.isometry, Isometry::NotIsometricGenus);
    let places: Vec<String> = r.evidence.per_prime.keys().map(|p| p.to_string()).collect();
    assert_eq!(places, ["-1", "2", "7", "13", "43"]);
}

#[test]
fn sequential_output_matches() {
    let a = nf(&["compare", "x^3-8x-15", "x^3+10x-1", "--json"]);
    let b = nf(&["--sequential", "compare", "x^3-8x-15", "x^3+10x-1", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn assumption_flags_are_recorded() {
    let o = nf(&["compare", "x^3-8x-15", "x^3+10x-1", "--assume-galois", "--assume-ae", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = Report::from_json(&stdout(&o)).unwrap().verdicts.unwrap();
    assert!(v.galois_assumed && v.assume_ae);
}

#[test]
fn parse_errors_exit_2() {
    for bad in ["x^2 + 1/2", "x^2 + y", "", "[1, 2"] {
        let o = nf(&["inspect", bad]);
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("position"), "{bad:?}");
    }
}

#[test]
fn invalid_polynomials_exit_3() {
    for bad in ["x^2 - 1", "2x^2 + 1", "x + 1", "(x^2+1)^2"] {
        assert_eq!(nf(&["inspect", bad]).status.code(), Some(3), "{bad:?}");
    }
    assert_eq!(nf(&["compare", "x^2+1", "x^2-4"]).status.code(), Some(3));
}
