use std::path::PathBuf;
use std::process::{Command, Output};

use xsquare::{BuildReport, CompareReport, HomotopyReport, VerifyReport};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str], file: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xsquare")).args(args).arg(fixture(file)).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_names_the_corners() {
    let o = run(&["build"], "a.json");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("  M = (S) / (0)"), "{text}");
    assert!(text.contains("  Mbar = (x^2 - S) / (0)"), "{text}");
}

#[test]
fn verify_passes_and_negative_control_fails_axiom_5() {
    for f in ["a.json", "c.json"] {
        assert_eq!(run(&["verify"], f).status.code(), Some(0));
    }
    let o = run(&["verify", "--break-h", "--format", "json"], "a.json");
    assert_eq!(o.status.code(), Some(1));
    let rep: VerifyReport = serde_json::from_str(&stdout(&o)).unwrap();
    let failing: Vec<&str> = rep.suites.iter().flat_map(|s| s.failing()).collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|&id| id == "5"));
    let witness = rep.suites.iter().flat_map(|s| &s.checks).find(|c| c.id == "5" && !c.passed()).unwrap();
    assert!(witness.witness.is_some());
}

#[test]
fn input_errors_exit_2() {
    let o = run(&["build"], "bad_boundary.json");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("boundary x^2*y is nonzero"), "{err}");
    assert_eq!(run(&["build"], "missing.json").status.code(), Some(2));
    assert_eq!(run(&["build", "--field", "4"], "a.json").status.code(), Some(2));
    assert_eq!(run(&["build", "--format", "yaml"], "a.json").status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_3() {
    assert_eq!(run(&["build", "--budget", "5"], "c.json").status.code(), Some(3));
}

#[test]
fn empty_s2_is_trivial() {
    let o = run(&["build"], "empty.json");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("  L = (0) / (0)"));
    let o = run(&["homotopy"], "empty.json");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("pi_0 = R/(0)"), "{text}");
    assert!(text.contains("pi_0: [1, 3, 6, 10, 15, 21, 28]"), "{text}");
}

#[test]
fn homotopy_rows() {
    let a = stdout(&run(&["homotopy"], "a.json"));
    assert!(a.contains("syzygy route: [0, 0, 0, 0, 0, 0, 0, 0, 0]"), "{a}");
    let b = stdout(&run(&["homotopy"], "b.json"));
    assert!(b.contains("witness (y, -x)"), "{b}");
}

#[test]
fn degree_zero_compare() {
    let o = run(&["compare", "--max-degree", "0", "--format", "json"], "a.json");
    assert_eq!(o.status.code(), Some(0));
    let rep: CompareReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rep.max_degree, 0);
    assert!(rep.sections.iter().flat_map(|s| &s.rows).all(|r| r.dims.len() == 1));
}

#[test]
fn field_and_order_overrides() {
    let o = run(&["compare", "--field", "5", "--order", "lex"], "b.json");
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&run(&["build", "--field", "5"], "a.json")).starts_with("field F_5 order degrevlex"));
}

fn round_trip<T: serde::de::DeserializeOwned + serde::Serialize>(cmd: &str, file: &str) {
    let text = stdout(&run(&[cmd, "--format", "json"], file));
    let value: T = serde_json::from_str(&text).unwrap();
    assert_eq!(xsquare::report::to_json(&value), text, "{cmd} {file}");
}

#[test]
fn json_reports_round_trip() {
    for f in ["a.json", "b.json", "c.json", "empty.json"] {
        round_trip::<BuildReport>("build", f);
        round_trip::<VerifyReport>("verify", f);
        round_trip::<HomotopyReport>("homotopy", f);
        round_trip::<CompareReport>("compare", f);
    }
}
