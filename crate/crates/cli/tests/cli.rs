use std::process::{Command, Output};

use serde_json::Value;
use symfn::oracle::{ghl_p, GHLResult};
use symfn::symfunc::q_eps_lambda;
use symfn::vertex::{solve_q, specialize_q, EigenResult, OperatorSpec, Specialization};
use symfn::{cf, Coeff, EpsSequence, Partition, Report, SymFunc};

fn symfn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symfn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn qexpand_json_round_trips() {
    let o = symfn(&["qexpand", "--lambda", "2", "--eps", "ones", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let f: SymFunc = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(f.coeff(&p("2")), cf("1/2"));
    assert_eq!(f.coeff(&p("1,1")), cf("1/2"));
    assert_eq!(f.len(), 2);
    let abc = symfn(&["qexpand", "--lambda", "2,1", "--json"]);
    let g: SymFunc = serde_json::from_str(&stdout(&abc)).unwrap();
    assert_eq!(g, *q_eps_lambda(&p("2,1"), &EpsSequence::abc()));
}

#[test]
fn macdonald_schur_table() {
    let o = symfn(&["macdonald", "--lambda", "1,1", "--spec", "schur"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("(2)    -1"), "{text}");
    assert!(text.contains("(1,1)  1"), "{text}");

    let o = symfn(&["macdonald", "--lambda", "2,1", "--spec", "macdonaldA", "--json"]);
    let r: EigenResult = serde_json::from_str(&stdout(&o)).unwrap();
    let expected = specialize_q(
        &solve_q(&p("2,1"), &OperatorSpec::generic()).unwrap(),
        Specialization::MacdonaldA,
    )
    .unwrap();
    assert_eq!(r, expected);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["spec"], "macdonaldA");
}

#[test]
fn ghl_json_round_trips() {
    let o = symfn(&["ghl", "--lambda", "2,1", "--eps", "hl", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: GHLResult = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r, ghl_p(&p("2,1"), &EpsSequence::hall_littlewood()).unwrap());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.get("norm").is_some() && v.get("rescale").is_some());
}

#[test]
fn checks_exit_zero_and_report_json() {
    let o = symfn(&["newton-check", "--max-weight", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = symfn(&["selfadjoint-check", "--max-weight", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.passed());
    let o = symfn(&["iterate-check", "--max-weight", "6"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn jj_and_two_row() {
    let o = symfn(&["jj", "--m", "1", "--n", "1", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let g1: Coeff = serde_json::from_value(v["terms"][1]["coeff"].clone()).unwrap();
    assert_eq!(g1, cf("(1-a)*(1+b)/(a-b)"));
    assert_eq!(v["agree"], true);
    let o = symfn(&["two-row", "--m", "2", "--n", "1", "--json"]);
    let f: SymFunc = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(f.coeff(&p("3")), cf("b^3-1"));
    assert_eq!(f.coeff(&p("2,1")), cf("1-b"));
}

#[test]
fn usage_errors_exit_two_with_one_line() {
    for args in [
        vec!["qexpand", "--lambda", "2,x"],
        vec!["qexpand", "--lambda", "2", "--eps", "nope"],
        vec!["macdonald", "--lambda", "1,1", "--spec", "nope"],
        vec!["jj", "--m", "1", "--n", "3"],
        vec!["partitions"],
        vec!["frobnicate"],
    ] {
        let o = symfn(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(o.stderr).unwrap();
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["macdonald", "--lambda", "2,1,1", "--json"],
        vec!["x0", "--lambda", "3,1"],
        vec!["inner", "--lambda", "2,1", "--mu", "2,1", "--eps", "macdonald", "--json"],
        vec!["audit", "--only", "1,7"],
    ] {
        let a = symfn(&args);
        let b = symfn(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let a = symfn(&["partitions", "--n", "5", "--json", "--meta", "--seedless"]);
    let b = symfn(&["partitions", "--n", "5", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8(a.stderr).unwrap().contains("unix_time="));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("symfn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("x0.json");
    let o = symfn(&["x0", "--lambda", "2", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let c: Coeff = serde_json::from_value(v["eigenvalue"].clone()).unwrap();
    assert_eq!(c, cf("1+(1-a)*(b^2-1)"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn partitions_listing_and_dominance() {
    let o = symfn(&["partitions", "--n", "4", "--json"]);
    let parts: Vec<Partition> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(parts, symfn::partitions::enumerate(4));
    let o = symfn(&["partitions", "--lambda", "3,1,1,1", "--mu", "2,2,2"]);
    assert_eq!(stdout(&o).trim(), "(3,1,1,1) incomparable (2,2,2)");
}

#[test]
fn cache_dir_is_used() {
    let dir = std::env::temp_dir().join(format!("symfn-cache-{}", std::process::id()));
    let o = Command::new(env!("CARGO_BIN_EXE_symfn"))
        .args(["mexpand", "--lambda", "2,1"])
        .env(symfn::symfunc::CACHE_ENV, &dir)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_dir(&dir).unwrap().count() > 0);
    std::fs::remove_dir_all(&dir).unwrap();
}
