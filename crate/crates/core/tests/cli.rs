use std::process::Command;

use schurkit::cli::run;
use schurkit::polyval::SparsePoly;
use schurkit::tableaux::Tableau;
use schurkit::{Basis, SymFunc};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("schurkit").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn stdout(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out.trim_end().to_string()
}

#[test]
fn mult_outputs() {
    assert_eq!(
        stdout(&["mult", "s[2,1]*s[2,1]"]),
        "s[4,2] + s[4,1,1] + s[3,3] + 2*s[3,2,1] + s[3,1,1,1] + s[2,2,2] + s[2,2,1,1]"
    );
    assert_eq!(stdout(&["mult", "s[]*s[3]"]), "s[3]");
    assert_eq!(stdout(&["mult", "h[1]*s[1]", "--basis", "m"]), "m[2] + 2*m[1,1]");
    assert_eq!(stdout(&["mult", "(s[2] - s[1,1])*s[1]"]), "s[3] - s[1,1,1]");
    assert_eq!(stdout(&["mult", "e[1] * e[1] * e[1]", "--basis", "e"]), "e[1,1,1]");
}

#[test]
fn convert_and_skew() {
    assert_eq!(stdout(&["convert", "s[2,1]", "--basis", "m"]), "m[2,1] + 2*m[1,1,1]");
    assert_eq!(stdout(&["convert", "h[1,1]"]), "s[2] + s[1,1]");
    assert_eq!(stdout(&["convert", "m[2]", "--basis", "s"]), "s[2] - s[1,1]");
    assert_eq!(stdout(&["skew", "[2,1]", "[1]"]), "s[2] + s[1,1]");
    assert_eq!(stdout(&["skew", "[2]", "[1,1]"]), "0");
    assert_eq!(stdout(&["skew", "[2,1]", "[1]", "--basis", "h"]), "h[1,1]");
}

#[test]
fn coefficient_queries() {
    assert_eq!(stdout(&["lr", "[3,2,1]", "[2,1]", "[2,1]"]), "2");
    assert_eq!(stdout(&["lr", "[2]", "[]", "[1,1]"]), "0");
    assert_eq!(stdout(&["kostka", "[2,1]", "[]", "[1,1,1]"]), "2");
    assert_eq!(stdout(&["kostka", "[2,1]", "[]", "[0,3]"]), "0");
    assert_eq!(stdout(&["kostka", "[3,1]", "[1]", "[1,2]"]), "2");
}

#[test]
fn witnesses_round_trip() {
    let out = stdout(&["lr", "[3,2,1]", "[2,1]", "[2,1]", "--witnesses", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], "2");
    let list = v["witnesses"].as_array().unwrap();
    assert_eq!(list.len(), 2);
    for t in list {
        assert!(Tableau::from_json(t).unwrap().is_semistandard());
    }

    let out = stdout(&["kostka", "[2,1]", "[]", "[1,1,1]", "--witnesses"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("2"));
    let list: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(list.as_array().unwrap().len(), 2);
}

#[test]
fn eval_outputs() {
    assert_eq!(
        stdout(&["eval", "[2,1]", "[1]", "--vars", "2"]),
        "x1^2 + 2*x1*x2 + x2^2"
    );
    assert_eq!(stdout(&["eval", "m[2,1]", "--vars", "2"]), "x1^2*x2 + x1*x2^2");
    assert_eq!(stdout(&["eval", "e[3]", "--vars", "2"]), "0");
    let out = stdout(&["eval", "h[2]", "--vars", "2", "--json"]);
    let p = SparsePoly::from_json(&serde_json::from_str(&out).unwrap()).unwrap();
    assert_eq!(p.to_string(), "x1^2 + x1*x2 + x2^2");
}

#[test]
fn json_round_trips() {
    for (args, basis) in [
        (vec!["mult", "s[2,1]*s[1]", "--json"], Basis::Schur),
        (vec!["convert", "s[3,1]", "--basis", "e", "--json"], Basis::Elementary),
        (vec!["skew", "[3,2]", "[1]", "--basis", "m", "--json"], Basis::Monomial),
    ] {
        let out = stdout(&args);
        let f = SymFunc::from_json(&serde_json::from_str(&out).unwrap()).unwrap();
        assert_eq!(f.basis(), basis);
        let text: Vec<&str> = args.iter().copied().filter(|a| *a != "--json").collect();
        assert_eq!(f.to_string(), stdout(&text));
    }
}

#[test]
fn verify_outputs() {
    let (code, out, err) = call(&["verify", "duality", "8"]);
    assert_eq!((code, out.as_str()), (0, "PASS 22 partitions\n"));
    assert!(err.contains("duality degree 8"));
    assert_eq!(call(&["verify", "cauchy", "4"]).0, 0);
    assert_eq!(stdout(&["verify", "mirror", "0"]), "PASS 1 partitions");
    assert_eq!(stdout(&["verify", "duality", "3", "--upto"]), "PASS 7 partitions");
    let v: serde_json::Value = serde_json::from_str(&stdout(&["verify", "pieri", "3", "--json"])).unwrap();
    assert_eq!(v["failed"], 0);
    assert_eq!(v["counterexample"], serde_json::Value::Null);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["verify", "bogus", "3"]).0, 2);
    assert_eq!(call(&["mult", "s[1]+h[1]"]).0, 2);
    assert_eq!(call(&["convert", "s[1] + h[1]"]).0, 2);
    assert_eq!(call(&["lr", "[2", "[]", "[1]"]).0, 2);
    assert_eq!(call(&["kostka", "[1]", "[2]", "[1]"]).0, 2);
    assert_eq!(call(&["mult"]).0, 2);
    assert_eq!(call(&["eval", "s[2]", "[1]", "--vars", "2"]).0, 2);
    assert_eq!(call(&["verify", "duality", "30"]).0, 2);
}

#[test]
fn deterministic_output() {
    let args = ["mult", "s[3,2]*s[2,1]", "--basis", "m"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["verify", "skew-jt", "5", "--json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn binary_degree_cap_and_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_schurkit");
    let capped = Command::new(bin)
        .args(["lr", "[3,2]", "[2]", "[2,1]"])
        .env("SCHURKIT_MAX_DEGREE", "4")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap 4"));

    let ok = Command::new(bin)
        .args(["lr", "[3,2]", "[2]", "[2,1]"])
        .env_remove("SCHURKIT_MAX_DEGREE")
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "1\n");

    let usage = Command::new(bin).arg("nonsense").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
