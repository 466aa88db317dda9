use std::process::Command;

use proptest::prelude::*;
use serde_json::{json, Value};
use twincover_cli::census::{self, CensusRow};
use twincover_cli::{main_with, Outcome};

fn run(args: &[&str]) -> Outcome {
    main_with(std::iter::once("twincover").chain(args.iter().copied()), None)
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    (out.code, serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout)))
}

#[test]
fn classify_torus_knot() {
    let (code, v) = run_json(&["classify", "torus(3,7)"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "twin-cover/1");
    assert_eq!(v["verdict"], "not_determined");
    assert_eq!(v["twin"], "montesinos(1;2/1,3/1,7/1)");
    assert_eq!(v["twin_class"], "montesinos");
    assert_eq!(v["cover"]["euler"], "1/42");
}

#[test]
fn classify_mirror_flag() {
    let (_, v) = run_json(&["classify", "montesinos(1;2/1,3/1,7/1)", "--mirror"]);
    assert_eq!(v["presentation"], "montesinos(2;2/1,3/2,7/6)");
    assert_eq!(v["twin"], "torus(3,-7)");
}

#[test]
fn classify_degenerate_presentation() {
    let (code, v) = run_json(&["classify", "montesinos(0;2/1,3/-1,5/-1)"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "determined");
    assert_eq!(v["identified_as"], "torus(3,5)");
    assert_eq!(v["condition"], "torus-exceptional");
}

#[test]
fn out_of_scope_exits_2() {
    let (code, v) = run_json(&["classify", "montesinos(0;2/1,3/1,4/1)"]);
    assert_eq!((code, v["verdict"].as_str()), (2, Some("out_of_scope")));
    let (code, _) = run_json(&["classify", "twobridge(8,3)"]);
    assert_eq!(code, 2);
}

#[test]
fn cover_command() {
    let (code, v) = run_json(&["cover", "torus(3,5)"]);
    assert_eq!(code, 0);
    assert_eq!(v["fibers"], json!([[2, 1], [3, 2], [5, 4]]));
    assert_eq!(v["euler"], "1/30");
    let out = run(&["cover", "torus(3,5)", "--csv"]);
    assert_eq!(out.stdout, "presentation,fibers,euler,b\n\"torus(3,5)\",\"2/1,3/2,5/4\",1/30,2\n");
}

#[test]
fn lift_command() {
    let (code, v) = run_json(&["lift", "10", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["lifted"], json!([5, 3]));
    assert_eq!(v["components"], 1);
    assert_eq!(v["hyperbolic"], true);
    assert_eq!(v["cf"], json!([2, -1, -1]));
    let (code, v) = run_json(&["lift", "9", "2"]);
    assert_eq!((code, v["error"].as_str()), (1, Some("bad_input")));
}

#[test]
fn jsj_command() {
    let (code, v) = run_json(&["jsj", "satellite(twobridge(10,3);torus(2,3))"]);
    assert_eq!(code, 0);
    assert_eq!(v["pieces"][0]["kind"], "two_bridge_exterior");
    assert_eq!(v["pieces"][0]["knot"], "twobridge(5,3)");
    assert_eq!(v["pieces"][1]["kind"], "torus_exterior_double_cover");
    assert_eq!(v["edges"], json!([[0, 1]]));
    let (code, v) = run_json(&["jsj", "torus(2,3)"]);
    assert_eq!((code, v["error"].as_str()), (1, Some("bad_input")));
}

#[test]
fn errors_are_json() {
    let (code, v) = run_json(&["classify", "torus(4,6)"]);
    assert_eq!((code, v["error"].as_str()), (1, Some("not_coprime")));
    let (code, v) = run_json(&["classify", "torus(3;5)"]);
    assert_eq!((code, v["error"].as_str()), (1, Some("parse_error")));
    let (code, v) = run_json(&["frobnicate"]);
    assert_eq!((code, v["error"].as_str()), (1, Some("usage")));
    let (code, v) = run_json(&["tabulate", "torus"]);
    assert_eq!((code, v["error"].as_str()), (1, Some("bad_bounds")));
    let (code, v) = run_json(&["tabulate", "torus", "--max", "0"]);
    assert_eq!((code, v["error"].as_str()), (1, Some("bad_bounds")));
    let (code, v) = run_json(&["cover", "torus(3,9223372036854775807)"]);
    assert_eq!((code, v["error"].as_str()), (1, Some("overflow")));
}

#[test]
fn integer_cap() {
    let args = ["twincover", "classify", "torus(3,101)"];
    let out = main_with(args, Some("100"));
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("integer_cap"));
    assert_eq!(main_with(["twincover", "classify", "torus(3,100)"], Some("100")).code, 0);
    let out = main_with(["twincover", "lift", "1000", "3"], Some("100"));
    assert!(out.stdout.contains("integer_cap"));
    let out = main_with(["twincover", "classify", "torus(3,5)"], Some("lots"));
    assert!(out.stdout.contains("bad_env"));
}

#[test]
fn bigint_mode() {
    let (code, v) = run_json(&["--bigint", "cover", "torus(3,100000000000000000001)"]);
    assert_eq!(code, 0);
    assert_eq!(v["euler"], "1/600000000000000000006");
    assert_eq!(v["fibers"][2][0].to_string(), "100000000000000000001");
}

#[test]
fn tabulate_torus() {
    let out = run(&["tabulate", "torus", "--max", "10", "--csv"]);
    let rows = census::read_csv(out.stdout.as_bytes()).unwrap();
    let expected: Vec<String> = (2..=10)
        .flat_map(|p| (p + 1..=10).map(move |q| (p, q)))
        .filter(|&(p, q)| num_integer::gcd(p, q) == 1)
        .map(|(p, q)| format!("torus({p},{q})"))
        .collect();
    assert_eq!(rows.iter().map(|r| r.presentation.clone()).collect::<Vec<_>>(), expected);
    assert!(out.stdout.starts_with("presentation,family,verdict,twin,identified_as,condition,"));
}

#[test]
fn tabulate_montesinos_verify() {
    let out = run(&["tabulate", "montesinos", "--max-alpha", "10", "--max-b", "2", "--verify", "--csv"]);
    assert_eq!(out.code, 0);
    let rows = census::read_csv(out.stdout.as_bytes()).unwrap();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r.check == "ok"));
    assert!(rows.iter().any(|r| r.condition == "2a-1"));
    assert!(rows.iter().any(|r| r.condition == "2b-1"));
    assert!(rows.iter().any(|r| r.condition == "2a-2"));
}

#[test]
fn tabulate_lifts() {
    let (code, v) = run_json(&["tabulate", "twobridge-lift", "--max-alpha", "20"]);
    assert_eq!(code, 0);
    assert_eq!(v["family"], "twobridge-lift");
    let rows: Vec<CensusRow> = serde_json::from_value(v["rows"].clone()).unwrap();
    assert_eq!(rows.len() as u64, v["count"].as_u64().unwrap());
    assert!(rows.iter().all(|r| r.check == "ok" && !r.cf.is_empty()));
    let r = rows.iter().find(|r| r.presentation == "twobridge(10,3)").unwrap();
    assert_eq!((r.lift.as_str(), r.cf.as_str()), ("twobridge(5,3)", "2 -1 -1"));
}

#[test]
fn tabulate_is_deterministic() {
    for args in [
        &["tabulate", "torus", "--max", "15", "--csv"][..],
        &["tabulate", "montesinos", "--max-alpha", "7", "--max-b", "1", "--verify"][..],
    ] {
        assert_eq!(run(args), run(args));
    }
}

#[test]
fn empty_census_has_header() {
    let out = run(&["tabulate", "torus", "--max", "2", "--csv"]);
    assert_eq!(out.stdout.lines().count(), 1);
    assert!(out.stdout.starts_with("presentation,"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_twincover");
    let out = Command::new(bin).args(["classify", "torus(3,5)"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "determined");
    let out = Command::new(bin).args(["classify", "montesinos(0;2/1,3/1,4/1)"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin)
        .args(["classify", "torus(3,11)"])
        .env("TWINCOVER_MAX_INT", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

fn field() -> impl Strategy<Value = String> {
    prop_oneof![
        Just(String::new()),
        "[a-z0-9(),;/ -]{0,24}",
        "[\\PC\"\n]{0,12}",
    ]
}

proptest! {
    #[test]
    fn census_rows_round_trip(fields in prop::collection::vec(field(), 11), n in 1usize..4) {
        let row = CensusRow {
            presentation: fields[0].clone(),
            family: fields[1].clone(),
            verdict: fields[2].clone(),
            twin: fields[3].clone(),
            identified_as: fields[4].clone(),
            condition: fields[5].clone(),
            fibers: fields[6].clone(),
            euler: fields[7].clone(),
            lift: fields[8].clone(),
            cf: fields[9].clone(),
            check: fields[10].clone(),
        };
        let rows = vec![row; n];
        let text = twincover_cli::rows_csv(&rows).unwrap();
        prop_assert_eq!(census::read_csv(text.as_bytes()).unwrap(), rows);
    }
}
