use std::process::Command;

use flatgroup::cli::corpus::{corpus, find};
use flatgroup::cli::{
    cmd_bounds, cmd_check_torsion, cmd_corpus, cmd_reduce, cmd_validate, cmd_verify, GroupFile, InputError,
    MethodChoice, RunOptions, EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK,
};
use flatgroup::crystal::DEFAULT_CAP;
use flatgroup::genred::naive_generating_set;
use proptest::prelude::*;
use serde_json::Value;

fn text(name: &str) -> String {
    find(name).unwrap().to_json()
}

fn json_opts() -> RunOptions {
    RunOptions { json: true, ..RunOptions::default() }
}

fn json(out: &str) -> Value {
    serde_json::from_str(out).unwrap()
}

#[test]
fn validate_reports_order_and_fixed_rank() {
    let out = cmd_validate(&text("torus_2d"), &json_opts());
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(json(&out.stdout)["order"], 1);
    let out = cmd_validate(&text("klein_bottle"), &json_opts());
    let v = json(&out.stdout);
    assert_eq!((v["order"].as_u64(), v["fixed_rank"].as_u64()), (Some(2), Some(1)));
    let bad = text("klein_bottle").replacen("-1", "2", 1);
    let out = cmd_validate(&bad, &json_opts());
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("not unimodular"));
}

#[test]
fn torsion_verdicts() {
    assert_eq!(cmd_check_torsion(&text("klein_bottle"), &RunOptions::default()).code, EXIT_OK);
    assert_eq!(cmd_check_torsion(&text("torus_2d"), &RunOptions::default()).code, EXIT_OK);
    let out = cmd_check_torsion(&text("pm_reflection_2d"), &json_opts());
    assert_eq!(out.code, EXIT_NEGATIVE);
    let w = &json(&out.stdout)["witness"];
    assert_eq!(w["translation"], serde_json::json!(["0", "1/2"]));
}

#[test]
fn reduce_examples() {
    let out = cmd_reduce(&text("g3_tricosm"), MethodChoice::A2, &json_opts());
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(json(&out.stdout)["size"], 2);
    let out = cmd_reduce(&text("klein_bottle"), MethodChoice::Auto, &json_opts());
    let v = json(&out.stdout);
    assert_eq!((v["size"].as_u64(), v["method"].as_str()), (Some(2), Some("GREEDY")));
    assert_eq!(cmd_reduce(&text("torus_2d"), MethodChoice::A2, &json_opts()).code, EXIT_NEGATIVE);
    assert_eq!(cmd_reduce(&text("g3_tricosm"), MethodChoice::A1, &json_opts()).code, EXIT_NEGATIVE);
}

#[test]
fn verify_examples() {
    let klein = find("klein_bottle").unwrap().load(DEFAULT_CAP).unwrap();
    let naive = naive_generating_set(&klein.group).unwrap();
    let set = klein.set_to_json(&naive.generators);
    assert_eq!(cmd_verify(&text("klein_bottle"), &set, &json_opts()).code, EXIT_OK);
    let lattice = klein.set_to_json(&naive.generators[..2]);
    assert_eq!(cmd_verify(&text("klein_bottle"), &lattice, &json_opts()).code, EXIT_NEGATIVE);
    assert_eq!(cmd_verify(&text("torus_2d"), "[]", &json_opts()).code, EXIT_NEGATIVE);
    assert_eq!(cmd_verify(&text("torus_2d"), "[{]", &json_opts()).code, EXIT_INPUT);
    let outside = r#"[{"translation": ["1/3", "0"], "holonomy": [[1, 0], [0, 1]]}]"#;
    assert_eq!(cmd_verify(&text("torus_2d"), outside, &json_opts()).code, EXIT_NEGATIVE);
}

#[test]
fn reduce_output_round_trips_through_verify() {
    for f in corpus().into_iter().filter(|f| f.dimension <= 4) {
        let t = f.to_json();
        let out = cmd_reduce(&t, MethodChoice::Auto, &json_opts());
        let v = json(&out.stdout);
        let set = serde_json::to_string(&v["generators"]).unwrap();
        assert_eq!(cmd_verify(&t, &set, &json_opts()).code, EXIT_OK, "{}", f.name);
    }
}

#[test]
fn bounds_list_theorems() {
    let out = cmd_bounds(&text("g6_didicosm"), &json_opts());
    assert_eq!(out.code, EXIT_OK);
    let v = json(&out.stdout);
    let c = v["theorems"].as_array().unwrap().iter().find(|t| t["name"] == "THEOREM_C").unwrap();
    assert_eq!((c["applies"].as_bool(), c["bound"].as_u64()), (Some(true), Some(3)));
    let v = json(&cmd_bounds(&text("c35_bieberbach_11d"), &json_opts()).stdout);
    let b = v["theorems"].as_array().unwrap().iter().find(|t| t["name"] == "THEOREM_B").unwrap();
    assert_eq!((b["applies"].as_bool(), b["bound"].as_u64()), (Some(true), Some(11)));
}

#[test]
fn corpus_json_is_stable_and_clean() {
    let opts = RunOptions { json: true, seed: 3, ..RunOptions::default() };
    let a = cmd_corpus("all", &opts);
    assert_eq!(a.code, EXIT_OK, "{}", a.stdout);
    assert_eq!(a.stdout, cmd_corpus("all", &opts).stdout);
    let v = json(&a.stdout);
    assert_eq!(v["violations"], 0);
    assert_eq!(v["entries"].as_array().unwrap().len(), corpus().len());
    assert_eq!(cmd_corpus("no_such_group", &opts).code, EXIT_INPUT);
    assert_eq!(cmd_corpus("klein_bottle", &opts).code, EXIT_OK);
}

#[test]
fn group_files_round_trip() {
    for f in corpus() {
        assert_eq!(GroupFile::parse(&f.to_json()).unwrap(), f);
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_flatgroup");
    let dir = std::env::temp_dir().join(format!("flatgroup-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let klein = dir.join("klein.json");
    std::fs::write(&klein, text("klein_bottle")).unwrap();
    let pm = dir.join("pm.json");
    std::fs::write(&pm, text("pm_reflection_2d")).unwrap();
    let run = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(run(&["check-torsion", klein.to_str().unwrap()]), Some(0));
    assert_eq!(run(&["check-torsion", pm.to_str().unwrap()]), Some(1));
    assert_eq!(run(&["validate", dir.join("missing.json").to_str().unwrap()]), Some(2));
    assert_eq!(run(&["reduce", "--method", "bogus", klein.to_str().unwrap()]), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn parsing_never_panics(s in ".{0,200}") {
        if let Err(e) = GroupFile::parse(&s) {
            let located = matches!(e, InputError::Syntax { .. });
            prop_assert!(located);
        }
    }

    #[test]
    fn corrupted_files_get_located_diagnostics(pos in 0usize..400, c in prop::sample::select(vec!['0', '9', '-', '/', '[', ']', ',', '"', 'x'])) {
        let mut t = text("g6_didicosm").chars().collect::<Vec<_>>();
        let i = pos % t.len();
        t[i] = c;
        let t: String = t.into_iter().collect();
        match GroupFile::parse(&t).and_then(|f| f.load(DEFAULT_CAP)) {
            Ok(_) => {}
            Err(InputError::Syntax { line, .. }) => prop_assert!(line >= 1),
            Err(InputError::Field { field, .. }) => prop_assert!(!field.is_empty()),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }
}
