use std::path::PathBuf;
use std::process::Command;

use clap::Parser;
use tautmat::invariants::t_transform;
use tautmat::io::cli::{run, Cli};
use tautmat::io::format::poly_from_value;
use tautmat::matroid::Matroid;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tautmat"))
}

fn report(args: &[&str]) -> tautmat::io::Report {
    let cli = Cli::try_parse_from(std::iter::once("tautmat").chain(args.iter().copied())).unwrap();
    run(&cli).unwrap()
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tautmat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn tautdeg_matches_transform() {
    let r = report(&["tautdeg", "uniform:2:4", "--format", "json"]);
    let j = r.to_json();
    let p = poly_from_value(j["results"]["t"].clone(), "t").unwrap();
    assert_eq!(p, t_transform(&Matroid::uniform(2, 4).unwrap()).unwrap());
    assert!(r.all_passed());
}

#[test]
fn ehrhart_of_hypersimplex() {
    let out = bin()
        .args(["ehrhart", "hypersimplex:2:4", "--c", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("lattice_points: 6"));
}

#[test]
fn reports_are_byte_stable_across_workers() {
    let run = |jobs: &str| {
        bin()
            .args([
                "check",
                "corpus:F7",
                "uniform:3:6",
                "--format",
                "json",
                "--jobs",
                jobs,
            ])
            .output()
            .unwrap()
    };
    let (a, b, c) = (run("1"), run("1"), run("4"));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn exit_codes() {
    let bad_json = temp_file("broken.json", "{\"ground_set\": 3,");
    let out = bin()
        .args(["info", bad_json.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("parse error"));

    let not_matroid = temp_file(
        "exchange.json",
        r#"{"ground_set": 4, "bases": [[0, 1], [2, 3]]}"#,
    );
    let out = bin()
        .args(["tutte", not_matroid.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("validation error"));

    let out = bin().args(["gpoly", "uniform:3:3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin().args(["tutte", "uniform:2:5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = bin()
        .args(["tautdeg", "uniform:2:9", "--max-ground", "8"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("guardrail"));
}

#[test]
fn environment_guardrail() {
    let out = bin()
        .env("TAUTMAT_GUARDRAIL", "4")
        .args(["tautdeg", "uniform:2:5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn input_forms() {
    let g = temp_file(
        "k4.json",
        r#"{"vertices": 4, "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#,
    );
    let spec = format!("graphic:@{}", g.display());
    let r = report(&["info", &spec]);
    assert_eq!(r.to_json()["results"]["bases"], 16);

    let flag = temp_file(
        "flag.json",
        r#"[{"type":"uniform","r":1,"n":3},{"type":"uniform","r":2,"n":3}]"#,
    );
    let r = report(&["flag-tutte", flag.to_str().unwrap()]);
    assert!(r.all_passed());
    let r2 = report(&["flag-tutte", "uniform:1:3", "uniform:2:3"]);
    assert_eq!(r.to_json()["results"], r2.to_json()["results"]);

    let poly = temp_file(
        "p.json",
        r#"{"ground_set": 2, "rk": {"[0]": 1, "[1]": 1, "[0,1]": 1}}"#,
    );
    let r = report(&["ehrhart", poly.to_str().unwrap(), "--c", "3"]);
    assert_eq!(r.to_json()["results"]["lattice_points"], 4);
}

#[test]
fn text_rendering() {
    let r = report(&["tautdeg", "uniform:1:2"]);
    assert!(r.to_text().contains("t: x + y + z + w"));
    let looped = temp_file("loop.json", r#"{"ground_set": 3, "bases": [[0], [1]]}"#);
    let r = report(&["bergman", looped.to_str().unwrap()]);
    assert!(r.to_text().contains("bergman: {}"));
}

#[test]
fn csm_and_lvt_verbs() {
    let r = report(&["csm", "corpus:M(K4)"]);
    assert!(r.all_passed());
    assert_eq!(r.results.len(), 3);
    let r = report(&["lvt", "uniform:1:4", "uniform:2:4"]);
    assert!(r.all_passed());
    let r = report(&["lvt", "uniform:2:4", "uniform:2:4"]);
    assert_eq!(r.ledger.len(), 2);
    assert!(r.all_passed());
}

#[test]
fn failing_ledger_sets_exit_code() {
    let mut r = report(&["tutte", "uniform:2:4"]);
    assert!(r.all_passed());
    r.check("forced", "x", Ok(Some("broken".into())));
    assert!(!r.all_passed());
    assert_eq!(r.failures().count(), 1);
}
