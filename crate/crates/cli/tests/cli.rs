use std::process::{Command, Output};

use annigraph_cli::{parse_group_spec, Cli};
use annigraph_core::graph::export::{from_dot, from_edge_list_json, from_graph6};
use annigraph_core::{build_graph, Error};
use clap::Parser;
use serde_json::Value;

fn annigraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_annigraph"))
        .args(args)
        .env_remove("ANNIGRAPH_MAX_VERTICES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn spectrum_of_z8_sums_to_zero() {
    let o = annigraph(&["spectrum", "--group", "p^a:2^3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ev: Vec<f64> = v["eigenvalues"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert_eq!(ev.len(), 8);
    assert!(ev.iter().sum::<f64>().abs() < 1e-9);
    assert!(ev.windows(2).all(|w| w[0] <= w[1]));
    let sq: f64 = ev.iter().map(|x| x * x).sum();
    assert!((sq - 2.0 * 9.0).abs() < 1e-9, "Z/8 has 9 edges");
}

#[test]
fn laplacian_of_z16_is_integral() {
    let o = annigraph(&["laplacian", "--group", "p^a:2^4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("eigenvalues: 16, 8, 4, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 0"), "{out}");
    assert!(out.contains("multiplicities: 16x1, 8x1, 4x1, 2x4, 1x8, 0x1"));

    let o = annigraph(&["laplacian", "--group", "p^a:2^4", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["integral"], Value::Bool(true));
    let ev: Vec<u64> = v["eigenvalues"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    assert_eq!(ev, vec![16, 8, 4, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 0]);
}

#[test]
fn threshold_check_text() {
    let o = annigraph(&["threshold-check", "--group", "p^a:3^3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "threshold: true, witness: none\n");

    // not a cyclic p-group, so a witness is a result rather than a failure
    let o = annigraph(&["threshold-check", "--group", "moduli:6,10", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["threshold"], Value::Bool(false));
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);
    assert!(v["creation_sequence"].is_null());
}

#[test]
fn build_exports_round_trip() {
    let expected = build_graph(&parse_group_spec("p^a:3^2").unwrap()).unwrap();
    let g6 = stdout(&annigraph(&["build", "--group", "p^a:3^2", "--format", "graph6"]));
    assert_eq!(&from_graph6(g6.trim()).unwrap(), expected.graph());
    let dot = stdout(&annigraph(&["build", "--group", "p^a:3^2", "--format", "dot"]));
    assert_eq!(&from_dot(&dot).unwrap(), expected.graph());
    let js = stdout(&annigraph(&["build", "--group", "p^a:3^2", "--format", "json"]));
    let (g, labels) = from_edge_list_json(&js).unwrap();
    assert_eq!(&g, expected.graph());
    assert_eq!(labels, expected.labels());
    let csv = stdout(&annigraph(&["build", "--group", "p^a:3^2", "--format", "csv"]));
    assert_eq!(csv.lines().next(), Some("u,v"));
    assert_eq!(csv.lines().count() - 1, expected.graph().edge_count());
}

#[test]
fn output_is_deterministic() {
    let dir = std::env::temp_dir().join(format!("annigraph-det-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (cmd, fmt) in [("spectrum", "json"), ("build", "graph6"), ("annihilators", "csv"), ("laplacian", "text")] {
        let files: Vec<_> = (0..2)
            .map(|i| {
                let path = dir.join(format!("{cmd}-{i}.{fmt}"));
                let o = annigraph(&[cmd, "--group", "plist:2^1,2^2,2^3", "--format", fmt, "--out", path.to_str().unwrap()]);
                assert_eq!(o.status.code(), Some(0), "{cmd}");
                assert!(o.stdout.is_empty());
                std::fs::read(path).unwrap()
            })
            .collect();
        assert!(!files[0].is_empty());
        assert_eq!(files[0], files[1], "{cmd}");
    }
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn annihilators_verify_against_oracle() {
    let o = annigraph(&["annihilators", "--group", "plist:2^1,2^2,2^4", "--verify", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["mismatches"], 0);
    assert_eq!(v["rows"].as_array().unwrap().len(), 128);
    assert_eq!(v["exponent"], 16);
}

#[test]
fn verify_thm6_and_scan_succeed() {
    let o = annigraph(&["verify-thm6", "--p", "7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["inequalities_hold"], Value::Bool(true));
    assert_eq!(v["m"], 6);

    let o = annigraph(&["conjecture-scan", "--limit", "100", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("p,alpha,n,energy,hyper_line,verdict"));
    assert!(out.lines().skip(1).all(|l| l.ends_with(",SUPPORTS")));
}

#[test]
fn orbit_reports() {
    let o = annigraph(&["orbits", "--group", "plist:2^1,2^2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["miller"], 4);
    assert_eq!(v[0]["oracle"], 4);
    let o = annigraph(&["orbits", "--p", "2", "--cap", "16", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1 + 1 + 2 + 3 + 5);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["build", "--group", "p^a:4^2"][..],
        &["build", "--group", "p^a:2^"],
        &["build", "--group", "cyclic:8"],
        &["spectrum", "--group", "p^a:2^3", "--format", "dot"],
        &["threshold-check", "--group", "p^a:2^3", "--format", "csv"],
        &["frobnicate"],
        &["spectrum"],
        &["verify-thm6", "--p", "5"],
        &["verify-thm6", "--p", "9"],
        &["orbits", "--group", "moduli:6"],
    ] {
        let o = annigraph(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    let o = annigraph(&["build", "--group", "p^a:2^x"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("position 6") && err.contains("grammar"), "{err}");
}

#[test]
fn vertex_cap_from_flag_and_env() {
    let o = annigraph(&["build", "--group", "p^a:2^4", "--max-vertices", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("cap 10"));

    let run = |env: &str, args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_annigraph"))
            .args(args)
            .env("ANNIGRAPH_MAX_VERTICES", env)
            .output()
            .unwrap()
    };
    assert_eq!(run("10", &["build", "--group", "p^a:2^4"]).status.code(), Some(2));
    assert_eq!(run("16", &["build", "--group", "p^a:2^4"]).status.code(), Some(0));
    assert_eq!(run("10", &["build", "--group", "p^a:2^4", "--max-vertices", "16"]).status.code(), Some(0));
    assert_eq!(run("100", &["conjecture-scan", "--limit", "729"]).status.code(), Some(2));
}

#[test]
fn config_parsing() {
    let cfg = Cli::try_parse_from(["annigraph", "spectrum", "--group", "moduli:6,10", "--max-vertices", "99"])
        .unwrap()
        .into_config()
        .unwrap();
    assert_eq!(cfg.group.unwrap().exponent(), 30);
    assert_eq!(cfg.caps.max_vertices, 99);
    assert!(Cli::try_parse_from(["annigraph", "spectrum", "--group", "moduli:6", "--max-sweeps", "0"])
        .unwrap()
        .into_config()
        .is_err());
    assert!(matches!(parse_group_spec("p^a:9^1"), Err(Error::NonPrimeBase(9))));
}
