//! End-to-end tests of the `hdl` binary: flags, formats, exit codes,
//! and byte-stability of the output.

use std::process::{Command, Output};

fn hdl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hdl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn hdl_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hdl"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn class_k2_theorem_is_zero_vector() {
    let out = hdl(&["class", "--k", "2", "--divisor", "d2", "--method", "theorem"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"genus\":4,\"lambda\":\"0\",\"delta\":[\"0\",\"0\",\"0\"]}\n"
    );
}

#[test]
fn class_k3_pipeline_matches_known_vector() {
    let out = hdl(&["class", "--k", "3", "--divisor", "d2", "--method", "pipeline"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"genus\":6,\"lambda\":\"612\",\"delta\":[\"-76\",\"-300\",\"-444\",\"-459\"]}\n"
    );
}

#[test]
fn class_json_round_trips_exactly() {
    let out = hdl(&["class", "--k", "4", "--divisor", "d2"]);
    assert!(out.status.success());
    let parsed = hdl_core::picard::DivisorClass::from_json_str(stdout(&out).trim()).unwrap();
    assert_eq!(parsed, hdl_core::picard::d2_class_theorem(4).unwrap());
}

#[test]
fn class_formats() {
    let out = hdl(&["class", "--k", "2", "--divisor", "d3", "--format", "latex"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "264\\lambda - 30\\delta_{0} - 96\\delta_{1} - 128\\delta_{2}\n"
    );
    let out = hdl(&["class", "--k", "2", "--divisor", "d3", "--format", "csv"]);
    assert_eq!(
        stdout(&out),
        "coefficient,value\nlambda,264\ndelta_0,-30\ndelta_1,-96\ndelta_2,-128\n"
    );
    // Non-integral coefficients render as \frac.
    let out = hdl(&["class", "--k", "1", "--divisor", "d2", "--format", "latex"]);
    assert!(stdout(&out).starts_with("-120\\lambda"));
}

#[test]
fn class_invalid_k_exits_2() {
    let out = hdl(&["class", "--k", "1", "--divisor", "d3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
    let out = hdl(&["class", "--k", "1", "--divisor", "d2", "--method", "pipeline"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    let out = hdl(&["verify", "--k-max", "5", "--suite", "all"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("ok   identities/catalan-dual-form k=5"));
    assert!(text.contains("ok   classes/pipeline-equals-theorem k=5"));
    assert!(text.contains("ok   orbits/pure-braid-transitive d=4 b=6 mu=3,1"));
    assert!(text.contains("0 failures"));
}

#[test]
fn verify_rejects_small_k_max() {
    let out = hdl(&["verify", "--k-max", "1", "--suite", "identities"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn orbit_reports_hand_checked_case() {
    let out = hdl(&["orbit", "--d", "3", "--b", "2", "--phi", "(1 2 3)", "--group", "pure"]);
    assert!(out.status.success());
    let report = hdl_core::braid::OrbitReport::from_json_str(stdout(&out).trim()).unwrap();
    assert_eq!(report.orbit_count, 1);
    assert_eq!(report.total_tuples, 3);
    assert!(report.transitive);

    let out = hdl(&["orbit", "--d", "3", "--b", "4", "--phi", "(1 2 3)", "--group", "braid"]);
    let report = hdl_core::braid::OrbitReport::from_json_str(stdout(&out).trim()).unwrap();
    assert!(report.transitive);
}

#[test]
fn orbit_output_is_byte_stable() {
    let args = ["orbit", "--d", "4", "--b", "4", "--phi", "(1 2)(3 4)", "--group", "pure"];
    let first = hdl(&args);
    let second = hdl(&args);
    assert_eq!(first.stdout, second.stdout);
    let threaded = hdl(&[
        "orbit", "--d", "4", "--b", "4", "--phi", "(1 2)(3 4)", "--group", "pure",
        "--threads", "4",
    ]);
    assert_eq!(first.stdout, threaded.stdout);
}

#[test]
fn orbit_quotient_flag_merges_conjugates() {
    let plain = hdl(&["orbit", "--d", "3", "--b", "4", "--phi", "()", "--group", "pure"]);
    let merged = hdl(&[
        "orbit", "--d", "3", "--b", "4", "--phi", "()", "--group", "pure", "--quotient",
    ]);
    let plain = hdl_core::braid::OrbitReport::from_json_str(stdout(&plain).trim()).unwrap();
    let merged = hdl_core::braid::OrbitReport::from_json_str(stdout(&merged).trim()).unwrap();
    assert!(merged.quotient);
    assert!(merged.orbit_count <= plain.orbit_count);
    assert_eq!(merged.total_tuples, plain.total_tuples);
}

#[test]
fn orbit_rejects_malformed_cycles() {
    let out = hdl(&["orbit", "--d", "3", "--b", "2", "--phi", "(1 2", "--group", "pure"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hdl(&["orbit", "--d", "3", "--b", "2", "--phi", "(1 5)", "--group", "pure"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn orbit_csv_format() {
    let out = hdl(&[
        "orbit", "--d", "3", "--b", "2", "--phi", "(1 2 3)", "--group", "pure",
        "--format", "csv",
    ]);
    let text = stdout(&out);
    assert!(text.starts_with("key,value\nd,3\nb,2\n"));
    assert!(text.contains("orbit_count,1\n"));
}

#[test]
fn hurwitz_counts() {
    let out = hdl(&["hurwitz", "--d", "3", "--simple", "2", "--extra", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n");

    let out = hdl(&["hurwitz", "--d", "2", "--simple", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n");

    let out = hdl(&["hurwitz", "--d", "3", "--simple", "4"]);
    assert_eq!(stdout(&out), "4\n");
}

#[test]
fn hurwitz_resource_guard_exits_3() {
    let out = hdl_with_env(
        &["hurwitz", "--d", "4", "--simple", "6"],
        "HDL_NODE_CEILING",
        "10",
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn degrees_table() {
    let out = hdl(&["degrees", "--k", "3", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "j,c,degree,j_sum\n0,0,5/2,5/2\n1,0,5,5\n2,0,3,5\n2,1,2,5\n3,0,1,5\n3,1,4,5\n"
    );
    let out = hdl(&["degrees", "--k", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn degrees_raw_restores_factorial_scale() {
    // k = 1: (6k)! = 720, so E_0 carries 360 and E_(1,0) carries 720.
    let out = hdl(&["degrees", "--k", "1", "--raw", "--format", "csv"]);
    assert_eq!(stdout(&out), "j,c,degree,j_sum\n0,0,360,360\n1,0,720,720\n");
}

#[test]
fn degrees_json_shape() {
    let out = hdl(&["degrees", "--k", "2"]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["k"], 2);
    assert_eq!(doc["catalan"], "2");
    assert_eq!(doc["rows"][0]["degree"], "1");
    let rows = doc["rows"].as_array().unwrap();
    // E_0 plus (1,0), (2,0), (2,1).
    assert_eq!(rows.len(), 4);
}
