//! End-to-end CLI behavior: output formats, exit codes, JSON round trips.

use std::path::PathBuf;
use std::process::{Command, Output};

fn mspectra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mspectra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn charpoly_matches_quoted_display() {
    let out = mspectra(&["charpoly", "--fixture", "G1:4:3", "--kind", "A"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "x^4-3x^2+1");
}

#[test]
fn deleted_charpoly_display() {
    let out = mspectra(&[
        "deleted-charpoly",
        "--fixture",
        "H6",
        "--kind",
        "L",
        "--vertex",
        "6",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "x^5-15x^4+81x^3-186x^2+159x-21");
}

#[test]
fn census_tsv_row() {
    let out = mspectra(&["census", "--order", "6", "--kind", "A"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "order\ttotal\tseparable\tcontrollable\twronskian\tcontrollable_wronskian"
    );
    assert_eq!(lines.next().unwrap(), "6\t112\t54\t8\t37\t8");
}

#[test]
fn strict_false_verdict_exits_one() {
    let out = mspectra(&[
        "wronskian",
        "--fixture",
        "H5",
        "--kind",
        "Aalpha:2/3",
        "--vertex",
        "6",
        "--strict",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn input_errors_exit_two() {
    // unknown fixture
    let out = mspectra(&["charpoly", "--fixture", "H99", "--kind", "A"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown subcommand (clap usage error)
    let out = mspectra(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    // malformed kind
    let out = mspectra(&["charpoly", "--fixture", "H1", "--kind", "Z"]);
    assert_eq!(out.status.code(), Some(2));
    // census over order beyond the generator
    let out = mspectra(&["census", "--order", "9", "--kind", "A"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("graph6"), "{err}");
}

#[test]
fn json_outputs_reingest() {
    // polynomial via coefficient strings
    let out = mspectra(&["charpoly", "--fixture", "H7", "--kind", "Q", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let poly: mspectra_core::Poly = serde_json::from_value(v["charpoly"].clone()).unwrap();
    assert_eq!(
        poly,
        mspectra_core::Poly::from_i64(&[48, -256, 404, -282, 97, -16, 1])
    );
    assert_eq!(
        v["display"]
            .as_str()
            .unwrap()
            .parse::<mspectra_core::Poly>()
            .unwrap(),
        poly
    );

    // product graph JSON re-ingests to an equal graph, and its graph6 field
    // parses back to the same labeled graph
    let out = mspectra(&[
        "product", "--kind", "rooted", "--g", "P:2", "--h", "P:2", "--root", "1", "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let g: mspectra_core::Graph = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(g.order(), 4);
    assert_eq!(g.edge_count(), 3);
    let g6 = v["graph6"].as_str().unwrap();
    assert_eq!(mspectra_core::graph6::parse_graph6(g6).unwrap(), g);
}

#[test]
fn separable_json_schema() {
    let out = mspectra(&[
        "separable",
        "--rooted",
        "--g",
        "G1:7:3",
        "--h",
        "G1:7:3",
        "--root",
        "1",
        "--kind",
        "A",
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["verdict"], serde_json::json!(false));
    assert!(v["certificate"]["gcd_with_derivative"].is_array());
    assert!(!v["certificate"]["attribution"].is_null());
}

#[test]
fn verify_subcommand_passes() {
    let out = mspectra(&["verify", "--cases", "10", "--seed", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("[PASS]"));
    assert!(!text.contains("[FAIL]"));
}

#[test]
fn edge_list_file_input_with_weights() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join(format!("mspectra-cli-test-{}.edges", std::process::id()));
    std::fs::write(&path, "2;\n1 2 2\n").unwrap();
    let out = mspectra(&["charpoly", "--edges", path.to_str().unwrap(), "--kind", "A"]);
    std::fs::remove_file(&path).ok();
    assert!(out.status.success());
    // weighted P2 with weight 2: phi = x^2 - 4
    assert_eq!(stdout(&out).trim(), "x^2-4");
}

#[test]
fn cmatrix_file_product() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join(format!("mspectra-cli-test-{}.cmat", std::process::id()));
    std::fs::write(&path, "1 0 0\n0 0 1\n0 1 1\n").unwrap();
    let out = mspectra(&[
        "product",
        "--kind",
        "c",
        "--g",
        "P:3",
        "--h",
        "P:3",
        "--cmatrix",
        path.to_str().unwrap(),
        "--json",
    ]);
    std::fs::remove_file(&path).ok();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let g: mspectra_core::Graph = serde_json::from_value(v).unwrap();
    // the 14-edge figure instance
    assert_eq!(g.order(), 9);
    assert_eq!(g.edge_count(), 14);
}

#[test]
fn alpha_sweep_reports_hits() {
    let out = mspectra(&[
        "alpha-sweep",
        "--fixture",
        "H5",
        "--vertex",
        "6",
        "--grid",
        "8",
        "--extra",
        "2/3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("hit alpha=2/3"), "{text}");
}

#[test]
fn controllable_strict_exit_codes() {
    let ok = mspectra(&["controllable", "--fixture", "H9", "--kind", "A", "--strict"]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = mspectra(&[
        "controllable",
        "--fixture",
        "P:2",
        "--kind",
        "A",
        "--strict",
    ]);
    assert_eq!(bad.status.code(), Some(1));
}
