// Copyright 2026 The lozenge developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// http://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or http://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

//! End-to-end behaviour of the `lozenge` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn lozenge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lozenge"))
        .args(args)
        .env("LOZENGE_WORKERS", "2")
        .output()
        .expect("the binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn count_both_agrees() {
    let out = lozenge(&[
        "count", "--k", "1", "--x", "1", "--t", "1", "--h", "0", "--dents", "1", "--method", "both",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["count"], "2");
    assert_eq!(v["agrees"], true);
    assert_eq!(v["family"], "tilted");
    assert_eq!(v["runtime_ms"], 0);
}

#[test]
fn count_hexagon_formula() {
    let out = lozenge(&[
        "count", "--family", "hexagon", "--a", "2", "--b", "2", "--c", "2", "--method", "formula",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["count"], "20");
}

#[test]
fn count_semihexagon_and_oracle_only() {
    let out = lozenge(&[
        "count", "--family", "semihex", "--a", "1", "--dents", "1,3", "--method", "both",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["count"], "2");
    let out = lozenge(&[
        "count", "--family", "hexagon", "--a", "1", "--b", "1", "--c", "1", "--method", "oracle",
    ]);
    assert_eq!(json(&out)["count"], "2");
    assert!(json(&out).get("agrees").is_none());
}

#[test]
fn invalid_parameters_exit_2() {
    for args in [
        &["count", "--dents", "2,1", "--h", "0"][..],
        &["count", "--dents", "1,x"][..],
        &["count", "--k", "-1"][..],
        &[
            "count", "--family", "halved", "--a", "1", "--b", "1", "--c", "2",
        ][..],
        &["count", "--bogus"][..],
        &[
            "render", "--family", "hexagon", "--a", "1", "--b", "1", "--c", "1", "--scale", "0",
        ][..],
        &["bijection", "--corollary", "2", "--x", "1", "--dents", "1"][..],
        &["bijection", "--corollary", "3", "--dents", "1"][..],
        &["bijection", "--corollary", "1", "--family", "hexagon"][..],
        &["verify", "--max-k", "-1"][..],
    ] {
        let out = lozenge(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn bad_worker_count_exits_2() {
    let out = Command::new(env!("CARGO_BIN_EXE_lozenge"))
        .args([
            "verify", "--max-k", "0", "--max-x", "0", "--max-t", "0", "--max-hl", "1",
        ])
        .env("LOZENGE_WORKERS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verified_disagreement_exits_3() {
    let out = lozenge(&[
        "count", "--family", "halved", "--a", "1", "--b", "3", "--c", "3", "--method", "both",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert_eq!(v["agrees"], false);
    assert_eq!(v["count"], "20/3");
    assert_eq!(v["oracle_count"], "14");
}

#[test]
fn wide_regions_exit_4() {
    let out = lozenge(&[
        "count", "--family", "hexagon", "--a", "11", "--b", "11", "--c", "11", "--method", "oracle",
    ]);
    assert_eq!(out.status.code(), Some(4));
    let out = lozenge(&[
        "count", "--family", "hexagon", "--a", "11", "--b", "11", "--c", "11", "--method",
        "formula",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = lozenge(&[
        "verify", "--max-k", "0", "--max-x", "11", "--max-t", "11", "--max-hl", "1",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn out_of_range_index_exits_5() {
    let out = lozenge(&[
        "render",
        "--family",
        "hexagon",
        "--a",
        "1",
        "--b",
        "1",
        "--c",
        "1",
        "--tiling-index",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(5));
    let out = lozenge(&[
        "bijection",
        "--corollary",
        "1",
        "--k",
        "1",
        "--x",
        "1",
        "--t",
        "1",
        "--dents",
        "1",
        "--tiling-index",
        "9",
    ]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn render_counts_shapes() {
    let out = lozenge(&[
        "render", "--family", "hexagon", "--a", "1", "--b", "1", "--c", "1",
    ]);
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches(r#"class="cell""#).count(), 6);
    assert_eq!(svg.matches(r#"class="dent""#).count(), 0);

    let out = lozenge(&[
        "render",
        "--family",
        "hexagon",
        "--a",
        "1",
        "--b",
        "1",
        "--c",
        "1",
        "--tiling-index",
        "1",
    ]);
    let svg = String::from_utf8(out.stdout).unwrap();
    assert_eq!(svg.matches(r#"class="lozenge "#).count(), 3);

    let out = lozenge(&[
        "render", "--k", "2", "--x", "2", "--t", "1", "--h", "1", "--dents", "1,3",
    ]);
    let svg = String::from_utf8(out.stdout).unwrap();
    assert_eq!(svg.matches(r#"class="dent""#).count(), 1);
    assert_eq!(svg.matches(r##"fill="#000000""##).count(), 1);
}

#[test]
fn render_colors_follow_orientation() {
    let out = lozenge(&[
        "render",
        "--k",
        "1",
        "--x",
        "2",
        "--t",
        "2",
        "--h",
        "1",
        "--dents",
        "2",
        "--tiling-index",
        "3",
    ]);
    let svg = String::from_utf8(out.stdout).unwrap();
    for (name, color) in [
        ("left", "#f2b134"),
        ("right", "#4f9dd9"),
        ("vertical", "#8cc269"),
    ] {
        for line in svg
            .lines()
            .filter(|l| l.contains(&format!("lozenge {name}\"")))
        {
            assert!(line.contains(color), "{line}");
        }
    }
}

#[test]
fn bijection_records() {
    let out = lozenge(&[
        "bijection",
        "--corollary",
        "1",
        "--k",
        "1",
        "--x",
        "1",
        "--t",
        "1",
        "--h",
        "0",
        "--dents",
        "1",
        "--tiling-index",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["roundtrip"], true);
    assert_eq!(v["tiling_count"], "2");

    let out = lozenge(&[
        "bijection",
        "--corollary",
        "2",
        "--k",
        "2",
        "--h",
        "0",
        "--dents",
        "1,2",
    ]);
    let v = json(&out);
    assert_eq!(v["partition"]["rows"], serde_json::json!([]));
    assert_eq!(v["roundtrip"], true);

    let out = lozenge(&[
        "bijection",
        "--corollary",
        "1",
        "--k",
        "1",
        "--x",
        "2",
        "--t",
        "1",
        "--h",
        "2",
        "--dents",
        "",
    ]);
    let v = json(&out);
    assert_eq!(v["shape"], serde_json::json!([]));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &[
            "count", "--k", "2", "--x", "2", "--t", "1", "--h", "1", "--dents", "1,3",
        ][..],
        &[
            "verify", "--max-k", "1", "--max-x", "1", "--max-t", "1", "--max-hl", "3",
        ][..],
        &[
            "bijection",
            "--corollary",
            "1",
            "--k",
            "1",
            "--x",
            "2",
            "--t",
            "1",
            "--h",
            "1",
            "--dents",
            "2",
            "--tiling-index",
            "4",
        ][..],
        &[
            "render",
            "--k",
            "1",
            "--x",
            "1",
            "--t",
            "1",
            "--h",
            "1",
            "--dents",
            "1",
            "--tiling-index",
            "1",
        ][..],
    ] {
        let first = lozenge(args);
        let second = lozenge(args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert!(!first.stdout.is_empty());
    }
    let one = Command::new(env!("CARGO_BIN_EXE_lozenge"))
        .args([
            "verify", "--max-k", "1", "--max-x", "1", "--max-t", "1", "--max-hl", "3",
        ])
        .env("LOZENGE_WORKERS", "1")
        .output()
        .unwrap();
    let four = Command::new(env!("CARGO_BIN_EXE_lozenge"))
        .args([
            "verify", "--max-k", "1", "--max-x", "1", "--max-t", "1", "--max-hl", "3",
        ])
        .env("LOZENGE_WORKERS", "4")
        .output()
        .unwrap();
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn verify_small_grids() {
    let out = lozenge(&[
        "verify", "--max-k", "1", "--max-x", "2", "--max-t", "2", "--max-hl", "3", "--check",
        "counts",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let total = v["summary"]["total"].as_u64().unwrap();
    assert_eq!(total, 2 * 3 * 3 * 15);
    assert_eq!(v["points"].as_array().unwrap().len() as u64, total);
    assert!(v["summary"]["mismatches"].as_array().unwrap().is_empty());
    assert_eq!(v["points"][0]["match"], true);
    assert_eq!(v["grid"]["checks"], serde_json::json!(["counts"]));

    let out = lozenge(&[
        "verify", "--max-k", "2", "--max-x", "2", "--max-t", "2", "--max-hl", "3", "--check", "kuo",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["summary"]["kuo_graph_quads"].as_u64().unwrap() > 0);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("count.json");
    let out = lozenge(&[
        "count",
        "--family",
        "hexagon",
        "--a",
        "2",
        "--b",
        "1",
        "--c",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["count"], "3");
}

#[test]
fn help_exits_0() {
    let out = lozenge(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("verify"));
}
