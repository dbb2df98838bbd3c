use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value as Json;

fn smbraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smbraid")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const KERNEL2: [&str; 13] =
    ["kernel2", "--rep", "scalar:2", "--a", "2", "--b", "0", "--c", "0", "--pmax", "6", "--qmax", "12"];

#[test]
fn kernel2_json_report() {
    let out = smbraid(&[&KERNEL2[..], &["--json"]].concat());
    assert_eq!(out.status.code(), Some(0));
    let doc: Json = serde_json::from_str(&stdout(&out)).unwrap();
    let hits: Vec<(u64, i64)> = serde_json::from_value(doc["hits"].clone()).unwrap();
    assert_eq!(hits, (1..=6).map(|m| (m, -2 * m as i64)).collect::<Vec<_>>());
    assert_eq!(doc["minimal_generator"], serde_json::json!([1, -2]));
    assert_eq!(doc["cyclic_ok"], Json::Bool(true));
    assert_eq!(doc["bounds"]["q_max"], 12);
    assert!(!doc["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn json_round_trips_byte_identically() {
    let text = stdout(&smbraid(&[&KERNEL2[..], &["--json"]].concat()));
    let doc: Json = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", text);
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_smbraid"))
            .args([&KERNEL2[..], &["--json"]].concat())
            .env("SMBRAID_THREADS", threads)
            .output()
            .unwrap();
        out.stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn relcheck_reports_all_families() {
    let out = smbraid(&["relcheck", "--n", "3", "--rep", "burau-unreduced", "--a", "1", "--b", "-1", "--c", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next(), Some("7/7 relation families pass"));
}

#[test]
fn relcheck_random_parameters() {
    let out = smbraid(&["relcheck", "--n", "3", "--rep", "perm", "--random", "3", "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("3/3 pass"));
}

#[test]
fn eval_zero_parameters() {
    let out = smbraid(&[
        "eval", "--n", "2", "--rep", "scalar:2", "--a", "0", "--b", "0", "--c", "0", "--word", "t1 s1", "--json",
    ]);
    let doc: Json = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["is_zero"], Json::Bool(true));
    assert_eq!(doc["image"], "[[0]]");
}

#[test]
fn eval_burau_laurent() {
    let out = smbraid(&["eval", "--n", "2", "--rep", "burau-reduced", "--word", "s1 s1"]);
    assert_eq!(stdout(&out).lines().next(), Some("image: [[1*t^2]]"));
}

#[test]
fn unfaith_scalar_witness() {
    let out = smbraid(&["unfaith", "--mode", "a00", "--val", "2", "--rep", "scalar:2", "--json"]);
    let doc: Json = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["search"]["found"]["v"], "S1");
    assert_eq!(doc["witnesses"][0]["w1"], "t1 S1");
    assert_eq!(doc["witnesses"][0]["w2"], "s1");
}

#[test]
fn unfaith_root_of_unity() {
    let out = smbraid(&["unfaith", "--mode", "0b0", "--val", "-1", "--rep", "burau-reduced", "--n", "3"]);
    let text = stdout(&out);
    assert!(text.contains("root of unity of order 2"), "{text}");
    assert!(text.contains("[t1 t1] and [S1 S1]"), "{text}");
}

#[test]
fn cyclic_comparison_from_matrix_file() {
    let mut file = tempfile();
    writeln!(file.1, "0, -2\n1, 0").unwrap();
    let path = file.0.to_str().unwrap().to_owned();
    let out =
        smbraid(&["prop8", "--matrix", &path, "--s", "2", "--ds", "-2", "--a", "1", "--b", "2", "--c", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Json = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["equal"], Json::Bool(true));
    assert_eq!(doc["cyclic"]["minimal_generator"], serde_json::json!([1, 0]));
    std::fs::remove_file(&file.0).unwrap();
}

#[test]
fn multinomial_agrees() {
    let out = smbraid(&["multinomial", "--p", "1", "--q", "0", "--d", "-1", "--a", "1", "--b", "2", "--c", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("expansion: -2"), "{text}");
    assert!(text.contains("agree: true"), "{text}");
}

#[test]
fn wordeq3_relations_and_distinct_words() {
    let eq = smbraid(&["wordeq3", "--w1", "t1 s2 s1", "--w2", "s2 s1 t2"]);
    assert_eq!(stdout(&eq).trim(), "equal");
    let ne = smbraid(&["wordeq3", "--w1", "t1", "--w2", "s1"]);
    assert!(stdout(&ne).starts_with("distinct\ncertificate: tau count"));
}

#[test]
fn shape_strips_kernel_blocks() {
    let out = smbraid(&[
        "shape", "--n", "3", "--word", "t2 s1 t1", "--p", "1", "--q", "-2", "--rep", "scalar:2", "--a", "2", "--b",
        "0", "--c", "0", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Json = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["images"]["v_in_kernel"], Json::Bool(true));
    assert_eq!(doc["images"]["stripped_equal"], Json::Bool(true));
}

#[test]
fn domain_error_exits_one() {
    let out = smbraid(&["eval", "--n", "2", "--word", "t3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
    let out = smbraid(&["kernel2", "--rep", "scalar:1+t"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_error_exits_two() {
    assert_eq!(smbraid(&["eval", "--word", "t1", "--a", "x/y"]).status.code(), Some(2));
    assert_eq!(smbraid(&["kernel2", "--rep", "lkb"]).status.code(), Some(2));
    assert_eq!(smbraid(&["frobnicate"]).status.code(), Some(2));
}

fn tempfile() -> (std::path::PathBuf, std::fs::File) {
    let path = std::env::temp_dir().join(format!("smbraid-matrix-{}.txt", std::process::id()));
    let file = std::fs::File::create(&path).unwrap();
    (path, file)
}

#[test]
fn kernel2_flags_hits_without_scalar_powers() {
    let out = smbraid(&["kernel2", "--rep", "burau-unreduced", "--a", "1", "--b", "0", "--c", "0", "--json"]);
    let doc: Json = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["minimal_generator"], serde_json::json!([1, -1]));
    assert_eq!(doc["nonscalar_powers"]["holds"], Json::Bool(true));
    assert_eq!(doc["flagged"], Json::Bool(true));
    let out = smbraid(&["kernel2", "--rep", "burau-unreduced", "--pmax", "3", "--qmax", "4"]);
    assert!(!stdout(&out).contains("flag:"));
}
