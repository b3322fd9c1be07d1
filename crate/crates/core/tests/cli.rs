use std::process::{Command, Output};

use serde_json::Value;

fn clusterden(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clusterden")).args(args).output().expect("binary runs")
}

fn records(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn dvectors_at_the_initial_seed() {
    let out = clusterden(&["dvectors", "--type", "A", "--rank", "2", "--coxeter", "1,2", "--seed", "initial"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    assert_eq!(recs.len(), 5);
    let dvecs: Vec<&Value> = recs.iter().map(|r| &r["dvector"]).collect();
    assert_eq!(serde_json::to_string(&dvecs).unwrap(), "[[-1,0],[0,-1],[1,0],[1,1],[0,1]]");
    assert_eq!(recs[3]["laurent"], "x1^-1*x2^-1 + x1^-1 + x2^-1");
}

#[test]
fn dvectors_along_a_path() {
    let out = clusterden(&["dvectors", "--type", "A", "--rank", "3", "--seed", "path:2"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    assert_eq!(recs.len(), 9);
    let negative = recs.iter().filter(|r| r["dvector"].as_array().unwrap().iter().any(|x| x.as_i64() == Some(-1))).count();
    assert_eq!(negative, 3);
}

#[test]
fn count_b2() {
    let out = clusterden(&["count", "--type", "B", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let rec = &records(&out)[0];
    assert_eq!((rec["variables"].as_u64(), rec["clusters"].as_u64(), rec["seeds"].as_u64()), (Some(6), Some(6), Some(6)));
}

#[test]
fn verify_a3_all_words() {
    let out = clusterden(&["verify", "--type", "A", "--rank", "3", "--all-coxeter", "--threads", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let recs = records(&out);
    assert!(recs.iter().all(|r| r["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true)));
    let words: std::collections::BTreeSet<String> = recs.iter().map(|r| r["scenario"]["coxeter"].to_string()).collect();
    assert_eq!(words.len(), 6);
}

#[test]
fn verify_e6_subword_layer() {
    let out = clusterden(&["verify", "--type", "E", "--rank", "6", "--subword-only"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn other_subcommands() {
    for cmd in ["clusters", "variables", "compat", "rotate", "geometry"] {
        let out = clusterden(&[cmd, "--type", "C", "--rank", "2"]);
        assert_eq!(out.status.code(), Some(0), "{cmd}");
        assert!(!records(&out).is_empty(), "{cmd}");
    }
    let out = clusterden(&["rotate", "--type", "A", "--rank", "2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("position,rotated,root,rotated_root,variable,rotated_variable"));
    assert_eq!(text.lines().nth(1), Some("1,3,-1 0,1 0,x1^1,x1^-1 + x1^-1*x2^1"));
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(clusterden(&["count", "--type", "D", "--rank", "3"]).status.code(), Some(2));
    assert_eq!(clusterden(&["count", "--type", "A", "--rank", "2", "--coxeter", "1,3"]).status.code(), Some(2));
    assert_eq!(clusterden(&["dvectors", "--type", "A", "--rank", "2", "--seed", "random"]).status.code(), Some(2));
    assert_eq!(clusterden(&["count", "--type", "A", "--rank", "4", "--budget", "10"]).status.code(), Some(2));
    assert_eq!(clusterden(&["geometry", "--type", "D", "--rank", "4"]).status.code(), Some(2));
    assert_eq!(clusterden(&["count"]).status.code(), Some(2));
    assert_eq!(clusterden(&["--help"]).status.code(), Some(0));
}
