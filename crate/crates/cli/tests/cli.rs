use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn gfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gfree")).args(args).env_remove("GFREE_JOBS").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    stdout(out).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn write_temp(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn chi_examples() {
    for (graph, pattern, expected) in [("K5", "K3", 3), ("C5", "C5", 2), ("K2", "K3", 1)] {
        let out = gfree(&["chi", "--graph", graph, "--pattern", pattern, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(json_lines(&out)[0]["chi"], expected, "{graph} / {pattern}");
    }
}

#[test]
fn text_and_json_agree() {
    let text = stdout(&gfree(&["chi", "--graph", "K3+3K1", "--pattern", "K3"]));
    let json = &json_lines(&gfree(&["chi", "--graph", "K3+3K1", "--pattern", "K3", "--format", "json"]))[0];
    assert!(text.contains(&format!("chi = {}", json["chi"])));
    for bound in json["bounds"].as_array().unwrap() {
        assert!(text.contains(&format!("bound {} (slack {})", bound["value"], bound["slack"])));
    }
}

#[test]
fn decide_with_k() {
    let out = gfree(&["chi", "--graph", "K5", "--pattern", "K3", "--k", "2", "--format", "json"]);
    assert_eq!(json_lines(&out)[0]["colorable"], false);
    let out = gfree(&["chi", "--graph", "K5", "--pattern", "K3", "--k", "3", "--format", "json"]);
    assert_eq!(json_lines(&out)[0]["colorable"], true);
}

#[test]
fn ng_on_k44_is_sharp() {
    let out = gfree(&["ng", "--graph", "g6:G?~vf_", "--pattern", "self", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json_lines(&out)[0];
    assert_eq!(r["sum"], 3);
    assert_eq!(r["sharp"], true);
    assert_eq!(r["branch"], "critical");
}

#[test]
fn verify_small_corpus() {
    let out = gfree(&["verify", "--enumerate", "6", "--pattern", "K3", "--pattern", "cycles", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json_lines(&out)[0];
    assert_eq!(r["summary"]["violations"], 0);
    assert_eq!(r["summary"]["graphs"], 209);
    assert!(r.get("records").is_none());
}

#[test]
fn verify_reads_graph6_and_skips_bad_lines() {
    let file = write_temp(">>graph6<<DQc\nnot graph6 \u{7f}\nBw\n");
    let path = file.path().to_str().unwrap();
    let out = gfree(&["verify", "--input", path, "--pattern", "K3", "--format", "json", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json_lines(&out)[0];
    assert_eq!(r["summary"]["graphs"], 2);
    assert_eq!(r["summary"]["skipped_lines"], 1);
    assert!(r["warnings"][0].as_str().unwrap().starts_with("line 2"));
}

#[test]
fn dimacs_input() {
    let file = write_temp("c triangle plus pendant\np edge 4 4\ne 1 2\ne 2 3\ne 1 3\ne 3 4\n");
    let out = gfree(&["chi", "--input", file.path().to_str().unwrap(), "--pattern", "K3", "--format", "json"]);
    assert_eq!(json_lines(&out)[0]["chi"], 2);
}

#[test]
fn witness_suite_passes() {
    let out = gfree(&["witness"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("6/6 reproduced"));
    let out = gfree(&["witness", "--format", "json"]);
    assert!(json_lines(&out).iter().all(|o| o["reproduced"] == true));
}

#[test]
fn critical_certificate() {
    let out = gfree(&["critical", "--graph", "K5uK4", "--pattern", "K3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let c = &json_lines(&out)[0];
    assert_eq!(c["k"], 3);
    assert_eq!(c["vertices"].as_array().unwrap().len(), 5);
    assert_eq!(c["min_degree"], 4);
    assert_eq!(c["audited"], true);
}

#[test]
fn decompose_respects_caps() {
    let out = gfree(&["decompose", "--graph", "K6", "--caps", "2,1,0", "--format", "json"]);
    let d = &json_lines(&out)[0];
    let caps = d["caps"].as_array().unwrap();
    for (max, cap) in d["class_max_degrees"].as_array().unwrap().iter().zip(caps) {
        assert!(max.as_u64() <= cap.as_u64());
    }
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(gfree(&["chi", "--graph", "K5", "--pattern", "Q9"]).status.code(), Some(1));
    assert_eq!(gfree(&["chi", "--graph", "K5"]).status.code(), Some(1));
    assert_eq!(gfree(&["chi", "--graph", "K5", "--pattern", "K3", "--time-limit", "0"]).status.code(), Some(1));
    assert_eq!(gfree(&["verify", "--enumerate", "9", "--pattern", "K3"]).status.code(), Some(1));
    assert_eq!(gfree(&["chi", "--input", "/nonexistent/file", "--pattern", "K3"]).status.code(), Some(1));
    assert_eq!(gfree(&["--help"]).status.code(), Some(0));
}

#[test]
fn timeout_exits_three() {
    let out = gfree(&["chi", "--graph", "K40", "--pattern", "C5", "--time-limit", "0.000001"]);
    assert_eq!(out.status.code(), Some(3));
}
