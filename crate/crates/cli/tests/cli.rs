use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn z3flow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z3flow")).args(args).output().expect("binary runs")
}

fn z3flow_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_z3flow"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const G3: &str = "6 11\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n";
const W3_PLUS: &str = "5 7\n0 1\n1 2\n2 0\n3 0\n3 1\n3 2\n4 0\n";

#[test]
fn g3_has_no_mod3_orientation() {
    let dir = tempfile::tempdir().unwrap();
    let g3 = write(dir.path(), "g3.txt", G3);
    assert_eq!(code(&z3flow(&["decide", &g3, "--mod3"])), 1);
    let g3_json = z3flow(&["catalog", "show", "G3", "--json"]);
    let graph = json(&g3_json)["verdict"]["graph"].to_string();
    let path = write(dir.path(), "g3.json", &graph);
    assert_eq!(code(&z3flow(&["decide", &path, "--mod3"])), 1);
    assert_eq!(code(&z3flow(&["decide", &path, "--nz3f"])), 1);
}

#[test]
fn catalog_verify_all_passes() {
    let o = z3flow(&["catalog", "verify", "--all"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    assert!(!String::from_utf8_lossy(&o.stdout).contains("[FAIL]"));
}

#[test]
fn input_errors_exit_2() {
    let o = z3flow(&["decide", "nosuch.txt", "--mod3"]);
    assert_eq!(code(&o), 2);
    let o = z3flow_stdin(&["decide", "-", "--mod3"], "2 1\n0 0\n");
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(code(&z3flow(&["decide", "-"])), 2, "a question is required");
    assert_eq!(code(&z3flow(&["catalog", "show", "special-8"])), 2);
}

#[test]
fn capability_errors_exit_3() {
    let mut text = String::from("30 30\n");
    for i in 0..30 {
        text.push_str(&format!("{} {}\n", i, (i + 1) % 30));
    }
    assert_eq!(code(&z3flow_stdin(&["decide", "-", "--z3conn"], &text)), 3);
    assert_eq!(code(&z3flow(&["verify", "r-table", "--n", "7"])), 3);
}

#[test]
fn graph6_and_digon_inputs() {
    assert_eq!(code(&z3flow_stdin(&["decide", "-", "--mod3"], "C~\n")), 1, "K4");
    assert_eq!(code(&z3flow_stdin(&["decide", "-", "--mod3", "--format", "graph6"], "D~{\n")), 0, "K5");
    let o = z3flow_stdin(&["decide", "-", "--z3conn", "--json"], "2 2\n0 1\n0 1\n");
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["verdict"]["feasible"], Value::Bool(true));
}

#[test]
fn witness_is_an_edge_direction_map_and_dot() {
    let o = z3flow_stdin(&["decide", "-", "--mod3", "--witness", "--json"], "2 3\n0 1\n0 1\n0 1\n");
    assert_eq!(code(&o), 0);
    let w = &json(&o)["witness"];
    let arcs = w["arcs"].as_object().unwrap();
    assert_eq!(arcs.len(), 3);
    assert!(arcs.contains_key("e0"));
    assert!(w["dot"].as_str().unwrap().starts_with("digraph"));
    let text = z3flow_stdin(&["decide", "-", "--mod3", "--witness"], "2 3\n0 1\n0 1\n0 1\n");
    assert!(String::from_utf8_lossy(&text.stdout).contains("->"));
}

#[test]
fn boundaries_on_the_odd_wheel() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.txt", "4 6\n0 1\n1 2\n2 0\n3 0\n3 1\n3 2\n");
    let zero = write(dir.path(), "zero.txt", "0 0 0 0\n");
    let nonzero = write(dir.path(), "b.json", "[1, 2, 0, 0]");
    let short = write(dir.path(), "short.txt", "1 2\n");
    assert_eq!(code(&z3flow(&["decide", &k4, "--boundary", &zero])), 1);
    assert_eq!(code(&z3flow(&["decide", &k4, "--boundary", &nonzero])), 0);
    assert_eq!(code(&z3flow(&["decide", &k4, "--boundary", &short])), 2);
}

#[test]
fn reduce_writes_a_trace() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.json");
    let o = z3flow_stdin(&["reduce", "-", "--json", "--trace", trace.to_str().unwrap()], "D~{\n");
    assert_eq!(code(&o), 0);
    let rec = json(&o);
    assert_eq!(rec["verdict"]["reduced"]["vertices"].as_array().unwrap().len(), 1);
    assert_eq!(rec["verdict"]["cap_binding"], Value::Bool(false));
    let t: Value = serde_json::from_str(&std::fs::read_to_string(&trace).unwrap()).unwrap();
    assert_eq!(t["image"].as_object().unwrap().len(), 5);
}

#[test]
fn wheel_and_wcontract() {
    let o = z3flow_stdin(&["wheel", "-", "--odd", "--json"], W3_PLUS);
    assert_eq!(code(&o), 0);
    let w = &json(&o)["witness"];
    assert_eq!(w["rim"].as_array().unwrap().len(), 3);
    assert_eq!(code(&z3flow_stdin(&["wheel", "-", "--even"], W3_PLUS)), 1);
    let o = z3flow_stdin(&["wcontract", "-", "--center", "3", "--rim", "0,1,2", "--X", "0,1", "--json"], W3_PLUS);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let h = &json(&o)["verdict"]["contracted"];
    assert_eq!(h["vertices"].as_array().unwrap().len(), 3);
    let bad = z3flow_stdin(&["wcontract", "-", "--center", "3", "--rim", "0,1,2", "--X", "0"], W3_PLUS);
    assert_eq!(code(&bad), 2);
}

#[test]
fn connectivity_report() {
    let o = z3flow_stdin(&["connectivity", "-", "--odd", "--essential", "--alpha", "--json"], G3);
    assert_eq!(code(&o), 0);
    let v = &json(&o)["verdict"];
    assert_eq!(v["edge_connectivity"]["cut_size"], 3);
    assert_eq!(v["odd_edge_connectivity"]["cut_size"], 3);
    assert_eq!(v["independence_number"]["value"], 2);
}

#[test]
fn verify_subcommands() {
    let o = z3flow(&["verify", "r-table", "--n", "5", "--json"]);
    assert_eq!(code(&o), 0);
    let rows: Vec<u64> =
        json(&o)["verdict"]["rows"].as_array().unwrap().iter().map(|r| r["r"].as_u64().unwrap()).collect();
    assert_eq!(rows, [0, 1, 3, 6, 8]);
    let o = z3flow_stdin(&["verify", "family", "-", "--json"], G3);
    assert_eq!(code(&o), 1, "G3 is in F1");
    assert_eq!(json(&o)["verdict"]["in_f1"], Value::Bool(true));
    assert_eq!(code(&z3flow(&["verify", "lemma", "splitting", "--samples", "10", "--seed", "3"])), 0);
    assert_eq!(code(&z3flow(&["verify", "lemma", "nosuch"])), 2);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["verify", "lemma", "hakimi-oracle", "--samples", "30", "--seed", "5", "--json"];
    let a = z3flow(&args);
    let b = z3flow(&args);
    assert_eq!(a.stdout, b.stdout);
    let t1 =
        z3flow(&["--threads", "1", "verify", "lemma", "hakimi-oracle", "--samples", "30", "--seed", "5", "--json"]);
    assert_eq!(a.stdout, t1.stdout);
    let rec = json(&a);
    assert!(rec.get("wall_time_ms").is_none());
    let timed = json(&z3flow(&["verify", "lemma", "cut-parity", "--samples", "3", "--json", "--timing"]));
    assert!(timed["wall_time_ms"].is_u64());
}

#[test]
fn digest_depends_only_on_the_graph() {
    let edge_list = z3flow_stdin(&["decide", "-", "--mod3", "--json"], G3);
    let dir = tempfile::tempdir().unwrap();
    let g3 = json(&z3flow_stdin(&["catalog", "show", "G3", "--json"], ""))["verdict"]["graph"].to_string();
    let path = write(dir.path(), "g3.json", &g3);
    let from_json = z3flow(&["decide", &path, "--mod3", "--json"]);
    let from_text = z3flow_stdin(&["decide", "-", "--mod3", "--json"], G3);
    assert_eq!(json(&edge_list)["input_digest"], json(&from_text)["input_digest"]);
    let d = json(&from_json)["input_digest"].as_str().unwrap().to_string();
    assert_eq!(d.len(), 64);
}
