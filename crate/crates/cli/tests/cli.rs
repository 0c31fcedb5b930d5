use std::path::Path;
use std::process::{Command, Output};

use critgraph::dimacs;
use critgraph::graph::Graph;
use critgraph::reductions::{build_vertex_gadget, parse_formula};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_critgraph"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_graph(dir: &Path, name: &str, g: &Graph) -> String {
    let path = dir.join(name);
    std::fs::write(&path, dimacs::graph_to_string(g)).unwrap();
    path.to_string_lossy().into_owned()
}

const N3_FORMULA: &str = "p m1in3 3\nc 1 2 3\nc 1 2 3\nc 1 2 3\n";

#[test]
fn chi_reports_value_and_method() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_graph(dir.path(), "grotzsch.col", &Graph::grotzsch());
    let out = run(&["chi", &path]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "chi=4 method=Exact");

    let out = run(&["chi", &path, "--certificate"]);
    let text = stdout(&out);
    assert!(text.contains("coloring:"));
    assert_eq!(text.lines().nth(1).unwrap().split_whitespace().count(), 12);
}

#[test]
fn classify_names_verdict_and_rule() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write_graph(dir.path(), "p4.col", &Graph::path(4).unwrap());
    let out = run(&["classify", &p4]);
    assert_eq!(stdout(&out).trim(), "PolyTime (rule: SubP4)");

    let c5 = write_graph(dir.path(), "c5.col", &Graph::cycle(5).unwrap());
    let out = run(&["classify", &c5]);
    assert_eq!(stdout(&out).trim(), "NpHard (rule: ContainsClawOrCycle)");
}

#[test]
fn critical_scan_of_c5() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_graph(dir.path(), "c5.col", &Graph::cycle(5).unwrap());
    let out = run(&["critical", &c5, "--all"]);
    let text = stdout(&out);
    assert!(text.contains("chi=3"));
    assert!(text.contains("critical_vertices (5)"));
    assert!(text.contains("critical_edges (5)"));
    assert!(text.contains("contraction_critical_edges (5)"));

    let out = run(&["critical", &c5, "--vertices", "--exists"]);
    assert_eq!(stdout(&out).trim(), "has_critical_vertex=true");
}

#[test]
fn gen_output_roundtrips_to_the_built_gadget() {
    let dir = tempfile::tempdir().unwrap();
    let fpath = dir.path().join("f3.m1in3");
    std::fs::write(&fpath, N3_FORMULA).unwrap();
    let out_path = dir.path().join("gadget.col");
    let out = run(&[
        "gen",
        "sat-vertex",
        "--f",
        fpath.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&out_path).unwrap();
    let parsed = dimacs::parse_graph(&text).unwrap();
    let built = build_vertex_gadget(&parse_formula(N3_FORMULA).unwrap()).graph;
    assert_eq!(parsed, built);

    // --complement emits the target-class instance
    let out = run(&[
        "gen",
        "sat-edge",
        "--f",
        fpath.to_str().unwrap(),
        "--complement",
    ]);
    let g = dimacs::parse_graph(&stdout(&out)).unwrap();
    assert_eq!(g.n(), 33);
    assert_eq!(g.edge_count(), 33 * 32 / 2 - 42);
}

#[test]
fn gen_grotzsch_from_empty_graph() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write_graph(dir.path(), "empty.col", &Graph::empty(0).unwrap());
    let out = run(&["gen", "grotzsch", "--g", &empty]);
    let g = dimacs::parse_graph(&stdout(&out)).unwrap();
    assert_eq!(g, Graph::grotzsch());
}

#[test]
fn hfree_report() {
    let dir = tempfile::tempdir().unwrap();
    let host = write_graph(dir.path(), "host.col", &Graph::cycle(7).unwrap());
    let c4 = write_graph(dir.path(), "c4.col", &Graph::cycle(4).unwrap());
    let k3 = write_graph(dir.path(), "k3.col", &Graph::clique(3).unwrap());
    let out = run(&["hfree", "--g", &host, "--patterns", &format!("{c4},{k3}")]);
    let text = stdout(&out);
    assert!(text.contains("absent"));
    assert!(text.contains("family-free: true"));
}

#[test]
fn oracle_command() {
    let dir = tempfile::tempdir().unwrap();
    let fpath = dir.path().join("f3.m1in3");
    std::fs::write(&fpath, N3_FORMULA).unwrap();
    let out = run(&["oracle", fpath.to_str().unwrap()]);
    let text = stdout(&out);
    assert!(text.contains("1-satisfiable: true"));
    assert!(text.contains("assignment:"));
}

#[test]
fn exit_codes() {
    // usage error: missing file
    let out = run(&["chi", "/nonexistent/g.col"]);
    assert_eq!(out.status.code(), Some(2));

    // usage error: malformed formula
    let dir = tempfile::tempdir().unwrap();
    let fpath = dir.path().join("bad.m1in3");
    std::fs::write(&fpath, "p m1in3 3\nc 1 1 2\nc 1 2 3\nc 2 3 1\n").unwrap();
    let out = run(&["oracle", fpath.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // resource cap: sigma needs the complement under the solver cap
    let big = write_graph(dir.path(), "big.col", &Graph::empty(70).unwrap());
    let out = run(&["sigma", &big]);
    assert_eq!(out.status.code(), Some(3));

    // verified suite exits 0
    let out = run(&["verify", "claim3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn json_reports_are_deterministic_and_versioned() {
    let a = run(&[
        "verify",
        "thm4",
        "--samples",
        "2",
        "--seed",
        "5",
        "--json",
        "--deterministic",
    ]);
    let b = run(&[
        "verify",
        "thm4",
        "--samples",
        "2",
        "--seed",
        "5",
        "--json",
        "--deterministic",
    ]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let value: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(value["schema"], 1);
    assert_eq!(value["seed"], 5);
    assert!(value.get("timestamp").is_none());
    assert!(value.get("wall_seconds").is_none());

    // without --deterministic a timestamp appears
    let c = run(&["verify", "thm4", "--samples", "2", "--seed", "5", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&c)).unwrap();
    assert!(value.get("timestamp").is_some());
}

#[test]
fn env_var_provides_default_seed() {
    let with_flag = run(&[
        "verify",
        "thm3",
        "--samples",
        "2",
        "--seed",
        "11",
        "--json",
        "--deterministic",
    ]);
    let with_env = bin()
        .args([
            "verify",
            "thm3",
            "--samples",
            "2",
            "--json",
            "--deterministic",
        ])
        .env("M1IN3_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(stdout(&with_flag), stdout(&with_env));
}

#[test]
fn jobs_flag_bounds_parallelism() {
    let out = run(&["verify", "prop1", "--max-n", "4", "--jobs", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("cases=64 passed=64"));
}
