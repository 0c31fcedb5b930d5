//! Acceptance suite: the finite equivalences and structural facts behind
//! the hardness constructions, each with its tolerance pinned. Run with
//! `cargo test --test acceptance -- --nocapture` to see one line per
//! criterion.

use std::time::Instant;

use critgraph::chromatic::{chi_exact, clique_cover_number};
use critgraph::criticality::has_critical_vertex;
use critgraph::graph::Graph;
use critgraph::hfree::{classify_h, contains_induced, patterns, Rule, Verdict};
use critgraph::reductions::{build_vertex_gadget, oracle_1in3, random_formula, to_target_instance};
use critgraph::verify;

fn line(criterion: &str, pass: bool, detail: &str) {
    println!(
        "{} criterion {criterion}: {detail}",
        if pass { "pass" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion}: {detail}");
}

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool builds")
}

#[test]
fn criterion_01_prop1_exhaustive_on_six_vertices() {
    // single-threaded run, bounded at 5 minutes
    let started = Instant::now();
    let report = pool(1).install(|| verify::run_prop1(6));
    let serial = started.elapsed().as_secs_f64();
    line(
        "1 (prop1, serial)",
        report.passed() && report.cases_run == 32768 && serial < 300.0,
        &format!(
            "{}/{} graphs, {serial:.1}s single-threaded (< 300s)",
            report.cases_passed, report.cases_run
        ),
    );
    // the 1-minute bound is stated for 8 jobs; check it when 8 cpus exist
    let cpus = std::thread::available_parallelism().map_or(1, |p| p.get());
    if cpus >= 8 {
        let started = Instant::now();
        let report = pool(8).install(|| verify::run_prop1(6));
        let par = started.elapsed().as_secs_f64();
        line(
            "1 (prop1, 8 jobs)",
            report.passed() && par < 60.0,
            &format!("{par:.1}s with 8 jobs (< 60s)"),
        );
    } else {
        println!(
            "note criterion 1: {cpus} cpu(s) available, 8-job bound checked \
             via the serial bound instead"
        );
    }
}

#[test]
fn criterion_02_grotzsch_facts() {
    let started = Instant::now();
    let g = Graph::grotzsch();
    let no_c3 = contains_induced(&g, &Graph::cycle(3).unwrap()).is_none();
    let chi = chi_exact(&g).unwrap().chi;
    let secs = started.elapsed().as_secs_f64();
    line(
        "2 (Grötzsch facts)",
        g.n() == 11 && g.edge_count() == 20 && no_c3 && chi == 4 && secs < 1.0,
        &format!(
            "n={}, m={}, C3-free={no_c3}, chi={chi}, {secs:.3}s (< 1s)",
            g.n(),
            g.edge_count()
        ),
    );
}

#[test]
fn criterion_03_clique_proof_equivalence() {
    let started = Instant::now();
    let report = verify::run_thm3(50, 7);
    let secs = started.elapsed().as_secs_f64();
    line(
        "3 (2G+K_{l+1} equivalence)",
        report.passed() && report.cases_run == 150 && secs < 120.0,
        &format!(
            "{}/{} cases, {secs:.1}s (< 120s)",
            report.cases_passed, report.cases_run
        ),
    );
}

#[test]
fn criterion_04_grotzsch_instance_equivalence() {
    let report = verify::run_thm4(30, 7);
    line(
        "4 (2G+Grötzsch equivalence)",
        report.passed() && report.cases_run == 30,
        &format!("{}/{} cases", report.cases_passed, report.cases_run),
    );
}

#[test]
fn criterion_05_cover_count_and_vertex_equivalence() {
    // the unique n=3 instance: sigma = 10 and no critical vertex
    let f3 = random_formula(3, 0).unwrap();
    assert!(oracle_1in3(&f3).unwrap().is_some());
    let gadget = build_vertex_gadget(&f3);
    let (sigma, cover) = clique_cover_number(&gadget.graph).unwrap();
    let no_cv = !has_critical_vertex(&to_target_instance(&gadget)).unwrap();
    line(
        "5 (n=3 base case)",
        sigma == 10 && cover.validate(&gadget.graph) && no_cv,
        &format!("sigma={sigma} (=10n/3), complement has no critical vertex: {no_cv}"),
    );

    // 20 seeded formulas at n = 6: the three-way equivalence, sigma timed
    let mut ok = 0;
    let mut satisfiable_count = 0;
    for seed in 0..20u64 {
        let f = random_formula(6, seed).unwrap();
        let satisfiable = oracle_1in3(&f).unwrap().is_some();
        satisfiable_count += usize::from(satisfiable);
        let gadget = build_vertex_gadget(&f);
        let t = Instant::now();
        let (sigma, _) = clique_cover_number(&gadget.graph).unwrap();
        let sigma_secs = t.elapsed().as_secs_f64();
        let no_cv = !has_critical_vertex(&to_target_instance(&gadget)).unwrap();
        println!(
            "  n=6 seed {seed}: sigma={sigma} in {sigma_secs:.3}s, \
             1-satisfiable={satisfiable}, no critical vertex={no_cv}"
        );
        assert!(
            sigma_secs < 600.0,
            "sigma on the 42-vertex gadget must finish within 10 minutes"
        );
        if (satisfiable == (sigma == 20)) && (satisfiable == no_cv) && sigma >= 20 {
            ok += 1;
        }
    }
    line(
        "5 (n=6 batch)",
        ok == 20,
        &format!("{ok}/20 equivalences hold ({satisfiable_count} satisfiable instances)"),
    );
}

#[test]
fn criterion_06_edge_equivalence() {
    let report = verify::run_main_edge();
    line(
        "6 (edge variant)",
        report.passed() && report.cases_run == 2,
        &format!(
            "{}/{} cases (n=3 without critical edge, stored fixture with one)",
            report.cases_passed, report.cases_run
        ),
    );
}

#[test]
fn criterion_07_gadget_structure() {
    let report = verify::run_gadget_structure(&[3, 6, 9], 3, 11);
    line(
        "7 (gadget structure)",
        report.passed() && report.cases_run == 18,
        &format!(
            "{}/{} gadgets pass |V|, omega, and freeness checks",
            report.cases_passed, report.cases_run
        ),
    );
}

#[test]
fn criterion_08_cover_structure_claims() {
    let report = verify::run_claim3();
    line(
        "8 (cover structure)",
        report.passed() && report.cases_run == 2,
        &format!(
            "{}/{} (all n=3 minimum covers sized 2..3; fixture cover with singleton)",
            report.cases_passed, report.cases_run
        ),
    );
}

#[test]
fn criterion_09_polynomial_colorers() {
    let report = verify::run_poly_colorers(200, 500, 7, 3);
    let expected = 200 + 500 + (1 + 1 + 2 + 8 + 64 + 1024 + 32768 + 2097152);
    line(
        "9 (polynomial colorers)",
        report.passed() && report.cases_run == expected,
        &format!(
            "{}/{} (200 cographs, 500 (P1+P3)-free with zero fallbacks, all graphs n<=7)",
            report.cases_passed, report.cases_run
        ),
    );
}

#[test]
fn criterion_10_classifier_table() {
    use Rule::*;
    let lf = patterns::linear_forest;
    let fixtures: Vec<(&str, Graph, Rule)> = vec![
        ("P1", Graph::path(1).unwrap(), SubP4),
        ("P2", Graph::path(2).unwrap(), SubP4),
        ("P3", Graph::path(3).unwrap(), SubP4),
        ("P4", Graph::path(4).unwrap(), SubP4),
        ("P1+P3", patterns::p1_plus_p3(), SubP1P3),
        ("3P1", lf(&[1, 1, 1]), SubP1P3),
        ("2P2", patterns::two_p2(), LinearForestHard),
        ("2P1+P2", patterns::two_p1_plus_p2(), LinearForestHard),
        ("4P1", lf(&[1, 1, 1, 1]), LinearForestHard),
        ("P5", Graph::path(5).unwrap(), LinearForestHard),
        ("K_{1,3}", patterns::claw(), ContainsClawOrCycle),
        ("C3", Graph::cycle(3).unwrap(), ContainsClawOrCycle),
        ("C4", Graph::cycle(4).unwrap(), ContainsClawOrCycle),
        ("C5", Graph::cycle(5).unwrap(), ContainsClawOrCycle),
        ("paw", patterns::paw(), ContainsClawOrCycle),
        ("K4", Graph::clique(4).unwrap(), ContainsClawOrCycle),
    ];
    let mut ok = 0;
    let mut failures = Vec::new();
    for (name, h, expected_rule) in &fixtures {
        let c = classify_h(h).unwrap();
        let verdict_ok = c.verdict == expected_rule.verdict()
            && (c.verdict == Verdict::PolyTime) == matches!(expected_rule, SubP4 | SubP1P3);
        if c.rule == *expected_rule && verdict_ok {
            ok += 1;
        } else {
            failures.push(format!("{name}: got {:?}/{:?}", c.verdict, c.rule));
        }
    }
    line(
        "10 (classifier table)",
        ok == fixtures.len(),
        &format!(
            "{ok}/{} fixtures{}",
            fixtures.len(),
            if failures.is_empty() {
                String::new()
            } else {
                format!("; failures: {failures:?}")
            }
        ),
    );
}
