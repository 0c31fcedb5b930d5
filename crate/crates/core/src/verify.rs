//! Machine-checked verification suites: the finite equivalences and
//! structural facts behind each hardness construction, run at desk scale.
//! Any counterexample would contradict a theorem, so failing inputs are
//! serialized for replay.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::chromatic::{
    chi, chi_bruteforce, chi_cotree, chi_exact, chi_p1p3_free, clique_cover_number,
    recognize_cograph,
};
use crate::criticality::{
    contraction_critical_edges, critical_edges, has_contraction_critical_edge, has_critical_edge,
    has_critical_vertex,
};
use crate::dimacs;
use crate::graph::Graph;
use crate::hfree::{is_h_free, patterns};
use crate::random::{
    random_cograph, random_graph, random_p1p3_free, random_triangle_free, rng_from_seed,
};
use crate::reductions::{
    build_clique_proof_instance, build_edge_gadget, build_grotzsch_instance, build_vertex_gadget,
    fixtures, for_each_min_cover, for_each_min_cover_capped, oracle_1in3, random_formula,
    sigma_by_enumeration, to_target_instance, Monotone1in3Formula,
};

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub label: String,
    /// (file name, contents) pairs ready to be persisted for replay.
    pub artifacts: Vec<(String, String)>,
    pub replay: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub cases_run: usize,
    pub cases_passed: usize,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_seconds: Option<f64>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn from_cases(suite: &str, started: Instant, cases: Vec<Option<Counterexample>>) -> Self {
        let cases_run = cases.len();
        let counterexamples: Vec<Counterexample> = cases.into_iter().flatten().collect();
        let report = VerifyReport {
            suite: suite.to_string(),
            cases_run,
            cases_passed: cases_run - counterexamples.len(),
            counterexamples,
            wall_seconds: Some(started.elapsed().as_secs_f64()),
        };
        assert_eq!(
            report.counterexamples.is_empty(),
            report.cases_passed == report.cases_run
        );
        report
    }
}

fn graph_artifact(name: &str, g: &Graph) -> (String, String) {
    (format!("{name}.col"), dimacs::graph_to_string(g))
}

fn formula_artifact(name: &str, f: &Monotone1in3Formula) -> (String, String) {
    (format!("{name}.m1in3"), f.to_string())
}

/// Enumerates the edge masks of all labeled graphs on exactly `n` vertices.
fn all_graphs_on(n: usize) -> impl ParallelIterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0..(1u64 << pairs.len())).into_par_iter().map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).expect("in range")
    })
}

/// Deletion-critical and contraction-critical edge sets coincide, checked
/// exhaustively over all labeled graphs on exactly `n` vertices.
pub fn run_prop1(n: usize) -> VerifyReport {
    let started = Instant::now();
    let cases: Vec<Option<Counterexample>> = all_graphs_on(n)
        .map(|g| {
            let by_deletion = critical_edges(&g).expect("within caps");
            let by_contraction = contraction_critical_edges(&g).expect("within caps");
            if by_deletion == by_contraction {
                None
            } else {
                Some(Counterexample {
                    label: format!(
                        "critical edges {by_deletion:?} != contraction-critical {by_contraction:?}"
                    ),
                    artifacts: vec![graph_artifact("prop1-counterexample", &g)],
                    replay: format!("critical prop1-counterexample.col --all (graph: {g:?})"),
                })
            }
        })
        .collect();
    VerifyReport::from_cases("prop1", started, cases)
}

/// chi(G) <= l iff 2G + K_{l+1} has a contraction-critical edge iff it has
/// a critical vertex; seeded random graphs, l in {2, 3, 4}.
pub fn run_thm3(samples: usize, seed: u64) -> VerifyReport {
    let started = Instant::now();
    let cases: Vec<Option<Counterexample>> = (0..samples as u64)
        .into_par_iter()
        .flat_map(|i| {
            let mut rng = rng_from_seed(seed.wrapping_add(i));
            let n = 3 + (i as usize % 8); // 3..=10
            let g = random_graph(n, 0.2 + 0.6 * (i as f64 / samples.max(1) as f64), &mut rng);
            [2usize, 3, 4].into_par_iter().map(move |ell| (i, g.clone(), ell))
        })
        .map(|(i, g, ell)| {
            let colorable = chi(&g).expect("small graph").chi <= ell;
            let instance = build_clique_proof_instance(&g, ell);
            let has_cc = has_contraction_critical_edge(&instance).expect("within caps");
            let has_cv = has_critical_vertex(&instance).expect("within caps");
            if colorable == has_cc && colorable == has_cv {
                None
            } else {
                Some(Counterexample {
                    label: format!(
                        "sample {i}, l={ell}: chi<=l is {colorable}, contraction-critical {has_cc}, critical vertex {has_cv}"
                    ),
                    artifacts: vec![graph_artifact(&format!("thm3-{i}-{ell}"), &g)],
                    replay: format!("verify thm3 --samples {samples} --seed {seed}"),
                })
            }
        })
        .collect();
    VerifyReport::from_cases("thm3", started, cases)
}

/// chi(G) <= 3 iff 2G + Grötzsch has a critical vertex iff it has a
/// contraction-critical edge; seeded random triangle-free graphs.
pub fn run_thm4(samples: usize, seed: u64) -> VerifyReport {
    let started = Instant::now();
    let cases: Vec<Option<Counterexample>> = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_from_seed(seed.wrapping_add(i));
            let n = 3 + (i as usize % 10); // 3..=12
            let g = random_triangle_free(n, 0.5 + 0.05 * (i % 10) as f64, &mut rng);
            let colorable = chi(&g).expect("small").chi <= 3;
            let instance = build_grotzsch_instance(&g).expect("triangle-free by construction");
            let has_cv = has_critical_vertex(&instance).expect("within caps");
            let has_cc = has_contraction_critical_edge(&instance).expect("within caps");
            if colorable == has_cv && colorable == has_cc {
                None
            } else {
                Some(Counterexample {
                    label: format!(
                        "sample {i}: chi<=3 is {colorable}, critical vertex {has_cv}, contraction-critical {has_cc}"
                    ),
                    artifacts: vec![graph_artifact(&format!("thm4-{i}"), &g)],
                    replay: format!("verify thm4 --samples {samples} --seed {seed}"),
                })
            }
        })
        .collect();
    VerifyReport::from_cases("thm4", started, cases)
}

fn claim2_formulas(n: usize, samples: usize, seed: u64) -> Vec<(String, Monotone1in3Formula)> {
    if n == 3 {
        // the only valid instance at n = 3, up to clause order
        vec![(
            "n3".to_string(),
            random_formula(3, seed).expect("n=3 generates"),
        )]
    } else {
        (0..samples as u64)
            .map(|i| {
                (
                    format!("n{n}-seed{}", seed.wrapping_add(i)),
                    random_formula(n, seed.wrapping_add(i)).expect("generator succeeds"),
                )
            })
            .collect()
    }
}

/// 1-satisfiability iff sigma(vertex gadget) = 10n/3, plus the
/// unconditional lower bound sigma >= 10n/3. Requires 3 | n.
pub fn run_claim2(n: usize, samples: usize, seed: u64) -> VerifyReport {
    assert!(n.is_multiple_of(3), "the sigma target 10n/3 needs 3 | n");
    let started = Instant::now();
    let target = 10 * n / 3;
    let cases: Vec<Option<Counterexample>> = claim2_formulas(n, samples, seed)
        .into_par_iter()
        .map(|(label, f)| {
            let satisfiable = oracle_1in3(&f).expect("within oracle cap").is_some();
            let gadget = build_vertex_gadget(&f);
            let (sigma, _) = clique_cover_number(&gadget.graph).expect("within solver cap");
            if sigma >= target && (satisfiable == (sigma == target)) {
                None
            } else {
                Some(Counterexample {
                    label: format!(
                        "{label}: 1-satisfiable={satisfiable}, sigma={sigma}, target={target}"
                    ),
                    artifacts: vec![formula_artifact(&format!("claim2-{label}"), &f)],
                    replay: format!("verify claim2 --n {n} --samples {samples} --seed {seed}"),
                })
            }
        })
        .collect();
    VerifyReport::from_cases("claim2", started, cases)
}

/// Cover structure: every minimum cover of the (1-satisfiable) n=3 gadget
/// uses only cliques of size 2 or 3 (Claim 3); the stored non-1-satisfiable
/// fixture has a minimum cover containing a singleton (Claim 4).
pub fn run_claim3() -> VerifyReport {
    let started = Instant::now();
    let mut cases = Vec::new();

    // Claim 3 on the unique n = 3 instance
    cases.push((|| {
        let f = random_formula(3, 0).expect("n=3 generates");
        let gadget = build_vertex_gadget(&f).graph;
        let sigma_enum = sigma_by_enumeration(&gadget).expect("21 vertices under cap");
        let (sigma_chi, _) = clique_cover_number(&gadget).expect("within cap");
        if sigma_enum != 10 || sigma_chi != 10 {
            return Some(Counterexample {
                label: format!("n=3 gadget: sigma by enumeration {sigma_enum}, by coloring {sigma_chi}, expected 10"),
                artifacts: vec![formula_artifact("claim3-n3", &f)],
                replay: "verify claim3".to_string(),
            });
        }
        let mut bad_cover: Option<String> = None;
        let visited = for_each_min_cover(&gadget, 10, &mut |parts| {
            if parts.iter().any(|p| p.len() != 2 && p.len() != 3) {
                bad_cover = Some(format!("{parts:?}"));
                false
            } else {
                true
            }
        })
        .expect("under cap");
        match bad_cover {
            None if visited > 0 => None,
            None => Some(Counterexample {
                label: "no minimum cover of size 10 was enumerated".to_string(),
                artifacts: vec![formula_artifact("claim3-n3", &f)],
                replay: "verify claim3".to_string(),
            }),
            Some(parts) => Some(Counterexample {
                label: format!("minimum cover with a part outside sizes 2..3: {parts}"),
                artifacts: vec![formula_artifact("claim3-n3", &f)],
                replay: "verify claim3".to_string(),
            }),
        }
    })());

    // Claim 4 on the stored smallest non-1-satisfiable fixture
    cases.push((|| {
        let f = fixtures::non1sat_smallest();
        debug_assert!(oracle_1in3(&f).expect("tiny").is_none());
        let gadget = build_vertex_gadget(&f).graph;
        let (sigma, _) = clique_cover_number(&gadget).expect("within cap");
        if 3 * sigma <= 10 * f.n() {
            return Some(Counterexample {
                label: format!("fixture sigma {sigma} does not exceed 10n/3"),
                artifacts: vec![formula_artifact("claim4-fixture", &f)],
                replay: "verify claim3".to_string(),
            });
        }
        let mut found_singleton = false;
        for_each_min_cover_capped(&gadget, sigma, 32, &mut |parts| {
            if parts.iter().any(|p| p.len() == 1) {
                found_singleton = true;
                false
            } else {
                true
            }
        })
        .expect("28 vertices under the raised cap");
        if found_singleton {
            None
        } else {
            Some(Counterexample {
                label: "no minimum cover of the fixture gadget contains a singleton".to_string(),
                artifacts: vec![formula_artifact("claim4-fixture", &f)],
                replay: "verify claim3".to_string(),
            })
        }
    })());

    VerifyReport::from_cases("claim3", started, cases)
}

/// 1-satisfiability iff the complement of the C7 gadget has no critical
/// vertex; the unique n=3 instance plus a seeded batch at n=6.
pub fn run_main_vertex(samples: usize, seed: u64) -> VerifyReport {
    let started = Instant::now();
    let mut formulas = vec![(
        "n3".to_string(),
        random_formula(3, seed).expect("n=3 generates"),
    )];
    formulas.extend((0..samples as u64).map(|i| {
        (
            format!("n6-seed{}", seed.wrapping_add(i)),
            random_formula(6, seed.wrapping_add(i)).expect("generator succeeds"),
        )
    }));
    let cases: Vec<Option<Counterexample>> = formulas
        .into_par_iter()
        .map(|(label, f)| {
            let satisfiable = oracle_1in3(&f).expect("within cap").is_some();
            let target = to_target_instance(&build_vertex_gadget(&f));
            let has_cv = has_critical_vertex(&target).expect("within caps");
            if satisfiable == !has_cv {
                None
            } else {
                Some(Counterexample {
                    label: format!(
                        "{label}: 1-satisfiable={satisfiable} but critical vertex={has_cv}"
                    ),
                    artifacts: vec![formula_artifact(&format!("main-vertex-{label}"), &f)],
                    replay: format!("verify main-vertex --samples {samples} --seed {seed}"),
                })
            }
        })
        .collect();
    VerifyReport::from_cases("main-vertex", started, cases)
}

/// 1-satisfiability iff the complement of the C11 gadget has no critical
/// edge; the unique n=3 instance plus the stored non-1-satisfiable fixture.
pub fn run_main_edge() -> VerifyReport {
    let started = Instant::now();
    let mut cases = Vec::new();

    let f3 = random_formula(3, 0).expect("n=3 generates");
    let target = to_target_instance(&build_edge_gadget(&f3));
    let has_ce = has_critical_edge(&target).expect("within caps");
    cases.push(if !has_ce {
        None
    } else {
        Some(Counterexample {
            label: "1-satisfiable n=3 instance: complement of C11 gadget has a critical edge"
                .to_string(),
            artifacts: vec![formula_artifact("main-edge-n3", &f3)],
            replay: "verify main-edge".to_string(),
        })
    });

    let f = fixtures::non1sat_smallest();
    let target = to_target_instance(&build_edge_gadget(&f));
    let has_ce = has_critical_edge(&target).expect("within caps");
    cases.push(if has_ce {
        None
    } else {
        Some(Counterexample {
            label: "non-1-satisfiable fixture: complement of C11 gadget has no critical edge"
                .to_string(),
            artifacts: vec![formula_artifact("main-edge-fixture", &f)],
            replay: "verify main-edge".to_string(),
        })
    });

    VerifyReport::from_cases("main-edge", started, cases)
}

/// Gadget structure for generated formulas: vertex counts, omega = 3, and
/// the freeness of both the gadget and its complement.
pub fn run_gadget_structure(ns: &[usize], seeds_per_n: usize, seed: u64) -> VerifyReport {
    let started = Instant::now();
    let gadget_family = patterns::gadget_family();
    let target_family = patterns::target_family();
    let jobs: Vec<(usize, u64)> = ns
        .iter()
        .flat_map(|&n| (0..seeds_per_n as u64).map(move |i| (n, seed.wrapping_add(i))))
        .collect();
    let cases: Vec<Option<Counterexample>> = jobs
        .into_par_iter()
        .flat_map(|(n, s)| {
            let f = random_formula(n, s).expect("generator succeeds");
            [(f.clone(), true), (f, false)].into_par_iter()
        })
        .map(|(f, vertex_variant)| {
            let (gg, expect_n) = if vertex_variant {
                (build_vertex_gadget(&f), 7 * f.n())
            } else {
                (build_edge_gadget(&f), 11 * f.n())
            };
            let mut problems = Vec::new();
            if gg.graph.n() != expect_n {
                problems.push(format!("|V| = {} != {expect_n}", gg.graph.n()));
            }
            if let Err(e) = gg.validate() {
                problems.push(e);
            }
            if gg.graph.find_triangle().is_none() {
                problems.push("omega < 3".into());
            }
            let free = is_h_free(&gg.graph, &gadget_family);
            if !free.all_free() {
                problems.push(format!("gadget family hit: {:?}", free.hits));
            }
            if free.hits[2].is_some() {
                problems.push("omega > 3 (K4 present)".into());
            }
            let co_free = is_h_free(&to_target_instance(&gg), &target_family);
            if !co_free.all_free() {
                problems.push(format!("target family hit: {:?}", co_free.hits));
            }
            if problems.is_empty() {
                None
            } else {
                Some(Counterexample {
                    label: format!(
                        "n={}, {} variant: {}",
                        f.n(),
                        if vertex_variant { "vertex" } else { "edge" },
                        problems.join("; ")
                    ),
                    artifacts: vec![formula_artifact("gadget-structure", &f)],
                    replay: "verify gadget-structure".to_string(),
                })
            }
        })
        .collect();
    VerifyReport::from_cases("gadget-structure", started, cases)
}

/// The polynomial colorers against their oracles: cotree coloring on random
/// cographs, the structural (P1+P3)-free colorer on sampled class members
/// (zero fallbacks allowed), and the exact solver against brute force on
/// every labeled graph with at most `brute_max_n` vertices.
pub fn run_poly_colorers(
    cograph_samples: usize,
    p1p3_samples: usize,
    brute_max_n: usize,
    seed: u64,
) -> VerifyReport {
    let started = Instant::now();
    let mut cases: Vec<Option<Counterexample>> = Vec::new();

    let cograph_cases: Vec<Option<Counterexample>> = (0..cograph_samples as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_from_seed(seed.wrapping_add(i));
            let n = 1 + (i as usize % 40);
            let g = random_cograph(n, &mut rng);
            let t = match recognize_cograph(&g) {
                Some(t) => t,
                None => {
                    return Some(Counterexample {
                        label: format!("cograph sample {i} not recognized"),
                        artifacts: vec![graph_artifact(&format!("cograph-{i}"), &g)],
                        replay: format!("verify poly-colorers --seed {seed}"),
                    })
                }
            };
            let by_cotree = chi_cotree(&t).chi;
            let by_exact = chi_exact(&g).expect("n <= 40").chi;
            if by_cotree == by_exact {
                None
            } else {
                Some(Counterexample {
                    label: format!("cograph sample {i}: cotree {by_cotree} != exact {by_exact}"),
                    artifacts: vec![graph_artifact(&format!("cograph-{i}"), &g)],
                    replay: format!("verify poly-colorers --seed {seed}"),
                })
            }
        })
        .collect();
    cases.extend(cograph_cases);

    let p1p3_cases: Vec<Option<Counterexample>> = (0..p1p3_samples as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_from_seed(seed.wrapping_add(0x5eed).wrapping_add(i));
            let g = random_p1p3_free(12, &mut rng);
            let outcome = chi_p1p3_free(&g).expect("sampler stays in class");
            let by_exact = chi_exact(&g).expect("n <= 12").chi;
            if outcome.result.chi == by_exact && outcome.fallback_components == 0 {
                None
            } else {
                Some(Counterexample {
                    label: format!(
                        "p1p3 sample {i}: structural {} vs exact {by_exact}, fallbacks {}",
                        outcome.result.chi, outcome.fallback_components
                    ),
                    artifacts: vec![graph_artifact(&format!("p1p3-{i}"), &g)],
                    replay: format!("verify poly-colorers --seed {seed}"),
                })
            }
        })
        .collect();
    cases.extend(p1p3_cases);

    for n in 0..=brute_max_n {
        let brute_cases: Vec<Option<Counterexample>> = all_graphs_on(n)
            .map(|g| {
                let by_brute = chi_bruteforce(&g).expect("n <= 10");
                let by_exact = chi_exact(&g).expect("n <= 10").chi;
                if by_brute == by_exact {
                    None
                } else {
                    Some(Counterexample {
                        label: format!("exact {by_exact} != brute force {by_brute}"),
                        artifacts: vec![graph_artifact("brute-disagreement", &g)],
                        replay: format!("graph: {g:?}"),
                    })
                }
            })
            .collect();
        cases.extend(brute_cases);
    }

    VerifyReport::from_cases("poly-colorers", started, cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prop1_small_scale() {
        // exhaustive over every order below the acceptance scale
        for n in 1..=5usize {
            let report = run_prop1(n);
            assert_eq!(report.cases_run, 1usize << (n * (n - 1) / 2));
            assert!(report.passed(), "n={n}: {:?}", report.counterexamples);
        }
    }

    #[test]
    fn thm3_smoke() {
        let report = run_thm3(4, 7);
        assert_eq!(report.cases_run, 12);
        assert!(report.passed(), "{:?}", report.counterexamples);
    }

    #[test]
    fn thm4_smoke() {
        let report = run_thm4(3, 7);
        assert_eq!(report.cases_run, 3);
        assert!(report.passed(), "{:?}", report.counterexamples);
    }

    #[test]
    fn claim2_n3_single_case() {
        let report = run_claim2(3, 1, 0);
        assert_eq!(report.cases_run, 1);
        assert!(report.passed(), "{:?}", report.counterexamples);
    }

    #[test]
    fn main_edge_both_directions() {
        let report = run_main_edge();
        assert_eq!(report.cases_run, 2);
        assert!(report.passed(), "{:?}", report.counterexamples);
    }

    #[test]
    fn poly_colorers_smoke() {
        let report = run_poly_colorers(10, 20, 4, 3);
        assert_eq!(report.cases_run, 10 + 20 + 1 + 1 + 2 + 8 + 64);
        assert!(report.passed(), "{:?}", report.counterexamples);
    }

    #[test]
    fn gadget_structure_smoke() {
        let report = run_gadget_structure(&[3, 6], 1, 5);
        assert_eq!(report.cases_run, 4);
        assert!(report.passed(), "{:?}", report.counterexamples);
    }
}
