//! Induced-subgraph detection, linear-forest recognition, and the
//! complexity classifier for a single forbidden induced subgraph `H`.
//!
//! The classifier's decision tree: if `H` embeds in `P4` or in `P1+P3` the
//! three criticality problems are polynomial-time solvable on `H`-free
//! graphs; if `H` has a cycle or an induced claw they are NP-hard; in the
//! remaining case `H` is a linear forest outside the easy classes and they
//! are co-NP-hard.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HfreeError {
    #[error("the forbidden graph H must be nonempty")]
    EmptyPattern,
}

/// Searches for an induced embedding of `pattern` into `host`: an injective
/// vertex map preserving both adjacency and non-adjacency. Returns the image
/// of each pattern vertex on success. Plain backtracking with degree
/// pruning; patterns here are small.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let pn = pattern.n();
    if pn == 0 {
        return Some(Vec::new());
    }
    if pn > host.n() {
        return None;
    }

    // Order pattern vertices: highest degree first, then prefer vertices
    // with an already-placed neighbor so adjacency constraints bind early.
    let order = pattern_order(pattern);
    let host_deg: Vec<usize> = host.vertices().map(|v| host.degree(v)).collect();
    let pat_deg: Vec<usize> = pattern.vertices().map(|v| pattern.degree(v)).collect();

    let mut image = vec![usize::MAX; pn];
    let mut used = vec![false; host.n()];
    if embed(
        host, pattern, &order, 0, &mut image, &mut used, &host_deg, &pat_deg,
    ) {
        Some(image)
    } else {
        None
    }
}

pub fn contains_induced_check(host: &Graph, pattern: &Graph) -> bool {
    contains_induced(host, pattern).is_some()
}

fn pattern_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let best = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let attached = pattern.neighbors(v).filter(|&u| placed[u]).count();
                (attached, pattern.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[best] = true;
        order.push(best);
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn embed(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    host_deg: &[usize],
    pat_deg: &[usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    'candidates: for cand in host.vertices() {
        if used[cand] || host_deg[cand] < pat_deg[p] {
            continue;
        }
        for &q in &order[..depth] {
            let mapped = image[q];
            if pattern.has_edge(p, q) != host.has_edge(cand, mapped) {
                continue 'candidates;
            }
        }
        image[p] = cand;
        used[cand] = true;
        if embed(
            host,
            pattern,
            order,
            depth + 1,
            image,
            used,
            host_deg,
            pat_deg,
        ) {
            return true;
        }
        image[p] = usize::MAX;
        used[cand] = false;
    }
    false
}

/// Per-pattern outcome of a freeness check: the first witness embedding if
/// the pattern occurs.
#[derive(Debug, Clone, Serialize)]
pub struct FreenessReport {
    pub hits: Vec<Option<Vec<usize>>>,
}

impl FreenessReport {
    pub fn all_free(&self) -> bool {
        self.hits.iter().all(Option::is_none)
    }
}

/// Checks `g` against every pattern; `g` is family-free iff all are absent.
pub fn is_h_free(g: &Graph, patterns: &[Graph]) -> FreenessReport {
    FreenessReport {
        hits: patterns.iter().map(|p| contains_induced(g, p)).collect(),
    }
}

/// True iff every component of `h` is a path: max degree at most 2 and no
/// cycles.
pub fn is_linear_forest(h: &Graph) -> bool {
    if h.max_degree() > 2 {
        return false;
    }
    // with degrees <= 2, acyclicity is edge-count per component
    h.edge_count() + h.components().len() == h.n()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    PolyTime,
    NpHard,
    CoNpHard,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rule {
    SubP4,
    SubP1P3,
    ContainsClawOrCycle,
    LinearForestHard,
}

impl Rule {
    pub fn verdict(self) -> Verdict {
        match self {
            Rule::SubP4 | Rule::SubP1P3 => Verdict::PolyTime,
            Rule::ContainsClawOrCycle => Verdict::NpHard,
            Rule::LinearForestHard => Verdict::CoNpHard,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HClassification {
    pub verdict: Verdict,
    pub rule: Rule,
}

impl HClassification {
    fn from_rule(rule: Rule) -> Self {
        HClassification {
            verdict: rule.verdict(),
            rule,
        }
    }
}

/// Classifies the complexity of Critical Vertex / Critical Edge /
/// Contraction-Critical Edge restricted to `h`-free graphs.
pub fn classify_h(h: &Graph) -> Result<HClassification, HfreeError> {
    if h.n() == 0 {
        return Err(HfreeError::EmptyPattern);
    }
    let p4 = Graph::path(4).unwrap();
    if contains_induced_check(&p4, h) {
        return Ok(HClassification::from_rule(Rule::SubP4));
    }
    if contains_induced_check(&patterns::p1_plus_p3(), h) {
        return Ok(HClassification::from_rule(Rule::SubP1P3));
    }
    if !is_linear_forest(h) {
        // a non-linear-forest has a cycle, or is acyclic with a degree-3
        // vertex whose neighborhood is independent: an induced claw
        return Ok(HClassification::from_rule(Rule::ContainsClawOrCycle));
    }
    Ok(HClassification::from_rule(Rule::LinearForestHard))
}

/// Small named graphs used as forbidden patterns throughout.
pub mod patterns {
    use crate::graph::Graph;

    /// Disjoint union of paths with the given orders.
    pub fn linear_forest(path_orders: &[usize]) -> Graph {
        let mut g = Graph::empty(0).unwrap();
        for &r in path_orders {
            g = g.disjoint_union(&Graph::path(r).unwrap());
        }
        g
    }

    pub fn p1_plus_p3() -> Graph {
        linear_forest(&[1, 3])
    }

    pub fn two_p2() -> Graph {
        linear_forest(&[2, 2])
    }

    pub fn two_p1_plus_p2() -> Graph {
        linear_forest(&[1, 1, 2])
    }

    /// The claw `K_{1,3}`.
    pub fn claw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    /// A triangle with a pendant vertex.
    pub fn paw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap()
    }

    /// The four forbidden patterns of the gadget class:
    /// `C4, C5, K4, complement(2P1+P2)`.
    pub fn gadget_family() -> Vec<Graph> {
        vec![
            Graph::cycle(4).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::clique(4).unwrap(),
            two_p1_plus_p2().complement(),
        ]
    }

    /// The four forbidden patterns of the complement target class:
    /// `C5, 4P1, 2P1+P2, 2P2`.
    pub fn target_family() -> Vec<Graph> {
        vec![
            Graph::cycle(5).unwrap(),
            linear_forest(&[1, 1, 1, 1]),
            two_p1_plus_p2(),
            two_p2(),
        ]
    }
}
