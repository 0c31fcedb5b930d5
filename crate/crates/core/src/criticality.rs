//! Critical vertices, critical edges, and contraction-critical edges.
//!
//! A vertex or edge is critical if deleting it drops the chromatic number
//! by exactly one; an edge is contraction-critical if contracting it does.
//! Deletion-criticality and contraction-criticality of edges coincide, but
//! the two scans are computed independently by default so that equivalence
//! stays testable; `assume_prop1` halves the work when the equivalence is
//! taken as given.
//!
//! Per-element subproblems are independent and evaluated in parallel over
//! the shared immutable input; results are sorted, so the report does not
//! depend on scheduling.

use rayon::prelude::*;
use serde::Serialize;

use crate::chromatic::{chi, ChromaticError};
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    pub vertices: bool,
    pub edges: bool,
    pub contraction: bool,
    /// Keep a witness coloring of the reduced graph for each critical
    /// element.
    pub witnesses: bool,
    /// Derive the contraction-critical set from the deletion-critical set
    /// instead of scanning contractions separately.
    pub assume_prop1: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            vertices: true,
            edges: true,
            contraction: true,
            witnesses: false,
            assume_prop1: false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriticalityReport {
    pub chi: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub critical_vertices: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub critical_edges: Option<Vec<Edge>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contraction_critical_edges: Option<Vec<Edge>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_witnesses: Option<Vec<(usize, Vec<usize>)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_witnesses: Option<Vec<(Edge, Vec<usize>)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contraction_witnesses: Option<Vec<(Edge, Vec<usize>)>>,
}

/// Vertices whose deletion drops the chromatic number by one.
pub fn critical_vertices(g: &Graph) -> Result<Vec<usize>, ChromaticError> {
    let base = chi(g)?.chi;
    let mut hits: Vec<usize> = g
        .vertices()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|v| -> Result<Option<usize>, ChromaticError> {
            let reduced = g.delete_vertex(v).expect("vertex in range");
            Ok((chi(&reduced)?.chi + 1 == base).then_some(v))
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    hits.sort_unstable();
    Ok(hits)
}

/// Edges whose deletion drops the chromatic number by one.
pub fn critical_edges(g: &Graph) -> Result<Vec<Edge>, ChromaticError> {
    edge_scan(g, |g, e| g.delete_edge(e).expect("edge exists"))
}

/// Edges whose contraction drops the chromatic number by one.
pub fn contraction_critical_edges(g: &Graph) -> Result<Vec<Edge>, ChromaticError> {
    edge_scan(g, |g, e| g.contract_edge(e).expect("edge exists"))
}

fn edge_scan(
    g: &Graph,
    reduce: impl Fn(&Graph, Edge) -> Graph + Sync,
) -> Result<Vec<Edge>, ChromaticError> {
    let base = chi(g)?.chi;
    let mut hits: Vec<Edge> = g
        .edges()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|e| -> Result<Option<Edge>, ChromaticError> {
            Ok((chi(&reduce(g, e))?.chi + 1 == base).then_some(e))
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    hits.sort_unstable();
    Ok(hits)
}

/// Existence versions with early exit on the first hit.
pub fn has_critical_vertex(g: &Graph) -> Result<bool, ChromaticError> {
    let base = chi(g)?.chi;
    any_hit(g.vertices().collect(), |v| {
        Ok(chi(&g.delete_vertex(v).expect("in range"))?.chi + 1 == base)
    })
}

pub fn has_critical_edge(g: &Graph) -> Result<bool, ChromaticError> {
    let base = chi(g)?.chi;
    any_hit(g.edges().collect(), |e| {
        Ok(chi(&g.delete_edge(e).expect("edge exists"))?.chi + 1 == base)
    })
}

pub fn has_contraction_critical_edge(g: &Graph) -> Result<bool, ChromaticError> {
    let base = chi(g)?.chi;
    any_hit(g.edges().collect(), |e| {
        Ok(chi(&g.contract_edge(e).expect("edge exists"))?.chi + 1 == base)
    })
}

fn any_hit<T: Send>(
    items: Vec<T>,
    check: impl Fn(T) -> Result<bool, ChromaticError> + Sync,
) -> Result<bool, ChromaticError> {
    // try_fold/try_reduce short-circuit across threads on the first hit
    let found = items
        .into_par_iter()
        .try_fold(
            || (),
            |(), item| match check(item) {
                Ok(true) => Err(Ok(())),
                Ok(false) => Ok(()),
                Err(e) => Err(Err(e)),
            },
        )
        .try_reduce(|| (), |(), ()| Ok(()));
    match found {
        Ok(()) => Ok(false),
        Err(Ok(())) => Ok(true),
        Err(Err(e)) => Err(e),
    }
}

/// Full report under the given options. When both edge scans run and
/// `assume_prop1` is off, the two edge sets are computed independently; the
/// equivalence between them is a theorem and is checked in debug builds.
pub fn criticality_report(
    g: &Graph,
    opts: ScanOptions,
) -> Result<CriticalityReport, ChromaticError> {
    let base = chi(g)?.chi;
    let mut report = CriticalityReport {
        chi: base,
        critical_vertices: None,
        critical_edges: None,
        contraction_critical_edges: None,
        vertex_witnesses: None,
        edge_witnesses: None,
        contraction_witnesses: None,
    };
    if opts.vertices {
        let vs = critical_vertices(g)?;
        if opts.witnesses {
            report.vertex_witnesses = Some(
                vs.iter()
                    .map(|&v| Ok((v, chi(&g.delete_vertex(v).expect("in range"))?.coloring)))
                    .collect::<Result<Vec<_>, ChromaticError>>()?,
            );
        }
        report.critical_vertices = Some(vs);
    }
    if opts.edges {
        let es = critical_edges(g)?;
        if opts.witnesses {
            report.edge_witnesses = Some(
                es.iter()
                    .map(|&e| Ok((e, chi(&g.delete_edge(e).expect("edge"))?.coloring)))
                    .collect::<Result<Vec<_>, ChromaticError>>()?,
            );
        }
        report.critical_edges = Some(es);
    }
    if opts.contraction {
        let es = if opts.assume_prop1 && report.critical_edges.is_some() {
            report.critical_edges.clone().unwrap()
        } else {
            contraction_critical_edges(g)?
        };
        if opts.witnesses {
            report.contraction_witnesses = Some(
                es.iter()
                    .map(|&e| Ok((e, chi(&g.contract_edge(e).expect("edge"))?.coloring)))
                    .collect::<Result<Vec<_>, ChromaticError>>()?,
            );
        }
        report.contraction_critical_edges = Some(es);
    }
    if let (Some(de), Some(ce), false) = (
        &report.critical_edges,
        &report.contraction_critical_edges,
        opts.assume_prop1,
    ) {
        debug_assert_eq!(de, ce, "deletion- and contraction-critical edges coincide");
    }
    Ok(report)
}
