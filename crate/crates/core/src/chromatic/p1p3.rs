//! Structural coloring of (P1+P3)-free graphs.
//!
//! A graph is (P1+P3)-free exactly when its complement is paw-free, and a
//! connected paw-free graph is triangle-free or complete multipartite. The
//! colorer decomposes accordingly: disjoint unions take the max over
//! components, joins (detected through a disconnected complement) take the
//! sum over co-pieces, and an indecomposable piece on two or more vertices
//! must have a connected triangle-free complement, where a minimum clique
//! cover is a maximum matching plus singletons. The matching pairs become
//! the color classes, so the certificate comes out of the decomposition.
//!
//! If the triangle-free claim ever fails on a piece the component falls
//! back to the exact solver and the outcome records it; the test suites
//! require the fallback count to stay at zero.

use crate::graph::Graph;
use crate::hfree::{contains_induced, patterns};
use crate::matching::maximum_matching;

use super::{chi_exact_capped, ChromaticError, ColoringResult, Method};

#[derive(Debug, Clone)]
pub struct P1p3Outcome {
    pub result: ColoringResult,
    /// Components the structural decomposition could not handle.
    pub fallback_components: usize,
}

/// Colors a (P1+P3)-free graph through its structural decomposition.
/// Inputs that are not (P1+P3)-free are rejected with a witness.
pub fn chi_p1p3_free(g: &Graph) -> Result<P1p3Outcome, ChromaticError> {
    if let Some(witness) = contains_induced(g, &patterns::p1_plus_p3()) {
        return Err(ChromaticError::NotP1P3Free { witness });
    }
    color_p1p3_free_unchecked(g)
}

/// As [`chi_p1p3_free`] but assuming the freeness check already ran.
pub(super) fn color_p1p3_free_unchecked(g: &Graph) -> Result<P1p3Outcome, ChromaticError> {
    if g.n() == 0 {
        return Ok(P1p3Outcome {
            result: ColoringResult::checked(g, Vec::new(), Method::P1P3Structural),
            fallback_components: 0,
        });
    }
    let mut coloring = vec![0usize; g.n()];
    let mut fallbacks = 0;
    for comp_verts in g.components() {
        let comp = g.induced_subgraph(&comp_verts);
        let local = match decompose(&comp) {
            Some(c) => c,
            None => {
                fallbacks += 1;
                // the structural claim failed; the exact solver is the net
                chi_exact_capped(&comp, comp.n())?.coloring
            }
        };
        for (i, &v) in comp_verts.iter().enumerate() {
            coloring[v] = local[i];
        }
    }
    Ok(P1p3Outcome {
        result: ColoringResult::checked(g, coloring, Method::P1P3Structural),
        fallback_components: fallbacks,
    })
}

/// Optimal coloring of a (P1+P3)-free graph by union/join decomposition
/// with matching-covered leaves. `None` signals a structural surprise.
fn decompose(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 1 {
        return Some(vec![1]);
    }
    let comps = g.components();
    if comps.len() > 1 {
        // disjoint union: color components independently, chi is the max
        let mut colors = vec![0usize; n];
        for verts in comps {
            let local = decompose(&g.induced_subgraph(&verts))?;
            for (i, &v) in verts.iter().enumerate() {
                colors[v] = local[i];
            }
        }
        return Some(colors);
    }
    let co = g.complement();
    let cocomps = co.components();
    if cocomps.len() > 1 {
        // join: color the pieces with disjoint palettes, chi is the sum
        let mut colors = vec![0usize; n];
        let mut offset = 0;
        for verts in cocomps {
            let local = decompose(&g.induced_subgraph(&verts))?;
            for (i, &v) in verts.iter().enumerate() {
                colors[v] = offset + local[i];
            }
            offset += local.iter().copied().max().unwrap_or(0);
        }
        return Some(colors);
    }
    // connected with connected complement: the complement must be
    // triangle-free, so a maximum matching of the complement plus
    // singletons is a minimum clique cover, i.e. an optimal color partition
    if co.find_triangle().is_some() {
        return None;
    }
    let mate = maximum_matching(&co);
    let mut colors = vec![0usize; n];
    let mut next = 0;
    for v in 0..n {
        if colors[v] != 0 {
            continue;
        }
        next += 1;
        colors[v] = next;
        if let Some(u) = mate[v] {
            colors[u] = next;
        }
    }
    Some(colors)
}
