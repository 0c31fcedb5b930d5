//! Clique covering number through complement duality: sigma(G) is the
//! chromatic number of the complement, and the color classes of the
//! complement map back to the cliques of the cover.

use serde::Serialize;

use crate::graph::Graph;

use super::{chi_exact_capped, ChromaticError, DEFAULT_VERTEX_CAP};

/// A partition of the vertices into cliques.
#[derive(Debug, Clone, Serialize)]
pub struct CliqueCover {
    pub cliques: Vec<Vec<usize>>,
}

impl CliqueCover {
    pub fn size(&self) -> usize {
        self.cliques.len()
    }

    /// True iff the parts are disjoint, exhaustive, and each induces a
    /// clique of `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for clique in &self.cliques {
            for (i, &u) in clique.iter().enumerate() {
                if u >= g.n() || seen[u] {
                    return false;
                }
                seen[u] = true;
                for &v in &clique[i + 1..] {
                    if !g.has_edge(u, v) {
                        return false;
                    }
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

pub fn clique_cover_number(g: &Graph) -> Result<(usize, CliqueCover), ChromaticError> {
    clique_cover_number_capped(g, DEFAULT_VERTEX_CAP)
}

pub fn clique_cover_number_capped(
    g: &Graph,
    cap: usize,
) -> Result<(usize, CliqueCover), ChromaticError> {
    let co = g.complement();
    let coloring = chi_exact_capped(&co, cap)?;
    let mut cliques: Vec<Vec<usize>> = vec![Vec::new(); coloring.chi];
    for (v, &c) in coloring.coloring.iter().enumerate() {
        cliques[c - 1].push(v);
    }
    let cover = CliqueCover { cliques };
    assert!(
        cover.validate(g),
        "complement color classes must be cliques"
    );
    Ok((coloring.chi, cover))
}
