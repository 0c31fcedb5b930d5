//! Chromatic number with certificates.
//!
//! `chi` dispatches to a polynomial-time colorer when the input is a
//! cograph or (P1+P3)-free, and otherwise to the exact branch-and-bound
//! solver. Every returned coloring is validated: proper, and using exactly
//! `chi` distinct colors.

mod brute;
mod cotree;
mod cover;
mod exact;
mod p1p3;

pub use brute::{bruteforce_coloring, chi_bruteforce, BRUTE_VERTEX_CAP};
pub use cotree::{chi_cotree, recognize_cograph, Cotree};
pub use cover::{clique_cover_number, clique_cover_number_capped, CliqueCover};
pub use exact::{chi_exact, chi_exact_capped, DEFAULT_VERTEX_CAP, MAX_COLORS};
pub use p1p3::{chi_p1p3_free, P1p3Outcome};

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::hfree::{contains_induced, patterns};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChromaticError {
    #[error("graph on {n} vertices exceeds the solver cap of {cap} (raise the cap explicitly if intended)")]
    VertexCap { n: usize, cap: usize },
    #[error("coloring search would need more than {max} colors")]
    ColorCap { max: usize },
    #[error("graph is not (P1+P3)-free; witness embedding {witness:?}")]
    NotP1P3Free { witness: Vec<usize> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    Exact,
    Cotree,
    P1P3Structural,
    BruteForce,
}

/// A chromatic number together with a certificate coloring (colors
/// `1..=chi`, one per vertex).
#[derive(Debug, Clone, Serialize)]
pub struct ColoringResult {
    pub chi: usize,
    pub coloring: Vec<usize>,
    pub method: Method,
}

impl ColoringResult {
    /// Builds a result after asserting the certificate: proper, and using
    /// exactly the colors `1..=chi`.
    pub(crate) fn checked(g: &Graph, coloring: Vec<usize>, method: Method) -> ColoringResult {
        let chi = coloring.iter().copied().max().unwrap_or(0);
        let result = ColoringResult {
            chi,
            coloring,
            method,
        };
        assert!(
            result.is_valid_for(g),
            "internal error: invalid certificate coloring ({method:?})"
        );
        result
    }

    /// True iff the certificate is a proper coloring of `g` using exactly
    /// the colors `1..=chi`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.coloring.len() != g.n() {
            return false;
        }
        let mut seen = vec![false; self.chi];
        for (v, &c) in self.coloring.iter().enumerate() {
            if c == 0 || c > self.chi {
                return false;
            }
            seen[c - 1] = true;
            for w in g.neighbors(v) {
                if self.coloring[w] == c {
                    return false;
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// Chromatic number of `g`, routed through the fastest applicable method:
/// cotree coloring for cographs, the structural colorer for (P1+P3)-free
/// graphs, exact branch-and-bound otherwise.
pub fn chi(g: &Graph) -> Result<ColoringResult, ChromaticError> {
    if g.n() == 0 {
        return Ok(ColoringResult::checked(g, Vec::new(), Method::Exact));
    }
    if let Some(t) = recognize_cograph(g) {
        let r = chi_cotree(&t);
        assert!(
            r.is_valid_for(g),
            "cotree certificate does not fit the input"
        );
        return Ok(r);
    }
    if contains_induced(g, &patterns::p1_plus_p3()).is_none() {
        let outcome = p1p3::color_p1p3_free_unchecked(g)?;
        assert!(outcome.result.is_valid_for(g));
        return Ok(outcome.result);
    }
    chi_exact(g)
}
