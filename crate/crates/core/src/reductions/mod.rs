//! Hardness-instance builders and their supporting oracles: the
//! clique-proof construction 2G + K_{l+1}, the triangle-free construction
//! 2G + Grötzsch, the Monotone 1-in-3-SAT clause/variable gadgets in both
//! the C7 (vertex) and C11 (edge) variants, and an exhaustive minimum
//! clique cover enumerator for the cover-structure claims.

mod cover_enum;
mod formula;
mod gadgets;

pub use cover_enum::{
    for_each_min_cover, for_each_min_cover_capped, sigma_by_enumeration,
    sigma_by_enumeration_capped, EnumError, ENUM_VERTEX_CAP,
};
pub use formula::{
    fixtures, oracle_1in3, parse_formula, random_formula, FormulaError, Monotone1in3Formula,
    Violation, ORACLE_CAP,
};
pub use gadgets::{
    build_clique_proof_instance, build_edge_gadget, build_grotzsch_instance, build_vertex_gadget,
    to_target_instance, GadgetGraph, GadgetVariant, ReductionError, Role,
};
