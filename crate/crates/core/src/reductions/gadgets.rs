//! Builders for the hardness instances.
//!
//! For a Monotone 1-in-3-SAT formula, every clause c = (x, y, z) becomes an
//! induced cycle (C7 for the vertex variant, C11 for the edge variant) with
//! the three clause-variable vertices c(x), c(y), c(z) pairwise
//! non-adjacent on it, and every variable becomes a triangle over its three
//! clause-variable vertices. The complement of the gadget is the actual
//! Critical Vertex / Critical Edge instance in the target class.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

use super::formula::Monotone1in3Formula;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error(
        "input graph contains the triangle {witness:?}, but the construction needs a C3-free graph"
    )]
    Triangle { witness: [usize; 3] },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum GadgetVariant {
    VertexC7,
    EdgeC11,
}

impl GadgetVariant {
    /// Vertices per clause gadget.
    pub fn gadget_size(self) -> usize {
        match self {
            GadgetVariant::VertexC7 => 7,
            GadgetVariant::EdgeC11 => 11,
        }
    }

    /// Positions of c(x), c(y), c(z) on the cycle, in clause order.
    fn clause_var_positions(self) -> [usize; 3] {
        match self {
            // c(x) a1 a2 c(y) a3 c(z) a4
            GadgetVariant::VertexC7 => [0, 3, 5],
            // c(x) a1 a2 c(y) a3 a4 a5 c(z) a6 a7 a8
            GadgetVariant::EdgeC11 => [0, 3, 7],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Role {
    /// The vertex c(x) for clause `clause` and variable `var`.
    ClauseVar { clause: usize, var: usize },
    /// The i-th filler vertex a_i^c of clause `clause` (1-based).
    Filler { clause: usize, index: usize },
}

/// A clause/variable gadget graph along with the provenance of each vertex.
#[derive(Debug, Clone)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub variant: GadgetVariant,
    pub formula: Monotone1in3Formula,
}

impl GadgetGraph {
    /// Structural self-check: vertex count, induced cycles in the stated
    /// cyclic order, variable triangles, and the exact edge count (nothing
    /// else is present).
    pub fn validate(&self) -> Result<(), String> {
        let size = self.variant.gadget_size();
        let n = self.formula.n();
        let g = &self.graph;
        if g.n() != size * n {
            return Err(format!("expected {} vertices, found {}", size * n, g.n()));
        }
        if g.edge_count() != size * n + 3 * n {
            return Err(format!(
                "expected {} edges, found {}",
                size * n + 3 * n,
                g.edge_count()
            ));
        }
        for c in 0..self.formula.m() {
            let base = c * size;
            for i in 0..size {
                for j in i + 1..size {
                    let consecutive = j == i + 1 || (i == 0 && j == size - 1);
                    if g.has_edge(base + i, base + j) != consecutive {
                        return Err(format!(
                            "clause {} is not an induced {}-cycle at positions ({i}, {j})",
                            c + 1,
                            size
                        ));
                    }
                }
            }
        }
        for var in 0..n {
            let occ = self.formula.occurrences(var);
            let verts: Vec<usize> = occ
                .iter()
                .map(|&c| clause_var_vertex(&self.formula, self.variant, c, var))
                .collect();
            for i in 0..3 {
                for j in i + 1..3 {
                    if !g.has_edge(verts[i], verts[j]) {
                        return Err(format!("variable {} triangle is incomplete", var + 1));
                    }
                }
            }
        }
        Ok(())
    }
}

fn clause_var_vertex(
    f: &Monotone1in3Formula,
    variant: GadgetVariant,
    clause: usize,
    var: usize,
) -> usize {
    let slot = f.clauses()[clause]
        .iter()
        .position(|&v| v == var)
        .expect("variable occurs in clause");
    clause * variant.gadget_size() + variant.clause_var_positions()[slot]
}

fn build_gadget(f: &Monotone1in3Formula, variant: GadgetVariant) -> GadgetGraph {
    let size = variant.gadget_size();
    let n = f.n();
    let positions = variant.clause_var_positions();
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(size * n + 3 * n);
    for c in 0..f.m() {
        let base = c * size;
        for i in 0..size {
            edges.push((base + i, base + (i + 1) % size));
        }
    }
    for var in 0..n {
        let occ = f.occurrences(var);
        let verts: Vec<usize> = occ
            .iter()
            .map(|&c| clause_var_vertex(f, variant, c, var))
            .collect();
        edges.push((verts[0], verts[1]));
        edges.push((verts[1], verts[2]));
        edges.push((verts[0], verts[2]));
    }
    let mut graph = Graph::from_edges(size * n, &edges).expect("gadget stays in range");

    let mut roles = vec![
        Role::Filler {
            clause: 0,
            index: 0
        };
        size * n
    ];
    for c in 0..f.m() {
        let base = c * size;
        let mut filler = 0;
        for pos in 0..size {
            let v = base + pos;
            if let Some(slot) = positions.iter().position(|&p| p == pos) {
                let var = f.clauses()[c][slot];
                roles[v] = Role::ClauseVar { clause: c, var };
                graph.set_label(v, format!("c{}(x{})", c + 1, var + 1));
            } else {
                filler += 1;
                roles[v] = Role::Filler {
                    clause: c,
                    index: filler,
                };
                graph.set_label(v, format!("a{}^c{}", filler, c + 1));
            }
        }
    }
    let gg = GadgetGraph {
        graph,
        roles,
        variant,
        formula: f.clone(),
    };
    debug_assert_eq!(gg.validate(), Ok(()));
    gg
}

/// The C7 clause-gadget graph of the vertex reduction; 7n vertices.
pub fn build_vertex_gadget(f: &Monotone1in3Formula) -> GadgetGraph {
    build_gadget(f, GadgetVariant::VertexC7)
}

/// The C11 clause-gadget graph of the edge reduction; 11n vertices.
pub fn build_edge_gadget(f: &Monotone1in3Formula) -> GadgetGraph {
    build_gadget(f, GadgetVariant::EdgeC11)
}

/// The complement of the gadget: the instance of Critical Vertex /
/// Critical Edge in the target class. Labels are preserved.
pub fn to_target_instance(gg: &GadgetGraph) -> Graph {
    gg.graph.complement()
}

/// The clique-proof construction 2G + K_{l+1}; vertex labels record block
/// membership.
pub fn build_clique_proof_instance(g: &Graph, ell: usize) -> Graph {
    assert!(ell >= 1, "the construction needs l >= 1");
    let mut out = g
        .disjoint_union(g)
        .disjoint_union(&Graph::clique(ell + 1).expect("l+1 >= 2"));
    for v in 0..g.n() {
        out.set_label(v, format!("g1.{v}"));
        out.set_label(g.n() + v, format!("g2.{v}"));
    }
    for i in 0..=ell {
        out.set_label(2 * g.n() + i, format!("k.{i}"));
    }
    out
}

/// The triangle-free construction 2G + Grötzsch; the input must be C3-free.
pub fn build_grotzsch_instance(g: &Graph) -> Result<Graph, ReductionError> {
    if let Some(witness) = g.find_triangle() {
        return Err(ReductionError::Triangle { witness });
    }
    let out = g.disjoint_union(g).disjoint_union(&Graph::grotzsch());
    debug_assert!(out.find_triangle().is_none());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::{chi_exact, clique_cover_number};
    use crate::criticality::{has_contraction_critical_edge, has_critical_vertex};
    use crate::hfree::{is_h_free, patterns};
    use crate::reductions::formula::Monotone1in3Formula;

    fn all_xyz() -> Monotone1in3Formula {
        Monotone1in3Formula::new(3, vec![[0, 1, 2]; 3]).unwrap()
    }

    #[test]
    fn vertex_gadget_counts_and_structure() {
        let gg = build_vertex_gadget(&all_xyz());
        assert_eq!(gg.graph.n(), 21);
        assert_eq!(gg.graph.edge_count(), 30); // 7 cycle edges x 3 + 3 triangles x 3
        assert_eq!(gg.validate(), Ok(()));
        assert_eq!(gg.graph.label(0), Some("c1(x1)"));
        assert_eq!(gg.graph.label(1), Some("a1^c1"));
    }

    #[test]
    fn edge_gadget_counts() {
        let gg = build_edge_gadget(&all_xyz());
        assert_eq!(gg.graph.n(), 33);
        assert_eq!(gg.graph.edge_count(), 42);
        assert_eq!(gg.validate(), Ok(()));
    }

    #[test]
    fn gadget_freeness_and_clique_number() {
        for gg in [
            build_vertex_gadget(&all_xyz()),
            build_edge_gadget(&all_xyz()),
        ] {
            let report = is_h_free(&gg.graph, &patterns::gadget_family());
            assert!(report.all_free(), "{:?}", report.hits);
            // omega = 3: a triangle exists, K4 does not
            assert!(gg.graph.find_triangle().is_some());
            let target = is_h_free(&to_target_instance(&gg), &patterns::target_family());
            assert!(target.all_free(), "{:?}", target.hits);
        }
    }

    #[test]
    fn sigma_of_n3_vertex_gadget_is_ten() {
        let gg = build_vertex_gadget(&all_xyz());
        let (sigma, cover) = clique_cover_number(&gg.graph).unwrap();
        assert_eq!(sigma, 10); // 10n/3 at n = 3
        assert!(cover.validate(&gg.graph));
        // duality: the complement's chromatic number is sigma
        assert_eq!(chi_exact(&to_target_instance(&gg)).unwrap().chi, 10);
    }

    #[test]
    fn clique_proof_instance_shape() {
        let c5 = Graph::cycle(5).unwrap();
        let inst = build_clique_proof_instance(&c5, 3);
        assert_eq!(inst.n(), 14);
        assert_eq!(chi_exact(&inst).unwrap().chi, 4);
        assert_eq!(inst.label(0), Some("g1.0"));
        assert_eq!(inst.label(5), Some("g2.0"));
        assert_eq!(inst.label(10), Some("k.0"));

        // empty G, l = 1: K2 plus isolated vertices has a critical edge
        let empty = Graph::empty(3).unwrap();
        let inst = build_clique_proof_instance(&empty, 1);
        assert!(has_contraction_critical_edge(&inst).unwrap());
    }

    #[test]
    fn clause_internal_order_does_not_affect_the_equivalences() {
        // the variable-to-slot assignment follows the clause line; permuting
        // a clause permutes gadget labels but not the iff-claims
        let base = all_xyz();
        let permuted = Monotone1in3Formula::new(3, vec![[1, 0, 2], [0, 1, 2], [0, 1, 2]]).unwrap();
        for f in [&base, &permuted] {
            let gadget = build_vertex_gadget(f);
            assert_eq!(gadget.validate(), Ok(()));
            let (sigma, _) = clique_cover_number(&gadget.graph).unwrap();
            assert_eq!(sigma, 10);
            assert!(!has_critical_vertex(&to_target_instance(&gadget)).unwrap());
        }
    }

    #[test]
    fn grotzsch_instance_cases() {
        // chi(K2) = 2 <= 3: the instance has a critical vertex
        let inst = build_grotzsch_instance(&Graph::clique(2).unwrap()).unwrap();
        assert!(inst.find_triangle().is_none());
        assert_eq!(chi_exact(&inst).unwrap().chi, 4);
        assert!(has_critical_vertex(&inst).unwrap());

        // the Grötzsch graph itself is triangle-free with chi = 4 > 3:
        // no critical vertex in 2G + F
        let inst = build_grotzsch_instance(&Graph::grotzsch()).unwrap();
        assert!(!has_critical_vertex(&inst).unwrap());

        // triangle input is rejected with a witness
        assert!(matches!(
            build_grotzsch_instance(&Graph::clique(3).unwrap()),
            Err(ReductionError::Triangle { .. })
        ));
    }
}
