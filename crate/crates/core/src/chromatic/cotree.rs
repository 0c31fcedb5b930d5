//! Cograph recognition and linear-time cotree coloring.
//!
//! A graph on two or more vertices is a cograph iff it or its complement is
//! disconnected; recursing on components / co-components yields the cotree.
//! Recognition fails exactly when some subset is connected with a connected
//! complement, which happens iff the graph contains an induced P4.

use crate::graph::Graph;

use super::{ColoringResult, Method};

/// Rooted cotree: leaves are vertices of the source graph; internal nodes
/// alternate disjoint-union and join over at least two children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    pub fn leaf_count(&self) -> usize {
        match self {
            Cotree::Leaf(_) => 1,
            Cotree::Union(cs) | Cotree::Join(cs) => cs.iter().map(Cotree::leaf_count).sum(),
        }
    }

    fn leaves_into(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Union(cs) | Cotree::Join(cs) => {
                for c in cs {
                    c.leaves_into(out);
                }
            }
        }
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.leaves_into(&mut out);
        out
    }

    /// Rebuilds the graph the cotree denotes (union = disjoint union,
    /// join = join). The leaves must carry the vertex ids 0..n.
    pub fn evaluate(&self) -> Graph {
        let mut leaves = self.leaves();
        let n = leaves.len();
        leaves.sort_unstable();
        assert!(
            leaves.iter().copied().eq(0..n),
            "cotree leaves must be exactly 0..n"
        );
        let mut edges = Vec::new();
        fn collect(t: &Cotree, edges: &mut Vec<(usize, usize)>) -> Vec<usize> {
            match t {
                Cotree::Leaf(v) => vec![*v],
                Cotree::Union(cs) => cs.iter().flat_map(|c| collect(c, edges)).collect(),
                Cotree::Join(cs) => {
                    let sets: Vec<Vec<usize>> = cs.iter().map(|c| collect(c, edges)).collect();
                    for i in 0..sets.len() {
                        for j in i + 1..sets.len() {
                            for &u in &sets[i] {
                                for &v in &sets[j] {
                                    edges.push((u, v));
                                }
                            }
                        }
                    }
                    sets.into_iter().flatten().collect()
                }
            }
        }
        collect(self, &mut edges);
        Graph::from_edges(n, &edges).expect("cotree evaluation stays in range")
    }
}

/// Returns the cotree of `g` iff `g` is a cograph (P4-free), else `None`.
pub fn recognize_cograph(g: &Graph) -> Option<Cotree> {
    if g.n() == 0 {
        return None;
    }
    let verts: Vec<usize> = g.vertices().collect();
    recognize(g, &verts)
}

fn recognize(g: &Graph, verts: &[usize]) -> Option<Cotree> {
    if verts.len() == 1 {
        return Some(Cotree::Leaf(verts[0]));
    }
    let sub = g.induced_subgraph(verts);
    let comps = sub.components();
    if comps.len() > 1 {
        let children = comps
            .iter()
            .map(|c| recognize(g, &map_back(c, verts)))
            .collect::<Option<Vec<_>>>()?;
        return Some(Cotree::Union(children));
    }
    let cocomps = sub.complement().components();
    if cocomps.len() > 1 {
        let children = cocomps
            .iter()
            .map(|c| recognize(g, &map_back(c, verts)))
            .collect::<Option<Vec<_>>>()?;
        return Some(Cotree::Join(children));
    }
    None
}

fn map_back(local: &[usize], verts: &[usize]) -> Vec<usize> {
    local.iter().map(|&i| verts[i]).collect()
}

/// Chromatic number from a cotree: max over union children, sum over join
/// children, with the certificate assembled by color-offsetting at joins.
pub fn chi_cotree(t: &Cotree) -> ColoringResult {
    let n = t.leaf_count();
    let mut coloring = vec![0usize; n];
    fn color(t: &Cotree, offset: usize, coloring: &mut [usize]) -> usize {
        match t {
            Cotree::Leaf(v) => {
                coloring[*v] = offset + 1;
                1
            }
            Cotree::Union(cs) => cs
                .iter()
                .map(|c| color(c, offset, coloring))
                .max()
                .expect("internal nodes have children"),
            Cotree::Join(cs) => {
                let mut shift = 0;
                for c in cs {
                    shift += color(c, offset + shift, coloring);
                }
                shift
            }
        }
    }
    color(t, 0, &mut coloring);
    ColoringResult::checked(&t.evaluate(), coloring, Method::Cotree)
}
