//! Immutable simple undirected graphs over bitset adjacency rows.
//!
//! Vertices are `0..n`. Every operation returns a fresh `Graph`; existing
//! values are never mutated, so graphs are safe to share across threads.
//! Equality and hashing are structural (vertex count plus adjacency);
//! vertex labels are carried along as metadata and ignored by `Eq`.

use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

/// Hard cap on vertex counts accepted by the public constructors.
pub const MAX_VERTICES: usize = 4096;

const WORD_BITS: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("({u}, {v}) is not an edge of the graph")]
    NotAnEdge { u: usize, v: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("graph on {n} vertices exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
}

/// An undirected edge, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics if `u == v`: loops are not
    /// representable.
    pub fn new(u: usize, v: usize) -> Edge {
        assert!(u != v, "an edge needs two distinct endpoints");
        if u < v {
            Edge { u, v }
        } else {
            Edge { u: v, v: u }
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

#[derive(Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    /// `n` rows of `words` u64s each; bit `v` of row `u` means `uv` is an edge.
    /// Bits at positions `>= n` are always zero.
    bits: Vec<u64>,
    labels: Option<Vec<Option<String>>>,
}

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS).max(1)
}

impl Graph {
    fn zeroed(n: usize) -> Graph {
        let words = words_for(n);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
            labels: None,
        }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Graph::empty_with_cap(n, MAX_VERTICES)
    }

    /// The edgeless graph on `n` vertices, with an explicit size cap for
    /// callers that genuinely need more than [`MAX_VERTICES`].
    pub fn empty_with_cap(n: usize, cap: usize) -> Result<Graph, GraphError> {
        if n > cap {
            return Err(GraphError::TooLarge { n, cap });
        }
        Ok(Graph::zeroed(n))
    }

    /// Builds a graph from an explicit edge list. Loops are rejected;
    /// duplicate edges are idempotent.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::InvalidArgument(format!(
                    "loop at vertex {u} is not allowed"
                )));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// The path `P_r` on `r >= 1` vertices, edges along consecutive indices.
    pub fn path(r: usize) -> Result<Graph, GraphError> {
        if r < 1 {
            return Err(GraphError::InvalidArgument(
                "a path needs at least one vertex".into(),
            ));
        }
        let mut g = Graph::empty(r)?;
        for i in 0..r - 1 {
            g.set_edge(i, i + 1);
        }
        Ok(g)
    }

    /// The cycle `C_r` on `r >= 3` vertices.
    pub fn cycle(r: usize) -> Result<Graph, GraphError> {
        if r < 3 {
            return Err(GraphError::InvalidArgument(
                "a cycle needs at least three vertices".into(),
            ));
        }
        let mut g = Graph::empty(r)?;
        for i in 0..r {
            g.set_edge(i, (i + 1) % r);
        }
        Ok(g)
    }

    /// The complete graph `K_r` on `r >= 1` vertices.
    pub fn clique(r: usize) -> Result<Graph, GraphError> {
        if r < 1 {
            return Err(GraphError::InvalidArgument(
                "a clique needs at least one vertex".into(),
            ));
        }
        let mut g = Graph::empty(r)?;
        for u in 0..r {
            for v in u + 1..r {
                g.set_edge(u, v);
            }
        }
        Ok(g)
    }

    /// The Grötzsch graph: the Mycielskian of `C_5`. 11 vertices, 20 edges,
    /// triangle-free, chromatic number 4. The structure is re-checked on
    /// every build.
    pub fn grotzsch() -> Graph {
        let g = Graph::cycle(5).unwrap().mycielskian();
        assert_eq!(g.n(), 11);
        assert_eq!(g.edge_count(), 20);
        assert!(g.find_triangle().is_none());
        g
    }

    /// Mycielskian construction: vertices `0..n` are the original graph,
    /// `n..2n` the shadow copy (shadow `n+i` adjacent to `N(i)`), and `2n`
    /// the apex adjacent to every shadow vertex. Raises the chromatic number
    /// by one while preserving triangle-freeness.
    pub fn mycielskian(&self) -> Graph {
        let n = self.n;
        let mut g = Graph::zeroed(2 * n + 1);
        for e in self.edges() {
            g.set_edge(e.u, e.v);
            g.set_edge(n + e.u, e.v);
            g.set_edge(e.u, n + e.v);
        }
        for i in 0..n {
            g.set_edge(n + i, 2 * n);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = self
            .bits
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>();
        total / 2
    }

    /// Adjacency row of `v` as bit words.
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        OnesIter::new(self.row(v))
    }

    /// Edges in ascending `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| Edge { u, v })
        })
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref()?.get(v)?.as_deref()
    }

    pub(crate) fn set_label(&mut self, v: usize, label: String) {
        let labels = self.labels.get_or_insert_with(|| vec![None; self.n]);
        labels[v] = Some(label);
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.bits[v * self.words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
    }

    fn clear_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        self.bits[v * self.words + u / WORD_BITS] &= !(1 << (u % WORD_BITS));
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    fn check_edge(&self, e: Edge) -> Result<(), GraphError> {
        self.check_vertex(e.u)?;
        self.check_vertex(e.v)?;
        if self.has_edge(e.u, e.v) {
            Ok(())
        } else {
            Err(GraphError::NotAnEdge { u: e.u, v: e.v })
        }
    }

    /// Deletes vertex `v`; remaining vertices are compacted in order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        Ok(self.induced_subgraph(&keep))
    }

    /// Deletes edge `e`; the vertex set is unchanged.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.check_edge(e)?;
        let mut g = self.clone();
        g.clear_edge(e.u, e.v);
        Ok(g)
    }

    /// Contracts edge `e = uv` into a single vertex adjacent to
    /// `N(u) ∪ N(v) ∖ {u, v}`. The merged vertex takes `u`'s position (the
    /// smaller index); the rest compact in order. No loops or multi-edges
    /// can arise: adjacency is a set of bits.
    pub fn contract_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.check_edge(e)?;
        let (u, v) = (e.u, e.v);
        // old index -> new index, with v removed and u the merge target
        let mut next = 0;
        let map: Vec<Option<usize>> = (0..self.n)
            .map(|old| {
                if old == v {
                    None
                } else {
                    next += 1;
                    Some(next - 1)
                }
            })
            .collect();
        let mut g = Graph::zeroed(self.n - 1);
        for a in 0..self.n {
            if a == v {
                continue;
            }
            let na = map[a].unwrap();
            for b in self.neighbors(a) {
                let nb = if b == v {
                    map[u].unwrap()
                } else {
                    map[b].unwrap()
                };
                if na != nb {
                    g.set_edge(na, nb);
                }
            }
        }
        if let Some(labels) = &self.labels {
            let mut new_labels = vec![None; g.n];
            for old in 0..self.n {
                if old == v || old == u {
                    continue;
                }
                new_labels[map[old].unwrap()] = labels[old].clone();
            }
            let merged = match (&labels[u], &labels[v]) {
                (Some(a), Some(b)) => Some(format!("{a}{b}")),
                (Some(a), None) => Some(a.clone()),
                (None, Some(b)) => Some(b.clone()),
                (None, None) => None,
            };
            new_labels[map[u].unwrap()] = merged;
            g.labels = Some(new_labels);
        }
        Ok(g)
    }

    /// Complement off the diagonal; labels carried over.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::zeroed(self.n);
        let tail_mask = tail_mask(self.n);
        for u in 0..self.n {
            let src = self.row(u);
            let dst = &mut g.bits[u * g.words..(u + 1) * g.words];
            for w in 0..g.words {
                dst[w] = !src[w];
            }
            // clear the diagonal and the unused tail bits
            dst[u / WORD_BITS] &= !(1u64 << (u % WORD_BITS));
            if let Some(m) = tail_mask {
                *dst.last_mut().unwrap() &= m;
            }
        }
        g.labels = self.labels.clone();
        g
    }

    /// Disjoint union `self + other`; `other`'s vertices are offset by
    /// `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::zeroed(n);
        for e in self.edges() {
            g.set_edge(e.u, e.v);
        }
        for e in other.edges() {
            g.set_edge(self.n + e.u, self.n + e.v);
        }
        if self.labels.is_some() || other.labels.is_some() {
            let labels = (0..self.n)
                .map(|v| self.label(v).map(str::to_owned))
                .chain((0..other.n).map(|v| other.label(v).map(str::to_owned)))
                .collect();
            g.labels = Some(labels);
        }
        g
    }

    /// Disjoint union plus all cross edges.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.set_edge(u, self.n + v);
            }
        }
        g
    }

    /// Induced subgraph on `verts` (which must be distinct and in range),
    /// re-indexed in the given order. Labels follow their vertices.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::zeroed(verts.len());
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.set_edge(i, j);
                }
            }
        }
        if let Some(labels) = &self.labels {
            let mut new_labels = vec![None; verts.len()];
            for (i, &a) in verts.iter().enumerate() {
                new_labels[i] = labels[a].clone();
            }
            g.labels = Some(new_labels);
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Some triangle `[a, b, c]` if one exists.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for e in self.edges() {
            let ru = self.row(e.u);
            let rv = self.row(e.v);
            for w in 0..self.words {
                let both = ru[w] & rv[w];
                if both != 0 {
                    let c = w * WORD_BITS + both.trailing_zeros() as usize;
                    return Some([e.u, e.v, c]);
                }
            }
        }
        None
    }

    /// Number of common neighbors of `u` and `v`.
    pub(crate) fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
}

fn tail_mask(n: usize) -> Option<u64> {
    if n.is_multiple_of(WORD_BITS) && n > 0 {
        None
    } else {
        Some((1u64 << (n % WORD_BITS)) - 1)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bits == other.bits
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.bits.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=[", self.n, self.edge_count())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", e.u, e.v)?;
        }
        write!(f, "])")
    }
}

struct OnesIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl<'a> OnesIter<'a> {
    fn new(words: &'a [u64]) -> Self {
        OnesIter {
            words,
            word_idx: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for OnesIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}
