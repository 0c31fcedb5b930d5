//! Maximum matching in general graphs: Edmonds' blossom algorithm, the
//! array-based O(V^3) formulation. Used by the structural colorer, where a
//! maximum matching of a triangle-free complement yields a minimum clique
//! cover and hence a chromatic certificate.

use crate::graph::Graph;

/// Returns `mate[v] = Some(u)` for matched pairs, maximizing the number of
/// matched edges.
pub(crate) fn maximum_matching(g: &Graph) -> Vec<Option<usize>> {
    let n = g.n();
    let mut m = Matcher {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        in_queue: vec![false; n],
        in_blossom: vec![false; n],
        in_path: vec![false; n],
    };
    // greedy seed to cut down the number of augmenting searches
    for v in 0..n {
        if m.mate[v] == NONE {
            for u in g.neighbors(v) {
                if m.mate[u] == NONE {
                    m.mate[v] = u;
                    m.mate[u] = v;
                    break;
                }
            }
        }
    }
    for root in 0..n {
        if m.mate[root] == NONE {
            if let Some(end) = m.find_augmenting_path(root) {
                m.augment(end);
            }
        }
    }
    m.mate
        .iter()
        .map(|&u| if u == NONE { None } else { Some(u) })
        .collect()
}

const NONE: usize = usize::MAX;

struct Matcher<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_queue: Vec<bool>,
    in_blossom: Vec<bool>,
    in_path: Vec<bool>,
}

impl Matcher<'_> {
    fn lca(&mut self, a: usize, b: usize) -> usize {
        self.in_path.fill(false);
        let mut v = a;
        loop {
            v = self.base[v];
            self.in_path[v] = true;
            if self.mate[v] == NONE {
                break;
            }
            v = self.parent[self.mate[v]];
        }
        let mut v = b;
        loop {
            v = self.base[v];
            if self.in_path[v] {
                return v;
            }
            v = self.parent[self.mate[v]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS from an exposed root over alternating paths, contracting
    /// blossoms on odd cycles. Returns the exposed endpoint of an
    /// augmenting path if one exists.
    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.in_queue.fill(false);
        self.parent.fill(NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        let mut queue = std::collections::VecDeque::from([root]);
        self.in_queue[root] = true;
        while let Some(v) = queue.pop_front() {
            let neighbors: Vec<usize> = self.g.neighbors(v).collect();
            for to in neighbors {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract the blossom at the lca
                    let cur_base = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur_base, to);
                    self.mark_path(to, cur_base, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur_base;
                            if !self.in_queue[i] {
                                self.in_queue[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    if !self.in_queue[next] {
                        self.in_queue[next] = true;
                        queue.push_back(next);
                    }
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: exponential-time maximum matching by branching
    /// on the lowest-indexed vertex.
    fn brute_nu(g: &Graph, alive: u32) -> usize {
        let v = match (0..g.n()).find(|&v| alive >> v & 1 == 1) {
            Some(v) => v,
            None => return 0,
        };
        let without = brute_nu(g, alive & !(1 << v));
        let mut best = without;
        for u in g.neighbors(v) {
            if alive >> u & 1 == 1 {
                best = best.max(1 + brute_nu(g, alive & !(1 << v) & !(1 << u)));
            }
        }
        best
    }

    fn check(g: &Graph) {
        let mate = maximum_matching(g);
        // well-formed: symmetric and along edges
        for (v, &m) in mate.iter().enumerate() {
            if let Some(u) = m {
                assert_eq!(mate[u], Some(v));
                assert!(g.has_edge(u, v));
            }
        }
        let size = mate.iter().flatten().count() / 2;
        let expected = brute_nu(g, (1u32 << g.n()) - 1);
        assert_eq!(size, expected, "{g:?}");
    }

    #[test]
    fn named_graphs() {
        check(&Graph::cycle(5).unwrap());
        check(&Graph::cycle(7).unwrap());
        check(&Graph::path(6).unwrap());
        check(&Graph::clique(6).unwrap());
        check(&Graph::empty(4).unwrap());
        check(&Graph::grotzsch());
        // two triangles bridged: forces blossom handling
        check(
            &Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
                .unwrap(),
        );
    }

    #[test]
    fn exhaustive_small_and_random() {
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0..(1u32 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                check(&Graph::from_edges(n, &edges).unwrap());
            }
        }
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..300 {
            let n = rng.gen_range(6..=10);
            let p = rng.gen_range(0.1..0.9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            check(&Graph::from_edges(n, &edges).unwrap());
        }
    }
}
