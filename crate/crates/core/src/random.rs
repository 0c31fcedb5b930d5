//! Seeded graph generators for the verification suites. All generators are
//! deterministic for a fixed seed (ChaCha8).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chromatic::Cotree;
use crate::graph::Graph;
use crate::hfree::{contains_induced_check, patterns};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi G(n, p).
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are in range")
}

/// Triangle-free graph via the triangle-free process: edges are tried in a
/// random order and kept when they close no triangle, then thinned.
pub fn random_triangle_free(n: usize, keep: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    for i in (1..pairs.len()).rev() {
        pairs.swap(i, rng.gen_range(0..=i));
    }
    let mut g = Graph::empty(n).expect("within cap");
    for (u, v) in pairs {
        if !rng.gen_bool(keep) {
            continue;
        }
        // adding uv is safe iff u and v have no common neighbor
        if g.common_neighbors(u, v) == 0 {
            g.set_edge(u, v);
        }
    }
    debug_assert!(g.find_triangle().is_none());
    g
}

/// Random cograph on exactly `n` vertices, built from a random cotree.
pub fn random_cograph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut next_leaf = 0;
    let tree = random_cotree(n, true, &mut next_leaf, rng);
    tree.evaluate()
}

fn random_cotree(
    n: usize,
    union_level: bool,
    next_leaf: &mut usize,
    rng: &mut ChaCha8Rng,
) -> Cotree {
    if n == 1 {
        let leaf = Cotree::Leaf(*next_leaf);
        *next_leaf += 1;
        return leaf;
    }
    // split n into 2..=min(n,4) parts
    let parts = rng.gen_range(2..=n.min(4));
    let mut sizes = vec![1usize; parts];
    for _ in 0..n - parts {
        let i = rng.gen_range(0..parts);
        sizes[i] += 1;
    }
    let children: Vec<Cotree> = sizes
        .into_iter()
        .map(|s| random_cotree(s, !union_level, next_leaf, rng))
        .collect();
    if union_level {
        Cotree::Union(children)
    } else {
        Cotree::Join(children)
    }
}

/// Random (P1+P3)-free graph on at most `max_n` vertices: proposals from
/// the structured families the class consists of (cluster graphs, complete
/// multipartite graphs, C5, small sporadics), then rejection against the
/// freeness check itself. Pure G(n, p) proposals essentially never land in
/// the class beyond tiny n, so the proposal mixture carries the variety.
pub fn random_p1p3_free(max_n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let p1p3 = patterns::p1_plus_p3();
    loop {
        let candidate = match rng.gen_range(0..5u8) {
            0 => {
                // cluster graph: disjoint cliques
                let mut g = Graph::empty(0).expect("empty");
                let mut left = rng.gen_range(1..=max_n);
                while left > 0 {
                    let k = rng.gen_range(1..=left);
                    g = g.disjoint_union(&Graph::clique(k).expect("k >= 1"));
                    left -= k;
                }
                g
            }
            1 => {
                // complete multipartite with random parts
                let mut g = Graph::empty(0).expect("empty");
                let mut left = rng.gen_range(1..=max_n);
                while left > 0 {
                    let k = rng.gen_range(1..=left);
                    g = g.join(&Graph::empty(k).expect("within cap"));
                    left -= k;
                }
                g
            }
            2 => {
                // join of a clique with a sporadic piece (paw-like shapes)
                let k = rng.gen_range(1..=max_n.saturating_sub(3).max(1));
                let piece = match rng.gen_range(0..3u8) {
                    0 => patterns::linear_forest(&[1, 2]),
                    1 => Graph::path(3).expect("p3"),
                    _ => Graph::path(4).expect("p4"),
                };
                Graph::clique(k).expect("k >= 1").join(&piece)
            }
            3 if max_n >= 5 => Graph::cycle(5).expect("c5"),
            _ => {
                // small random graph, rejection does the filtering
                let n = rng.gen_range(1..=max_n.min(5));
                random_graph(n, rng.gen_range(0.2..0.9), rng)
            }
        };
        if candidate.n() <= max_n && !contains_induced_check(&candidate, &p1p3) {
            return candidate;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_seed_deterministic() {
        let a = random_graph(9, 0.5, &mut rng_from_seed(4));
        let b = random_graph(9, 0.5, &mut rng_from_seed(4));
        assert_eq!(a, b);
        let a = random_cograph(20, &mut rng_from_seed(4));
        let b = random_cograph(20, &mut rng_from_seed(4));
        assert_eq!(a, b);
    }

    #[test]
    fn triangle_free_generator_output_is_triangle_free() {
        for seed in 0..10 {
            let g = random_triangle_free(12, 0.7, &mut rng_from_seed(seed));
            assert!(g.find_triangle().is_none());
            assert_eq!(g.n(), 12);
        }
    }

    #[test]
    fn cograph_generator_outputs_cographs() {
        for seed in 0..10 {
            let g = random_cograph(15, &mut rng_from_seed(seed));
            assert_eq!(g.n(), 15);
            assert!(crate::chromatic::recognize_cograph(&g).is_some());
        }
    }

    #[test]
    fn p1p3_generator_outputs_free_graphs() {
        let p1p3 = patterns::p1_plus_p3();
        let mut rng = rng_from_seed(9);
        let mut sizes = std::collections::BTreeSet::new();
        for _ in 0..50 {
            let g = random_p1p3_free(12, &mut rng);
            assert!(!contains_induced_check(&g, &p1p3));
            sizes.insert(g.n());
        }
        assert!(sizes.len() > 3, "the sampler should vary sizes: {sizes:?}");
    }
}
