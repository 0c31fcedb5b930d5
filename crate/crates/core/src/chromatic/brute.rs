//! Brute-force chromatic number: for k = 1, 2, ... try every one of the
//! k^n color assignments. Deliberately naive and code-disjoint from the
//! branch-and-bound solver — this is the independent oracle the exact
//! solver is tested against.

use crate::graph::Graph;

use super::{ChromaticError, ColoringResult, Method};

pub const BRUTE_VERTEX_CAP: usize = 10;

pub fn chi_bruteforce(g: &Graph) -> Result<usize, ChromaticError> {
    Ok(bruteforce_coloring(g)?.chi)
}

pub fn bruteforce_coloring(g: &Graph) -> Result<ColoringResult, ChromaticError> {
    let n = g.n();
    if n > BRUTE_VERTEX_CAP {
        return Err(ChromaticError::VertexCap {
            n,
            cap: BRUTE_VERTEX_CAP,
        });
    }
    if n == 0 {
        return Ok(ColoringResult::checked(g, Vec::new(), Method::BruteForce));
    }
    let edges: Vec<(usize, usize)> = g.edges().map(|e| (e.u, e.v)).collect();
    for k in 1..=n {
        let mut assignment = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| assignment[u] != assignment[v]) {
                return Ok(ColoringResult::checked(
                    g,
                    relabel_dense(&assignment),
                    Method::BruteForce,
                ));
            }
            // next assignment in base k, least-significant digit first
            let mut i = 0;
            loop {
                if i == n {
                    break;
                }
                assignment[i] += 1;
                if assignment[i] < k {
                    break;
                }
                assignment[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    unreachable!("n colors always suffice")
}

/// Maps arbitrary color values to 1..=k in order of first appearance.
fn relabel_dense(assignment: &[usize]) -> Vec<usize> {
    let mut map: Vec<Option<usize>> = vec![None; assignment.len() + 1];
    let mut next = 0;
    assignment
        .iter()
        .map(|&c| {
            *map[c].get_or_insert_with(|| {
                next += 1;
                next
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::chi_exact;

    #[test]
    fn small_named_cases() {
        assert_eq!(chi_bruteforce(&Graph::empty(5).unwrap()).unwrap(), 1);
        assert_eq!(chi_bruteforce(&Graph::path(4).unwrap()).unwrap(), 2);
        assert_eq!(chi_bruteforce(&Graph::cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(chi_bruteforce(&Graph::clique(6).unwrap()).unwrap(), 6);
        assert_eq!(chi_bruteforce(&Graph::empty(0).unwrap()).unwrap(), 0);
    }

    #[test]
    fn rejects_oversized_input() {
        let g = Graph::empty(11).unwrap();
        assert!(matches!(
            chi_bruteforce(&g),
            Err(ChromaticError::VertexCap { n: 11, cap: 10 })
        ));
    }

    #[test]
    fn agrees_with_exact_on_all_graphs_up_to_five() {
        for n in 0..=5usize {
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
                let g = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(
                    chi_bruteforce(&g).unwrap(),
                    chi_exact(&g).unwrap().chi,
                    "{g:?}"
                );
            }
        }
    }

    #[test]
    fn certificate_uses_exactly_chi_colors() {
        let r = bruteforce_coloring(&Graph::cycle(7).unwrap()).unwrap();
        assert_eq!(r.chi, 3);
        let mut used: Vec<usize> = r.coloring.clone();
        used.sort_unstable();
        used.dedup();
        assert_eq!(used, vec![1, 2, 3]);
    }
}
