//! The exact solver against the naive brute-force oracle on seeded random
//! graphs just above the exhaustive range (the exhaustive range itself is
//! covered by the acceptance suite).

use critgraph::chromatic::{chi_bruteforce, chi_exact};
use critgraph::random::{random_graph, rng_from_seed};

#[test]
fn exact_matches_brute_force_on_1000_random_graphs() {
    for i in 0..1000u64 {
        let mut rng = rng_from_seed(1000 + i);
        let n = 8 + (i as usize % 3); // 8..=10
        let p = 0.2 + 0.06 * (i % 11) as f64;
        let g = random_graph(n, p, &mut rng);
        assert_eq!(
            chi_bruteforce(&g).unwrap(),
            chi_exact(&g).unwrap().chi,
            "{g:?}"
        );
    }
}
