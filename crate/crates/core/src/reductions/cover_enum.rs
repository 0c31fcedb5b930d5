//! Exhaustive enumeration of minimum clique covers.
//!
//! The cover-structure claims quantify over all minimum covers, so they are
//! tested by depth-first partition search pruned at the target size: branch
//! on the lowest uncovered vertex, try every clique containing it inside
//! the uncovered set, and bound with a per-component estimate (cliques have
//! at most omega vertices, and a clique of size s needs s-1 internal
//! edges). Deliberately code-disjoint from the chromatic solver — this is
//! the independent route for checking cover results.

use thiserror::Error;

use crate::graph::Graph;

/// Default vertex cap; callers may raise it explicitly (up to 64) via the
/// `_capped` variants.
pub const ENUM_VERTEX_CAP: usize = 24;

const MASK_LIMIT: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("graph on {n} vertices exceeds the enumeration cap of {cap} (raise the cap explicitly if intended)")]
    VertexCap { n: usize, cap: usize },
}

/// Minimum clique cover size by iterative-deepening exhaustive search.
pub fn sigma_by_enumeration(g: &Graph) -> Result<usize, EnumError> {
    sigma_by_enumeration_capped(g, ENUM_VERTEX_CAP)
}

pub fn sigma_by_enumeration_capped(g: &Graph, cap: usize) -> Result<usize, EnumError> {
    check_cap(g, cap)?;
    if g.n() == 0 {
        return Ok(0);
    }
    let all = all_mask(g.n());
    let mut search = Search::new(g);
    let mut limit = search.lower_bound(all);
    loop {
        let mut found = false;
        search.run(all, limit, &mut |_| {
            found = true;
            false // stop at the first cover
        });
        if found {
            return Ok(limit);
        }
        limit += 1;
    }
}

/// Visits every clique cover of size exactly `sigma` (each partition once);
/// the visitor returns `false` to stop early. Returns the number of covers
/// visited. Pass the verified minimum to enumerate minimum covers.
pub fn for_each_min_cover(
    g: &Graph,
    sigma: usize,
    visit: &mut dyn FnMut(&[Vec<usize>]) -> bool,
) -> Result<usize, EnumError> {
    for_each_min_cover_capped(g, sigma, ENUM_VERTEX_CAP, visit)
}

pub fn for_each_min_cover_capped(
    g: &Graph,
    sigma: usize,
    cap: usize,
    visit: &mut dyn FnMut(&[Vec<usize>]) -> bool,
) -> Result<usize, EnumError> {
    check_cap(g, cap)?;
    if g.n() == 0 {
        let mut count = 0;
        if sigma == 0 {
            count = 1;
            visit(&[]);
        }
        return Ok(count);
    }
    let mut search = Search::new(g);
    let mut count = 0;
    search.run(all_mask(g.n()), sigma, &mut |parts| {
        if parts.len() == sigma {
            count += 1;
            visit(parts)
        } else {
            true
        }
    });
    Ok(count)
}

fn check_cap(g: &Graph, cap: usize) -> Result<(), EnumError> {
    let effective = cap.min(MASK_LIMIT);
    if g.n() > effective {
        return Err(EnumError::VertexCap {
            n: g.n(),
            cap: effective,
        });
    }
    Ok(())
}

fn all_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits_above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        u64::MAX << (v + 1)
    }
}

struct Search {
    rows: Vec<u64>,
    omega: usize,
    parts: Vec<Vec<usize>>,
    stopped: bool,
}

impl Search {
    fn new(g: &Graph) -> Self {
        let rows: Vec<u64> = g.vertices().map(|v| g.row(v)[0]).collect();
        let omega = max_clique_size(&rows, all_mask(g.n())).max(1);
        Search {
            rows,
            omega,
            parts: Vec::new(),
            stopped: false,
        }
    }

    fn run(&mut self, all: u64, limit: usize, visit: &mut dyn FnMut(&[Vec<usize>]) -> bool) {
        self.parts.clear();
        self.stopped = false;
        self.dfs(all, limit, visit);
    }

    fn dfs(&mut self, remaining: u64, limit: usize, visit: &mut dyn FnMut(&[Vec<usize>]) -> bool) {
        if self.stopped {
            return;
        }
        if remaining == 0 {
            if !visit(&self.parts) {
                self.stopped = true;
            }
            return;
        }
        if self.parts.len() + self.lower_bound(remaining) > limit {
            return;
        }
        // branch on the lowest uncovered vertex so each partition is
        // generated exactly once
        let v = remaining.trailing_zeros() as usize;
        let mut clique = vec![v];
        let cand = self.rows[v] & remaining;
        self.extend(1u64 << v, cand, remaining, limit, &mut clique, visit);
    }

    /// Uses the current clique as a part, then tries every canonical
    /// extension (candidates in increasing index order).
    fn extend(
        &mut self,
        clique_mask: u64,
        cand: u64,
        remaining: u64,
        limit: usize,
        clique: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[Vec<usize>]) -> bool,
    ) {
        self.parts.push(clique.clone());
        self.dfs(remaining & !clique_mask, limit, visit);
        self.parts.pop();
        if self.stopped {
            return;
        }
        let mut grow = cand;
        while grow != 0 {
            let u = grow.trailing_zeros() as usize;
            grow &= grow - 1;
            clique.push(u);
            self.extend(
                clique_mask | (1u64 << u),
                cand & self.rows[u] & bits_above(u),
                remaining,
                limit,
                clique,
                visit,
            );
            clique.pop();
            if self.stopped {
                return;
            }
        }
    }

    /// Component-wise lower bound on the cliques needed to cover `mask`:
    /// a component with k vertices and m internal edges needs at least
    /// max(ceil(k/omega), k - m) cliques.
    fn lower_bound(&self, mask: u64) -> usize {
        let mut left = mask;
        let mut total = 0;
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            loop {
                let mut frontier = 0u64;
                let mut scan = comp;
                while scan != 0 {
                    let v = scan.trailing_zeros() as usize;
                    scan &= scan - 1;
                    frontier |= self.rows[v] & left;
                }
                let grown = comp | frontier;
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            let k = comp.count_ones() as usize;
            let mut twice_m = 0usize;
            let mut scan = comp;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                twice_m += (self.rows[v] & comp).count_ones() as usize;
            }
            total += (k.div_ceil(self.omega)).max(k.saturating_sub(twice_m / 2));
            left &= !comp;
        }
        total
    }
}

/// Exact maximum clique size by include/exclude branching.
fn max_clique_size(rows: &[u64], all: u64) -> usize {
    fn bb(rows: &[u64], cand: u64, size: usize, best: &mut usize) {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        let v = cand.trailing_zeros() as usize;
        bb(rows, cand & rows[v], size + 1, best);
        bb(rows, cand & !(1u64 << v), size, best);
    }
    let mut best = 0;
    bb(rows, all, 0, &mut best);
    best
}
