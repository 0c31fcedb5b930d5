//! Exact chromatic number by branch and bound over color classes:
//! saturation-degree vertex selection, a greedy upper bound, and a greedy
//! maximal-clique lower bound with the clique pre-colored for symmetry
//! breaking. The search is exhaustive and fully deterministic (ties broken
//! by vertex index), so the returned value is the exact chromatic number.

use crate::graph::Graph;

use super::{ChromaticError, ColoringResult, Method};

/// Default vertex cap for routine use; callers may raise it explicitly via
/// [`chi_exact_capped`].
pub const DEFAULT_VERTEX_CAP: usize = 64;

/// The solver tracks color sets in 128-bit masks; searches that would need
/// more colors than this are refused.
pub const MAX_COLORS: usize = 128;

pub fn chi_exact(g: &Graph) -> Result<ColoringResult, ChromaticError> {
    chi_exact_capped(g, DEFAULT_VERTEX_CAP)
}

pub fn chi_exact_capped(g: &Graph, cap: usize) -> Result<ColoringResult, ChromaticError> {
    if g.n() > cap {
        return Err(ChromaticError::VertexCap { n: g.n(), cap });
    }
    if g.n() == 0 {
        return Ok(ColoringResult::checked(g, Vec::new(), Method::Exact));
    }

    let clique = greedy_clique(g);
    let lower = clique.len();
    let greedy = greedy_dsatur(g)?;
    let upper = greedy.iter().copied().max().unwrap_or(0);
    if lower == upper {
        return Ok(ColoringResult::checked(g, greedy, Method::Exact));
    }

    let mut solver = Solver {
        g,
        degree: g.vertices().map(|v| g.degree(v)).collect(),
        colors: vec![0; g.n()],
        sat: vec![0u128; g.n()],
        undo: Vec::new(),
        uncolored: g.n(),
        best: greedy,
        best_k: upper,
        lower,
        done: false,
    };
    let mut used = 0;
    for &v in &clique {
        used += 1;
        solver.assign(v, used);
    }
    solver.branch(used);
    Ok(ColoringResult::checked(g, solver.best, Method::Exact))
}

/// Greedy maximal clique, maximized over all starting vertices;
/// deterministic tie-breaking by index.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut best: Vec<usize> = Vec::new();
    for seed in g.vertices() {
        let mut clique = vec![seed];
        let mut cand: Vec<u64> = g.row(seed).to_vec();
        loop {
            let mut pick: Option<usize> = None;
            for (w, &word) in cand.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let v = w * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if pick.is_none_or(|p| degree[v] > degree[p]) {
                        pick = Some(v);
                    }
                }
            }
            match pick {
                Some(v) => {
                    clique.push(v);
                    for (c, r) in cand.iter_mut().zip(g.row(v)) {
                        *c &= r;
                    }
                }
                None => break,
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// Greedy DSATUR coloring: repeatedly color the uncolored vertex with the
/// most distinctly-colored neighbors, using the smallest feasible color.
fn greedy_dsatur(g: &Graph) -> Result<Vec<usize>, ChromaticError> {
    let n = g.n();
    let degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut colors = vec![0usize; n];
    let mut sat = vec![0u128; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == 0)
            .max_by_key(|&v| (sat[v].count_ones(), degree[v], std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains");
        let c = (1..=MAX_COLORS)
            .find(|&c| sat[v] >> (c - 1) & 1 == 0)
            .ok_or(ChromaticError::ColorCap { max: MAX_COLORS })?;
        colors[v] = c;
        let bit = 1u128 << (c - 1);
        for w in g.neighbors(v) {
            sat[w] |= bit;
        }
    }
    Ok(colors)
}

struct Solver<'a> {
    g: &'a Graph,
    degree: Vec<usize>,
    colors: Vec<usize>,
    /// Bit `c-1` of `sat[v]`: some neighbor of `v` has color `c`.
    sat: Vec<u128>,
    undo: Vec<usize>,
    uncolored: usize,
    best: Vec<usize>,
    best_k: usize,
    lower: usize,
    done: bool,
}

impl Solver<'_> {
    fn assign(&mut self, v: usize, c: usize) -> usize {
        let frame = self.undo.len();
        let bit = 1u128 << (c - 1);
        for w in self.g.neighbors(v) {
            if self.colors[w] == 0 && self.sat[w] & bit == 0 {
                self.sat[w] |= bit;
                self.undo.push(w);
            }
        }
        self.colors[v] = c;
        self.uncolored -= 1;
        frame
    }

    fn unassign(&mut self, v: usize, c: usize, frame: usize) {
        let bit = !(1u128 << (c - 1));
        for &w in &self.undo[frame..] {
            self.sat[w] &= bit;
        }
        self.undo.truncate(frame);
        self.colors[v] = 0;
        self.uncolored += 1;
    }

    fn branch(&mut self, used: usize) {
        if self.done || used >= self.best_k {
            return;
        }
        if self.uncolored == 0 {
            self.best_k = used;
            self.best = self.colors.clone();
            if self.best_k == self.lower {
                self.done = true;
            }
            return;
        }
        let v = (0..self.g.n())
            .filter(|&v| self.colors[v] == 0)
            .max_by_key(|&v| {
                (
                    self.sat[v].count_ones(),
                    self.degree[v],
                    std::cmp::Reverse(v),
                )
            })
            .expect("uncolored > 0");
        for c in 1..=used + 1 {
            if self.done || c >= self.best_k {
                break;
            }
            if self.sat[v] >> (c - 1) & 1 == 1 {
                continue;
            }
            let frame = self.assign(v, c);
            self.branch(used.max(c));
            self.unassign(v, c, frame);
        }
    }
}
