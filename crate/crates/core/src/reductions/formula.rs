//! Monotone 1-in-3-SAT formulas: each clause has three distinct positive
//! literals, each variable occurs in exactly three clauses (so the clause
//! count equals the variable count), and a satisfying assignment must make
//! exactly one literal per clause true.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use thiserror::Error;

/// Exhaustive-search cap for the 1-in-3 oracle.
pub const ORACLE_CAP: usize = 24;

const RESAMPLE_BUDGET: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Violation {
    pub line: Option<usize>,
    pub message: String,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("invalid formula: {}", format_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("{n} variables exceed the oracle cap of {cap}")]
    OracleCap { n: usize, cap: usize },
    #[error("could not sample a valid formula within {attempts} attempts")]
    Generation { attempts: usize },
}

fn format_violations(vs: &[Violation]) -> String {
    vs.iter()
        .map(|v| match v.line {
            Some(l) => format!("line {l}: {}", v.message),
            None => v.message.clone(),
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// A validated Monotone 1-in-3-SAT instance. Clause-internal variable
/// order is preserved: the gadget builders assign the roles x, y, z in
/// clause order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monotone1in3Formula {
    n: usize,
    clauses: Vec<[usize; 3]>,
}

impl Monotone1in3Formula {
    /// Validates and builds a formula over variables `0..n`.
    pub fn new(n: usize, clauses: Vec<[usize; 3]>) -> Result<Self, FormulaError> {
        let mut violations = Vec::new();
        if clauses.len() != n {
            violations.push(Violation {
                line: None,
                message: format!(
                    "{} clauses for {} variables (m must equal n)",
                    clauses.len(),
                    n
                ),
            });
        }
        let mut occurrences = vec![0usize; n];
        for (i, clause) in clauses.iter().enumerate() {
            let [x, y, z] = *clause;
            if x == y || y == z || x == z {
                violations.push(Violation {
                    line: None,
                    message: format!("clause {} repeats a variable", i + 1),
                });
            }
            for &v in clause {
                if v >= n {
                    violations.push(Violation {
                        line: None,
                        message: format!("clause {} uses variable {} out of range", i + 1, v + 1),
                    });
                } else {
                    occurrences[v] += 1;
                }
            }
        }
        for (v, &count) in occurrences.iter().enumerate() {
            if count != 3 && clauses.len() == n {
                violations.push(Violation {
                    line: None,
                    message: format!("variable {} occurs {count} times instead of 3", v + 1),
                });
            }
        }
        if violations.is_empty() {
            Ok(Monotone1in3Formula { n, clauses })
        } else {
            Err(FormulaError::Invalid(violations))
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    /// Clause indices containing `var`, in clause order (exactly three).
    pub fn occurrences(&self, var: usize) -> [usize; 3] {
        let mut out = [usize::MAX; 3];
        let mut k = 0;
        for (i, clause) in self.clauses.iter().enumerate() {
            if clause.contains(&var) {
                out[k] = i;
                k += 1;
            }
        }
        debug_assert_eq!(k, 3);
        out
    }

    /// True iff under `assignment` every clause has exactly one true
    /// variable.
    pub fn is_one_satisfying(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.n
            && self
                .clauses
                .iter()
                .all(|c| c.iter().filter(|&&v| assignment[v]).count() == 1)
    }
}

impl fmt::Display for Monotone1in3Formula {
    /// The formula file format: `p m1in3 <n>` then `c <v1> <v2> <v3>`
    /// lines, 1-indexed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p m1in3 {}", self.n)?;
        for c in &self.clauses {
            writeln!(f, "c {} {} {}", c[0] + 1, c[1] + 1, c[2] + 1)?;
        }
        Ok(())
    }
}

/// Parses the formula format: header `p m1in3 <n>`, then exactly `n` lines
/// `c <v1> <v2> <v3>` with 1-indexed variables; `#` starts a comment.
/// Violations are collected with their line numbers.
pub fn parse_formula(text: &str) -> Result<Monotone1in3Formula, FormulaError> {
    let mut violations = Vec::new();
    let mut n: Option<usize> = None;
    let mut clauses: Vec<[usize; 3]> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = parts_of(line);
        match parts.next() {
            Some("p") => {
                if n.is_some() {
                    violations.push(Violation {
                        line: Some(lineno),
                        message: "duplicate header".into(),
                    });
                    continue;
                }
                if parts.next() != Some("m1in3") {
                    violations.push(Violation {
                        line: Some(lineno),
                        message: "header must read 'p m1in3 <n>'".into(),
                    });
                    continue;
                }
                match parts.next().and_then(|s| s.parse::<usize>().ok()) {
                    Some(v) => n = Some(v),
                    None => violations.push(Violation {
                        line: Some(lineno),
                        message: "bad variable count".into(),
                    }),
                }
            }
            Some("c") => {
                let nv = match n {
                    Some(nv) => nv,
                    None => {
                        violations.push(Violation {
                            line: Some(lineno),
                            message: "clause before header".into(),
                        });
                        continue;
                    }
                };
                let vals: Vec<usize> = parts.filter_map(|s| s.parse::<usize>().ok()).collect();
                if vals.len() != 3 {
                    violations.push(Violation {
                        line: Some(lineno),
                        message: "a clause needs exactly three variables".into(),
                    });
                    continue;
                }
                if vals.iter().any(|&v| v == 0 || v > nv) {
                    violations.push(Violation {
                        line: Some(lineno),
                        message: format!("variable out of range 1..={nv}"),
                    });
                    continue;
                }
                if vals[0] == vals[1] || vals[1] == vals[2] || vals[0] == vals[2] {
                    violations.push(Violation {
                        line: Some(lineno),
                        message: "repeated variable in clause".into(),
                    });
                    continue;
                }
                clauses.push([vals[0] - 1, vals[1] - 1, vals[2] - 1]);
            }
            Some(other) => violations.push(Violation {
                line: Some(lineno),
                message: format!("unexpected line kind '{other}'"),
            }),
            None => unreachable!("blank lines are skipped"),
        }
    }
    let n = match n {
        Some(n) => n,
        None => {
            violations.push(Violation {
                line: None,
                message: "missing 'p m1in3 <n>' header".into(),
            });
            return Err(FormulaError::Invalid(violations));
        }
    };
    if !violations.is_empty() {
        return Err(FormulaError::Invalid(violations));
    }
    Monotone1in3Formula::new(n, clauses)
}

fn parts_of(line: &str) -> impl Iterator<Item = &str> {
    line.split_whitespace()
}

/// Exhaustive 1-in-3 oracle over all 2^n assignments; the first satisfying
/// assignment in mask order is re-verified clause by clause before being
/// returned.
pub fn oracle_1in3(f: &Monotone1in3Formula) -> Result<Option<Vec<bool>>, FormulaError> {
    if f.n() > ORACLE_CAP {
        return Err(FormulaError::OracleCap {
            n: f.n(),
            cap: ORACLE_CAP,
        });
    }
    for mask in 0u64..(1u64 << f.n()) {
        let assignment: Vec<bool> = (0..f.n()).map(|v| mask >> v & 1 == 1).collect();
        if f.is_one_satisfying(&assignment) {
            assert!(f.is_one_satisfying(&assignment));
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

/// Samples a valid formula via a 3-regular configuration model: three stubs
/// per variable are shuffled and dealt into triples; a deal containing a
/// repeated variable in some clause is resampled. Deterministic per seed.
pub fn random_formula(n: usize, seed: u64) -> Result<Monotone1in3Formula, FormulaError> {
    if n < 3 {
        return Err(FormulaError::Invalid(vec![Violation {
            line: None,
            message: format!("no valid formula exists with n = {n} < 3"),
        }]));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
    for _ in 0..RESAMPLE_BUDGET {
        stubs.shuffle(&mut rng);
        let clauses: Vec<[usize; 3]> = stubs.chunks(3).map(|c| [c[0], c[1], c[2]]).collect();
        let ok = clauses
            .iter()
            .all(|c| c[0] != c[1] && c[1] != c[2] && c[0] != c[2]);
        if ok {
            return Monotone1in3Formula::new(n, clauses);
        }
    }
    Err(FormulaError::Generation {
        attempts: RESAMPLE_BUDGET,
    })
}

/// Fixtures frozen from seeded searches (see the `# discovered:` comment in
/// each file for the generator call that produced it).
pub mod fixtures {
    use super::{parse_formula, Monotone1in3Formula};

    /// The smallest non-1-satisfiable instance: n = 4 (the only valid shape
    /// at n = 4 is the four 3-subsets of the variables, and no assignment
    /// can make exactly one variable per clause true since that would need
    /// n/3 true variables).
    pub fn non1sat_smallest() -> Monotone1in3Formula {
        parse_formula(include_str!("data/non1sat_n4.m1in3")).expect("fixture is valid")
    }

    /// A non-1-satisfiable instance at n = 6, where 10n/3 is integral and
    /// the unsatisfiability is combinatorial rather than arithmetic.
    pub fn non1sat_n6() -> Monotone1in3Formula {
        parse_formula(include_str!("data/non1sat_n6.m1in3")).expect("fixture is valid")
    }
}
