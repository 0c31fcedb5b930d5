//! DIMACS coloring-format I/O: `p edge <n> <m>` header, `e <u> <v>` lines,
//! 1-indexed vertices, comments starting with `c`.

use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Error)]
pub enum DimacsError {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn malformed(line: usize, message: impl Into<String>) -> DimacsError {
    DimacsError::Malformed {
        line,
        message: message.into(),
    }
}

/// Reads a graph in DIMACS coloring format. Edge endpoints may appear in
/// either order; duplicate edges are tolerated; loops are rejected.
pub fn read_graph<R: BufRead>(reader: R) -> Result<Graph, DimacsError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed == "c" || trimmed.starts_with("c ") {
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        match parts.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(malformed(lineno, "duplicate problem line"));
                }
                let format = parts.next().unwrap_or("");
                if format != "edge" && format != "col" {
                    return Err(malformed(lineno, format!("unknown format '{format}'")));
                }
                let nv: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| malformed(lineno, "bad vertex count"))?;
                // the edge count is advisory and not trusted
                if nv > MAX_VERTICES {
                    return Err(GraphError::TooLarge {
                        n: nv,
                        cap: MAX_VERTICES,
                    }
                    .into());
                }
                n = Some(nv);
            }
            Some("e") => {
                let n = n.ok_or_else(|| malformed(lineno, "edge before problem line"))?;
                let u: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| malformed(lineno, "bad edge endpoint"))?;
                let v: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| malformed(lineno, "bad edge endpoint"))?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(malformed(
                        lineno,
                        format!("endpoint out of range 1..={n} in 'e {u} {v}'"),
                    ));
                }
                if u == v {
                    return Err(malformed(lineno, format!("loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(malformed(lineno, format!("unexpected line kind '{other}'")));
            }
            None => unreachable!("empty lines are skipped"),
        }
    }
    let n = n.ok_or_else(|| malformed(0, "missing problem line"))?;
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn parse_graph(text: &str) -> Result<Graph, DimacsError> {
    read_graph(text.as_bytes())
}

/// Writes the graph with edges in ascending order, `u < v`, 1-indexed.
pub fn write_graph<W: Write>(g: &Graph, mut writer: W) -> io::Result<()> {
    writeln!(writer, "p edge {} {}", g.n(), g.edge_count())?;
    for e in g.edges() {
        writeln!(writer, "e {} {}", e.u + 1, e.v + 1)?;
    }
    Ok(())
}

pub fn graph_to_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_graph(g, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("dimacs output is ascii")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_named_graphs() {
        for g in [
            Graph::empty(0).unwrap(),
            Graph::empty(5).unwrap(),
            Graph::path(4).unwrap(),
            Graph::cycle(7).unwrap(),
            Graph::clique(6).unwrap(),
            Graph::grotzsch(),
        ] {
            let text = graph_to_string(&g);
            assert_eq!(parse_graph(&text).unwrap(), g);
        }
    }

    #[test]
    fn reads_comments_and_reversed_edges() {
        let text = "c a triangle\nc\n\np edge 3 3\ne 2 1\ne 3 2\ne 1 3\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g, Graph::cycle(3).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_graph("e 1 2\np edge 2 1\n").is_err());
        assert!(parse_graph("p edge 2 1\ne 1 3\n").is_err());
        assert!(parse_graph("p edge 2 1\ne 1 1\n").is_err());
        assert!(parse_graph("p huh 2 1\n").is_err());
        assert!(parse_graph("").is_err());
        assert!(parse_graph("p edge 9999999 0\n").is_err());
    }

    #[test]
    fn writer_emits_sorted_one_indexed_edges() {
        let g = Graph::from_edges(3, &[(2, 0), (1, 0)]).unwrap();
        assert_eq!(graph_to_string(&g), "p edge 3 2\ne 1 2\ne 1 3\n");
    }
}
