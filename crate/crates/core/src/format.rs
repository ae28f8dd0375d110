//! Text formats: DIMACS-style graph files, edge-pair lists and vertex name maps.
//!
//! Graph files use `c` comment lines, one `p edge <n> <m>` problem line before
//! any edge, and `e <u> <v>` edge lines. Vertex labels are 1-based on disk and
//! 0-based in memory. Blank lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::error::Error as GraphError;
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("missing problem line `p edge <n> <m>`")]
    MissingProblemLine,
    #[error("problem line declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

fn malformed(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Malformed {
        line,
        msg: msg.into(),
    }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize, FormatError> {
    let tok = tok.ok_or_else(|| malformed(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| {
        malformed(
            line,
            format!("{what} `{tok}` is not a non-negative integer"),
        )
    })
}

fn parse_label(tok: Option<&str>, line: usize, n: usize) -> Result<usize, FormatError> {
    let x = parse_num(tok, line, "vertex label")?;
    if x == 0 || x > n {
        return Err(FormatError::Graph {
            line,
            source: GraphError::VertexOutOfRange { vertex: x, n },
        });
    }
    Ok(x - 1)
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut lines_of: Vec<usize> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(malformed(line, "second problem line"));
                }
                if toks.next() != Some("edge") {
                    return Err(malformed(line, "expected `p edge <n> <m>`"));
                }
                let n = parse_num(toks.next(), line, "vertex count")?;
                let m = parse_num(toks.next(), line, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| malformed(line, "edge before problem line"))?;
                let u = parse_label(toks.next(), line, n)?;
                let v = parse_label(toks.next(), line, n)?;
                if u == v {
                    return Err(FormatError::Graph {
                        line,
                        source: GraphError::SelfLoop(u + 1),
                    });
                }
                edges.push(Edge::new(u, v));
                lines_of.push(line);
            }
            Some(other) => return Err(malformed(line, format!("unknown line type `{other}`"))),
        }
        if toks.next().is_some() {
            return Err(malformed(line, "trailing tokens"));
        }
    }
    let (n, m) = header.ok_or(FormatError::MissingProblemLine)?;
    if m != edges.len() {
        return Err(FormatError::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Graph::new(n, edges.iter().copied()).map_err(|e| match e {
        GraphError::DuplicateEdge(a, b) => {
            let target = Edge::new(a, b);
            let line = lines_of
                .iter()
                .zip(&edges)
                .filter(|(_, &e)| e == target)
                .nth(1)
                .map_or(0, |(&l, _)| l);
            FormatError::Graph {
                line,
                source: GraphError::DuplicateEdge(a + 1, b + 1),
            }
        }
        other => FormatError::Graph {
            line: 0,
            source: other,
        },
    })
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {}", e.u + 1, e.v + 1);
    }
    out
}

/// One `u v` pair per line, 1-based. Blank lines and `c` comments are skipped.
pub fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>, FormatError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        let first = match toks.next() {
            None | Some("c") => continue,
            Some(t) => t,
        };
        let u = parse_num(Some(first), line, "vertex label")?;
        let v = parse_num(toks.next(), line, "vertex label")?;
        if toks.next().is_some() {
            return Err(malformed(line, "trailing tokens"));
        }
        if u == 0 || v == 0 {
            return Err(malformed(line, "vertex labels are 1-based"));
        }
        out.push((u - 1, v - 1));
    }
    Ok(out)
}

pub fn write_pairs(edges: &[Edge]) -> String {
    let mut out = String::new();
    for e in edges {
        let _ = writeln!(out, "{} {}", e.u + 1, e.v + 1);
    }
    out
}

/// `name id` per line, ids 1-based.
pub fn write_name_map(names: &[String]) -> String {
    let mut out = String::new();
    for (i, name) in names.iter().enumerate() {
        let _ = writeln!(out, "{} {}", name, i + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::complete;

    #[test]
    fn parses_examples() {
        let k2 = parse_graph("p edge 2 1\ne 1 2\n").unwrap();
        assert_eq!(k2, complete(2));
        let k3 = parse_graph("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert!(k3.is_complete() && k3.n() == 3);
    }

    #[test]
    fn reports_errors_with_lines() {
        let err = parse_graph("p edge 2 1\ne 1 1\n").unwrap_err();
        assert_eq!(
            err,
            FormatError::Graph {
                line: 2,
                source: GraphError::SelfLoop(1)
            }
        );
        assert_eq!(
            parse_graph("p edge 2 2\ne 1 2\n").unwrap_err(),
            FormatError::EdgeCountMismatch {
                declared: 2,
                found: 1
            }
        );
        assert!(matches!(
            parse_graph("p edge 2 1\ne 1 3\n").unwrap_err(),
            FormatError::Graph {
                line: 2,
                source: GraphError::VertexOutOfRange { vertex: 3, n: 2 }
            }
        ));
        assert!(matches!(
            parse_graph("p edge 3 2\ne 1 2\nc x\ne 2 1\n").unwrap_err(),
            FormatError::Graph {
                line: 4,
                source: GraphError::DuplicateEdge(1, 2)
            }
        ));
        assert!(matches!(
            parse_graph("p edge 3 1\nx 1 2\n").unwrap_err(),
            FormatError::Malformed { line: 2, .. }
        ));
        assert!(matches!(
            parse_graph("e 1 2\n").unwrap_err(),
            FormatError::Malformed { line: 1, .. }
        ));
        assert_eq!(
            parse_graph("c only\n"),
            Err(FormatError::MissingProblemLine)
        );
        assert!(parse_graph("p edge 3 1\ne 1 2 3\n").is_err());
        assert!(parse_graph("p edge 3 1\ne 1 -2\n").is_err());
    }

    #[test]
    fn round_trips() {
        let g = Graph::new(5, [(3, 1), (0, 4), (2, 4)]).unwrap();
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        let pairs = write_pairs(g.edges());
        assert_eq!(parse_pairs(&pairs).unwrap(), vec![(1, 3), (0, 4), (2, 4)]);
        assert_eq!(
            write_name_map(&["v[1]".to_string(), "v".to_string()]),
            "v[1] 1\nv 2\n"
        );
    }
}
