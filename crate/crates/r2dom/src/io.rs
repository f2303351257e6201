//! Text formats: 0-indexed edge lists ("n m" header, one "u v" per line)
//! and 1-indexed DIMACS ("p edge n m", "e u v"). `#` starts a comment in
//! edge lists, `c` lines are comments in DIMACS.

use std::fmt::Write;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing header")]
    MissingHeader,
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

fn numbers(line: usize, toks: &[&str]) -> Result<Vec<usize>, ParseError> {
    toks.iter()
        .map(|t| {
            t.parse::<usize>().map_err(|_| ParseError::Syntax { line, msg: format!("expected a number, got {t:?}") })
        })
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(ParseError::Syntax { line, msg: format!("expected two fields, got {}", toks.len()) });
        }
        let nums = numbers(line, &toks)?;
        match header {
            None => header = Some((nums[0], nums[1])),
            Some(_) => edges.push((nums[0], nums[1])),
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCount { expected: m, found: edges.len() });
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(ParseError::Syntax { line, msg: "second header".into() });
                }
                if toks.len() != 4 || !matches!(toks[1], "edge" | "col") {
                    return Err(ParseError::Syntax { line, msg: "expected \"p edge n m\"".into() });
                }
                let nums = numbers(line, &toks[2..])?;
                header = Some((nums[0], nums[1]));
            }
            Some("e") => {
                if header.is_none() {
                    return Err(ParseError::MissingHeader);
                }
                if toks.len() != 3 {
                    return Err(ParseError::Syntax { line, msg: "expected \"e u v\"".into() });
                }
                let nums = numbers(line, &toks[1..])?;
                if nums.contains(&0) {
                    return Err(ParseError::Syntax { line, msg: "DIMACS vertices are 1-indexed".into() });
                }
                edges.push((nums[0] - 1, nums[1] - 1));
            }
            Some(other) => return Err(ParseError::Syntax { line, msg: format!("unknown line type {other:?}") }),
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCount { expected: m, found: edges.len() });
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn parse(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

pub fn emit_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a String");
    }
    out
}

pub fn emit(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => emit_edge_list(g),
        Format::Dimacs => emit_dimacs(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_basics() {
        let g = parse_edge_list("# a path\n4 3\n0 1\n1 2 # middle\n2 3\n").unwrap();
        assert_eq!(g, Graph::path(4));
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_edge_list("3 1\n0 3\n"), Err(ParseError::Graph(GraphError::EndpointOutOfRange {
            index: 0,
            vertex: 3,
            n: 3
        })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(ParseError::EdgeCount { .. })));
        assert!(matches!(parse_edge_list(""), Err(ParseError::MissingHeader)));
    }

    #[test]
    fn dimacs_basics() {
        let g = parse_dimacs("c cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n").unwrap();
        assert_eq!(g, Graph::cycle(5));
        assert_eq!(parse_dimacs(&emit_dimacs(&g)).unwrap(), g);
        assert!(parse_dimacs("p edge 2 1\ne 0 1\n").is_err());
    }
}
