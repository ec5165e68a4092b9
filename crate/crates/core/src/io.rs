//! Plain-text graph files.
//!
//! Format: `#` starts a comment, blank lines are skipped. The first content
//! line is a header `graph <n> [directed]` giving the number of non-root
//! vertices; every further line is an edge `<u> <v> [multiplicity]` with
//! endpoints in `0..=n` (multiplicity defaults to 1). Edges of an undirected
//! graph may be written in either endpoint order; repeating an edge adds
//! multiplicity.

use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::RootedMultigraph;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses graph text. Errors carry 1-based line numbers.
pub fn parse_graph(text: &str) -> Result<RootedMultigraph> {
    let mut header: Option<(usize, bool, usize)> = None; // (n, directed, line)
    let mut edges: Vec<(usize, usize, u32)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match header {
            None => {
                if tokens[0] != "graph" {
                    return Err(parse_err(
                        line_no,
                        format!(
                            "expected header 'graph <n> [directed]', found '{}'",
                            tokens[0]
                        ),
                    ));
                }
                if tokens.len() < 2 || tokens.len() > 3 {
                    return Err(parse_err(line_no, "expected 'graph <n> [directed]'"));
                }
                let n: usize = tokens[1].parse().map_err(|_| {
                    parse_err(line_no, format!("invalid vertex count '{}'", tokens[1]))
                })?;
                let directed = match tokens.get(2) {
                    None => false,
                    Some(&"directed") => true,
                    Some(other) => {
                        return Err(parse_err(
                            line_no,
                            format!("expected 'directed' or end of line, found '{other}'"),
                        ))
                    }
                };
                header = Some((n, directed, line_no));
            }
            Some((n, _, _)) => {
                if tokens.len() < 2 || tokens.len() > 3 {
                    return Err(parse_err(line_no, "expected '<u> <v> [multiplicity]'"));
                }
                let endpoint = |tok: &str| -> Result<usize> {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| parse_err(line_no, format!("invalid vertex '{tok}'")))?;
                    if v > n {
                        return Err(parse_err(
                            line_no,
                            format!("vertex {v} is out of range 0..={n}"),
                        ));
                    }
                    Ok(v)
                };
                let u = endpoint(tokens[0])?;
                let v = endpoint(tokens[1])?;
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
                }
                let mult: u32 = match tokens.get(2) {
                    None => 1,
                    Some(tok) => tok
                        .parse()
                        .map_err(|_| parse_err(line_no, format!("invalid multiplicity '{tok}'")))?,
                };
                if mult == 0 {
                    return Err(parse_err(line_no, "multiplicity must be positive"));
                }
                edges.push((u, v, mult));
            }
        }
    }
    let Some((n, directed, header_line)) = header else {
        return Err(parse_err(1, "missing 'graph <n>' header"));
    };
    let built = if directed {
        RootedMultigraph::directed(n, &edges)
    } else {
        RootedMultigraph::undirected(n, &edges)
    };
    built.map_err(|e| match e {
        // Per-edge problems were caught above with their own line; anything
        // left concerns the header.
        Error::EmptyGraph | Error::TooManyVertices(_) => parse_err(header_line, e.to_string()),
        other => other,
    })
}

/// Reads and parses a graph file.
pub fn read_graph_file(path: impl AsRef<Path>) -> Result<RootedMultigraph> {
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text)
}
