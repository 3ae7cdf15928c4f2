use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use super::{Graph, GraphError};

/// Supported plain-text graph formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    /// First line `n`, then one `u v` pair per line (0-based). `#` starts a comment line.
    EdgeList,
    /// `p edge n m` header followed by `e u v` lines (1-based).
    Dimacs,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" | "edgelist" | "edges" => Ok(Format::EdgeList),
            "dimacs" | "col" => Ok(Format::Dimacs),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn number(token: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = token.ok_or_else(|| ParseError::new(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| ParseError::new(line, format!("invalid {what} `{tok}`")))
}

fn add_edge(g: &mut Graph, u: usize, v: usize, line: usize) -> Result<(), ParseError> {
    g.add_edge(u, v).map_err(|e| match e {
        GraphError::SelfLoop(w) => ParseError::new(line, format!("self-loop at vertex {w}")),
        GraphError::VertexOutOfRange { vertex, n } => {
            ParseError::new(line, format!("vertex {vertex} out of range (n = {n})"))
        }
        other => ParseError::new(line, other.to_string()),
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().ok_or_else(|| ParseError::new(1, "missing vertex count"))?;
    let mut toks = header.split_whitespace();
    let n = number(toks.next(), first, "vertex count")?;
    if toks.next().is_some() {
        return Err(ParseError::new(first, "expected a single vertex count"));
    }
    let mut g = Graph::new(n);
    for (line, l) in lines {
        let mut toks = l.split_whitespace();
        let u = number(toks.next(), line, "vertex")?;
        let v = number(toks.next(), line, "vertex")?;
        if toks.next().is_some() {
            return Err(ParseError::new(line, "expected exactly two vertices"));
        }
        add_edge(&mut g, u, v, line)?;
    }
    Ok(g)
}

pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut g: Option<Graph> = None;
    for (line, l) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        let mut toks = l.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if g.is_some() {
                    return Err(ParseError::new(line, "duplicate problem line"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(ParseError::new(
                            line,
                            format!("unsupported problem type `{}`", other.unwrap_or("")),
                        ))
                    }
                }
                let n = number(toks.next(), line, "vertex count")?;
                number(toks.next(), line, "edge count")?;
                g = Some(Graph::new(n));
            }
            Some("e") => {
                let graph = g.as_mut().ok_or_else(|| ParseError::new(line, "edge before problem line"))?;
                let u = number(toks.next(), line, "vertex")?;
                let v = number(toks.next(), line, "vertex")?;
                if u == 0 || v == 0 {
                    return Err(ParseError::new(line, "DIMACS vertices are 1-based"));
                }
                add_edge(graph, u - 1, v - 1, line)?;
            }
            Some(tag) => return Err(ParseError::new(line, format!("unknown line tag `{tag}`"))),
        }
    }
    g.ok_or_else(|| ParseError::new(1, "missing problem line"))
}

/// Serializes in the edge-list format accepted by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
