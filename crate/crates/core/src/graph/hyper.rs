use thiserror::Error;

use super::{Graph, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("hyperedge {0} is empty")]
    EmptyHyperedge(usize),
    #[error("hyperedge {edge} contains vertex {vertex} outside 0..{n}")]
    VertexOutOfRange { edge: usize, vertex: usize, n: usize },
}

/// Hypergraph on vertices `0..n` with non-empty hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    hyperedges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, hyperedges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        let mut normalized = Vec::with_capacity(hyperedges.len());
        for (i, mut e) in hyperedges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(HypergraphError::EmptyHyperedge(i));
            }
            if let Some(&vertex) = e.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange { edge: i, vertex, n });
            }
            e.sort_unstable();
            e.dedup();
            normalized.push(e);
        }
        Ok(Hypergraph { n, hyperedges: normalized })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }
}

/// First line `n`, then one whitespace-separated vertex list per hyperedge.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first, header) = lines.next().ok_or(ParseError { line: 1, message: "missing vertex count".into() })?;
    let n: usize =
        header.parse().map_err(|_| ParseError { line: first, message: format!("invalid vertex count `{header}`") })?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let mut e = Vec::new();
        for tok in l.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| ParseError { line, message: format!("invalid vertex `{tok}`") })?;
            if v >= n {
                return Err(ParseError { line, message: format!("vertex {v} out of range (n = {n})") });
            }
            e.push(v);
        }
        edges.push(e);
    }
    Ok(Hypergraph::new(n, edges).expect("vertices validated and lines non-empty"))
}

/// One vertex per hyperedge; two vertices adjacent iff their hyperedges meet.
pub fn line_graph(h: &Hypergraph) -> Graph {
    let m = h.hyperedges.len();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); h.n];
    for (i, e) in h.hyperedges.iter().enumerate() {
        for &v in e {
            incident[v].push(i);
        }
    }
    let mut g = Graph::new(m);
    for edges in &incident {
        for (a, &i) in edges.iter().enumerate() {
            for &j in &edges[a + 1..] {
                g.add_edge(i, j).expect("hyperedge indices are in range");
            }
        }
    }
    g
}
