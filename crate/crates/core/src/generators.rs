//! Named graph families used as fixtures and by the CLI `generate` command.

use crate::graph::Graph;

/// A clique of size `k` with `k + 1` pendant cliques of size `k + 1` glued to
/// each of its vertices. Returns the graph and the base clique's vertices.
///
/// For `k >= 2` this family sits exactly one above the lower bound:
/// `omega = k + 1` but the equitable chromatic number is `k + 2`.
pub fn fig2_family(k: usize) -> (Graph, Vec<usize>) {
    let mut g = Graph::complete(k);
    let base: Vec<usize> = (0..k).collect();
    for &v in &base {
        for _ in 0..=k {
            g.attach_clique(v, k + 1).expect("base vertex exists");
        }
    }
    (g, base)
}

/// Cliques of the given sizes (each at least 1) sharing vertex 0.
pub fn star_of_cliques(sizes: &[usize]) -> Graph {
    let mut g = Graph::new(1);
    for &s in sizes {
        g.attach_clique(0, s).expect("center exists");
    }
    g
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Graph {
    star_of_cliques(&[3, 3])
}
