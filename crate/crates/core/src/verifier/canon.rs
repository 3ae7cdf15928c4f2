use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{block_decomposition, Graph, GraphError};

/// Isomorphism-invariant code of a connected block graph.
///
/// The graph is determined up to isomorphism by its block-cut tree with
/// every block labeled by its size, so the code is an AHU encoding of that
/// tree rooted at its center. Blocks print as `b<size>(...)`, cut vertices as
/// `c(...)`, children sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode, GraphError> {
    if g.n() == 0 {
        return Err(GraphError::Empty);
    }
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    let bct = block_decomposition(g);
    if !bct.blocks().iter().all(|b| g.is_clique(b)) {
        return Err(GraphError::NotBlockGraph);
    }

    // tree nodes: blocks first, then cut vertices
    let blocks = bct.block_count();
    let cuts = bct.cut_vertices();
    let mut cut_node = vec![usize::MAX; g.n()];
    for (i, &c) in cuts.iter().enumerate() {
        cut_node[c] = blocks + i;
    }
    let nodes = blocks + cuts.len();
    let mut adj = vec![Vec::new(); nodes];
    for (b, c) in bct.incidence() {
        adj[b].push(cut_node[c]);
        adj[cut_node[c]].push(b);
    }
    let label: Vec<Option<usize>> = (0..nodes).map(|x| (x < blocks).then(|| bct.block(x).len())).collect();

    let code = tree_centers(&adj)
        .into_iter()
        .map(|root| encode(&adj, &label, root))
        .min()
        .expect("a non-empty tree has a center");
    Ok(CanonicalCode(code))
}

/// One or two centers, found by peeling leaves.
fn tree_centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in &adj[leaf] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn encode(adj: &[Vec<usize>], label: &[Option<usize>], root: usize) -> String {
    // iterative post-order to stay clear of deep recursion on long paths
    let mut parent = vec![usize::MAX; adj.len()];
    let mut order = Vec::with_capacity(adj.len());
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(x) = stack.pop() {
        order.push(x);
        for &y in &adj[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let mut codes: Vec<Option<String>> = vec![None; adj.len()];
    let mut children: Vec<Vec<String>> = vec![Vec::new(); adj.len()];
    for &x in order.iter().rev() {
        let mut kids = std::mem::take(&mut children[x]);
        kids.sort_unstable();
        let head = match label[x] {
            Some(size) => format!("b{size}("),
            None => "c(".to_string(),
        };
        let code = head + &kids.concat() + ")";
        if x != root {
            children[parent[x]].push(code);
        } else {
            codes[x] = Some(code);
        }
    }
    codes[root].take().expect("root encoded last")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::bowtie;

    #[test]
    fn relabeled_triangle() {
        let g = Graph::complete(3);
        let h = g.relabel(&[2, 0, 1]);
        assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
        assert_eq!(canonical_code(&g).unwrap().as_str(), "b3()");
    }

    #[test]
    fn path_differs_from_triangle() {
        assert_ne!(canonical_code(&Graph::path(3)).unwrap(), canonical_code(&Graph::complete(3)).unwrap());
    }

    #[test]
    fn bowtie_labelings_agree() {
        let g = bowtie();
        let a = canonical_code(&g).unwrap();
        for perm in [[4, 3, 2, 1, 0], [1, 0, 2, 3, 4], [2, 4, 0, 1, 3]] {
            assert_eq!(canonical_code(&g.relabel(&perm)).unwrap(), a);
        }
    }

    #[test]
    fn even_and_odd_paths() {
        // two centers in the block-cut tree of P_2 and of P_4
        let p2 = canonical_code(&Graph::path(2)).unwrap();
        assert_eq!(p2.as_str(), "b2()");
        let p4 = Graph::path(4);
        assert_eq!(canonical_code(&p4).unwrap(), canonical_code(&p4.relabel(&[3, 2, 1, 0])).unwrap());
    }

    #[test]
    fn errors() {
        assert_eq!(canonical_code(&Graph::cycle(4)), Err(GraphError::NotBlockGraph));
        assert_eq!(canonical_code(&Graph::new(2)), Err(GraphError::NotConnected));
        assert_eq!(canonical_code(&Graph::new(0)), Err(GraphError::Empty));
    }
}
