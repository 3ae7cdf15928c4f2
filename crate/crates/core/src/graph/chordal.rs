use super::{Graph, GraphError};

/// Maximum cardinality search; returns vertices in visiting order.
///
/// The search starts at a vertex of maximum degree (lowest index on ties),
/// which puts the center of a star of cliques at the end of the elimination
/// ordering.
fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut order = Vec::with_capacity(n);

    let start = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)));
    // Reverse so that popping yields lowest index first.
    buckets[0] = (0..n).rev().collect();
    if let Some(s) = start {
        buckets[0].push(s);
    }
    let mut top = 0usize;
    while order.len() < n {
        let v = loop {
            match buckets[top].pop() {
                Some(v) if !visited[v] && weight[v] == top => break v,
                Some(_) => {}
                None => top -= 1,
            }
        };
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
                buckets[weight[w]].push(w);
                top = top.max(weight[w]);
            }
        }
    }
    order
}

/// Returns an elimination ordering in which every vertex's later neighbors
/// form a clique, or `None` when the graph is not chordal.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let mut peo = maximum_cardinality_search(g);
    peo.reverse();
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &peo {
        let later = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]);
        let Some(follower) = later.clone().min_by_key(|&w| pos[w]) else {
            continue;
        };
        if later.filter(|&w| w != follower).any(|w| !g.has_edge(follower, w)) {
            return None;
        }
    }
    Some(peo)
}

/// Maximum independent set of a chordal graph: greedy over a perfect
/// elimination ordering. The result is sorted.
pub fn max_independent_set(g: &Graph) -> Result<Vec<usize>, GraphError> {
    let peo = perfect_elimination_ordering(g).ok_or(GraphError::NotChordal)?;
    let mut blocked = vec![false; g.n()];
    let mut set = Vec::new();
    for v in peo {
        if !blocked[v] {
            set.push(v);
            for &w in g.neighbors(v) {
                blocked[w] = true;
            }
        }
    }
    set.sort_unstable();
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_peo(g: &Graph, order: &[usize]) -> bool {
        (0..order.len()).all(|i| {
            let later: Vec<usize> = order[i + 1..].iter().copied().filter(|&w| g.has_edge(order[i], w)).collect();
            g.is_clique(&later)
        })
    }

    fn brute_alpha(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&mask| {
                (0..n).all(|u| mask & (1 << u) == 0 || g.neighbors(u).iter().all(|&w| mask & (1 << w) == 0))
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn complete_graph_orderings() {
        let g = Graph::complete(5);
        let peo = perfect_elimination_ordering(&g).unwrap();
        assert_eq!(peo.len(), 5);
        assert_eq!(max_independent_set(&g).unwrap().len(), 1);
    }

    #[test]
    fn four_cycle_is_not_chordal() {
        assert!(perfect_elimination_ordering(&Graph::cycle(4)).is_none());
        assert_eq!(max_independent_set(&Graph::cycle(4)), Err(GraphError::NotChordal));
    }

    #[test]
    fn bowtie_puts_cut_vertex_last() {
        let g = Graph::from_edges(5, [(1, 2), (1, 0), (2, 0), (0, 3), (0, 4), (3, 4)]).unwrap();
        let peo = perfect_elimination_ordering(&g).unwrap();
        assert!(is_peo(&g, &peo));
        assert_eq!(*peo.last().unwrap(), 0);
        assert_eq!(max_independent_set(&g).unwrap().len(), 2);
    }

    #[test]
    fn mis_matches_brute_force_on_chordal_samples() {
        let graphs = [
            Graph::path(7),
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)]).unwrap(),
            // fan: a path plus a universal vertex
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (5, 0), (5, 1), (5, 2), (5, 3), (5, 4)]).unwrap(),
            Graph::new(4),
        ];
        for g in &graphs {
            let peo = perfect_elimination_ordering(g).expect("chordal");
            assert!(is_peo(g, &peo));
            let mis = max_independent_set(g).unwrap();
            assert!(g.is_independent(&mis));
            assert_eq!(mis.len(), brute_alpha(g));
        }
    }

    #[test]
    fn longer_cycles_rejected() {
        for n in 4..9 {
            assert!(perfect_elimination_ordering(&Graph::cycle(n)).is_none());
        }
        assert!(perfect_elimination_ordering(&Graph::cycle(3)).is_some());
    }
}
