//! Oracles shared by the integration tests. Nothing here calls into the
//! library's own algorithms beyond building graphs.
#![allow(dead_code)]

use std::collections::HashMap;

use blockeq::wellcovered::{semi_balanced, AttachOp, WCDecomposition};
use blockeq::Graph;
use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;
use rand::Rng;

/// BFS distance matrix; `usize::MAX` between components.
pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut d = vec![vec![usize::MAX; n]; n];
    for (s, row) in d.iter_mut().enumerate() {
        row[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if row[w] == usize::MAX {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    d
}

/// Connected block graphs are exactly the connected graphs whose distance
/// satisfies the four-point condition.
pub fn is_connected_block_graph(g: &Graph) -> bool {
    let d = distances(g);
    let n = g.n();
    if d.iter().flatten().any(|&x| x == usize::MAX) {
        return false;
    }
    for u in 0..n {
        for v in u + 1..n {
            for x in 0..n {
                for y in x + 1..n {
                    let a = d[u][v] + d[x][y];
                    let b = d[u][x] + d[v][y];
                    let c = d[u][y] + d[v][x];
                    let mut s = [a, b, c];
                    s.sort_unstable();
                    if s[1] != s[2] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Exhaustive independence number over vertex subsets.
pub fn brute_alpha(g: &Graph) -> usize {
    max_independent_with(g, |_| true)
}

/// Largest independent set containing `v`.
pub fn brute_alpha_v(g: &Graph, v: usize) -> usize {
    max_independent_with(g, |mask| mask & (1 << v) != 0)
}

pub fn brute_alpha_min(g: &Graph) -> usize {
    (0..g.n()).map(|v| brute_alpha_v(g, v)).min().unwrap()
}

fn max_independent_with(g: &Graph, keep: impl Fn(u64) -> bool) -> usize {
    let n = g.n();
    assert!(n <= 24, "brute force only for tiny graphs");
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | (1 << w))).collect();
    let mut best = 0;
    for mask in 0u64..(1 << n) {
        if !keep(mask) || (mask.count_ones() as usize) <= best {
            continue;
        }
        if (0..n).all(|v| mask & (1 << v) == 0 || adj[v] & mask == 0) {
            best = mask.count_ones() as usize;
        }
    }
    best
}

/// Proper, every color in `1..=k`, class sizes differing by at most one.
pub fn is_equitable_coloring(g: &Graph, k: usize, assignment: &[usize]) -> bool {
    if assignment.len() != g.n() || assignment.iter().any(|&c| c == 0 || c > k) {
        return false;
    }
    if g.edges().any(|(u, v)| assignment[u] == assignment[v]) {
        return false;
    }
    let mut sizes = vec![0usize; k];
    for &c in assignment {
        sizes[c - 1] += 1;
    }
    sizes.iter().max().unwrap() - sizes.iter().min().unwrap() <= 1
}

/// Random recipe staying within `max_n` vertices and clique size `max_q`.
pub fn random_recipe(rng: &mut impl Rng, max_n: usize, max_q: usize) -> WCDecomposition {
    let base = rng.gen_range(2..=max_q);
    let mut recipe = WCDecomposition { base, ops: Vec::new() };
    let target = rng.gen_range(base..=max_n);
    for _ in 0..64 {
        let n = recipe.vertex_count();
        let s = rng.gen_range(2..=max_q);
        let pendants: Vec<usize> = (1..s).map(|_| rng.gen_range(2..=max_q)).collect();
        let grow = s - 1 + pendants.iter().map(|q| q - 1).sum::<usize>();
        if n + grow > target {
            continue;
        }
        recipe.ops.push(AttachOp { host: rng.gen_range(0..n), s, pendants });
    }
    recipe
}

type PetGraph = UnGraph<(), ()>;
type Invariant = (Vec<usize>, Vec<usize>);

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut p = UnGraph::new_undirected();
    let nodes: Vec<_> = (0..g.n()).map(|_| p.add_node(())).collect();
    for (u, v) in g.edges() {
        p.add_edge(nodes[u], nodes[v], ());
    }
    p
}

fn invariant(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    let mut dist: Vec<usize> = distances(g).into_iter().flatten().collect();
    dist.sort_unstable();
    (degrees, dist)
}

/// Isomorphism classes of connected block graphs on `n` labeled vertices.
pub fn brute_force_classes(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut buckets: HashMap<Invariant, Vec<(Graph, PetGraph)>> = HashMap::new();
    for mask in 0u64..(1 << pairs.len()) {
        // a connected graph needs at least n - 1 edges
        if (mask.count_ones() as usize) + 1 < n {
            continue;
        }
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).unwrap();
        if !is_connected_block_graph(&g) {
            continue;
        }
        let reps = buckets.entry(invariant(&g)).or_default();
        let pg = to_petgraph(&g);
        if !reps.iter().any(|(_, r)| is_isomorphic(r, &pg)) {
            reps.push((g, pg));
        }
    }
    buckets.into_values().flatten().map(|(g, _)| g).collect()
}

/// Row sums of pendant sizes (at least 2, non-increasing) plus a trailing 1,
/// a column count `y >= l`, and a semi-balanced target with the same total.
pub fn random_ferrers_case(rng: &mut impl Rng) -> (Vec<usize>, usize, Vec<usize>) {
    let l = rng.gen_range(1..=8);
    let y = l + rng.gen_range(0..=5);
    let mut q: Vec<usize> = (1..l).map(|_| rng.gen_range(2..=y.max(2))).collect();
    q.sort_unstable_by(|a, b| b.cmp(a));
    q.push(1);
    let total: usize = q.iter().sum();
    let mut b: Vec<usize> = (0..y).map(|j| total / y + usize::from(j < total % y)).collect();
    if rng.gen_bool(0.5) {
        // shift one unit onto the first column when that stays semi-balanced
        if let Some(j) = (1..y).rev().find(|&j| b[j] > 0) {
            let mut bumped = b.clone();
            bumped[j] -= 1;
            bumped[0] += 1;
            bumped.sort_unstable_by(|a, b| b.cmp(a));
            if semi_balanced(&bumped, l) {
                b = bumped;
            }
        }
    }
    (q, y, b)
}
