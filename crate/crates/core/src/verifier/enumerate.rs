use std::collections::BTreeMap;

use rayon::prelude::*;

use super::canon::{canonical_code, CanonicalCode};
use crate::graph::Graph;

/// All connected block graphs on `1..=n_max` vertices, one per isomorphism
/// class. `levels[m]` holds the graphs on `m` vertices sorted by canonical
/// code; `levels[0]` is empty.
///
/// Level `m` is produced by gluing a clique of size `s` (adding `s - 1`
/// vertices) at every vertex of every graph on `m - s + 1` vertices. Every
/// connected block graph with at least two vertices has a pendant block, so
/// this reaches all of them; duplicates are removed by canonical code.
pub fn enumerate_levels(n_max: usize) -> Vec<Vec<(CanonicalCode, Graph)>> {
    let mut levels: Vec<Vec<(CanonicalCode, Graph)>> = vec![Vec::new(); n_max + 1];
    if n_max == 0 {
        return levels;
    }
    let k1 = Graph::new(1);
    levels[1] = vec![(canonical_code(&k1).expect("K1 is a block graph"), k1)];
    for m in 2..=n_max {
        let candidates: Vec<(CanonicalCode, Graph)> = (2..=m)
            .flat_map(|s| levels[m - s + 1].iter().map(move |(_, parent)| (s, parent)))
            .collect::<Vec<_>>()
            .into_par_iter()
            .flat_map_iter(|(s, parent)| {
                (0..parent.n()).map(move |v| {
                    let mut child = parent.clone();
                    child.attach_clique(v, s).expect("vertex exists");
                    let code = canonical_code(&child).expect("gluing a clique keeps a block graph");
                    (code, child)
                })
            })
            .collect();
        let mut unique: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
        for (code, g) in candidates {
            unique.entry(code).or_insert(g);
        }
        levels[m] = unique.into_iter().collect();
    }
    levels
}

/// Connected block graphs on exactly `n` vertices, one per isomorphism class.
pub fn enumerate(n: usize) -> Vec<Graph> {
    enumerate_levels(n).pop().unwrap_or_default().into_iter().map(|(_, g)| g).collect()
}
