//! Connected block graphs whose every vertex lies in an independent set of
//! size at most 1 or 2 (minimum over vertices), with optimal equitable
//! colorings.
//!
//! With minimum 1 the graph is a star of cliques: cliques sharing one vertex.
//! With minimum 2 it is a star of cliques with one extra clique `Q_0` hung on
//! a simplicial vertex `w` of a star clique, either directly or through a
//! `K_2` bridge.

use std::collections::BinaryHeap;

use serde::Serialize;
use thiserror::Error;

use crate::bounds::lower_bound;
use crate::coloring::{check, Coloring, Verdict};
use crate::graph::{block_decomposition, BlockCutTree, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmallAlphaError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("k = {k} is below the clique number {omega}")]
    TooFewColors { k: usize, omega: usize },
    #[error("periodic coloring with k = {k} is not equitable: class sizes {sizes:?}")]
    NotEquitable { k: usize, sizes: Vec<usize> },
    #[error("constructed coloring failed the checker: {0:?}")]
    Construction(Verdict),
}

/// Cliques sharing `center`, ordered by non-decreasing size. `K_1` is the
/// star with no cliques.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarOfCliques {
    pub center: usize,
    pub sizes: Vec<usize>,
    /// Vertex sets of the cliques (each sorted, each containing `center`),
    /// in the order of `sizes`.
    pub cliques: Vec<Vec<usize>>,
}

impl StarOfCliques {
    pub fn vertex_count(&self) -> usize {
        1 + self.sizes.iter().map(|s| s - 1).sum::<usize>()
    }

    pub fn omega(&self) -> usize {
        self.sizes.last().copied().unwrap_or(1)
    }

    /// `B_{n_1,...,n_t}`
    pub fn notation(&self) -> String {
        let parts: Vec<String> = self.sizes.iter().map(usize::to_string).collect();
        format!("B_{{{}}}", parts.join(","))
    }
}

fn check_block_graph(g: &Graph) -> Result<BlockCutTree, GraphError> {
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
    Ok(bct)
}

fn star_at(bct: &BlockCutTree, center: usize) -> StarOfCliques {
    let mut cliques: Vec<Vec<usize>> = bct.blocks_of(center).iter().map(|&b| bct.block(b).to_vec()).collect();
    cliques.sort_by_key(|c| (c.len(), c.clone()));
    StarOfCliques { center, sizes: cliques.iter().map(Vec::len).collect(), cliques }
}

/// A star of cliques exactly when some vertex is adjacent to all others.
/// Returns `None` for disconnected or non-block input.
pub fn recognize_alpha_min_1(g: &Graph) -> Option<StarOfCliques> {
    let bct = check_block_graph(g).ok()?;
    let center = (0..g.n()).find(|&v| g.degree(v) + 1 == g.n())?;
    Some(star_at(&bct, center))
}

/// Maximum matching size of the complete multipartite graph with the given
/// part sizes.
pub fn multipartite_matching(parts: &[usize]) -> usize {
    let total: usize = parts.iter().sum();
    let largest = parts.iter().copied().max().unwrap_or(0);
    let rest = total - largest;
    if largest >= rest {
        rest
    } else {
        total / 2
    }
}

/// Equitable chromatic number of a star of cliques: the center takes a class
/// of its own, every other class has at most two vertices from different
/// cliques.
pub fn chi_eq_star(s: &StarOfCliques) -> usize {
    let parts: Vec<usize> = s.sizes.iter().map(|n| n - 1).collect();
    let others = s.vertex_count() - 1;
    1 + others - multipartite_matching(&parts)
}

/// Pairs vertices from different parts: all of the smaller parts against the
/// largest when it dominates, otherwise always the two currently largest.
fn multipartite_pairs(parts: &[Vec<usize>]) -> (Vec<[usize; 2]>, Vec<usize>) {
    let mut heap: BinaryHeap<(usize, std::cmp::Reverse<usize>)> =
        parts.iter().enumerate().filter(|(_, p)| !p.is_empty()).map(|(i, p)| (p.len(), std::cmp::Reverse(i))).collect();
    let mut next = vec![0usize; parts.len()];
    let mut take = |i: usize| {
        let v = parts[i][next[i]];
        next[i] += 1;
        v
    };
    let mut pairs = Vec::new();
    let mut singles = Vec::new();
    loop {
        match (heap.pop(), heap.pop()) {
            (Some((la, ia)), Some((lb, ib))) => {
                pairs.push([take(ia.0), take(ib.0)]);
                if la > 1 {
                    heap.push((la - 1, ia));
                }
                if lb > 1 {
                    heap.push((lb - 1, ib));
                }
            }
            (Some((la, ia)), None) => {
                singles.extend((0..la).map(|_| take(ia.0)));
                break;
            }
            _ => break,
        }
    }
    (pairs, singles)
}

/// Optimal equitable coloring of a star of cliques: the center alone in
/// color 1, then pairs from a maximum matching of the complement, then the
/// leftovers.
pub fn color_alpha_min_1(s: &StarOfCliques) -> Coloring {
    let parts: Vec<Vec<usize>> =
        s.cliques.iter().map(|c| c.iter().copied().filter(|&v| v != s.center).collect()).collect();
    let (pairs, singles) = multipartite_pairs(&parts);
    let n = s.vertex_count();
    let mut classes = vec![vec![s.center]];
    classes.extend(pairs.into_iter().map(|p| p.to_vec()));
    classes.extend(singles.into_iter().map(|v| vec![v]));
    let k = classes.len();
    debug_assert_eq!(k, chi_eq_star(s));
    let mut assignment = vec![0; n];
    for (c, class) in classes.iter().enumerate() {
        for &v in class {
            assignment[v] = c + 1;
        }
    }
    Coloring::new(k, assignment).expect("colors within range")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// `Q_0` glued directly at `w`
    Direct,
    /// a `K_2` from `w` to `z`, then `Q_0` glued at `z`
    Bridged,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaMin2Structure {
    pub variant: Variant,
    /// The star around `x`, without the bridge.
    pub star: StarOfCliques,
    /// Index into `star.cliques` of the clique containing `w`.
    pub l: usize,
    pub n0: usize,
    /// Vertex of `Q_l` (other than the center) where the extension hangs.
    pub attach_simplicial: usize,
    /// Bridge end that `Q_0` is glued to (bridged variant only).
    pub bridge_end: Option<usize>,
    /// Vertex set of `Q_0`, sorted.
    pub q0: Vec<usize>,
}

impl AlphaMin2Structure {
    pub fn x(&self) -> usize {
        self.star.center
    }

    /// Partner of `x` in the first color class: the lowest simplicial vertex
    /// of `Q_0` (direct) or the bridge end (bridged).
    pub fn y(&self) -> usize {
        match self.variant {
            Variant::Direct => *self.q0.iter().find(|&&v| v != self.attach_simplicial).expect("n0 >= 2"),
            Variant::Bridged => self.bridge_end.expect("bridged structure has a bridge end"),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.star.vertex_count()
            + self.n0
            + match self.variant {
                Variant::Direct => 0,
                Variant::Bridged => 1,
            }
            - 1
    }

    /// `B_{n_l-n_0,...}` or `B_{n_l-2-n_0,...}`, remaining sizes descending.
    pub fn notation(&self) -> String {
        let nl = self.star.sizes[self.l];
        let head = match self.variant {
            Variant::Direct => format!("{nl}-{}", self.n0),
            Variant::Bridged => format!("{nl}-2-{}", self.n0),
        };
        let mut rest: Vec<usize> =
            self.star.sizes.iter().enumerate().filter(|&(i, _)| i != self.l).map(|(_, &s)| s).collect();
        rest.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts = vec![head];
        parts.extend(rest.iter().map(usize::to_string));
        format!("B_{{{}}}", parts.join(","))
    }
}

fn other_block(bct: &BlockCutTree, v: usize, not: usize) -> Option<usize> {
    match bct.blocks_of(v) {
        [a, b] if *a == not => Some(*b),
        [a, b] if *b == not => Some(*a),
        _ => None,
    }
}

fn shared_block(bct: &BlockCutTree, u: usize, v: usize) -> Option<usize> {
    bct.blocks_of(u).iter().copied().find(|b| bct.blocks_of(v).contains(b))
}

/// Recognizes the two shapes by their cut vertices. Direct: exactly two cut
/// vertices `x` (in at least two blocks) and `w` (in exactly two). Bridged:
/// exactly three, `x - w - z` with `{w, z}` a block of size 2 and `w`, `z`
/// each in exactly two blocks. Candidates for `x` are tried in index order,
/// direct before bridged.
pub fn recognize_alpha_min_2(g: &Graph) -> Option<AlphaMin2Structure> {
    let bct = check_block_graph(g).ok()?;
    let cuts = bct.cut_vertices();
    let build = |variant, x: usize, w: usize, z: Option<usize>, q0_block: usize| {
        let host = shared_block(&bct, x, w)?;
        let star = star_at(&bct, x);
        let l = star.cliques.iter().position(|c| c == bct.block(host))?;
        let q0 = bct.block(q0_block).to_vec();
        Some(AlphaMin2Structure { variant, n0: q0.len(), star, l, attach_simplicial: w, bridge_end: z, q0 })
    };
    match cuts[..] {
        [c1, c2] => [(c1, c2), (c2, c1)].into_iter().find_map(|(x, w)| {
            if bct.blocks_of(x).len() < 2 {
                return None;
            }
            let host = shared_block(&bct, x, w)?;
            let q0 = other_block(&bct, w, host)?;
            build(Variant::Direct, x, w, None, q0)
        }),
        [_, _, _] => {
            let mut order = cuts.clone();
            order.sort_unstable();
            order.iter().find_map(|&x| {
                if bct.blocks_of(x).len() < 2 {
                    return None;
                }
                let w = cuts.iter().copied().find(|&w| w != x && shared_block(&bct, x, w).is_some())?;
                let z = cuts.iter().copied().find(|&z| z != x && z != w)?;
                if shared_block(&bct, x, z).is_some() {
                    return None;
                }
                let host = shared_block(&bct, x, w)?;
                let bridge = other_block(&bct, w, host)?;
                if bct.block(bridge).len() != 2 || !bct.block(bridge).contains(&z) {
                    return None;
                }
                let q0 = other_block(&bct, z, bridge)?;
                build(Variant::Bridged, x, w, Some(z), q0)
            })
        }
        _ => None,
    }
}

/// The conjectured lower bound for the structure's graph.
pub fn alpha_min_2_lower_bound(st: &AlphaMin2Structure) -> usize {
    lower_bound(st.vertex_count(), st.star.omega().max(st.n0), 2)
}

/// Equitable `k`-coloring: `{x, y}` gets color 1 and the rest is filled with
/// colors `2..=k` periodically, clique by clique. Direct: `Q_l - x` (with `w`
/// last), then `Q_0 - y - w`, then the other star cliques. Bridged: every
/// star clique minus `x`, then `Q_0 - z`.
pub fn color_alpha_min_2(g: &Graph, st: &AlphaMin2Structure, k: usize) -> Result<Coloring, SmallAlphaError> {
    let omega = st.star.omega().max(st.n0);
    if k < omega {
        return Err(SmallAlphaError::TooFewColors { k, omega });
    }
    let (x, y, w) = (st.x(), st.y(), st.attach_simplicial);
    let minus = |c: &[usize], out: &[usize]| -> Vec<usize> { c.iter().copied().filter(|v| !out.contains(v)).collect() };
    let mut seq: Vec<usize> = Vec::with_capacity(g.n());
    match st.variant {
        Variant::Direct => {
            seq.extend(minus(&st.star.cliques[st.l], &[x, w]));
            seq.push(w);
            seq.extend(minus(&st.q0, &[y, w]));
            for (i, c) in st.star.cliques.iter().enumerate() {
                if i != st.l {
                    seq.extend(minus(c, &[x]));
                }
            }
        }
        Variant::Bridged => {
            for c in &st.star.cliques {
                seq.extend(minus(c, &[x]));
            }
            seq.extend(minus(&st.q0, &[y]));
        }
    }
    let mut assignment = vec![0; g.n()];
    assignment[x] = 1;
    assignment[y] = 1;
    for (i, &v) in seq.iter().enumerate() {
        assignment[v] = 2 + i % (k - 1);
    }
    let out = Coloring::new(k, assignment).map_err(|_| SmallAlphaError::Construction(Verdict::ValidNotEquitable))?;
    match check(g, &out).map_err(|_| SmallAlphaError::Construction(Verdict::ValidNotEquitable))? {
        Verdict::ValidEquitable => Ok(out),
        Verdict::ValidNotEquitable => Err(SmallAlphaError::NotEquitable { k, sizes: out.class_sizes().to_vec() }),
        v => Err(SmallAlphaError::Construction(v)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{alpha_min, conjecture_bounds};
    use crate::coloring::chi_equitable;
    use crate::generators::{bowtie, star_of_cliques};
    use crate::verifier::{canonical_code, enumerate_levels};

    /// Star of the given sizes; `Q_0` of size `n0` glued at a non-center
    /// vertex of the clique at `host`, optionally through a bridge.
    fn extended(sizes: &[usize], host: usize, n0: usize, bridged: bool) -> Graph {
        let mut g = star_of_cliques(sizes);
        let w = 1 + sizes[..host].iter().map(|s| s - 1).sum::<usize>();
        let at = if bridged { g.attach_clique(w, 2).unwrap()[0] } else { w };
        g.attach_clique(at, n0).unwrap();
        g
    }

    #[test]
    fn matching_formula() {
        assert_eq!(multipartite_matching(&[2, 2]), 2);
        assert_eq!(multipartite_matching(&[1, 1, 1]), 1);
        assert_eq!(multipartite_matching(&[1, 1]), 1);
        assert_eq!(multipartite_matching(&[1, 5]), 1);
        assert_eq!(multipartite_matching(&[]), 0);
    }

    #[test]
    fn stars() {
        let s = recognize_alpha_min_1(&bowtie()).unwrap();
        assert_eq!(s.sizes, vec![3, 3]);
        assert_eq!(chi_eq_star(&s), 3);
        let c = color_alpha_min_1(&s);
        assert_eq!(c.classes(), vec![vec![0], vec![1, 3], vec![2, 4]]);

        let claw = recognize_alpha_min_1(&star_of_cliques(&[2, 2, 2])).unwrap();
        assert_eq!(chi_eq_star(&claw), 3);
        assert_eq!(color_alpha_min_1(&claw).class_sizes(), &[1, 2, 1]);

        let k5 = recognize_alpha_min_1(&Graph::complete(5)).unwrap();
        assert_eq!(k5.sizes, vec![5]);
        assert_eq!(chi_eq_star(&k5), 5);
        assert_eq!(recognize_alpha_min_1(&Graph::path(4)), None);
        assert_eq!(chi_eq_star(&recognize_alpha_min_1(&Graph::new(1)).unwrap()), 1);
    }

    #[test]
    fn notation_of_small_shapes() {
        let g = extended(&[3, 4, 5, 5], 3, 3, false);
        assert_eq!(g.n(), 16);
        assert_eq!(conjecture_bounds(&g).unwrap().lower, 6);
        let st = recognize_alpha_min_2(&g).unwrap();
        assert_eq!(st.variant, Variant::Direct);
        assert_eq!(st.star.sizes, vec![3, 4, 5, 5]);
        assert_eq!(st.star.sizes[st.l], 5);
        assert_eq!(st.n0, 3);
        assert_eq!(st.notation(), "B_{5-3,5,4,3}");
        let c = color_alpha_min_2(&g, &st, 6).unwrap();
        let mut sizes = c.class_sizes().to_vec();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 3, 3, 3, 3]);
        assert_eq!(c.class_sizes()[0], 2);

        let h = extended(&[2, 4, 5], 2, 4, true);
        let st = recognize_alpha_min_2(&h).unwrap();
        assert_eq!(st.variant, Variant::Bridged);
        assert_eq!(st.notation(), "B_{5-2-4,4,2}");
        let k = conjecture_bounds(&h).unwrap().lower;
        assert_eq!(check(&h, &color_alpha_min_2(&h, &st, k).unwrap()).unwrap(), Verdict::ValidEquitable);
        assert_eq!(recognize_alpha_min_2(&bowtie()), None);
    }

    #[test]
    fn smallest_direct_instance() {
        let g = extended(&[2, 2], 0, 2, false);
        assert_eq!(canonical_code(&g), canonical_code(&Graph::path(4)));
        let st = recognize_alpha_min_2(&g).unwrap();
        let c = color_alpha_min_2(&g, &st, 2).unwrap();
        assert!(c.is_equitable());
        assert_eq!(chi_equitable(&g), 2);
    }

    #[test]
    fn exhaustive_small_graphs() {
        for level in enumerate_levels(10) {
            for (_, g) in level {
                let am = alpha_min(&g).unwrap();
                let one = recognize_alpha_min_1(&g);
                let two = recognize_alpha_min_2(&g);
                assert_eq!(one.is_some(), am == 1);
                assert_eq!(two.is_some(), am == 2, "{g:?}");
                if let Some(s) = one {
                    assert_eq!(chi_eq_star(&s), chi_equitable(&g));
                    assert_eq!(check(&g, &color_alpha_min_1(&s)).unwrap(), Verdict::ValidEquitable);
                }
                if let Some(st) = two {
                    let k = conjecture_bounds(&g).unwrap().lower;
                    assert_eq!(alpha_min_2_lower_bound(&st), k);
                    assert_eq!(st.vertex_count(), g.n());
                    color_alpha_min_2(&g, &st, k).unwrap();
                }
            }
        }
    }
}
