//! Well-covered block graphs (independence number equal to its per-vertex
//! minimum): the recursive construction, its inverse, and an equitable
//! k-coloring for every k at least the clique number.
//!
//! Every such graph is a clique, or is obtained from a smaller one `H` by
//! gluing a clique `Q` of size `s` at a vertex `v` of `H` and hanging one
//! pendant clique on each of the other `s - 1` vertices of `Q`.

mod ferrers;

pub use ferrers::{dominates, gale_ryser_transform, modified_ferrers, semi_balanced, ZeroOneMatrix};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{check, Coloring, Verdict};
use crate::graph::{block_decomposition, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WellCoveredError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("base clique must have at least one vertex")]
    EmptyBase,
    #[error("a single-vertex base cannot host a clique: the result is not well-covered")]
    TrivialBase,
    #[error("op {op}: host {host} does not exist in a graph on {n} vertices")]
    HostOutOfRange { op: usize, host: usize, n: usize },
    #[error("op {op}: clique size {s} is below 2")]
    CliqueTooSmall { op: usize, s: usize },
    #[error("op {op}: expected {expected} pendant sizes, got {got}")]
    PendantCount { op: usize, expected: usize, got: usize },
    #[error("op {op}: pendant clique size {size} is below 2")]
    PendantTooSmall { op: usize, size: usize },
    #[error("graph is not well-covered")]
    NotWellCovered,
    #[error("k = {k} is below the clique number {omega}")]
    TooFewColors { k: usize, omega: usize },
    #[error("row sums {0:?} must be positive and non-increasing")]
    BadRowSums(Vec<usize>),
    #[error("need at least {needed} columns, have {y}")]
    TooFewColumns { needed: usize, y: usize },
    #[error("vector sums differ: {a} vs {b}")]
    SumMismatch { a: usize, b: usize },
    #[error("target has {got} entries, matrix has {expected} columns")]
    TargetLength { expected: usize, got: usize },
    #[error("target {0:?} is not non-increasing")]
    BadTarget(Vec<usize>),
    #[error("matrix lacks its anti-diagonal")]
    MissingAntiDiagonal,
    #[error("column sums {columns:?} do not dominate {target:?}")]
    NotDominated { columns: Vec<usize>, target: Vec<usize> },
    #[error("no movable one from column {from} to column {to}")]
    NoSwap { from: usize, to: usize },
    #[error("color counts {0:?} are not equitable")]
    NotEquitable(Vec<usize>),
    #[error("color {color} is outside 1..={k}")]
    BadColor { color: usize, k: usize },
    #[error("color {0} would be used a negative number of times")]
    NegativeTarget(usize),
    #[error("constructed coloring failed the checker: {0:?}")]
    Construction(Verdict),
}

/// One application of the construction: glue a clique of size `s` at `host`
/// and hang pendant cliques of the given sizes (each counting its cut
/// vertex) on the `s - 1` new clique vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttachOp {
    pub host: usize,
    pub s: usize,
    pub pendants: Vec<usize>,
}

/// Recipe `{base, ops}`: start from `K_base` and apply `ops` in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WCDecomposition {
    pub base: usize,
    pub ops: Vec<AttachOp>,
}

impl WCDecomposition {
    /// Largest clique the recipe creates.
    pub fn omega(&self) -> usize {
        self.ops
            .iter()
            .flat_map(|op| std::iter::once(op.s).chain(op.pendants.iter().copied()))
            .fold(self.base, usize::max)
    }

    pub fn vertex_count(&self) -> usize {
        self.base + self.ops.iter().map(|op| op.s - 1 + op.pendants.iter().map(|q| q - 1).sum::<usize>()).sum::<usize>()
    }
}

/// Vertices created by one op, in creation order.
#[derive(Debug, Clone)]
struct Applied {
    host: usize,
    /// `(v_i, other vertices of its pendant clique)`
    arms: Vec<(usize, Vec<usize>)>,
}

fn apply(g: &mut Graph, idx: usize, op: &AttachOp) -> Result<Applied, WellCoveredError> {
    if op.host >= g.n() {
        return Err(WellCoveredError::HostOutOfRange { op: idx, host: op.host, n: g.n() });
    }
    if op.s < 2 {
        return Err(WellCoveredError::CliqueTooSmall { op: idx, s: op.s });
    }
    if op.pendants.len() != op.s - 1 {
        return Err(WellCoveredError::PendantCount { op: idx, expected: op.s - 1, got: op.pendants.len() });
    }
    if let Some(&size) = op.pendants.iter().find(|&&q| q < 2) {
        return Err(WellCoveredError::PendantTooSmall { op: idx, size });
    }
    let cuts = g.attach_clique(op.host, op.s)?;
    let mut arms = Vec::with_capacity(cuts.len());
    for (&u, &q) in cuts.iter().zip(&op.pendants) {
        arms.push((u, g.attach_clique(u, q)?));
    }
    Ok(Applied { host: op.host, arms })
}

fn replay(recipe: &WCDecomposition) -> Result<(Graph, Vec<Applied>), WellCoveredError> {
    if recipe.base == 0 {
        return Err(WellCoveredError::EmptyBase);
    }
    if recipe.base == 1 && !recipe.ops.is_empty() {
        return Err(WellCoveredError::TrivialBase);
    }
    let mut g = Graph::complete(recipe.base);
    let applied = recipe.ops.iter().enumerate().map(|(i, op)| apply(&mut g, i, op)).collect::<Result<Vec<_>, _>>()?;
    Ok((g, applied))
}

/// Builds the graph described by a recipe. Base vertices are `0..base`; each
/// op appends its `s - 1` clique vertices, then each pendant clique's new
/// vertices in order.
pub fn generate(recipe: &WCDecomposition) -> Result<Graph, WellCoveredError> {
    replay(recipe).map(|(g, _)| g)
}

/// A recipe together with `vertex_map[generated vertex] = input vertex`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposed {
    pub recipe: WCDecomposition,
    pub vertex_map: Vec<usize>,
}

struct Stripped {
    v: usize,
    arms: Vec<(usize, Vec<usize>)>,
}

/// Finds the lowest vertex `v` and a block `Q` through it such that every
/// other vertex of `Q` lies in exactly one more block, a pendant one, and `v`
/// lies in some block besides `Q`.
fn find_strip(h: &Graph) -> Option<Stripped> {
    let bct = block_decomposition(h);
    for v in 0..h.n() {
        if bct.blocks_of(v).len() < 2 {
            continue;
        }
        'blocks: for &q in bct.blocks_of(v) {
            let mut arms = Vec::new();
            for &u in bct.block(q) {
                if u == v {
                    continue;
                }
                let [a, b] = bct.blocks_of(u) else {
                    continue 'blocks;
                };
                let p = if *a == q { *b } else { *a };
                if bct.cuts_in(p).count() != 1 {
                    continue 'blocks;
                }
                arms.push((u, bct.block(p).iter().copied().filter(|&w| w != u).collect()));
            }
            return Some(Stripped { v, arms });
        }
    }
    None
}

/// Inverts the construction. Returns `None` exactly when the graph is not
/// well-covered.
///
/// Strips one attachment at a time, always at the lowest-index host, until a
/// clique remains.
pub fn decompose(g: &Graph) -> Result<Option<Decomposed>, WellCoveredError> {
    if g.n() == 0 {
        return Err(GraphError::Empty.into());
    }
    if !g.is_connected() {
        return Err(GraphError::NotConnected.into());
    }
    if !block_decomposition(g).blocks().iter().all(|b| g.is_clique(b)) {
        return Err(GraphError::NotBlockGraph.into());
    }
    let mut alive: Vec<usize> = (0..g.n()).collect();
    let mut stripped = Vec::new();
    loop {
        let (h, orig) = g.induced_subgraph(&alive);
        if h.is_clique(&(0..h.n()).collect::<Vec<_>>()) {
            break;
        }
        let Some(s) = find_strip(&h) else {
            return Ok(None);
        };
        let mut dead = vec![false; h.n()];
        for (u, rest) in &s.arms {
            dead[*u] = true;
            rest.iter().for_each(|&w| dead[w] = true);
        }
        stripped.push(Stripped {
            v: orig[s.v],
            arms: s.arms.into_iter().map(|(u, rest)| (orig[u], rest.into_iter().map(|w| orig[w]).collect())).collect(),
        });
        alive = (0..h.n()).filter(|&x| !dead[x]).map(|x| orig[x]).collect();
    }

    let mut vertex_map = alive.clone();
    let mut generated = vec![usize::MAX; g.n()];
    for (i, &v) in alive.iter().enumerate() {
        generated[v] = i;
    }
    let mut ops = Vec::with_capacity(stripped.len());
    for s in stripped.into_iter().rev() {
        let host = generated[s.v];
        for (u, _) in &s.arms {
            generated[*u] = vertex_map.len();
            vertex_map.push(*u);
        }
        for (_, rest) in &s.arms {
            for &w in rest {
                generated[w] = vertex_map.len();
                vertex_map.push(w);
            }
        }
        ops.push(AttachOp { host, s: s.arms.len() + 1, pendants: s.arms.iter().map(|(_, r)| r.len() + 1).collect() });
    }
    Ok(Some(Decomposed { recipe: WCDecomposition { base: alive.len(), ops }, vertex_map }))
}

/// Forced class sizes of an equitable k-coloring of `n` vertices, with the
/// larger sizes handed out in the order given by `rank`.
fn forced_sizes(n: usize, rank: &[usize]) -> Vec<usize> {
    let k = rank.len();
    let mut t = vec![n / k; k];
    for &c in rank.iter().take(n % k) {
        t[c] += 1;
    }
    t
}

/// How often each color must appear on the new part `G - H + v` so that the
/// whole graph ends up equitable, given the color counts of `H` and the
/// color of `v` (1-based). `new_total` counts `v` and the added vertices.
///
/// Returns `p` sorted non-increasing and `col`, where `col[i]` (1-based) is
/// the color that `p[i]` counts. The larger target sizes go to the colors
/// used most often on `H - v`; ties in `p` put `v`'s color first, then lower
/// colors.
pub fn target_vector(
    h_counts: &[usize],
    v_color: usize,
    new_total: usize,
) -> Result<(Vec<usize>, Vec<usize>), WellCoveredError> {
    let k = h_counts.len();
    if v_color == 0 || v_color > k {
        return Err(WellCoveredError::BadColor { color: v_color, k });
    }
    let h: usize = h_counts.iter().sum();
    if !crate::coloring::sizes_are_equitable(h_counts, h) {
        return Err(WellCoveredError::NotEquitable(h_counts.to_vec()));
    }
    let vc = v_color - 1;
    let e: Vec<usize> = (0..k).map(|c| h_counts[c] - usize::from(c == vc)).collect();
    let mut rank: Vec<usize> = (0..k).collect();
    rank.sort_by_key(|&c| (std::cmp::Reverse(e[c]), c != vc, c));
    let targets = forced_sizes(h + new_total - 1, &rank);
    let mut p = vec![0; k];
    for c in 0..k {
        p[c] = targets[c].checked_sub(e[c]).ok_or(WellCoveredError::NegativeTarget(c + 1))?;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&c| (std::cmp::Reverse(p[c]), c != vc, c));
    Ok((order.iter().map(|&c| p[c]).collect(), order.iter().map(|&c| c + 1).collect()))
}

/// Result of [`recolor_for_v`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recolored {
    pub coloring: Coloring,
    pub p: Vec<usize>,
    pub col: Vec<usize>,
}

/// Renames colors so that `v` gets color 1 (the others keep their relative
/// order), then computes the target vector; color 1 is guaranteed to lead
/// `col`.
pub fn recolor_for_v(coloring: &Coloring, v: usize, new_total: usize) -> Result<Recolored, WellCoveredError> {
    let k = coloring.k();
    let cv = coloring.color(v);
    let perm: Vec<usize> = (1..=k)
        .map(|c| {
            if c == cv {
                1
            } else if c < cv {
                c + 1
            } else {
                c
            }
        })
        .collect();
    let coloring = coloring.permute_colors(&perm);
    let (p, col) = target_vector(coloring.class_sizes(), 1, new_total)?;
    assert_eq!(col[0], 1, "color of v must carry the largest target");
    Ok(Recolored { coloring, p, col })
}

/// Extends an equitable coloring of `H` (the first `coloring.n()` vertices)
/// over the vertices added by one op.
fn extend(coloring: &Coloring, step: &Applied, n_after: usize) -> Result<Coloring, WellCoveredError> {
    let k = coloring.k();
    let new_total = n_after - coloring.n() + 1;
    let Recolored { coloring, p, col } = recolor_for_v(coloring, step.host, new_total)?;

    // rows: pendant cliques by size, largest first, then v as a 1
    let mut arms: Vec<&(usize, Vec<usize>)> = step.arms.iter().collect();
    arms.sort_by_key(|(_, rest)| std::cmp::Reverse(rest.len()));
    let mut q: Vec<usize> = arms.iter().map(|(_, rest)| rest.len() + 1).collect();
    q.push(1);
    let l = q.len();
    let m = gale_ryser_transform(&modified_ferrers(&q, k)?, &p)?;

    let mut assignment = coloring.assignment().to_vec();
    assignment.resize(n_after, 0);
    for (j, (u, rest)) in arms.iter().enumerate() {
        let d = l - 1 - j;
        assignment[*u] = col[d];
        let others = (0..k).filter(|&c| c != d && m.get(j, c)).map(|c| col[c]);
        for (&w, c) in rest.iter().zip(others) {
            assignment[w] = c;
        }
    }
    Ok(Coloring::new(k, assignment).expect("colors come from col"))
}

/// Equitable k-coloring of a connected well-covered block graph, for any
/// `k >= omega`. For `k >= n` every vertex gets its own color.
pub fn color_well_covered(g: &Graph, k: usize) -> Result<Coloring, WellCoveredError> {
    let d = decompose(g)?.ok_or(WellCoveredError::NotWellCovered)?;
    let omega = d.recipe.omega();
    if k < omega {
        return Err(WellCoveredError::TooFewColors { k, omega });
    }
    if k >= g.n() {
        return Ok(Coloring::rainbow(g.n(), k));
    }
    let (built, applied) = replay(&d.recipe)?;
    let mut coloring = Coloring::new(k, (1..=d.recipe.base).collect()).expect("base fits in k colors");
    let mut n_now = d.recipe.base;
    for (op, step) in d.recipe.ops.iter().zip(&applied) {
        n_now += op.s - 1 + op.pendants.iter().map(|q| q - 1).sum::<usize>();
        coloring = extend(&coloring, step, n_now)?;
    }
    debug_assert_eq!(n_now, built.n());

    let mut assignment = vec![0; g.n()];
    for (gen, &orig) in d.vertex_map.iter().enumerate() {
        assignment[orig] = coloring.color(gen);
    }
    let out = Coloring::new(k, assignment).expect("colors within range");
    match check(g, &out).expect("coloring covers the graph") {
        Verdict::ValidEquitable => Ok(out),
        other => Err(WellCoveredError::Construction(other)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::is_well_covered;
    use crate::generators::bowtie;
    use crate::verifier::{canonical_code, enumerate_levels};

    fn op(host: usize, s: usize, pendants: &[usize]) -> AttachOp {
        AttachOp { host, s, pendants: pendants.to_vec() }
    }

    #[test]
    fn clique_is_its_own_base() {
        let d = decompose(&Graph::complete(5)).unwrap().unwrap();
        assert_eq!(d.recipe, WCDecomposition { base: 5, ops: vec![] });
        assert_eq!(generate(&d.recipe).unwrap(), Graph::complete(5));
    }

    #[test]
    fn bowtie_is_not_well_covered() {
        assert_eq!(decompose(&bowtie()).unwrap(), None);
    }

    #[test]
    fn path_from_edge() {
        let g = generate(&WCDecomposition { base: 2, ops: vec![op(1, 2, &[2])] }).unwrap();
        assert_eq!(g, Graph::path(4));
        assert!(is_well_covered(&g).unwrap());
    }

    #[test]
    fn trivial_base_rejected() {
        let r = generate(&WCDecomposition { base: 1, ops: vec![op(0, 2, &[2])] });
        assert_eq!(r, Err(WellCoveredError::TrivialBase));
    }

    #[test]
    fn bad_ops_rejected() {
        let bad = |o| generate(&WCDecomposition { base: 3, ops: vec![o] });
        assert!(matches!(bad(op(7, 2, &[2])), Err(WellCoveredError::HostOutOfRange { .. })));
        assert!(matches!(bad(op(0, 1, &[])), Err(WellCoveredError::CliqueTooSmall { .. })));
        assert!(matches!(bad(op(0, 3, &[2])), Err(WellCoveredError::PendantCount { .. })));
        assert!(matches!(bad(op(0, 2, &[1])), Err(WellCoveredError::PendantTooSmall { .. })));
    }

    #[test]
    fn four_clique_attachment_round_trips() {
        // H = K_3 with an attached clique of size 4 whose arms carry pendant
        // cliques of sizes 3, 3 and 2
        let recipe = WCDecomposition { base: 3, ops: vec![op(0, 4, &[3, 2, 3])] };
        let g = generate(&recipe).unwrap();
        assert_eq!(g.n(), 3 + 3 + 2 + 1 + 2);
        let d = decompose(&g).unwrap().unwrap();
        assert_eq!(canonical_code(&generate(&d.recipe).unwrap()), canonical_code(&g));
        for k in 4..=8 {
            let c = color_well_covered(&g, k).unwrap();
            assert_eq!(check(&g, &c).unwrap(), Verdict::ValidEquitable);
        }
    }

    #[test]
    fn target_vector_examples() {
        let (p, col) = target_vector(&[10, 10, 10, 10, 9, 9], 1, 9).unwrap();
        assert_eq!(p, vec![2, 2, 2, 1, 1, 1]);
        assert_eq!(col, vec![1, 5, 6, 2, 3, 4]);
        assert_eq!(target_vector(&[1], 1, 2).unwrap(), (vec![2], vec![1]));
        assert_eq!(target_vector(&[2, 2, 1], 3, 4).unwrap(), (vec![2, 1, 1], vec![3, 1, 2]));
        assert!(target_vector(&[3, 1], 1, 2).is_err());
    }

    #[test]
    fn recolor_swaps_for_single_vertex() {
        let c = Coloring::new(2, vec![2]).unwrap();
        let r = recolor_for_v(&c, 0, 2).unwrap();
        assert_eq!(r.coloring.assignment(), &[1]);
        assert_eq!(r.col[0], 1);
    }

    #[test]
    fn recognition_agrees_with_independence_numbers() {
        for level in enumerate_levels(10) {
            for (_, g) in level {
                let wc = is_well_covered(&g).unwrap();
                let d = decompose(&g).unwrap();
                assert_eq!(d.is_some(), wc, "{:?}", g);
                if let Some(d) = d {
                    let rebuilt = generate(&d.recipe).unwrap();
                    assert_eq!(canonical_code(&rebuilt), canonical_code(&g));
                    for (gen, &orig) in d.vertex_map.iter().enumerate() {
                        for &w in rebuilt.neighbors(gen) {
                            assert!(g.has_edge(orig, d.vertex_map[w]));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn colors_every_small_well_covered_graph() {
        for level in enumerate_levels(11) {
            for (_, g) in level {
                if decompose(&g).unwrap().is_none() {
                    continue;
                }
                let omega = block_decomposition(&g).max_block_size();
                for k in omega..=g.n() + 1 {
                    let c = color_well_covered(&g, k).unwrap();
                    assert_eq!(check(&g, &c).unwrap(), Verdict::ValidEquitable);
                }
                assert!(color_well_covered(&g, omega - 1).is_err() || omega == 1);
            }
        }
    }
}
