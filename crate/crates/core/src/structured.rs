//! Two regular-looking families of block graphs.
//!
//! `B_l(n, k)`: start from `K_n` and, `l - 1` times, hang `k - 1` new
//! `K_n`'s on every simplicial vertex. These are strongly equitably
//! `n`-colorable.
//!
//! `B(3, <=3)`: all blocks are triangles and every cut vertex lies in at most
//! three of them. These are equitably 4-colorable, built by a recursion that
//! splits the graph at a degree-2 vertex.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{check, Coloring, Verdict};
use crate::graph::{block_decomposition, Graph, GraphError};
use crate::verifier::canonical_code;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructuredError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid parameters n = {n}, k = {k}, l = {l}: need n >= 3, k >= 3, l >= 1")]
    BadParams { n: usize, k: usize, l: usize },
    #[error("graph is not in the class of triangle block graphs with at most 3 blocks per cut vertex")]
    NotB3le3,
    #[error("vertex {0} does not have degree 2")]
    NotDegreeTwo(usize),
    #[error("k = {k} is below the clique number {omega}")]
    TooFewColors { k: usize, omega: usize },
    #[error("constructed coloring failed the checker: {0:?}")]
    Construction(Verdict),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BlnkParams {
    pub n: usize,
    pub k: usize,
    pub l: usize,
}

impl BlnkParams {
    pub fn new(n: usize, k: usize, l: usize) -> Result<Self, StructuredError> {
        if n < 3 || k < 3 || l < 1 {
            return Err(StructuredError::BadParams { n, k, l });
        }
        Ok(BlnkParams { n, k, l })
    }
}

pub fn generate_blnk(p: BlnkParams) -> Graph {
    let mut g = Graph::complete(p.n);
    let mut frontier: Vec<usize> = (0..p.n).collect();
    for _ in 1..p.l {
        let mut next = Vec::with_capacity(frontier.len() * (p.k - 1) * (p.n - 1));
        for &s in &frontier {
            for _ in 1..p.k {
                next.extend(g.attach_clique(s, p.n).expect("frontier vertex exists"));
            }
        }
        frontier = next;
    }
    g
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlnkFormulas {
    pub size: u128,
    pub alpha: u128,
    pub alpha_min: u128,
}

/// Closed forms for the order, independence number and its per-vertex
/// minimum. `None` if a value overflows `u128`.
pub fn blnk_formulas(p: BlnkParams) -> Option<BlnkFormulas> {
    let (n, k1) = (p.n as u128, (p.k - 1) as u128);
    let branch = k1.checked_mul(n - 1)?;
    // sum_{x=lo..=hi} n * (k-1)^e(x) * (n-1)^x
    let series = |lo: usize, hi: usize, extra_k: u32| -> Option<u128> {
        (lo..=hi).try_fold(0u128, |acc, x| {
            let term = n.checked_mul(branch.checked_pow(x as u32)?)?.checked_mul(k1.checked_pow(extra_k)?)?;
            acc.checked_add(term)
        })
    };
    let size = series(0, p.l - 1, 0)?;
    let alpha = match p.l {
        1 => 1,
        l if l % 2 == 1 => 1 + series(1, l - 2, 1)?,
        l => series(0, l - 2, 1)?,
    };
    let alpha_min = if p.l == 1 { 1 } else { alpha - (p.k as u128 - 2) };
    Some(BlnkFormulas { size, alpha, alpha_min })
}

/// Recovers `(n, k, l)` when `g` is isomorphic to some `B_l(n, k)`. A single
/// clique is reported with `k = 3`.
pub fn recognize_blnk(g: &Graph) -> Option<BlnkParams> {
    if g.n() == 0 || !g.is_connected() {
        return None;
    }
    let bct = block_decomposition(g);
    let n = bct.max_block_size();
    if n < 3 || bct.blocks().iter().any(|b| b.len() != n || !g.is_clique(b)) {
        return None;
    }
    let k = (0..g.n()).map(|v| bct.blocks_of(v).len()).max().unwrap_or(1).max(3);
    let mut l = 1;
    loop {
        let p = BlnkParams::new(n, k, l).ok()?;
        let size = blnk_formulas(p)?.size;
        if size >= g.n() as u128 {
            if size != g.n() as u128 {
                return None;
            }
            let code = canonical_code(g).ok()?;
            return (canonical_code(&generate_blnk(p)).ok()? == code).then_some(p);
        }
        l += 1;
    }
}

/// Proper `k`-coloring of a connected block graph with `k >= omega`, grown
/// outwards from a central block: the central block gets colors `1, 2, ..`
/// in vertex order, and every other block gives its new vertices the
/// smallest colors missing at its entry cut vertex, in increasing order.
///
/// On `B_l(n, k)` with `k = n` every color is used equally often.
pub fn color_from_center(g: &Graph, k: usize) -> Result<Coloring, StructuredError> {
    if g.n() == 0 {
        return Err(GraphError::Empty.into());
    }
    if !g.is_connected() {
        return Err(GraphError::NotConnected.into());
    }
    let bct = block_decomposition(g);
    if !bct.blocks().iter().all(|b| g.is_clique(b)) {
        return Err(GraphError::NotBlockGraph.into());
    }
    let omega = bct.max_block_size();
    if k < omega {
        return Err(StructuredError::TooFewColors { k, omega });
    }
    let root = center_block(g, &bct);
    let mut color = vec![0usize; g.n()];
    let mut seen_block = vec![false; bct.block_count()];
    for (i, &v) in bct.block(root).iter().enumerate() {
        color[v] = i + 1;
    }
    seen_block[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(b) = queue.pop_front() {
        for c in bct.cuts_in(b).collect::<Vec<_>>() {
            for &nb in bct.blocks_of(c) {
                if seen_block[nb] {
                    continue;
                }
                seen_block[nb] = true;
                let taken = color[c];
                let mut free = (1..=k).filter(|&x| x != taken);
                for &w in bct.block(nb) {
                    if w != c {
                        color[w] = free.next().expect("k >= block size");
                    }
                }
                queue.push_back(nb);
            }
        }
    }
    let out = Coloring::new(k, color).expect("colors within range");
    match check(g, &out).expect("coloring covers the graph") {
        Verdict::Improper { u, v } => Err(StructuredError::Construction(Verdict::Improper { u, v })),
        _ => Ok(out),
    }
}

/// Block at the center of the block-cut tree; if the center is a cut vertex,
/// its lowest-numbered block.
fn center_block(g: &Graph, bct: &crate::graph::BlockCutTree) -> usize {
    let blocks = bct.block_count();
    let cuts = bct.cut_vertices();
    let mut node_of_cut = vec![usize::MAX; g.n()];
    for (i, &c) in cuts.iter().enumerate() {
        node_of_cut[c] = blocks + i;
    }
    let total = blocks + cuts.len();
    let mut adj = vec![Vec::new(); total];
    for (b, c) in bct.incidence() {
        adj[b].push(node_of_cut[c]);
        adj[node_of_cut[c]].push(b);
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; total];
    let mut layer: Vec<usize> = (0..total).filter(|&x| degree[x] <= 1).collect();
    let mut remaining = total;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &x in &layer {
            removed[x] = true;
            for &y in &adj[x] {
                degree[y] -= 1;
                if degree[y] == 1 {
                    next.push(y);
                }
            }
        }
        layer = next;
    }
    let center = (0..total).filter(|&x| !removed[x]).min().expect("tree is non-empty");
    if center < blocks {
        center
    } else {
        bct.blocks_of(cuts[center - blocks])[0]
    }
}

/// Strongly equitable `n`-coloring of `B_l(n, k)`, in the vertex numbering of
/// [`generate_blnk`].
pub fn color_blnk(p: BlnkParams) -> Coloring {
    color_from_center(&generate_blnk(p), p.n).expect("B_l(n, k) is a connected block graph")
}

// ---------------------------------------------------------------------------
// B(3, <=3)

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TKind {
    T1,
    T2,
}

/// Color counts `(m+1, m, m, m)` for T1 and `(m+1, m+1, m+1, m)` for T2, the
/// designated vertex having the first color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TType {
    pub kind: TKind,
    pub m: usize,
}

impl TType {
    pub fn counts(self) -> [usize; 4] {
        let m = self.m;
        match self.kind {
            TKind::T1 => [m + 1, m, m, m],
            TKind::T2 => [m + 1, m + 1, m + 1, m],
        }
    }

    fn from_counts(c: [usize; 4]) -> Option<TType> {
        let m = c[3];
        [TType { kind: TKind::T1, m }, TType { kind: TKind::T2, m }].into_iter().find(|t| t.counts() == c)
    }
}

pub fn recognize_b3le3(g: &Graph) -> bool {
    if g.n() == 0 || !g.is_connected() {
        return false;
    }
    let bct = block_decomposition(g);
    bct.blocks().iter().all(|b| b.len() == 3 && g.is_clique(b)) && (0..g.n()).all(|v| bct.blocks_of(v).len() <= 3)
}

const AB: [u8; 4] = [1, 0, 2, 3];
const AC: [u8; 4] = [2, 1, 0, 3];
const AD: [u8; 4] = [3, 1, 2, 0];
const ADB: [u8; 4] = [3, 0, 2, 1];
const ABD: [u8; 4] = [1, 3, 2, 0];
const ABDC: [u8; 4] = [1, 3, 0, 2];
const ACD: [u8; 4] = [2, 1, 3, 0];

/// Color renamings (`map[old] = new`, A = 0) for the four pieces, indexed by
/// the number of T2 pieces on the a-side and on the b-side.
fn case_perms(t2_a: usize, t2_b: usize) -> [[u8; 4]; 4] {
    match (t2_a, t2_b) {
        (0, 0) => [AB, AB, AC, AC],
        (0, 1) => [AD, AD, AB, AB],
        (0, 2) => [AB, AB, ADB, AD],
        (1, 1) => [AB, ABD, AC, AC],
        (1, 2) => [AC, AC, ABD, ABDC],
        (2, 2) => [AB, AB, ACD, ACD],
        _ => unreachable!("pairs are ordered so the a-side has fewer T2 pieces"),
    }
}

struct Piece {
    colors: Vec<(usize, u8)>,
    t: TType,
}

fn tally(colors: &[(usize, u8)]) -> [usize; 4] {
    let mut c = [0; 4];
    for &(_, x) in colors {
        c[x as usize] += 1;
    }
    c
}

/// Vertices of `members` reachable from `start` without passing `blocked`.
fn reach(g: &Graph, members: &[usize], blocked: &[usize], start: usize) -> Vec<usize> {
    let inside = |x: usize| members.binary_search(&x).is_ok() && !blocked.contains(&x);
    let mut seen = vec![start];
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            if inside(y) && !seen.contains(&y) {
                seen.push(y);
                stack.push(y);
            }
        }
    }
    seen.sort_unstable();
    seen
}

/// The (up to two) pieces hanging at `a` once `v` and `b` are gone, each
/// including `a`; missing pieces are the single vertex `a`.
fn pieces_at(g: &Graph, members: &[usize], v: usize, a: usize, b: usize) -> [Vec<usize>; 2] {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for &w in g.neighbors(a) {
        if w == v || w == b || members.binary_search(&w).is_err() || out.iter().any(|p| p.contains(&w)) {
            continue;
        }
        let mut part = reach(g, members, &[v, b, a], w);
        part.push(a);
        part.sort_unstable();
        out.push(part);
    }
    assert!(out.len() <= 2, "vertex {a} lies in more than three blocks");
    out.resize(2, vec![a]);
    [out[0].clone(), out[1].clone()]
}

fn color_piece(g: &Graph, members: &[usize], v: usize) -> Piece {
    if members.len() == 1 {
        return Piece { colors: vec![(v, 0)], t: TType { kind: TKind::T1, m: 0 } };
    }
    let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|x| members.binary_search(x).is_ok()).collect();
    let [a, b] = nb[..] else {
        panic!("designated vertex {v} must have degree 2");
    };
    let [a1, a2] = pieces_at(g, members, v, a, b);
    let [b1, b2] = pieces_at(g, members, v, b, a);
    let mut sides =
        [[color_piece(g, &a1, a), color_piece(g, &a2, a)], [color_piece(g, &b1, b), color_piece(g, &b2, b)]];
    for side in &mut sides {
        side.sort_by_key(|p| p.t.kind == TKind::T2);
    }
    let t2 = |side: &[Piece; 2]| side.iter().filter(|p| p.t.kind == TKind::T2).count();
    if t2(&sides[0]) > t2(&sides[1]) {
        sides.swap(0, 1);
    }
    let (ta, tb) = (t2(&sides[0]), t2(&sides[1]));
    let perms = case_perms(ta, tb);
    let pieces = sides.iter().flatten();

    let mut colors = vec![(v, 0u8)];
    let mut shared: [Option<(usize, u8)>; 2] = [None, None];
    for (i, (piece, perm)) in pieces.zip(perms).enumerate() {
        let side = i / 2;
        let root = piece.colors[0].0;
        let root_color = perm[0];
        match shared[side] {
            None => shared[side] = Some((root, root_color)),
            Some(s) => assert_eq!(s, (root, root_color), "pieces disagree on the shared vertex"),
        }
        for &(x, c) in &piece.colors {
            if x != root || i % 2 == 0 {
                colors.push((x, perm[c as usize]));
            }
        }
    }
    let counts = tally(&colors);
    let t = TType::from_counts(counts).unwrap_or_else(|| panic!("counts {counts:?} match neither type"));
    Piece { colors, t }
}

/// Equitable 4-coloring of a connected member of `B(3, <=3)` (or `K_1`) in
/// which `v` gets color 1, with the type describing its class counts.
/// Without `v`, the lowest-index degree-2 vertex is used.
pub fn color_b3le3(g: &Graph, v: Option<usize>) -> Result<(Coloring, TType), StructuredError> {
    if g.n() == 1 {
        if v.is_some_and(|v| v != 0) {
            return Err(GraphError::VertexOutOfRange { vertex: v.unwrap(), n: 1 }.into());
        }
        return Ok((Coloring::new(4, vec![1]).expect("color 1"), TType { kind: TKind::T1, m: 0 }));
    }
    if !recognize_b3le3(g) {
        return Err(StructuredError::NotB3le3);
    }
    let v = match v {
        Some(v) if v >= g.n() => return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() }.into()),
        Some(v) if g.degree(v) != 2 => return Err(StructuredError::NotDegreeTwo(v)),
        Some(v) => v,
        None => (0..g.n()).find(|&x| g.degree(x) == 2).expect("every member has a degree-2 vertex"),
    };
    let members: Vec<usize> = (0..g.n()).collect();
    let piece = color_piece(g, &members, v);
    let mut assignment = vec![0; g.n()];
    for (x, c) in piece.colors {
        assignment[x] = c as usize + 1;
    }
    let out = Coloring::new(4, assignment).expect("colors within range");
    match check(g, &out).expect("coloring covers the graph") {
        Verdict::ValidEquitable => Ok((out, piece.t)),
        other => Err(StructuredError::Construction(other)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{alpha, alpha_min, conjecture_bounds};
    use crate::generators::bowtie;
    use crate::verifier::enumerate_levels;

    fn p(n: usize, k: usize, l: usize) -> BlnkParams {
        BlnkParams::new(n, k, l).unwrap()
    }

    #[test]
    fn sizes() {
        assert_eq!(generate_blnk(p(3, 3, 1)), Graph::complete(3));
        assert_eq!(generate_blnk(p(3, 3, 2)).n(), 15);
        assert_eq!(generate_blnk(p(3, 3, 3)).n(), 63);
        assert!(BlnkParams::new(2, 3, 1).is_err());
    }

    #[test]
    fn formulas_match_direct_computation() {
        let want = [((3, 3, 1), (3, 1, 1)), ((3, 3, 2), (15, 6, 5)), ((3, 3, 3), (63, 25, 24))];
        for ((n, k, l), (s, a, am)) in want {
            assert_eq!(blnk_formulas(p(n, k, l)).unwrap(), BlnkFormulas { size: s, alpha: a, alpha_min: am });
        }
        for n in 3..=5 {
            for k in 3..=5 {
                for l in 1..=4 {
                    let f = blnk_formulas(p(n, k, l)).unwrap();
                    if f.size > 200 {
                        continue;
                    }
                    let g = generate_blnk(p(n, k, l));
                    assert_eq!(f.size, g.n() as u128);
                    assert_eq!(f.alpha, alpha(&g).unwrap() as u128);
                    assert_eq!(f.alpha_min, alpha_min(&g).unwrap() as u128);
                    assert_eq!(conjecture_bounds(&g).unwrap().lower, n);
                }
            }
        }
    }

    #[test]
    fn blnk_colorings_are_strongly_equitable() {
        for (n, k, l, each) in [(3, 3, 1, 1), (3, 3, 3, 21), (4, 3, 2, 7)] {
            let c = color_blnk(p(n, k, l));
            assert_eq!(c.k(), n);
            assert!(c.is_strongly_equitable());
            assert_eq!(c.class_sizes()[0], each);
            assert_eq!(check(&generate_blnk(p(n, k, l)), &c).unwrap(), Verdict::ValidEquitable);
        }
    }

    #[test]
    fn recognition_of_blnk() {
        let g = generate_blnk(p(3, 4, 2));
        assert_eq!(recognize_blnk(&g), Some(p(3, 4, 2)));
        let perm: Vec<usize> = (0..g.n()).rev().collect();
        assert_eq!(recognize_blnk(&g.relabel(&perm)), Some(p(3, 4, 2)));
        assert_eq!(recognize_blnk(&bowtie()), None);
        assert_eq!(recognize_blnk(&Graph::complete(4)), Some(p(4, 3, 1)));
    }

    #[test]
    fn simplicial_vertices_share_eccentricity() {
        let g = generate_blnk(p(3, 3, 3));
        let bct = block_decomposition(&g);
        let ecc: Vec<usize> = (0..g.n()).filter(|&v| bct.blocks_of(v).len() == 1).map(|v| g.eccentricity(v)).collect();
        assert!(ecc.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn b3le3_recognition() {
        assert!(recognize_b3le3(&Graph::complete(3)));
        assert!(recognize_b3le3(&bowtie()));
        assert!(!recognize_b3le3(&Graph::complete(4)));
        assert!(!recognize_b3le3(&crate::generators::star_of_cliques(&[3, 3, 3, 3])));
    }

    #[test]
    fn base_types() {
        let (c, t) = color_b3le3(&Graph::new(1), None).unwrap();
        assert_eq!(t, TType { kind: TKind::T1, m: 0 });
        assert_eq!(c.class_sizes(), &[1, 0, 0, 0]);
        let (c, t) = color_b3le3(&Graph::complete(3), Some(1)).unwrap();
        assert_eq!(t, TType { kind: TKind::T2, m: 0 });
        assert_eq!(c.class_sizes(), &[1, 1, 1, 0]);
        assert_eq!(c.color(1), 1);
        assert_eq!(color_b3le3(&bowtie(), Some(0)), Err(StructuredError::NotDegreeTwo(0)));
    }

    #[test]
    fn every_small_member_gets_its_type() {
        for level in enumerate_levels(13) {
            for (_, g) in level.iter().filter(|(_, g)| recognize_b3le3(g)) {
                for v in (0..g.n()).filter(|&v| g.degree(v) == 2) {
                    let (c, t) = color_b3le3(g, Some(v)).unwrap();
                    assert_eq!(c.color(v), 1);
                    assert_eq!(c.class_sizes(), &t.counts());
                    assert_eq!(t.kind == TKind::T1, g.n() % 4 == 1);
                }
            }
        }
    }
}
