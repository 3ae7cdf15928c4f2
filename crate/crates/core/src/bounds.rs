//! Clique number, independence parameters and the gap-one bracket for the
//! equitable chromatic number of block graphs.
//!
//! Every quantity here is computed exactly through the chordal
//! independent-set routine, so all functions require chordal input.

use serde::{Deserialize, Serialize};

use crate::graph::{block_decomposition, max_independent_set, BlockCutTree, Graph, GraphError};

/// Bounds record for one graph. `upper` is always `lower + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub n: usize,
    pub omega: usize,
    pub alpha: usize,
    pub alpha_min: usize,
    pub lower: usize,
    pub upper: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_eq: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub code: Option<String>,
}

/// Size of the largest block; errors unless every block is a clique.
pub fn omega(g: &Graph, bct: &BlockCutTree) -> Result<usize, GraphError> {
    if !bct.blocks().iter().all(|b| g.is_clique(b)) {
        return Err(GraphError::NotBlockGraph);
    }
    Ok(bct.max_block_size())
}

pub fn alpha(g: &Graph) -> Result<usize, GraphError> {
    max_independent_set(g).map(|s| s.len())
}

/// Largest independent set through `v`: one plus the independence number of
/// the graph with the closed neighborhood of `v` removed.
pub fn alpha_v(g: &Graph, v: usize) -> Result<usize, GraphError> {
    if v >= g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let (rest, _) = g.induced_subgraph(&g.non_neighbors(v));
    Ok(1 + alpha(&rest)?)
}

pub fn alpha_min(g: &Graph) -> Result<usize, GraphError> {
    if g.n() == 0 {
        return Err(GraphError::Empty);
    }
    let mut best = usize::MAX;
    for v in 0..g.n() {
        best = best.min(alpha_v(g, v)?);
        if best == 1 {
            break;
        }
    }
    Ok(best)
}

pub fn is_well_covered(g: &Graph) -> Result<bool, GraphError> {
    Ok(alpha_min(g)? == alpha(g)?)
}

/// `max(omega, ceil((n + 1) / (alpha_min + 1)))`.
pub fn lower_bound(n: usize, omega: usize, alpha_min: usize) -> usize {
    omega.max((n + 1).div_ceil(alpha_min + 1))
}

pub fn conjecture_bounds(g: &Graph) -> Result<BoundsReport, GraphError> {
    let bct = block_decomposition(g);
    let omega = omega(g, &bct)?;
    let alpha = alpha(g)?;
    let alpha_min = alpha_min(g)?;
    let lower = lower_bound(g.n(), omega, alpha_min);
    Ok(BoundsReport { n: g.n(), omega, alpha, alpha_min, lower, upper: lower + 1, chi_eq: None, code: None })
}
