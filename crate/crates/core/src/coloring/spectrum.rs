use std::time::Duration;

use rayon::prelude::*;
use serde::Serialize;

use super::exact::{decide_equitable, Decision};
use crate::graph::Graph;

/// Feasibility of equitable k-colorings for `k = 1..=k_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    pub k_max: usize,
    /// `feasible[k - 1]`; `None` when the oracle ran out of budget.
    pub feasible: Vec<Option<bool>>,
    /// Smallest feasible k up to `k_max`.
    pub chi_eq: Option<usize>,
    /// Smallest k such that every t in `k..=k_max` is feasible.
    pub threshold: Option<usize>,
    /// True when `k_max + 1 >= n`: every k above `k_max` is then feasible, so
    /// `threshold` is the true equitable chromatic threshold.
    pub threshold_exact: bool,
    /// Infeasible k strictly between `chi_eq` and `threshold`.
    pub gaps: Vec<usize>,
    pub unknown: Vec<usize>,
}

impl Spectrum {
    pub fn is_feasible(&self, k: usize) -> Option<bool> {
        self.feasible.get(k.checked_sub(1)?).copied().flatten()
    }

    /// No gap was found at or above `from`.
    pub fn gap_free_from(&self, from: usize) -> bool {
        self.gaps.iter().all(|&k| k < from)
    }
}

pub fn spectrum(g: &Graph, k_max: usize) -> Spectrum {
    spectrum_with_budget(g, k_max, None)
}

/// Decides each k independently and in parallel.
pub fn spectrum_with_budget(g: &Graph, k_max: usize, budget: Option<Duration>) -> Spectrum {
    let feasible: Vec<Option<bool>> = (1..=k_max)
        .into_par_iter()
        .map(|k| match decide_equitable(g, k, budget) {
            Decision::Feasible(_) => Some(true),
            Decision::Infeasible => Some(false),
            Decision::Unknown => None,
        })
        .collect();
    summarize(g.n(), k_max, feasible)
}

fn summarize(n: usize, k_max: usize, feasible: Vec<Option<bool>>) -> Spectrum {
    let chi_eq = feasible.iter().position(|&f| f == Some(true)).map(|i| i + 1);
    let threshold = {
        let tail = feasible.iter().rev().take_while(|&&f| f == Some(true)).count();
        (tail > 0).then(|| k_max - tail + 1)
    };
    let gaps = match (chi_eq, threshold) {
        (Some(lo), Some(hi)) => (lo + 1..hi).filter(|&k| feasible[k - 1] == Some(false)).collect(),
        (Some(lo), None) => (lo + 1..=k_max).filter(|&k| feasible[k - 1] == Some(false)).collect(),
        _ => Vec::new(),
    };
    let unknown = (1..=k_max).filter(|&k| feasible[k - 1].is_none()).collect();
    Spectrum { k_max, feasible, chi_eq, threshold, threshold_exact: k_max + 1 >= n, gaps, unknown }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k33_has_gap_at_three() {
        let s = spectrum(&Graph::complete_multipartite(&[3, 3]), 6);
        let flags: Vec<bool> = s.feasible.iter().map(|f| f.unwrap()).collect();
        assert_eq!(flags, vec![false, true, false, true, true, true]);
        assert_eq!(s.chi_eq, Some(2));
        assert_eq!(s.threshold, Some(4));
        assert_eq!(s.gaps, vec![3]);
        assert!(s.threshold_exact);
    }

    #[test]
    fn complete_graph_spectrum() {
        let n = 4;
        let s = spectrum(&Graph::complete(n), 8);
        for k in 1..=8 {
            assert_eq!(s.is_feasible(k), Some(k >= n));
        }
        assert_eq!(s.chi_eq, Some(n));
        assert_eq!(s.threshold, Some(n));
        assert!(s.gaps.is_empty());
    }
}
