use std::time::{Duration, Instant};

use super::Coloring;
use crate::bounds::conjecture_bounds;
use crate::graph::{is_block_graph, perfect_elimination_ordering, Graph};

/// Answer of the exact oracle for one `(graph, k)` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Feasible(Coloring),
    Infeasible,
    /// The time budget ran out before the search finished.
    Unknown,
}

impl Decision {
    pub fn coloring(self) -> Option<Coloring> {
        match self {
            Decision::Feasible(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, Decision::Feasible(_))
    }
}

/// Backtracking state. With `n = q*k + r`, exactly `r` classes end at size
/// `q + 1` and the rest at `q`; `big` counts classes already at `q + 1` and
/// `deficit` is the number of vertices still owed to classes below `q`.
struct Search<'a> {
    g: &'a Graph,
    k: usize,
    q: usize,
    r: usize,
    order: Vec<usize>,
    color: Vec<usize>,
    count: Vec<usize>,
    forbid: Vec<u32>,
    big: usize,
    deficit: usize,
    opened: usize,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, deadline: Option<Instant>) -> Self {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        Search {
            g,
            k,
            q: n / k,
            r: n % k,
            order,
            color: vec![0; n],
            count: vec![0; k + 1],
            forbid: vec![0; n * (k + 1)],
            big: 0,
            deficit: (n / k) * k,
            opened: 0,
            nodes: 0,
            deadline,
            timed_out: false,
        }
    }

    #[inline]
    fn can_take(&self, c: usize) -> bool {
        let cnt = self.count[c];
        cnt < self.q || (cnt == self.q && self.big < self.r)
    }

    #[inline]
    fn forbidden(&self, v: usize, c: usize) -> bool {
        self.forbid[v * (self.k + 1) + c] > 0
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        if self.count[c] < self.q {
            self.deficit -= 1;
        } else {
            self.big += 1;
        }
        self.count[c] += 1;
        let stride = self.k + 1;
        for &w in self.g.neighbors(v) {
            self.forbid[w * stride + c] += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = 0;
        self.count[c] -= 1;
        if self.count[c] < self.q {
            self.deficit += 1;
        } else {
            self.big -= 1;
        }
        let stride = self.k + 1;
        for &w in self.g.neighbors(v) {
            self.forbid[w * stride + c] -= 1;
        }
    }

    /// Every uncolored neighbor of `v` still has some admissible color.
    fn neighbors_open(&self, v: usize) -> bool {
        if self.opened < self.k {
            // an unopened color is never forbidden and has spare capacity
            return true;
        }
        self.g
            .neighbors(v)
            .iter()
            .all(|&w| self.color[w] != 0 || (1..=self.k).any(|c| !self.forbidden(w, c) && self.can_take(c)))
    }

    fn dfs(&mut self, idx: usize) -> bool {
        let n = self.order.len();
        if idx == n {
            return true;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return false;
        }
        let v = self.order[idx];
        let remaining_after = n - idx - 1;
        // colors above `opened + 1` are interchangeable with `opened + 1`
        let limit = (self.opened + 1).min(self.k);
        for c in 1..=limit {
            if self.forbidden(v, c) || !self.can_take(c) {
                continue;
            }
            let opened_before = self.opened;
            self.opened = self.opened.max(c);
            self.assign(v, c);
            if remaining_after >= self.deficit && self.neighbors_open(v) && self.dfs(idx + 1) {
                return true;
            }
            self.unassign(v, c);
            self.opened = opened_before;
            if self.timed_out {
                return false;
            }
        }
        false
    }
}

/// Decides whether `g` has an equitable proper `k`-coloring, giving up after
/// `budget` if one is set.
///
/// Vertices are tried in order of decreasing degree. Class capacities are the
/// forced equitable sizes, and a fresh color is only opened at the lowest
/// unused index.
pub fn decide_equitable(g: &Graph, k: usize, budget: Option<Duration>) -> Decision {
    let n = g.n();
    if k == 0 {
        return Decision::Infeasible;
    }
    if n == 0 {
        return Decision::Feasible(Coloring::new(k, Vec::new()).expect("k > 0"));
    }
    if k >= n {
        return Decision::Feasible(Coloring::rainbow(n, k));
    }
    let deadline = budget.map(|b| Instant::now() + b);
    let mut search = Search::new(g, k, deadline);
    if search.dfs(0) {
        let coloring = Coloring::new(k, search.color).expect("search assigns colors in 1..=k");
        debug_assert!(coloring.is_equitable());
        Decision::Feasible(coloring)
    } else if search.timed_out {
        Decision::Unknown
    } else {
        Decision::Infeasible
    }
}

/// Equitable proper `k`-coloring if one exists.
pub fn exact_equitable(g: &Graph, k: usize) -> Option<Coloring> {
    decide_equitable(g, k, None).coloring()
}

/// Smallest k worth trying: the gap-one lower bound for block graphs, the
/// clique number for other chordal graphs, 1 otherwise.
fn search_start(g: &Graph) -> usize {
    if g.n() == 0 {
        return 1;
    }
    if is_block_graph(g) {
        if let Ok(report) = conjecture_bounds(g) {
            return report.lower;
        }
    }
    if let Some(peo) = perfect_elimination_ordering(g) {
        let mut pos = vec![0; g.n()];
        for (i, &v) in peo.iter().enumerate() {
            pos[v] = i;
        }
        return peo.iter().map(|&v| 1 + g.neighbors(v).iter().filter(|&&w| pos[w] > pos[v]).count()).max().unwrap_or(1);
    }
    1
}

/// Equitable chromatic number, or `Err(k)` with the first `k` whose decision
/// ran out of budget.
pub fn chi_equitable_with_budget(g: &Graph, budget: Option<Duration>) -> Result<(usize, Coloring), usize> {
    let mut k = search_start(g);
    loop {
        match decide_equitable(g, k, budget) {
            Decision::Feasible(c) => return Ok((k, c)),
            Decision::Infeasible => k += 1,
            Decision::Unknown => return Err(k),
        }
    }
}

pub fn chi_equitable(g: &Graph) -> usize {
    chi_equitable_with_budget(g, None).expect("no budget, no timeout").0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{check, Verdict};
    use crate::generators::{bowtie, fig2_family, star_of_cliques};

    /// Enumerates all k^n assignments.
    fn naive_equitable(g: &Graph, k: usize) -> bool {
        let n = g.n();
        let total = k.pow(n as u32);
        (0..total).any(|mut code| {
            let mut a = vec![0; n];
            for slot in a.iter_mut() {
                *slot = code % k + 1;
                code /= k;
            }
            let c = Coloring::new(k, a).unwrap();
            check(g, &c) == Ok(Verdict::ValidEquitable)
        })
    }

    #[test]
    fn complete_graph_needs_n() {
        for n in 1..6 {
            let g = Graph::complete(n);
            assert_eq!(chi_equitable(&g), n);
            if n > 1 {
                assert!(exact_equitable(&g, n - 1).is_none());
            }
        }
    }

    #[test]
    fn star_k13() {
        assert_eq!(chi_equitable(&star_of_cliques(&[2, 2, 2])), 3);
        assert!(!naive_equitable(&star_of_cliques(&[2, 2, 2]), 2));
        assert_eq!(chi_equitable(&bowtie()), 3);
    }

    #[test]
    fn agrees_with_naive_enumeration() {
        let graphs = [
            Graph::path(6),
            Graph::cycle(5),
            Graph::cycle(6),
            bowtie(),
            star_of_cliques(&[2, 2, 2, 3]),
            Graph::complete_multipartite(&[3, 3]),
            Graph::complete_multipartite(&[1, 2, 4]),
            Graph::from_edges(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6)]).unwrap(),
        ];
        for g in &graphs {
            for k in 1..=4 {
                let decided = exact_equitable(g, k);
                if let Some(c) = &decided {
                    assert_eq!(check(g, c), Ok(Verdict::ValidEquitable));
                }
                assert_eq!(decided.is_some(), naive_equitable(g, k), "k = {k}, g = {g:?}");
            }
        }
    }

    #[test]
    fn fig2_family_needs_one_extra_color() {
        let (g, _) = fig2_family(2);
        assert_eq!(decide_equitable(&g, 3, None), Decision::Infeasible);
        let c = exact_equitable(&g, 4).expect("4 colors suffice");
        assert_eq!(check(&g, &c), Ok(Verdict::ValidEquitable));
        assert_eq!(chi_equitable(&g), 4);
    }

    #[test]
    fn k_at_least_n_is_rainbow() {
        let g = Graph::complete(4);
        let c = exact_equitable(&g, 6).unwrap();
        assert!(c.has_empty_classes());
        assert_eq!(check(&g, &c), Ok(Verdict::ValidEquitable));
    }

    #[test]
    fn tiny_budget_reports_unknown_or_answers() {
        let g = Graph::complete_multipartite(&[3, 5, 7]);
        match decide_equitable(&g, 5, Some(Duration::from_nanos(1))) {
            Decision::Unknown | Decision::Infeasible => {}
            Decision::Feasible(_) => panic!("K_3,5,7 has no equitable 5-coloring"),
        }
    }
}
