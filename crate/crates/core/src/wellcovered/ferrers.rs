//! 0-1 matrices with prescribed row sums and a forced anti-diagonal, and the
//! column-sum rebalancing used to distribute colors over pendant cliques.
//!
//! Indices are 0-based throughout; the anti-diagonal cell of row `i` in an
//! `l`-row matrix is column `l - 1 - i`.

use std::fmt;

use serde::Serialize;

use super::WellCoveredError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroOneMatrix {
    rows: Vec<Vec<bool>>,
    y: usize,
}

impl ZeroOneMatrix {
    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<bool>>) -> Self {
        let y = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == y), "ragged rows");
        ZeroOneMatrix { rows, y }
    }

    /// Parses rows written as strings of `0`/`1`, e.g. `["110", "100"]`.
    pub fn from_strs(rows: &[&str]) -> Self {
        ZeroOneMatrix::from_rows(rows.iter().map(|r| r.bytes().map(|b| b == b'1').collect()).collect())
    }

    pub fn l(&self) -> usize {
        self.rows.len()
    }

    pub fn y(&self) -> usize {
        self.y
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.rows[i]
    }

    pub fn anti_diagonal(&self, i: usize) -> usize {
        self.l() - 1 - i
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.iter().filter(|&&b| b).count()).collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.y).map(|j| self.rows.iter().filter(|r| r[j]).count()).collect()
    }

    pub fn has_anti_diagonal(&self) -> bool {
        self.y >= self.l() && (0..self.l()).all(|i| self.rows[i][self.anti_diagonal(i)])
    }

    /// Anti-diagonal present, and in each row the ones off the anti-diagonal
    /// form a prefix.
    pub fn is_modified_ferrers(&self) -> bool {
        self.has_anti_diagonal()
            && (0..self.l()).all(|i| {
                let d = self.anti_diagonal(i);
                let mut seen_zero = false;
                for (j, &b) in self.rows[i].iter().enumerate() {
                    if j == d {
                        continue;
                    }
                    if !b {
                        seen_zero = true;
                    } else if seen_zero {
                        return false;
                    }
                }
                true
            })
    }
}

impl fmt::Display for ZeroOneMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for &b in r {
                f.write_str(if b { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

fn non_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

/// Row `i` gets its anti-diagonal cell plus the leftmost other columns until
/// it holds `q[i]` ones.
pub fn modified_ferrers(q: &[usize], y: usize) -> Result<ZeroOneMatrix, WellCoveredError> {
    let l = q.len();
    if !non_increasing(q) || q.contains(&0) {
        return Err(WellCoveredError::BadRowSums(q.to_vec()));
    }
    if y < l {
        return Err(WellCoveredError::TooFewColumns { needed: l, y });
    }
    let mut rows = Vec::with_capacity(l);
    for (i, &qi) in q.iter().enumerate() {
        if qi > y {
            return Err(WellCoveredError::TooFewColumns { needed: qi, y });
        }
        let d = l - 1 - i;
        let mut row = vec![false; y];
        row[d] = true;
        let mut left = qi - 1;
        for (j, cell) in row.iter_mut().enumerate() {
            if left == 0 {
                break;
            }
            if j != d {
                *cell = true;
                left -= 1;
            }
        }
        rows.push(row);
    }
    Ok(ZeroOneMatrix { rows, y })
}

/// Whether every prefix sum of `a` is at least the matching prefix sum of
/// `b`, both padded with zeros.
pub fn dominates(a: &[usize], b: &[usize]) -> Result<bool, WellCoveredError> {
    let (sa, sb): (usize, usize) = (a.iter().sum(), b.iter().sum());
    if sa != sb {
        return Err(WellCoveredError::SumMismatch { a: sa, b: sb });
    }
    let (mut pa, mut pb) = (0, 0);
    for r in 0..a.len().max(b.len()) {
        pa += a.get(r).copied().unwrap_or(0);
        pb += b.get(r).copied().unwrap_or(0);
        if pa < pb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `b` is non-increasing, has at least `l` entries, its first entry exceeds
/// the last by at most 2 and every other entry exceeds it by at most 1.
pub fn semi_balanced(b: &[usize], l: usize) -> bool {
    let Some(&last) = b.last() else {
        return l == 0;
    };
    non_increasing(b) && b.len() >= l && b[0] - last <= 2 && b[1..].iter().all(|&x| x - last <= 1)
}

/// Moves ones between columns until the column sums equal `b`, never touching
/// anti-diagonal cells. Row sums are unchanged.
///
/// Each step takes the first column `i` with too many ones, the first column
/// `j` with too few, and the topmost row `h` with a movable one in `i` and a
/// zero in `j`.
pub fn gale_ryser_transform(m: &ZeroOneMatrix, b: &[usize]) -> Result<ZeroOneMatrix, WellCoveredError> {
    if b.len() != m.y() {
        return Err(WellCoveredError::TargetLength { expected: m.y(), got: b.len() });
    }
    if !non_increasing(b) {
        return Err(WellCoveredError::BadTarget(b.to_vec()));
    }
    if !m.has_anti_diagonal() {
        return Err(WellCoveredError::MissingAntiDiagonal);
    }
    let mut c = m.col_sums();
    if !dominates(&c, b)? {
        return Err(WellCoveredError::NotDominated { columns: c, target: b.to_vec() });
    }
    let mut out = m.clone();
    let l = out.l();
    while let Some(i) = (0..b.len()).find(|&t| c[t] > b[t]) {
        let j = (0..b.len()).find(|&t| c[t] < b[t]).expect("equal totals");
        let h = (0..l)
            .find(|&h| out.rows[h][i] && !out.rows[h][j] && out.anti_diagonal(h) != i)
            .ok_or(WellCoveredError::NoSwap { from: i, to: j })?;
        out.rows[h][i] = false;
        out.rows[h][j] = true;
        c[i] -= 1;
        c[j] += 1;
    }
    debug_assert!(out.has_anti_diagonal());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_row_example() {
        let m = modified_ferrers(&[3, 3, 2, 1], 6).unwrap();
        assert_eq!(m, ZeroOneMatrix::from_strs(&["110100", "111000", "110000", "100000"]));
        assert!(m.is_modified_ferrers());
        assert_eq!(m.col_sums(), vec![4, 3, 1, 1, 0, 0]);
        let b = [2, 2, 2, 1, 1, 1];
        assert!(dominates(&m.col_sums(), &b).unwrap());
        let t = gale_ryser_transform(&m, &b).unwrap();
        assert_eq!(t.row_sums(), vec![3, 3, 2, 1]);
        assert_eq!(t.col_sums(), b.to_vec());
        assert!(t.has_anti_diagonal());
    }

    #[test]
    fn small_ferrers() {
        assert_eq!(modified_ferrers(&[1], 1).unwrap(), ZeroOneMatrix::from_strs(&["1"]));
        assert_eq!(modified_ferrers(&[2, 1], 3).unwrap(), ZeroOneMatrix::from_strs(&["110", "100"]));
        assert!(modified_ferrers(&[4, 1], 3).is_err());
        assert!(modified_ferrers(&[1, 2], 3).is_err());
    }

    #[test]
    fn domination() {
        assert!(dominates(&[2, 2], &[2, 2]).unwrap());
        assert!(!dominates(&[2, 2], &[3, 1]).unwrap());
        assert!(dominates(&[3, 1], &[2, 1, 1]).unwrap());
        assert!(dominates(&[1], &[2]).is_err());
    }

    #[test]
    fn semi_balance() {
        assert!(semi_balanced(&[2, 2, 2, 1, 1, 1], 4));
        assert!(semi_balanced(&[3, 1, 1], 3));
        assert!(!semi_balanced(&[3, 3, 1], 3));
        assert!(!semi_balanced(&[1, 1], 3));
    }

    #[test]
    fn identity_when_already_balanced() {
        let m = modified_ferrers(&[2, 1], 2).unwrap();
        let c = m.col_sums();
        assert_eq!(gale_ryser_transform(&m, &c).unwrap(), m);
    }
}
