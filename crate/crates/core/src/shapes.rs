//! Partitions, their conjugates with extended indexing, and reverse plane
//! partitions with bounded parts.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("parts must be positive, got {0:?}")]
    ZeroPart(Vec<usize>),
    #[error("cannot parse shape {0:?}")]
    Parse(String),
    #[error("invalid filling: {0}")]
    InvalidFilling(String),
}

/// An integer partition `parts[0] >= parts[1] >= ... > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PartitionShape {
    parts: Vec<usize>,
}

/// A cell `(i, j)` of a Young diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
}

impl Cell {
    /// Content `j - i`, the index of the diagonal containing the cell.
    pub fn diagonal(&self) -> i32 {
        self.j as i32 - self.i as i32
    }
}

impl PartitionShape {
    pub fn new(parts: Vec<usize>) -> Result<Self, ShapeError> {
        if parts.contains(&0) {
            return Err(ShapeError::ZeroPart(parts));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::NotDecreasing(parts));
        }
        Ok(PartitionShape { parts })
    }

    pub fn empty() -> Self {
        PartitionShape::default()
    }

    /// The `r x c` rectangle `(c^r)`.
    pub fn rectangle(r: usize, c: usize) -> Self {
        if c == 0 {
            return PartitionShape::empty();
        }
        PartitionShape { parts: vec![c; r] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Number of columns (the first part).
    pub fn cols(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// `lambda_i` for 1-based `i`, 0 outside the rows.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `lambda_i` extended by `c` for `i <= 0` and `0` for `i > r`.
    pub fn part_ext(&self, i: i32) -> i32 {
        if i <= 0 {
            self.cols() as i32
        } else {
            self.part(i as usize) as i32
        }
    }

    /// `lambda'_j` extended by `r` for `j <= 0` and `0` for `j > c`.
    pub fn conj_ext(&self, j: i32) -> i32 {
        if j <= 0 {
            self.rows() as i32
        } else {
            self.parts.iter().filter(|&&p| p >= j as usize).count() as i32
        }
    }

    pub fn conjugate(&self) -> PartitionShape {
        let parts = (1..=self.cols())
            .map(|j| self.conj_ext(j as i32) as usize)
            .collect();
        PartitionShape { parts }
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.i >= 1 && cell.j >= 1 && cell.j <= self.part(cell.i)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |j| Cell { i: r + 1, j }))
    }

    /// Adds a cell at the end of row `i` (1-based) if the result is a partition.
    pub fn add_cell(&self, i: usize) -> Option<PartitionShape> {
        let mut parts = self.parts.clone();
        if i == parts.len() + 1 {
            parts.push(1);
        } else if i >= 1 && i <= parts.len() {
            parts[i - 1] += 1;
        } else {
            return None;
        }
        PartitionShape::new(parts).ok()
    }

    /// All partitions of exactly `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<PartitionShape> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<PartitionShape>) {
            if rest == 0 {
                out.push(PartitionShape { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with at most `n` cells, including the empty one.
    pub fn all_up_to(n: usize) -> Vec<PartitionShape> {
        (0..=n).flat_map(PartitionShape::all_of_size).collect()
    }
}

impl FromStr for PartitionShape {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if t.is_empty() {
            return Ok(PartitionShape::empty());
        }
        let parts: Result<Vec<usize>, _> =
            t.split(',').map(|p| p.trim().parse::<usize>()).collect();
        let parts = parts.map_err(|_| ShapeError::Parse(s.to_string()))?;
        PartitionShape::new(parts)
    }
}

impl fmt::Display for PartitionShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&strs.join(","))
    }
}

impl Serialize for PartitionShape {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// A reverse plane partition of a given shape with parts in `[0, bound]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RppTable {
    shape: PartitionShape,
    bound: u32,
    rows: Vec<Vec<u32>>,
}

impl RppTable {
    pub fn new(shape: PartitionShape, bound: u32, rows: Vec<Vec<u32>>) -> Result<Self, ShapeError> {
        if rows.len() != shape.rows() {
            return Err(ShapeError::InvalidFilling(format!(
                "{} rows for a shape with {}",
                rows.len(),
                shape.rows()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.part(r + 1) {
                return Err(ShapeError::InvalidFilling(format!(
                    "row {} has length {}",
                    r + 1,
                    row.len()
                )));
            }
        }
        let t = RppTable { shape, bound, rows };
        if let Some(reason) = t.violation() {
            return Err(ShapeError::InvalidFilling(reason));
        }
        Ok(t)
    }

    /// The all-zeros filling.
    pub fn zeros(shape: &PartitionShape, bound: u32) -> Self {
        let rows = shape.parts().iter().map(|&p| vec![0; p]).collect();
        RppTable {
            shape: shape.clone(),
            bound,
            rows,
        }
    }

    fn violation(&self) -> Option<String> {
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v > self.bound {
                    return Some(format!(
                        "entry ({},{}) = {v} exceeds {}",
                        r + 1,
                        c + 1,
                        self.bound
                    ));
                }
                if c > 0 && row[c - 1] > v {
                    return Some(format!("row {} decreases at column {}", r + 1, c + 1));
                }
                if r > 0 && self.rows[r - 1][c] > v {
                    return Some(format!("column {} decreases at row {}", c + 1, r + 1));
                }
            }
        }
        None
    }

    pub fn is_valid(&self) -> bool {
        self.violation().is_none()
    }

    pub fn shape(&self) -> &PartitionShape {
        &self.shape
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `pi_{i,j}` for a 1-based cell.
    pub fn get(&self, cell: Cell) -> u32 {
        self.rows[cell.i - 1][cell.j - 1]
    }

    /// Sum of the entries on the diagonal `j - i = l`.
    pub fn trace(&self, l: i32) -> u64 {
        self.shape
            .cells()
            .filter(|c| c.diagonal() == l)
            .map(|c| self.get(c) as u64)
            .sum()
    }

    /// Sum of all entries.
    pub fn size(&self) -> u64 {
        self.rows.iter().flatten().map(|&v| v as u64).sum()
    }

    /// `(l, tr_l)` for every diagonal of the shape.
    pub fn traces(&self) -> Vec<(i32, u64)> {
        let r = self.shape.rows() as i32;
        let c = self.shape.cols() as i32;
        (1 - r..c).map(|l| (l, self.trace(l))).collect()
    }
}

impl Serialize for RppTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

/// Streams every element of RPP(shape, n) exactly once.
///
/// Cells are visited as an odometer in row-major order, each entry running
/// from `max(left, above)` up to `n`.
pub fn enumerate_rpp(shape: &PartitionShape, n: u32) -> RppIter {
    let cells: Vec<Cell> = shape.cells().collect();
    RppIter {
        shape: shape.clone(),
        n,
        cells,
        current: None,
        done: false,
    }
}

pub struct RppIter {
    shape: PartitionShape,
    n: u32,
    cells: Vec<Cell>,
    current: Option<Vec<Vec<u32>>>,
    done: bool,
}

impl RppIter {
    fn lower(rows: &[Vec<u32>], c: Cell) -> u32 {
        let left = if c.j > 1 { rows[c.i - 1][c.j - 2] } else { 0 };
        let above = if c.i > 1 { rows[c.i - 2][c.j - 1] } else { 0 };
        left.max(above)
    }
}

impl Iterator for RppIter {
    type Item = RppTable;

    fn next(&mut self) -> Option<RppTable> {
        if self.done {
            return None;
        }
        match self.current.as_mut() {
            None => {
                self.current = Some(RppTable::zeros(&self.shape, self.n).rows);
            }
            Some(rows) => {
                let pos = self
                    .cells
                    .iter()
                    .rposition(|c| rows[c.i - 1][c.j - 1] < self.n);
                match pos {
                    None => {
                        self.done = true;
                        return None;
                    }
                    Some(k) => {
                        let c = self.cells[k];
                        rows[c.i - 1][c.j - 1] += 1;
                        for &d in &self.cells[k + 1..] {
                            rows[d.i - 1][d.j - 1] = RppIter::lower(rows, d);
                        }
                    }
                }
            }
        }
        let rows = self.current.clone().unwrap();
        Some(RppTable {
            shape: self.shape.clone(),
            bound: self.n,
            rows,
        })
    }
}

/// Every element of RPP(shape, n) with `|pi| <= max_size`, in odometer order.
pub fn enumerate_rpp_up_to_size(shape: &PartitionShape, n: u32, max_size: u64) -> Vec<RppTable> {
    let cells: Vec<Cell> = shape.cells().collect();
    let mut rows = RppTable::zeros(shape, n).rows;
    let mut out = Vec::new();
    fn rec(
        k: usize,
        cells: &[Cell],
        rows: &mut Vec<Vec<u32>>,
        remaining: u64,
        n: u32,
        shape: &PartitionShape,
        out: &mut Vec<RppTable>,
    ) {
        if k == cells.len() {
            out.push(RppTable {
                shape: shape.clone(),
                bound: n,
                rows: rows.clone(),
            });
            return;
        }
        let c = cells[k];
        let lo = RppIter::lower(rows, c);
        for v in lo..=n {
            if v as u64 > remaining {
                break;
            }
            rows[c.i - 1][c.j - 1] = v;
            rec(k + 1, cells, rows, remaining - v as u64, n, shape, out);
        }
        rows[c.i - 1][c.j - 1] = 0;
    }
    rec(0, &cells, &mut rows, max_size, n, shape, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> PartitionShape {
        s.parse().unwrap()
    }

    /// Counts fillings by trying every assignment in `[0, n]^cells`.
    fn brute_force_count(sh: &PartitionShape, n: u32) -> usize {
        let cells: Vec<Cell> = sh.cells().collect();
        let total = (n as usize + 1).pow(cells.len() as u32);
        let mut count = 0;
        for code in 0..total {
            let mut rows = RppTable::zeros(sh, n).rows;
            let mut k = code;
            for c in &cells {
                rows[c.i - 1][c.j - 1] = (k % (n as usize + 1)) as u32;
                k /= n as usize + 1;
            }
            if (RppTable {
                shape: sh.clone(),
                bound: n,
                rows,
            })
            .is_valid()
            {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn conjugates() {
        assert_eq!(shape("1").conjugate(), shape("1"));
        assert_eq!(shape("3").conjugate(), shape("1,1,1"));
        assert_eq!(shape("5,4,4,2,1").conjugate(), shape("5,4,3,3,1"));
    }

    #[test]
    fn extended_indices() {
        let s = shape("2,1");
        assert_eq!(s.part_ext(0), 2);
        assert_eq!(s.part_ext(-4), 2);
        assert_eq!(s.part_ext(5), 0);
        assert_eq!(s.conj_ext(-3), 2);
        assert_eq!(s.conj_ext(3), 0);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(shape("").rows(), 0);
        assert_eq!(shape("5,4,4,2,1").to_string(), "5,4,4,2,1");
        assert!("2,3".parse::<PartitionShape>().is_err());
        assert!("2,0".parse::<PartitionShape>().is_err());
        assert!("a".parse::<PartitionShape>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_rpp(&shape("1"), 1).count(), 2);
        assert_eq!(enumerate_rpp(&shape("2,1"), 1).count(), 5);
        assert_eq!(enumerate_rpp(&shape("3,3,3"), 3).count(), 980);
        assert_eq!(enumerate_rpp(&shape(""), 3).count(), 1);
        assert_eq!(enumerate_rpp(&shape("2,2"), 0).count(), 1);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for sh in PartitionShape::all_up_to(5) {
            for n in 0..3 {
                let all: Vec<RppTable> = enumerate_rpp(&sh, n).collect();
                assert_eq!(all.len(), brute_force_count(&sh, n), "{sh} n={n}");
                let mut sorted = all.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), all.len());
            }
        }
    }

    #[test]
    fn bounded_size_enumeration() {
        let sh = shape("2,1");
        let all: Vec<RppTable> = enumerate_rpp(&sh, 4).filter(|p| p.size() <= 3).collect();
        assert_eq!(enumerate_rpp_up_to_size(&sh, 4, 3), all);
    }

    #[test]
    fn printed_filling_trace() {
        let rows = vec![
            vec![0, 0, 1, 1, 2],
            vec![0, 2, 3, 4],
            vec![2, 4, 4, 4],
            vec![2, 4],
            vec![3],
        ];
        let p = RppTable::new(shape("5,4,4,2,1"), 4, rows).unwrap();
        assert_eq!(p.trace(0), 6);
        assert_eq!(p.traces().iter().map(|t| t.1).sum::<u64>(), p.size());
        assert_eq!(RppTable::zeros(&shape(""), 2).trace(0), 0);
    }

    #[test]
    fn invalid_fillings_rejected() {
        assert!(RppTable::new(shape("2"), 3, vec![vec![2, 1]]).is_err());
        assert!(RppTable::new(shape("1,1"), 3, vec![vec![2], vec![1]]).is_err());
        assert!(RppTable::new(shape("1"), 1, vec![vec![2]]).is_err());
    }
}
