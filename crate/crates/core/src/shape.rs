//! Strict partitions and shifted skew shapes.
//!
//! Coordinates are 1-based `(row, col)`. Row `r` of the shifted diagram of `λ`
//! occupies columns `r ..= r + λ_r - 1`; the inner shape removes a prefix of
//! each row.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn is_diagonal(self) -> bool {
        self.row == self.col
    }

    pub fn east(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }

    pub fn south(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }

    pub fn south_east(self) -> Cell {
        Cell::new(self.row + 1, self.col + 1)
    }

    pub fn west(self) -> Option<Cell> {
        (self.col > 1).then(|| Cell::new(self.row, self.col - 1))
    }

    pub fn north(self) -> Option<Cell> {
        (self.row > 1).then(|| Cell::new(self.row - 1, self.col))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A strictly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct StrictPartition(Vec<usize>);

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let strict = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] > w[1]);
        if strict {
            Ok(StrictPartition(parts))
        } else {
            Err(Error::NotStrict(parts))
        }
    }

    /// Like [`new`](Self::new) but drops trailing zero parts first.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    /// The staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: usize) -> Self {
        StrictPartition((1..=k).rev().collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn first(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part `r` (1-based), zero past the end.
    pub fn part(&self, row: usize) -> usize {
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &StrictPartition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// The partition whose parts are the complement of these parts in
    /// `{1, ..., staircase}`.
    pub fn complement(&self, staircase: usize) -> StrictPartition {
        assert!(self.first() <= staircase, "partition exceeds staircase");
        StrictPartition(
            (1..=staircase)
                .rev()
                .filter(|p| !self.0.contains(p))
                .collect(),
        )
    }

    pub fn can_remove_from_row(&self, row: usize) -> bool {
        let p = self.part(row);
        p > 0 && (p - 1 > self.part(row + 1) || p == 1)
    }

    pub fn can_add_to_row(&self, row: usize) -> bool {
        if row == 0 || row > self.len() + 1 {
            return false;
        }
        row == 1 || self.part(row) + 1 < self.part(row - 1)
    }

    pub fn without_cell_in_row(&self, row: usize) -> Option<StrictPartition> {
        if !self.can_remove_from_row(row) {
            return None;
        }
        let mut parts = self.0.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Some(StrictPartition(parts))
    }

    pub fn with_cell_in_row(&self, row: usize) -> Option<StrictPartition> {
        if !self.can_add_to_row(row) {
            return None;
        }
        let mut parts = self.0.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Some(StrictPartition(parts))
    }

    /// All strict partitions contained in the staircase of the given size.
    pub fn all_in_staircase(k: usize) -> Vec<StrictPartition> {
        let mut out: Vec<StrictPartition> = (0u32..(1 << k))
            .map(|mask| {
                StrictPartition(
                    (1..=k)
                        .rev()
                        .filter(|p| mask & (1 << (p - 1)) != 0)
                        .collect(),
                )
            })
            .collect();
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.0.cmp(&a.0)));
        out
    }

    /// All strict partitions of `size`, largest first part first.
    pub fn of_size(size: usize) -> Vec<StrictPartition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
            if rest == 0 {
                out.push(StrictPartition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for StrictPartition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::from_padded(parts)
    }
}

impl From<StrictPartition> for Vec<usize> {
    fn from(p: StrictPartition) -> Self {
        p.0
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The shifted skew shape `outer / inner`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ShiftedSkewShape {
    outer: StrictPartition,
    inner: StrictPartition,
}

impl ShiftedSkewShape {
    pub fn new(outer: StrictPartition, inner: StrictPartition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.0,
                inner: inner.0,
            });
        }
        Ok(ShiftedSkewShape { outer, inner })
    }

    pub fn straight(outer: StrictPartition) -> Self {
        ShiftedSkewShape {
            outer,
            inner: StrictPartition::empty(),
        }
    }

    pub fn from_parts(outer: &[usize], inner: &[usize]) -> Result<Self> {
        Self::new(
            StrictPartition::new(outer.to_vec())?,
            StrictPartition::new(inner.to_vec())?,
        )
    }

    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn inner(&self) -> &StrictPartition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn num_cells(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of skew cells in row `r`.
    pub fn row_len(&self, row: usize) -> usize {
        self.outer.part(row) - self.inner.part(row)
    }

    /// Column of the first skew cell of row `r`.
    pub fn row_start(&self, row: usize) -> usize {
        row + self.inner.part(row)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        let Cell { row, col } = cell;
        row >= 1 && col >= row + self.inner.part(row) && col < row + self.outer.part(row)
    }

    pub fn contains_in_outer(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= cell.row && cell.col < cell.row + self.outer.part(cell.row)
    }

    /// Skew cells, top row first, each row left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..=self.num_rows()).flat_map(move |r| {
            (self.row_start(r)..r + self.outer.part(r)).map(move |c| Cell::new(r, c))
        })
    }

    /// Skew cells in reading order: bottom row first, each row left to right.
    pub fn reading_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..=self.num_rows()).rev().flat_map(move |r| {
            (self.row_start(r)..r + self.outer.part(r)).map(move |c| Cell::new(r, c))
        })
    }

    /// Cells of the inner shape that may be vacated by an inner slide.
    pub fn inner_corners(&self) -> Vec<Cell> {
        (1..=self.inner.len())
            .filter(|&r| self.inner.can_remove_from_row(r))
            .map(|r| Cell::new(r, r + self.inner.part(r) - 1))
            .collect()
    }

    /// Cells of the outer shape whose removal leaves a strict partition.
    pub fn outer_corners(&self) -> Vec<Cell> {
        (1..=self.outer.len())
            .filter(|&r| self.outer.can_remove_from_row(r))
            .map(|r| Cell::new(r, r + self.outer.part(r) - 1))
            .collect()
    }

    /// Reflection through the anti-diagonal of the staircase of the given size:
    /// `λ/μ` becomes `μ^∨/λ^∨`.
    pub fn complement(&self, staircase: usize) -> ShiftedSkewShape {
        ShiftedSkewShape {
            outer: self.inner.complement(staircase),
            inner: self.outer.complement(staircase),
        }
    }

    /// All skew shapes with `outer` inside the staircase of size `k` and
    /// between `1` and `max_cells` cells, optionally only the non-straight ones.
    /// Ordered by cell count, then outer, then inner.
    pub fn all_in_staircase(k: usize, max_cells: usize, skew_only: bool) -> Vec<ShiftedSkewShape> {
        let parts = StrictPartition::all_in_staircase(k);
        let mut out = Vec::new();
        for outer in &parts {
            for inner in &parts {
                if skew_only && inner.is_empty() {
                    continue;
                }
                if !outer.contains(inner) {
                    continue;
                }
                let cells = outer.size() - inner.size();
                if cells == 0 || cells > max_cells {
                    continue;
                }
                out.push(ShiftedSkewShape {
                    outer: outer.clone(),
                    inner: inner.clone(),
                });
            }
        }
        out.sort_by_key(ShiftedSkewShape::shape_order_key);
        out
    }

    /// All straight shapes with between 1 and `max_cells` cells.
    pub fn all_straight(max_cells: usize) -> Vec<ShiftedSkewShape> {
        let mut out: Vec<ShiftedSkewShape> = (1..=max_cells)
            .flat_map(StrictPartition::of_size)
            .map(ShiftedSkewShape::straight)
            .collect();
        out.sort_by_key(ShiftedSkewShape::shape_order_key);
        out
    }

    /// Canonical ordering used for searches: cell count, then outer parts,
    /// then inner parts, lexicographically.
    pub fn shape_order_key(&self) -> (usize, Vec<usize>, Vec<usize>) {
        (
            self.num_cells(),
            self.outer.parts().to_vec(),
            self.inner.parts().to_vec(),
        )
    }
}

impl fmt::Display for ShiftedSkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}
