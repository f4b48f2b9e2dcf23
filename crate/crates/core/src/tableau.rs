//! Shifted semistandard tableaux in canonical form.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::entry::PrimedEntry;
use crate::error::{Error, Result, Rule};
use crate::shape::{Cell, ShiftedSkewShape, StrictPartition};

/// `wt(T)`: the number of entries `k` or `k'` for each `k = 1..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Weight(pub Vec<usize>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn reversed(&self) -> Weight {
        Weight(self.0.iter().rev().copied().collect())
    }

    /// Swap the multiplicities of `i` and `i + 1`.
    pub fn transposed(&self, i: usize) -> Weight {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Weight(w)
    }

    /// Reverse the multiplicities of `i..=j`.
    pub fn reversed_on(&self, i: usize, j: usize) -> Weight {
        let mut w = self.0.clone();
        w[i - 1..j].reverse();
        Weight(w)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A filling of a shifted skew shape with letters of `[n]'`.
///
/// Values handed out by the public API are semistandard and in canonical form;
/// [`ShiftedTableau::from_cells_unchecked`] exists for algorithm internals.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftedTableau {
    shape: ShiftedSkewShape,
    rows: Vec<Vec<PrimedEntry>>,
    n: u8,
}

impl ShiftedTableau {
    pub fn empty(shape_inner: StrictPartition, n: u8) -> Self {
        let shape = ShiftedSkewShape::new(shape_inner.clone(), shape_inner).expect("λ/λ");
        let rows = vec![Vec::new(); shape.num_rows()];
        ShiftedTableau { shape, rows, n }
    }

    /// Builds and validates a tableau from the skew cells of each row.
    pub fn from_rows(shape: ShiftedSkewShape, rows: Vec<Vec<PrimedEntry>>, n: u8) -> Result<Self> {
        let t = Self::from_rows_unchecked(shape, rows, n)?;
        t.validate()?;
        Ok(t)
    }

    /// Checks only that the rows fit the shape.
    pub fn from_rows_unchecked(
        shape: ShiftedSkewShape,
        rows: Vec<Vec<PrimedEntry>>,
        n: u8,
    ) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(Error::FillingMismatch(format!(
                "{} rows given for shape {shape} with {} rows",
                rows.len(),
                shape.num_rows()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(r + 1) {
                return Err(Error::FillingMismatch(format!(
                    "row {} has {} entries, shape {shape} needs {}",
                    r + 1,
                    row.len(),
                    shape.row_len(r + 1)
                )));
            }
        }
        Ok(ShiftedTableau { shape, rows, n })
    }

    pub fn from_cells(
        shape: ShiftedSkewShape,
        cells: impl IntoIterator<Item = (Cell, PrimedEntry)>,
        n: u8,
    ) -> Result<Self> {
        let t = Self::from_cells_unchecked(shape, cells, n)?;
        t.validate()?;
        Ok(t)
    }

    pub fn from_cells_unchecked(
        shape: ShiftedSkewShape,
        cells: impl IntoIterator<Item = (Cell, PrimedEntry)>,
        n: u8,
    ) -> Result<Self> {
        let map: BTreeMap<Cell, PrimedEntry> = cells.into_iter().collect();
        if map.len() != shape.num_cells() || map.keys().any(|c| !shape.contains(*c)) {
            return Err(Error::FillingMismatch(format!(
                "cells {:?} do not tile shape {shape}",
                map.keys().collect::<Vec<_>>()
            )));
        }
        let rows = (1..=shape.num_rows())
            .map(|r| {
                (shape.row_start(r)..r + shape.outer().part(r))
                    .map(|c| map[&Cell::new(r, c)])
                    .collect()
            })
            .collect();
        Ok(ShiftedTableau { shape, rows, n })
    }

    /// Infers the shape from a set of cells sitting on top of `inner`.
    pub fn from_cells_over(
        inner: &StrictPartition,
        cells: impl IntoIterator<Item = (Cell, PrimedEntry)>,
        n: u8,
    ) -> Result<Self> {
        let map: BTreeMap<Cell, PrimedEntry> = cells.into_iter().collect();
        let rows = map
            .keys()
            .map(|c| c.row)
            .max()
            .unwrap_or(0)
            .max(inner.len());
        let mut outer = Vec::with_capacity(rows);
        for r in 1..=rows {
            let count = map.keys().filter(|c| c.row == r).count();
            outer.push(inner.part(r) + count);
        }
        let outer = StrictPartition::from_padded(outer)?;
        let shape = ShiftedSkewShape::new(outer, inner.clone())?;
        Self::from_cells_unchecked(shape, map, n)
    }

    pub fn shape(&self) -> &ShiftedSkewShape {
        &self.shape
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    /// Same filling over a different alphabet bound.
    pub fn with_n(&self, n: u8) -> Result<Self> {
        let t = ShiftedTableau { n, ..self.clone() };
        t.check_letters()?;
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<PrimedEntry>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.shape.num_cells()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_straight(&self) -> bool {
        self.shape.is_straight()
    }

    pub fn get(&self, cell: Cell) -> Option<PrimedEntry> {
        if !self.shape.contains(cell) {
            return None;
        }
        Some(self.rows[cell.row - 1][cell.col - self.shape.row_start(cell.row)])
    }

    /// All `(cell, entry)` pairs, top row first.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, PrimedEntry)> + '_ {
        self.shape.cells().map(move |c| (c, self.get(c).unwrap()))
    }

    pub fn cell_map(&self) -> BTreeMap<Cell, PrimedEntry> {
        self.entries().collect()
    }

    /// Largest unprimed value present, 0 for the empty tableau.
    pub fn max_value(&self) -> u8 {
        self.rows
            .iter()
            .flatten()
            .map(|e| e.value())
            .max()
            .unwrap_or(0)
    }

    /// Rows read left to right, bottom row first.
    pub fn reading_word(&self) -> Vec<PrimedEntry> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    pub fn weight(&self) -> Weight {
        let mut w = Weight::zero(self.n as usize);
        for e in self.rows.iter().flatten() {
            w.0[e.value() as usize - 1] += 1;
        }
        w
    }

    fn check_letters(&self) -> Result<()> {
        for (cell, e) in self.entries() {
            if e.value() > self.n {
                return Err(Error::Invalid {
                    cell,
                    rule: Rule::LetterOutOfRange,
                });
            }
        }
        Ok(())
    }

    /// Row, column and prime-multiplicity rules, without canonical form.
    pub fn check_semistandard(&self) -> Result<()> {
        self.check_letters()?;
        for (cell, e) in self.entries() {
            if let Some(east) = self.get(cell.east()) {
                if east < e {
                    return Err(Error::Invalid {
                        cell: cell.east(),
                        rule: Rule::RowOrder,
                    });
                }
                if east == e && e.is_primed() {
                    return Err(Error::Invalid {
                        cell: cell.east(),
                        rule: Rule::PrimedTwiceInRow,
                    });
                }
            }
            if let Some(south) = self.get(cell.south()) {
                if south < e {
                    return Err(Error::Invalid {
                        cell: cell.south(),
                        rule: Rule::ColumnOrder,
                    });
                }
                if south == e && !e.is_primed() {
                    return Err(Error::Invalid {
                        cell: cell.south(),
                        rule: Rule::UnprimedTwiceInColumn,
                    });
                }
            }
        }
        Ok(())
    }

    /// The first cell (in reading order) that breaks canonical form.
    pub fn first_non_canonical(&self) -> Option<Cell> {
        let mut seen = [false; 128];
        for cell in self.shape.reading_cells() {
            let e = self.get(cell).unwrap();
            let v = e.value() as usize;
            if !seen[v] {
                seen[v] = true;
                if e.is_primed() {
                    return Some(cell);
                }
            }
        }
        None
    }

    pub fn is_canonical(&self) -> bool {
        self.first_non_canonical().is_none()
    }

    pub fn validate(&self) -> Result<()> {
        self.check_semistandard()?;
        match self.first_non_canonical() {
            Some(cell) => Err(Error::Invalid {
                cell,
                rule: Rule::NonCanonical,
            }),
            None => Ok(()),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Unprimes the first occurrence of every letter in the reading word.
    pub fn canonicalize(&self) -> ShiftedTableau {
        let mut out = self.clone();
        let mut seen = [false; 128];
        for r in (0..out.rows.len()).rev() {
            for e in out.rows[r].iter_mut() {
                let v = e.value() as usize;
                if !seen[v] {
                    seen[v] = true;
                    *e = e.with_prime(false);
                }
            }
        }
        out
    }

    /// Applies `f` to every entry, keeping the shape.
    pub fn map_entries(&self, f: impl Fn(PrimedEntry) -> PrimedEntry) -> ShiftedTableau {
        ShiftedTableau {
            shape: self.shape.clone(),
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|&e| f(e)).collect())
                .collect(),
            n: self.n,
        }
    }

    /// The sub-tableau of entries with values in `lo..=hi`, on its own skew shape.
    /// Letters and alphabet bound are unchanged.
    pub fn sub_tableau(&self, lo: u8, hi: u8) -> ShiftedTableau {
        let nrows = self.shape.num_rows();
        let mut inner = Vec::with_capacity(nrows);
        let mut outer = Vec::with_capacity(nrows);
        let mut rows = Vec::with_capacity(nrows);
        for r in 1..=nrows {
            let row = &self.rows[r - 1];
            let below = row.iter().filter(|e| e.value() < lo).count();
            let upto = row.iter().filter(|e| e.value() <= hi).count();
            inner.push(self.shape.inner().part(r) + below);
            outer.push(self.shape.inner().part(r) + upto.max(below));
            rows.push(row[below..upto.max(below)].to_vec());
        }
        let inner =
            StrictPartition::from_padded(inner).expect("letter bands sit on shifted shapes");
        let outer =
            StrictPartition::from_padded(outer).expect("letter bands sit on shifted shapes");
        rows.truncate(outer.len());
        let shape = ShiftedSkewShape::new(outer, inner).expect("band shapes nest");
        ShiftedTableau {
            shape,
            rows,
            n: self.n,
        }
    }

    /// `T^k`: the border strip of letters `k'` and `k`.
    pub fn band(&self, k: u8) -> ShiftedTableau {
        self.sub_tableau(k, k)
    }

    /// Splits `T` into `(T^{1,i-1}, T^{i,j}, T^{j+1,n})`.
    pub fn restrict_interval(
        &self,
        i: u8,
        j: u8,
    ) -> Result<(ShiftedTableau, ShiftedTableau, ShiftedTableau)> {
        if i < 1 || i > j || j > self.n {
            return Err(Error::Index(format!(
                "interval [{i},{j}] for n = {}",
                self.n
            )));
        }
        Ok((
            self.sub_tableau(1, i - 1),
            self.sub_tableau(i, j),
            self.sub_tableau(j + 1, self.n),
        ))
    }

    /// Shifts every letter down by `offset` and sets the alphabet bound to `n`.
    pub fn reindexed_down(&self, offset: u8, n: u8) -> ShiftedTableau {
        let mut t = self.map_entries(|e| e.with_value(e.value() - offset));
        t.n = n;
        t
    }

    /// Shifts every letter up by `offset` and sets the alphabet bound to `n`.
    pub fn reindexed_up(&self, offset: u8, n: u8) -> ShiftedTableau {
        let mut t = self.map_entries(|e| e.with_value(e.value() + offset));
        t.n = n;
        t
    }

    /// Glues `outer_part` on top of `self`; `outer_part` must extend `self`.
    pub fn join(&self, outer_part: &ShiftedTableau) -> Result<ShiftedTableau> {
        if self.shape.outer() != outer_part.shape.inner() {
            return Err(Error::ShapeMismatch(format!(
                "{} does not extend {}",
                outer_part.shape, self.shape
            )));
        }
        let shape =
            ShiftedSkewShape::new(outer_part.shape.outer().clone(), self.shape.inner().clone())?;
        let rows = (1..=shape.num_rows())
            .map(|r| {
                let mut row = self.rows.get(r - 1).cloned().unwrap_or_default();
                row.extend(outer_part.rows.get(r - 1).cloned().unwrap_or_default());
                row
            })
            .collect();
        Ok(ShiftedTableau {
            shape,
            rows,
            n: self.n.max(outer_part.n),
        })
    }

    /// Inverse of [`restrict_interval`](Self::restrict_interval).
    pub fn reassemble(
        prefix: &ShiftedTableau,
        band: &ShiftedTableau,
        suffix: &ShiftedTableau,
    ) -> Result<ShiftedTableau> {
        prefix.join(band)?.join(suffix)
    }
}

impl fmt::Display for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::render_compact(self))
    }
}

impl fmt::Debug for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] n={}", crate::format::render_compact(self), self.n)
    }
}
