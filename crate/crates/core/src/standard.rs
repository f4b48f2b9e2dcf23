//! Standardization of shifted tableaux.
//!
//! Letters are numbered family by family (`1'`,`1`, then `2'`,`2`, ...). Inside
//! a family the primed cells come first, top row to bottom row, then the
//! unprimed cells, left column to right column.

use crate::entry::PrimedEntry;
use crate::error::{Error, Result};
use crate::shape::Cell;
use crate::tableau::{ShiftedTableau, Weight};

/// Returns the standard tableau with labels `1..=N` (all unprimed).
pub fn standardize(t: &ShiftedTableau) -> ShiftedTableau {
    let mut cells: Vec<(Cell, PrimedEntry)> = t.entries().collect();
    cells.sort_by_key(|&(cell, e)| {
        let within = if e.is_primed() { cell.row } else { cell.col };
        (e.value(), !e.is_primed(), within)
    });
    let n = u8::try_from(cells.len().max(1)).expect("at most 255 cells");
    let labelled = cells
        .into_iter()
        .enumerate()
        .map(|(i, (cell, _))| (cell, PrimedEntry::unprimed(i as u8 + 1)));
    ShiftedTableau::from_cells_unchecked(t.shape().clone(), labelled, n)
        .expect("standardization keeps the shape")
}

/// Inverse of [`standardize`] for a given weight, returning the canonical
/// representative.
///
/// Within a family with labels `a..=b`, label `x < b` is primed exactly when
/// label `x + 1` sits in a lower row.
pub fn destandardize(std: &ShiftedTableau, weight: &Weight) -> Result<ShiftedTableau> {
    let total = weight.total();
    if total != std.len() {
        return Err(Error::Integrity(format!(
            "weight {weight} does not match {} cells",
            std.len()
        )));
    }
    let mut position = vec![Cell::new(0, 0); total + 1];
    for (cell, e) in std.entries() {
        let label = e.value() as usize;
        if e.is_primed() || label == 0 || label > total {
            return Err(Error::Integrity(format!("{std:?} is not standard")));
        }
        position[label] = cell;
    }
    let mut assigned = Vec::with_capacity(total);
    let mut label = 1;
    for (k, &count) in weight.0.iter().enumerate() {
        let letter = k as u8 + 1;
        for offset in 0..count {
            let here = position[label];
            let primed = offset + 1 < count && position[label + 1].row > here.row;
            assigned.push((here, PrimedEntry::new(letter, primed)));
            label += 1;
        }
    }
    let n = u8::try_from(weight.0.len()).expect("alphabet fits in u8");
    let out = ShiftedTableau::from_cells_unchecked(std.shape().clone(), assigned, n)?;
    out.validate().map_err(|e| {
        Error::Integrity(format!("destandardizing {std:?} with weight {weight}: {e}"))
    })?;
    Ok(out)
}
