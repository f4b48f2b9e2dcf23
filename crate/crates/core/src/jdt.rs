//! Shifted jeu de taquin and the operators built from it: rectification,
//! complement, evacuation, reversal and the restricted Schützenberger
//! involutions `η_{i,j}`.
//!
//! Slides are carried out on standard tableaux, where the rule is a plain
//! comparison of neighbours; semistandard slides go through
//! [`standardize`](crate::standard::standardize) and back.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::entry::PrimedEntry;
use crate::error::{Error, Result};
use crate::shape::{Cell, ShiftedSkewShape};
use crate::standard::{destandardize, standardize};
use crate::tableau::ShiftedTableau;

/// Skew cells allowed in [`dual_equivalent`] and
/// [`components_by_dual_equivalence`].
pub const DUAL_EQUIVALENCE_MAX_CELLS: usize = 6;

/// One inner slide: the inner corner that was filled and the outer cell that
/// was vacated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SlideStep {
    pub corner: Cell,
    pub vacated: Cell,
}

/// Slides performed during a rectification, in order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SlideRecord(pub Vec<SlideStep>);

impl SlideRecord {
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }
}

/// Which inner corner to slide into next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CornerStrategy {
    Topmost,
    Bottommost,
}

fn slide_standard(t: &ShiftedTableau, corner: Cell) -> Result<(ShiftedTableau, Cell)> {
    let shape = t.shape();
    if !shape.inner_corners().contains(&corner) {
        return Err(Error::NotInnerCorner(corner));
    }
    let mut map = t.cell_map();
    let mut hole = corner;
    loop {
        let east = map.get(&hole.east()).map(|&e| (e, hole.east()));
        let south = map.get(&hole.south()).map(|&e| (e, hole.south()));
        let next = match (east, south) {
            (Some(a), Some(b)) => Some(if a.0 < b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        let Some((entry, from)) = next else { break };
        map.remove(&from);
        map.insert(hole, entry);
        hole = from;
    }
    let inner = shape
        .inner()
        .without_cell_in_row(corner.row)
        .expect("corner");
    let outer = shape
        .outer()
        .without_cell_in_row(hole.row)
        .ok_or_else(|| Error::Integrity(format!("slide vacated non-corner {hole}")))?;
    let shape = ShiftedSkewShape::new(outer, inner)?;
    Ok((
        ShiftedTableau::from_cells_unchecked(shape, map, t.n())?,
        hole,
    ))
}

fn reverse_slide_standard(t: &ShiftedTableau, vacated: Cell) -> Result<(ShiftedTableau, Cell)> {
    let shape = t.shape();
    let outer = shape
        .outer()
        .with_cell_in_row(vacated.row)
        .filter(|_| vacated.col == vacated.row + shape.outer().part(vacated.row))
        .ok_or_else(|| Error::Integrity(format!("{vacated} is not an outer addable cell")))?;
    let mut map = t.cell_map();
    let mut hole = vacated;
    loop {
        let west = hole.west().and_then(|c| map.get(&c).map(|&e| (e, c)));
        let north = hole.north().and_then(|c| map.get(&c).map(|&e| (e, c)));
        let next = match (west, north) {
            (Some(a), Some(b)) => Some(if a.0 > b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        let Some((entry, from)) = next else { break };
        map.remove(&from);
        map.insert(hole, entry);
        hole = from;
    }
    let inner = shape
        .inner()
        .with_cell_in_row(hole.row)
        .filter(|_| hole.col == hole.row + shape.inner().part(hole.row))
        .ok_or_else(|| Error::Integrity(format!("reverse slide ended at {hole}")))?;
    let shape = ShiftedSkewShape::new(outer, inner)?;
    Ok((
        ShiftedTableau::from_cells_unchecked(shape, map, t.n())?,
        hole,
    ))
}

/// One inner jeu de taquin slide into `corner`.
pub fn inner_slide(t: &ShiftedTableau, corner: Cell) -> Result<ShiftedTableau> {
    let (slid, _) = slide_standard(&standardize(t), corner)?;
    destandardize(&slid, &t.weight())
}

/// Rectification with the topmost-corner strategy.
pub fn rectify(t: &ShiftedTableau) -> (ShiftedTableau, SlideRecord) {
    rectify_with(t, CornerStrategy::Topmost)
}

pub fn rectify_with(t: &ShiftedTableau, strategy: CornerStrategy) -> (ShiftedTableau, SlideRecord) {
    if t.is_straight() {
        return (t.clone(), SlideRecord::default());
    }
    let mut cur = standardize(t);
    let mut record = Vec::new();
    loop {
        let corners = cur.shape().inner_corners();
        let corner = match strategy {
            CornerStrategy::Topmost => corners.first(),
            CornerStrategy::Bottommost => corners.last(),
        };
        let Some(&corner) = corner else { break };
        let (next, vacated) = slide_standard(&cur, corner).expect("corner taken from the shape");
        record.push(SlideStep { corner, vacated });
        cur = next;
    }
    let rect = destandardize(&cur, &t.weight()).expect("jeu de taquin respects standardization");
    (rect, SlideRecord(record))
}

/// Undo a rectification record on `t` with outer slides, last slide first.
pub fn replay_reverse(t: &ShiftedTableau, record: &SlideRecord) -> Result<ShiftedTableau> {
    let mut cur = standardize(t);
    for step in record.0.iter().rev() {
        let (next, end) = reverse_slide_standard(&cur, step.vacated)?;
        if end != step.corner {
            return Err(Error::Integrity(format!(
                "outer slide from {} ended at {end}, expected {}",
                step.vacated, step.corner
            )));
        }
        cur = next;
    }
    destandardize(&cur, &t.weight())
}

fn same_filling(a: &ShiftedTableau, b: &ShiftedTableau) -> bool {
    a.shape() == b.shape() && a.rows() == b.rows()
}

/// Same rectification.
pub fn knuth_equivalent(a: &ShiftedTableau, b: &ShiftedTableau) -> bool {
    same_filling(&rectify(a).0, &rectify(b).0)
}

/// Whether `a` and `b` keep equal shapes under every sequence of inner slides
/// applied to both. Both must have the same shape and at most
/// [`DUAL_EQUIVALENCE_MAX_CELLS`] cells.
pub fn dual_equivalent(a: &ShiftedTableau, b: &ShiftedTableau) -> Result<bool> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch(format!(
            "{} vs {}",
            a.shape(),
            b.shape()
        )));
    }
    if a.len() > DUAL_EQUIVALENCE_MAX_CELLS {
        return Err(Error::Capacity(format!(
            "dual equivalence is brute force; {} cells exceeds {}",
            a.len(),
            DUAL_EQUIVALENCE_MAX_CELLS
        )));
    }
    let mut memo = HashSet::new();
    Ok(lockstep(&standardize(a), &standardize(b), &mut memo))
}

fn lockstep(
    a: &ShiftedTableau,
    b: &ShiftedTableau,
    memo: &mut HashSet<(ShiftedTableau, ShiftedTableau)>,
) -> bool {
    if memo.contains(&(a.clone(), b.clone())) {
        return true;
    }
    for corner in a.shape().inner_corners() {
        let (a2, va) = slide_standard(a, corner).expect("corner");
        let (b2, vb) = slide_standard(b, corner).expect("corner");
        if va != vb || !lockstep(&a2, &b2, memo) {
            return false;
        }
    }
    memo.insert((a.clone(), b.clone()));
    true
}

/// A dual-equivalence class of a family and the shape it rectifies to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub members: Vec<usize>,
    pub rectification_shape: ShiftedSkewShape,
}

/// Partitions `family` (one shape) into dual-equivalence classes. Members are
/// referenced by index; classes are ordered by their first member.
pub fn components_by_dual_equivalence(family: &[ShiftedTableau]) -> Result<Vec<Component>> {
    let mut comps: Vec<Component> = Vec::new();
    for (i, t) in family.iter().enumerate() {
        let mut placed = false;
        for comp in comps.iter_mut() {
            if dual_equivalent(&family[comp.members[0]], t)? {
                comp.members.push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            if t.len() > DUAL_EQUIVALENCE_MAX_CELLS {
                return Err(Error::Capacity(format!("{} cells", t.len())));
            }
            comps.push(Component {
                members: vec![i],
                rectification_shape: rectify(t).0.shape().clone(),
            });
        }
    }
    Ok(comps)
}

/// `c_n(T)` inside the staircase of size `λ_1`, where `λ` is the outer shape.
pub fn complement(t: &ShiftedTableau) -> ShiftedTableau {
    complement_in(t, t.shape().outer().first())
}

/// `c_n(T)` inside the staircase of the given size: reflect through the
/// anti-diagonal and send `i ↦ (n-i+1)'`, `i' ↦ n-i+1`.
pub fn complement_in(t: &ShiftedTableau, staircase: usize) -> ShiftedTableau {
    let n = t.n();
    let shape = t.shape().complement(staircase);
    let cells: BTreeMap<Cell, PrimedEntry> = t
        .entries()
        .map(|(c, e)| {
            let cell = Cell::new(staircase + 1 - c.col, staircase + 1 - c.row);
            (cell, PrimedEntry::new(n + 1 - e.value(), !e.is_primed()))
        })
        .collect();
    let raw = ShiftedTableau::from_cells_unchecked(shape, cells, n).expect("reflection fits");
    raw.canonicalize()
}

/// `evac(T) = rect(c_n(T))` for straight `T`.
pub fn evacuation(t: &ShiftedTableau) -> Result<ShiftedTableau> {
    if !t.is_straight() {
        return Err(Error::NotStraight);
    }
    Ok(rectify(&complement(t)).0)
}

/// The reversal `T^e`: rectify, evacuate, then undo the rectification with
/// outer slides.
pub fn reversal(t: &ShiftedTableau) -> Result<ShiftedTableau> {
    if t.is_straight() {
        return evacuation(t);
    }
    let (rect, record) = rectify(t);
    let evac = evacuation(&rect)?;
    replay_reverse(&evac, &record)
}

/// The Schützenberger involution `η`, realised as the reversal.
pub fn eta_full(t: &ShiftedTableau) -> Result<ShiftedTableau> {
    reversal(t)
}

/// `η_{i,j}(T) = T^{1,i-1} ⊔ η(T^{i,j}) ⊔ T^{j+1,n}`.
pub fn eta(t: &ShiftedTableau, i: u8, j: u8) -> Result<ShiftedTableau> {
    if i < 1 || i >= j || j > t.n() {
        return Err(Error::Index(format!("η_{{{i},{j}}} with n = {}", t.n())));
    }
    let (prefix, band, suffix) = t.restrict_interval(i, j)?;
    let local = band.reindexed_down(i - 1, j - i + 1);
    let reversed = reversal(&local)?.reindexed_up(i - 1, t.n());
    ShiftedTableau::reassemble(&prefix, &reversed, &suffix)
}

/// `σ_i = η_{i,i+1}`.
pub fn sigma(t: &ShiftedTableau, i: u8) -> Result<ShiftedTableau> {
    eta(t, i, i + 1)
}
