//! Shifted tableau switching.
//!
//! A [`PerforatedPair`] holds an `a`-filling and a `b`-filling (each with a
//! single letter, primed or not) that tile a double border strip, the `b`
//! filling extending the `a` filling. The switching process repeatedly picks
//! an `a`-box with a `b`-box to its east or south and applies one of the seven
//! local switches until no such box is left.
//!
//! Geometry of the switches, with `x` the chosen `a`-box at `(r,c)`:
//!
//! | rule | neighbours of `x` in the pair | result |
//! |------|-------------------------------|--------|
//! | S1 | only east is `b` | swap `x` with east |
//! | S2 | only south is `b` | swap `x` with south |
//! | S3 | `x` on the diagonal, only east is `b` and it is `b'`, `(r+1,c+1)` is `b` | `(r,c)` ← entry of `(r+1,c+1)`, `(r,c+1)` ← `b`, `(r+1,c+1)` ← `x` |
//! | S4 | only south is `b`, it lies on the diagonal, west is an `a`-box | `(r,c-1)` ← south entry, `(r,c)` ← `a'`, south ← west entry |
//! | S5 | east is `b'` and south is `b` | swap `x` with east |
//! | S6 | east is `b` (unprimed) and south is `b` | `(r,c)` ← south entry, south ← `x` |
//! | S7 | as S6, with south on the diagonal and west an `a`-box | `(r,c-1)` ← south entry, `(r,c)` ← `a'`, south ← west entry |

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::entry::PrimedEntry;
use crate::error::{Error, Result};
use crate::shape::Cell;
use crate::tableau::ShiftedTableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SwitchRule {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    S7,
}

impl fmt::Display for SwitchRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
}

/// Two perforated fillings tiling a double border strip.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PerforatedPair {
    a: BTreeMap<Cell, PrimedEntry>,
    b: BTreeMap<Cell, PrimedEntry>,
}

fn check_perforated(name: &str, cells: &BTreeMap<Cell, PrimedEntry>) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidPair(format!("{name}-filling: {msg}")));
    let mut values = cells.values().map(|e| e.value());
    if let Some(v) = values.next() {
        if values.any(|w| w != v) {
            return bad("more than one letter".into());
        }
    }
    let mut diagonal = 0;
    for (&cell, &e) in cells {
        diagonal += usize::from(cell.is_diagonal());
        for (&other, &f) in cells {
            if other == cell {
                continue;
            }
            if e.is_primed() && !f.is_primed() && cell.row >= other.row && cell.col >= other.col {
                return bad(format!(
                    "primed box {cell} south-east of unprimed box {other}"
                ));
            }
            if e == f && e.is_primed() && cell.row == other.row {
                return bad(format!("two primed boxes in row {}", cell.row));
            }
            if e == f && !e.is_primed() && cell.col == other.col {
                return bad(format!("two unprimed boxes in column {}", cell.col));
            }
        }
    }
    if diagonal > 1 {
        return bad("more than one box on the main diagonal".into());
    }
    Ok(())
}

impl PerforatedPair {
    pub fn new(a: BTreeMap<Cell, PrimedEntry>, b: BTreeMap<Cell, PrimedEntry>) -> Result<Self> {
        let pair = PerforatedPair { a, b };
        pair.validate()?;
        Ok(pair)
    }

    pub(crate) fn new_unchecked(
        a: BTreeMap<Cell, PrimedEntry>,
        b: BTreeMap<Cell, PrimedEntry>,
    ) -> Self {
        PerforatedPair { a, b }
    }

    /// Checks disjointness, the perforated-filling rules for both families and
    /// that the region is a double border strip.
    pub fn validate(&self) -> Result<()> {
        if let Some(c) = self.a.keys().find(|c| self.b.contains_key(c)) {
            return Err(Error::InvalidPair(format!("{c} is in both fillings")));
        }
        check_perforated("a", &self.a)?;
        check_perforated("b", &self.b)?;
        let region = self.region();
        for &c in &region {
            if region.contains(&c.south_east()) && region.contains(&c.south_east().south_east()) {
                return Err(Error::InvalidPair(format!(
                    "region has a diagonal chain of three boxes starting at {c}"
                )));
            }
        }
        Ok(())
    }

    pub fn a_cells(&self) -> &BTreeMap<Cell, PrimedEntry> {
        &self.a
    }

    pub fn b_cells(&self) -> &BTreeMap<Cell, PrimedEntry> {
        &self.b
    }

    pub fn region(&self) -> BTreeSet<Cell> {
        self.a.keys().chain(self.b.keys()).copied().collect()
    }

    fn get(&self, cell: Cell) -> Option<(Family, PrimedEntry)> {
        if let Some(&e) = self.a.get(&cell) {
            Some((Family::A, e))
        } else {
            self.b.get(&cell).map(|&e| (Family::B, e))
        }
    }

    fn is_b(&self, cell: Cell) -> bool {
        self.b.contains_key(&cell)
    }

    fn is_a(&self, cell: Cell) -> bool {
        self.a.contains_key(&cell)
    }

    fn touches_b(&self, cell: Cell) -> bool {
        self.is_b(cell.east()) || self.is_b(cell.south())
    }

    /// The rightmost unprimed `a`-box with a `b`-box east or south of it; failing
    /// that, the bottommost primed one. `None` when fully switched.
    pub fn select_switch_box(&self) -> Option<Cell> {
        let unprimed = self
            .a
            .iter()
            .filter(|(c, e)| !e.is_primed() && self.touches_b(**c))
            .max_by_key(|(c, _)| (c.col, c.row));
        if let Some((&c, _)) = unprimed {
            return Some(c);
        }
        self.a
            .iter()
            .filter(|(c, e)| e.is_primed() && self.touches_b(**c))
            .max_by_key(|(c, _)| (c.row, c.col))
            .map(|(&c, _)| c)
    }

    pub fn is_fully_switched(&self) -> bool {
        self.select_switch_box().is_none()
    }

    fn set(&mut self, cell: Cell, family: Family, e: PrimedEntry) {
        self.a.remove(&cell);
        self.b.remove(&cell);
        match family {
            Family::A => self.a.insert(cell, e),
            Family::B => self.b.insert(cell, e),
        };
    }

    /// One application of `ς`: returns the new pair, the rule used and the
    /// box that was switched.
    pub fn switch_step(&self) -> Result<(PerforatedPair, SwitchRule, Cell)> {
        let x = self
            .select_switch_box()
            .ok_or_else(|| Error::Integrity("pair is already fully switched".into()))?;
        let xe = self.a[&x];
        let east = x.east();
        let south = x.south();
        let west = x.west();
        let mut next = self.clone();
        let rule = match (self.get(east), self.get(south)) {
            (Some((Family::B, be)), Some((Family::B, bs))) => {
                if be.is_primed() {
                    next.set(x, Family::B, be);
                    next.set(east, Family::A, xe);
                    SwitchRule::S5
                } else if south.is_diagonal() && west.is_some_and(|w| self.is_a(w)) {
                    let w = west.unwrap();
                    let we = self.a[&w];
                    next.set(w, Family::B, bs);
                    next.set(x, Family::A, xe.with_prime(true));
                    next.set(south, Family::A, we);
                    SwitchRule::S7
                } else {
                    next.set(x, Family::B, bs);
                    next.set(south, Family::A, xe);
                    SwitchRule::S6
                }
            }
            (Some((Family::B, be)), _) => {
                let se = x.south_east();
                match self.get(se) {
                    Some((Family::B, bse)) if x.is_diagonal() && be.is_primed() => {
                        next.set(x, Family::B, bse);
                        next.set(east, Family::B, be.with_prime(false));
                        next.set(se, Family::A, xe);
                        SwitchRule::S3
                    }
                    _ => {
                        next.set(x, Family::B, be);
                        next.set(east, Family::A, xe);
                        SwitchRule::S1
                    }
                }
            }
            (_, Some((Family::B, bs))) => {
                if south.is_diagonal() && west.is_some_and(|w| self.is_a(w)) {
                    let w = west.unwrap();
                    let we = self.a[&w];
                    next.set(w, Family::B, bs);
                    next.set(x, Family::A, xe.with_prime(true));
                    next.set(south, Family::A, we);
                    SwitchRule::S4
                } else {
                    next.set(x, Family::B, bs);
                    next.set(south, Family::A, xe);
                    SwitchRule::S2
                }
            }
            _ => {
                return Err(Error::Integrity(format!(
                    "selected box {x} has no b-box to switch with"
                )))
            }
        };
        Ok((next, rule, x))
    }

    /// Runs the switching process to the end. Returns the fully switched pair
    /// and the rules applied.
    pub fn switch_all(&self) -> Result<(PerforatedPair, Vec<(SwitchRule, Cell)>)> {
        let mut cur = self.clone();
        let mut rules = Vec::new();
        let limit = 4 * (self.a.len() + 1) * (self.b.len() + 1);
        while !cur.is_fully_switched() {
            let (next, rule, cell) = cur.switch_step()?;
            rules.push((rule, cell));
            cur = next;
            if rules.len() > limit {
                return Err(Error::Integrity("switching did not terminate".into()));
            }
        }
        Ok((cur, rules))
    }

    /// The pair with roles exchanged, so that switching it undoes a switch.
    pub fn swapped(&self) -> PerforatedPair {
        PerforatedPair {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }
}

/// `(A, B) ↦ (^A B, A_B)` for single-letter fillings.
pub fn switch_pair(
    a: &BTreeMap<Cell, PrimedEntry>,
    b: &BTreeMap<Cell, PrimedEntry>,
) -> Result<(BTreeMap<Cell, PrimedEntry>, BTreeMap<Cell, PrimedEntry>)> {
    let pair = PerforatedPair::new(a.clone(), b.clone())?;
    let (done, _) = pair.switch_all()?;
    Ok((done.b, done.a))
}

/// A cell of a board being switched: which tableau it came from, the original
/// letter class it belongs to, and its current entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Tile {
    side: Family,
    entry: PrimedEntry,
}

type Board = BTreeMap<Cell, Tile>;

/// One line of a switching trace: the state after a switch, cells from the
/// moving tableau marked with `*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub rule: SwitchRule,
    pub cell: Cell,
    pub state: String,
}

fn render_board(board: &Board, inner: &crate::shape::StrictPartition) -> String {
    let rows = board
        .keys()
        .map(|c| c.row)
        .max()
        .unwrap_or(0)
        .max(inner.len());
    (1..=rows)
        .map(|r| {
            let mut toks: Vec<String> = vec![".".into(); inner.part(r)];
            toks.extend(board.range(Cell::new(r, 0)..Cell::new(r + 1, 0)).map(
                |(_, t)| match t.side {
                    Family::A => format!("*{}", t.entry),
                    Family::B => t.entry.to_string(),
                },
            ));
            toks.join(" ")
        })
        .collect::<Vec<_>>()
        .join(" / ")
}

/// Switch the `A`-cells with letter `a` through the `B`-cells with letter `b`,
/// in place.
fn switch_on_board(
    board: &mut Board,
    a: u8,
    b: u8,
    trace: Option<(&mut Vec<TraceStep>, &crate::shape::StrictPartition)>,
) -> Result<()> {
    let pick = |side: Family, v: u8| -> BTreeMap<Cell, PrimedEntry> {
        board
            .iter()
            .filter(|(_, t)| t.side == side && t.entry.value() == v)
            .map(|(&c, t)| (c, t.entry))
            .collect()
    };
    let pair = PerforatedPair::new_unchecked(pick(Family::A, a), pick(Family::B, b));
    if pair.a.is_empty() || pair.b.is_empty() {
        return Ok(());
    }
    let write = |board: &mut Board, p: &PerforatedPair| {
        for (&c, &e) in &p.a {
            board.insert(
                c,
                Tile {
                    side: Family::A,
                    entry: e,
                },
            );
        }
        for (&c, &e) in &p.b {
            board.insert(
                c,
                Tile {
                    side: Family::B,
                    entry: e,
                },
            );
        }
    };
    match trace {
        None => {
            let (done, _) = pair.switch_all()?;
            write(board, &done);
        }
        Some((steps, inner)) => {
            let mut cur = pair;
            let limit = 4 * (cur.a.len() + 1) * (cur.b.len() + 1);
            let mut count = 0;
            while !cur.is_fully_switched() {
                let (next, rule, cell) = cur.switch_step()?;
                write(board, &next);
                steps.push(TraceStep {
                    rule,
                    cell,
                    state: render_board(board, inner),
                });
                cur = next;
                count += 1;
                if count > limit {
                    return Err(Error::Integrity("switching did not terminate".into()));
                }
            }
        }
    }
    Ok(())
}

/// Result of switching `S` through `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchResult {
    /// `^S T`, the image of `T`, now on the inside.
    pub inner: ShiftedTableau,
    /// `S_T`, the image of `S`, now on the outside.
    pub outer: ShiftedTableau,
    pub trace: Vec<TraceStep>,
}

/// Tableau switching of `S` with a tableau `T` extending it: the bands of `S`
/// from the largest letter down, each moved through the bands of `T` from the
/// smallest letter up.
pub fn full_switch(s: &ShiftedTableau, t: &ShiftedTableau) -> Result<SwitchResult> {
    full_switch_impl(s, t, false)
}

/// [`full_switch`] that also records every intermediate state.
pub fn full_switch_traced(s: &ShiftedTableau, t: &ShiftedTableau) -> Result<SwitchResult> {
    full_switch_impl(s, t, true)
}

fn full_switch_impl(s: &ShiftedTableau, t: &ShiftedTableau, traced: bool) -> Result<SwitchResult> {
    if s.shape().outer() != t.shape().inner() {
        return Err(Error::ShapeMismatch(format!(
            "T of shape {} does not extend S of shape {}",
            t.shape(),
            s.shape()
        )));
    }
    let mut board: Board = s
        .entries()
        .map(|(c, e)| {
            (
                c,
                Tile {
                    side: Family::A,
                    entry: e,
                },
            )
        })
        .chain(t.entries().map(|(c, e)| {
            (
                c,
                Tile {
                    side: Family::B,
                    entry: e,
                },
            )
        }))
        .collect();
    let inner = s.shape().inner().clone();
    let mut trace = Vec::new();
    for a in (1..=s.max_value()).rev() {
        for b in 1..=t.max_value() {
            let tr = traced.then_some((&mut trace, &inner));
            switch_on_board(&mut board, a, b, tr)?;
        }
    }
    let t_cells = board
        .iter()
        .filter(|(_, x)| x.side == Family::B)
        .map(|(&c, x)| (c, x.entry));
    let new_t = ShiftedTableau::from_cells_over(&inner, t_cells, t.n())?;
    let s_cells = board
        .iter()
        .filter(|(_, x)| x.side == Family::A)
        .map(|(&c, x)| (c, x.entry));
    let new_s = ShiftedTableau::from_cells_over(new_t.shape().outer(), s_cells, s.n())?;
    for (name, out) in [("^S T", &new_t), ("S_T", &new_s)] {
        out.validate()
            .map_err(|e| Error::Integrity(format!("switching produced invalid {name}: {e}")))?;
    }
    if new_s.shape().outer() != t.shape().outer() {
        return Err(Error::Integrity("switching changed the total shape".into()));
    }
    Ok(SwitchResult {
        inner: new_t,
        outer: new_s,
        trace,
    })
}

/// Switches the bands `T^i` and `T^{i+1}` of `t` in place (no relabelling).
/// Returns the filling, not yet canonicalized, and the trace when asked.
pub(crate) fn switch_adjacent_bands(
    t: &ShiftedTableau,
    i: u8,
    traced: bool,
) -> Result<(BTreeMap<Cell, PrimedEntry>, Vec<TraceStep>)> {
    let mut board: Board = t
        .entries()
        .filter(|(_, e)| e.value() == i || e.value() == i + 1)
        .map(|(c, e)| {
            let side = if e.value() == i { Family::A } else { Family::B };
            (c, Tile { side, entry: e })
        })
        .collect();
    let mut trace = Vec::new();
    if traced {
        // a full-tableau picture of each state, the moving band starred
        let pair_cells: BTreeSet<Cell> = board.keys().copied().collect();
        let mut steps = Vec::new();
        switch_on_board(&mut board, i, i + 1, Some((&mut steps, t.shape().inner())))?;
        // re-render each state with the untouched letters filled in
        let mut replay: Board = t
            .entries()
            .filter(|(_, e)| e.value() == i || e.value() == i + 1)
            .map(|(c, e)| {
                let side = if e.value() == i { Family::A } else { Family::B };
                (c, Tile { side, entry: e })
            })
            .collect();
        for step in steps {
            let pair = PerforatedPair::new_unchecked(
                replay
                    .iter()
                    .filter(|(_, x)| x.side == Family::A)
                    .map(|(&c, x)| (c, x.entry))
                    .collect(),
                replay
                    .iter()
                    .filter(|(_, x)| x.side == Family::B)
                    .map(|(&c, x)| (c, x.entry))
                    .collect(),
            );
            let (next, rule, cell) = pair.switch_step()?;
            for (&c, &e) in &next.a {
                replay.insert(
                    c,
                    Tile {
                        side: Family::A,
                        entry: e,
                    },
                );
            }
            for (&c, &e) in &next.b {
                replay.insert(
                    c,
                    Tile {
                        side: Family::B,
                        entry: e,
                    },
                );
            }
            let mut full: Board = t
                .entries()
                .filter(|(c, _)| !pair_cells.contains(c))
                .map(|(c, e)| {
                    (
                        c,
                        Tile {
                            side: Family::B,
                            entry: e,
                        },
                    )
                })
                .collect();
            full.extend(replay.iter().map(|(&c, &x)| (c, x)));
            debug_assert_eq!(rule, step.rule);
            trace.push(TraceStep {
                rule,
                cell,
                state: render_board(&full, t.shape().inner()),
            });
        }
    } else {
        switch_on_board(&mut board, i, i + 1, None)?;
    }
    let mut cells: BTreeMap<Cell, PrimedEntry> = t.entries().collect();
    for (c, x) in board {
        // after switching, the former `i` band carries the A side
        let v = match x.side {
            Family::A => i,
            Family::B => i + 1,
        };
        cells.insert(c, x.entry.with_value(v));
    }
    Ok((cells, trace))
}

/// Evacuation by switching, for any shape: the band of `1`s is switched out
/// through the rest, then the band of `2`s through what remains, and so on;
/// the `k`-th displaced band is relabelled `n + 1 - k`.
pub fn evac_skew(t: &ShiftedTableau) -> Result<ShiftedTableau> {
    let n = t.n();
    // side A marks bands already moved out; entry value is the original letter
    let mut board: Board = t
        .entries()
        .map(|(c, e)| {
            (
                c,
                Tile {
                    side: Family::B,
                    entry: e,
                },
            )
        })
        .collect();
    for k in 1..n {
        for tile in board.values_mut() {
            if tile.entry.value() == k {
                tile.side = Family::A;
            }
        }
        for b in k + 1..=n {
            switch_on_board(&mut board, k, b, None)?;
        }
        for tile in board.values_mut() {
            if tile.entry.value() == k {
                tile.side = Family::B;
            }
        }
    }
    let cells = board
        .into_iter()
        .map(|(c, x)| (c, x.entry.with_value(n + 1 - x.entry.value())));
    let out = ShiftedTableau::from_cells_unchecked(t.shape().clone(), cells, n)?;
    out.validate()
        .map_err(|e| Error::Integrity(format!("evacuation by switching of {t:?}: {e}")))?;
    Ok(out)
}

/// Evacuation of a straight tableau by switching.
pub fn evac_switch(t: &ShiftedTableau) -> Result<ShiftedTableau> {
    if !t.is_straight() {
        return Err(Error::NotStraight);
    }
    evac_skew(t)
}

/// `evac~_k`: evacuate the letters `1..=k`, keep the rest.
pub fn evac_k_skew(t: &ShiftedTableau, k: u8) -> Result<ShiftedTableau> {
    if k < 1 || k > t.n() {
        return Err(Error::Index(format!("evac_{k} with n = {}", t.n())));
    }
    let low = t.sub_tableau(1, k).with_n(k)?;
    let high = t.sub_tableau(k + 1, t.n());
    evac_skew(&low)?.with_n(t.n())?.join(&high)
}

/// `evac_k` on a straight tableau.
pub fn evac_k_switch(t: &ShiftedTableau, k: u8) -> Result<ShiftedTableau> {
    if !t.is_straight() {
        return Err(Error::NotStraight);
    }
    evac_k_skew(t, k)
}

/// `evac~_{i,j}(T) = T^{1,i-1} ⊔ evac~(T^{i,j}) ⊔ T^{j+1,n}`.
pub fn evac_interval_skew(t: &ShiftedTableau, i: u8, j: u8) -> Result<ShiftedTableau> {
    let (prefix, band, suffix) = t.restrict_interval(i, j)?;
    let local = band.reindexed_down(i - 1, j - i + 1);
    let done = evac_skew(&local)?.reindexed_up(i - 1, t.n());
    ShiftedTableau::reassemble(&prefix, &done, &suffix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{parse_tableau, parse_tableau_with_n};

    fn cells(spec: &[((usize, usize), &str)]) -> BTreeMap<Cell, PrimedEntry> {
        spec.iter()
            .map(|&((r, c), e)| (Cell::new(r, c), e.parse().unwrap()))
            .collect()
    }

    fn sample_pair() -> (ShiftedTableau, ShiftedTableau) {
        let s = parse_tableau("1 1 1\n2").unwrap();
        let t = parse_tableau(". . . 1\n. 1").unwrap();
        (s, t)
    }

    #[test]
    fn switching_example_trace() {
        let (s, t) = sample_pair();
        let res = full_switch_traced(&s, &t).unwrap();
        let rules: Vec<SwitchRule> = res.trace.iter().map(|s| s.rule).collect();
        assert_eq!(
            rules,
            vec![
                SwitchRule::S1,
                SwitchRule::S1,
                SwitchRule::S7,
                SwitchRule::S1
            ]
        );
        let states: Vec<&str> = res.trace.iter().map(|s| s.state.as_str()).collect();
        assert_eq!(
            states,
            vec![
                "*1 *1 *1 1 / 1 *2",
                "*1 *1 1 *1 / 1 *2",
                "1 *1' 1 *1 / *1 *2",
                "1 1 *1' *1 / *1 *2",
            ]
        );
        assert_eq!(res.inner.to_string(), "1 1");
        assert_eq!(res.outer.to_string(), ". . 1' 1 / 1 2");
    }

    #[test]
    fn first_selected_box() {
        let a = cells(&[((1, 1), "1"), ((1, 2), "1"), ((1, 3), "1")]);
        let b = cells(&[((1, 4), "2"), ((2, 2), "2")]);
        let pair = PerforatedPair::new(a, b).unwrap();
        assert_eq!(pair.select_switch_box(), Some(Cell::new(1, 3)));
    }

    #[test]
    fn lone_primed_box_is_selected() {
        let a = cells(&[((1, 2), "1'")]);
        let b = cells(&[((2, 2), "2")]);
        let pair = PerforatedPair::new(a, b).unwrap();
        assert_eq!(pair.select_switch_box(), Some(Cell::new(1, 2)));
        let (next, rule, _) = pair.switch_step().unwrap();
        assert_eq!(rule, SwitchRule::S2);
        assert_eq!(next.b_cells().keys().next(), Some(&Cell::new(1, 2)));
    }

    #[test]
    fn s4_on_the_diagonal() {
        let a = cells(&[((1, 1), "1"), ((1, 2), "1")]);
        let b = cells(&[((2, 2), "2")]);
        let pair = PerforatedPair::new(a, b).unwrap();
        let (next, rule, cell) = pair.switch_step().unwrap();
        assert_eq!((rule, cell), (SwitchRule::S4, Cell::new(1, 2)));
        assert_eq!(next.b_cells(), &cells(&[((1, 1), "2")]));
        assert_eq!(next.a_cells(), &cells(&[((1, 2), "1'"), ((2, 2), "1")]));
        assert!(next.validate().is_ok());
    }

    #[test]
    fn fully_switched_pair_is_inert() {
        let a = cells(&[((1, 3), "1")]);
        let b = cells(&[((1, 1), "2"), ((1, 2), "2")]);
        let pair = PerforatedPair::new(a, b).unwrap();
        assert!(pair.is_fully_switched());
        assert!(matches!(pair.switch_step(), Err(Error::Integrity(_))));
    }

    #[test]
    fn invalid_pairs_rejected() {
        let a = cells(&[((1, 1), "1"), ((2, 2), "1")]);
        let b = cells(&[]);
        assert!(PerforatedPair::new(a, b).is_err());
        let a = cells(&[((1, 1), "1"), ((1, 2), "1'")]);
        assert!(PerforatedPair::new(a, BTreeMap::new()).is_err());
    }

    #[test]
    fn empty_a_leaves_b() {
        let b = cells(&[((1, 1), "2"), ((1, 2), "2")]);
        let (tb, ab) = switch_pair(&BTreeMap::new(), &b).unwrap();
        assert_eq!(tb, b);
        assert!(ab.is_empty());
    }

    #[test]
    fn empty_t_gives_s_back() {
        let s = parse_tableau("1 1 2").unwrap();
        let t = parse_tableau(". . .").unwrap();
        let res = full_switch(&s, &t).unwrap();
        assert!(res.inner.is_empty());
        assert_eq!(res.outer, s);
        assert!(full_switch(&t, &s).is_err());
    }

    #[test]
    fn evac_switch_small() {
        let t = parse_tableau("1").unwrap();
        assert_eq!(evac_switch(&t).unwrap().to_string(), "1");
        let t = parse_tableau_with_n("1 1 2", Some(2)).unwrap();
        assert_eq!(evac_switch(&t).unwrap().to_string(), "1 2 2");
        assert_eq!(evac_k_switch(&t, 2).unwrap(), evac_switch(&t).unwrap());
        assert_eq!(evac_k_switch(&t, 1).unwrap(), t);
        assert_eq!(
            evac_switch(&parse_tableau(". 1").unwrap()),
            Err(Error::NotStraight)
        );
    }
}
