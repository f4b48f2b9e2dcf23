//! Independent reference implementations used by the integration tests.
//! None of these call into the library's algorithms; they only use its types
//! to build and compare results.

#![allow(dead_code)]

use std::collections::BTreeMap;

use shtab::shape::Cell;
use shtab::{PrimedEntry, ShiftedSkewShape, ShiftedTableau};

type Grid = BTreeMap<(usize, usize), u8>;
type Letter = (u8, bool);

/// `(value, primed)` with `k' < k < (k+1)'`.
fn rank(v: u8, primed: bool) -> u8 {
    2 * v - u8::from(primed)
}

/// Every canonical semistandard filling of `shape` with letters up to `n`,
/// found by trying all `(2n)^cells` assignments of primed letters and keeping
/// those that pass a pairwise check. Partial assignments that already break a
/// pair are cut early, which does not change the result.
pub fn brute_force(shape: &ShiftedSkewShape, n: u8) -> Vec<ShiftedTableau> {
    let cells: Vec<(usize, usize)> = shape.cells().map(|c| (c.row, c.col)).collect();
    let mut out = Vec::new();
    let mut vals: Vec<(u8, bool)> = Vec::with_capacity(cells.len());
    fill(&cells, n, &mut vals, &mut |vals| {
        if canonical(&cells, vals) {
            let map = cells
                .iter()
                .zip(vals)
                .map(|(&(r, c), &(v, p))| (Cell::new(r, c), PrimedEntry::new(v, p)));
            out.push(ShiftedTableau::from_cells_unchecked(shape.clone(), map, n).unwrap());
        }
    });
    out.sort();
    out
}

fn fill(
    cells: &[(usize, usize)],
    n: u8,
    vals: &mut Vec<(u8, bool)>,
    visit: &mut dyn FnMut(&[Letter]),
) {
    let k = vals.len();
    if k == cells.len() {
        visit(vals);
        return;
    }
    for v in 1..=n {
        for primed in [true, false] {
            let ok = (0..k).all(|j| pair_ok(cells[j], vals[j], cells[k], (v, primed)));
            if ok {
                vals.push((v, primed));
                fill(cells, n, vals, visit);
                vals.pop();
            }
        }
    }
}

/// Row and column conditions between two cells, whichever comes first.
fn pair_ok(c1: (usize, usize), x: (u8, bool), c2: (usize, usize), y: (u8, bool)) -> bool {
    let (a, b, ca, cb) = if (c1.0, c1.1) <= (c2.0, c2.1) {
        (x, y, c1, c2)
    } else {
        (y, x, c2, c1)
    };
    let (ra, rb) = (rank(a.0, a.1), rank(b.0, b.1));
    if ca.0 == cb.0 {
        // a west of b
        ra < rb || (ra == rb && !a.1)
    } else if ca.1 == cb.1 {
        // a north of b
        ra < rb || (ra == rb && a.1)
    } else if ca.1 < cb.1 {
        // a strictly north-west of b
        ra <= rb
    } else {
        true
    }
}

fn canonical(cells: &[(usize, usize)], vals: &[(u8, bool)]) -> bool {
    let mut order: Vec<usize> = (0..cells.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(cells[i].0), cells[i].1));
    let mut seen = [false; 64];
    for i in order {
        let (v, p) = vals[i];
        if !seen[v as usize] {
            seen[v as usize] = true;
            if p {
                return false;
            }
        }
    }
    true
}

fn grid(t: &ShiftedTableau) -> Grid {
    t.entries()
        .map(|(c, e)| ((c.row, c.col), e.value()))
        .collect()
}

fn from_grid(shape: ShiftedSkewShape, g: &Grid, n: u8) -> ShiftedTableau {
    let cells = g
        .iter()
        .map(|(&(r, c), &v)| (Cell::new(r, c), PrimedEntry::unprimed(v)));
    ShiftedTableau::from_cells_unchecked(shape, cells, n).unwrap()
}

/// Whether `t` is a standard filling: letters `1..=len` each used once.
pub fn is_standard(t: &ShiftedTableau) -> bool {
    t.weight().0.iter().all(|&m| m == 1) && t.len() == t.n() as usize
}

/// Classical Bender-Knuth move on a standard filling: swap `i` and `i+1`
/// unless they sit in neighbouring cells.
pub fn bk_standard(t: &ShiftedTableau, i: u8) -> ShiftedTableau {
    let g = grid(t);
    let pos = |v: u8| *g.iter().find(|(_, &x)| x == v).unwrap().0;
    let (a, b) = (pos(i), pos(i + 1));
    let adjacent = (a.0 == b.0 && a.1 + 1 == b.1) || (a.1 == b.1 && a.0 + 1 == b.0);
    if adjacent {
        return t.clone();
    }
    let mut g = g;
    g.insert(a, i + 1);
    g.insert(b, i);
    from_grid(t.shape().clone(), &g, t.n())
}

/// `q_i = p_1 ⋯ p_i` with `p_k = t_k ⋯ t_1`, all through [`bk_standard`].
pub fn q_standard(t: &ShiftedTableau, i: u8) -> ShiftedTableau {
    let mut cur = t.clone();
    for k in (1..=i).rev() {
        for j in 1..=k {
            cur = bk_standard(&cur, j);
        }
    }
    cur
}

/// `q_{i,j} = q_{j-1} q_{j-i} q_{j-1}`, with `q_0` the identity.
pub fn q_interval_standard(t: &ShiftedTableau, i: u8, j: u8) -> ShiftedTableau {
    let q = |t: &ShiftedTableau, k: u8| if k == 0 { t.clone() } else { q_standard(t, k) };
    q(&q(&q(t, j - 1), j - i), j - 1)
}

fn inner_corners(inner: &[usize]) -> Vec<(usize, usize)> {
    // last cell of an inner row with no inner cell directly south of it
    let has = |r: usize, c: usize| {
        let len = inner.get(r - 1).copied().unwrap_or(0);
        c >= r && c < r + len
    };
    (1..=inner.len())
        .filter(|&r| inner[r - 1] > 0)
        .map(|r| (r, r + inner[r - 1] - 1))
        .filter(|&(r, c)| !has(r + 1, c))
        .collect()
}

/// Slides a standard grid into the hole at `corner`, returning the vacated cell.
fn slide(g: &mut Grid, corner: (usize, usize)) -> (usize, usize) {
    let mut hole = corner;
    loop {
        let east = g
            .get(&(hole.0, hole.1 + 1))
            .map(|&v| (v, (hole.0, hole.1 + 1)));
        let south = g
            .get(&(hole.0 + 1, hole.1))
            .map(|&v| (v, (hole.0 + 1, hole.1)));
        let next = match (east, south) {
            (Some(e), Some(s)) => Some(e.min(s)),
            (e, s) => e.or(s),
        };
        let Some((v, from)) = next else { return hole };
        g.remove(&from);
        g.insert(hole, v);
        hole = from;
    }
}

/// Rectification of a standard filling, always sliding into the last inner
/// corner of the lowest inner row.
pub fn rectify_standard(t: &ShiftedTableau) -> Grid {
    let mut g = grid(t);
    let mut inner: Vec<usize> = t.shape().inner().parts().to_vec();
    while let Some(&(r, c)) = inner_corners(&inner).last() {
        slide(&mut g, (r, c));
        inner[r - 1] -= 1;
        if inner[r - 1] == 0 {
            inner.pop();
        }
    }
    g
}

/// Evacuation of a straight standard filling by repeated deletion of the
/// smallest letter: at step `k` the letter `1` is removed, the hole is slid
/// out, the remaining letters drop by one, and the vacated cell receives
/// `len + 1 - k`.
pub fn evacuate_standard(t: &ShiftedTableau) -> Grid {
    let total = t.len() as u8;
    let mut g = grid(t);
    let mut out = Grid::new();
    for k in 1..=total {
        let corner = *g.iter().find(|(_, &v)| v == 1).unwrap().0;
        g.remove(&corner);
        let vacated = if g.is_empty() {
            corner
        } else {
            slide(&mut g, corner)
        };
        for v in g.values_mut() {
            *v -= 1;
        }
        out.insert(vacated, total + 1 - k);
    }
    out
}

pub fn grid_of(t: &ShiftedTableau) -> Grid {
    grid(t)
}
