//! Exhaustive generation of `ShST(λ/μ, n)`.

use crate::entry::PrimedEntry;
use crate::shape::{Cell, ShiftedSkewShape};
use crate::tableau::ShiftedTableau;

/// Every canonical shifted semistandard tableau of one shape over `[n]'`,
/// ordered lexicographically by reading word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauFamily {
    shape: ShiftedSkewShape,
    n: u8,
    members: Vec<ShiftedTableau>,
}

impl TableauFamily {
    pub fn shape(&self) -> &ShiftedSkewShape {
        &self.shape
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn members(&self) -> &[ShiftedTableau] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ShiftedTableau> {
        self.members.iter()
    }

    pub fn index_of(&self, t: &ShiftedTableau) -> Option<usize> {
        self.members
            .binary_search_by(|m| m.reading_word().cmp(&t.reading_word()))
            .ok()
    }

    pub fn into_members(self) -> Vec<ShiftedTableau> {
        self.members
    }
}

impl<'a> IntoIterator for &'a TableauFamily {
    type Item = &'a ShiftedTableau;
    type IntoIter = std::slice::Iter<'a, ShiftedTableau>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Cell visiting order for the backtracking: rows top to bottom, each left to
/// right, so the west and north neighbours of a cell are always filled first.
struct Layout {
    cells: Vec<Cell>,
    west: Vec<Option<usize>>,
    north: Vec<Option<usize>>,
}

impl Layout {
    fn new(shape: &ShiftedSkewShape) -> Self {
        let cells: Vec<Cell> = shape.cells().collect();
        let index = |c: Option<Cell>| c.and_then(|c| cells.iter().position(|&x| x == c));
        let west = cells.iter().map(|c| index(c.west())).collect();
        let north = cells.iter().map(|c| index(c.north())).collect();
        Layout { cells, west, north }
    }
}

fn backtrack(layout: &Layout, n: u8, codes: &mut Vec<u8>, visit: &mut dyn FnMut(&[u8])) {
    let pos = codes.len();
    if pos == layout.cells.len() {
        visit(codes);
        return;
    }
    let west = layout.west[pos].map(|i| codes[i]);
    let north = layout.north[pos].map(|i| codes[i]);
    let low = west.unwrap_or(1).max(north.unwrap_or(1));
    for code in low..=2 * n {
        let primed = code % 2 == 1;
        if primed && west == Some(code) {
            continue;
        }
        if !primed && north == Some(code) {
            continue;
        }
        codes.push(code);
        backtrack(layout, n, codes, visit);
        codes.pop();
    }
}

fn canonical_codes(layout: &Layout, shape: &ShiftedSkewShape, codes: &[u8]) -> bool {
    let mut seen = [false; 256];
    for cell in shape.reading_cells() {
        let i = layout.cells.iter().position(|&c| c == cell).unwrap();
        let code = codes[i];
        let v = code.div_ceil(2) as usize;
        if !seen[v] {
            seen[v] = true;
            if code % 2 == 1 {
                return false;
            }
        }
    }
    true
}

/// All of `ShST(shape, n)`.
pub fn enumerate(shape: &ShiftedSkewShape, n: u8) -> TableauFamily {
    assert!(n >= 1, "alphabet bound must be positive");
    let layout = Layout::new(shape);
    let mut members = Vec::new();
    backtrack(&layout, n, &mut Vec::new(), &mut |codes| {
        if canonical_codes(&layout, shape, codes) {
            let cells = layout
                .cells
                .iter()
                .zip(codes)
                .map(|(&c, &code)| (c, PrimedEntry::from_code(code)));
            let t = ShiftedTableau::from_cells_unchecked(shape.clone(), cells, n)
                .expect("layout covers the shape");
            debug_assert!(t.is_valid());
            members.push(t);
        }
    });
    members.sort_by_cached_key(|t| t.reading_word());
    TableauFamily {
        shape: shape.clone(),
        n,
        members,
    }
}

/// `|ShST(shape, n)|` without building the tableaux.
pub fn count(shape: &ShiftedSkewShape, n: u8) -> usize {
    let layout = Layout::new(shape);
    let mut total = 0;
    backtrack(&layout, n, &mut Vec::new(), &mut |codes| {
        if canonical_codes(&layout, shape, codes) {
            total += 1;
        }
    });
    total
}
