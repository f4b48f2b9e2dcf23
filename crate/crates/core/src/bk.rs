//! Shifted Bender–Knuth moves and the operators built from them.

use crate::entry::PrimedEntry;
use crate::error::{Error, Result};
use crate::switching::{switch_adjacent_bands, TraceStep};
use crate::tableau::ShiftedTableau;

/// A permutation of `[n]` acting on `[n]'` letterwise, keeping primes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LetterPermutation {
    image: Vec<u8>,
}

impl LetterPermutation {
    pub fn identity(n: u8) -> Self {
        LetterPermutation {
            image: (1..=n).collect(),
        }
    }

    /// `θ_i`, the transposition of `i` and `i+1`.
    pub fn theta(n: u8, i: u8) -> Result<Self> {
        Self::theta_interval(n, i, i + 1)
    }

    /// `θ_{i,j}`, the longest permutation of `[i,j]`.
    pub fn theta_interval(n: u8, i: u8, j: u8) -> Result<Self> {
        if i < 1 || i > j || j > n {
            return Err(Error::Index(format!("θ on [{i},{j}] with n = {n}")));
        }
        let mut p = Self::identity(n);
        for k in i..=j {
            p.image[k as usize - 1] = i + j - k;
        }
        Ok(p)
    }

    pub fn apply(&self, x: u8) -> u8 {
        self.image.get(x as usize - 1).copied().unwrap_or(x)
    }

    pub fn apply_entry(&self, e: PrimedEntry) -> PrimedEntry {
        e.with_value(self.apply(e.value()))
    }

    pub fn n(&self) -> u8 {
        self.image.len() as u8
    }
}

fn check_index(t: &ShiftedTableau, i: u8, what: &str) -> Result<()> {
    if i < 1 || i >= t.n() {
        return Err(Error::Index(format!(
            "{what}_{i} needs 1 <= i < n = {}",
            t.n()
        )));
    }
    Ok(())
}

/// `t_i(T)`: switch the bands `T^i` and `T^{i+1}`, then swap the letters.
pub fn bk(t: &ShiftedTableau, i: u8) -> Result<ShiftedTableau> {
    bk_impl(t, i, false).map(|(t, _)| t)
}

/// [`bk`] with the intermediate switching states.
pub fn bk_traced(t: &ShiftedTableau, i: u8) -> Result<(ShiftedTableau, Vec<TraceStep>)> {
    bk_impl(t, i, true)
}

fn bk_impl(t: &ShiftedTableau, i: u8, traced: bool) -> Result<(ShiftedTableau, Vec<TraceStep>)> {
    check_index(t, i, "t")?;
    let (cells, trace) = switch_adjacent_bands(t, i, traced)?;
    let theta = LetterPermutation::theta(t.n(), i)?;
    let swapped = cells.into_iter().map(|(c, e)| (c, theta.apply_entry(e)));
    let raw = ShiftedTableau::from_cells_unchecked(t.shape().clone(), swapped, t.n())?;
    let out = raw.canonicalize();
    out.validate()
        .map_err(|e| Error::Integrity(format!("t_{i} of {t:?} gave {raw:?}: {e}")))?;
    Ok((out, trace))
}

/// `p_i = t_i t_{i-1} ⋯ t_1`, with `t_1` applied first.
pub fn promotion(t: &ShiftedTableau, i: u8) -> Result<ShiftedTableau> {
    check_index(t, i, "p")?;
    (1..=i).try_fold(t.clone(), |acc, k| bk(&acc, k))
}

/// `q_i = p_1 p_2 ⋯ p_i`, with `p_i` applied first.
pub fn q(t: &ShiftedTableau, i: u8) -> Result<ShiftedTableau> {
    check_index(t, i, "q")?;
    (1..=i)
        .rev()
        .try_fold(t.clone(), |acc, k| promotion(&acc, k))
}

/// `q_{i,j} = q_{j-1} q_{j-i} q_{j-1}`; `q_{i,i}` is the identity.
pub fn q_interval(t: &ShiftedTableau, i: u8, j: u8) -> Result<ShiftedTableau> {
    if i < 1 || i > j || j > t.n() {
        return Err(Error::Index(format!("q_{{{i},{j}}} with n = {}", t.n())));
    }
    if i == j {
        return Ok(t.clone());
    }
    if i == 1 {
        return q(t, j - 1);
    }
    let step = |x: &ShiftedTableau, k: u8| if k == 0 { Ok(x.clone()) } else { q(x, k) };
    let a = step(t, j - 1)?;
    let b = step(&a, j - i)?;
    step(&b, j - 1)
}
