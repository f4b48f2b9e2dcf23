//! Shifted semistandard tableaux: switching, shifted Bender–Knuth moves,
//! evacuation and reversal, and a checker for relations among the operators.
//!
//! Operator words compose right to left: in `t1 t2` the move `t2` acts first.

pub mod bk;
pub mod entry;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod group;
pub mod jdt;
pub mod shape;
pub mod standard;
pub mod switching;
pub mod tableau;

pub use entry::PrimedEntry;
pub use enumerate::{count, enumerate, TableauFamily};
pub use error::{Error, ParseError, Result, Rule};
pub use format::{parse_tableau, parse_tableau_with_n, render, render_compact, to_json};
pub use shape::{Cell, ShiftedSkewShape, StrictPartition};
pub use tableau::{ShiftedTableau, Weight};
