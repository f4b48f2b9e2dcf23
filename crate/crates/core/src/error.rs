use std::fmt;

use thiserror::Error;

use crate::shape::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed cell token {0:?}")]
    BadToken(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("invalid JSON tableau: {0}")]
    Json(String),
}

/// The semistandard rule a filling breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    RowOrder,
    ColumnOrder,
    PrimedTwiceInRow,
    UnprimedTwiceInColumn,
    NonCanonical,
    LetterOutOfRange,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::RowOrder => "rows must weakly increase",
            Rule::ColumnOrder => "columns must weakly increase",
            Rule::PrimedTwiceInRow => "at most one k' per row",
            Rule::UnprimedTwiceInColumn => "at most one k per column",
            Rule::NonCanonical => "first occurrence of each letter must be unprimed",
            Rule::LetterOutOfRange => "letter exceeds the alphabet bound",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("parts {0:?} are not a strict partition")]
    NotStrict(Vec<usize>),
    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    NotContained {
        outer: Vec<usize>,
        inner: Vec<usize>,
    },
    #[error("filling does not match shape: {0}")]
    FillingMismatch(String),
    #[error("invalid tableau at {cell}: {rule}")]
    Invalid { cell: Cell, rule: Rule },
    #[error("index out of range: {0}")]
    Index(String),
    #[error("operation requires a straight-shaped tableau")]
    NotStraight,
    #[error("{0} is not an inner corner")]
    NotInnerCorner(Cell),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("invalid perforated pair: {0}")]
    InvalidPair(String),
    #[error("shapes do not fit together: {0}")]
    ShapeMismatch(String),
    #[error("algorithm integrity failure: {0}")]
    Integrity(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("search budget exhausted after {0} instances without a decision")]
    BudgetExhausted(u64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
