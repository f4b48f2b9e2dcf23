//! Text and JSON forms of tableaux.
//!
//! Text: one row per line (or rows separated by `/`), tokens separated by
//! spaces, `.` for cells of the inner shape. The shift of row `r` is implied by
//! the row index. For convenience the parser also accepts rows padded with
//! `r - 1` leading dots for the shift, when that is the only reading that yields
//! a valid shape.

use serde::{Deserialize, Serialize};

use crate::entry::PrimedEntry;
use crate::error::{Error, ParseError, Result};
use crate::shape::{ShiftedSkewShape, StrictPartition};
use crate::tableau::ShiftedTableau;

/// Parses the text form, taking the largest letter present as the alphabet bound.
pub fn parse_tableau(text: &str) -> Result<ShiftedTableau> {
    parse_tableau_with_n(text, None)
}

pub fn parse_tableau_with_n(text: &str, n: Option<u8>) -> Result<ShiftedTableau> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let t = from_json(trimmed)?;
        return match n {
            Some(n) => t.with_n(n),
            None => Ok(t),
        };
    }
    let lines: Vec<&str> = text
        .split(['\n', '/'])
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();

    let mut dots = Vec::with_capacity(lines.len());
    let mut rows = Vec::with_capacity(lines.len());
    for line in &lines {
        let mut row = Vec::new();
        let mut leading = 0;
        for tok in line.split_whitespace() {
            if tok == "." {
                if !row.is_empty() {
                    return Err(ParseError::Malformed(format!(
                        "inner cell after a filled cell in row {line:?}"
                    ))
                    .into());
                }
                leading += 1;
            } else {
                row.push(tok.parse::<PrimedEntry>()?);
            }
        }
        dots.push(leading);
        rows.push(row);
    }

    let shape = infer_shape(&dots, &rows)?;
    // Rows beyond the outer shape can only be empty; drop them.
    rows.truncate(shape.num_rows());
    let max = rows.iter().flatten().map(|e| e.value()).max().unwrap_or(1);
    let n = n.unwrap_or(max).max(1);
    ShiftedTableau::from_rows(shape, rows, n)
}

fn shape_from_inner(inner: &[usize], rows: &[Vec<PrimedEntry>]) -> Result<ShiftedSkewShape> {
    let outer: Vec<usize> = inner.iter().zip(rows).map(|(i, r)| i + r.len()).collect();
    let outer = StrictPartition::from_padded(outer)?;
    let inner = StrictPartition::from_padded(inner.to_vec())?;
    ShiftedSkewShape::new(outer, inner)
}

fn infer_shape(dots: &[usize], rows: &[Vec<PrimedEntry>]) -> Result<ShiftedSkewShape> {
    let direct = shape_from_inner(dots, rows);
    if direct.is_ok() {
        return direct;
    }
    let padded: Option<Vec<usize>> = dots
        .iter()
        .enumerate()
        .map(|(r, &d)| d.checked_sub(r))
        .collect();
    if let Some(inner) = padded {
        if let Ok(shape) = shape_from_inner(&inner, rows) {
            return Ok(shape);
        }
    }
    direct
}

/// One line per row, `.` for inner cells.
pub fn render(t: &ShiftedTableau) -> String {
    render_rows(t).join("\n")
}

/// Rows joined by ` / ` on a single line.
pub fn render_compact(t: &ShiftedTableau) -> String {
    render_rows(t).join(" / ")
}

fn render_rows(t: &ShiftedTableau) -> Vec<String> {
    let shape = t.shape();
    (1..=shape.num_rows())
        .map(|r| {
            let mut toks: Vec<String> = vec![".".to_string(); shape.inner().part(r)];
            toks.extend(t.rows()[r - 1].iter().map(|e| e.to_string()));
            toks.join(" ")
        })
        .collect()
}

/// Serialized form: `{"outer": [..], "inner": [..], "rows": [["1","2'"], ..], "n": 4}`.
/// `rows` lists only the skew cells of each row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub outer: Vec<usize>,
    pub inner: Vec<usize>,
    pub rows: Vec<Vec<String>>,
    pub n: u8,
}

impl From<&ShiftedTableau> for TableauJson {
    fn from(t: &ShiftedTableau) -> Self {
        TableauJson {
            outer: t.shape().outer().parts().to_vec(),
            inner: t.shape().inner().parts().to_vec(),
            rows: t
                .rows()
                .iter()
                .map(|row| row.iter().map(|e| e.to_string()).collect())
                .collect(),
            n: t.n(),
        }
    }
}

impl TryFrom<TableauJson> for ShiftedTableau {
    type Error = Error;

    fn try_from(j: TableauJson) -> Result<Self> {
        let shape = ShiftedSkewShape::from_parts(&j.outer, &j.inner)?;
        let rows = j
            .rows
            .iter()
            .map(|row| row.iter().map(|s| s.parse::<PrimedEntry>()).collect())
            .collect::<std::result::Result<Vec<Vec<_>>, _>>()?;
        ShiftedTableau::from_rows(shape, rows, j.n)
    }
}

pub fn to_json(t: &ShiftedTableau) -> String {
    serde_json::to_string(&TableauJson::from(t)).expect("tableau json")
}

pub fn from_json(text: &str) -> Result<ShiftedTableau> {
    let j: TableauJson = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    ShiftedTableau::try_from(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Rule;
    use crate::shape::Cell;

    #[test]
    fn parses_shift_padded_rows() {
        let a = parse_tableau("1 1 2' 2 / . 2 3' / . . 3").unwrap();
        let b = parse_tableau("1 1 2' 2\n2 3'\n3").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.shape().outer().parts(), &[4, 2, 1]);
        assert!(a.is_straight());
        assert_eq!(a.n(), 3);
    }

    #[test]
    fn dots_are_inner_cells_when_consistent() {
        let t = parse_tableau(". 1 2\n2").unwrap();
        assert_eq!(t.shape().outer().parts(), &[3, 1]);
        assert_eq!(t.shape().inner().parts(), &[1]);
        assert_eq!(render(&t), ". 1 2\n2");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_tableau("1 x"),
            Err(Error::Parse(ParseError::BadToken(_)))
        ));
        assert!(matches!(parse_tableau("1\n2 3"), Err(Error::NotStrict(_))));
        assert_eq!(
            parse_tableau("1 2'").unwrap_err(),
            Error::Invalid {
                cell: Cell::new(1, 2),
                rule: Rule::NonCanonical
            }
        );
        assert!(matches!(
            parse_tableau("2 1"),
            Err(Error::Invalid {
                rule: Rule::RowOrder,
                ..
            })
        ));
        assert!(parse_tableau("1 . 2").is_err());
    }

    #[test]
    fn empty_text_is_empty_tableau() {
        let t = parse_tableau("").unwrap();
        assert!(t.is_empty());
        assert!(t.shape().outer().is_empty());
        assert_eq!(render(&t), "");
    }

    #[test]
    fn json_roundtrip() {
        let t = parse_tableau_with_n(". . . 1 1 2'\n. 2 2\n3", Some(4)).unwrap();
        let j = to_json(&t);
        assert_eq!(
            j,
            r#"{"outer":[6,3,1],"inner":[3,1],"rows":[["1","1","2'"],["2","2"],["3"]],"n":4}"#
        );
        assert_eq!(from_json(&j).unwrap(), t);
        assert_eq!(parse_tableau(&j).unwrap(), t);
    }
}
