//! Relation schemata: `LHS = RHS : constraints`.
//!
//! Constraints are comma-separated chains of comparisons between index
//! expressions, e.g. `i+1 < j < k <= n, |a-b| > 1`. Variables range over
//! `1..=n`; `n` itself is the alphabet bound of the family under test.
//! Instantiations whose generators do not fit `n` are skipped.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

use super::word::{Expr, Parser, Word, WordTemplate};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    Ne,
}

impl Cmp {
    fn holds(self, a: i64, b: i64) -> bool {
        match self {
            Cmp::Lt => a < b,
            Cmp::Le => a <= b,
            Cmp::Gt => a > b,
            Cmp::Ge => a >= b,
            Cmp::Eq => a == b,
            Cmp::Ne => a != b,
        }
    }
}

/// `e0 op1 e1 op2 e2 …`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    first: Expr,
    rest: Vec<(Cmp, Expr)>,
}

impl Constraint {
    pub fn holds(&self, env: &BTreeMap<String, i64>) -> Result<bool> {
        let mut prev = self.first.eval(env)?;
        for (cmp, e) in &self.rest {
            let v = e.eval(env)?;
            if !cmp.holds(prev, v) {
                return Ok(false);
            }
            prev = v;
        }
        Ok(true)
    }

    fn vars(&self, out: &mut Vec<String>) {
        self.first.vars(out);
        for (_, e) in &self.rest {
            e.vars(out);
        }
    }
}

/// Which families a schema is meant for.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FamilyFilter {
    #[default]
    All,
    StraightOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSchema {
    pub lhs: WordTemplate,
    pub rhs: WordTemplate,
    pub constraints: Vec<Constraint>,
    pub filter: FamilyFilter,
    text: String,
}

/// One instantiation: variable values and the two concrete words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub bindings: Vec<(String, i64)>,
    pub lhs: Word,
    pub rhs: Word,
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)?;
        if !self.bindings.is_empty() {
            let b: Vec<String> = self
                .bindings
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            write!(f, " [{}]", b.join(", "))?;
        }
        Ok(())
    }
}

impl RelationSchema {
    pub fn parse(text: &str) -> Result<RelationSchema> {
        let (words, cons) = split_constraints(text);
        let (l, r) = words
            .split_once('=')
            .ok_or_else(|| Error::Schema(format!("missing '=' in {text:?}")))?;
        let lhs = WordTemplate::parse(l)?;
        let rhs = WordTemplate::parse(r)?;
        let constraints = cons
            .split(',')
            .map(str::trim)
            .filter(|c| !c.is_empty())
            .map(parse_constraint)
            .collect::<Result<Vec<_>>>()?;
        let schema = RelationSchema {
            lhs,
            rhs,
            constraints,
            filter: FamilyFilter::All,
            text: text.trim().to_string(),
        };
        let mut cvars = Vec::new();
        for c in &schema.constraints {
            c.vars(&mut cvars);
        }
        let wvars = schema.vars();
        if let Some(v) = cvars.iter().find(|v| *v != "n" && !wvars.contains(v)) {
            return Err(Error::Schema(format!(
                "constraint variable {v} not used in the words"
            )));
        }
        Ok(schema)
    }

    pub fn straight_only(mut self) -> Self {
        self.filter = FamilyFilter::StraightOnly;
        self
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    /// Free variables of both words, `n` excluded, in order of appearance.
    pub fn vars(&self) -> Vec<String> {
        let mut out = self.lhs.vars();
        for v in self.rhs.vars() {
            if !out.contains(&v) {
                out.push(v);
            }
        }
        out.retain(|v| v != "n");
        out
    }

    /// All instantiations for alphabet bound `n`, in lexicographic order of the
    /// variable values.
    pub fn instances(&self, n: u8) -> Result<Vec<Instance>> {
        let vars = self.vars();
        let mut out = Vec::new();
        let mut values = vec![1i64; vars.len()];
        if n == 0 {
            return Ok(out);
        }
        loop {
            let mut env: BTreeMap<String, i64> =
                vars.iter().cloned().zip(values.iter().copied()).collect();
            env.insert("n".into(), n as i64);
            let mut ok = true;
            for c in &self.constraints {
                if !c.holds(&env)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                let words = self
                    .lhs
                    .instantiate(&env)
                    .and_then(|l| self.rhs.instantiate(&env).map(|r| (l, r)));
                match words {
                    Ok((lhs, rhs)) if lhs.fits(n) && rhs.fits(n) => out.push(Instance {
                        bindings: vars.iter().cloned().zip(values.iter().copied()).collect(),
                        lhs,
                        rhs,
                    }),
                    Ok(_) | Err(Error::Index(_)) => {}
                    Err(e) => return Err(e),
                }
            }
            // odometer, last variable fastest
            let mut pos = vars.len();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                if values[pos] < n as i64 {
                    values[pos] += 1;
                    break;
                }
                values[pos] = 1;
            }
        }
    }
}

impl fmt::Display for RelationSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl std::str::FromStr for RelationSchema {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RelationSchema::parse(s)
    }
}

/// Splits at the first `:` that is not part of a `q:1,2` index list.
fn split_constraints(text: &str) -> (&str, &str) {
    let bytes = text.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if b == b':' && !bytes.get(i + 1).is_some_and(u8::is_ascii_digit) {
            return (&text[..i], &text[i + 1..]);
        }
        if b == b':' && i > 0 && bytes[i - 1] == b' ' {
            return (&text[..i], &text[i + 1..]);
        }
    }
    (text, "")
}

fn parse_constraint(text: &str) -> Result<Constraint> {
    let mut p = Parser::new(text);
    let first = p.expr()?;
    let mut rest = Vec::new();
    loop {
        let cmp = if p.eat("<=") || p.eat("≤") {
            Cmp::Le
        } else if p.eat(">=") || p.eat("≥") {
            Cmp::Ge
        } else if p.eat("!=") || p.eat("≠") {
            Cmp::Ne
        } else if p.eat("<") {
            Cmp::Lt
        } else if p.eat(">") {
            Cmp::Gt
        } else if p.eat("==") || p.eat("=") {
            Cmp::Eq
        } else {
            break;
        };
        rest.push((cmp, p.expr()?));
    }
    p.skip_ws();
    if p.peek().is_some() || rest.is_empty() {
        return Err(p.error("expected a comparison chain"));
    }
    Ok(Constraint { first, rest })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commuting_instances() {
        let s = RelationSchema::parse("t{i} t{j} = t{j} t{i} : |i-j| > 1").unwrap();
        let inst = s.instances(4).unwrap();
        let pairs: Vec<String> = inst.iter().map(|i| i.to_string()).collect();
        assert_eq!(
            pairs,
            vec!["t1 t3 = t3 t1 [i=1, j=3]", "t3 t1 = t1 t3 [i=3, j=1]"]
        );
    }

    #[test]
    fn out_of_range_instances_skipped() {
        let s = RelationSchema::parse("t{i}^2 = e").unwrap();
        assert_eq!(s.instances(4).unwrap().len(), 3);
        assert_eq!(s.instances(1).unwrap().len(), 0);
    }

    #[test]
    fn chains_and_n() {
        let s = RelationSchema::parse("(t{i} q{j,k})^2 = e : i+1 < j < k <= n").unwrap();
        let inst = s.instances(4).unwrap();
        assert_eq!(inst.len(), 1);
        assert_eq!(inst[0].lhs.to_string(), "t1 q{3,4} t1 q{3,4}");
        assert_eq!(s.instances(5).unwrap().len(), 4);
    }

    #[test]
    fn colon_indices_survive() {
        let s = RelationSchema::parse("q:2,4 = q:2,4").unwrap();
        assert!(s.constraints.is_empty());
        assert_eq!(s.instances(4).unwrap().len(), 1);
        let s = RelationSchema::parse("q:1,3 q{i,j} = e : i < j").unwrap();
        assert_eq!(s.constraints.len(), 1);
    }

    #[test]
    fn schema_errors() {
        assert!(RelationSchema::parse("t1 t2").is_err());
        assert!(RelationSchema::parse("t{i} = e : i <").is_err());
        assert!(RelationSchema::parse("t{i} = e : k < 2").is_err());
        assert!(RelationSchema::parse("t{i} = e : i").is_err());
    }
}
