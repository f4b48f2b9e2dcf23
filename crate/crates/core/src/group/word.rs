//! Operator words: parsing, instantiation and evaluation.
//!
//! A word is a sequence of symbols and parenthesized groups with optional
//! powers, e.g. `(t1 t2)^6`, `q{j,k} t{i}`, `eta:1,3 sigma2`. The rightmost
//! symbol acts first. Indices are written directly (`t1`, `evac3`), after a
//! colon (`q:2,4`), after an underscore (`t_1`) or in braces, where they may
//! be expressions in variables (`s{i+j-l,i+j-k}`). `e` is the identity.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::bk;
use crate::error::{Error, Result};
use crate::jdt;
use crate::switching;
use crate::tableau::ShiftedTableau;

/// How the cactus symbol `s{i,j}` is realized.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CactusRoute {
    /// `s_{i,j} ↦ η_{i,j}`, any shape.
    #[default]
    Eta,
    /// `s_{i,j} ↦ q_{i,j}`.
    Q,
    /// `s_{i,j} ↦ evac_j evac_{j-i+1} evac_j`, straight shapes only.
    Evac,
}

impl std::str::FromStr for CactusRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eta" => Ok(CactusRoute::Eta),
            "q" => Ok(CactusRoute::Q),
            "evac" => Ok(CactusRoute::Evac),
            _ => Err(Error::Schema(format!("unknown route {s:?} (eta, q, evac)"))),
        }
    }
}

impl fmt::Display for CactusRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CactusRoute::Eta => "eta",
            CactusRoute::Q => "q",
            CactusRoute::Evac => "evac",
        })
    }
}

/// A generator with concrete indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Identity,
    T(u8),
    P(u8),
    Q(u8),
    QInterval(u8, u8),
    /// `evac_k`, straight shapes only.
    Evac(u8),
    /// `evac~_k`.
    EvacSkew(u8),
    /// `evac~_{i,j}`.
    EvacSkewInterval(u8, u8),
    Eta(u8, u8),
    Sigma(u8),
    /// The cactus generator `s_{i,j}`, realized according to a [`CactusRoute`].
    Cactus(u8, u8),
}

impl Generator {
    /// Whether the indices make sense for alphabet bound `n`.
    pub fn fits(&self, n: u8) -> bool {
        use Generator::*;
        match *self {
            Identity => true,
            T(i) | P(i) | Q(i) | Sigma(i) => 1 <= i && i < n,
            Evac(k) | EvacSkew(k) => 1 <= k && k <= n,
            QInterval(i, j) | EvacSkewInterval(i, j) | Eta(i, j) | Cactus(i, j) => {
                1 <= i && i < j && j <= n
            }
        }
    }

    pub fn apply(&self, t: &ShiftedTableau, route: CactusRoute) -> Result<ShiftedTableau> {
        use Generator::*;
        if !self.fits(t.n()) {
            return Err(Error::Index(format!("{self} with n = {}", t.n())));
        }
        match *self {
            Identity => Ok(t.clone()),
            T(i) => bk::bk(t, i),
            P(i) => bk::promotion(t, i),
            Q(i) => bk::q(t, i),
            QInterval(i, j) => bk::q_interval(t, i, j),
            Evac(k) => switching::evac_k_switch(t, k),
            EvacSkew(k) => switching::evac_k_skew(t, k),
            EvacSkewInterval(i, j) => switching::evac_interval_skew(t, i, j),
            Eta(i, j) => jdt::eta(t, i, j),
            Sigma(i) => jdt::sigma(t, i),
            Cactus(i, j) => match route {
                CactusRoute::Eta => jdt::eta(t, i, j),
                CactusRoute::Q => bk::q_interval(t, i, j),
                CactusRoute::Evac => {
                    let a = switching::evac_k_switch(t, j)?;
                    let b = switching::evac_k_switch(&a, j - i + 1)?;
                    switching::evac_k_switch(&b, j)
                }
            },
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Generator::*;
        match *self {
            Identity => write!(f, "e"),
            T(i) => write!(f, "t{i}"),
            P(i) => write!(f, "p{i}"),
            Q(i) => write!(f, "q{i}"),
            QInterval(i, j) => write!(f, "q{{{i},{j}}}"),
            Evac(k) => write!(f, "evac{k}"),
            EvacSkew(k) => write!(f, "evac~{k}"),
            EvacSkewInterval(i, j) => write!(f, "evac~{{{i},{j}}}"),
            Eta(i, j) => write!(f, "eta{{{i},{j}}}"),
            Sigma(i) => write!(f, "sigma{i}"),
            Cactus(i, j) => write!(f, "s{{{i},{j}}}"),
        }
    }
}

/// A concrete word, stored in written order (the last generator acts first).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn parse(text: &str) -> Result<Word> {
        WordTemplate::parse(text)?.instantiate(&BTreeMap::new())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn fits(&self, n: u8) -> bool {
        self.0.iter().all(|g| g.fits(n))
    }

    pub fn eval(&self, t: &ShiftedTableau, route: CactusRoute) -> Result<ShiftedTableau> {
        self.0
            .iter()
            .rev()
            .try_fold(t.clone(), |acc, g| g.apply(&acc, route))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `rightmost-first` evaluation of a word given as text.
pub fn eval_word(word: &str, t: &ShiftedTableau, route: CactusRoute) -> Result<ShiftedTableau> {
    Word::parse(word)?.eval(t, route)
}

/// Integer index expressions over named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Lit(i64),
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Abs(Box<Expr>),
}

impl Expr {
    pub fn eval(&self, env: &BTreeMap<String, i64>) -> Result<i64> {
        Ok(match self {
            Expr::Lit(v) => *v,
            Expr::Var(name) => *env
                .get(name)
                .ok_or_else(|| Error::Schema(format!("unbound variable {name}")))?,
            Expr::Add(a, b) => a.eval(env)? + b.eval(env)?,
            Expr::Sub(a, b) => a.eval(env)? - b.eval(env)?,
            Expr::Abs(a) => a.eval(env)?.abs(),
        })
    }

    pub fn vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Lit(_) => {}
            Expr::Var(name) => {
                if !out.contains(name) {
                    out.push(name.clone());
                }
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.vars(out);
                b.vars(out);
            }
            Expr::Abs(a) => a.vars(out),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Identity,
    T,
    P,
    Q,
    Evac,
    EvacSkew,
    Eta,
    Sigma,
    Cactus,
}

// longest names first so that `eta` is not read as `e` followed by `ta`
const NAMES: &[(&str, Kind)] = &[
    ("evac~", Kind::EvacSkew),
    ("evac", Kind::Evac),
    ("sigma", Kind::Sigma),
    ("eta", Kind::Eta),
    ("t", Kind::T),
    ("p", Kind::P),
    ("q", Kind::Q),
    ("s", Kind::Cactus),
    ("e", Kind::Identity),
];

#[derive(Clone, Debug, PartialEq, Eq)]
enum Node {
    Symbol(Kind, Vec<Expr>),
    Group(Vec<Node>, u32),
}

/// A word whose indices may mention variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordTemplate {
    nodes: Vec<Node>,
    text: String,
}

impl WordTemplate {
    pub fn parse(text: &str) -> Result<WordTemplate> {
        let mut p = Parser::new(text);
        let nodes = p.word()?;
        p.skip_ws();
        if let Some(c) = p.peek() {
            return Err(p.error(&format!("unexpected {c:?}")));
        }
        Ok(WordTemplate {
            nodes,
            text: text.trim().to_string(),
        })
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    /// Variables in order of first appearance.
    pub fn vars(&self) -> Vec<String> {
        fn walk(nodes: &[Node], out: &mut Vec<String>) {
            for node in nodes {
                match node {
                    Node::Symbol(_, idx) => idx.iter().for_each(|e| e.vars(out)),
                    Node::Group(inner, _) => walk(inner, out),
                }
            }
        }
        let mut out = Vec::new();
        walk(&self.nodes, &mut out);
        out
    }

    pub fn instantiate(&self, env: &BTreeMap<String, i64>) -> Result<Word> {
        let mut out = Vec::new();
        expand(&self.nodes, env, &mut out)?;
        Ok(Word(out))
    }
}

fn to_index(v: i64) -> Result<u8> {
    u8::try_from(v).map_err(|_| Error::Index(format!("index {v} out of range")))
}

fn expand(nodes: &[Node], env: &BTreeMap<String, i64>, out: &mut Vec<Generator>) -> Result<()> {
    for node in nodes {
        match node {
            Node::Symbol(kind, idx) => {
                let v: Vec<u8> = idx
                    .iter()
                    .map(|e| e.eval(env).and_then(to_index))
                    .collect::<Result<_>>()?;
                let g = match (kind, v.as_slice()) {
                    (Kind::Identity, []) => Generator::Identity,
                    (Kind::T, [i]) => Generator::T(*i),
                    (Kind::P, [i]) => Generator::P(*i),
                    (Kind::Q, [i]) => Generator::Q(*i),
                    (Kind::Q, [i, j]) => Generator::QInterval(*i, *j),
                    (Kind::Evac, [k]) => Generator::Evac(*k),
                    (Kind::EvacSkew, [k]) => Generator::EvacSkew(*k),
                    (Kind::EvacSkew, [i, j]) => Generator::EvacSkewInterval(*i, *j),
                    (Kind::Eta, [i, j]) => Generator::Eta(*i, *j),
                    (Kind::Sigma, [i]) => Generator::Sigma(*i),
                    (Kind::Cactus, [i, j]) => Generator::Cactus(*i, *j),
                    _ => unreachable!("arity checked by the parser"),
                };
                if g != Generator::Identity {
                    out.push(g);
                }
            }
            Node::Group(inner, power) => {
                let mut once = Vec::new();
                expand(inner, env, &mut once)?;
                for _ in 0..*power {
                    out.extend_from_slice(&once);
                }
            }
        }
    }
    Ok(())
}

pub(crate) struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    pub(crate) fn error(&self, msg: &str) -> Error {
        Error::Schema(format!(
            "{msg} at column {} of {:?}",
            self.pos + 1,
            self.src
        ))
    }

    pub(crate) fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    pub(crate) fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> Result<Vec<Node>> {
        let mut nodes = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(')') | Some('=') | Some(':') => return Ok(nodes),
                _ => {}
            }
            let node = if self.eat("(") {
                let inner = self.word()?;
                if !self.eat(")") {
                    return Err(self.error("expected ')'"));
                }
                Node::Group(inner, 1)
            } else {
                self.symbol()?
            };
            let node = if self.eat("^") {
                let power = self.number()?;
                let power = u32::try_from(power).map_err(|_| self.error("bad power"))?;
                Node::Group(vec![node], power)
            } else {
                node
            };
            nodes.push(node);
        }
    }

    fn symbol(&mut self) -> Result<Node> {
        let rest = self.rest();
        let (name, kind) = NAMES
            .iter()
            .find(|(name, _)| rest.starts_with(name))
            .ok_or_else(|| self.error("expected a generator"))?;
        self.pos += name.len();
        let idx = self.indices()?;
        let arity_ok = match kind {
            Kind::Identity => idx.is_empty(),
            Kind::T | Kind::P | Kind::Sigma | Kind::Evac => idx.len() == 1,
            Kind::Q | Kind::EvacSkew => idx.len() == 1 || idx.len() == 2,
            Kind::Eta | Kind::Cactus => idx.len() == 2,
        };
        if !arity_ok {
            return Err(self.error(&format!("wrong number of indices for {name}")));
        }
        Ok(Node::Symbol(*kind, idx))
    }

    fn indices(&mut self) -> Result<Vec<Expr>> {
        // no whitespace is allowed between a name and its indices
        if self.rest().starts_with('_') {
            self.bump();
        }
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(vec![Expr::Lit(self.number()?)]),
            Some(':') if self.rest()[1..].starts_with(|c: char| c.is_ascii_digit()) => {
                self.bump();
                let mut out = vec![Expr::Lit(self.number()?)];
                while self.rest().starts_with(',') {
                    self.bump();
                    out.push(Expr::Lit(self.number()?));
                }
                Ok(out)
            }
            Some('{') => {
                self.bump();
                let mut out = vec![self.expr()?];
                while self.eat(",") {
                    out.push(self.expr()?);
                }
                if !self.eat("}") {
                    return Err(self.error("expected '}'"));
                }
                Ok(out)
            }
            _ => Ok(Vec::new()),
        }
    }

    pub(crate) fn number(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error("expected a number"))
    }

    pub(crate) fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat("+") {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat("-") {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Expr::Lit(self.number()?)),
            Some('|') => {
                self.bump();
                let inner = self.expr()?;
                if !self.eat("|") {
                    return Err(self.error("expected '|'"));
                }
                Ok(Expr::Abs(Box::new(inner)))
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if !self.eat(")") {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                    self.bump();
                }
                Ok(Expr::Var(self.src[start..self.pos].to_string()))
            }
            _ => Err(self.error("expected an index expression")),
        }
    }
}
