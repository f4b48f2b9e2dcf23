//! Checking relations on tableau families and searching for counterexamples.
//!
//! Members of a family are checked in parallel, but the reported
//! counterexample is always the one with the smallest `(family, member,
//! instance)` position, so results do not depend on scheduling.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;

use crate::enumerate::{enumerate, TableauFamily};
use crate::error::{Error, Result};
use crate::jdt;
use crate::shape::ShiftedSkewShape;
use crate::switching;
use crate::tableau::ShiftedTableau;

use super::schema::{FamilyFilter, Instance, RelationSchema};
use super::word::{CactusRoute, Generator, Word};

/// What a counterexample violates, with enough data to re-run it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Two words that should act equally.
    Words {
        instance: Instance,
        route: CactusRoute,
    },
    /// `evac~(T)` should be Knuth equivalent to `c_n(T)`.
    EvacSkewKnuthComplement,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Words { instance, route } => write!(f, "{instance} (route {route})"),
            Violation::EvacSkewKnuthComplement => write!(f, "rect(evac~ T) = rect(c_n T)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub violation: Violation,
    pub tableau: ShiftedTableau,
    pub left: ShiftedTableau,
    pub right: ShiftedTableau,
}

impl Counterexample {
    /// Recomputes both sides; true when the same mismatch comes out again.
    pub fn replays(&self) -> Result<bool> {
        let (l, r) = match &self.violation {
            Violation::Words { instance, route } => (
                instance.lhs.eval(&self.tableau, *route)?,
                instance.rhs.eval(&self.tableau, *route)?,
            ),
            Violation::EvacSkewKnuthComplement => evac_skew_vs_complement(&self.tableau)?,
        };
        Ok(l == self.left && r == self.right && l != r)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
    /// `(member, instance)` evaluations performed.
    pub instances_checked: u64,
    /// Failing members; only counted past the first in exhaustive mode.
    pub failures: u64,
}

impl Verdict {
    fn merge(&mut self, other: Verdict) {
        self.instances_checked += other.instances_checked;
        self.failures += other.failures;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
        self.holds = self.counterexample.is_none();
    }

    fn holding() -> Verdict {
        Verdict {
            holds: true,
            ..Verdict::default()
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub route: CactusRoute,
    /// Keep going after the first failure and count all failing members.
    pub exhaustive: bool,
}

type Check<'a> = dyn Fn(usize, &ShiftedTableau) -> Result<Option<Counterexample>> + Sync + 'a;

/// Runs `check` on every member; returns the first failure in member order.
fn scan(
    family: &[ShiftedTableau],
    per_member: u64,
    exhaustive: bool,
    check: &Check,
) -> Result<Verdict> {
    let first = family
        .par_iter()
        .enumerate()
        .map(|(i, t)| check(i, t).map(|c| c.map(|c| (i, c))))
        .find_first(|r| !matches!(r, Ok(None)));
    match first {
        None => Ok(Verdict {
            holds: true,
            counterexample: None,
            instances_checked: per_member * family.len() as u64,
            failures: 0,
        }),
        Some(Err(e)) => Err(e),
        Some(Ok(None)) => unreachable!(),
        Some(Ok(Some((idx, cx)))) => {
            if !exhaustive {
                return Ok(Verdict {
                    holds: false,
                    counterexample: Some(cx),
                    instances_checked: per_member * (idx as u64 + 1),
                    failures: 1,
                });
            }
            let failures = family[idx..]
                .par_iter()
                .enumerate()
                .map(|(k, t)| check(idx + k, t).map(|c| u64::from(c.is_some())))
                .try_reduce(|| 0, |a, b| Ok(a + b))?;
            Ok(Verdict {
                holds: false,
                counterexample: Some(cx),
                instances_checked: per_member * family.len() as u64,
                failures,
            })
        }
    }
}

fn applies(schema: &RelationSchema, family: &TableauFamily) -> bool {
    schema.filter == FamilyFilter::All || family.shape().is_straight()
}

/// Image of every member under every generator, as member indices. All
/// generators keep the shape and the alphabet, so they permute the family.
fn action_table(
    family: &TableauFamily,
    gens: &BTreeSet<Generator>,
    route: CactusRoute,
) -> Result<BTreeMap<Generator, Vec<usize>>> {
    let index: HashMap<&ShiftedTableau, usize> =
        family.iter().enumerate().map(|(i, t)| (t, i)).collect();
    gens.iter()
        .map(|&g| {
            let images = family
                .members()
                .par_iter()
                .map(|t| {
                    let image = g.apply(t, route)?;
                    index.get(&image).copied().ok_or_else(|| {
                        Error::Integrity(format!("{g} takes {t} outside its family"))
                    })
                })
                .collect::<Result<Vec<usize>>>()?;
            Ok((g, images))
        })
        .collect()
}

/// Checks every instantiation of `schema` on every member of every family.
pub fn verify_relation(
    schema: &RelationSchema,
    families: &[TableauFamily],
    opts: VerifyOptions,
) -> Result<Verdict> {
    let mut verdict = Verdict::holding();
    for family in families.iter().filter(|f| applies(schema, f)) {
        let instances = schema.instances(family.n())?;
        if instances.is_empty() || family.is_empty() {
            continue;
        }
        let gens: BTreeSet<Generator> = instances
            .iter()
            .flat_map(|inst| inst.lhs.0.iter().chain(&inst.rhs.0))
            .copied()
            .collect();
        let table = action_table(family, &gens, opts.route)?;
        let eval = |w: &Word, i: usize| w.0.iter().rev().fold(i, |acc, g| table[g][acc]);
        let members = family.members();
        let check = |i: usize, t: &ShiftedTableau| -> Result<Option<Counterexample>> {
            for inst in &instances {
                let (l, r) = (eval(&inst.lhs, i), eval(&inst.rhs, i));
                if l != r {
                    return Ok(Some(Counterexample {
                        violation: Violation::Words {
                            instance: inst.clone(),
                            route: opts.route,
                        },
                        tableau: t.clone(),
                        left: members[l].clone(),
                        right: members[r].clone(),
                    }));
                }
            }
            Ok(None)
        };
        let v = scan(members, instances.len() as u64, opts.exhaustive, &check)?;
        verdict.merge(v);
        if !verdict.holds && !opts.exhaustive {
            break;
        }
    }
    Ok(verdict)
}

/// The defining relations of the cactus group and the identity expressing
/// `s_{i,j}` through the `s_{1,k}`, written with the symbol `s`.
pub fn cactus_schemata() -> Vec<RelationSchema> {
    [
        "s{i,j}^2 = e : i < j",
        "s{i,j} s{k,l} = s{k,l} s{i,j} : i < j < k < l",
        "s{i,j} s{k,l} = s{i+j-l,i+j-k} s{i,j} : i <= k < l <= j",
        "s{i,j} = s{1,j} s{1,j-i+1} s{1,j} : i < j",
    ]
    .iter()
    .map(|s| RelationSchema::parse(s).expect("built-in schema"))
    .collect()
}

/// All cactus relations for the given realization of `s_{i,j}`.
pub fn verify_cactus_action(route: CactusRoute, families: &[TableauFamily]) -> Result<Verdict> {
    let opts = VerifyOptions {
        route,
        exhaustive: false,
    };
    let mut verdict = Verdict::holding();
    for schema in cactus_schemata() {
        verdict.merge(verify_relation(&schema, families, opts)?);
        if !verdict.holds {
            break;
        }
    }
    Ok(verdict)
}

/// `(rect(evac~ T), rect(c_n T))`.
pub fn evac_skew_vs_complement(t: &ShiftedTableau) -> Result<(ShiftedTableau, ShiftedTableau)> {
    let e = switching::evac_skew(t)?;
    Ok((jdt::rectify(&e).0, jdt::rectify(&jdt::complement(t)).0))
}

/// Limits for a search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_cells: usize,
    /// Cap on `(member, instance)` evaluations.
    pub max_checks: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_cells: 9,
            max_checks: 50_000_000,
        }
    }
}

/// A set of shapes to search, always visited by cell count, then outer
/// shape, then inner shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Universe {
    /// Straight shapes inside the staircase of the given size.
    StraightIn(usize),
    /// All straight shapes.
    Straight,
    /// Non-straight skew shapes inside the staircase of the given size.
    SkewIn(usize),
    /// Straight shapes and skew shapes inside the staircase.
    All(usize),
    Shapes(Vec<ShiftedSkewShape>),
}

impl Universe {
    pub fn shapes(&self, max_cells: usize) -> Vec<ShiftedSkewShape> {
        let mut out = match self {
            Universe::StraightIn(k) => ShiftedSkewShape::all_in_staircase(*k, max_cells, false)
                .into_iter()
                .filter(ShiftedSkewShape::is_straight)
                .collect(),
            Universe::Straight => ShiftedSkewShape::all_straight(max_cells),
            Universe::SkewIn(k) => ShiftedSkewShape::all_in_staircase(*k, max_cells, true),
            Universe::All(k) => {
                let mut v = ShiftedSkewShape::all_straight(max_cells);
                v.extend(ShiftedSkewShape::all_in_staircase(*k, max_cells, true));
                v
            }
            Universe::Shapes(v) => v
                .iter()
                .filter(|s| s.num_cells() <= max_cells)
                .cloned()
                .collect(),
        };
        out.sort_by_key(ShiftedSkewShape::shape_order_key);
        out.dedup();
        out
    }

    pub fn families(&self, max_cells: usize, n: u8) -> Vec<TableauFamily> {
        self.shapes(max_cells)
            .par_iter()
            .map(|s| enumerate(s, n))
            .collect()
    }
}

/// Smallest counterexample to `schema` in the universe, by shape order then
/// family order. `holds` with no counterexample means the universe was
/// exhausted; running out of budget first is an error.
pub fn search_counterexample(
    schema: &RelationSchema,
    universe: &Universe,
    n: u8,
    budget: Budget,
    route: CactusRoute,
) -> Result<Verdict> {
    let instances = schema.instances(n)?;
    let per_member = instances.len() as u64;
    let opts = VerifyOptions {
        route,
        exhaustive: false,
    };
    let mut verdict = Verdict::holding();
    for shape in universe.shapes(budget.max_cells) {
        let family = enumerate(&shape, n);
        if !applies(schema, &family) {
            continue;
        }
        let cost = per_member * family.len() as u64;
        if verdict.instances_checked + cost > budget.max_checks {
            return Err(Error::BudgetExhausted(verdict.instances_checked));
        }
        verdict.merge(verify_relation(
            schema,
            std::slice::from_ref(&family),
            opts,
        )?);
        if !verdict.holds {
            break;
        }
    }
    Ok(verdict)
}

/// Smallest `T` with `rect(evac~ T) ≠ rect(c_n T)` in the universe.
pub fn search_evac_skew_not_knuth(universe: &Universe, n: u8, budget: Budget) -> Result<Verdict> {
    let mut verdict = Verdict::holding();
    for shape in universe.shapes(budget.max_cells) {
        let family = enumerate(&shape, n);
        let cost = family.len() as u64;
        if verdict.instances_checked + cost > budget.max_checks {
            return Err(Error::BudgetExhausted(verdict.instances_checked));
        }
        let check = |_: usize, t: &ShiftedTableau| -> Result<Option<Counterexample>> {
            let (left, right) = evac_skew_vs_complement(t)?;
            Ok((left != right).then(|| Counterexample {
                violation: Violation::EvacSkewKnuthComplement,
                tableau: t.clone(),
                left,
                right,
            }))
        };
        verdict.merge(scan(family.members(), 1, false, &check)?);
        if !verdict.holds {
            break;
        }
    }
    Ok(verdict)
}
