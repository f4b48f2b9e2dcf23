//! Bundled suites of relations and non-relations.

use crate::error::{Error, Result};
use crate::shape::ShiftedSkewShape;

use super::schema::RelationSchema;
use super::verify::{
    search_counterexample, search_evac_skew_not_knuth, verify_relation, Budget, Universe, Verdict,
    VerifyOptions,
};
use super::word::CactusRoute;

pub const PRESETS: &[&str] = &[
    "sbk-core",
    "cactus-q",
    "cactus-eta",
    "evac-agreement",
    "non-relations",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    /// Must hold on every member of the universe.
    Holds,
    /// A counterexample must turn up within the budget.
    Fails,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Relation(RelationSchema, CactusRoute),
    EvacSkewNotKnuth,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresetCheck {
    pub name: String,
    pub kind: CheckKind,
    pub universe: Universe,
    pub max_cells: usize,
    pub n: u8,
    pub expect: Expect,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub expect: Expect,
    pub verdict: Verdict,
    /// Whether the outcome matches `expect`.
    pub passed: bool,
}

/// Straight shapes inside the staircase of size `n` together with the skew
/// shapes of at most five cells inside the staircase of size five.
pub fn standard_universe(n: u8) -> Universe {
    let mut shapes = Universe::StraightIn(n as usize).shapes(usize::MAX);
    shapes.extend(Universe::SkewIn(5).shapes(5));
    Universe::Shapes(shapes)
}

fn max_cells_of(u: &Universe) -> usize {
    match u {
        Universe::Shapes(v) => v.iter().map(ShiftedSkewShape::num_cells).max().unwrap_or(0),
        _ => usize::MAX,
    }
}

fn relation(
    name: &str,
    schema: &str,
    route: CactusRoute,
    universe: &Universe,
    max_cells: usize,
    n: u8,
    expect: Expect,
) -> PresetCheck {
    PresetCheck {
        name: name.to_string(),
        kind: CheckKind::Relation(
            RelationSchema::parse(schema).expect("built-in schema"),
            route,
        ),
        universe: universe.clone(),
        max_cells,
        n,
        expect,
    }
}

fn cactus_suite(
    route: CactusRoute,
    universe: &Universe,
    n: u8,
    extra: &[(&str, &str)],
) -> Vec<PresetCheck> {
    let cells = max_cells_of(universe);
    let mut out: Vec<PresetCheck> = [
        ("involution", "s{i,j}^2 = e : i < j"),
        (
            "disjoint intervals commute",
            "s{i,j} s{k,l} = s{k,l} s{i,j} : i < j < k < l",
        ),
        (
            "nested intervals",
            "s{i,j} s{k,l} = s{i+j-l,i+j-k} s{i,j} : i <= k < l <= j",
        ),
        (
            "through s{1,k}",
            "s{i,j} = s{1,j} s{1,j-i+1} s{1,j} : i < j",
        ),
    ]
    .iter()
    .chain(extra)
    .map(|(name, s)| relation(name, s, route, universe, cells, n, Expect::Holds))
    .collect();
    out.iter_mut()
        .for_each(|c| c.name = format!("{route}: {}", c.name));
    out
}

/// The checks making up a preset, for alphabet bound `n`.
pub fn preset(name: &str, n: u8) -> Result<Vec<PresetCheck>> {
    let route = CactusRoute::Eta;
    let std_u = standard_universe(n);
    let std_cells = max_cells_of(&std_u);
    let straight = Universe::StraightIn(n as usize);
    let straight_cells = n as usize * (n as usize + 1) / 2;
    let holds = |name: &str, schema: &str, u: &Universe, cells: usize| {
        relation(name, schema, route, u, cells, n, Expect::Holds)
    };
    Ok(match name {
        "sbk-core" => vec![
            holds("t_i involution", "t{i}^2 = e", &std_u, std_cells),
            holds(
                "distant t commute",
                "t{i} t{j} = t{j} t{i} : |i-j| > 1",
                &std_u,
                std_cells,
            ),
            // fails on skew shapes, see the non-relations preset
            holds(
                "(t_i q_jk)^2 (straight)",
                "(t{i} q{j,k})^2 = e : i+1 < j < k <= n",
                &straight,
                straight_cells,
            ),
            holds("t1 = q1", "t1 = q1", &std_u, std_cells),
            holds("t2 = q1 q2 q1", "t2 = q1 q2 q1", &std_u, std_cells),
            holds(
                "t_i = q_i-1 q_i q_i-1 q_i-2",
                "t{i} = q{i-1} q{i} q{i-1} q{i-2} : i > 2",
                &std_u,
                std_cells,
            ),
        ],
        "cactus-q" => cactus_suite(CactusRoute::Q, &straight, n, &[]),
        "cactus-eta" => cactus_suite(
            CactusRoute::Eta,
            &std_u,
            n,
            &[(
                "eta through eta_1k",
                "eta{i,j} = eta{1,j} eta{1,j-i+1} eta{1,j} : i < j",
            )],
        ),
        "evac-agreement" => {
            let mut v = vec![
                holds(
                    "evac_k = eta_1k",
                    "evac{k} = eta{1,k} : k >= 2",
                    &straight,
                    straight_cells,
                ),
                holds(
                    "q_k = evac_k+1",
                    "q{k} = evac{k+1}",
                    &straight,
                    straight_cells,
                ),
                holds(
                    "eta_ij = q_ij",
                    "eta{i,j} = q{i,j} : i < j",
                    &straight,
                    straight_cells,
                ),
                holds(
                    "eta_ij = evac_j evac_j-i+1 evac_j",
                    "eta{i,j} = evac{j} evac{j-i+1} evac{j} : i < j",
                    &straight,
                    straight_cells,
                ),
            ];
            let skew = Universe::Shapes(vec![ShiftedSkewShape::from_parts(&[3, 1], &[1])?]);
            for i in 1..n {
                let ps: Vec<String> = (1..=i).map(|k| format!("p{k}")).collect();
                let ps = ps.join(" ");
                v.push(holds(
                    &format!("evac_{} = {ps}", i + 1),
                    &format!("evac{{{}}} = {ps}", i + 1),
                    &straight,
                    straight_cells,
                ));
                v.push(holds(
                    &format!("evac~_{} = {ps} (skew)", i + 1),
                    &format!("evac~{{{}}} = {ps}", i + 1),
                    &skew,
                    4,
                ));
            }
            v
        }
        "non-relations" => {
            let fails = |name: &str, schema: &str, u: Universe, cells: usize| {
                relation(name, schema, route, &u, cells, n, Expect::Fails)
            };
            vec![
                fails("(t1 t2)^6", "(t1 t2)^6 = e", Universe::Straight, 9),
                fails(
                    "(sigma1 sigma2)^3",
                    "(sigma1 sigma2)^3 = e",
                    Universe::SkewIn(5),
                    5,
                ),
                PresetCheck {
                    name: "evac~ Knuth equivalent to c_n".into(),
                    kind: CheckKind::EvacSkewNotKnuth,
                    universe: Universe::SkewIn(5),
                    max_cells: 5,
                    n,
                    expect: Expect::Fails,
                },
                fails(
                    "evac~ = reversal",
                    "evac~{n} = eta{1,n}",
                    Universe::SkewIn(5),
                    5,
                ),
                fails(
                    "evac~_ij = q_ij",
                    "evac~{i,j} = q{i,j} : i < j",
                    Universe::SkewIn(5),
                    5,
                ),
                PresetCheck {
                    n: n.max(4),
                    ..fails(
                        "(t_i q_jk)^2 (skew)",
                        "(t{i} q{j,k})^2 = e : i+1 < j < k <= n",
                        Universe::SkewIn(5),
                        5,
                    )
                },
                fails(
                    "evac~_ij = evac~_j evac~_j-i+1 evac~_j",
                    "evac~{i,j} = evac~{j} evac~{j-i+1} evac~{j} : i < j",
                    Universe::SkewIn(5),
                    5,
                ),
            ]
        }
        other => {
            return Err(Error::Schema(format!(
                "unknown preset {other:?}; known: {}",
                PRESETS.join(", ")
            )))
        }
    })
}

/// Runs one check. `Holds` checks sweep their whole universe; `Fails` checks
/// search it in order within `budget`.
pub fn run_check(check: &PresetCheck, budget: Budget) -> Result<CheckReport> {
    let cells = check.max_cells;
    let verdict = match (&check.kind, check.expect) {
        (CheckKind::Relation(schema, route), Expect::Holds) => {
            let families = check.universe.families(cells, check.n);
            verify_relation(
                schema,
                &families,
                VerifyOptions {
                    route: *route,
                    exhaustive: false,
                },
            )?
        }
        (CheckKind::Relation(schema, route), Expect::Fails) => search_counterexample(
            schema,
            &check.universe,
            check.n,
            Budget {
                max_cells: cells,
                ..budget
            },
            *route,
        )?,
        (CheckKind::EvacSkewNotKnuth, _) => search_evac_skew_not_knuth(
            &check.universe,
            check.n,
            Budget {
                max_cells: cells,
                ..budget
            },
        )?,
    };
    let passed = match check.expect {
        Expect::Holds => verdict.holds,
        Expect::Fails => !verdict.holds,
    };
    Ok(CheckReport {
        name: check.name.clone(),
        expect: check.expect,
        verdict,
        passed,
    })
}
