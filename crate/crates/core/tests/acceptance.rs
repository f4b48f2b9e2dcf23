//! Acceptance suite. Runs as a plain binary so that it can print one verdict
//! line per criterion; exits non-zero if any criterion fails in a way that is
//! not the documented skew-shape failure of `(t_i q_{j,k})^2`.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use shtab::bk::{bk, bk_traced, q};
use shtab::group::preset::run_check;
use shtab::group::{
    preset, verify_relation, Budget, CactusRoute, Counterexample, RelationSchema, Universe,
    Verdict, VerifyOptions, Violation, Word,
};
use shtab::jdt::{
    complement, components_by_dual_equivalence, eta, evacuation, rectify_with, reversal,
    CornerStrategy,
};
use shtab::shape::Cell;
use shtab::switching::{
    evac_k_switch, evac_skew, evac_switch, full_switch, full_switch_traced, switch_pair, SwitchRule,
};
use shtab::{
    enumerate, parse_tableau, render_compact, PrimedEntry, ShiftedSkewShape, ShiftedTableau,
    TableauFamily, Weight,
};

enum Status {
    Pass,
    Fail,
    /// Fails exactly as recorded; see the README.
    KnownFail,
}

struct Outcome {
    status: Status,
    detail: String,
}

impl Outcome {
    fn from(ok: bool, detail: impl Into<String>) -> Outcome {
        Outcome {
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }
}

/// Collects failures within a criterion without stopping at the first.
#[derive(Default)]
struct Tally {
    problems: Vec<String>,
    checks: u64,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.problems.push(what());
        }
    }

    fn verdict(&mut self, what: &str, v: &Verdict) {
        self.checks += v.instances_checked;
        if let Some(cx) = &v.counterexample {
            self.problems.push(format!("{what}: {}", describe(cx)));
        }
    }

    fn outcome(self, summary: &str) -> Outcome {
        if self.problems.is_empty() {
            Outcome::from(true, format!("{summary}; {} checks", self.checks))
        } else {
            Outcome::from(false, self.problems.join("; "))
        }
    }
}

fn describe(cx: &Counterexample) -> String {
    format!(
        "{} on {} gives {} vs {}",
        cx.violation,
        render_compact(&cx.tableau),
        render_compact(&cx.left),
        render_compact(&cx.right)
    )
}

fn t(text: &str) -> ShiftedTableau {
    parse_tableau(text).unwrap()
}

fn families(universe: &Universe, max_cells: usize, ns: &[u8]) -> Vec<TableauFamily> {
    ns.iter()
        .flat_map(|&n| universe.families(max_cells, n))
        .collect()
}

fn straight4() -> Vec<TableauFamily> {
    families(&Universe::StraightIn(4), usize::MAX, &[4])
}

/// Every family with at most 5 cells inside the size-5 staircase, n <= 4,
/// plus the straight families inside the size-4 staircase with n = 4.
fn involution_pool() -> Vec<TableauFamily> {
    let mut out = families(&Universe::All(5), 5, &[1, 2, 3, 4]);
    out.extend(
        straight4()
            .into_iter()
            .filter(|f| f.shape().num_cells() > 5),
    );
    out
}

fn relation(schema: &str, fams: &[TableauFamily], route: CactusRoute) -> Verdict {
    let s = RelationSchema::parse(schema).unwrap();
    verify_relation(
        &s,
        fams,
        VerifyOptions {
            route,
            exhaustive: false,
        },
    )
    .unwrap()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut tally = Tally::default();

    // reading word and weight; the row `2 2'` is kept as printed
    let shape = ShiftedSkewShape::from_parts(&[6, 3, 1], &[3, 1]).unwrap();
    let rows: Vec<Vec<PrimedEntry>> = [vec!["1", "1", "2'"], vec!["2", "2'"], vec!["3"]]
        .iter()
        .map(|r| r.iter().map(|s| s.parse().unwrap()).collect())
        .collect();
    let skew = ShiftedTableau::from_rows_unchecked(shape, rows, 3).unwrap();
    let word: String = skew.reading_word().iter().map(|e| e.to_string()).collect();
    tally.check(word == "322'112'", || format!("reading word {word}"));
    tally.check(skew.weight() == Weight(vec![2, 3, 1]), || {
        format!("weight {}", skew.weight())
    });

    let res = full_switch_traced(&t("1 1 1\n2"), &t(". . . 1\n. 1")).unwrap();
    let rules: Vec<SwitchRule> = res.trace.iter().map(|s| s.rule).collect();
    use SwitchRule::*;
    tally.check(rules == [S1, S1, S7, S1], || {
        format!("switch rules {rules:?}")
    });
    let states: Vec<&str> = res.trace.iter().map(|s| s.state.as_str()).collect();
    let want = [
        "*1 *1 *1 1 / 1 *2",
        "*1 *1 1 *1 / 1 *2",
        "1 *1' 1 *1 / *1 *2",
        "1 1 *1' *1 / *1 *2",
    ];
    tally.check(states == want, || format!("switch states {states:?}"));
    tally.check(render_compact(&res.inner) == "1 1", || {
        format!("^S T = {}", res.inner)
    });
    tally.check(render_compact(&res.outer) == ". . 1' 1 / 1 2", || {
        format!("S_T = {}", res.outer)
    });

    let base = t("1 1 2' 2\n2 3'\n3");
    let chains: [(u8, &str, Vec<SwitchRule>, Vec<&str>); 2] = [
        (
            1,
            "1 1 1 2 / 2 3' / 3",
            vec![S5, S1, S3],
            vec![
                "*1 2' *1 2 / 2 3' / 3",
                "*1 2' 2 *1 / 2 3' / 3",
                "2 2 2 *1 / *1 3' / 3",
            ],
        ),
        (
            2,
            "1 1 2 3 / 2 3' / 3",
            vec![S3, S2],
            vec!["1 1 *2' *2 / 3 3 / *2", "1 1 3 *2 / 3 *2' / *2"],
        ),
    ];
    for (i, image, rules, states) in chains {
        let (out, trace) = bk_traced(&base, i).unwrap();
        tally.check(render_compact(&out) == image, || format!("t{i}(T) = {out}"));
        let got: Vec<SwitchRule> = trace.iter().map(|s| s.rule).collect();
        tally.check(got == rules, || format!("t{i} rules {got:?}"));
        let got: Vec<&str> = trace.iter().map(|s| s.state.as_str()).collect();
        tally.check(got == states, || format!("t{i} states {got:?}"));
    }

    let r = t("1 1 2' 2 3\n2 3' 3\n3");
    let image = Word::parse("(t1 t2)^6")
        .unwrap()
        .eval(&r, CactusRoute::Eta)
        .unwrap();
    tally.check(
        render_compact(&image) == "1 1 2' 3' 3 / 2 2 3 / 3" && image != r,
        || format!("(t1 t2)^6 = {image}"),
    );

    let took = start.elapsed();
    tally.check(took < Duration::from_secs(1), || format!("took {took:?}"));
    tally.outcome("word, weight, switching trace, t1/t2 chains, (t1 t2)^6 image")
}

/// The documented skew counterexample to `(t_i q_{j,k})^2 = 1`, re-derived
/// with the classical Bender-Knuth moves on the same standard filling.
fn documented_skew_failure(cx: &Counterexample) -> bool {
    let Violation::Words { instance, .. } = &cx.violation else {
        return false;
    };
    let witness = render_compact(&cx.tableau) == ". . 2 4 / 1 3"
        && instance.lhs.to_string() == "t1 q{3,4} t1 q{3,4}"
        && render_compact(&cx.left) == ". . 1 2 / 3 4";
    let step = |x: &ShiftedTableau| common::bk_standard(&common::q_interval_standard(x, 3, 4), 1);
    let classical = step(&step(&cx.tableau));
    witness && classical == cx.left && cx.replays().unwrap()
}

fn criterion_2() -> Outcome {
    let mut tally = Tally::default();
    let straight = straight4();
    let skew = families(&Universe::SkewIn(5), 5, &[4]);
    let mut both = straight.clone();
    both.extend(skew.iter().cloned());

    for (name, schema) in [
        ("t_i^2", "t{i}^2 = e"),
        ("distant t commute", "t{i} t{j} = t{j} t{i} : |i-j| > 1"),
        ("t1 = q1", "t1 = q1"),
        ("t2 = q1 q2 q1", "t2 = q1 q2 q1"),
        ("t_i via q", "t{i} = q{i-1} q{i} q{i-1} q{i-2} : i > 2"),
    ] {
        tally.verdict(name, &relation(schema, &both, CactusRoute::Eta));
    }
    let tq = "(t{i} q{j,k})^2 = e : i+1 < j < k <= n";
    tally.verdict(
        "(t_i q_jk)^2 straight",
        &relation(tq, &straight, CactusRoute::Eta),
    );
    let on_skew = relation(tq, &skew, CactusRoute::Eta);
    tally.checks += on_skew.instances_checked;

    let other = std::mem::take(&mut tally.problems);
    match (&on_skew.counterexample, other.is_empty()) {
        (None, true) => tally.outcome("all relations on straight and skew families"),
        (Some(cx), true) if documented_skew_failure(cx) => Outcome {
            status: Status::KnownFail,
            detail: format!(
                "(t_i q_jk)^2 = e fails on skew shapes: {}; also fails for classical \
                 Bender-Knuth moves on this filling; every other relation holds, and this one \
                 holds on all straight families ({} checks)",
                describe(cx),
                tally.checks
            ),
        },
        (cx, _) => {
            let mut all = other;
            if let Some(cx) = cx {
                all.push(format!("(t_i q_jk)^2 skew: {}", describe(cx)));
            }
            Outcome::from(false, all.join("; "))
        }
    }
}

fn criterion_3() -> Outcome {
    let mut tally = Tally::default();
    for fam in straight4() {
        for x in fam.iter() {
            let n = x.n();
            let a = evac_switch(x).unwrap();
            let b = evacuation(x).unwrap();
            let c = q(x, n - 1).unwrap();
            tally.check(a == b && b == c, || {
                format!("evacuation routes differ on {x}")
            });
            for k in 2..=n {
                let a = evac_k_switch(x, k).unwrap();
                let b = eta(x, 1, k).unwrap();
                let c = q(x, k - 1).unwrap();
                tally.check(a == b && b == c, || {
                    format!("evac_{k} routes differ on {x}")
                });
            }
        }
    }
    tally.outcome("evac_switch = rect c_n = q_{n-1}, evac_k = eta_{1,k} = q_{k-1}")
}

const CACTUS: [&str; 4] = [
    "s{i,j}^2 = e : i < j",
    "s{i,j} s{k,l} = s{k,l} s{i,j} : i < j < k < l",
    "s{i,j} s{k,l} = s{i+j-l,i+j-k} s{i,j} : i <= k < l <= j",
    "s{i,j} = s{1,j} s{1,j-i+1} s{1,j} : i < j",
];

fn criterion_4() -> Outcome {
    let mut tally = Tally::default();
    let small = families(&Universe::All(5), 5, &[2, 3, 4]);
    let straight = straight4();
    for schema in &CACTUS[..3] {
        tally.verdict(
            &format!("eta: {schema}"),
            &relation(schema, &small, CactusRoute::Eta),
        );
        tally.verdict(
            &format!("q: {schema}"),
            &relation(schema, &straight, CactusRoute::Q),
        );
    }
    for route in [CactusRoute::Eta, CactusRoute::Q, CactusRoute::Evac] {
        let fams = if route == CactusRoute::Eta {
            &small
        } else {
            &straight
        };
        tally.verdict(
            &format!("identity, {route}"),
            &relation(CACTUS[3], fams, route),
        );
    }
    let cor = "eta{i,j} = eta{1,j} eta{1,j-i+1} eta{1,j} : i < j";
    tally.verdict(
        "eta through eta_1k",
        &relation(cor, &small, CactusRoute::Eta),
    );
    tally.outcome("eta on families of <= 5 cells, q on straight n = 4, identity on all routes")
}

fn criterion_5() -> Outcome {
    let mut tally = Tally::default();
    for check in preset("evac-agreement", 4).unwrap() {
        if !check.name.contains("= p1") {
            continue;
        }
        let r = run_check(&check, Budget::default()).unwrap();
        tally.verdict(&r.name, &r.verdict);
    }
    tally.outcome("evac_{i+1} = p1..pi on straight and on (3,1)/(1)")
}

fn criterion_6() -> Outcome {
    let mut tally = Tally::default();
    let pool = involution_pool();

    for fam in &pool {
        for x in fam.iter() {
            let n = x.n();
            let r = reversal(x).unwrap();
            tally.check(reversal(&r).unwrap() == *x, || format!("reversal on {x}"));
            let e = evac_skew(x).unwrap();
            tally.check(evac_skew(&e).unwrap() == *x, || format!("evac~ on {x}"));
            for i in 1..n {
                let b = bk(x, i).unwrap();
                tally.check(bk(&b, i).unwrap() == *x, || format!("t{i} on {x}"));
                let y = q(x, i).unwrap();
                tally.check(q(&y, i).unwrap() == *x, || format!("q{i} on {x}"));
                for j in i + 1..=n {
                    let y = eta(x, i, j).unwrap();
                    tally.check(eta(&y, i, j).unwrap() == *x, || {
                        format!("eta{{{i},{j}}} on {x}")
                    });
                }
            }
        }
    }

    for fam in families(&Universe::All(5), 6, &[2]) {
        for x in fam.iter() {
            let band = |v: u8| -> BTreeMap<Cell, PrimedEntry> {
                x.entries().filter(|(_, e)| e.value() == v).collect()
            };
            let (a, b) = (band(1), band(2));
            if a.is_empty() || b.is_empty() {
                continue;
            }
            let (b2, a2) = switch_pair(&a, &b).unwrap();
            let back = switch_pair(&b2, &a2).unwrap();
            tally.check(back == (a.clone(), b.clone()), || {
                format!("switch_pair on {x}")
            });
        }
    }

    for fam in families(&Universe::All(5), 5, &[2, 3]) {
        for x in fam.iter() {
            let n = x.n();
            for m in 1..n {
                let s = x.sub_tableau(1, m).with_n(m).unwrap();
                let rest = x.sub_tableau(m + 1, n).reindexed_down(m, n - m);
                let once = full_switch(&s, &rest).unwrap();
                let twice = full_switch(&once.inner, &once.outer).unwrap();
                tally.check(twice.inner == s && twice.outer == rest, || {
                    format!("full_switch split at {m} on {x}")
                });
            }
        }
    }
    tally.outcome("switch_pair, full_switch, reversal, eta_ij, evac~, t_i, q_i")
}

fn criterion_7() -> Outcome {
    let mut tally = Tally::default();
    let mut found = Vec::new();
    for check in preset("non-relations", 3).unwrap() {
        let r = run_check(&check, Budget::default()).unwrap();
        let Some(cx) = &r.verdict.counterexample else {
            tally.check(false, || format!("no witness for {}", r.name));
            continue;
        };
        tally.check(cx.replays().unwrap(), || {
            format!("{} witness does not replay", r.name)
        });
        if r.name == "(t1 t2)^6" {
            tally.check(cx.tableau.len() <= 9, || {
                format!("(t1 t2)^6 witness {}", cx.tableau)
            });
        }
        found.push(format!("{}: {}", r.name, render_compact(&cx.tableau)));
    }
    let summary = found.join(", ");
    tally.outcome(&summary)
}

fn criterion_8() -> Outcome {
    let mut tally = Tally::default();
    for fam in involution_pool() {
        for x in fam.iter() {
            let rev = x.weight().reversed();
            tally.check(complement(x).weight() == rev, || format!("wt c_n on {x}"));
            tally.check(reversal(x).unwrap().weight() == rev, || {
                format!("wt eta on {x}")
            });
            let (a, _) = rectify_with(x, CornerStrategy::Topmost);
            let (b, _) = rectify_with(x, CornerStrategy::Bottommost);
            tally.check(a == b, || format!("slide order matters on {x}"));
        }
    }
    let shape = ShiftedSkewShape::from_parts(&[3, 1], &[1]).unwrap();
    let fam = enumerate(&shape, 4);
    let comps = components_by_dual_equivalence(fam.members()).unwrap();
    tally.check(comps.len() == 2, || {
        format!("{} dual equivalence classes", comps.len())
    });
    tally.outcome("weights reversed, two corner orders agree, 2 classes for (3,1)/(1)")
}

fn criterion_9() -> Outcome {
    let mut tally = Tally::default();
    for shape in ShiftedSkewShape::all_in_staircase(4, 8, false) {
        for n in 1..=4 {
            let mut fast = enumerate(&shape, n).into_members();
            fast.sort();
            let slow = common::brute_force(&shape, n);
            tally.check(fast == slow, || format!("{shape}, n = {n}"));
        }
    }
    tally.outcome("enumerate = brute force, shapes <= 8 cells, n <= 4")
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("golden examples", criterion_1),
        ("SBK relations", criterion_2),
        ("evacuation routes agree", criterion_3),
        ("cactus actions", criterion_4),
        ("evacuation through promotions", criterion_5),
        ("involutions", criterion_6),
        ("non-relation witnesses", criterion_7),
        ("structural checks", criterion_8),
        ("enumeration oracle", criterion_9),
    ];
    let mut unexpected = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let secs = start.elapsed().as_secs_f64();
        let tag = match out.status {
            Status::Pass => "PASS",
            Status::Fail => {
                unexpected += 1;
                "FAIL"
            }
            Status::KnownFail => "FAIL (known)",
        };
        println!(
            "criterion {} {tag}: {name} [{secs:.1} s] {}",
            k + 1,
            out.detail
        );
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed unexpectedly");
        std::process::exit(1);
    }
}
