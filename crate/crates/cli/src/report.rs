//! Machine-readable run reports.

use std::collections::BTreeMap;
use std::time::Duration;

use serde::Serialize;

use shtab::group::{CheckReport, Counterexample, Expect, Verdict};
use shtab::render_compact;

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    pub violation: String,
    pub tableau: String,
    pub left: String,
    pub right: String,
}

impl From<&Counterexample> for CounterexampleReport {
    fn from(cx: &Counterexample) -> Self {
        CounterexampleReport {
            violation: cx.violation.to_string(),
            tableau: render_compact(&cx.tableau),
            left: render_compact(&cx.left),
            right: render_compact(&cx.right),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub name: String,
    /// `holds` or `fails`: what the check expects.
    pub expect: &'static str,
    pub holds: bool,
    pub passed: bool,
    pub instances_checked: u64,
    pub failures: u64,
    pub counterexample: Option<CounterexampleReport>,
}

impl CheckLine {
    fn new(name: String, expect: Expect, v: &Verdict, passed: bool) -> Self {
        CheckLine {
            name,
            expect: match expect {
                Expect::Holds => "holds",
                Expect::Fails => "fails",
            },
            holds: v.holds,
            passed,
            instances_checked: v.instances_checked,
            failures: v.failures,
            counterexample: v.counterexample.as_ref().map(CounterexampleReport::from),
        }
    }

    pub fn from_report(r: &CheckReport) -> Self {
        CheckLine::new(r.name.clone(), r.expect, &r.verdict, r.passed)
    }

    /// A relation that should hold.
    pub fn holds(name: String, v: Verdict) -> Self {
        let passed = v.holds;
        CheckLine::new(name, Expect::Holds, &v, passed)
    }

    /// A search that should turn up a witness.
    pub fn fails(name: String, v: Verdict) -> Self {
        let passed = !v.holds;
        CheckLine::new(name, Expect::Fails, &v, passed)
    }

    pub fn text(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        let mut s = match (&self.counterexample, self.expect) {
            (None, "holds") => format!(
                "{tag} {}: holds ({} checks)\n",
                self.name, self.instances_checked
            ),
            (None, _) => format!(
                "{tag} {}: no counterexample ({} checks)\n",
                self.name, self.instances_checked
            ),
            (Some(_), "holds") => format!("{tag} {}: counterexample\n", self.name),
            (Some(_), _) => format!("{tag} {}: witness\n", self.name),
        };
        if let Some(cx) = &self.counterexample {
            s.push_str(&format!(
                "  {}\n  T     = {}\n  left  = {}\n  right = {}\n",
                cx.violation, cx.tableau, cx.left, cx.right
            ));
        }
        s
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

/// Field order is fixed by declaration order; parameters are kept sorted.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub verdicts: Vec<CheckLine>,
    pub counterexamples: Vec<CounterexampleReport>,
    /// Tableaux or counts produced by the command.
    pub output: Vec<serde_json::Value>,
    pub trace: Vec<serde_json::Value>,
    pub timing: Timing,
}

impl RunReport {
    pub fn new(argv: &[String]) -> Self {
        RunReport {
            command: argv.join(" "),
            parameters: BTreeMap::new(),
            verdicts: Vec::new(),
            counterexamples: Vec::new(),
            output: Vec::new(),
            trace: Vec::new(),
            timing: Timing::default(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("parameter json");
        self.parameters.insert(key.to_string(), v);
    }

    pub fn push_check(&mut self, line: CheckLine) {
        if let Some(cx) = &line.counterexample {
            self.counterexamples.push(cx.clone());
        }
        self.verdicts.push(line);
    }

    pub fn set_elapsed(&mut self, d: Duration) {
        self.timing.elapsed_ms = d.as_secs_f64() * 1000.0;
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report json")
    }
}
