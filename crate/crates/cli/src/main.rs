//! `shtab`: command-line front end.
//!
//! Exit codes: 0 on success (or when a relation holds), 1 when `verify` finds
//! a counterexample or `search` finds none, 2 on usage or input errors.

mod report;

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use shtab::bk::bk_traced;
use shtab::format::TableauJson;
use shtab::group::preset::standard_universe;
use shtab::group::{
    orbit_graph, preset, run_check, search_counterexample, search_evac_skew_not_knuth,
    verify_relation, Budget, CactusRoute, Generator, RelationSchema, Universe, VerifyOptions, Word,
    PRESETS,
};
use shtab::jdt::rectify;
use shtab::switching::{full_switch, full_switch_traced};
use shtab::{count, enumerate, parse_tableau_with_n, render, ShiftedSkewShape, ShiftedTableau};

use report::{CheckLine, RunReport};

const SCHEMA_HELP: &str = "\
schema syntax: LHS = RHS [: constraints]
  words      generators separated by spaces, applied right to left;
             t1 p2 q3 q{2,4} q:2,4 evac3 evac~3 evac~{1,3} eta{1,3} sigma1 s{i,j} e,
             (word)^k and g^k for powers
  indices    integers or expressions in variables: t{i}, q{j-1,k}, s{i+j-l,i+j-k}
  constraints comma-separated comparison chains: i+1 < j < k <= n, |i-j| > 1
  variables range over 1..n, n is the alphabet bound";

#[derive(Parser)]
#[command(
    name = "shtab",
    version,
    about = "Shifted tableau switching and Bender-Knuth operators"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads for verification.
    #[arg(long, env = "SHTAB_JOBS", global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List or count ShST(outer/mu, n).
    Enum {
        #[arg(long, value_delimiter = ',', required = true)]
        outer: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        mu: Vec<usize>,
        #[arg(long)]
        n: u8,
        #[arg(long)]
        count_only: bool,
    },
    /// Apply an operator word (rightmost generator first).
    Apply {
        #[arg(long)]
        op: String,
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Route::Eta)]
        route: Route,
        /// Show the switching chain of every t_i.
        #[arg(long)]
        trace: bool,
    },
    /// Switch S with a tableau T extending it.
    Switch {
        #[arg(long = "s")]
        s: PathBuf,
        #[arg(long = "t")]
        t: PathBuf,
        #[arg(long)]
        trace: bool,
    },
    /// Rectify by jeu de taquin.
    Rectify {
        #[command(flatten)]
        input: Input,
        /// Also print the slides performed.
        #[arg(long)]
        emit_record: bool,
    },
    /// Check a relation schema or a bundled preset.
    Verify {
        #[arg(long, conflicts_with = "preset", required_unless_present = "preset")]
        schema: Option<String>,
        #[arg(long)]
        preset: Option<String>,
        /// Restrict to one shape; default is every straight shape inside the
        /// staircase of size n plus skew shapes of at most 5 cells.
        #[arg(long, value_delimiter = ',')]
        outer: Vec<usize>,
        #[arg(long, value_delimiter = ',', requires = "outer")]
        mu: Vec<usize>,
        #[arg(long)]
        n: u8,
        #[arg(long, value_enum, default_value_t = Route::Eta)]
        route: Route,
        /// Count every failing member instead of stopping at the first.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Search shapes in order of size for a counterexample.
    Search {
        #[arg(long, required_unless_present = "evac_skew_knuth")]
        schema: Option<String>,
        /// Look for T with rect(evac~ T) != rect(c_n T) instead.
        #[arg(long, conflicts_with = "schema")]
        evac_skew_knuth: bool,
        #[arg(long, default_value_t = 9)]
        max_cells: usize,
        #[arg(long, default_value_t = 50_000_000)]
        max_checks: u64,
        #[arg(long)]
        n: u8,
        #[arg(long, value_enum, default_value_t = Space::All)]
        shapes: Space,
        /// Staircase bounding skew shapes.
        #[arg(long, default_value_t = 5)]
        staircase: usize,
        #[arg(long, value_enum, default_value_t = Route::Eta)]
        route: Route,
    },
    /// Orbit of a tableau under generator words.
    Orbit {
        /// Comma-separated words.
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<String>,
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Route::Eta)]
        route: Route,
        /// Write the orbit graph in DOT format ("-" for stdout).
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, default_value_t = shtab::group::orbit::MAX_ORBIT)]
        max_vertices: usize,
    },
}

#[derive(Args)]
struct Input {
    /// Tableau file in text or JSON form ("-" for stdin).
    #[arg(long = "in")]
    path: PathBuf,
    /// Alphabet bound; defaults to the largest letter.
    #[arg(long)]
    n: Option<u8>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    Eta,
    Q,
    Evac,
}

impl From<Route> for CactusRoute {
    fn from(r: Route) -> Self {
        match r {
            Route::Eta => CactusRoute::Eta,
            Route::Q => CactusRoute::Q,
            Route::Evac => CactusRoute::Evac,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Space {
    Straight,
    Skew,
    All,
}

fn read_text(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load(path: &PathBuf, n: Option<u8>) -> Result<ShiftedTableau> {
    let text = read_text(path)?;
    parse_tableau_with_n(&text, n).with_context(|| format!("parsing {}", path.display()))
}

fn shape_of(outer: &[usize], mu: &[usize]) -> Result<ShiftedSkewShape> {
    Ok(ShiftedSkewShape::from_parts(outer, mu)?)
}

fn tableau_json(t: &ShiftedTableau) -> serde_json::Value {
    serde_json::to_value(TableauJson::from(t)).expect("tableau json")
}

fn parse_schema(text: &str) -> Result<RelationSchema> {
    RelationSchema::parse(text).with_context(|| format!("invalid schema {text:?}"))
}

fn is_schema_error(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        matches!(
            c.downcast_ref::<shtab::Error>(),
            Some(shtab::Error::Schema(_))
        )
    })
}

struct Outcome {
    report: RunReport,
    text: String,
    code: u8,
}

fn run(cli: &Cli, argv: &[String]) -> Result<Outcome> {
    let mut report = RunReport::new(argv);
    let mut text = String::new();
    let mut code = 0;
    match &cli.command {
        Command::Enum {
            outer,
            mu,
            n,
            count_only,
        } => {
            let shape = shape_of(outer, mu)?;
            report.param("shape", shape.to_string());
            report.param("n", *n);
            if *count_only {
                let c = count(&shape, *n);
                report.output.push(json!(c));
                text = format!("{c}\n");
            } else {
                for t in enumerate(&shape, *n).iter() {
                    report.output.push(tableau_json(t));
                    text.push_str(&format!("{t}\n"));
                }
            }
        }
        Command::Apply {
            op,
            input,
            route,
            trace,
        } => {
            let t = load(&input.path, input.n)?;
            let word = Word::parse(op).with_context(|| format!("invalid operator word {op:?}"))?;
            report.param("op", word.to_string());
            report.param("input", t.to_string());
            let route = CactusRoute::from(*route);
            let mut cur = t.clone();
            for g in word.0.iter().rev() {
                match (g, *trace) {
                    (Generator::T(i), true) => {
                        let (next, steps) = bk_traced(&cur, *i)?;
                        text.push_str(&format!("{g}: {cur}\n"));
                        for s in &steps {
                            text.push_str(&format!("  ({}) {}\n", s.rule, s.state));
                        }
                        text.push_str(&format!("  theta{i} -> {next}\n"));
                        report
                            .trace
                            .push(json!({"generator": g.to_string(), "steps": steps}));
                        cur = next;
                    }
                    (_, true) => {
                        let next = g.apply(&cur, route)?;
                        text.push_str(&format!("{g}: {cur} -> {next}\n"));
                        cur = next;
                    }
                    _ => cur = g.apply(&cur, route)?,
                }
            }
            report.output.push(tableau_json(&cur));
            text.push_str(&render(&cur));
            text.push('\n');
        }
        Command::Switch { s, t, trace } => {
            let s = load(s, None)?;
            let t = load(t, None)?;
            let res = if *trace {
                full_switch_traced(&s, &t)?
            } else {
                full_switch(&s, &t)?
            };
            report.param("s", s.to_string());
            report.param("t", t.to_string());
            for step in &res.trace {
                text.push_str(&format!("({}) {}\n", step.rule, step.state));
                report.trace.push(serde_json::to_value(step)?);
            }
            text.push_str(&format!("^S T: {}\nS_T: {}\n", res.inner, res.outer));
            report.output.push(tableau_json(&res.inner));
            report.output.push(tableau_json(&res.outer));
        }
        Command::Rectify { input, emit_record } => {
            let t = load(&input.path, input.n)?;
            let (rect, record) = rectify(&t);
            report.param("input", t.to_string());
            if *emit_record {
                for step in &record.0 {
                    text.push_str(&format!(
                        "slide {} -> vacate {}\n",
                        step.corner, step.vacated
                    ));
                }
                report.trace.push(serde_json::to_value(&record)?);
            }
            report.output.push(tableau_json(&rect));
            text.push_str(&render(&rect));
            text.push('\n');
        }
        Command::Verify {
            schema,
            preset: name,
            outer,
            mu,
            n,
            route,
            exhaustive,
        } => {
            report.param("n", *n);
            let route = CactusRoute::from(*route);
            let universe = if outer.is_empty() {
                standard_universe(*n)
            } else {
                Universe::Shapes(vec![shape_of(outer, mu)?])
            };
            let lines = if let Some(name) = name {
                report.param("preset", name.clone());
                if !PRESETS.contains(&name.as_str()) {
                    bail!("unknown preset {name:?}; known: {}", PRESETS.join(", "));
                }
                let mut out = Vec::new();
                for mut check in preset(name, *n)? {
                    if !outer.is_empty() {
                        check.universe = universe.clone();
                        check.max_cells = usize::MAX;
                    }
                    let r = run_check(&check, Budget::default())?;
                    out.push(CheckLine::from_report(&r));
                }
                out
            } else {
                let schema = parse_schema(schema.as_deref().expect("required by clap"))?;
                report.param("schema", schema.to_string());
                report.param("route", route.to_string());
                let families = universe.families(usize::MAX, *n);
                let v = verify_relation(
                    &schema,
                    &families,
                    VerifyOptions {
                        route,
                        exhaustive: *exhaustive,
                    },
                )?;
                vec![CheckLine::holds(schema.to_string(), v)]
            };
            if lines.iter().any(|l| !l.passed) {
                code = 1;
            }
            for l in lines {
                text.push_str(&l.text());
                report.push_check(l);
            }
        }
        Command::Search {
            schema,
            evac_skew_knuth,
            max_cells,
            max_checks,
            n,
            shapes,
            staircase,
            route,
        } => {
            let universe = match shapes {
                Space::Straight => Universe::Straight,
                Space::Skew => Universe::SkewIn(*staircase),
                Space::All => Universe::All(*staircase),
            };
            let budget = Budget {
                max_cells: *max_cells,
                max_checks: *max_checks,
            };
            report.param("n", *n);
            report.param("max_cells", *max_cells);
            let (name, verdict) = if *evac_skew_knuth {
                let name = "rect(evac~ T) = rect(c_n T)".to_string();
                (name, search_evac_skew_not_knuth(&universe, *n, budget)?)
            } else {
                let schema = parse_schema(schema.as_deref().expect("required by clap"))?;
                let route = CactusRoute::from(*route);
                report.param("route", route.to_string());
                (
                    schema.to_string(),
                    search_counterexample(&schema, &universe, *n, budget, route)?,
                )
            };
            report.param("schema", name.clone());
            let line = CheckLine::fails(name, verdict);
            if !line.passed {
                code = 1;
            }
            text.push_str(&line.text());
            report.push_check(line);
        }
        Command::Orbit {
            gens,
            input,
            route,
            dot,
            max_vertices,
        } => {
            let t = load(&input.path, input.n)?;
            let words = gens
                .iter()
                .map(|g| Ok((g.trim().to_string(), Word::parse(g)?)))
                .collect::<Result<Vec<_>>>()?;
            let g = orbit_graph(&t, &words, CactusRoute::from(*route), *max_vertices)?;
            report.param("input", t.to_string());
            report.param("gens", gens.join(","));
            text.push_str(&format!("{} vertices, {} edges\n", g.len(), g.edges.len()));
            for (i, v) in g.vertices.iter().enumerate() {
                text.push_str(&format!("n{i}: {v}\n"));
                report.output.push(tableau_json(v));
            }
            match dot {
                Some(p) if p.as_os_str() == "-" => text.push_str(&g.to_dot()),
                Some(p) => {
                    fs::write(p, g.to_dot()).with_context(|| format!("writing {}", p.display()))?
                }
                None => {}
            }
        }
    }
    Ok(Outcome { report, text, code })
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    match run(&cli, &argv[1..]) {
        Ok(mut out) => {
            let body = match cli.format {
                Format::Text => out.text,
                Format::Json => {
                    out.report.set_elapsed(start.elapsed());
                    out.report.to_json() + "\n"
                }
            };
            // a closed pipe downstream is not our failure
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if is_schema_error(&e) {
                eprintln!("\n{SCHEMA_HELP}");
            }
            ExitCode::from(2)
        }
    }
}
