//! Operator words acting on tableau families: evaluation, relation checks,
//! counterexample search and orbits.

pub mod orbit;
pub mod preset;
pub mod schema;
pub mod verify;
pub mod word;

pub use orbit::{orbit_graph, OrbitEdge, OrbitGraph};
pub use preset::{preset, run_check, CheckKind, CheckReport, Expect, PresetCheck, PRESETS};
pub use schema::{FamilyFilter, Instance, RelationSchema};
pub use verify::{
    cactus_schemata, search_counterexample, search_evac_skew_not_knuth, verify_cactus_action,
    verify_relation, Budget, Counterexample, Universe, Verdict, VerifyOptions, Violation,
};
pub use word::{eval_word, CactusRoute, Generator, Word, WordTemplate};
