//! Orbits of a tableau under a set of operator words, with DOT export.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::tableau::ShiftedTableau;

use super::word::{CactusRoute, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitEdge {
    pub from: usize,
    pub to: usize,
    pub label: String,
}

/// Vertices in breadth-first discovery order; the seed is vertex 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitGraph {
    pub vertices: Vec<ShiftedTableau>,
    pub edges: Vec<OrbitEdge>,
}

/// Default bound on orbit size.
pub const MAX_ORBIT: usize = 100_000;

/// Breadth-first closure of `seed` under `gens`, each given with its label.
pub fn orbit_graph(
    seed: &ShiftedTableau,
    gens: &[(String, Word)],
    route: CactusRoute,
    max_vertices: usize,
) -> Result<OrbitGraph> {
    let mut index: BTreeMap<ShiftedTableau, usize> = BTreeMap::new();
    let mut vertices = vec![seed.clone()];
    let mut edges = Vec::new();
    index.insert(seed.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for (label, word) in gens {
            let image = word.eval(&vertices[v], route)?;
            let to = match index.get(&image) {
                Some(&i) => i,
                None => {
                    if vertices.len() == max_vertices {
                        return Err(Error::Capacity(format!(
                            "orbit has more than {max_vertices} vertices"
                        )));
                    }
                    let i = vertices.len();
                    index.insert(image.clone(), i);
                    vertices.push(image);
                    queue.push_back(i);
                    i
                }
            };
            edges.push(OrbitEdge {
                from: v,
                to,
                label: label.clone(),
            });
        }
    }
    Ok(OrbitGraph { vertices, edges })
}

impl OrbitGraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn to_dot(&self) -> String {
        let mut out =
            String::from("digraph orbit {\n  node [shape=box, fontname=\"monospace\"];\n");
        for (i, t) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", escape(&t.to_string()));
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  n{} -> n{} [label=\"{}\"];",
                e.from,
                e.to,
                escape(&e.label)
            );
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_tableau;

    fn gens(names: &[&str]) -> Vec<(String, Word)> {
        names
            .iter()
            .map(|s| (s.to_string(), Word::parse(s).unwrap()))
            .collect()
    }

    #[test]
    fn fixed_point_has_a_loop() {
        let t = parse_tableau("1 2").unwrap();
        let g = orbit_graph(&t, &gens(&["t1"]), CactusRoute::Eta, 10).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!((g.edges[0].from, g.edges[0].to), (0, 0));
        let t = parse_tableau("1 1").unwrap().with_n(2).unwrap();
        let g = orbit_graph(&t, &gens(&["t1"]), CactusRoute::Eta, 10).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.edges.len(), 2);
    }

    #[test]
    fn dot_output() {
        let t = parse_tableau("1 1").unwrap().with_n(2).unwrap();
        let g = orbit_graph(&t, &gens(&["t1"]), CactusRoute::Eta, 10).unwrap();
        assert_eq!(
            g.to_dot(),
            "digraph orbit {\n  node [shape=box, fontname=\"monospace\"];\n  n0 [label=\"1 1\"];\n  n1 [label=\"2 2\"];\n  n0 -> n1 [label=\"t1\"];\n  n1 -> n0 [label=\"t1\"];\n}\n"
        );
    }

    #[test]
    fn capacity() {
        let t = parse_tableau("1 1").unwrap().with_n(2).unwrap();
        assert!(matches!(
            orbit_graph(&t, &gens(&["t1"]), CactusRoute::Eta, 1),
            Err(Error::Capacity(_))
        ));
    }
}
