//! Undirected graphs on primes, with DOT, JSON and TSV renderings.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeGraph {
    vertices: BTreeSet<u64>,
    edges: BTreeSet<(u64, u64)>,
}

fn ordered(p: u64, q: u64) -> (u64, u64) {
    if p < q {
        (p, q)
    } else {
        (q, p)
    }
}

impl PrimeGraph {
    pub fn new(vertices: impl IntoIterator<Item = u64>) -> Self {
        PrimeGraph {
            vertices: vertices.into_iter().collect(),
            edges: BTreeSet::new(),
        }
    }

    /// Every pair of distinct vertices joined.
    pub fn complete(vertices: impl IntoIterator<Item = u64>) -> Self {
        let mut g = Self::new(vertices);
        g.edges = g.all_pairs().collect();
        g
    }

    pub fn add_edge(&mut self, p: u64, q: u64) -> Result<()> {
        if p == q {
            return Err(Error::domain(format!("self-loop at {p}")));
        }
        if !self.vertices.contains(&p) || !self.vertices.contains(&q) {
            return Err(Error::domain(format!("edge {p}-{q} has an endpoint outside the vertex set")));
        }
        self.edges.insert(ordered(p, q));
        Ok(())
    }

    pub fn remove_edge(&mut self, p: u64, q: u64) {
        self.edges.remove(&ordered(p, q));
    }

    pub fn has_edge(&self, p: u64, q: u64) -> bool {
        self.edges.contains(&ordered(p, q))
    }

    pub fn vertices(&self) -> impl Iterator<Item = u64> + '_ {
        self.vertices.iter().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.edges.iter().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn all_pairs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.vertices
            .iter()
            .flat_map(move |&p| self.vertices.range(p + 1..).map(move |&q| (p, q)))
    }

    /// Vertex pairs that are not edges, lexicographic.
    pub fn missing_edges(&self) -> Vec<(u64, u64)> {
        self.all_pairs().filter(|e| !self.edges.contains(e)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.missing_edges().is_empty()
    }

    pub fn is_isolated(&self, v: u64) -> bool {
        self.vertices.contains(&v) && self.edges.iter().all(|&(a, b)| a != v && b != v)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph gamma_prime {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  {v};");
        }
        for (p, q) in &self.edges {
            let _ = writeln!(out, "  {p} -- {q};");
        }
        out.push_str("}\n");
        out
    }

    /// `{"vertices":[...],"edges":[[p,q],...]}`
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    /// `vertices` line, then one `edge` line per edge and one `missing` line
    /// per non-adjacent pair.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("vertices");
        for v in &self.vertices {
            let _ = write!(out, "\t{v}");
        }
        out.push('\n');
        for (p, q) in &self.edges {
            let _ = writeln!(out, "edge\t{p}\t{q}");
        }
        for (p, q) in self.missing_edges() {
            let _ = writeln!(out, "missing\t{p}\t{q}");
        }
        out
    }
}


#[cfg(test)]
mod properties {
    use proptest::prelude::*;

    use super::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn graph_json_round_trips(edges in prop::collection::vec((0usize..5, 0usize..5), 0..10)) {
            let vs = [2u64, 3, 5, 7, 11];
            let mut g = PrimeGraph::new(vs);
            for (a, b) in edges {
                if a != b {
                    g.add_edge(vs[a], vs[b]).unwrap();
                }
            }
            let back: PrimeGraph = serde_json::from_str(&g.to_json()).unwrap();
            prop_assert_eq!(back.missing_edges().len() + back.edge_count(), 10);
            prop_assert_eq!(back, g);
        }
    }
}
