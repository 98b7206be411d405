//! Commuting graphs and exact invariants of simple graphs.

mod clique;
mod coloring;
mod export;
mod girth;
mod knit;

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::{Error, FiniteSemigroup, Result};

pub use clique::{clique_number, maximum_clique};
pub use coloring::{chromatic_number, optimal_coloring};
pub use export::{export, to_dot, to_json, ExportFormat};
pub use girth::girth;
pub use knit::{knit_degree, LeftPathWitness};

/// An undirected simple graph whose vertices carry element indices of the
/// semigroup they came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<usize>,
    adj: Vec<FixedBitSet>,
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices labelled `0..n`.
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            labels: (0..n).collect(),
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Panics on loops and out-of-range vertices.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "simple graphs have no loops");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            self.adj[u]
                .ones()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Element index of vertex `v`.
    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Vertex carrying element `x`, if any.
    pub fn vertex_of(&self, x: usize) -> Option<usize> {
        self.labels.binary_search(&x).ok()
    }

    /// BFS distances from `source`, restricted to `allowed` when given.
    pub(crate) fn distances(
        &self,
        source: usize,
        allowed: Option<&FixedBitSet>,
    ) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.adj[u].ones() {
                if dist[w].is_none() && allowed.is_none_or(|a| a.contains(w)) {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for v in 0..self.vertex_count() {
            if seen[v] {
                continue;
            }
            let comp: Vec<usize> = self
                .distances(v, None)
                .iter()
                .enumerate()
                .filter_map(|(u, d)| d.map(|_| u))
                .collect();
            for &u in &comp {
                seen[u] = true;
            }
            out.push(comp);
        }
        out
    }

    /// `E − V + C`: the number of independent cycles.
    pub fn cycle_space_dimension(&self) -> usize {
        self.edge_count() + self.components().len() - self.vertex_count()
    }

    /// Largest distance between two vertices; `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.vertex_count() {
            for d in self.distances(v, None) {
                best = best.max(d?);
            }
        }
        Some(best)
    }
}

/// Graph on the non-central elements, with `x ~ y` iff `xy = yx`.
pub fn commuting_graph(s: &FiniteSemigroup) -> Result<SimpleGraph> {
    let labels = s.center().complement().to_vec();
    if labels.is_empty() {
        return Err(Error::CommutativeSemigroup);
    }
    let n = labels.len();
    let mut g = SimpleGraph {
        labels,
        adj: vec![FixedBitSet::with_capacity(n); n],
    };
    for u in 0..n {
        for v in u + 1..n {
            let (x, y) = (g.labels[u], g.labels[v]);
            if s.mul(x, y) == s.mul(y, x) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// All exact invariants of a graph at once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphMetrics {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    pub cycle_space_dim: usize,
    pub girth: Option<usize>,
    pub clique_number: usize,
    pub chromatic_number: usize,
    pub diameter: Option<usize>,
}

impl GraphMetrics {
    pub fn compute(g: &SimpleGraph) -> Self {
        let component_count = g.components().len();
        GraphMetrics {
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            component_count,
            cycle_space_dim: g.edge_count() + component_count - g.vertex_count(),
            girth: girth(g),
            clique_number: clique_number(g),
            chromatic_number: chromatic_number(g),
            diameter: g.diameter(),
        }
    }
}
