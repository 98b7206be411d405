use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{commuting_graph, SimpleGraph};
use crate::{FiniteSemigroup, Result};

/// A left path `x_1 ~ … ~ x_k` of the commuting graph: `x_1 ≠ x_k` and
/// `x_1·x_i = x_k·x_i` for every `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeftPathWitness {
    /// Element indices along the path.
    pub vertices: Vec<usize>,
}

impl LeftPathWitness {
    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    /// Checks every defining condition by direct multiplication.
    pub fn is_valid(&self, s: &FiniteSemigroup) -> bool {
        let v = &self.vertices;
        if v.len() < 2 || v.iter().any(|&x| x >= s.order()) {
            return false;
        }
        let center = s.center();
        let (first, last) = (v[0], v[v.len() - 1]);
        let distinct = v.iter().enumerate().all(|(i, x)| !v[i + 1..].contains(x));
        distinct
            && v.iter().all(|&x| !center.contains(x))
            && v.windows(2).all(|w| s.mul(w[0], w[1]) == s.mul(w[1], w[0]))
            && v.iter().all(|&x| s.mul(first, x) == s.mul(last, x))
    }
}

/// Shortest left path of the commuting graph, if there is one.
///
/// For endpoints `a ≠ b` with `a·a = b·a` and `a·b = b·b`, every vertex of a
/// left path from `a` to `b` lies in `{z : a·z = b·z}`, so the shortest such
/// path is a BFS path in the subgraph induced by that set.
pub fn knit_degree(s: &FiniteSemigroup) -> Result<Option<LeftPathWitness>> {
    let g = commuting_graph(s)?;
    let n = g.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    let mut allowed = FixedBitSet::with_capacity(n);
    for u in 0..n {
        let a = g.label(u);
        for v in u + 1..n {
            let b = g.label(v);
            if s.mul(a, a) != s.mul(b, a) || s.mul(a, b) != s.mul(b, b) {
                continue;
            }
            allowed.clear();
            for w in 0..n {
                let z = g.label(w);
                if s.mul(a, z) == s.mul(b, z) {
                    allowed.insert(w);
                }
            }
            if let Some(path) = shortest_path(&g, u, v, &allowed) {
                if best.as_ref().is_none_or(|p| path.len() < p.len()) {
                    let done = path.len() == 2;
                    best = Some(path);
                    if done {
                        break;
                    }
                }
            }
        }
        if best.as_ref().is_some_and(|p| p.len() == 2) {
            break;
        }
    }
    Ok(best.map(|path| LeftPathWitness {
        vertices: path.into_iter().map(|w| g.label(w)).collect(),
    }))
}

fn shortest_path(
    g: &SimpleGraph,
    from: usize,
    to: usize,
    allowed: &FixedBitSet,
) -> Option<Vec<usize>> {
    let dist = g.distances(from, Some(allowed));
    let mut d = dist[to]?;
    let mut path = vec![to];
    let mut current = to;
    while d > 0 {
        current = g
            .neighbors(current)
            .find(|&w| dist[w] == Some(d - 1))
            .expect("BFS predecessor");
        path.push(current);
        d -= 1;
    }
    path.reverse();
    Some(path)
}
