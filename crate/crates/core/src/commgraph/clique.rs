//! Exact maximum clique by branch and bound with a greedy-colouring bound.

use fixedbitset::FixedBitSet;

use super::SimpleGraph;

/// Smallest-last (degeneracy) order, reversed so dense cores come first.
pub(crate) fn degeneracy_order(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| degree[v])
            .unwrap();
        removed[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    order.reverse();
    order
}

struct Search {
    adj: Vec<FixedBitSet>,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search {
    /// Greedy sequential colouring of `candidates`; vertices come out in
    /// non-decreasing colour order, paired with their colour (1-based).
    fn colour_sort(&self, candidates: &FixedBitSet) -> Vec<(usize, usize)> {
        let mut uncoloured = candidates.clone();
        let mut out = Vec::with_capacity(candidates.count_ones(..));
        let mut colour = 0;
        while !uncoloured.is_clear() {
            colour += 1;
            let mut available = uncoloured.clone();
            while let Some(v) = available.minimum() {
                available.set(v, false);
                available.difference_with(&self.adj[v]);
                uncoloured.set(v, false);
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(&mut self, mut candidates: FixedBitSet) {
        let sorted = self.colour_sort(&candidates);
        for &(v, colour) in sorted.iter().rev() {
            if self.current.len() + colour <= self.best.len() {
                return;
            }
            self.current.push(v);
            let mut next = candidates.clone();
            next.intersect_with(&self.adj[v]);
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            candidates.set(v, false);
        }
    }
}

/// A maximum clique, as ascending vertex indices.
pub fn maximum_clique(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let order = degeneracy_order(g);
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let adj = order
        .iter()
        .map(|&v| {
            let mut row = FixedBitSet::with_capacity(n);
            for w in g.neighbors(v) {
                row.insert(position[w]);
            }
            row
        })
        .collect();
    let mut search = Search {
        adj,
        best: Vec::new(),
        current: Vec::new(),
    };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    search.expand(all);
    let mut clique: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    clique.sort_unstable();
    clique
}

pub fn clique_number(g: &SimpleGraph) -> usize {
    maximum_clique(g).len()
}
