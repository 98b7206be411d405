//! Exact chromatic number: DSATUR backtracking for increasing `k`, starting
//! from the clique number.

use super::clique::maximum_clique;
use super::SimpleGraph;

struct Colouring<'a> {
    g: &'a SimpleGraph,
    k: usize,
    colour: Vec<Option<usize>>,
    /// `blocked[v * k + c]`: neighbours of `v` currently coloured `c`.
    blocked: Vec<u32>,
    saturation: Vec<usize>,
    coloured: usize,
}

impl<'a> Colouring<'a> {
    fn new(g: &'a SimpleGraph, k: usize) -> Self {
        let n = g.vertex_count();
        Colouring {
            g,
            k,
            colour: vec![None; n],
            blocked: vec![0; n * k],
            saturation: vec![0; n],
            coloured: 0,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = Some(c);
        self.coloured += 1;
        for w in self.g.neighbors(v) {
            let slot = &mut self.blocked[w * self.k + c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colour[v] = None;
        self.coloured -= 1;
        for w in self.g.neighbors(v) {
            let slot = &mut self.blocked[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// Uncoloured vertex of maximum saturation, ties broken by degree.
    fn pick(&self) -> Option<usize> {
        (0..self.g.vertex_count())
            .filter(|&v| self.colour[v].is_none())
            .max_by_key(|&v| (self.saturation[v], self.g.degree(v), std::cmp::Reverse(v)))
    }

    fn solve(&mut self, used: usize) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        if self.saturation[v] >= self.k {
            return false;
        }
        // colours above `used` are interchangeable, so try only the first
        for c in 0..self.k.min(used + 1) {
            if self.blocked[v * self.k + c] == 0 {
                self.assign(v, c);
                if self.solve(used.max(c + 1)) {
                    return true;
                }
                self.unassign(v, c);
            }
        }
        false
    }
}

/// Greedy DSATUR colouring: an upper bound.
fn dsatur_greedy(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut state = Colouring::new(g, n.max(1));
    while let Some(v) = state.pick() {
        let c = (0..n)
            .find(|&c| state.blocked[v * state.k + c] == 0)
            .unwrap();
        state.assign(v, c);
    }
    state.colour.into_iter().map(Option::unwrap).collect()
}

/// A proper colouring with the minimum number of colours `0..χ`.
pub fn optimal_coloring(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let greedy = dsatur_greedy(g);
    let upper = greedy.iter().max().map_or(0, |&c| c + 1);
    let clique = maximum_clique(g);
    for k in clique.len()..upper {
        let mut state = Colouring::new(g, k);
        // a maximum clique takes distinct colours in any colouring; fix them
        for (c, &v) in clique.iter().enumerate() {
            state.assign(v, c);
        }
        if state.solve(clique.len()) {
            return state.colour.into_iter().map(Option::unwrap).collect();
        }
    }
    greedy
}

pub fn chromatic_number(g: &SimpleGraph) -> usize {
    optimal_coloring(g).iter().max().map_or(0, |&c| c + 1)
}
