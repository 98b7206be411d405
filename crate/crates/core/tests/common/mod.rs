//! Brute-force reference implementations used as oracles by the test targets.
#![allow(dead_code)]

use rand::Rng;
use sgt_core::commgraph::SimpleGraph;

pub fn adjacency(g: &SimpleGraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

/// First `(a, b, c)` in lexicographic order with `(ab)c ≠ a(bc)`.
pub fn first_associativity_violation(n: usize, table: &[usize]) -> Option<(usize, usize, usize)> {
    let m = |a: usize, b: usize| table[a * n + b];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if m(m(a, b), c) != m(a, m(b, c)) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

fn cycle_of_length(adj: &[Vec<bool>], len: usize) -> bool {
    fn extend(adj: &[Vec<bool>], path: &mut Vec<usize>, len: usize) -> bool {
        let (start, last) = (path[0], *path.last().unwrap());
        if path.len() == len {
            return adj[last][start];
        }
        for next in start + 1..adj.len() {
            if adj[last][next] && !path.contains(&next) {
                path.push(next);
                if extend(adj, path, len) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (0..adj.len()).any(|s| extend(adj, &mut vec![s], len))
}

/// Shortest simple cycle, by searching for cycles of each length in turn.
pub fn brute_girth(g: &SimpleGraph) -> Option<usize> {
    let adj = adjacency(g);
    (3..=adj.len()).find(|&len| cycle_of_length(&adj, len))
}

/// Largest complete vertex subset, over all subsets.
pub fn brute_clique(g: &SimpleGraph) -> usize {
    let adj = adjacency(g);
    let n = adj.len();
    (0u32..1 << n)
        .filter(|&mask| {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            vs.iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&v| adj[u][v]))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Minimum number of independent sets covering the vertices, by dynamic
/// programming over vertex subsets.
pub fn brute_chromatic(g: &SimpleGraph) -> usize {
    let adj = adjacency(g);
    let n = adj.len();
    let full = (1usize << n) - 1;
    let independent: Vec<bool> = (0..=full)
        .map(|mask| {
            (0..n)
                .all(|u| mask >> u & 1 == 0 || (u + 1..n).all(|v| mask >> v & 1 == 0 || !adj[u][v]))
        })
        .collect();
    let mut best = vec![usize::MAX; full + 1];
    best[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut sub = rest;
        loop {
            let part = sub | low;
            if independent[part] && best[mask ^ part] != usize::MAX {
                best[mask] = best[mask].min(best[mask ^ part] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full]
}

pub fn random_graph(rng: &mut impl Rng, max_vertices: usize) -> SimpleGraph {
    let n = rng.gen_range(1..=max_vertices);
    let density: f64 = rng.gen_range(0.1..0.9);
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

use std::collections::BTreeSet;
use std::sync::LazyLock;

use sgt_core::constructions::{
    alternating_group, cyclic_group, direct_product, full_transformation_monoid, girth4_band,
    girth_2n_family, rees_matrix, symmetric_group, symmetric_inverse_monoid, zero_union,
};
use sgt_core::enumeration::{collect, EnumerationTask};
use sgt_core::{FiniteSemigroup, ReesMatrixData, SizeCaps};

/// Every semigroup of order at most 4 up to isomorphism, followed by a
/// handful of constructed ones.
pub static POOL: LazyLock<Vec<FiniteSemigroup>> = LazyLock::new(|| {
    let caps = SizeCaps::default();
    let mut pool = Vec::new();
    for order in 1..=4 {
        pool.extend(collect(&EnumerationTask::new(order)).unwrap());
    }
    let c2 = cyclic_group(2).unwrap();
    let sym3 = symmetric_group(3, &caps).unwrap().semigroup;
    pool.extend([
        sym3.clone(),
        alternating_group(4, &caps).unwrap().semigroup,
        symmetric_inverse_monoid(2, &caps).unwrap().semigroup,
        symmetric_inverse_monoid(3, &caps).unwrap().semigroup,
        full_transformation_monoid(2, &caps).unwrap().semigroup,
        full_transformation_monoid(3, &caps).unwrap().semigroup,
        girth4_band(),
        girth_2n_family(3).unwrap(),
        rees_matrix(&ReesMatrixData::new(c2.clone(), 2, 2, vec![vec![0, 0], vec![0, 1]]).unwrap()),
        zero_union(&[c2.clone(), sym3.clone()]).unwrap(),
        direct_product(&[sym3, c2], &caps).unwrap(),
    ]);
    pool
});

pub fn relabel(s: &FiniteSemigroup, perm: &[usize]) -> FiniteSemigroup {
    let n = s.order();
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            table[perm[a] * n + perm[b]] = perm[s.mul(a, b)];
        }
    }
    sgt_core::semigroup::make_semigroup(n, table).unwrap()
}

pub fn brute_inverses(s: &FiniteSemigroup, x: usize) -> Vec<usize> {
    s.elements()
        .filter(|&y| s.mul(s.mul(x, y), x) == x && s.mul(s.mul(y, x), y) == y)
        .collect()
}

pub fn brute_is_regular(s: &FiniteSemigroup) -> bool {
    s.elements()
        .all(|x| s.elements().any(|y| s.mul(s.mul(x, y), x) == x))
}

/// `x = x^(m+1)` for some `m ≥ 1`, by repeated multiplication.
pub fn brute_is_completely_regular(s: &FiniteSemigroup) -> bool {
    s.elements().all(|x| {
        let mut p = x;
        (1..=s.order()).any(|_| {
            p = s.mul(p, x);
            p == x
        })
    })
}

/// `S¹xS¹` for every `x`.
pub fn brute_ideal(s: &FiniteSemigroup, x: usize) -> BTreeSet<usize> {
    let mut ideal = BTreeSet::from([x]);
    for a in s.elements() {
        ideal.insert(s.mul(a, x));
        ideal.insert(s.mul(x, a));
        for b in s.elements() {
            ideal.insert(s.mul(s.mul(a, x), b));
        }
    }
    ideal
}

pub fn brute_is_simple(s: &FiniteSemigroup) -> bool {
    s.elements().all(|x| brute_ideal(s, x).len() == s.order())
}

/// Least `(i, p)` with `x^(i+p) = x^i`, from the list of powers.
pub fn brute_powers(s: &FiniteSemigroup, x: usize) -> (usize, usize) {
    let mut seq = vec![x];
    loop {
        let next = s.mul(*seq.last().unwrap(), x);
        if let Some(i) = seq.iter().position(|&y| y == next) {
            return (i + 1, seq.len() - i);
        }
        seq.push(next);
    }
}

/// Shortest left path length, by searching all simple paths of the
/// commuting graph in order of length.
pub fn brute_knit_degree(s: &FiniteSemigroup) -> Option<usize> {
    let center: Vec<bool> = s
        .elements()
        .map(|x| s.elements().all(|y| s.mul(x, y) == s.mul(y, x)))
        .collect();
    let vertices: Vec<usize> = s.elements().filter(|&x| !center[x]).collect();
    let adjacent = |x: usize, y: usize| x != y && s.mul(x, y) == s.mul(y, x);
    fn search(
        s: &FiniteSemigroup,
        path: &mut Vec<usize>,
        edges: usize,
        vertices: &[usize],
        adjacent: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        let last = *path.last().unwrap();
        if path.len() == edges + 1 {
            let first = path[0];
            return path.iter().all(|&x| s.mul(first, x) == s.mul(last, x));
        }
        for &v in vertices {
            if adjacent(last, v) && !path.contains(&v) {
                path.push(v);
                if search(s, path, edges, vertices, adjacent) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (1..vertices.len()).find(|&len| {
        vertices
            .iter()
            .any(|&start| search(s, &mut vec![start], len, &vertices, &adjacent))
    })
}
