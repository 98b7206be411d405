use std::collections::VecDeque;

use super::SimpleGraph;

/// Length of a shortest cycle, `None` for forests.
///
/// BFS from every root; a non-tree edge between depths `d1` and `d2` closes a
/// closed walk of length `d1 + d2 + 1`, which contains a cycle at most that
/// long and is exactly a shortest cycle when the root lies on one.
pub fn girth(g: &SimpleGraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
        if best == Some(3) {
            break;
        }
    }
    best
}
