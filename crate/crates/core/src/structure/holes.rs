use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HoleKind {
    Hole,
    Antihole,
}

/// An induced cycle of length at least five, as a vertex sequence.
///
/// Every such cycle contains an induced path `u-v-w-x` closed up by a path
/// from `x` back to `u` whose interior avoids `N[v] ∪ N[w]`; conversely the
/// shortest such closing path always yields a chordless cycle. So for each
/// edge `vw` and each end `x` we run one BFS through the vertices outside
/// `N[v] ∪ N[w]`.
pub fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    for v in 0..n {
        for w in g.neighbors(v).iter() {
            let mut closed = g.neighbors(v).union(g.neighbors(w));
            closed.insert(v);
            closed.insert(w);
            let interior = g.vertices().difference(&closed);
            let mut us = g.neighbors(v).difference(g.neighbors(w));
            us.remove(w);
            let mut xs = g.neighbors(w).difference(g.neighbors(v));
            xs.remove(v);
            for x in xs.iter() {
                let targets = us.difference(g.neighbors(x));
                if targets.is_empty() {
                    continue;
                }
                if let Some(path) = shortest_closing_path(g, x, &interior, &targets) {
                    let u = *path.last().unwrap();
                    let mut cycle = vec![u, v, w];
                    cycle.extend(&path[..path.len() - 1]);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

// BFS from `x` through `interior`, stopping at the first vertex of `targets`
// adjacent to a reached interior vertex. Returns x, interior..., target.
fn shortest_closing_path(g: &Graph, x: usize, interior: &VertexSet, targets: &VertexSet) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.order()];
    let mut seen = VertexSet::with_capacity(g.order());
    seen.insert(x);
    let mut queue = VecDeque::from([x]);
    while let Some(a) = queue.pop_front() {
        if a != x {
            if let Some(t) = g.neighbors(a).intersection(targets).first() {
                let mut path = vec![t, a];
                let mut cur = a;
                while parent[cur] != usize::MAX {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
        }
        for b in g.neighbors(a).intersection(interior).iter() {
            if seen.insert(b) {
                parent[b] = a;
                queue.push_back(b);
            }
        }
    }
    None
}

/// A hole in `g` or, failing that, a hole in its complement. `None` means
/// `g` is weakly chordal.
pub fn find_hole_or_antihole(g: &Graph) -> Option<(HoleKind, Vec<usize>)> {
    if let Some(c) = find_hole(g) {
        return Some((HoleKind::Hole, c));
    }
    find_hole(&g.complement()).map(|c| (HoleKind::Antihole, c))
}

#[cfg(test)]
pub(crate) fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    let distinct: VertexSet = cycle.iter().copied().collect();
    distinct.len() == k
        && (0..k).all(|i| {
            (0..k).all(|j| {
                let consecutive = (i + 1) % k == j || (j + 1) % k == i;
                i == j || g.has_edge(cycle[i], cycle[j]) == consecutive
            })
        })
}
