//! The 22 minimal b-imperfect graphs, induced-subgraph search, and the
//! polynomial recogniser: a graph is b-perfect exactly when it contains none
//! of them as an induced subgraph.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// Adjacency data for F1..F22. Vertices of each drawing are numbered top to
/// bottom, then left to right.
const PATTERNS: [(usize, &[(usize, usize)]); 22] = [
    (5, &[(0, 2), (0, 3), (1, 3), (1, 4)]),
    (7, &[(0, 3), (0, 4), (1, 2), (1, 5), (2, 6)]),
    (9, &[(0, 3), (0, 4), (1, 5), (1, 6), (2, 7), (2, 8)]),
    (
        6,
        &[(0, 1), (0, 2), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (3, 5), (4, 5)],
    ),
    (
        7,
        &[
            (0, 2),
            (0, 3),
            (0, 5),
            (1, 3),
            (1, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 6),
        ],
    ),
    (
        8,
        &[
            (0, 2),
            (0, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 6),
            (3, 6),
            (4, 5),
            (4, 7),
            (5, 7),
        ],
    ),
    (
        8,
        &[
            (0, 2),
            (0, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 6),
            (3, 4),
            (3, 6),
            (4, 5),
            (4, 7),
            (5, 7),
        ],
    ),
    (
        8,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (2, 3),
            (3, 4),
            (3, 5),
            (3, 6),
            (3, 7),
            (4, 5),
            (5, 6),
            (6, 7),
        ],
    ),
    (
        10,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (2, 3),
            (3, 4),
            (3, 5),
            (3, 6),
            (3, 7),
            (3, 8),
            (3, 9),
            (4, 5),
            (5, 6),
            (7, 8),
            (8, 9),
        ],
    ),
    (
        6,
        &[
            (0, 1),
            (0, 2),
            (0, 4),
            (1, 2),
            (1, 3),
            (1, 5),
            (2, 3),
            (2, 4),
            (3, 5),
            (4, 5),
        ],
    ),
    (
        7,
        &[
            (0, 2),
            (0, 3),
            (0, 5),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 5),
            (2, 6),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 6),
        ],
    ),
    (
        8,
        &[
            (0, 1),
            (0, 5),
            (1, 2),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 6),
            (2, 7),
            (3, 6),
            (4, 5),
            (5, 6),
            (6, 7),
        ],
    ),
    (
        8,
        &[
            (0, 1),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 4),
            (1, 6),
            (2, 3),
            (2, 5),
            (2, 7),
            (3, 6),
            (3, 7),
            (4, 5),
            (5, 6),
            (6, 7),
        ],
    ),
    (
        8,
        &[
            (0, 1),
            (0, 2),
            (0, 4),
            (0, 5),
            (1, 3),
            (1, 6),
            (1, 7),
            (2, 3),
            (2, 4),
            (2, 6),
            (3, 5),
            (3, 7),
            (4, 5),
            (5, 6),
            (6, 7),
        ],
    ),
    (
        8,
        &[
            (0, 1),
            (0, 2),
            (0, 4),
            (0, 6),
            (1, 3),
            (1, 5),
            (1, 7),
            (2, 3),
            (2, 5),
            (2, 6),
            (3, 4),
            (3, 7),
            (4, 5),
            (4, 6),
            (5, 7),
            (6, 7),
        ],
    ),
    (6, &[(0, 1), (0, 2), (0, 3), (1, 3), (1, 4), (2, 3), (2, 5), (4, 5)]),
    (
        6,
        &[(0, 1), (0, 2), (0, 3), (1, 3), (1, 4), (2, 3), (2, 5), (3, 5), (4, 5)],
    ),
    (
        8,
        &[
            (0, 1),
            (0, 3),
            (1, 4),
            (1, 5),
            (1, 6),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (3, 7),
            (4, 6),
            (5, 7),
            (6, 7),
        ],
    ),
    (
        8,
        &[
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 6),
            (3, 7),
            (4, 5),
            (4, 6),
            (5, 7),
            (6, 7),
        ],
    ),
    (
        8,
        &[
            (0, 1),
            (0, 3),
            (0, 5),
            (1, 2),
            (1, 4),
            (1, 6),
            (2, 3),
            (2, 4),
            (3, 5),
            (3, 7),
            (4, 5),
            (4, 7),
            (5, 6),
            (6, 7),
        ],
    ),
    (
        8,
        &[
            (0, 1),
            (0, 3),
            (0, 5),
            (1, 2),
            (1, 4),
            (1, 6),
            (2, 3),
            (2, 4),
            (2, 6),
            (3, 5),
            (3, 7),
            (4, 5),
            (4, 7),
            (5, 6),
            (6, 7),
        ],
    ),
    (
        8,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 6),
            (2, 3),
            (2, 7),
            (3, 4),
            (3, 6),
            (4, 7),
            (5, 6),
            (5, 7),
            (6, 7),
        ],
    ),
];

const ALIASES: [(usize, &str); 4] = [(1, "P5"), (2, "P4 + P3"), (3, "3P3"), (10, "complement of P6")];

/// One obstruction of the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenPattern {
    /// 1-based index.
    pub index: usize,
    pub name: String,
    pub graph: Graph,
    pub alias: Option<&'static str>,
}

/// F1..F22, in index order.
pub fn family() -> Vec<ForbiddenPattern> {
    PATTERNS
        .iter()
        .enumerate()
        .map(|(i, &(n, edges))| ForbiddenPattern {
            index: i + 1,
            name: format!("F{}", i + 1),
            graph: Graph::from_edges(n, edges).expect("pattern data is well formed"),
            alias: ALIASES.iter().find(|(k, _)| *k == i + 1).map(|(_, a)| *a),
        })
        .collect()
}

/// The two six-vertex boats.
///
/// The first has parts `A0..A2 = {0},{1},{2}` and `B0..B2 = {3},{4},{5}`;
/// the second has `A1..A3 = {0},{1},{2}` and `B1..B3 = {3},{4},{5}` with
/// empty `A0`, `B0`.
pub fn small_boats() -> [Graph; 2] {
    let sides = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)];
    let mut q2: Vec<(usize, usize)> = sides.to_vec();
    q2.extend([(1, 4), (2, 5)]);
    let mut q3: Vec<(usize, usize)> = sides.to_vec();
    q3.extend([(0, 3), (1, 4), (2, 5)]);
    [Graph::from_edges(6, &q2).unwrap(), Graph::from_edges(6, &q3).unwrap()]
}

/// An induced copy of a pattern: pattern vertex `i` sits at host vertex `map[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }

    /// Injective, in range, and preserving both edges and non-edges.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        let k = pattern.order();
        self.map.len() == k
            && self.map.iter().all(|&v| v < host.order())
            && self.image().len() == k
            && (0..k).all(|i| (0..i).all(|j| pattern.has_edge(i, j) == host.has_edge(self.map[i], self.map[j])))
    }
}

/// Searches for an induced copy of `pattern` in `host`.
///
/// Pattern vertices are placed one at a time, each next vertex having the most
/// already placed neighbours; candidate host vertices must match every
/// placed edge and non-edge and have large enough degree.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let k = pattern.order();
    if k > host.order() {
        return None;
    }
    let order = placement_order(pattern);
    let mut map = vec![usize::MAX; k];
    let mut used = VertexSet::with_capacity(host.order());
    let all = host.vertices();
    if place(host, pattern, &order, 0, &all, &mut map, &mut used) {
        Some(Embedding { map })
    } else {
        None
    }
}

fn placement_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.order();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| pattern.has_edge(u, v)).count();
                (links, pattern.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

fn place(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    all: &VertexSet,
    map: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    let Some(&p) = order.get(depth) else {
        return true;
    };
    let mut cand = all.difference(used);
    for &q in &order[..depth] {
        let hq = map[q];
        if pattern.has_edge(p, q) {
            cand.intersect_with(host.neighbors(hq));
        } else {
            cand.difference_with(host.neighbors(hq));
        }
        if cand.is_empty() {
            return false;
        }
    }
    let need = pattern.degree(p);
    for w in cand.iter() {
        if host.degree(w) < need {
            continue;
        }
        map[p] = w;
        used.insert(w);
        if place(host, pattern, order, depth + 1, all, map, used) {
            return true;
        }
        used.remove(w);
    }
    map[p] = usize::MAX;
    false
}

/// The lowest-index member of the family occurring in `g`, with a witness.
pub fn find_forbidden(g: &Graph) -> Option<(usize, Embedding)> {
    find_forbidden_in(g, &family())
}

/// As [`find_forbidden`] against a prebuilt family, to avoid rebuilding it in loops.
pub fn find_forbidden_in(g: &Graph, patterns: &[ForbiddenPattern]) -> Option<(usize, Embedding)> {
    patterns
        .iter()
        .find_map(|p| find_induced(g, &p.graph).map(|e| (p.index, e)))
}

/// Recognises b-perfect graphs as those containing no member of the family.
pub fn is_b_perfect(g: &Graph) -> bool {
    find_forbidden(g).is_none()
}

/// Whether `g` contains any of the listed family members (1-based indices).
pub fn contains_any(g: &Graph, indices: &[usize]) -> bool {
    let fam = family();
    indices.iter().any(|&i| find_induced(g, &fam[i - 1].graph).is_some())
}
