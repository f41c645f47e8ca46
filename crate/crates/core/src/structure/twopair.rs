//! Maximum cliques of weakly chordal graphs by two-pair contraction.
//!
//! Contracting a two-pair `{x, y}` (merging `y` into `x`, which then sees
//! `N(x) ∪ N(y)`) never changes ω: a clique through the merged vertex lies
//! inside `N(x)` or inside `N(y)`, since `a ∈ N(x) \ N(y)` adjacent to
//! `b ∈ N(y) \ N(x)` would give an induced path `x-a-b-y`. A weakly chordal
//! graph that is not a clique always has a two-pair, so contracting until a
//! clique remains and lifting back through the recorded merges yields a
//! maximum clique.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle;

/// A non-adjacent pair joined only by induced paths of two edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoPair {
    pub x: usize,
    pub y: usize,
}

/// One merge step: `merged` was folded into `kept`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contraction {
    pub kept: usize,
    pub merged: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CliqueBackend {
    #[default]
    TwoPairContraction,
    BranchAndBound,
}

fn reach_avoiding(adj: &[VertexSet], start: usize, within: &VertexSet) -> VertexSet {
    let mut seen: VertexSet = std::iter::once(start).collect();
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for w in adj[u].intersection(within).iter() {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen
}

fn two_pair_in(adj: &[VertexSet], alive: &VertexSet) -> Option<TwoPair> {
    for x in alive.iter() {
        for y in alive.iter().filter(|&y| y > x && !adj[x].contains(y)) {
            let common = adj[x].intersection(&adj[y]);
            let rest = alive.difference(&common);
            if !reach_avoiding(adj, x, &rest).contains(y) {
                return Some(TwoPair { x, y });
            }
        }
    }
    None
}

/// The lexicographically smallest non-adjacent pair separated by removing
/// its common neighbourhood.
pub fn find_two_pair(g: &Graph) -> Option<TwoPair> {
    two_pair_in(g.adjacency(), &g.vertices())
}

/// `g` with `y` merged into `x`: the result has `n - 1` vertices, `y` is
/// removed and later vertices shift down by one.
pub fn contract(g: &Graph, x: usize, y: usize) -> Graph {
    let label = |v: usize| if v > y { v - 1 } else { v };
    let kx = label(x);
    let keep: Vec<usize> = (0..g.order()).filter(|&v| v != y).collect();
    Graph::from_fn(keep.len(), |i, j| {
        let (a, b) = (keep[i], keep[j]);
        g.has_edge(a, b) || ((i == kx || j == kx) && g.has_edge(if a == x { b } else { a }, y))
    })
}

/// A maximum clique of a weakly chordal graph, with the contractions used.
pub fn weakly_chordal_max_clique(g: &Graph) -> Result<(VertexSet, Vec<Contraction>)> {
    let n = g.order();
    let mut adj = g.adjacency().to_vec();
    let mut alive = g.vertices();
    let mut steps = Vec::new();
    // neighbourhoods of (x, y) at contraction time, for lifting
    let mut history: Vec<(VertexSet, VertexSet)> = Vec::new();
    while !is_clique_in(&adj, &alive) {
        let TwoPair { x, y } = two_pair_in(&adj, &alive).ok_or(Error::NotWeaklyChordal)?;
        history.push((adj[x].clone(), adj[y].clone()));
        let mut merged = adj[x].union(&adj[y]);
        merged.remove(x);
        merged.remove(y);
        for v in adj[y].clone().iter() {
            adj[v].remove(y);
        }
        for v in merged.iter() {
            adj[v].insert(x);
        }
        adj[x] = merged;
        adj[y] = VertexSet::with_capacity(n);
        alive.remove(y);
        steps.push(Contraction { kept: x, merged: y });
    }
    let mut clique = alive;
    for (step, (nx, ny)) in steps.iter().zip(&history).rev() {
        if !clique.contains(step.kept) {
            continue;
        }
        let mut rest = clique.clone();
        rest.remove(step.kept);
        if rest.is_subset(nx) {
            continue;
        }
        if !rest.is_subset(ny) {
            return Err(Error::NotWeaklyChordal);
        }
        clique.remove(step.kept);
        clique.insert(step.merged);
    }
    debug_assert!(g.is_clique(&clique));
    if !g.is_clique(&clique) {
        return Err(Error::NotWeaklyChordal);
    }
    Ok((clique, steps))
}

fn is_clique_in(adj: &[VertexSet], alive: &VertexSet) -> bool {
    alive.iter().all(|v| {
        let mut rest = alive.clone();
        rest.remove(v);
        rest.is_subset(&adj[v])
    })
}

/// Same contract as [`weakly_chordal_max_clique`] with a selectable backend,
/// for differential testing.
pub fn weakly_chordal_max_clique_with(g: &Graph, backend: CliqueBackend) -> Result<VertexSet> {
    match backend {
        CliqueBackend::TwoPairContraction => Ok(weakly_chordal_max_clique(g)?.0),
        CliqueBackend::BranchAndBound => oracle::max_clique(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::clique_number;
    use crate::structure::find_hole_or_antihole;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    // all induced x-y paths, by DFS that never revisits a neighbour of an earlier path vertex
    pub(crate) fn induced_path_lengths(g: &Graph, x: usize, y: usize) -> Vec<usize> {
        fn go(g: &Graph, path: &mut Vec<usize>, y: usize, out: &mut Vec<usize>) {
            let last = *path.last().unwrap();
            for w in g.neighbors(last).iter() {
                if path.contains(&w) {
                    continue;
                }
                if path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
                    continue;
                }
                if w == y {
                    out.push(path.len());
                    continue;
                }
                path.push(w);
                go(g, path, y, out);
                path.pop();
            }
        }
        let mut out = Vec::new();
        go(g, &mut vec![x], y, &mut out);
        out
    }

    #[test]
    fn two_pair_examples() {
        assert_eq!(find_two_pair(&Graph::path(3)), Some(TwoPair { x: 0, y: 2 }));
        assert_eq!(find_two_pair(&Graph::cycle(5)), None);
        assert_eq!(find_two_pair(&Graph::cycle(4)), Some(TwoPair { x: 0, y: 2 }));
        assert_eq!(find_two_pair(&Graph::complete(4)), None);
    }

    #[test]
    fn c5_pairs_have_long_induced_paths() {
        let c5 = Graph::cycle(5);
        for x in 0..5 {
            for y in 0..5 {
                if x != y && !c5.has_edge(x, y) {
                    assert!(induced_path_lengths(&c5, x, y).contains(&3));
                }
            }
        }
    }

    #[test]
    fn contraction_examples() {
        let p3 = Graph::path(3);
        assert_eq!(contract(&p3, 0, 2), Graph::complete(2));
        let c4 = Graph::cycle(4);
        let k = contract(&c4, 0, 2);
        assert_eq!(k.order(), 3);
        assert_eq!(k.size(), 2);
    }

    #[test]
    fn weakly_chordal_examples() {
        let (k, steps) = weakly_chordal_max_clique(&Graph::complete(4)).unwrap();
        assert_eq!(k.len(), 4);
        assert!(steps.is_empty());
        let (k, _) = weakly_chordal_max_clique(&Graph::cycle(4)).unwrap();
        assert_eq!(k.len(), 2);
        assert!(Graph::cycle(4).is_clique(&k));
        assert!(matches!(
            weakly_chordal_max_clique(&Graph::cycle(5)),
            Err(Error::NotWeaklyChordal)
        ));
        assert_eq!(weakly_chordal_max_clique(&Graph::empty(0)).unwrap().0.len(), 0);
    }

    #[test]
    fn random_weakly_chordal_against_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let mut checked = 0;
        while checked < 60 {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.1..0.9);
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(p));
            if find_hole_or_antihole(&g).is_some() {
                continue;
            }
            checked += 1;
            let (k, steps) = weakly_chordal_max_clique(&g).unwrap();
            assert!(g.is_clique(&k));
            let omega = clique_number(&g).unwrap();
            assert_eq!(k.len(), omega);
            assert_eq!(
                weakly_chordal_max_clique_with(&g, CliqueBackend::BranchAndBound)
                    .unwrap()
                    .len(),
                omega
            );
            // replay: ω is unchanged by every contraction
            let mut h = g.clone();
            let mut labels: Vec<usize> = (0..n).collect();
            for s in steps {
                let x = labels.iter().position(|&l| l == s.kept).unwrap();
                let y = labels.iter().position(|&l| l == s.merged).unwrap();
                h = contract(&h, x, y);
                labels.remove(y);
                assert_eq!(clique_number(&h).unwrap(), omega);
            }
        }
    }
}
