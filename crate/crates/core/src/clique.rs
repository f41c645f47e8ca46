//! Maximum cliques of b-perfect graphs.
//!
//! [`clique`] runs the five-step reduction: drop a dominated non-neighbour,
//! shrink a non-clique homogeneous set to one of its maximum cliques, and
//! finish on a `C5`, a weakly chordal graph, or a special boat.
//! [`clique_via_module_tree`] computes the same thing bottom-up over the
//! modular decomposition. All vertex numbers in results and traces refer to
//! the input graph.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::find_forbidden;
use crate::graph::{Graph, VertexSet};
use crate::structure::{
    extend_to_special_boat, find_comparable_nonadjacent, find_hole_or_antihole, find_proper_homogeneous_nonclique,
    find_small_boat, is_c5, modular_decomposition, special_boat_max_clique, weakly_chordal_max_clique, Contraction,
    ModuleKind,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum CliqueStep {
    /// `dominated` had no edge to `dominator` and `N(dominated) ⊆ N(dominator)`.
    RemovedDominated {
        dominated: usize,
        dominator: usize,
    },
    /// `set` was homogeneous and not a clique; only its clique `kept` stayed.
    /// `inner` is the trace of the run on the set itself.
    HomogeneousSet {
        set: VertexSet,
        kept: VertexSet,
        inner: Vec<CliqueStep>,
    },
    C5 {
        edge: (usize, usize),
    },
    WeaklyChordal {
        contractions: Vec<Contraction>,
    },
    SpecialBoat {
        q: usize,
        a: VertexSet,
        b: VertexSet,
    },
    /// A decomposition tree node and the clique chosen for it.
    Module {
        kind: ModuleKind,
        members: VertexSet,
        kept: VertexSet,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueResult {
    pub clique: VertexSet,
    pub trace: Vec<CliqueStep>,
}

fn guard(g: &Graph) -> Result<()> {
    match find_forbidden(g) {
        Some((index, embedding)) => Err(Error::NotBPerfect { index, embedding }),
        None => Ok(()),
    }
}

fn finish(g: &Graph, clique: VertexSet, trace: Vec<CliqueStep>) -> Result<CliqueResult> {
    if !g.is_clique(&clique) {
        return Err(Error::StructureViolation("result is not a clique".into()));
    }
    Ok(CliqueResult { clique, trace })
}

/// A maximum clique of a b-perfect graph. Inputs with a forbidden induced
/// subgraph are refused with [`Error::NotBPerfect`].
pub fn clique(g: &Graph) -> Result<CliqueResult> {
    guard(g)?;
    clique_unchecked(g)
}

/// [`clique`] without the b-perfectness check. The answer is always a clique
/// of `g` but is only guaranteed maximum on b-perfect graphs; other inputs
/// may also fail with [`Error::StructureViolation`].
pub fn clique_unchecked(g: &Graph) -> Result<CliqueResult> {
    let mut trace = Vec::new();
    let k = run(g, g.vertices(), &mut trace)?;
    finish(g, k, trace)
}

// `g[alive]` relabelled onto 0..k, with the map back.
fn sub(g: &Graph, alive: &VertexSet) -> (Graph, Vec<usize>) {
    let map = alive.to_vec();
    (g.induced_by_list(&map), map)
}

fn lift(map: &[usize], s: &VertexSet) -> VertexSet {
    s.iter().map(|v| map[v]).collect()
}

fn remove_dominated(g: &Graph, alive: &mut VertexSet, trace: &mut Vec<CliqueStep>) {
    loop {
        let (h, map) = sub(g, alive);
        let Some((x, y)) = find_comparable_nonadjacent(&h) else {
            return;
        };
        alive.remove(map[y]);
        trace.push(CliqueStep::RemovedDominated {
            dominated: map[y],
            dominator: map[x],
        });
    }
}

fn run(g: &Graph, mut alive: VertexSet, trace: &mut Vec<CliqueStep>) -> Result<VertexSet> {
    remove_dominated(g, &mut alive, trace);
    resolve(g, alive, trace)
}

// Steps two to five on `g[alive]`, which has no dominated non-neighbour.
fn resolve(g: &Graph, mut alive: VertexSet, trace: &mut Vec<CliqueStep>) -> Result<VertexSet> {
    loop {
        let (h, map) = sub(g, &alive);
        if h.is_clique(&h.vertices()) {
            return Ok(alive);
        }
        if let Some(set) = find_proper_homogeneous_nonclique(&h) {
            let set = lift(&map, &set);
            let mut inner = Vec::new();
            let kept = run(g, set.clone(), &mut inner)?;
            alive.difference_with(&set.difference(&kept));
            debug_assert!(find_comparable_nonadjacent(&sub(g, &alive).0).is_none());
            trace.push(CliqueStep::HomogeneousSet { set, kept, inner });
            continue;
        }
        if is_c5(&h) {
            let (u, v) = h.edges()[0];
            let edge = (map[u], map[v]);
            trace.push(CliqueStep::C5 { edge });
            return Ok([edge.0, edge.1].into_iter().collect());
        }
        if find_hole_or_antihole(&h).is_none() {
            let (k, steps) = weakly_chordal_max_clique(&h)?;
            let contractions = steps
                .into_iter()
                .map(|c| Contraction {
                    kept: map[c.kept],
                    merged: map[c.merged],
                })
                .collect();
            trace.push(CliqueStep::WeaklyChordal { contractions });
            return Ok(lift(&map, &k));
        }
        let seed = find_small_boat(&h)
            .ok_or_else(|| Error::StructureViolation("not weakly chordal, not C5, and no small boat".into()))?;
        let boat = extend_to_special_boat(&h, &seed).map_err(|e| Error::StructureViolation(e.to_string()))?;
        let k = special_boat_max_clique(&h, &boat)?;
        trace.push(CliqueStep::SpecialBoat {
            q: boat.q,
            a: lift(&map, &boat.side_a()),
            b: lift(&map, &boat.side_b()),
        });
        return Ok(lift(&map, &k));
    }
}

/// A maximum clique computed bottom-up over the modular decomposition:
/// leaves are their own clique, a parallel node keeps its largest child
/// clique, a series node the union of its child cliques, and a prime node is
/// solved on the subgraph induced by its child cliques.
pub fn clique_via_module_tree(g: &Graph) -> Result<CliqueResult> {
    guard(g)?;
    clique_via_module_tree_unchecked(g)
}

pub fn clique_via_module_tree_unchecked(g: &Graph) -> Result<CliqueResult> {
    let tree = modular_decomposition(g);
    let mut kept: Vec<VertexSet> = vec![VertexSet::new(); tree.nodes().len()];
    let mut trace = Vec::new();
    for i in tree.post_order() {
        let node = tree.node(i);
        let children = node.children.iter().map(|&c| &kept[c]);
        let k = match node.kind {
            ModuleKind::Leaf => node.members.clone(),
            ModuleKind::Parallel => {
                children.fold(
                    VertexSet::new(),
                    |best, k| if k.len() > best.len() { k.clone() } else { best },
                )
            }
            ModuleKind::Series => children.fold(VertexSet::new(), |acc, k| acc.union(k)),
            ModuleKind::Prime => {
                let mut alive = children.fold(VertexSet::new(), |acc, k| acc.union(k));
                remove_dominated(g, &mut alive, &mut trace);
                resolve(g, alive, &mut trace)?
            }
        };
        if node.kind != ModuleKind::Leaf {
            trace.push(CliqueStep::Module {
                kind: node.kind,
                members: node.members.clone(),
                kept: k.clone(),
            });
        }
        kept[i] = k;
    }
    let k = kept.into_iter().next().unwrap_or_default();
    finish(g, k, trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::clique_number;

    #[test]
    fn complete_graphs() {
        for n in 0..=6 {
            let r = clique(&Graph::complete(n)).unwrap();
            assert_eq!(r.clique.len(), n);
            assert!(r.trace.is_empty());
        }
    }

    #[test]
    fn antihole_six_goes_through_the_boat() {
        let g = Graph::cycle(6).complement();
        let r = clique(&g).unwrap();
        assert_eq!(r.clique.len(), 3);
        assert_eq!(r.clique.len(), clique_number(&g).unwrap());
        assert!(matches!(r.trace.last(), Some(CliqueStep::SpecialBoat { q: 3, .. })));
        assert_eq!(clique_via_module_tree(&g).unwrap().clique.len(), 3);
    }

    #[test]
    fn c5_returns_an_edge() {
        let r = clique(&Graph::cycle(5)).unwrap();
        assert_eq!(r.clique.len(), 2);
        assert_eq!(r.trace, vec![CliqueStep::C5 { edge: (0, 1) }]);
    }

    #[test]
    fn module_tree_examples() {
        let tt = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_eq!(clique_via_module_tree(&tt).unwrap().clique.len(), 3);

        // vertices 0,1 form the K2, vertices 2,3 the non-adjacent pair
        let g = Graph::complete(2).join(&Graph::empty(2));
        let r = clique_via_module_tree(&g).unwrap();
        let expected: VertexSet = [0, 1, 2].into_iter().collect();
        assert_eq!(r.clique, expected);
        assert_eq!(clique_number(&g).unwrap(), 3);
    }

    #[test]
    fn guard_refuses_forbidden_graphs() {
        let p5 = Graph::path(5);
        assert!(matches!(clique(&p5), Err(Error::NotBPerfect { index: 1, .. })));
        assert!(matches!(
            clique_via_module_tree(&p5),
            Err(Error::NotBPerfect { index: 1, .. })
        ));
        assert_eq!(clique_unchecked(&p5).unwrap().clique.len(), 2);
    }

    #[test]
    fn blown_up_c5() {
        // C5 with vertex 0 blown up into a stable pair {0, 5}
        let mut edges = Graph::cycle(5).edges();
        edges.extend([(1, 5), (4, 5)]);
        let g = Graph::from_edges(6, &edges).unwrap();
        let r = clique_unchecked(&g).unwrap();
        assert_eq!(r.clique.len(), 2);
        assert!(g.is_clique(&r.clique));
    }

    #[test]
    fn empty_graph() {
        assert!(clique(&Graph::empty(0)).unwrap().clique.is_empty());
        assert!(clique_via_module_tree(&Graph::empty(0)).unwrap().clique.is_empty());
    }
}
