//! The b-greedy colouring procedure: colour greedily, then keep dissolving a
//! colour class that has no b-vertex until every class has one. The result
//! is always a b-colouring, and on b-perfect graphs it is optimal.

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex moved out of the eliminated class, with its new colour before renumbering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recolor {
    pub vertex: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationRound {
    /// The dissolved colour, in the numbering in force before this round.
    pub eliminated: usize,
    pub recolors: Vec<Recolor>,
    /// Colouring after the round, renumbered onto `1..=k-1`.
    pub result: Coloring,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationTrace {
    pub initial: Coloring,
    pub rounds: Vec<EliminationRound>,
    pub last: Coloring,
}

/// Default vertex order: descending degree, ties by index.
pub fn default_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

fn check_order(g: &Graph, order: &[usize]) -> Result<()> {
    let mut seen = vec![false; g.order()];
    if order.len() != g.order() {
        return Err(Error::BadOrder);
    }
    for &v in order {
        if v >= g.order() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::BadOrder);
        }
    }
    Ok(())
}

/// First-fit colouring in the given order.
pub fn initial_coloring(g: &Graph, order: &[usize]) -> Result<Coloring> {
    check_order(g, order)?;
    let mut colors = vec![0usize; g.order()];
    for &v in order {
        colors[v] = smallest_missing(g, &colors, v, 0);
    }
    Coloring::new(colors)
}

// Smallest colour >= 1, other than `skip`, absent from the neighbourhood of `v`.
fn smallest_missing(g: &Graph, colors: &[usize], v: usize, skip: usize) -> usize {
    let mut taken = vec![false; g.degree(v) + 3];
    for u in g.neighbors(v).iter() {
        if let Some(t) = taken.get_mut(colors[u]) {
            *t = true;
        }
    }
    (1..)
        .find(|&c| c != skip && !taken.get(c).copied().unwrap_or(false))
        .unwrap()
}

/// Dissolves colour class `dead`, which must have no b-vertex. Its vertices
/// are handled in ascending order; each takes the smallest colour missing
/// from its neighbourhood. Colours above `dead` then shift down by one.
pub fn eliminate_color(g: &Graph, c: &Coloring, dead: usize) -> Result<(Coloring, Vec<Recolor>)> {
    if !c.is_proper(g)? {
        return Err(Error::ImproperColoring);
    }
    let class = c.class(dead);
    if class.iter().any(|v| c.is_b_vertex(g, v)) {
        return Err(Error::HasBVertex(dead));
    }
    let mut colors = c.as_slice().to_vec();
    let mut recolors = Vec::with_capacity(class.len());
    for v in class.iter() {
        let to = smallest_missing(g, &colors, v, dead);
        // a vertex that is not a b-vertex misses some colour of 1..=k
        if to > c.num_colors() {
            return Err(Error::NoFreeColor(v));
        }
        colors[v] = to;
        recolors.push(Recolor { vertex: v, to });
    }
    let renumbered: Vec<usize> = colors.iter().map(|&x| if x > dead { x - 1 } else { x }).collect();
    let out = Coloring::new(renumbered)?;
    debug_assert!(out.is_proper(g).unwrap());
    Ok((out, recolors))
}

/// Greedy colouring in `order` followed by class elimination to a fixpoint.
pub fn b_greedy(g: &Graph, order: &[usize]) -> Result<(Coloring, EliminationTrace)> {
    let initial = initial_coloring(g, order)?;
    let mut current = initial.clone();
    let mut rounds = Vec::new();
    while let Some(dead) = current.first_class_without_b_vertex(g) {
        let (next, recolors) = eliminate_color(g, &current, dead)?;
        assert_eq!(next.num_colors() + 1, current.num_colors());
        rounds.push(EliminationRound {
            eliminated: dead,
            recolors,
            result: next.clone(),
        });
        current = next;
    }
    let trace = EliminationTrace {
        initial,
        rounds,
        last: current.clone(),
    };
    Ok((current, trace))
}
