//! Exhaustive reference solvers for χ, ω and b, and the definitional
//! b-perfection test. These are ground truth for the fast algorithms and are
//! only meant for small graphs; every search runs against a node budget and
//! fails with [`Error::BudgetExhausted`] instead of hanging.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::iso::IsoClasses;

pub const DEFAULT_BUDGET: u64 = 200_000_000;

pub const CHROMATIC_LIMIT: usize = 24;
pub const CLIQUE_LIMIT: usize = 64;
pub const B_CHROMATIC_LIMIT: usize = 12;
pub const B_PERFECT_LIMIT: usize = 10;

struct Budget {
    left: u64,
    total: u64,
}

impl Budget {
    fn new(total: u64) -> Self {
        Budget { left: total, total }
    }

    fn tick(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::BudgetExhausted(self.total));
        }
        self.left -= 1;
        Ok(())
    }
}

fn limit(g: &Graph, limit: usize) -> Result<()> {
    if g.order() > limit {
        return Err(Error::TooLarge { n: g.order(), limit });
    }
    Ok(())
}

/// A maximum clique, by branch and bound.
pub fn max_clique(g: &Graph) -> Result<VertexSet> {
    max_clique_with_budget(g, DEFAULT_BUDGET)
}

pub fn max_clique_with_budget(g: &Graph, budget: u64) -> Result<VertexSet> {
    limit(g, CLIQUE_LIMIT)?;
    let mut best = VertexSet::new();
    let mut budget = Budget::new(budget);
    expand_clique(g, &mut Vec::new(), g.vertices(), &mut best, &mut budget)?;
    Ok(best)
}

fn expand_clique(
    g: &Graph,
    current: &mut Vec<usize>,
    mut candidates: VertexSet,
    best: &mut VertexSet,
    budget: &mut Budget,
) -> Result<()> {
    budget.tick()?;
    if current.len() > best.len() {
        *best = current.iter().copied().collect();
    }
    while let Some(v) = candidates.first() {
        if current.len() + candidates.len() <= best.len() {
            break;
        }
        candidates.remove(v);
        current.push(v);
        expand_clique(g, current, candidates.intersection(g.neighbors(v)), best, budget)?;
        current.pop();
    }
    Ok(())
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    Ok(max_clique(g)?.len())
}

/// An optimal colouring; its number of colours is χ(g).
pub fn optimal_coloring(g: &Graph) -> Result<Coloring> {
    optimal_coloring_with_budget(g, DEFAULT_BUDGET)
}

pub fn optimal_coloring_with_budget(g: &Graph, budget: u64) -> Result<Coloring> {
    limit(g, CHROMATIC_LIMIT)?;
    let n = g.order();
    if n == 0 {
        return Coloring::new(Vec::new());
    }
    let mut budget = Budget::new(budget);
    let lower = max_clique_with_budget(g, budget.left)?.len().max(1);
    let order = search_order(g);
    for k in lower..=n {
        let mut colors = vec![0; n];
        if color_with(g, &order, 0, k, 0, &mut colors, &mut budget)? {
            return Coloring::new(colors);
        }
    }
    unreachable!("n colours always suffice")
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    Ok(optimal_coloring(g)?.num_colors())
}

// Degree-descending order where each next vertex has the most placed neighbours.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                (
                    order.iter().filter(|&&u| g.has_edge(u, v)).count(),
                    g.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        placed[v] = true;
        order.push(v);
    }
    order
}

fn color_with(
    g: &Graph,
    order: &[usize],
    depth: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
    budget: &mut Budget,
) -> Result<bool> {
    budget.tick()?;
    let Some(&v) = order.get(depth) else {
        return Ok(true);
    };
    for c in 1..=k.min(used + 1) {
        if g.neighbors(v).iter().any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if color_with(g, order, depth + 1, k, used.max(c), colors, budget)? {
            return Ok(true);
        }
    }
    colors[v] = 0;
    Ok(false)
}

/// The largest `d` such that at least `d` vertices have degree `>= d - 1`;
/// no b-colouring uses more colours.
pub fn m_degree(g: &Graph) -> usize {
    let degs = g.degree_sequence();
    (0..=g.order())
        .rev()
        .find(|&d| d == 0 || degs[d - 1] + 1 >= d)
        .unwrap_or(0)
}

/// b(g) together with a b-colouring attaining it.
///
/// Colourings are enumerated in canonical form (each new colour first appears
/// on the smallest uncoloured vertex), so each partition is visited once.
pub fn b_chromatic_number(g: &Graph) -> Result<(usize, Coloring)> {
    b_chromatic_number_with_budget(g, DEFAULT_BUDGET)
}

pub fn b_chromatic_number_with_budget(g: &Graph, budget: u64) -> Result<(usize, Coloring)> {
    limit(g, B_CHROMATIC_LIMIT)?;
    let n = g.order();
    if n == 0 {
        return Ok((0, Coloring::new(Vec::new())?));
    }
    let mut search = BSearch {
        g,
        colors: vec![0; n],
        best: 0,
        witness: Vec::new(),
        cap: m_degree(g),
        budget: Budget::new(budget),
    };
    search.run(0, 0)?;
    let witness = Coloring::new(search.witness)?;
    Ok((search.best, witness))
}

struct BSearch<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    best: usize,
    witness: Vec<usize>,
    cap: usize,
    budget: Budget,
}

impl BSearch<'_> {
    fn run(&mut self, v: usize, used: usize) -> Result<()> {
        self.budget.tick()?;
        let n = self.g.order();
        if self.best == self.cap || used + (n - v) <= self.best {
            return Ok(());
        }
        if v == n {
            let c = Coloring::new(self.colors.clone())?;
            if c.first_class_without_b_vertex(self.g).is_none() {
                self.best = used;
                self.witness = self.colors.clone();
            }
            return Ok(());
        }
        for c in 1..=(used + 1).min(self.cap) {
            if self.g.neighbors(v).iter().any(|u| u < v && self.colors[u] == c) {
                continue;
            }
            self.colors[v] = c;
            self.run(v + 1, used.max(c))?;
        }
        self.colors[v] = 0;
        Ok(())
    }
}

/// An induced subgraph `H` with b(H) > χ(H), if any. Subgraphs are
/// examined by increasing order and isomorphic copies are skipped.
pub fn b_imperfect_subgraph(g: &Graph) -> Result<Option<VertexSet>> {
    limit(g, B_PERFECT_LIMIT)?;
    let n = g.order();
    let mut masks: Vec<u32> = (1..(1u32 << n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let mut seen = IsoClasses::new();
    for mask in masks {
        let s: VertexSet = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let h = g.induced_subgraph(&s)?;
        if !seen.insert(h.clone(), ()) {
            continue;
        }
        let chi = chromatic_number(&h)?;
        let (b, _) = b_chromatic_number(&h)?;
        if b != chi {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Every induced subgraph has b = χ.
pub fn is_b_perfect_oracle(g: &Graph) -> Result<bool> {
    Ok(b_imperfect_subgraph(g)?.is_none())
}

/// b(g) > χ(g) and every one-vertex-deleted subgraph is b-perfect.
pub fn is_minimally_b_imperfect(g: &Graph) -> Result<bool> {
    limit(g, B_PERFECT_LIMIT + 1)?;
    let (b, _) = b_chromatic_number(g)?;
    if b <= chromatic_number(g)? {
        return Ok(false);
    }
    for v in 0..g.order() {
        let mut s = g.vertices();
        s.remove(v);
        if !is_b_perfect_oracle(&g.induced_subgraph(&s)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Graph::cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::path(5)).unwrap(), 2);
        for n in 0..=8 {
            assert_eq!(chromatic_number(&Graph::complete(n)).unwrap(), n);
        }
        let c = optimal_coloring(&Graph::cycle(7)).unwrap();
        assert!(c.is_proper(&Graph::cycle(7)).unwrap());
        assert_eq!(c.num_colors(), 3);
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&Graph::cycle(5)).unwrap(), 2);
        assert_eq!(clique_number(&Graph::cycle(6).complement()).unwrap(), 3);
        let k5_minus = Graph::from_fn(5, |u, v| (u, v) != (0, 1));
        assert_eq!(clique_number(&k5_minus).unwrap(), 4);
        assert_eq!(clique_number(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(clique_number(&Graph::empty(3)).unwrap(), 1);
    }

    #[test]
    fn b_chromatic_examples() {
        for n in 1..=6 {
            assert_eq!(b_chromatic_number(&Graph::complete(n)).unwrap().0, n);
        }
        let (b, w) = b_chromatic_number(&Graph::path(5)).unwrap();
        assert_eq!(b, 3);
        assert!(w.is_b_coloring(&Graph::path(5)));
        assert_eq!(b_chromatic_number(&Graph::cycle(5)).unwrap().0, 3);
    }

    #[test]
    fn b_perfect_oracle_examples() {
        assert!(is_b_perfect_oracle(&Graph::path(4)).unwrap());
        assert!(!is_b_perfect_oracle(&Graph::path(5)).unwrap());
        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(is_b_perfect_oracle(&two_triangles).unwrap());
        assert!(matches!(
            is_b_perfect_oracle(&Graph::empty(11)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn minimal_imperfection_examples() {
        assert!(is_minimally_b_imperfect(&Graph::path(5)).unwrap());
        assert!(!is_minimally_b_imperfect(&Graph::path(6)).unwrap());
        assert!(!is_minimally_b_imperfect(&Graph::cycle(5)).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::cycle(9).complement();
        assert!(matches!(
            optimal_coloring_with_budget(&g, 5),
            Err(Error::BudgetExhausted(5))
        ));
        assert!(matches!(
            b_chromatic_number_with_budget(&g, 5),
            Err(Error::BudgetExhausted(5))
        ));
    }

    #[test]
    fn m_degree_bound() {
        assert_eq!(m_degree(&Graph::path(5)), 3);
        assert_eq!(m_degree(&Graph::complete(4)), 4);
        assert_eq!(m_degree(&Graph::empty(3)), 1);
        assert_eq!(m_degree(&Graph::empty(0)), 0);
    }
}
