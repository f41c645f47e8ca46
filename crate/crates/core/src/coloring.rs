//! Vertex colourings and the b-colouring predicates.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// An assignment of colours `1..=k` to the vertices `0..n`, every colour used.
///
/// Properness is not enforced; see [`Coloring::is_proper`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        let k = colors.iter().copied().max().unwrap_or(0);
        if colors.contains(&0) {
            return Err(Error::InvalidColoring("colours start at 1".into()));
        }
        let mut used = vec![false; k + 1];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(missing) = (1..=k).find(|&c| !used[c]) {
            return Err(Error::InvalidColoring(format!("colour {missing} of 1..={k} is unused")));
        }
        Ok(Coloring { colors, k })
    }

    /// Relabels arbitrary positive colours onto `1..=k`, preserving their order.
    pub fn compacted(colors: &[usize]) -> Self {
        let mut distinct: Vec<usize> = colors.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let colors = colors.iter().map(|c| distinct.binary_search(c).unwrap() + 1).collect();
        Coloring {
            colors,
            k: distinct.len(),
        }
    }

    pub fn order(&self) -> usize {
        self.colors.len()
    }

    pub fn num_colors(&self) -> usize {
        self.k
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.colors
    }

    pub fn class(&self, c: usize) -> VertexSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == c)
            .map(|(v, _)| v)
            .collect()
    }

    fn check_order(&self, g: &Graph) -> Result<()> {
        if self.order() != g.order() {
            return Err(Error::SizeMismatch {
                coloring: self.order(),
                graph: g.order(),
            });
        }
        Ok(())
    }

    /// No edge is monochromatic.
    pub fn is_proper(&self, g: &Graph) -> Result<bool> {
        self.check_order(g)?;
        Ok(g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v]))
    }

    /// Whether `v` has a neighbour in every colour class other than its own.
    pub fn is_b_vertex(&self, g: &Graph, v: usize) -> bool {
        let mut seen = vec![false; self.k + 1];
        for u in g.neighbors(v).iter() {
            seen[self.colors[u]] = true;
        }
        (1..=self.k).all(|c| c == self.colors[v] || seen[c])
    }

    /// For each colour, the vertices of that colour that are b-vertices.
    pub fn b_vertices(&self, g: &Graph) -> Result<BTreeMap<usize, VertexSet>> {
        if !self.is_proper(g)? {
            return Err(Error::ImproperColoring);
        }
        let mut out: BTreeMap<usize, VertexSet> = (1..=self.k).map(|c| (c, VertexSet::new())).collect();
        for v in 0..self.order() {
            if self.is_b_vertex(g, v) {
                out.get_mut(&self.colors[v]).unwrap().insert(v);
            }
        }
        Ok(out)
    }

    /// Smallest colour whose class has no b-vertex.
    pub fn first_class_without_b_vertex(&self, g: &Graph) -> Option<usize> {
        let mut has = vec![false; self.k + 1];
        for v in 0..self.order() {
            if !has[self.colors[v]] && self.is_b_vertex(g, v) {
                has[self.colors[v]] = true;
            }
        }
        (1..=self.k).find(|&c| !has[c])
    }

    /// Proper, and every colour class owns a b-vertex. Any mismatch in order
    /// or properness yields `false`.
    pub fn is_b_coloring(&self, g: &Graph) -> bool {
        matches!(self.is_proper(g), Ok(true)) && self.first_class_without_b_vertex(g).is_none()
    }
}

impl TryFrom<Vec<usize>> for Coloring {
    type Error = Error;

    fn try_from(colors: Vec<usize>) -> Result<Self> {
        Coloring::new(colors)
    }
}

impl From<Coloring> for Vec<usize> {
    fn from(c: Coloring) -> Vec<usize> {
        c.colors
    }
}
