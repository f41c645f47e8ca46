//! All graphs of small order up to isomorphism.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::IsoClasses;

pub const ENUMERATION_LIMIT: usize = 8;

/// One representative of every isomorphism class on exactly `n` vertices,
/// for each `n` in `1..=max_n`, sorted by order, size and graph6-style
/// adjacency so the output is deterministic.
///
/// Classes on `n` vertices are grown from those on `n - 1` by adding a vertex
/// with every possible neighbourhood.
pub fn enumerate_graphs(max_n: usize) -> Result<Vec<Graph>> {
    if max_n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            n: max_n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut level = vec![Graph::empty(0)];
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut classes = IsoClasses::new();
        for g in &level {
            for mask in 0u32..1 << (n - 1) {
                let mut edges = g.edges();
                edges.extend((0..n - 1).filter(|v| mask >> v & 1 == 1).map(|v| (v, n - 1)));
                classes.insert(Graph::from_edges(n, &edges)?, ());
            }
        }
        let mut next: Vec<Graph> = classes.into_graphs().map(|(g, _)| g).collect();
        next.sort_by_cached_key(|g| (g.size(), g.edges()));
        out.extend(next.iter().cloned());
        level = next;
    }
    Ok(out)
}
