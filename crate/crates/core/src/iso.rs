//! Isomorphism testing for small graphs.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`are_isomorphic`].
pub const ISO_LIMIT: usize = 12;

/// Per-vertex signature: degree, then the sorted degrees of its neighbours.
fn signatures(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.order())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

/// An isomorphism-invariant fingerprint; equal graphs up to isomorphism
/// always share it.
pub fn invariant_key(g: &Graph) -> Vec<usize> {
    let mut sigs: Vec<(usize, Vec<usize>, usize)> = signatures(g)
        .into_iter()
        .enumerate()
        .map(|(v, (d, nd))| {
            let tri = g
                .neighbors(v)
                .iter()
                .map(|u| g.neighbors(u).intersection(g.neighbors(v)).len())
                .sum::<usize>()
                / 2;
            (d, nd, tri)
        })
        .collect();
    sigs.sort();
    let mut key = vec![g.order(), g.size()];
    for (d, nd, tri) in sigs {
        key.push(d);
        key.push(tri);
        key.extend(nd);
    }
    key
}

/// True iff some bijection maps edges to edges and non-edges to non-edges.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.order() > ISO_LIMIT {
            return Err(Error::TooLarge {
                n: x.order(),
                limit: ISO_LIMIT,
            });
        }
    }
    Ok(isomorphic_unchecked(g, h))
}

pub(crate) fn isomorphic_unchecked(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    let n = g.order();
    let sg = signatures(g);
    let sh = signatures(h);
    {
        let mut a = sg.clone();
        let mut b = sh.clone();
        a.sort();
        b.sort();
        if a != b {
            return false;
        }
    }
    // connectivity-aware order: each next vertex has the most already placed neighbours
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| g.has_edge(u, v)).count();
                (links, g.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, h, &sg, &sh, &order, 0, &mut image, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    sg: &[(usize, Vec<usize>)],
    sh: &[(usize, Vec<usize>)],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..h.order() {
        if used[w] || sg[v] != sh[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend(g, h, sg, sh, order, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
    }
    image[v] = usize::MAX;
    false
}

/// A set of graphs up to isomorphism, bucketed by [`invariant_key`].
#[derive(Debug, Default)]
pub struct IsoClasses<T = ()> {
    buckets: HashMap<Vec<usize>, Vec<(Graph, T)>>,
    len: usize,
}

impl<T> IsoClasses<T> {
    pub fn new() -> Self {
        IsoClasses {
            buckets: HashMap::new(),
            len: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, g: &Graph) -> Option<&T> {
        self.buckets
            .get(&invariant_key(g))?
            .iter()
            .find(|(rep, _)| isomorphic_unchecked(rep, g))
            .map(|(_, t)| t)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Graph, &T)> {
        self.buckets.values().flatten().map(|(g, t)| (g, t))
    }

    pub fn into_graphs(self) -> impl Iterator<Item = (Graph, T)> {
        self.buckets.into_values().flatten()
    }

    /// Adds `g` unless an isomorphic graph is present; returns whether it was added.
    pub fn insert(&mut self, g: Graph, value: T) -> bool {
        let bucket = self.buckets.entry(invariant_key(&g)).or_default();
        if bucket.iter().any(|(rep, _)| isomorphic_unchecked(rep, &g)) {
            return false;
        }
        bucket.push((g, value));
        self.len += 1;
        true
    }
}
