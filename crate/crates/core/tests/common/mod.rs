//! Generators and brute-force checkers shared by the integration tests.
#![allow(dead_code)]

use bperfect::family::{find_forbidden_in, ForbiddenPattern};
use bperfect::structure::BoatPartition;
use bperfect::{Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.05..0.95);
    Graph::from_fn(n, |_, _| rng.gen_bool(p))
}

/// A random graph with no member of `fam`: start from the empty or complete
/// graph and flip vertex pairs in random order, keeping each flip only if the
/// result stays free of the family.
pub fn random_family_free(rng: &mut ChaCha8Rng, max_n: usize, fam: &[ForbiddenPattern]) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let mut edges: Vec<(usize, usize)> = if rng.gen_bool(0.5) {
        Graph::complete(n).edges()
    } else {
        Vec::new()
    };
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let flip = rng.gen_range(0.2..1.0);
    for pair in pairs {
        if !rng.gen_bool(flip) {
            continue;
        }
        let mut next = edges.clone();
        match next.iter().position(|&e| e == pair) {
            Some(i) => {
                next.swap_remove(i);
            }
            None => next.push(pair),
        }
        let g = Graph::from_edges(n, &next).unwrap();
        if find_forbidden_in(&g, fam).is_none() {
            edges = next;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// A special boat with `q` in `2..=max_q` and parts of size at most
/// `max_part`, labels shuffled.
pub fn random_special_boat(rng: &mut ChaCha8Rng, max_q: usize, max_part: usize) -> Graph {
    let q = rng.gen_range(2..=max_q);
    let mut tags = Vec::new();
    for side in 0..2 {
        for i in 0..=q {
            let size = if i == 0 && q > 2 {
                rng.gen_range(0..=max_part)
            } else {
                rng.gen_range(1..=max_part)
            };
            tags.extend(std::iter::repeat_n((side, i), size));
        }
    }
    tags.shuffle(rng);
    Graph::from_fn(tags.len(), |u, v| {
        let ((su, iu), (sv, iv)) = (tags[u], tags[v]);
        su == sv || (iu == iv && iu >= 1)
    })
}

pub fn subsets(s: &VertexSet) -> impl Iterator<Item = VertexSet> {
    let items = s.to_vec();
    (0u64..1 << items.len()).map(move |m| (0..items.len()).filter(|i| m >> i & 1 == 1).map(|i| items[i]).collect())
}

/// Every vertex of `within` outside `s` sees all of `s` or none of it.
pub fn is_module_within(g: &Graph, within: &VertexSet, s: &VertexSet) -> bool {
    within.iter().filter(|&v| !s.contains(v)).all(|v| {
        let seen = s.iter().filter(|&u| g.has_edge(u, v)).count();
        seen == 0 || seen == s.len()
    })
}

/// Connected components of `g[within]` (or of its complement), by plain search.
pub fn parts_within(g: &Graph, within: &VertexSet, complement: bool) -> Vec<VertexSet> {
    let mut left = within.to_vec();
    let mut out = Vec::new();
    while let Some(s) = left.first().copied() {
        let mut comp = vec![s];
        left.retain(|&v| v != s);
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            let (joined, rest): (Vec<usize>, Vec<usize>) = left.iter().partition(|&&v| g.has_edge(u, v) != complement);
            comp.extend(joined);
            left = rest;
            i += 1;
        }
        out.push(comp.into_iter().collect());
    }
    out.sort_by_key(|c: &VertexSet| c.first());
    out
}

/// Lengths (in edges) of all induced paths from `x` to `y`.
pub fn induced_path_lengths(g: &Graph, x: usize, y: usize) -> Vec<usize> {
    fn go(g: &Graph, path: &mut Vec<usize>, y: usize, out: &mut Vec<usize>) {
        let last = *path.last().unwrap();
        for w in g.neighbors(last).iter() {
            if path.contains(&w) || path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
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

/// Some induced subgraph on at least five vertices is a cycle.
pub fn has_long_induced_cycle(g: &Graph) -> bool {
    subsets(&g.vertices()).any(|s| {
        s.len() >= 5 && {
            let h = g.induced_subgraph(&s).unwrap();
            (0..h.order()).all(|v| h.degree(v) == 2) && h.is_connected()
        }
    })
}

pub fn is_weakly_chordal_brute(g: &Graph) -> bool {
    !has_long_induced_cycle(g) && !has_long_induced_cycle(&g.complement())
}

/// Checks a special boat partition pair by pair from the axioms.
pub fn check_special_boat(g: &Graph, p: &BoatPartition) -> Result<(), String> {
    let q = p.q;
    if q < 2 || p.a.len() != q + 1 || p.b.len() != q + 1 {
        return Err("bad shape".into());
    }
    let mut tag = vec![None; g.order()];
    for (side, parts) in [(0, &p.a), (1, &p.b)] {
        for (i, part) in parts.iter().enumerate() {
            if i >= 1 && part.is_empty() {
                return Err(format!("empty part {i} on side {side}"));
            }
            for v in part.iter() {
                if v >= g.order() || tag[v].replace((side, i)).is_some() {
                    return Err(format!("vertex {v} misplaced"));
                }
            }
        }
    }
    if q == 2 && (p.a[0].is_empty() || p.b[0].is_empty()) {
        return Err("q = 2 with an empty part 0".into());
    }
    let tag: Vec<(usize, usize)> = tag
        .into_iter()
        .collect::<Option<_>>()
        .ok_or("partition does not cover")?;
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            let ((su, iu), (sv, iv)) = (tag[u], tag[v]);
            let want = su == sv || (iu == iv && iu >= 1);
            if g.has_edge(u, v) != want {
                return Err(format!("pair {u},{v} breaks the boat rule"));
            }
        }
    }
    Ok(())
}
