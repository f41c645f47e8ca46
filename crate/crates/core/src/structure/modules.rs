use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// A non-adjacent pair `(x, y)` with `N(y) ⊆ N(x)`; `x` dominates `y`.
/// The lexicographically smallest such pair is returned.
pub fn find_comparable_nonadjacent(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    (0..n).find_map(|x| {
        (0..n)
            .find(|&y| y != x && !g.has_edge(x, y) && g.neighbors(y).is_subset(g.neighbors(x)))
            .map(|y| (x, y))
    })
}

/// Every vertex outside `s` sees all of `s` or none of it.
pub fn is_homogeneous(g: &Graph, s: &VertexSet) -> bool {
    (0..g.order()).filter(|&v| !s.contains(v)).all(|v| {
        let seen = g.neighbors(v).intersection(s).len();
        seen == 0 || seen == s.len()
    })
}

pub fn is_c5(g: &Graph) -> bool {
    g.order() == 5 && g.size() == 5 && (0..5).all(|v| g.degree(v) == 2) && g.is_connected()
}

/// Components of the complement of `g[within]`, ordered by smallest vertex.
pub fn co_components_within(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let mut left = within.clone();
    let mut out = Vec::new();
    while let Some(s) = left.first() {
        left.remove(s);
        let mut comp: VertexSet = std::iter::once(s).collect();
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let fresh = left.difference(g.neighbors(u));
            left.difference_with(&fresh);
            for w in fresh.iter() {
                comp.insert(w);
                stack.push(w);
            }
        }
        out.push(comp);
    }
    out
}

// Smallest module of g[within] containing `seed`: keep absorbing splitters.
fn module_closure(g: &Graph, within: &VertexSet, seed: VertexSet) -> VertexSet {
    let mut s = seed;
    loop {
        let splitters: VertexSet = within
            .difference(&s)
            .iter()
            .filter(|&z| {
                let seen = g.neighbors(z).intersection(&s).len();
                seen != 0 && seen != s.len()
            })
            .collect();
        if splitters.is_empty() {
            return s;
        }
        s.union_with(&splitters);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleKind {
    Leaf,
    Parallel,
    Series,
    Prime,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleNode {
    pub members: VertexSet,
    pub kind: ModuleKind,
    /// Indices into [`ModuleTree::nodes`], ordered by smallest member.
    pub children: Vec<usize>,
}

/// The modular decomposition tree. Node 0 is the root, covering every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleTree {
    nodes: Vec<ModuleNode>,
}

/// JSON-friendly nested view of a [`ModuleTree`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestedModule {
    pub kind: ModuleKind,
    pub members: VertexSet,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<NestedModule>,
}

impl ModuleTree {
    pub fn nodes(&self) -> &[ModuleNode] {
        &self.nodes
    }

    pub fn root(&self) -> Option<&ModuleNode> {
        self.nodes.first()
    }

    pub fn node(&self, i: usize) -> &ModuleNode {
        &self.nodes[i]
    }

    /// Node indices, children before parents.
    pub fn post_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        if self.nodes.is_empty() {
            return out;
        }
        let mut stack = vec![(0usize, false)];
        while let Some((i, expanded)) = stack.pop() {
            if expanded {
                out.push(i);
            } else {
                stack.push((i, true));
                for &c in self.nodes[i].children.iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    /// Node indices, parents before children.
    pub fn pre_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = if self.nodes.is_empty() { vec![] } else { vec![0] };
        while let Some(i) = stack.pop() {
            out.push(i);
            stack.extend(self.nodes[i].children.iter().rev());
        }
        out
    }

    pub fn nested(&self) -> Option<NestedModule> {
        fn build(t: &ModuleTree, i: usize) -> NestedModule {
            let node = &t.nodes[i];
            NestedModule {
                kind: node.kind,
                members: node.members.clone(),
                children: node.children.iter().map(|&c| build(t, c)).collect(),
            }
        }
        (!self.nodes.is_empty()).then(|| build(self, 0))
    }
}

/// Computes the modular decomposition tree. Parallel and series nodes take
/// components and co-components as children; a prime node's children are its
/// maximal proper modules, found as the vertices whose pairwise module
/// closure stays proper.
pub fn modular_decomposition(g: &Graph) -> ModuleTree {
    let mut tree = ModuleTree { nodes: Vec::new() };
    if g.order() > 0 {
        decompose(g, g.vertices(), &mut tree);
    }
    tree
}

fn decompose(g: &Graph, members: VertexSet, tree: &mut ModuleTree) -> usize {
    let id = tree.nodes.len();
    tree.nodes.push(ModuleNode {
        members: members.clone(),
        kind: ModuleKind::Leaf,
        children: Vec::new(),
    });
    if members.len() == 1 {
        return id;
    }
    let (kind, parts) = {
        let comps = g.components_within(&members);
        if comps.len() > 1 {
            (ModuleKind::Parallel, comps)
        } else {
            let co = co_components_within(g, &members);
            if co.len() > 1 {
                (ModuleKind::Series, co)
            } else {
                (ModuleKind::Prime, maximal_proper_modules(g, &members))
            }
        }
    };
    let children = parts.into_iter().map(|p| decompose(g, p, tree)).collect();
    let node = &mut tree.nodes[id];
    node.kind = kind;
    node.children = children;
    id
}

fn maximal_proper_modules(g: &Graph, members: &VertexSet) -> Vec<VertexSet> {
    let mut left = members.clone();
    let mut out = Vec::new();
    while let Some(v) = left.first() {
        let mut part: VertexSet = std::iter::once(v).collect();
        for u in left.iter().filter(|&u| u != v) {
            let pair: VertexSet = [u, v].into_iter().collect();
            if module_closure(g, members, pair) != *members {
                part.insert(u);
            }
        }
        left.difference_with(&part);
        out.push(part);
    }
    out
}

/// A homogeneous set other than `V(g)`, of size at least two, that is not a
/// clique. Any non-root non-clique node of the decomposition tree qualifies
/// (the topmost in pre-order is returned); failing that, two children of a
/// parallel root with at least three children.
pub fn find_proper_homogeneous_nonclique(g: &Graph) -> Option<VertexSet> {
    let tree = modular_decomposition(g);
    find_in_tree(g, &tree)
}

pub(crate) fn find_in_tree(g: &Graph, tree: &ModuleTree) -> Option<VertexSet> {
    let found = tree
        .pre_order()
        .into_iter()
        .skip(1)
        .map(|i| tree.node(i))
        .find(|node| node.kind != ModuleKind::Leaf && !g.is_clique(&node.members));
    if let Some(node) = found {
        return Some(node.members.clone());
    }
    let root = tree.root()?;
    if root.kind == ModuleKind::Parallel && root.children.len() >= 3 {
        return Some(
            tree.node(root.children[0])
                .members
                .union(&tree.node(root.children[1]).members),
        );
    }
    None
}
