//! Boats: vertex partitions `A0..Aq`, `B0..Bq` where the A-parts are pairwise
//! complete, the B-parts are pairwise complete, `Aj` sees exactly `Bj` on the
//! other side for `j >= 1`, and `A0`, `B0` see nothing across. A special boat
//! additionally has every part a clique.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{find_induced, small_boats, Embedding};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoatPartition {
    pub q: usize,
    /// `a[i]` is `Ai` for `i` in `0..=q`.
    pub a: Vec<VertexSet>,
    pub b: Vec<VertexSet>,
    pub special: bool,
}

/// An induced small boat: `q = 2` for the boat with singleton parts
/// `A0..A2, B0..B2`, `q = 3` for the complement of `C6`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallBoatSeed {
    pub q: usize,
    pub embedding: Embedding,
}

impl BoatPartition {
    pub fn side_a(&self) -> VertexSet {
        self.a.iter().fold(VertexSet::new(), |acc, p| acc.union(p))
    }

    pub fn side_b(&self) -> VertexSet {
        self.b.iter().fold(VertexSet::new(), |acc, p| acc.union(p))
    }

    pub fn vertices(&self) -> VertexSet {
        self.side_a().union(&self.side_b())
    }

    fn parts(&self) -> impl Iterator<Item = (String, &VertexSet)> {
        let a = self.a.iter().enumerate().map(|(i, p)| (format!("A{i}"), p));
        let b = self.b.iter().enumerate().map(|(i, p)| (format!("B{i}"), p));
        a.chain(b)
    }

    /// Checks every boat axiom against `g`, plus that `special` is accurate.
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), String> {
        let q = self.q;
        if q < 2 {
            return Err(format!("q = {q} is below 2"));
        }
        if self.a.len() != q + 1 || self.b.len() != q + 1 {
            return Err("part lists do not have q + 1 entries".into());
        }
        for (name, p) in self.parts() {
            if !name.ends_with('0') && p.is_empty() {
                return Err(format!("{name} is empty"));
            }
            if p.bound() > g.order() {
                return Err(format!("{name} has a vertex outside the graph"));
            }
        }
        if q == 2 && (self.a[0].is_empty() || self.b[0].is_empty()) {
            return Err("q = 2 needs non-empty A0 and B0".into());
        }
        let mut seen = VertexSet::new();
        for (name, p) in self.parts() {
            if !seen.is_disjoint(p) {
                return Err(format!("{name} overlaps another part"));
            }
            seen.union_with(p);
        }
        let complete = |x: &VertexSet, y: &VertexSet| x.iter().all(|v| y.is_subset(g.neighbors(v)));
        let anti = |x: &VertexSet, y: &VertexSet| x.iter().all(|v| g.neighbors(v).is_disjoint(y));
        for i in 0..=q {
            for j in 0..=q {
                if i < j && !complete(&self.a[i], &self.a[j]) {
                    return Err(format!("A{i} is not complete to A{j}"));
                }
                if i < j && !complete(&self.b[i], &self.b[j]) {
                    return Err(format!("B{i} is not complete to B{j}"));
                }
                if i == j && i >= 1 {
                    if !complete(&self.a[i], &self.b[j]) {
                        return Err(format!("A{i} is not complete to B{j}"));
                    }
                } else if !anti(&self.a[i], &self.b[j]) {
                    return Err(format!("A{i} is not anticomplete to B{j}"));
                }
            }
        }
        let special = self.parts().all(|(_, p)| g.is_clique(p));
        if special != self.special {
            return Err(format!("special flag says {} but parts say {special}", self.special));
        }
        Ok(())
    }
}

/// An induced copy of one of the two small boats, trying the complement of
/// `C6` first.
pub fn find_small_boat(g: &Graph) -> Option<SmallBoatSeed> {
    let [q2, q3] = small_boats();
    if let Some(embedding) = find_induced(g, &q3) {
        return Some(SmallBoatSeed { q: 3, embedding });
    }
    find_induced(g, &q2).map(|embedding| SmallBoatSeed { q: 2, embedding })
}

fn single(v: usize) -> VertexSet {
    std::iter::once(v).collect()
}

/// Grows the seed into a boat covering all of `g`.
///
/// Remaining vertices are placed in ascending order. A vertex joins the side
/// it is complete to; its neighbours on the other side must be empty (it
/// joins part 0), exactly some part `j >= 1` (it joins part `j`), or a subset
/// of the opposite part 0, in which case that subset and the vertex open a new
/// index `q + 1`. The axioms are rechecked after every placement.
pub fn extend_to_special_boat(g: &Graph, seed: &SmallBoatSeed) -> Result<BoatPartition> {
    let m = &seed.embedding.map;
    let mut boat = match seed.q {
        2 => BoatPartition {
            q: 2,
            a: vec![single(m[0]), single(m[1]), single(m[2])],
            b: vec![single(m[3]), single(m[4]), single(m[5])],
            special: true,
        },
        3 => BoatPartition {
            q: 3,
            a: vec![VertexSet::new(), single(m[0]), single(m[1]), single(m[2])],
            b: vec![VertexSet::new(), single(m[3]), single(m[4]), single(m[5])],
            special: true,
        },
        q => return Err(Error::NotABoat(format!("seed has q = {q}"))),
    };
    let on_g = |b: &BoatPartition| {
        let sub: Vec<usize> = b.vertices().to_vec();
        let h = g.induced_by_list(&sub);
        let relabel = |p: &VertexSet| p.iter().map(|v| sub.binary_search(&v).unwrap()).collect::<VertexSet>();
        let local = BoatPartition {
            q: b.q,
            a: b.a.iter().map(relabel).collect(),
            b: b.b.iter().map(relabel).collect(),
            special: b.special,
        };
        local.verify(&h)
    };
    on_g(&boat).map_err(Error::NotABoat)?;

    let placed = boat.vertices();
    for v in (0..g.order()).filter(|&v| !placed.contains(v)) {
        let side_a = boat.side_a();
        let side_b = boat.side_b();
        let sees_a = side_a.is_subset(g.neighbors(v));
        let sees_b = side_b.is_subset(g.neighbors(v));
        let (own, other, to_a) = match (sees_a, sees_b) {
            (true, false) => (&mut boat.a, &mut boat.b, true),
            (false, true) => (&mut boat.b, &mut boat.a, false),
            _ => {
                return Err(Error::NotABoat(format!(
                    "vertex {v} is complete to neither or both sides"
                )));
            }
        };
        let across = g
            .neighbors(v)
            .intersection(&other.iter().fold(VertexSet::new(), |acc, p| acc.union(p)));
        if across.is_empty() {
            own[0].insert(v);
        } else if let Some(j) = (1..other.len()).find(|&j| other[j] == across) {
            own[j].insert(v);
        } else if across.is_subset(&other[0]) {
            other[0].difference_with(&across);
            other.push(across);
            own.push(single(v));
            boat.q += 1;
        } else {
            let side = if to_a { "B" } else { "A" };
            return Err(Error::NotABoat(format!(
                "vertex {v} sees an irregular part of side {side}"
            )));
        }
        boat.special = boat.a.iter().chain(&boat.b).all(|p| g.is_clique(p));
        on_g(&boat).map_err(|e| Error::NotABoat(format!("after placing {v}: {e}")))?;
    }
    if !boat.special {
        let part = boat.a.iter().chain(&boat.b).position(|p| !g.is_clique(p)).unwrap();
        let q = boat.q;
        let name = if part <= q {
            format!("A{part}")
        } else {
            format!("B{}", part - q - 1)
        };
        return Err(Error::NotSpecial(name));
    }
    boat.verify(g).map_err(Error::NotABoat)?;
    Ok(boat)
}

/// The largest of `A`, `B`, `A1 ∪ B1`, ..., `Aq ∪ Bq`; earlier candidates win ties.
pub fn special_boat_max_clique(g: &Graph, p: &BoatPartition) -> Result<VertexSet> {
    for (name, part) in p.parts() {
        if !g.is_clique(part) {
            return Err(Error::NotSpecial(name));
        }
    }
    let mut best = p.side_a();
    for cand in std::iter::once(p.side_b()).chain((1..=p.q).map(|j| p.a[j].union(&p.b[j]))) {
        if cand.len() > best.len() {
            best = cand;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::clique_number;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// A random special boat with shuffled labels, built straight from the axioms.
    pub(crate) fn random_special_boat(rng: &mut ChaCha8Rng, max_q: usize, max_part: usize) -> Graph {
        let q = rng.gen_range(2..=max_q);
        let size = |rng: &mut ChaCha8Rng, zero: bool| {
            if zero && q > 2 {
                rng.gen_range(0..=max_part)
            } else {
                rng.gen_range(1..=max_part)
            }
        };
        // (side, index) per vertex
        let mut tags = Vec::new();
        for side in 0..2 {
            for i in 0..=q {
                for _ in 0..size(rng, i == 0) {
                    tags.push((side, i));
                }
            }
        }
        tags.shuffle(rng);
        Graph::from_fn(tags.len(), |u, v| {
            let ((su, iu), (sv, iv)) = (tags[u], tags[v]);
            su == sv || (iu == iv && iu >= 1)
        })
    }

    #[test]
    fn small_boats_extend_to_themselves() {
        let [q2, q3] = small_boats();
        let seed = find_small_boat(&q3).unwrap();
        let p = extend_to_special_boat(&q3, &seed).unwrap();
        assert_eq!(p.q, 3);
        assert!(p.a.iter().chain(&p.b).skip(1).all(|x| x.len() <= 1));
        assert_eq!(p.vertices().len(), 6);

        let seed = find_small_boat(&q2).unwrap();
        assert_eq!(seed.q, 2);
        let p = extend_to_special_boat(&q2, &seed).unwrap();
        assert_eq!(p.q, 2);
        assert!(!p.a[0].is_empty() && !p.b[0].is_empty());
    }

    #[test]
    fn boat_search_examples() {
        assert!(find_small_boat(&Graph::cycle(6).complement()).is_some());
        assert!(find_small_boat(&Graph::cycle(6)).is_none());
        for n in 0..=5 {
            assert!(find_small_boat(&Graph::complete(n)).is_none());
        }
    }

    #[test]
    fn special_boat_cliques() {
        let [q2, q3] = small_boats();
        for g in [q2, q3] {
            let p = extend_to_special_boat(&g, &find_small_boat(&g).unwrap()).unwrap();
            let k = special_boat_max_clique(&g, &p).unwrap();
            assert_eq!(k.len(), 3);
            assert!(g.is_clique(&k));
        }
    }

    #[test]
    fn random_special_boats_recovered() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..200 {
            let g = random_special_boat(&mut rng, 4, 3);
            let seed = find_small_boat(&g).expect("every boat contains a small boat");
            let p = extend_to_special_boat(&g, &seed).unwrap();
            p.verify(&g).unwrap();
            assert_eq!(p.vertices(), g.vertices());
            assert!(p.special);
            if g.order() <= 12 {
                let k = special_boat_max_clique(&g, &p).unwrap();
                assert_eq!(k.len(), clique_number(&g).unwrap());
            }
        }
    }

    #[test]
    fn non_boats_are_refused() {
        // complement of C6 plus a vertex adjacent to one vertex only
        let mut edges = Graph::cycle(6).complement().edges();
        edges.push((0, 6));
        let g = Graph::from_edges(7, &edges).unwrap();
        let seed = find_small_boat(&g).unwrap();
        assert!(matches!(extend_to_special_boat(&g, &seed), Err(Error::NotABoat(_))));

        // a part that is not a clique: two non-adjacent twins in A1
        let g = Graph::from_fn(7, |u, v| {
            let tag = |x: usize| [(0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3), (0, 1)][x];
            let ((su, iu), (sv, iv)) = (tag(u), tag(v));
            if (u, v) == (0, 6) {
                return false;
            }
            su == sv || iu == iv
        });
        let seed = find_small_boat(&g).unwrap();
        assert!(matches!(
            extend_to_special_boat(&g, &seed),
            Err(Error::NotSpecial(_)) | Err(Error::NotABoat(_))
        ));
    }

    #[test]
    fn verify_catches_broken_partitions() {
        let [_, q3] = small_boats();
        let good = extend_to_special_boat(&q3, &find_small_boat(&q3).unwrap()).unwrap();
        let mut bad = good.clone();
        bad.special = false;
        assert!(bad.verify(&q3).is_err());
        let mut bad = good.clone();
        bad.b.swap(1, 2);
        assert!(bad.verify(&q3).is_err());
        let mut bad = good;
        bad.a[1] = VertexSet::new();
        assert!(bad.verify(&q3).is_err());
    }
}
