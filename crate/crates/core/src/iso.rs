//! Isomorphism testing and classification.
//!
//! Tables are first compared by an [`IsoProfile`]; only tables with equal
//! profiles reach the backtracking search. The search assigns images to the
//! smallest unmapped element, trying candidates in increasing order, and
//! closes every partial map under products and both divisions. Any element
//! that is not forced by closure becomes a branch point, so the branch points
//! form a generating sequence of the source loop and the first complete map
//! found is the lexicographically least isomorphism.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::loops::{LoopTable, Permutation};
use crate::structure::{self, check_identity, Identity};

const FLAG_IDENTITIES: [Identity; 5] = [
    Identity::LeftBol,
    Identity::RightBol,
    Identity::Moufang,
    Identity::Associative,
    Identity::Commutative,
];

/// Isomorphism-invariant fingerprint of a loop.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoProfile {
    pub order: usize,
    /// Sorted element orders; 0 marks an element without a well-defined order.
    pub order_spectrum: Vec<usize>,
    pub commutant_size: usize,
    pub lnuc_size: usize,
    pub mnuc_size: usize,
    pub rnuc_size: usize,
    pub center_size: usize,
    pub involutions: usize,
    /// Bit `i` set iff the `i`-th of left Bol, right Bol, Moufang,
    /// associative, commutative holds.
    pub flags: u8,
}

impl IsoProfile {
    pub fn has(&self, id: Identity) -> bool {
        FLAG_IDENTITIES
            .iter()
            .position(|&f| f == id)
            .is_some_and(|i| self.flags & (1 << i) != 0)
    }
}

pub fn invariant_profile(q: &LoopTable) -> IsoProfile {
    let mut order_spectrum: Vec<usize> = q
        .elements()
        .map(|a| q.element_order(a).unwrap_or(0))
        .collect();
    order_spectrum.sort_unstable();
    let nuc = structure::nuclei(q);
    let flags = FLAG_IDENTITIES
        .iter()
        .enumerate()
        .filter(|(_, &id)| check_identity(q, id))
        .fold(0u8, |acc, (i, _)| acc | (1 << i));
    IsoProfile {
        order: q.order(),
        order_spectrum,
        commutant_size: structure::commutant(q).len(),
        lnuc_size: nuc.left.len(),
        mnuc_size: nuc.middle.len(),
        rnuc_size: nuc.right.len(),
        center_size: nuc.center.len(),
        involutions: structure::involution_count(q),
        flags,
    }
}

impl fmt::Display for IsoProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &o in &self.order_spectrum {
            *counts.entry(o).or_default() += 1;
        }
        let spectrum: Vec<String> = counts.iter().map(|(o, c)| format!("{o}^{c}")).collect();
        let flags: Vec<&str> = FLAG_IDENTITIES
            .iter()
            .filter(|&&id| self.has(id))
            .map(|id| id.key())
            .collect();
        write!(
            f,
            "n={} orders={} C={} LN={} MN={} RN={} Z={} inv={} flags={}",
            self.order,
            spectrum.join(","),
            self.commutant_size,
            self.lnuc_size,
            self.mnuc_size,
            self.rnuc_size,
            self.center_size,
            self.involutions,
            if flags.is_empty() {
                "-".to_string()
            } else {
                flags.join(",")
            }
        )
    }
}

/// Per-element signature used to prune candidate images: the element's own
/// order followed by the sorted orders of `a·b` over all `b`.
fn element_signatures(q: &LoopTable) -> Vec<Vec<u32>> {
    let orders: Vec<u32> = q
        .elements()
        .map(|a| q.element_order(a).unwrap_or(0) as u32)
        .collect();
    (0..q.order())
        .map(|a| {
            let mut sig: Vec<u32> = (0..q.order()).map(|b| orders[q.mul_ix(a, b)]).collect();
            sig.sort_unstable();
            sig.insert(0, orders[a]);
            sig
        })
        .collect()
}

const UNSET: usize = usize::MAX;

struct Search<'a> {
    src: &'a LoopTable,
    dst: &'a LoopTable,
    sig_src: Vec<Vec<u32>>,
    sig_dst: Vec<Vec<u32>>,
    map: Vec<usize>,
    inv: Vec<usize>,
    trail: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(src: &'a LoopTable, dst: &'a LoopTable) -> Self {
        let n = src.order();
        Search {
            src,
            dst,
            sig_src: element_signatures(src),
            sig_dst: element_signatures(dst),
            map: vec![UNSET; n],
            inv: vec![UNSET; n],
            trail: Vec::with_capacity(n),
        }
    }

    fn set(&mut self, x: usize, y: usize) {
        self.map[x] = y;
        self.inv[y] = x;
        self.trail.push(x);
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            self.inv[self.map[x]] = UNSET;
            self.map[x] = UNSET;
        }
    }

    /// Record `x ↦ y` if consistent; false on conflict.
    fn bind(&mut self, x: usize, y: usize) -> bool {
        if self.map[x] != UNSET {
            return self.map[x] == y;
        }
        if self.inv[y] != UNSET || self.sig_src[x] != self.sig_dst[y] {
            return false;
        }
        self.set(x, y);
        true
    }

    /// Bind `x ↦ y` and close the partial map under the loop operations.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let start = self.trail.len();
        if !self.bind(x, y) {
            return false;
        }
        let (s, d) = (self.src, self.dst);
        let mut next = start;
        while next < self.trail.len() {
            let a = self.trail[next];
            next += 1;
            let mut i = 0;
            while i < next {
                let b = self.trail[i];
                i += 1;
                let (fa, fb) = (self.map[a], self.map[b]);
                let derived = [
                    (s.mul_ix(a, b), d.mul_ix(fa, fb)),
                    (s.mul_ix(b, a), d.mul_ix(fb, fa)),
                    (s.ldiv_ix(a, b), d.ldiv_ix(fa, fb)),
                    (s.ldiv_ix(b, a), d.ldiv_ix(fb, fa)),
                    (s.rdiv_ix(a, b), d.rdiv_ix(fa, fb)),
                    (s.rdiv_ix(b, a), d.rdiv_ix(fb, fa)),
                ];
                for (u, v) in derived {
                    if !self.bind(u, v) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn is_homomorphism(&self) -> bool {
        let n = self.src.order();
        (0..n).all(|a| {
            (0..n).all(|b| {
                self.map[self.src.mul_ix(a, b)] == self.dst.mul_ix(self.map[a], self.map[b])
            })
        })
    }

    /// Depth-first search; `found` returns whether to keep searching.
    fn run(&mut self, found: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let Some(x) = self.map.iter().position(|&m| m == UNSET) else {
            debug_assert!(self.is_homomorphism());
            return found(&self.map);
        };
        for y in 0..self.dst.order() {
            if self.inv[y] != UNSET || self.sig_src[x] != self.sig_dst[y] {
                continue;
            }
            let mark = self.trail.len();
            let ok = self.assign(x, y);
            let keep_going = !ok || self.run(found);
            self.undo(mark);
            if !keep_going {
                return false;
            }
        }
        true
    }

    fn start(src: &'a LoopTable, dst: &'a LoopTable) -> Option<Self> {
        if src.order() != dst.order() {
            return None;
        }
        let mut s = Search::new(src, dst);
        if !s.assign(0, 0) {
            return None;
        }
        Some(s)
    }
}

fn to_permutation(map: &[usize]) -> Permutation {
    Permutation::from_images(map.iter().map(|&v| v as u16).collect())
        .expect("isomorphism is a bijection")
}

/// The lexicographically least isomorphism `q1 → q2`, if any.
pub fn find_isomorphism(q1: &LoopTable, q2: &LoopTable) -> Option<Permutation> {
    if invariant_profile(q1) != invariant_profile(q2) {
        return None;
    }
    search_first(q1, q2)
}

fn search_first(q1: &LoopTable, q2: &LoopTable) -> Option<Permutation> {
    let mut search = Search::start(q1, q2)?;
    let mut result = None;
    search.run(&mut |map| {
        result = Some(to_permutation(map));
        false
    });
    result
}

pub fn are_isomorphic(q1: &LoopTable, q2: &LoopTable) -> bool {
    find_isomorphism(q1, q2).is_some()
}

/// All isomorphisms `q1 → q2` in lexicographic order of their images.
pub fn all_isomorphisms(q1: &LoopTable, q2: &LoopTable) -> Vec<Permutation> {
    let mut out = Vec::new();
    if let Some(mut search) = Search::start(q1, q2) {
        search.run(&mut |map| {
            out.push(to_permutation(map));
            true
        });
    }
    out
}

/// An isomorphism class: indices into the classified list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

/// Partition `loops` into isomorphism classes, ordered by first member.
///
/// Each loop is compared only against the representatives of earlier classes
/// with an equal profile, so the partition does not depend on scheduling.
pub fn classify(loops: &[LoopTable]) -> Vec<IsoClass> {
    let profiles: Vec<IsoProfile> = loops.par_iter().map(invariant_profile).collect();
    let mut classes: Vec<IsoClass> = Vec::new();
    let mut by_profile: BTreeMap<&IsoProfile, Vec<usize>> = BTreeMap::new();
    for (i, q) in loops.iter().enumerate() {
        let bucket = by_profile.entry(&profiles[i]).or_default();
        let hit = bucket
            .iter()
            .copied()
            .find(|&c| search_first(&loops[classes[c].representative], q).is_some());
        match hit {
            Some(c) => classes[c].members.push(i),
            None => {
                bucket.push(classes.len());
                classes.push(IsoClass {
                    representative: i,
                    members: vec![i],
                });
            }
        }
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::loops::Element;

    #[test]
    fn profile_of_z4() {
        let p = invariant_profile(&LoopTable::cyclic(4));
        assert_eq!(p.order_spectrum, vec![1, 2, 4, 4]);
        assert!(p.has(Identity::Associative));
        assert!(p.has(Identity::Commutative));
    }

    #[test]
    fn self_isomorphism_is_identity() {
        for q in [
            fixtures::order8_example(),
            fixtures::order16_exceptional(),
            LoopTable::quaternion(),
        ] {
            assert!(find_isomorphism(&q, &q).unwrap().is_identity());
        }
    }

    #[test]
    fn isomorphism_of_relabeled_table() {
        let q = fixtures::order8_example();
        // conjugate by a permutation fixing 1
        let sigma = Permutation::from_labels(&[1, 3, 5, 7, 2, 4, 6, 8]).unwrap();
        let inv = sigma.inverse();
        let moved = LoopTable::from_fn(8, |a, b| {
            sigma.apply_ix(q.mul_ix(inv.apply_ix(a), inv.apply_ix(b)))
        })
        .unwrap();
        let phi = find_isomorphism(&q, &moved).unwrap();
        for a in q.elements() {
            for b in q.elements() {
                assert_eq!(
                    phi.apply(q.mul(a, b)),
                    moved.mul(phi.apply(a), phi.apply(b))
                );
            }
        }
        // lexicographically least among all
        let all = all_isomorphisms(&q, &moved);
        assert_eq!(all.iter().min(), Some(&phi));
        assert_eq!(all[0], phi);
        assert!(all.contains(&sigma));
    }

    #[test]
    fn automorphisms_of_small_groups() {
        assert_eq!(
            all_isomorphisms(&LoopTable::cyclic(3), &LoopTable::cyclic(3)).len(),
            2
        );
        assert_eq!(
            all_isomorphisms(&LoopTable::cyclic(8), &LoopTable::cyclic(8)).len(),
            4
        );
        let v = LoopTable::elementary_abelian(3);
        assert_eq!(all_isomorphisms(&v, &v).len(), 168);
        let q8 = LoopTable::quaternion();
        assert_eq!(all_isomorphisms(&q8, &q8).len(), 24);
        let d8 = LoopTable::dihedral(4);
        assert_eq!(all_isomorphisms(&d8, &d8).len(), 8);
    }

    #[test]
    fn groups_of_order_8_are_distinguished() {
        let groups = vec![
            LoopTable::cyclic(8),
            LoopTable::cyclic(4).direct_product(&LoopTable::cyclic(2)),
            LoopTable::elementary_abelian(3),
            LoopTable::dihedral(4),
            LoopTable::quaternion(),
            LoopTable::cyclic(2).direct_product(&LoopTable::cyclic(4)),
        ];
        let classes = classify(&groups);
        assert_eq!(classes.len(), 5);
        assert_eq!(classes[1].members, vec![1, 5]);
    }

    #[test]
    fn classify_duplicates() {
        let classes = classify(&[LoopTable::cyclic(2), LoopTable::cyclic(2)]);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].members, vec![0, 1]);
    }

    #[test]
    fn identity_maps_to_identity() {
        let q = LoopTable::elementary_abelian(2);
        for phi in all_isomorphisms(&q, &q) {
            assert_eq!(phi.apply(Element::IDENTITY), Element::IDENTITY);
        }
    }
}
