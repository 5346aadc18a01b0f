use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::loops::{LoopTable, Permutation, Side};

pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

/// A permutation group given by generators and its full element list.
#[derive(Clone, Debug)]
pub struct PermGroup {
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    lookup: HashSet<Permutation>,
}

impl PermGroup {
    /// Breadth-first closure of `generators` under composition.
    pub fn closure(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<PermGroup> {
        let mut gens: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        let id = Permutation::identity(degree);
        let mut lookup = HashSet::from([id.clone()]);
        let mut elements = vec![id];
        let mut next = 0;
        while next < elements.len() {
            let g = elements[next].clone();
            next += 1;
            for s in &gens {
                let h = g.then(s);
                if !lookup.contains(&h) {
                    if elements.len() >= cap {
                        return Err(Error::ClosureCapExceeded(cap));
                    }
                    lookup.insert(h.clone());
                    elements.push(h);
                }
            }
        }
        Ok(PermGroup {
            generators: gens,
            elements,
            lookup,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.lookup.contains(p)
    }
}

/// `Mlt(Q) = ⟨L_a, R_a | a ∈ Q⟩`.
pub fn multiplication_group(q: &LoopTable) -> Result<PermGroup> {
    multiplication_group_with_cap(q, DEFAULT_CLOSURE_CAP)
}

pub fn multiplication_group_with_cap(q: &LoopTable, cap: usize) -> Result<PermGroup> {
    let generators = q
        .elements()
        .flat_map(|a| [q.translation(a, Side::Left), q.translation(a, Side::Right)])
        .collect();
    PermGroup::closure(q.order(), generators, cap)
}
