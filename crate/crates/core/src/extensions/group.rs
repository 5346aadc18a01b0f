use std::ops::Deref;

use crate::error::{Error, Result};
use crate::iso;
use crate::loops::{Element, LoopTable, Permutation};
use crate::structure::{check_identity, Identity};

/// A loop table verified to be associative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable(LoopTable);

impl GroupTable {
    pub fn new(table: LoopTable) -> Result<Self> {
        if check_identity(&table, Identity::Associative) {
            Ok(GroupTable(table))
        } else {
            Err(Error::NotAGroup)
        }
    }

    pub fn cyclic(n: usize) -> Self {
        GroupTable(LoopTable::cyclic(n))
    }

    pub fn elementary_abelian(m: u32) -> Self {
        GroupTable(LoopTable::elementary_abelian(m))
    }

    pub fn table(&self) -> &LoopTable {
        &self.0
    }

    pub fn into_table(self) -> LoopTable {
        self.0
    }

    #[inline]
    pub(crate) fn inv_ix(&self, u: usize) -> usize {
        self.0.ldiv_ix(u, 0)
    }
}

impl Deref for GroupTable {
    type Target = LoopTable;

    fn deref(&self) -> &LoopTable {
        &self.0
    }
}

/// A product-preserving bijection of a group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Automorphism(Permutation);

impl Automorphism {
    pub fn new(k: &GroupTable, perm: Permutation) -> Result<Self> {
        let n = k.order();
        if perm.degree() != n {
            return Err(Error::NotAnAutomorphism);
        }
        let preserves = (0..n).all(|u| {
            (0..n).all(|v| {
                perm.apply_ix(k.mul_ix(u, v)) == k.mul_ix(perm.apply_ix(u), perm.apply_ix(v))
            })
        });
        if preserves {
            Ok(Automorphism(perm))
        } else {
            Err(Error::NotAnAutomorphism)
        }
    }

    pub fn identity(n: usize) -> Self {
        Automorphism(Permutation::identity(n))
    }

    /// Inversion `u ↦ u⁻¹`, an automorphism of any abelian group.
    pub fn inversion(k: &GroupTable) -> Result<Self> {
        let perm = Permutation::from_images((0..k.order()).map(|u| k.inv_ix(u) as u16).collect())
            .expect("inversion is a bijection");
        Automorphism::new(k, perm)
    }

    pub fn perm(&self) -> &Permutation {
        &self.0
    }

    #[inline]
    pub fn apply(&self, u: Element) -> Element {
        self.0.apply(u)
    }

    #[inline]
    pub(crate) fn apply_ix(&self, u: usize) -> usize {
        self.0.apply_ix(u)
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism(self.0.compose(&other.0))
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }
}

pub const MAX_AUTOMORPHISM_ORDER: usize = 64;

/// `Aut(K)`, enumerated by backtracking over generator images and sorted by
/// image vector; the identity is always first.
pub fn automorphism_group(k: &GroupTable) -> Result<Vec<Automorphism>> {
    if k.order() > MAX_AUTOMORPHISM_ORDER {
        return Err(Error::TooLarge(k.order()));
    }
    Ok(iso::all_isomorphisms(k, k)
        .into_iter()
        .map(Automorphism)
        .collect())
}
