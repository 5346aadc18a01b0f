//! Structural analysis of loops: commutant, nuclei, subloops, cosets,
//! quotients and the multiplication group.

mod identities;
mod mlt;
mod set;
mod subloop;

pub use identities::{check_identity, Identity};
pub use mlt::{
    multiplication_group, multiplication_group_with_cap, PermGroup, DEFAULT_CLOSURE_CAP,
};
pub use set::ElementSet;
pub use subloop::{
    cosets, generated_subloop, is_normal, is_subloop, quotient, right_regular_is_homomorphism,
    subloop_table,
};

use crate::error::Result;
use crate::loops::{Element, LoopTable};

/// `C(Q) = {c : cx = xc for all x}`.
pub fn commutant(q: &LoopTable) -> ElementSet {
    let n = q.order();
    q.elements()
        .filter(|c| (0..n).all(|x| q.mul_ix(c.index(), x) == q.mul_ix(x, c.index())))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nuclei {
    pub left: ElementSet,
    pub middle: ElementSet,
    pub right: ElementSet,
    pub nucleus: ElementSet,
    pub center: ElementSet,
}

pub fn left_nucleus(q: &LoopTable) -> ElementSet {
    nucleus_by(q, |a, x, y| {
        q.mul_ix(a, q.mul_ix(x, y)) == q.mul_ix(q.mul_ix(a, x), y)
    })
}

pub fn middle_nucleus(q: &LoopTable) -> ElementSet {
    nucleus_by(q, |a, x, y| {
        q.mul_ix(x, q.mul_ix(a, y)) == q.mul_ix(q.mul_ix(x, a), y)
    })
}

pub fn right_nucleus(q: &LoopTable) -> ElementSet {
    nucleus_by(q, |a, x, y| {
        q.mul_ix(x, q.mul_ix(y, a)) == q.mul_ix(q.mul_ix(x, y), a)
    })
}

fn nucleus_by(q: &LoopTable, holds: impl Fn(usize, usize, usize) -> bool) -> ElementSet {
    let n = q.order();
    q.elements()
        .filter(|a| (0..n).all(|x| (0..n).all(|y| holds(a.index(), x, y))))
        .collect()
}

pub fn nuclei(q: &LoopTable) -> Nuclei {
    let left = left_nucleus(q);
    let middle = middle_nucleus(q);
    let right = right_nucleus(q);
    let nucleus = left.intersection(&middle).intersection(&right);
    let center = nucleus.intersection(&commutant(q));
    Nuclei {
        left,
        middle,
        right,
        nucleus,
        center,
    }
}

/// `C_m(Q)`: commutant elements whose order is coprime to `m`.
pub fn commutant_prime_part(q: &LoopTable, m: u64) -> Result<ElementSet> {
    let mut out = Vec::new();
    for c in commutant(q).iter() {
        if gcd(q.element_order(c)? as u64, m) == 1 {
            out.push(c);
        }
    }
    Ok(out.into_iter().collect())
}

pub fn involution_count(q: &LoopTable) -> usize {
    q.elements()
        .skip(1)
        .filter(|&a| q.mul(a, a) == Element::IDENTITY)
        .count()
}

pub fn commutant_in_right_nucleus(q: &LoopTable) -> bool {
    commutant(q).is_subset(&right_nucleus(q))
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
