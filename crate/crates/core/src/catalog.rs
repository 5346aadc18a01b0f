//! Fixed collections of loops used by the verification suite.

use crate::extensions::NamedExample;
use crate::fixtures;
use crate::gf2::{build_exceptional, build_q9, Q9Params};
use crate::loops::LoopTable;

/// Representatives of the 19 isomorphism classes of the `Q(c1, …, c9)`
/// family.
pub const LISTED_Q9: [[u8; 9]; 19] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 0, 1, 1, 1, 1],
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 0, 0, 1, 1],
    [0, 0, 1, 0, 0, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 0, 1, 0, 1],
    [0, 0, 1, 0, 0, 0, 1, 1, 0],
    [0, 0, 1, 0, 0, 1, 1, 0, 0],
    [1, 0, 1, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0, 0, 0, 1],
    [1, 0, 1, 0, 0, 0, 0, 1, 0],
    [1, 0, 1, 0, 0, 0, 0, 1, 1],
    [1, 0, 1, 0, 0, 0, 1, 1, 0],
    [1, 0, 1, 0, 0, 1, 0, 0, 1],
];

pub fn listed_q9_params() -> Vec<Q9Params> {
    LISTED_Q9
        .iter()
        .map(|&b| Q9Params::from_bits(b).expect("listed tuples are bits"))
        .collect()
}

pub fn listed_q9() -> Vec<LoopTable> {
    listed_q9_params().into_iter().map(build_q9).collect()
}

/// The 19 listed `Q(c1, …, c9)` loops followed by the exceptional loop.
pub fn order16_non_subloop_commutant() -> Vec<LoopTable> {
    let mut out = listed_q9();
    out.push(build_exceptional());
    out
}

/// The order-12 example followed by [`order16_non_subloop_commutant`].
pub fn non_subloop_commutant() -> Vec<LoopTable> {
    let mut out = vec![NamedExample::Order12.build().expect("fixed parameters")];
    out.extend(order16_non_subloop_commutant());
    out
}

/// Left Bol loops for property checks: the 21 loops above, the other named
/// semidirect examples, the golden fixtures, direct products, the order-`4n`
/// family for `n = 3..=8`, and small groups including every order `2k` with
/// `k ∈ {1, 3, 5, 7}`.
pub fn bol_catalog() -> Vec<LoopTable> {
    let mut out = non_subloop_commutant();
    let named = |e: NamedExample| e.build().expect("fixed parameters");
    out.push(named(NamedExample::Order16Cyclic));
    out.push(named(NamedExample::Order16Elem));
    out.extend((3..=8).map(|n| named(NamedExample::Order4n { n })));
    out.extend((3..=6).map(|k| named(NamedExample::CommutantOrder { k, m: None })));
    let t8 = fixtures::order8_example();
    let t12 = named(NamedExample::Order12);
    out.push(t8.clone());
    out.push(fixtures::order16_exceptional());
    out.push(t8.direct_product(&LoopTable::cyclic(2)));
    out.push(t8.direct_product(&LoopTable::cyclic(3)));
    out.push(t12.direct_product(&LoopTable::cyclic(2)));
    out.push(LoopTable::cyclic(2).direct_product(&t12));
    for n in [1, 2, 4, 6, 8, 10, 14] {
        out.push(LoopTable::cyclic(n));
    }
    for n in [3, 4, 5, 7] {
        out.push(LoopTable::dihedral(n));
    }
    out.push(LoopTable::quaternion());
    out.push(LoopTable::elementary_abelian(3));
    out
}
