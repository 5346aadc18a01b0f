use thiserror::Error;

use crate::loops::Element;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    Malformed(String),

    #[error("not a Latin square: {line} {index} repeats value {value}")]
    NotLatin {
        line: &'static str,
        index: usize,
        value: usize,
    },

    #[error("no two-sided identity element")]
    NoIdentity,

    #[error("order {0} exceeds the supported maximum of {max}", max = crate::loops::MAX_ORDER)]
    OrderTooLarge(usize),

    #[error("element {0} has no two-sided inverse")]
    NoTwoSidedInverse(Element),

    #[error("powers of element {0} do not form a cyclic group through the identity")]
    NotPeriodicThroughIdentity(Element),

    #[error("subset is not a subloop")]
    NotSubloop,

    #[error("subloop is not normal")]
    NotNormal,

    #[error("cosets {0} and {1} overlap without being equal")]
    NotPartition(Element, Element),

    #[error("multiplication group closure exceeded cap of {0} permutations")]
    ClosureCapExceeded(usize),

    #[error("table is not a group")]
    NotAGroup,

    #[error("map is not an automorphism")]
    NotAnAutomorphism,

    #[error("group of order {0} is too large for automorphism enumeration")]
    TooLarge(usize),

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("search budget of {0} nodes exceeded")]
    SearchBudgetExceeded(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
