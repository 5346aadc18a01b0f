//! Finite loop theory on Cayley tables.
//!
//! The crate covers structural analysis of finite loops (Bol and Moufang
//! identities, commutant, nuclei, generated subloops, multiplication
//! groups), extension constructions `Q(K, E, τ, f)` of a group `K` by a
//! loop `E`, right-additive cocycles over elementary abelian 2-groups, and
//! isomorphism testing and classification.

pub mod catalog;
pub mod error;
pub mod extensions;
pub mod fixtures;
pub mod gf2;
pub mod iso;
pub mod loops;
pub mod report;
pub mod search;
pub mod structure;

pub use error::{Error, Result};
pub use loops::{Element, LoopTable, Permutation, Side};
pub use structure::ElementSet;
