//! Cayley-table representation of finite loops.

mod builders;
mod element;
mod format;
mod perm;
mod table;

pub use element::Element;
pub use format::{parse_table, render_table};
pub use perm::Permutation;
pub use table::{LoopTable, Side};

/// Largest supported order; cells are stored as 16-bit indices.
pub const MAX_ORDER: usize = 4096;
