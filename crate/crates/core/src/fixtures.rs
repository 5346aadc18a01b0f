//! Golden tables shipped with the crate.

use crate::loops::{parse_table, LoopTable};

/// Nonassociative left Bol loop of order 8 with `C = RNuc = {1,2,3,4}`.
pub const ORDER8_EXAMPLE: &str = include_str!("../fixtures/bol8_commutant_rnuc.tbl");

/// Involutory left Bol loop of order 16 with trivial left nucleus and
/// commutant `{1,2,5,7}`.
pub const ORDER16_EXCEPTIONAL: &str = include_str!("../fixtures/bol16_trivial_lnuc.tbl");

pub fn order8_example() -> LoopTable {
    parse_table(ORDER8_EXAMPLE)
        .expect("order-8 fixture parses")
        .with_name("bol8-fixture")
}

pub fn order16_exceptional() -> LoopTable {
    parse_table(ORDER16_EXCEPTIONAL)
        .expect("order-16 fixture parses")
        .with_name("bol16-fixture")
}
