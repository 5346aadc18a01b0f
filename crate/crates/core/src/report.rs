//! Line-oriented text reports with a fixed key order.

use std::fmt::Write as _;

use crate::iso::{invariant_profile, IsoClass};
use crate::loops::LoopTable;
use crate::structure::{
    self, check_identity, commutant, generated_subloop, is_subloop, nuclei, Identity,
};

/// `key: value` lines describing `q`.
pub fn structure_report(q: &LoopTable) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: &dyn std::fmt::Display| writeln!(out, "{k}: {v}").unwrap();
    line("order", &q.order());
    if let Some(name) = q.name() {
        line("name", &name);
    }
    for id in Identity::ALL {
        line(id.key(), &check_identity(q, id));
    }
    let c = commutant(q);
    let nuc = nuclei(q);
    line("commutant", &c);
    line("commutant_size", &c.len());
    line("commutant_is_subloop", &is_subloop(q, &c));
    line("commutant_generates", &generated_subloop(q, &c));
    line("commutant_in_right_nucleus", &c.is_subset(&nuc.right));
    line("left_nucleus", &nuc.left);
    line("middle_nucleus", &nuc.middle);
    line("right_nucleus", &nuc.right);
    line("nucleus", &nuc.nucleus);
    line("center", &nuc.center);
    line("involutions", &structure::involution_count(q));
    line("profile", &invariant_profile(q));
    out
}

/// One line per class: `class <k>: size <m> representative <name> profile <fields>`,
/// with `k` starting at 1. Unnamed representatives are shown by position.
pub fn classification_report(loops: &[LoopTable], classes: &[IsoClass]) -> String {
    let mut out = String::new();
    for (k, class) in classes.iter().enumerate() {
        let rep = &loops[class.representative];
        let name = rep
            .name()
            .map(str::to_string)
            .unwrap_or_else(|| format!("#{}", class.representative + 1));
        writeln!(
            out,
            "class {}: size {} representative {} profile {}",
            k + 1,
            class.members.len(),
            name,
            invariant_profile(rep)
        )
        .unwrap();
    }
    out
}
