use super::ElementSet;
use crate::error::{Error, Result};
use crate::loops::{Element, LoopTable};

/// Least subset containing `s ∪ {1}` closed under products and both
/// divisions.
pub fn generated_subloop(q: &LoopTable, s: &ElementSet) -> ElementSet {
    let n = q.order();
    let mut inside = vec![false; n];
    let mut members = vec![0usize];
    inside[0] = true;
    for a in s.iter() {
        if !inside[a.index()] {
            inside[a.index()] = true;
            members.push(a.index());
        }
    }
    // Every pair is combined once the later of the two is processed.
    let mut next = 0;
    while next < members.len() {
        let x = members[next];
        next += 1;
        let mut i = 0;
        while i < next {
            let y = members[i];
            i += 1;
            for z in [
                q.mul_ix(x, y),
                q.mul_ix(y, x),
                q.ldiv_ix(x, y),
                q.ldiv_ix(y, x),
                q.rdiv_ix(x, y),
                q.rdiv_ix(y, x),
            ] {
                if !inside[z] {
                    inside[z] = true;
                    members.push(z);
                }
            }
        }
    }
    members.into_iter().map(Element::new).collect()
}

pub fn is_subloop(q: &LoopTable, s: &ElementSet) -> bool {
    s.contains(Element::IDENTITY) && generated_subloop(q, s) == *s
}

/// Normality via the coset equations `xS = Sx`, `(xS)y = x(Sy)` and
/// `(Sx)y = S(xy)`, compared setwise for all `x, y`.
pub fn is_normal(q: &LoopTable, s: &ElementSet) -> bool {
    if !is_subloop(q, s) {
        return false;
    }
    let set = |f: &dyn Fn(usize) -> usize| -> ElementSet {
        s.iter().map(|e| Element::new(f(e.index()))).collect()
    };
    let m = |a, b| q.mul_ix(a, b);
    q.elements().all(|x| {
        let x = x.index();
        if set(&|e| m(x, e)) != set(&|e| m(e, x)) {
            return false;
        }
        q.elements().all(|y| {
            let y = y.index();
            set(&|e| m(m(x, e), y)) == set(&|e| m(x, m(e, y)))
                && set(&|e| m(m(e, x), y)) == set(&|e| m(e, m(x, y)))
        })
    })
}

/// Left cosets `xS`, deduplicated, in order of first appearance.
pub fn cosets(q: &LoopTable, s: &ElementSet) -> Result<Vec<ElementSet>> {
    let n = q.order();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut out: Vec<ElementSet> = Vec::new();
    let mut reps: Vec<Element> = Vec::new();
    for x in q.elements() {
        let coset: ElementSet = s.iter().map(|e| q.mul(x, e)).collect();
        match out.iter().position(|c| *c == coset) {
            Some(_) => continue,
            None => {
                if let Some(k) = coset.iter().find_map(|e| owner[e.index()]) {
                    return Err(Error::NotPartition(reps[k], x));
                }
                for e in coset.iter() {
                    owner[e.index()] = Some(out.len());
                }
                reps.push(x);
                out.push(coset);
            }
        }
    }
    Ok(out)
}

/// `Q/S` on the cosets of a normal subloop; the coset of 1 is the identity.
pub fn quotient(q: &LoopTable, s: &ElementSet) -> Result<LoopTable> {
    if !is_normal(q, s) {
        return Err(Error::NotNormal);
    }
    let blocks = cosets(q, s)?;
    let mut block_of = vec![0usize; q.order()];
    for (k, b) in blocks.iter().enumerate() {
        for e in b.iter() {
            block_of[e.index()] = k;
        }
    }
    let reps: Vec<usize> = blocks.iter().map(|b| b.members()[0].index()).collect();
    LoopTable::from_fn(blocks.len(), |i, j| block_of[q.mul_ix(reps[i], reps[j])])
}

/// The multiplication table of `Q` restricted to the subloop `s`, relabeled
/// by the sorted order of `s`.
pub fn subloop_table(q: &LoopTable, s: &ElementSet) -> Result<LoopTable> {
    if !is_subloop(q, s) {
        return Err(Error::NotSubloop);
    }
    let members = s.members();
    let mut pos = vec![usize::MAX; q.order()];
    for (i, e) in members.iter().enumerate() {
        pos[e.index()] = i;
    }
    LoopTable::from_fn(members.len(), |i, j| {
        pos[q.mul_ix(members[i].index(), members[j].index())]
    })
}

/// Whether `R_{st} = R_s R_t` (apply `R_s` first) for all `s, t ∈ S`, that
/// is `(xs)t = x(st)` for every `x`.
pub fn right_regular_is_homomorphism(q: &LoopTable, s: &ElementSet) -> Result<bool> {
    if !is_subloop(q, s) {
        return Err(Error::NotSubloop);
    }
    let n = q.order();
    Ok(s.iter().all(|a| {
        s.iter().all(|b| {
            let ab = q.mul_ix(a.index(), b.index());
            (0..n).all(|x| q.mul_ix(q.mul_ix(x, a.index()), b.index()) == q.mul_ix(x, ab))
        })
    }))
}
