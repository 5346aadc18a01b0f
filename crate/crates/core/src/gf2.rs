//! Right-additive cocycles over elementary abelian 2-groups.
//!
//! `E = (Z2)^n` is represented by bit vectors: bit `i` is the coordinate of
//! `e_{i+1}`, so the element with index `a` in [`LoopTable::elementary_abelian`]
//! is the vector with bits `a`. Loops `Q(Z2, E, ι, f)` use the extension
//! encoding `u + 2a`, which for `n = 3` is label `1 + u + 2(a1 + 2a2 + 4a3)`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::extensions::{Cocycle, Extension, GroupTable, TauMap};
use crate::loops::{Element, LoopTable};
use crate::structure::ElementSet;

/// Largest dimension for which GL(n, 2) and the constraint system are
/// materialized.
pub const MAX_DIM: u32 = 6;

/// A vector of `(Z2)^n`; the dimension comes from context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Vec2(pub u32);

impl Vec2 {
    pub const ZERO: Vec2 = Vec2(0);

    /// `e_{i+1}`.
    pub fn basis(i: u32) -> Self {
        Vec2(1 << i)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn has(self, i: u32) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn support(self) -> impl Iterator<Item = u32> {
        (0..32).filter(move |&i| self.has(i))
    }
}

impl std::ops::Add for Vec2 {
    type Output = Vec2;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2(self.0 ^ rhs.0)
    }
}

fn check_dim(dim: u32) -> Result<()> {
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::BadParams(format!(
            "dimension {dim} outside 1..={MAX_DIM}"
        )));
    }
    Ok(())
}

/// A map `c: E × B → Z2` with `c(0, e_i) = 0`, where `B` is the standard
/// basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CMap {
    dim: u32,
    values: Vec<u8>,
}

impl CMap {
    pub fn zero(dim: u32) -> Result<Self> {
        check_dim(dim)?;
        Ok(CMap {
            dim,
            values: vec![0; (1usize << dim) * dim as usize],
        })
    }

    /// `f(e, i)` gives `c(e, e_{i+1})`; nonzero values at `e = 0` are rejected.
    pub fn from_fn(dim: u32, mut f: impl FnMut(Vec2, u32) -> bool) -> Result<Self> {
        let mut c = CMap::zero(dim)?;
        for e in 0..1u32 << dim {
            for i in 0..dim {
                let v = f(Vec2(e), i);
                if e == 0 && v {
                    return Err(Error::BadParams("c(0, e_i) must be 0".into()));
                }
                c.set(Vec2(e), i, v);
            }
        }
        Ok(c)
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn get(&self, e: Vec2, i: u32) -> bool {
        self.values[e.0 as usize * self.dim as usize + i as usize] == 1
    }

    fn set(&mut self, e: Vec2, i: u32, v: bool) {
        self.values[e.0 as usize * self.dim as usize + i as usize] = v as u8;
    }
}

/// A form `f: E × E → Z2` with `f(0, b) = f(a, 0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GF2Cocycle {
    dim: u32,
    values: Vec<u8>,
}

impl GF2Cocycle {
    pub fn from_fn(dim: u32, mut f: impl FnMut(Vec2, Vec2) -> bool) -> Result<Self> {
        check_dim(dim)?;
        let size = 1usize << dim;
        let mut values = Vec::with_capacity(size * size);
        for a in 0..size as u32 {
            for b in 0..size as u32 {
                let v = f(Vec2(a), Vec2(b));
                if (a == 0 || b == 0) && v {
                    return Err(Error::BadParams(
                        "cocycle must vanish when an argument is 0".into(),
                    ));
                }
                values.push(v as u8);
            }
        }
        Ok(GF2Cocycle { dim, values })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn size(&self) -> usize {
        1 << self.dim
    }

    #[inline]
    pub fn get(&self, a: Vec2, b: Vec2) -> bool {
        self.values[a.0 as usize * self.size() + b.0 as usize] == 1
    }

    /// `Q(Z2, (Z2)^n, ι, f)`.
    pub fn extension(&self) -> Extension {
        let size = self.size();
        let f = Cocycle::from_fn(size, 2, |a, b| self.values[a * size + b] as usize)
            .expect("boundary checked on construction");
        Extension::new(
            GroupTable::cyclic(2),
            LoopTable::elementary_abelian(self.dim),
            TauMap::trivial(size, 2),
            f,
        )
        .expect("dimensions agree")
    }

    /// The table of `(u,a)(v,b) = (u + v + f(a,b), a + b)`.
    pub fn build_loop(&self) -> LoopTable {
        self.extension().build()
    }

    fn vectors(&self) -> impl Iterator<Item = Vec2> + Clone {
        (0..self.size() as u32).map(Vec2)
    }
}

/// The unique right-additive cocycle extending `c`:
/// `f(a, b) = Σ_{i ∈ supp b} c(a, e_{i+1})`.
pub fn associated_cocycle(c: &CMap) -> GF2Cocycle {
    GF2Cocycle::from_fn(c.dim(), |a, b| {
        b.support().fold(false, |acc, i| acc ^ c.get(a, i))
    })
    .expect("c vanishes on the zero row")
}

/// `f(a, b + c) = f(a, b) + f(a, c)` for all `a, b, c`.
pub fn is_right_additive(f: &GF2Cocycle) -> bool {
    let vs = f.vectors();
    vs.clone().all(|a| {
        vs.clone().all(|b| {
            vs.clone()
                .all(|c| f.get(a, b + c) == f.get(a, b) ^ f.get(a, c))
        })
    })
}

/// The two equations characterizing left Bol loops `Q(Z2, E, ι, f)`:
/// `f(a, a+c) = f(a,a) + f(a,c)` and
/// `f(a, b+c) + f(a,b) + f(a,c) = f(b, a+c) + f(b,a) + f(b,c)`.
pub fn e2k2_bol_check(f: &GF2Cocycle) -> bool {
    let vs = f.vectors();
    vs.clone().all(|a| {
        vs.clone()
            .all(|c| f.get(a, a + c) == f.get(a, a) ^ f.get(a, c))
            && vs.clone().all(|b| {
                vs.clone().all(|c| {
                    f.get(a, b + c) ^ f.get(a, b) ^ f.get(a, c)
                        == f.get(b, a + c) ^ f.get(b, a) ^ f.get(b, c)
                })
            })
    })
}

/// Pairs `(w, c)` of `Q(Z2, E, ι, f)` for which `a ↦ f(a, c)` is additive.
/// For right-additive `f` this is the right nucleus.
pub fn right_nucleus_criterion(f: &GF2Cocycle) -> ElementSet {
    let vs = f.vectors();
    let additive: Vec<bool> = vs
        .clone()
        .map(|c| {
            vs.clone().all(|a| {
                vs.clone()
                    .all(|b| f.get(a + b, c) == f.get(a, c) ^ f.get(b, c))
            })
        })
        .collect();
    (0..2 * f.size())
        .filter(|&x| additive[x / 2])
        .map(Element::new)
        .collect()
}

/// The nine free values `c1, …, c9`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Q9Params(pub [bool; 9]);

impl Q9Params {
    /// The `t`-th tuple in lexicographic order, `c1` most significant.
    pub fn from_index(t: usize) -> Self {
        assert!(t < 512, "q9 index out of range");
        Q9Params(std::array::from_fn(|j| t >> (8 - j) & 1 == 1))
    }

    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, &b| acc << 1 | b as usize)
    }

    pub fn from_bits(bits: [u8; 9]) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::BadParams("q9 parameters are bits".into()));
        }
        Ok(Q9Params(bits.map(|b| b == 1)))
    }

    pub fn bits(&self) -> [u8; 9] {
        self.0.map(u8::from)
    }
}

impl fmt::Display for Q9Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.bits().iter().map(u8::to_string).collect();
        write!(f, "Q({})", parts.join(","))
    }
}

/// Accepts nine binary digits, optionally separated by commas or spaces and
/// optionally wrapped in `Q(...)`.
impl FromStr for Q9Params {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix("Q(")
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(inner);
        let digits: Vec<u8> = inner
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::BadParams(format!("bad q9 digit {c:?}"))),
            })
            .collect::<Result<_>>()?;
        let bits: [u8; 9] = digits
            .try_into()
            .map_err(|_| Error::BadParams(format!("expected 9 bits, got {s:?}")))?;
        Q9Params::from_bits(bits)
    }
}

const E1: Vec2 = Vec2(1);
const E2: Vec2 = Vec2(2);
const E3: Vec2 = Vec2(4);

/// The dimension-3 map with free values `p` and the remaining values forced:
/// `c(e, e1)` and `c(e, e2)` from symmetry with the rows of `e1` and `e2`, and
/// `c(e1+e2, e3) = c(e1,e3) + c(e2,e3) + 1`.
pub fn q9_cmap(p: Q9Params) -> CMap {
    let [c1, c2, c3, c4, c5, c6, c7, c8, c9] = p.0;
    let mut c = CMap::zero(3).expect("dimension 3");
    c.set(E1, 0, c1);
    c.set(E1, 1, c2);
    c.set(E1, 2, c4);
    c.set(E2, 1, c3);
    c.set(E2, 2, c5);
    c.set(E3, 2, c6);
    c.set(E1 + E3, 2, c7);
    c.set(E2 + E3, 2, c8);
    c.set(E1 + E2 + E3, 2, c9);
    for e in 1..8 {
        let e = Vec2(e);
        let col1 = e.support().fold(false, |acc, i| acc ^ c.get(E1, i));
        c.set(e, 0, col1);
    }
    for e in 1..8 {
        let e = Vec2(e);
        let col2 = e.support().fold(false, |acc, i| acc ^ c.get(E2, i));
        c.set(e, 1, col2);
    }
    c.set(E1 + E2, 2, c4 ^ c5 ^ true);
    c
}

pub fn build_q9(p: Q9Params) -> LoopTable {
    associated_cocycle(&q9_cmap(p))
        .build_loop()
        .with_name(p.to_string())
}

/// All 512 loops `Q(c1, …, c9)` in lexicographic order of the tuple.
pub fn enumerate_q9() -> Vec<LoopTable> {
    (0..512usize)
        .into_par_iter()
        .map(|t| build_q9(Q9Params::from_index(t)))
        .collect()
}

/// The conditions placed on `c` for the family with non-subloop commutant:
/// `f(e1, e) = f(e, e1)` and `f(e2, e) = f(e, e2)` for every `e` (which
/// include the basis symmetries), and `c(e1+e2, e3) ≠ c(e1,e3) + c(e2,e3)`.
pub fn is_admissible(c: &CMap) -> bool {
    if c.dim() < 3 {
        return false;
    }
    let sum = |e: Vec2, w: Vec2| w.support().fold(false, |acc, i| acc ^ c.get(e, i));
    let symmetric = (0..1u32 << c.dim())
        .map(Vec2)
        .all(|e| c.get(e, 0) == sum(E1, e) && c.get(e, 1) == sum(E2, e));
    symmetric && c.get(E1 + E2, 2) != c.get(E1, 2) ^ c.get(E2, 2)
}

/// Every admissible map of dimension 3, found by scanning all `2^21` maps.
pub fn brute_force_admissible_dim3() -> Vec<CMap> {
    const FREE: u32 = 21;
    let mut found: Vec<CMap> = (0..1u32 << FREE)
        .into_par_iter()
        .filter_map(|word| {
            let c = CMap::from_fn(3, |e, i| e.0 != 0 && word >> ((e.0 - 1) * 3 + i) & 1 == 1)
                .expect("zero row is untouched");
            is_admissible(&c).then_some(c)
        })
        .collect();
    found.sort_by(|a, b| a.values.cmp(&b.values));
    found
}

/// Number of free bits of the admissible maps of dimension `n`, computed as
/// `#variables − rank` of the affine system over GF(2). `None` when the
/// system is inconsistent.
pub fn free_parameter_count(n: u32) -> Result<Option<usize>> {
    if !(3..=MAX_DIM).contains(&n) {
        return Err(Error::BadParams(format!(
            "dimension {n} outside 3..={MAX_DIM}"
        )));
    }
    let vars = ((1usize << n) - 1) * n as usize;
    let var = |e: u32, i: u32| (e as usize - 1) * n as usize + i as usize;
    let words = (vars + 1).div_ceil(64);
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut row = |terms: &[usize], rhs: bool| {
        let mut r = vec![0u64; words];
        for &t in terms {
            r[t / 64] ^= 1 << (t % 64);
        }
        if rhs {
            r[vars / 64] ^= 1 << (vars % 64);
        }
        rows.push(r);
    };
    for e in 1..1u32 << n {
        for (col, base) in [(0, 1u32), (1, 2u32)] {
            // c(e, e_col) + Σ_{i ∈ supp e} c(e_col, e_i) = 0
            let mut terms = vec![var(e, col)];
            terms.extend(Vec2(e).support().map(|i| var(base, i)));
            row(&terms, false);
        }
    }
    row(&[var(3, 2), var(1, 2), var(2, 2)], true);
    let (rank, consistent) = gf2_rank(rows, vars);
    Ok(consistent.then_some(vars - rank))
}

/// Gaussian elimination on rows of `vars` coefficient bits followed by one
/// constant bit. Returns the rank and whether the system is consistent.
fn gf2_rank(mut rows: Vec<Vec<u64>>, vars: usize) -> (usize, bool) {
    let bit = |r: &[u64], j: usize| r[j / 64] >> (j % 64) & 1 == 1;
    let mut rank = 0;
    for col in 0..vars {
        let Some(p) = (rank..rows.len()).find(|&r| bit(&rows[r], col)) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, other) in rows.iter_mut().enumerate() {
            if r != rank && bit(other, col) {
                other.iter_mut().zip(&pivot).for_each(|(x, y)| *x ^= y);
            }
        }
        rank += 1;
    }
    let consistent = rows[rank..].iter().all(|r| !bit(r, vars));
    (rank, consistent)
}

/// `(2^n − 4)(n − 2) + 3n − 4`.
pub fn free_parameter_formula(n: u32) -> usize {
    ((1usize << n) - 4) * (n as usize - 2) + 3 * n as usize - 4
}

/// An invertible linear map of `(Z2)^n`, stored as the images of the basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearMap {
    columns: Vec<u32>,
}

impl LinearMap {
    pub fn apply(&self, v: Vec2) -> Vec2 {
        Vec2(v.support().fold(0, |acc, i| acc ^ self.columns[i as usize]))
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }
}

/// `GL(n, 2)`, by filtering all `n × n` bit matrices for invertibility.
pub fn general_linear_group(n: u32) -> Result<Vec<LinearMap>> {
    if n == 0 || n > 4 {
        return Err(Error::BadParams(format!(
            "GL(n, 2) is materialized for 1 <= n <= 4, got {n}"
        )));
    }
    let size = 1u32 << n;
    let out = (0..1u32 << (n * n))
        .filter_map(|word| {
            let columns: Vec<u32> = (0..n).map(|i| word >> (i * n) & (size - 1)).collect();
            let map = LinearMap { columns };
            let mut seen = vec![false; size as usize];
            (0..size)
                .all(|v| !std::mem::replace(&mut seen[map.apply(Vec2(v)).0 as usize], true))
                .then_some(map)
        })
        .collect();
    Ok(out)
}

/// The first `φ ∈ GL(n, 2)` with `f(a, b) = g(φ(a), φ(b))` for all `a, b`.
pub fn find_cocycle_equivalence(f: &GF2Cocycle, g: &GF2Cocycle) -> Result<Option<LinearMap>> {
    if f.dim() != g.dim() {
        return Ok(None);
    }
    let gl = general_linear_group(f.dim())?;
    let vs: Vec<Vec2> = f.vectors().collect();
    Ok(gl.into_iter().find(|phi| {
        let img: Vec<Vec2> = vs.iter().map(|&v| phi.apply(v)).collect();
        vs.iter().all(|&a| {
            vs.iter()
                .all(|&b| f.get(a, b) == g.get(img[a.0 as usize], img[b.0 as usize]))
        })
    }))
}

pub fn cocycle_equivalent(f: &GF2Cocycle, g: &GF2Cocycle) -> Result<bool> {
    Ok(find_cocycle_equivalence(f, g)?.is_some())
}

/// `K × E` with `K = ⟨k1, k2⟩`, `E = ⟨e1, e2⟩` and
/// `(u,a)(v,b) = (ψ_{a,b}(u) v, ab)`, where `ψ_{1,e2} = ψ_{1,e1e2}` sends
/// `k2 ↦ k1k2`, `ψ_{e1,e2} = ψ_{e1,e1e2}` sends `k1 ↦ k1k2`, and every other
/// `ψ_{a,b}` is trivial. The pair `(u, a)` has index `u + 4a` with bits
/// `k1 = 1, k2 = 2` and `e1 = 1, e2 = 2`.
pub fn build_exceptional() -> LoopTable {
    LoopTable::from_fn(16, |x, y| {
        let (u, a) = (x % 4, x / 4);
        let (v, b) = (y % 4, y / 4);
        let psi_u = match (a, b) {
            (0, 2 | 3) if u & 2 != 0 => u ^ 1,
            (1, 2 | 3) if u & 1 != 0 => u ^ 2,
            _ => u,
        };
        (psi_u ^ v) + 4 * (a ^ b)
    })
    .expect("exceptional construction is a loop")
    .with_name("exceptional")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::iso::are_isomorphic;
    use crate::structure::{check_identity, commutant, is_subloop, nuclei, Identity};

    #[test]
    fn zero_map_gives_zero_cocycle() {
        let f = associated_cocycle(&CMap::zero(3).unwrap());
        assert!(f.values.iter().all(|&v| v == 0));
        assert_eq!(f.build_loop(), LoopTable::elementary_abelian(4));
    }

    #[test]
    fn single_flip_breaks_right_additivity() {
        let f = associated_cocycle(&q9_cmap(Q9Params::from_index(77)));
        assert!(is_right_additive(&f));
        let g =
            GF2Cocycle::from_fn(3, |a, b| f.get(a, b) ^ (a == Vec2(5) && b == Vec2(6))).unwrap();
        assert!(!is_right_additive(&g));
    }

    #[test]
    fn q9_zero() {
        let q = build_q9(Q9Params::default());
        assert_eq!(q.name(), Some("Q(0,0,0,0,0,0,0,0,0)"));
        assert!(check_identity(&q, Identity::LeftBol));
        assert!(!check_identity(&q, Identity::Associative));
        let c = commutant(&q);
        assert_eq!(c.len(), 6);
        assert!(!is_subloop(&q, &c));
    }

    #[test]
    fn q9_pairs_of_e1_and_e2_commute() {
        for t in [0, 1, 200, 511] {
            let q = build_q9(Q9Params::from_index(t));
            let c = commutant(&q);
            // (1, e1) and (0, e2) are labels 4 and 5
            let (x, y) = (Element::from_label(4), Element::from_label(5));
            assert!(c.contains(x) && c.contains(y));
            assert!(!c.contains(q.mul(x, y)));
            assert!(c.is_subset(&nuclei(&q).right));
        }
    }

    #[test]
    fn q9_params_round_trip() {
        for t in [0, 1, 255, 256, 511] {
            let p = Q9Params::from_index(t);
            assert_eq!(p.index(), t);
            assert_eq!(p.to_string().parse::<Q9Params>().unwrap(), p);
        }
        assert_eq!(
            "000000001".parse::<Q9Params>().unwrap(),
            Q9Params::from_index(1)
        );
        assert_eq!(
            "1 0 1 0 0 1 0 0 1".parse::<Q9Params>().unwrap().bits(),
            [1, 0, 1, 0, 0, 1, 0, 0, 1]
        );
        assert!("00000000".parse::<Q9Params>().is_err());
        assert!("00000000x".parse::<Q9Params>().is_err());
    }

    #[test]
    fn gl_orders() {
        assert_eq!(general_linear_group(1).unwrap().len(), 1);
        assert_eq!(general_linear_group(2).unwrap().len(), 6);
        assert_eq!(general_linear_group(3).unwrap().len(), 168);
        assert!(general_linear_group(5).is_err());
    }

    #[test]
    fn equivalence_and_isomorphism() {
        let f0 = associated_cocycle(&q9_cmap(Q9Params::from_index(0)));
        let f1 = associated_cocycle(&q9_cmap(Q9Params::from_index(1)));
        assert!(cocycle_equivalent(&f0, &f0).unwrap());
        assert!(!cocycle_equivalent(&f0, &f1).unwrap());
        // transport f0 along a linear map
        let gl = general_linear_group(3).unwrap();
        let phi = &gl[100];
        let inv = gl
            .iter()
            .find(|m| (0..8).all(|v| m.apply(phi.apply(Vec2(v))) == Vec2(v)))
            .unwrap();
        let g = GF2Cocycle::from_fn(3, |a, b| f0.get(inv.apply(a), inv.apply(b))).unwrap();
        assert!(cocycle_equivalent(&f0, &g).unwrap());
        assert!(are_isomorphic(&f0.build_loop(), &g.build_loop()));
    }

    #[test]
    fn exceptional_matches_fixture() {
        let q = build_exceptional();
        assert_eq!(q, fixtures::order16_exceptional());
        let l = |x| Element::from_label(x);
        assert_eq!(q.mul(l(5), l(9)), l(13));
        assert_eq!(q.mul(l(6), l(9)), l(16));
    }

    #[test]
    fn twist_on_e1_e1_is_not_bol() {
        let q = LoopTable::from_fn(16, |x, y| {
            let (u, a) = (x % 4, x / 4);
            let (v, b) = (y % 4, y / 4);
            let psi_u = match (a, b) {
                (0, 2 | 3) if u & 2 != 0 => u ^ 1,
                (1, 1 | 3) if u & 1 != 0 => u ^ 2,
                _ => u,
            };
            (psi_u ^ v) + 4 * (a ^ b)
        })
        .unwrap();
        assert!(!check_identity(&q, Identity::LeftBol));
    }

    #[test]
    fn formula_values() {
        assert_eq!(free_parameter_formula(3), 9);
        assert_eq!(free_parameter_formula(4), 32);
        for n in 3..=MAX_DIM {
            assert_eq!(
                free_parameter_count(n).unwrap(),
                Some(free_parameter_formula(n))
            );
        }
        assert!(free_parameter_count(2).is_err());
    }

    #[test]
    fn q9_maps_are_admissible() {
        for t in 0..512 {
            assert!(is_admissible(&q9_cmap(Q9Params::from_index(t))));
        }
        assert!(!is_admissible(&CMap::zero(3).unwrap()));
    }
}
