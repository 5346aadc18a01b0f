use super::group::{Automorphism, GroupTable};
use crate::error::{Error, Result};
use crate::loops::{Element, LoopTable};
use crate::structure::{self, ElementSet};

/// A map `τ: E → Aut(K)` with `τ_1 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauMap {
    k_order: usize,
    values: Vec<Automorphism>,
}

impl TauMap {
    /// `values[a]` is `τ_a` for the element of `E` with index `a`.
    pub fn new(e_order: usize, k: &GroupTable, values: Vec<Automorphism>) -> Result<Self> {
        if values.len() != e_order {
            return Err(Error::BadParams(format!(
                "tau has {} values for a loop of order {e_order}",
                values.len()
            )));
        }
        if values.iter().any(|t| t.perm().degree() != k.order()) {
            return Err(Error::BadParams("tau values act on the wrong group".into()));
        }
        if !values[0].is_identity() {
            return Err(Error::BadParams(
                "tau must send the identity to the identity automorphism".into(),
            ));
        }
        Ok(TauMap {
            k_order: k.order(),
            values,
        })
    }

    pub fn trivial(e_order: usize, k_order: usize) -> Self {
        TauMap {
            k_order,
            values: vec![Automorphism::identity(k_order); e_order],
        }
    }

    pub fn get(&self, a: Element) -> &Automorphism {
        &self.values[a.index()]
    }

    pub fn values(&self) -> &[Automorphism] {
        &self.values
    }

    pub fn e_order(&self) -> usize {
        self.values.len()
    }

    pub fn k_order(&self) -> usize {
        self.k_order
    }

    #[inline]
    fn at(&self, a: usize, u: usize) -> usize {
        self.values[a].apply_ix(u)
    }
}

/// A map `f: E × E → K` with `f(a,1) = f(1,a) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    e_order: usize,
    k_order: usize,
    values: Vec<u16>,
}

impl Cocycle {
    pub fn trivial(e_order: usize, k_order: usize) -> Self {
        Cocycle {
            e_order,
            k_order,
            values: vec![0; e_order * e_order],
        }
    }

    /// Cocycle from zero-based values `f(a, b)`, checking the boundary
    /// condition.
    pub fn from_fn(
        e_order: usize,
        k_order: usize,
        mut f: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self> {
        let mut values = Vec::with_capacity(e_order * e_order);
        for a in 0..e_order {
            for b in 0..e_order {
                let v = f(a, b);
                if v >= k_order {
                    return Err(Error::BadParams(format!("cocycle value {v} outside K")));
                }
                if (a == 0 || b == 0) && v != 0 {
                    return Err(Error::BadParams(
                        "cocycle must vanish when an argument is 1".into(),
                    ));
                }
                values.push(v as u16);
            }
        }
        Ok(Cocycle {
            e_order,
            k_order,
            values,
        })
    }

    pub fn get(&self, a: Element, b: Element) -> Element {
        Element::new(self.at(a.index(), b.index()))
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    #[inline]
    fn at(&self, a: usize, b: usize) -> usize {
        self.values[a * self.e_order + b] as usize
    }
}

/// Ingredients of the extension `Q(K, E, τ, f)` on `K × E` with
/// `(u,a)(v,b) = (u·τ_a(v)·f(a,b), a*b)`.
///
/// The pair `(u, a)` is element `u + |K|·a` of the built table (zero-based;
/// one-based labels give `u + |K|·(a − 1)` with `u, a` one-based).
#[derive(Clone, Debug)]
pub struct Extension {
    k: GroupTable,
    e: LoopTable,
    tau: TauMap,
    f: Cocycle,
}

impl Extension {
    pub fn new(k: GroupTable, e: LoopTable, tau: TauMap, f: Cocycle) -> Result<Self> {
        if tau.e_order() != e.order() || tau.k_order() != k.order() {
            return Err(Error::BadParams("tau does not match (K, E)".into()));
        }
        if f.e_order != e.order() || f.k_order != k.order() {
            return Err(Error::BadParams("cocycle does not match (K, E)".into()));
        }
        Ok(Extension { k, e, tau, f })
    }

    /// The semidirect product `Q(K, E, τ)` with the trivial cocycle.
    pub fn semidirect(k: GroupTable, e: LoopTable, tau: TauMap) -> Result<Self> {
        let f = Cocycle::trivial(e.order(), k.order());
        Extension::new(k, e, tau, f)
    }

    pub fn k(&self) -> &GroupTable {
        &self.k
    }

    pub fn e(&self) -> &LoopTable {
        &self.e
    }

    pub fn tau(&self) -> &TauMap {
        &self.tau
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.k.order() * self.e.order()
    }

    pub fn pair_index(&self, u: Element, a: Element) -> Element {
        Element::new(u.index() + self.k.order() * a.index())
    }

    pub fn pair_of(&self, x: Element) -> (Element, Element) {
        let k = self.k.order();
        (Element::new(x.index() % k), Element::new(x.index() / k))
    }

    /// The embedded copy `{(u, 1)}` of `K`.
    pub fn kernel_set(&self) -> ElementSet {
        (0..self.k.order()).map(Element::new).collect()
    }

    pub fn build(&self) -> LoopTable {
        let kn = self.k.order();
        let (k, e) = (&self.k, &self.e);
        LoopTable::from_fn(self.order(), |x, y| {
            let (u, a) = (x % kn, x / kn);
            let (v, b) = (y % kn, y / kn);
            let w = k.mul_ix(k.mul_ix(u, self.tau.at(a, v)), self.f.at(a, b));
            w + kn * e.mul_ix(a, b)
        })
        .expect("extension of a group by a loop is a loop")
    }

    // K-side helpers on zero-based indices.
    fn km(&self, u: usize, v: usize) -> usize {
        self.k.mul_ix(u, v)
    }

    fn km3(&self, u: usize, v: usize, w: usize) -> usize {
        self.km(self.km(u, v), w)
    }

    fn em(&self, a: usize, b: usize) -> usize {
        self.e.mul_ix(a, b)
    }

    fn t(&self, a: usize, u: usize) -> usize {
        self.tau.at(a, u)
    }

    fn f(&self, a: usize, b: usize) -> usize {
        self.f.at(a, b)
    }

    /// The two left Bol conditions on `(τ, f)`:
    ///
    /// `τ_a(f(b,a)) f(a,ba) f(a·ba,c) = τ_aτ_b(f(a,c)) τ_a(f(b,ac)) f(a,b·ac)`
    /// and
    /// `τ_a(f(b,a)) f(a,ba) τ_{a·ba}(w) = τ_aτ_bτ_a(w) τ_a(f(b,a)) f(a,ba)`,
    /// for all `a, b, c ∈ E` and `w ∈ K`. Here `τ_aτ_b` applies `τ_b` first.
    pub fn bol_conditions(&self) -> bool {
        let (en, kn) = (self.e.order(), self.k.order());
        for a in 0..en {
            for b in 0..en {
                let ba = self.em(b, a);
                let aba = self.em(a, ba);
                let head = self.km(self.t(a, self.f(b, a)), self.f(a, ba));
                for c in 0..en {
                    let ac = self.em(a, c);
                    let lhs = self.km(head, self.f(aba, c));
                    let rhs = self.km3(
                        self.t(a, self.t(b, self.f(a, c))),
                        self.t(a, self.f(b, ac)),
                        self.f(a, self.em(b, ac)),
                    );
                    if lhs != rhs {
                        return false;
                    }
                }
                for w in 0..kn {
                    let lhs = self.km(head, self.t(aba, w));
                    let rhs = self.km(self.t(a, self.t(b, self.t(a, w))), head);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether `(w, c)` lies in the right nucleus: `c ∈ RNuc(E)` and
    /// `f(a,b) τ_{ab}(w) f(ab,c) = τ_aτ_b(w) τ_a(f(b,c)) f(a,bc)` for all
    /// `a, b ∈ E`.
    fn in_right_nucleus(&self, w: usize, c: usize, rnuc_e: &[bool]) -> bool {
        if !rnuc_e[c] {
            return false;
        }
        let en = self.e.order();
        (0..en).all(|a| {
            (0..en).all(|b| {
                let ab = self.em(a, b);
                let lhs = self.km3(self.f(a, b), self.t(ab, w), self.f(ab, c));
                let rhs = self.km3(
                    self.t(a, self.t(b, w)),
                    self.t(a, self.f(b, c)),
                    self.f(a, self.em(b, c)),
                );
                lhs == rhs
            })
        })
    }

    /// Right nucleus of the built loop predicted from `(τ, f)`, as pair
    /// indices.
    pub fn right_nucleus_members(&self) -> ElementSet {
        let rnuc_e = structure::right_nucleus(&self.e).mask(self.e.order());
        let kn = self.k.order();
        (0..self.order())
            .filter(|&x| self.in_right_nucleus(x % kn, x / kn, &rnuc_e))
            .map(Element::new)
            .collect()
    }

    /// The group conditions: `E` is a group,
    /// `τ_a(f(b,c)) f(a,bc) = f(a,b) f(ab,c)` and
    /// `τ_aτ_b(w) f(a,b) = f(a,b) τ_{ab}(w)`.
    pub fn group_conditions(&self) -> bool {
        if !structure::check_identity(&self.e, structure::Identity::Associative) {
            return false;
        }
        let (en, kn) = (self.e.order(), self.k.order());
        for a in 0..en {
            for b in 0..en {
                let ab = self.em(a, b);
                let fab = self.f(a, b);
                for c in 0..en {
                    let lhs = self.km(self.t(a, self.f(b, c)), self.f(a, self.em(b, c)));
                    let rhs = self.km(fab, self.f(ab, c));
                    if lhs != rhs {
                        return false;
                    }
                }
                for w in 0..kn {
                    if self.km(self.t(a, self.t(b, w)), fab) != self.km(fab, self.t(ab, w)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Commutant of the built loop predicted from `(τ, f)`: pairs `(u, a)`
    /// with `a ∈ C(E)`, `τ_a(v) = u⁻¹vu` for all `v ∈ K` and
    /// `τ_b(u) = u f(a,b) f(b,a)⁻¹` for all `b ∈ E`.
    pub fn commutant_members(&self) -> ElementSet {
        let c_e = structure::commutant(&self.e).mask(self.e.order());
        let (en, kn) = (self.e.order(), self.k.order());
        let mut out = Vec::new();
        for a in (0..en).filter(|&a| c_e[a]) {
            for u in 0..kn {
                let ui = self.k.inv_ix(u);
                let conj = (0..kn).all(|v| self.t(a, v) == self.km3(ui, v, u));
                let twist = (0..en).all(|b| {
                    self.t(b, u) == self.km3(u, self.f(a, b), self.k.inv_ix(self.f(b, a)))
                });
                if conj && twist {
                    out.push(Element::new(u + kn * a));
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn is_semihomomorphism(&self) -> bool {
        is_semihomomorphism(&self.e, &self.tau)
    }

    pub fn ker_fix(&self) -> KerFix {
        ker_fix(&self.tau)
    }
}

/// Whether `τ_{a·ba} = τ_a ∘ τ_b ∘ τ_a` for all `a, b`.
pub fn is_semihomomorphism(e: &LoopTable, tau: &TauMap) -> bool {
    e.elements().all(|a| {
        e.elements().all(|b| {
            let aba = e.mul(a, e.mul(b, a));
            *tau.get(aba) == tau.get(a).compose(&tau.get(b).compose(tau.get(a)))
        })
    })
}

/// Whether `τ_{ab} = τ_a ∘ τ_b` for all `a, b`.
pub fn is_homomorphism(e: &LoopTable, tau: &TauMap) -> bool {
    e.elements().all(|a| {
        e.elements()
            .all(|b| *tau.get(e.mul(a, b)) == tau.get(a).compose(tau.get(b)))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KerFix {
    /// `{e ∈ E : τ_e = 1}`
    pub ker: ElementSet,
    /// `{u ∈ K : τ_e(u) = u for every e}`
    pub fix: ElementSet,
}

pub fn ker_fix(tau: &TauMap) -> KerFix {
    let ker = (0..tau.e_order())
        .filter(|&a| tau.values[a].is_identity())
        .map(Element::new)
        .collect();
    let fix = (0..tau.k_order())
        .filter(|&u| tau.values.iter().all(|t| t.apply_ix(u) == u))
        .map(Element::new)
        .collect();
    KerFix { ker, fix }
}
