//! Extensions `Q(K, E, τ, f)` of a group `K` by a loop `E`, the condition
//! predicates that describe their structure, and a handful of named
//! semidirect examples.

mod extension;
mod group;

use std::fmt;
use std::str::FromStr;

pub use extension::{
    is_homomorphism, is_semihomomorphism, ker_fix, Cocycle, Extension, KerFix, TauMap,
};
pub use group::{automorphism_group, Automorphism, GroupTable, MAX_AUTOMORPHISM_ORDER};

use crate::error::{Error, Result};
use crate::loops::LoopTable;

pub fn build_extension(
    k: &GroupTable,
    e: &LoopTable,
    tau: &TauMap,
    f: &Cocycle,
) -> Result<LoopTable> {
    Ok(Extension::new(k.clone(), e.clone(), tau.clone(), f.clone())?.build())
}

pub fn build_semidirect(k: &GroupTable, e: &LoopTable, tau: &TauMap) -> Result<LoopTable> {
    Ok(Extension::semidirect(k.clone(), e.clone(), tau.clone())?.build())
}

/// Semidirect examples over elementary abelian `E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedExample {
    /// `K = Z3`, `E = Z2²`, `τ_{e1e2}` inversion.
    Order12,
    /// `K = Z4`, `E = Z2²`, `τ_{e1e2}` inversion.
    Order16Cyclic,
    /// `K = E = Z2²`, `τ_{e1e2}: k1 ↦ k1, k2 ↦ k1k2`.
    Order16Elem,
    /// `K = Zn`, `E = Z2²`, `τ_{e1e2}` inversion; order `4n`.
    Order4n { n: usize },
    /// `K = Z3`, `E = Z2^m` with `|Ker τ| = k`; `m` defaults to the least
    /// `m ≥ 2` with `2^m > k`.
    CommutantOrder { k: usize, m: Option<u32> },
}

impl NamedExample {
    /// The semidirect data `(K, E, τ)`.
    pub fn extension(&self) -> Result<Extension> {
        match *self {
            NamedExample::Order12 => inverted_on_e1e2(GroupTable::cyclic(3)),
            NamedExample::Order16Cyclic => inverted_on_e1e2(GroupTable::cyclic(4)),
            NamedExample::Order16Elem => {
                let k = GroupTable::elementary_abelian(2);
                // k1 = index 1, k2 = index 2, k1k2 = index 3
                let t = Automorphism::new(
                    &k,
                    crate::Permutation::from_images(vec![0, 1, 3, 2]).expect("bijection"),
                )?;
                one_twist(k, t)
            }
            NamedExample::Order4n { n } => {
                if n <= 2 {
                    return Err(Error::BadParams(format!("order4n needs n > 2, got {n}")));
                }
                inverted_on_e1e2(GroupTable::cyclic(n))
            }
            NamedExample::CommutantOrder { k, m } => commutant_order(k, m),
        }
    }

    pub fn build(&self) -> Result<LoopTable> {
        let name = self.to_string();
        Ok(self.extension()?.build().with_name(name))
    }
}

pub fn build_named_example(example: NamedExample) -> Result<LoopTable> {
    example.build()
}

fn inverted_on_e1e2(k: GroupTable) -> Result<Extension> {
    let phi = Automorphism::inversion(&k)?;
    one_twist(k, phi)
}

/// `τ_1 = τ_{e1} = τ_{e2} = 1`, `τ_{e1e2} = t` over `E = Z2²`.
fn one_twist(k: GroupTable, t: Automorphism) -> Result<Extension> {
    let id = Automorphism::identity(k.order());
    let values = vec![id.clone(), id.clone(), id, t];
    let tau = TauMap::new(4, &k, values)?;
    Extension::semidirect(k, LoopTable::elementary_abelian(2), tau)
}

fn commutant_order(k: usize, m: Option<u32>) -> Result<Extension> {
    if k <= 2 {
        return Err(Error::BadParams(format!(
            "commutant order needs k > 2, got {k}"
        )));
    }
    let m = match m {
        Some(m) => m,
        None => (2..32)
            .find(|&m| (1usize << m) > k)
            .expect("k fits in 32 bits"),
    };
    if !(2..=12).contains(&m) || (1usize << m) <= k {
        return Err(Error::BadParams(format!(
            "need 2 <= m <= 12 and 2^m > k, got m = {m}, k = {k}"
        )));
    }
    let size = 1usize << m;
    let kg = GroupTable::cyclic(3);
    let id = Automorphism::identity(3);
    let phi = Automorphism::inversion(&kg)?;
    // a = e1, b = e2 fixed, ab = e1e2 twisted; of the rest the first k - 3
    // stay in the kernel.
    let values = (0..size)
        .map(|a| match a {
            0..=2 => id.clone(),
            3 => phi.clone(),
            _ if a - 4 < k - 3 => id.clone(),
            _ => phi.clone(),
        })
        .collect();
    let tau = TauMap::new(size, &kg, values)?;
    Extension::semidirect(kg, LoopTable::elementary_abelian(m), tau)
}

impl fmt::Display for NamedExample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedExample::Order12 => write!(f, "order12"),
            NamedExample::Order16Cyclic => write!(f, "order16cyclic"),
            NamedExample::Order16Elem => write!(f, "order16elem"),
            NamedExample::Order4n { n } => write!(f, "order4n:{n}"),
            NamedExample::CommutantOrder { k, m: None } => write!(f, "commutant:{k}"),
            NamedExample::CommutantOrder { k, m: Some(m) } => write!(f, "commutant:{k}:{m}"),
        }
    }
}

/// Accepts `order12`, `order16cyclic`, `order16elem`, `order4n:N`,
/// `commutant:K` and `commutant:K:M`.
impl FromStr for NamedExample {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParams(format!("unknown example {s:?}"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["order12"] => Ok(NamedExample::Order12),
            ["order16cyclic"] => Ok(NamedExample::Order16Cyclic),
            ["order16elem"] => Ok(NamedExample::Order16Elem),
            ["order4n", n] => Ok(NamedExample::Order4n { n: num(n)? }),
            ["commutant", k] => Ok(NamedExample::CommutantOrder {
                k: num(k)?,
                m: None,
            }),
            ["commutant", k, m] => Ok(NamedExample::CommutantOrder {
                k: num(k)?,
                m: Some(num(m)? as u32),
            }),
            _ => Err(bad()),
        }
    }
}
