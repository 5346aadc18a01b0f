//! Construction specs for `bolkit construct`.
//!
//! ```text
//! q9 <nine bits>                        e.g. "q9 000000000" or "q9 1,0,1,0,0,1,0,0,1"
//! exceptional
//! named <order12|order16cyclic|order16elem|order4n:N|commutant:K[:M]>
//! semidirect K=<group> E=<group> tau=<trivial|i1,i2,...>
//! ```
//!
//! A `<group>` is `cyclic:n` or `elem2:m`. An explicit `tau` lists one
//! automorphism index per element of `E` in index order; index `i` refers to
//! the `i`-th entry (from 0) of `Aut(K)` sorted by image vector, so `0` is
//! the identity and the first entry must be `0`.

use anyhow::{anyhow, bail, Context, Result};
use bolkit_core::extensions::{automorphism_group, Extension, GroupTable, NamedExample, TauMap};
use bolkit_core::gf2::{build_exceptional, build_q9, Q9Params};
use bolkit_core::LoopTable;

pub fn build(spec: &str) -> Result<LoopTable> {
    let mut words = spec.split_whitespace();
    let kind = words
        .next()
        .ok_or_else(|| anyhow!("empty construction spec"))?;
    let rest: Vec<&str> = words.collect();
    match kind {
        "q9" => {
            let p: Q9Params = rest.join(" ").parse()?;
            Ok(build_q9(p))
        }
        "exceptional" if rest.is_empty() => Ok(build_exceptional()),
        "named" if rest.len() == 1 => Ok(rest[0].parse::<NamedExample>()?.build()?),
        "semidirect" => semidirect(&rest),
        _ => bail!("bad construction spec {spec:?}"),
    }
}

fn group(text: &str) -> Result<GroupTable> {
    let (kind, arg) = text
        .split_once(':')
        .ok_or_else(|| anyhow!("bad group {text:?}, expected cyclic:n or elem2:m"))?;
    let n: u32 = arg
        .parse()
        .with_context(|| format!("bad group parameter in {text:?}"))?;
    match kind {
        "cyclic" if (1..=4096).contains(&n) => Ok(GroupTable::cyclic(n as usize)),
        "elem2" if n <= 12 => Ok(GroupTable::elementary_abelian(n)),
        _ => bail!("bad group {text:?}"),
    }
}

fn semidirect(args: &[&str]) -> Result<LoopTable> {
    let (mut k, mut e, mut tau) = (None, None, None);
    for arg in args {
        match arg.split_once('=') {
            Some(("K", v)) => k = Some(group(v)?),
            Some(("E", v)) => e = Some(group(v)?.into_table()),
            Some(("tau", v)) => tau = Some(v.to_string()),
            _ => bail!("bad semidirect argument {arg:?}"),
        }
    }
    let k = k.ok_or_else(|| anyhow!("semidirect needs K=..."))?;
    let e = e.ok_or_else(|| anyhow!("semidirect needs E=..."))?;
    let tau = match tau.as_deref() {
        None | Some("trivial") => TauMap::trivial(e.order(), k.order()),
        Some(list) => {
            let aut = automorphism_group(&k)?;
            let values = list
                .split(',')
                .map(|s| {
                    let i: usize = s
                        .trim()
                        .parse()
                        .with_context(|| format!("bad tau index {s:?}"))?;
                    aut.get(i).cloned().ok_or_else(|| {
                        anyhow!(
                            "tau index {i} out of range, Aut(K) has {} elements",
                            aut.len()
                        )
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            TauMap::new(e.order(), &k, values)?
        }
    };
    Ok(Extension::semidirect(k, e, tau)?.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use bolkit_core::structure::commutant;

    #[test]
    fn spec_kinds() {
        assert_eq!(build("q9 000000000").unwrap().order(), 16);
        assert_eq!(build("exceptional").unwrap().order(), 16);
        assert_eq!(commutant(&build("named order12").unwrap()).len(), 3);
        let q = build("semidirect K=cyclic:3 E=elem2:2 tau=0,0,0,1").unwrap();
        assert_eq!(q, build("named order12").unwrap());
        assert_eq!(
            build("semidirect K=cyclic:2 E=cyclic:3").unwrap(),
            LoopTable::cyclic(2).direct_product(&LoopTable::cyclic(3))
        );
    }

    #[test]
    fn bad_specs() {
        for spec in [
            "",
            "q9 0000",
            "named order13",
            "exceptional 1",
            "semidirect K=cyclic:3",
            "semidirect K=cyclic:3 E=elem2:2 tau=1,0,0,0",
            "semidirect K=cyclic:3 E=elem2:2 tau=0,0,0,7",
            "semidirect K=klein E=elem2:2",
            "frobnicate",
        ] {
            assert!(build(spec).is_err(), "{spec:?}");
        }
    }
}
