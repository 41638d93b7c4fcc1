//! Brute-force oracles shared by the integration tests. They use nothing
//! but element arithmetic of the library's carriers.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use sidem::harness::{generate_corpus, CorpusBounds, Family};
use sidem::instance::{build_module, build_ring};
use sidem::{Elem, FiniteModule, FiniteRing, Limits, MultSet};

/// Every distinct `(R, M)` of the default corpus with `|M| ≤ max_module`.
pub fn settings(max_module: usize) -> Vec<(Arc<FiniteRing>, Arc<FiniteModule>)> {
    let corpus = generate_corpus(&Family::ALL, &CorpusBounds::default(), Limits::default());
    let mut out: Vec<(Arc<FiniteRing>, Arc<FiniteModule>)> = Vec::new();
    let mut last = None;
    for d in corpus {
        let key = (d.ring.clone(), d.module.clone());
        if last.as_ref() == Some(&key) {
            continue;
        }
        last = Some(key);
        let r = build_ring(&d.ring, "ring", Limits::default()).unwrap();
        let m = build_module(&r, &d.module, "module", Limits::default()).unwrap();
        if m.size() <= max_module {
            out.push((r, m));
        }
    }
    out
}

pub fn is_submodule(m: &FiniteModule, set: &BTreeSet<Elem>) -> bool {
    set.contains(&0)
        && set.iter().all(|&a| set.iter().all(|&b| set.contains(&m.add(a, b))))
        && set.iter().all(|&x| m.ring().elements().all(|r| set.contains(&m.act(r, x))))
}

/// Every subset of the carrier, kept when closed.
pub fn submodules_by_subsets(m: &FiniteModule) -> BTreeSet<Vec<Elem>> {
    let n = m.size();
    assert!(n <= 16);
    (0u32..1 << n)
        .map(|mask| (0..n as Elem).filter(|&x| mask >> x & 1 == 1).collect::<BTreeSet<_>>())
        .filter(|s| is_submodule(m, s))
        .map(|s| s.into_iter().collect())
        .collect()
}

/// Submodules as sums of cyclic submodules, closed under pairwise sums.
pub fn submodules_by_sums(m: &FiniteModule) -> BTreeSet<Vec<Elem>> {
    let close = |gens: &BTreeSet<Elem>| -> BTreeSet<Elem> {
        let mut set: BTreeSet<Elem> = [0].into();
        let mut frontier: Vec<Elem> = vec![0];
        let spanning: Vec<Elem> = gens
            .iter()
            .flat_map(|&g| m.ring().elements().map(move |r| (r, g)))
            .map(|(r, g)| m.act(r, g))
            .collect();
        while let Some(x) = frontier.pop() {
            for &y in &spanning {
                let z = m.add(x, y);
                if set.insert(z) {
                    frontier.push(z);
                }
            }
        }
        set
    };
    let cyclic: BTreeSet<BTreeSet<Elem>> = m.elements().map(|x| close(&[x].into())).collect();
    let mut all: BTreeSet<BTreeSet<Elem>> = cyclic.clone();
    loop {
        let mut next = all.clone();
        for a in &all {
            for c in &cyclic {
                next.insert(close(&a.union(c).copied().collect()));
            }
        }
        if next.len() == all.len() {
            break;
        }
        all = next;
    }
    all.into_iter().map(|s| s.into_iter().collect()).collect()
}

pub fn library_submodules(m: &FiniteModule) -> BTreeSet<Vec<Elem>> {
    m.submodules().unwrap().iter().map(|n| n.elems().to_vec()).collect()
}

/// `x ∈ S*` iff `u(xr − s) = 0` for some `r ∈ R` and `s, u ∈ S`.
pub fn saturation_by_definition(r: &FiniteRing, s: &MultSet) -> Vec<Elem> {
    r.elements()
        .filter(|&x| {
            r.elements().any(|y| {
                s.elems().iter().any(|&t| {
                    let diff = r.sub(r.mul(x, y), t);
                    s.elems().iter().any(|&u| r.mul(u, diff) == 0)
                })
            })
        })
        .collect()
}

