//! Deciding the S-properties of submodules and modules.
//!
//! All quantifiers are exhausted exactly. Witnesses are the first `s ∈ S` in
//! canonical order; counterexamples are the first failing submodule, element
//! or pair.

mod profile;

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::module::{FiniteModule, Submodule};
use crate::multset::MultSet;
use crate::ring::Ideal;
use crate::set::{Elem, ElemSet};

pub use profile::ModuleProfile;

/// What made a property true.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A single `s ∈ S`.
    Scalar { s: Elem },
    /// `s ∈ S` and `a ∈ (Rx:M)` with `sx = ax`.
    ScalarAndMultiplier { s: Elem, a: Elem },
    /// `s` and ideal `I` with `sN ⊆ IM ⊆ N`.
    ScalarAndIdeal { s: Elem, ideal: Vec<Elem> },
    /// One witness per submodule (or element, or pair), in canonical order.
    Each { scalars: Vec<Elem> },
    /// Per-submodule `(s, I)` pairs.
    EachWithIdeal { pairs: Vec<(Elem, Vec<Elem>)> },
}

/// What made a property false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    Submodule { elems: Vec<Elem> },
    Element { x: Elem },
    Pair { n: Vec<Elem>, k: Vec<Elem> },
    /// An ideal on which the best candidate scalar fails.
    Ideal { ideal: Vec<Elem> },
    SubmoduleAndIdeal { elems: Vec<Elem>, ideal: Vec<Elem> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
    pub counterexample: Option<Counterexample>,
    /// `0 ∈ S`, so the verdict is true for trivial reasons.
    pub degenerate: bool,
}

impl Verdict {
    fn yes(s: &MultSet, w: Witness) -> Verdict {
        Verdict {
            holds: true,
            witness: Some(w),
            counterexample: None,
            degenerate: s.is_degenerate(),
        }
    }

    fn no(s: &MultSet, c: Counterexample) -> Verdict {
        Verdict {
            holds: false,
            witness: None,
            counterexample: Some(c),
            degenerate: s.is_degenerate(),
        }
    }
}

/// Properties that can be asked of every submodule at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    SIdempotent,
    SPure,
    SCopure,
}

impl std::str::FromStr for Property {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "s-idempotent" | "idempotent" => Ok(Property::SIdempotent),
            "s-pure" | "pure" => Ok(Property::SPure),
            "s-copure" | "copure" => Ok(Property::SCopure),
            _ => Err(Error::UnknownCheck(s.to_string())),
        }
    }
}

fn check_inputs(m: &FiniteModule, s: &MultSet) -> Result<()> {
    if s.ring_id() != m.ring().id() {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

fn position(p: &ModuleProfile, n: &Submodule) -> Result<usize> {
    p.position(n).ok_or(Error::ModuleMismatch)
}

/// First `s ∈ S` inside `w`.
fn first_in(s: &MultSet, w: &ElemSet) -> Option<Elem> {
    s.set().first_common(w)
}

/// Conjunction over a family of scalar sets; reports the first failure.
fn all_of(
    s: &MultSet,
    sets: &[ElemSet],
    fail: impl Fn(usize) -> Counterexample,
) -> Verdict {
    let mut scalars = Vec::with_capacity(sets.len());
    for (i, w) in sets.iter().enumerate() {
        match first_in(s, w) {
            Some(x) => scalars.push(x),
            None => return Verdict::no(s, fail(i)),
        }
    }
    Verdict::yes(s, Witness::Each { scalars })
}

/// The largest multiple in `S`: any uniform witness implies this one works.
fn best_scalar(m: &FiniteModule, s: &MultSet) -> Elem {
    m.ring()
        .has_maximal_multiple(s)
        .expect("finite multiplicative sets have a maximal multiple")
}

/// `x` is S-idempotent: `sx = ax` for some `s ∈ S`, `a ∈ (Rx:M)`.
pub fn is_s_idempotent_element(m: &FiniteModule, s: &MultSet, x: Elem) -> Result<Verdict> {
    check_inputs(m, s)?;
    if x as usize >= m.size() {
        return Err(Error::InvalidElement(vec![x]));
    }
    let p = m.profile()?;
    let w = &p.element_scalars(m)[x as usize];
    Ok(match first_in(s, w) {
        Some(sv) => {
            let colon = p.colon(p.cyclic_index(m)[x as usize]);
            let target = m.act(sv, x);
            let a = colon
                .elems()
                .iter()
                .copied()
                .find(|&a| m.act(a, x) == target)
                .expect("scalar set membership");
            Verdict::yes(s, Witness::ScalarAndMultiplier { s: sv, a })
        }
        None => Verdict::no(s, Counterexample::Element { x }),
    })
}

/// `sN ⊆ (N:M)²M` for some `s ∈ S`.
pub fn is_s_idempotent_submodule(m: &FiniteModule, s: &MultSet, n: &Submodule) -> Result<Verdict> {
    check_inputs(m, s)?;
    let p = m.profile()?;
    let i = position(&p, n)?;
    Ok(match first_in(s, p.idempotent_scalars(i)) {
        Some(sv) => Verdict::yes(s, Witness::Scalar { s: sv }),
        None => Verdict::no(
            s,
            Counterexample::Submodule {
                elems: n.elems().to_vec(),
            },
        ),
    })
}

/// Every submodule is S-idempotent.
pub fn is_fully_s_idempotent(m: &FiniteModule, s: &MultSet) -> Result<Verdict> {
    is_fully(Property::SIdempotent, m, s)
}

/// Fast path: `I = (N:M)` is the only ideal worth trying, since `IM ⊆ N`
/// forces `I ⊆ (N:M)`.
pub fn is_s_multiplication(m: &FiniteModule, s: &MultSet) -> Result<Verdict> {
    check_inputs(m, s)?;
    let p = m.profile()?;
    let subs = p.submodules();
    let mut pairs = Vec::with_capacity(subs.len());
    for (i, n) in subs.iter().enumerate() {
        match first_in(s, p.multiplication_scalars(i)) {
            Some(sv) => pairs.push((sv, p.colon(i).elems().to_vec())),
            None => {
                return Ok(Verdict::no(
                    s,
                    Counterexample::Submodule {
                        elems: n.elems().to_vec(),
                    },
                ))
            }
        }
    }
    Ok(Verdict::yes(s, Witness::EachWithIdeal { pairs }))
}

/// Definitional search over every ideal `I` and `s ∈ S`.
pub fn is_s_multiplication_by_ideals(m: &FiniteModule, s: &MultSet) -> Result<Verdict> {
    check_inputs(m, s)?;
    let ideals = m.ring().ideals()?;
    let whole = m.whole();
    let ims: Vec<Submodule> = ideals
        .iter()
        .map(|i| m.ideal_times(i, &whole))
        .collect::<Result<_>>()?;
    let subs = m.submodules()?;
    let mut pairs = Vec::with_capacity(subs.len());
    'subs: for n in subs.iter() {
        for (ideal, im) in ideals.iter().zip(&ims) {
            if !im.is_subset(n) {
                continue;
            }
            for &sv in s.elems() {
                if n.elems().iter().all(|&x| im.contains(m.act(sv, x))) {
                    pairs.push((sv, ideal.elems().to_vec()));
                    continue 'subs;
                }
            }
        }
        return Ok(Verdict::no(
            s,
            Counterexample::Submodule {
                elems: n.elems().to_vec(),
            },
        ));
    }
    Ok(Verdict::yes(s, Witness::EachWithIdeal { pairs }))
}

fn uniform_verdict(
    m: &FiniteModule,
    s: &MultSet,
    w: &ElemSet,
    fails_on: impl Fn(Elem) -> Result<Option<Ideal>>,
) -> Result<Verdict> {
    Ok(match first_in(s, w) {
        Some(sv) => Verdict::yes(s, Witness::Scalar { s: sv }),
        None => {
            let ideal = fails_on(best_scalar(m, s))?.expect("best scalar must fail somewhere");
            Verdict::no(
                s,
                Counterexample::Ideal {
                    ideal: ideal.elems().to_vec(),
                },
            )
        }
    })
}

/// `∃s ∈ S ∀I: s(N ∩ IM) ⊆ IN`.
pub fn is_s_pure_submodule(m: &FiniteModule, s: &MultSet, n: &Submodule) -> Result<Verdict> {
    check_inputs(m, s)?;
    let p = m.profile()?;
    let i = position(&p, n)?;
    let w = &p.pure_scalars(m)?[i];
    uniform_verdict(m, s, w, |sv| {
        let whole = m.whole();
        for ideal in m.ring().ideals()?.iter() {
            let meet = m.sub_intersect(n, &m.ideal_times(ideal, &whole)?)?;
            let target = m.ideal_times(ideal, n)?;
            if meet.elems().iter().any(|&x| !target.contains(m.act(sv, x))) {
                return Ok(Some(ideal.clone()));
            }
        }
        Ok(None)
    })
}

/// `∃s ∈ S ∀I: s(N :_M I) ⊆ N + (0 :_M I)`.
pub fn is_s_copure_submodule(m: &FiniteModule, s: &MultSet, n: &Submodule) -> Result<Verdict> {
    check_inputs(m, s)?;
    let p = m.profile()?;
    let i = position(&p, n)?;
    let w = &p.copure_scalars(m)?[i];
    uniform_verdict(m, s, w, |sv| {
        let zero = m.zero_submodule();
        for ideal in m.ring().ideals()?.iter() {
            let col = m.colon_in_module(n, ideal)?;
            let target = m.sub_sum(n, &m.colon_in_module(&zero, ideal)?)?;
            if col.elems().iter().any(|&x| !target.contains(m.act(sv, x))) {
                return Ok(Some(ideal.clone()));
            }
        }
        Ok(None)
    })
}

/// The property holds for every submodule.
pub fn is_fully(property: Property, m: &FiniteModule, s: &MultSet) -> Result<Verdict> {
    check_inputs(m, s)?;
    let p = m.profile()?;
    let subs = p.submodules();
    let sets: Vec<ElemSet> = match property {
        Property::SIdempotent => (0..subs.len()).map(|i| p.idempotent_scalars(i).clone()).collect(),
        Property::SPure => p.pure_scalars(m)?.to_vec(),
        Property::SCopure => p.copure_scalars(m)?.to_vec(),
    };
    Ok(all_of(s, &sets, |i| Counterexample::Submodule {
        elems: subs[i].elems().to_vec(),
    }))
}

/// Every cyclic submodule `Rx` is S-idempotent.
pub fn cyclic_submodules_s_idempotent(m: &FiniteModule, s: &MultSet) -> Result<Verdict> {
    check_inputs(m, s)?;
    let p = m.profile()?;
    let cyc = p.cyclic_index(m);
    let sets: Vec<ElemSet> = cyc.iter().map(|&i| p.idempotent_scalars(i).clone()).collect();
    Ok(all_of(s, &sets, |x| Counterexample::Submodule {
        elems: p.submodules()[cyc[x]].elems().to_vec(),
    }))
}

/// Every element is S-idempotent.
pub fn elements_s_idempotent(m: &FiniteModule, s: &MultSet) -> Result<Verdict> {
    check_inputs(m, s)?;
    let p = m.profile()?;
    Ok(all_of(s, p.element_scalars(m), |x| Counterexample::Element {
        x: x as Elem,
    }))
}

/// For all submodules `N, K`: `s(N ∩ K) ⊆ (N:M)(K:M)M` for some `s ∈ S`.
pub fn pairwise_intersections_s_idempotent(m: &FiniteModule, s: &MultSet) -> Result<Verdict> {
    check_inputs(m, s)?;
    let p = m.profile()?;
    let subs = p.submodules();
    let k = subs.len();
    let labels: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    Ok(all_of(s, p.pair_scalars(m)?, |t| {
        let (i, j) = labels[t];
        Counterexample::Pair {
            n: subs[i].elems().to_vec(),
            k: subs[j].elems().to_vec(),
        }
    }))
}

/// `∃s ∀K ⊆ N: sK ⊆ (N:M)K`.
pub fn colon_absorbs_submodules(m: &FiniteModule, s: &MultSet, n: &Submodule) -> Result<Verdict> {
    check_inputs(m, s)?;
    let p = m.profile()?;
    let i = position(&p, n)?;
    Ok(match first_in(s, &p.colon_absorbing_scalars(m)?[i]) {
        Some(sv) => Verdict::yes(s, Witness::Scalar { s: sv }),
        None => Verdict::no(s, Counterexample::Submodule { elems: n.elems().to_vec() }),
    })
}

/// `∃s ∀K ≤ M: s(K:_R N)N ⊆ (K:M)(N:M)M`.
pub fn relative_colons_absorbed(m: &FiniteModule, s: &MultSet, n: &Submodule) -> Result<Verdict> {
    check_inputs(m, s)?;
    let p = m.profile()?;
    let i = position(&p, n)?;
    Ok(match first_in(s, &p.relative_colon_scalars(m)?[i]) {
        Some(sv) => Verdict::yes(s, Witness::Scalar { s: sv }),
        None => Verdict::no(s, Counterexample::Submodule { elems: n.elems().to_vec() }),
    })
}

/// A submodule regarded as an `R`-module is S-multiplication.
pub fn submodule_is_s_multiplication(
    m: &Arc<FiniteModule>,
    s: &MultSet,
    n: &Submodule,
) -> Result<Verdict> {
    let (sub, _) = m.submodule_as_module(n)?;
    is_s_multiplication(&sub, s)
}

// Plain versions: the `S = {1}` specialization.

pub fn is_idempotent_submodule(m: &FiniteModule, n: &Submodule) -> Result<Verdict> {
    is_s_idempotent_submodule(m, &m.ring().trivial_mult_set(), n)
}

pub fn is_fully_idempotent(m: &FiniteModule) -> Result<Verdict> {
    is_fully_s_idempotent(m, &m.ring().trivial_mult_set())
}

pub fn is_multiplication(m: &FiniteModule) -> Result<Verdict> {
    is_s_multiplication(m, &m.ring().trivial_mult_set())
}

pub fn is_pure_submodule(m: &FiniteModule, n: &Submodule) -> Result<Verdict> {
    is_s_pure_submodule(m, &m.ring().trivial_mult_set(), n)
}

pub fn is_copure_submodule(m: &FiniteModule, n: &Submodule) -> Result<Verdict> {
    is_s_copure_submodule(m, &m.ring().trivial_mult_set(), n)
}

#[cfg(test)]
mod tests;
