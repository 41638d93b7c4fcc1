use std::sync::Arc;

use super::FiniteRing;
use crate::error::{Error, Result};
use crate::lattice::{additive_closure, enumerate_spans, greedy_generators, subgroup_sum};
use crate::set::{Elem, ElemSet};

/// An ideal: canonical element set plus a generating list.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: u64,
    set: ElemSet,
    gens: Vec<Elem>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.set == other.set
    }
}

impl Eq for Ideal {}

impl Ideal {
    pub fn ring_id(&self) -> u64 {
        self.ring
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn elems(&self) -> &[Elem] {
        self.set.elems()
    }

    pub fn gens(&self) -> &[Elem] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.set.contains(x)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.set.is_subset(&other.set)
    }

    pub fn is_zero(&self) -> bool {
        self.set.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.set.len() == self.set.universe()
    }
}

impl FiniteRing {
    pub(crate) fn wrap_ideal(&self, set: ElemSet, gens: Vec<Elem>) -> Ideal {
        Ideal {
            ring: self.id(),
            set,
            gens,
        }
    }

    fn check_own(&self, ideal: &Ideal) -> Result<()> {
        if ideal.ring != self.id() {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// The ideal `aR`.
    pub fn principal_set(&self, a: Elem) -> ElemSet {
        additive_closure(self, self.additive_gens().iter().map(|&g| self.mul(g, a)))
    }

    /// Smallest ideal containing `gens`.
    pub fn ideal_generated(&self, gens: &[Elem]) -> Ideal {
        let seeds: Vec<Elem> = gens
            .iter()
            .flat_map(|&a| self.additive_gens().iter().map(move |&g| (g, a)))
            .map(|(g, a)| self.mul(g, a))
            .collect();
        let set = additive_closure(self, seeds);
        let mut gens: Vec<Elem> = gens.iter().copied().filter(|&g| g != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        self.wrap_ideal(set, gens)
    }

    /// Wraps a set already known to be an ideal, computing generators.
    pub(crate) fn ideal_from_set(&self, set: ElemSet) -> Ideal {
        let gens = greedy_generators(
            &set,
            |x| self.principal_set(x),
            |a, b| subgroup_sum(self, a, b),
        );
        self.wrap_ideal(set, gens)
    }

    /// Checks closure under addition, negation and multiplication by `R`.
    pub fn is_ideal_set(&self, set: &ElemSet) -> bool {
        if !set.contains(0) {
            return false;
        }
        let elems = set.elems();
        elems.iter().all(|&a| set.contains(self.neg(a)))
            && elems
                .iter()
                .all(|&a| elems.iter().all(|&b| set.contains(self.add(a, b))))
            && elems
                .iter()
                .all(|&a| self.elements().all(|r| set.contains(self.mul(r, a))))
    }

    pub fn zero_ideal(&self) -> Ideal {
        self.wrap_ideal(ElemSet::from_iter_in(self.size(), [0]), Vec::new())
    }

    pub fn whole_ideal(&self) -> Ideal {
        let gens = if self.size() > 1 { vec![self.one()] } else { Vec::new() };
        self.wrap_ideal(ElemSet::full(self.size()), gens)
    }

    /// Every ideal, sorted by size then elements.
    pub fn ideals(&self) -> Result<Arc<Vec<Ideal>>> {
        if let Some(v) = self.cache.ideals.get() {
            return Ok(v.clone());
        }
        let spans = enumerate_spans(
            self,
            |x| self.principal_set(x),
            self.limits().enumeration,
            "ring",
        )?;
        let v = Arc::new(
            spans
                .into_iter()
                .map(|s| self.wrap_ideal(s.set, s.gens))
                .collect::<Vec<_>>(),
        );
        Ok(self.cache.ideals.get_or_init(|| v).clone())
    }

    /// Proper ideals maximal under inclusion.
    pub fn maximal_ideals(&self) -> Result<Arc<Vec<Ideal>>> {
        if let Some(v) = self.cache.maximal.get() {
            return Ok(v.clone());
        }
        let all = self.ideals()?;
        let proper: Vec<&Ideal> = all.iter().filter(|i| !i.is_whole()).collect();
        let v: Vec<Ideal> = proper
            .iter()
            .filter(|i| {
                !proper
                    .iter()
                    .any(|j| j.len() > i.len() && i.is_subset(j))
            })
            .map(|i| (*i).clone())
            .collect();
        Ok(self.cache.maximal.get_or_init(|| Arc::new(v)).clone())
    }

    /// Proper ideals `P` with `ab ∈ P ⇒ a ∈ P or b ∈ P`.
    pub fn prime_ideals(&self) -> Result<Arc<Vec<Ideal>>> {
        if let Some(v) = self.cache.prime.get() {
            return Ok(v.clone());
        }
        let all = self.ideals()?;
        let v: Vec<Ideal> = all
            .iter()
            .filter(|p| !p.is_whole() && self.prime_witness(p).is_none())
            .cloned()
            .collect();
        Ok(self.cache.prime.get_or_init(|| Arc::new(v)).clone())
    }

    /// A pair `a, b ∉ P` with `ab ∈ P`, if one exists.
    pub fn prime_witness(&self, p: &Ideal) -> Option<(Elem, Elem)> {
        let outside: Vec<Elem> = self.elements().filter(|&x| !p.contains(x)).collect();
        for (i, &a) in outside.iter().enumerate() {
            for &b in &outside[i..] {
                if p.contains(self.mul(a, b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// The unit group `U(R)`.
    pub fn units(&self) -> &ElemSet {
        self.cache.units.get_or_init(|| {
            let one = self.one();
            ElemSet::from_iter_in(
                self.size(),
                self.elements()
                    .filter(|&u| self.elements().any(|v| self.mul(u, v) == one)),
            )
        })
    }

    pub fn is_unit(&self, x: Elem) -> bool {
        self.units().contains(x)
    }

    /// `t ∣ s`, i.e. `s ∈ tR`.
    pub fn divides(&self, t: Elem, s: Elem) -> bool {
        self.elements().any(|r| self.mul(t, r) == s)
    }

    /// Ideal generated by products of generators.
    pub fn ideal_product(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        self.check_own(i)?;
        self.check_own(j)?;
        let products: Vec<Elem> = i
            .gens()
            .iter()
            .flat_map(|&a| j.gens().iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.mul(a, b))
            .collect();
        Ok(self.ideal_generated(&products))
    }

    pub fn ideal_sum(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        self.check_own(i)?;
        self.check_own(j)?;
        let set = subgroup_sum(self, i.set(), j.set());
        let mut gens = i.gens().to_vec();
        gens.extend_from_slice(j.gens());
        gens.sort_unstable();
        gens.dedup();
        Ok(self.wrap_ideal(set, gens))
    }

    pub fn ideal_intersection(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        self.check_own(i)?;
        self.check_own(j)?;
        Ok(self.ideal_from_set(i.set().intersection(j.set())))
    }

    /// Rebuilds an ideal of this ring from an element set, checking closure.
    pub fn ideal_from_elements(&self, elems: &[Elem]) -> Result<Ideal> {
        if elems.iter().any(|&x| x as usize >= self.size()) {
            return Err(Error::InvalidPresentation("element out of range".into()));
        }
        let set = ElemSet::from_iter_in(self.size(), elems.iter().copied());
        if !self.is_ideal_set(&set) {
            return Err(Error::InvalidPresentation("set is not an ideal".into()));
        }
        Ok(self.ideal_from_set(set))
    }
}
