//! Multiplicatively closed subsets.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::localize::localize;
use crate::ring::{FiniteRing, Ideal};
use crate::set::{Elem, ElemSet};

/// A multiplicatively closed subset containing `1`, with the generators it
/// was built from.
#[derive(Clone, Debug)]
pub struct MultSet {
    ring: u64,
    set: ElemSet,
    gens: Vec<Elem>,
}

impl PartialEq for MultSet {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.set == other.set
    }
}

impl Eq for MultSet {}

impl MultSet {
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

    pub fn is_subset(&self, other: &MultSet) -> bool {
        self.set.is_subset(&other.set)
    }

    /// `0 ∈ S`: every S-property then holds with `s = 0`.
    pub fn is_degenerate(&self) -> bool {
        self.set.contains(0)
    }
}

impl FiniteRing {
    pub(crate) fn wrap_mult_set(&self, set: ElemSet, gens: Vec<Elem>) -> MultSet {
        debug_assert!(set.contains(self.one()));
        MultSet {
            ring: self.id(),
            set,
            gens,
        }
    }

    fn check_mult(&self, s: &MultSet) -> Result<()> {
        if s.ring != self.id() {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Smallest multiplicatively closed set containing `gens` and `1`.
    pub fn mult_closure(&self, gens: &[Elem]) -> Result<MultSet> {
        if let Some(&g) = gens.iter().find(|&&g| g as usize >= self.size()) {
            return Err(Error::InvalidElement(vec![g]));
        }
        let mut mask = fixedbitset::FixedBitSet::with_capacity(self.size());
        mask.insert(self.one() as usize);
        let mut members = vec![self.one()];
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for &g in gens {
                let p = self.mul(a, g);
                if !mask.contains(p as usize) {
                    mask.insert(p as usize);
                    members.push(p);
                }
            }
            i += 1;
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        Ok(self.wrap_mult_set(ElemSet::from_mask(mask), gens))
    }

    /// Accepts a set only if it contains `1` and is closed.
    pub fn mult_set_from_elements(&self, elems: &[Elem]) -> Result<MultSet> {
        let set = ElemSet::from_iter_in(self.size(), elems.iter().copied());
        if !set.contains(self.one()) {
            return Err(Error::InvalidPresentation(
                "multiplicative set must contain 1".into(),
            ));
        }
        for a in set.iter() {
            for b in set.iter() {
                if !set.contains(self.mul(a, b)) {
                    return Err(Error::InvalidPresentation(format!(
                        "{} * {} leaves the set",
                        self.format_elem(a),
                        self.format_elem(b)
                    )));
                }
            }
        }
        let gens = set.elems().to_vec();
        Ok(self.wrap_mult_set(set, gens))
    }

    /// `{1}`.
    pub fn trivial_mult_set(&self) -> MultSet {
        self.wrap_mult_set(
            ElemSet::from_iter_in(self.size(), [self.one()]),
            vec![self.one()],
        )
    }

    /// `U(R)` as a multiplicative set.
    pub fn unit_mult_set(&self) -> MultSet {
        let set = self.units().clone();
        let gens = set.elems().to_vec();
        self.wrap_mult_set(set, gens)
    }

    /// `R ∖ 𝔪` for a maximal ideal `𝔪`.
    pub fn complement_of_maximal(&self, m: &Ideal) -> Result<MultSet> {
        if m.ring_id() != self.id() {
            return Err(Error::RingMismatch);
        }
        if m.is_whole() {
            return Err(Error::NotProper);
        }
        if let Some((a, b)) = self.prime_witness(m) {
            return Err(Error::NotPrime {
                a: self.coords(a),
                b: self.coords(b),
            });
        }
        if self.ideals()?.iter().any(|j| !j.is_whole() && j.len() > m.len() && m.is_subset(j)) {
            return Err(Error::NotMaximal);
        }
        let set = ElemSet::from_iter_in(self.size(), self.elements().filter(|&x| !m.contains(x)));
        let gens = set.elems().to_vec();
        Ok(self.wrap_mult_set(set, gens))
    }

    /// Some `s ∈ S` divisible by every `t ∈ S`, trying `∏ S` first.
    pub fn has_maximal_multiple(&self, s: &MultSet) -> Option<Elem> {
        let is_multiple = |c: Elem| s.elems().iter().all(|&t| self.divides(t, c));
        let product = s.elems().iter().fold(self.one(), |acc, &t| self.mul(acc, t));
        if is_multiple(product) {
            return Some(product);
        }
        s.elems().iter().copied().find(|&c| is_multiple(c))
    }

    pub fn is_subset_units(&self, s: &MultSet) -> bool {
        s.set().is_subset(self.units())
    }

    /// `S* = {x : x/1 is a unit of S⁻¹R}`.
    pub fn saturation(self: &Arc<Self>, s: &MultSet) -> Result<MultSet> {
        self.check_mult(s)?;
        let loc = localize(self, s, None)?;
        let local = loc.local_ring();
        let set = ElemSet::from_iter_in(
            self.size(),
            self.elements().filter(|&x| local.is_unit(loc.ring_map(x))),
        );
        let gens = set.elems().to_vec();
        Ok(self.wrap_mult_set(set, gens))
    }

    /// Elementwise product `S₁ S₂` of two multiplicative sets (again closed).
    pub fn mult_set_product(&self, a: &MultSet, b: &MultSet) -> Result<MultSet> {
        self.check_mult(a)?;
        self.check_mult(b)?;
        let set = ElemSet::from_iter_in(
            self.size(),
            a.elems()
                .iter()
                .flat_map(|&x| b.elems().iter().map(move |&y| (x, y)))
                .map(|(x, y)| self.mul(x, y)),
        );
        let mut gens = a.gens().to_vec();
        gens.extend_from_slice(b.gens());
        gens.sort_unstable();
        gens.dedup();
        Ok(self.wrap_mult_set(set, gens))
    }
}

#[cfg(test)]
mod tests {
    use crate::error::Error;
    use crate::ring::FiniteRing;

    #[test]
    fn closures() {
        let r12 = FiniteRing::cyclic(12).unwrap();
        assert_eq!(r12.mult_closure(&[3]).unwrap().elems(), &[1, 3, 9]);
        let r8 = FiniteRing::cyclic(8).unwrap();
        let s = r8.mult_closure(&[4]).unwrap();
        assert_eq!(s.elems(), &[0, 1, 4]);
        assert!(s.is_degenerate());
        assert_eq!(r8.mult_closure(&[]).unwrap().elems(), &[1]);
        assert!(r8.mult_closure(&[8]).is_err());
    }

    /// Every subset containing `gens ∪ {1}` that is closed contains the closure.
    #[test]
    fn closure_is_minimal() {
        for n in [6u32, 8, 10, 12] {
            let r = FiniteRing::cyclic(n).unwrap();
            for x in r.elements() {
                let s = r.mult_closure(&[x]).unwrap();
                for mask in 0u32..(1 << n) {
                    let has = |y: u32| mask >> y & 1 == 1;
                    if !has(1) || !has(x) {
                        continue;
                    }
                    let closed = r.elements().all(|a| {
                        !has(a) || r.elements().all(|b| !has(b) || has(r.mul(a, b)))
                    });
                    if closed {
                        assert!(s.elems().iter().all(|&y| has(y)));
                    }
                }
            }
        }
    }

    #[test]
    fn maximal_multiples() {
        let r6 = FiniteRing::cyclic(6).unwrap();
        assert_eq!(r6.has_maximal_multiple(&r6.mult_closure(&[3]).unwrap()), Some(3));
        assert_eq!(r6.has_maximal_multiple(&r6.trivial_mult_set()), Some(1));
        let r12 = FiniteRing::cyclic(12).unwrap();
        assert_eq!(r12.has_maximal_multiple(&r12.mult_closure(&[3]).unwrap()), Some(3));
    }

    #[test]
    fn complements() {
        let r6 = FiniteRing::cyclic(6).unwrap();
        let m = r6.ideal_generated(&[2]);
        assert_eq!(r6.complement_of_maximal(&m).unwrap().elems(), &[1, 3, 5]);
        let r4 = FiniteRing::cyclic(4).unwrap();
        let m = r4.ideal_generated(&[2]);
        assert_eq!(r4.complement_of_maximal(&m).unwrap().elems(), &[1, 3]);
        let err = r6.complement_of_maximal(&r6.zero_ideal()).unwrap_err();
        assert_eq!(err, Error::NotPrime { a: vec![2], b: vec![3] });
        assert_eq!(
            r6.complement_of_maximal(&r6.whole_ideal()).unwrap_err(),
            Error::NotProper
        );
        // 3 * 3 = 0 in Z9
        let r9 = FiniteRing::cyclic(9).unwrap();
        assert!(r9.complement_of_maximal(&r9.zero_ideal()).is_err());
    }

    #[test]
    fn subsets_of_units() {
        let r4 = FiniteRing::cyclic(4).unwrap();
        assert!(r4.is_subset_units(&r4.mult_closure(&[3]).unwrap()));
        let r12 = FiniteRing::cyclic(12).unwrap();
        assert!(!r12.is_subset_units(&r12.mult_closure(&[3]).unwrap()));
        assert!(r12.is_subset_units(&r12.trivial_mult_set()));
    }

    #[test]
    fn saturations() {
        let r6 = FiniteRing::cyclic(6).unwrap();
        let s = r6.mult_closure(&[3]).unwrap();
        assert_eq!(r6.saturation(&s).unwrap().elems(), &[1, 3, 5]);
        let u = r6.unit_mult_set();
        assert_eq!(r6.saturation(&u).unwrap(), u);
        let r8 = FiniteRing::cyclic(8).unwrap();
        let z = r8.mult_closure(&[4]).unwrap();
        assert!(r8.saturation(&z).unwrap().set().len() == 8);
    }
}
