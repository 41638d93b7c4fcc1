//! Localization of finite rings and modules.
//!
//! For a finite ring, `S⁻¹R` is the factor `eR` where `e` is the idempotent
//! power of `s₀ = ∏ S`: an element `r` dies in `S⁻¹R` iff `sr = 0` for some
//! `s ∈ S` iff `er = 0`, and every `s ∈ S` divides `e`, so it becomes a unit
//! of `eR`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::module::FiniteModule;
use crate::multset::MultSet;
use crate::ring::{FiniteRing, RingBackend};
use crate::set::{Elem, ElemSet};

/// `S⁻¹R` (and optionally `S⁻¹M`) realized as `eR` and `eM`.
#[derive(Debug, Clone)]
pub struct Localization {
    ring: Arc<FiniteRing>,
    idempotent: Elem,
    local_ring: Arc<FiniteRing>,
    ring_map: Vec<Elem>,
    module: Option<LocalModule>,
}

#[derive(Debug, Clone)]
struct LocalModule {
    source: Arc<FiniteModule>,
    local: Arc<FiniteModule>,
    map: Vec<Elem>,
}

/// The idempotent in the cyclic semigroup generated by `x`.
pub fn idempotent_power(ring: &FiniteRing, x: Elem) -> Elem {
    let mut seen = ElemSet::empty(ring.size()).mask().clone();
    let mut p = x;
    loop {
        if ring.mul(p, p) == p {
            return p;
        }
        // a repeat means the cycle was traversed without an idempotent,
        // which cannot happen in a finite semigroup
        assert!(!seen.contains(p as usize), "power cycle without idempotent");
        seen.insert(p as usize);
        p = ring.mul(p, x);
    }
}

/// Builds `eR` for an idempotent `e` of `ring`.
pub(crate) fn corner_ring(ring: &Arc<FiniteRing>, e: Elem) -> Arc<FiniteRing> {
    let set = ElemSet::from_iter_in(ring.size(), ring.elements().map(|r| ring.mul(e, r)));
    let elems = set.elems().to_vec();
    let mut pos = vec![Elem::MAX; ring.size()];
    for (i, &x) in elems.iter().enumerate() {
        pos[x as usize] = i as Elem;
    }
    let one = pos[e as usize];
    let size = elems.len();
    Arc::new(FiniteRing::assemble(
        RingBackend::Corner {
            parent: ring.clone(),
            elems,
            pos,
        },
        size,
        one,
        ring.limits(),
    ))
}

/// `S⁻¹R`, and `S⁻¹M` when a module is supplied.
pub fn localize(
    ring: &Arc<FiniteRing>,
    s: &MultSet,
    module: Option<&Arc<FiniteModule>>,
) -> Result<Localization> {
    if s.ring_id() != ring.id() {
        return Err(Error::RingMismatch);
    }
    if let Some(m) = module {
        if m.ring().id() != ring.id() {
            return Err(Error::RingMismatch);
        }
    }
    let s0 = s.elems().iter().fold(ring.one(), |acc, &t| ring.mul(acc, t));
    let e = idempotent_power(ring, s0);
    let local_ring = if e == ring.one() {
        ring.clone()
    } else {
        corner_ring(ring, e)
    };
    let ring_map: Vec<Elem> = if Arc::ptr_eq(&local_ring, ring) {
        ring.elements().collect()
    } else {
        let (_, elems) = local_ring.corner_parts().expect("corner");
        ring.elements()
            .map(|r| elems.binary_search(&ring.mul(e, r)).expect("eR") as Elem)
            .collect()
    };
    let module = module.map(|m| {
        if Arc::ptr_eq(&local_ring, ring) {
            return LocalModule {
                source: m.clone(),
                local: m.clone(),
                map: m.elements().collect(),
            };
        }
        let set = ElemSet::from_iter_in(m.size(), m.elements().map(|x| m.act(e, x)));
        let elems = set.elems().to_vec();
        let lift = local_ring.corner_parts().expect("corner").1.to_vec();
        let gens: Vec<Elem> = m.generators().iter().map(|&g| m.act(e, g)).collect();
        let local = FiniteModule::restrict(m, local_ring.clone(), elems, Some(lift), Some(gens));
        let map = m
            .elements()
            .map(|x| {
                let ex = m.act(e, x);
                set.elems().binary_search(&ex).expect("eM") as Elem
            })
            .collect();
        LocalModule {
            source: m.clone(),
            local,
            map,
        }
    });
    Ok(Localization {
        ring: ring.clone(),
        idempotent: e,
        local_ring,
        ring_map,
        module,
    })
}

impl Localization {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn idempotent(&self) -> Elem {
        self.idempotent
    }

    pub fn local_ring(&self) -> &Arc<FiniteRing> {
        &self.local_ring
    }

    /// `r ↦ r/1`.
    #[inline]
    pub fn ring_map(&self, r: Elem) -> Elem {
        self.ring_map[r as usize]
    }

    pub fn local_module(&self) -> Option<&Arc<FiniteModule>> {
        self.module.as_ref().map(|m| &m.local)
    }

    pub fn source_module(&self) -> Option<&Arc<FiniteModule>> {
        self.module.as_ref().map(|m| &m.source)
    }

    /// `m ↦ m/1`; `None` without a module.
    pub fn module_map(&self, x: Elem) -> Option<Elem> {
        self.module.as_ref().map(|m| m.map[x as usize])
    }

    /// Kernel of the ring map.
    pub fn kernel(&self) -> ElemSet {
        ElemSet::from_iter_in(
            self.ring.size(),
            self.ring.elements().filter(|&r| self.ring_map(r) == 0),
        )
    }

    /// Kernel of the module map.
    pub fn module_kernel(&self) -> Option<ElemSet> {
        let m = self.module.as_ref()?;
        Some(ElemSet::from_iter_in(
            m.source.size(),
            m.source.elements().filter(|&x| m.map[x as usize] == 0),
        ))
    }

    /// `S̃ = {s/1 : s ∈ T}` as a multiplicative set of the local ring.
    pub fn localized_mult_set(&self, s: &MultSet) -> Result<MultSet> {
        if s.ring_id() != self.ring.id() {
            return Err(Error::RingMismatch);
        }
        let image: Vec<Elem> = s.elems().iter().map(|&x| self.ring_map(x)).collect();
        self.local_ring.mult_closure(&image)
    }
}

/// `{r : sr = 0 for some s ∈ S}`, straight from the definition.
pub fn s_torsion(ring: &FiniteRing, s: &MultSet) -> ElemSet {
    ElemSet::from_iter_in(
        ring.size(),
        ring.elements()
            .filter(|&r| s.elems().iter().any(|&t| ring.mul(t, r) == 0)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::FiniteModule;

    #[test]
    fn z6_at_three() {
        let r = FiniteRing::cyclic(6).unwrap();
        let s = r.mult_closure(&[3]).unwrap();
        let loc = localize(&r, &s, None).unwrap();
        assert_eq!(loc.idempotent(), 3);
        assert_eq!(loc.local_ring().size(), 2);
        assert_eq!(loc.kernel().elems(), &[0, 2, 4]);
        assert_eq!(loc.kernel(), s_torsion(&r, &s));
        let tilde = loc.localized_mult_set(&s).unwrap();
        assert_eq!(tilde.elems(), &[loc.local_ring().one()]);
    }

    #[test]
    fn trivial_and_degenerate() {
        let r = FiniteRing::cyclic(12).unwrap();
        let loc = localize(&r, &r.trivial_mult_set(), None).unwrap();
        assert_eq!(loc.idempotent(), 1);
        assert!(Arc::ptr_eq(loc.local_ring(), &r));
        let s = r.mult_closure(&[3]).unwrap();
        assert_eq!(loc.localized_mult_set(&s).unwrap(), s);

        let r8 = FiniteRing::cyclic(8).unwrap();
        let z = r8.mult_closure(&[4]).unwrap();
        let loc = localize(&r8, &z, None).unwrap();
        assert_eq!(loc.idempotent(), 0);
        assert_eq!(loc.local_ring().size(), 1);
    }

    #[test]
    fn ring_map_is_a_homomorphism_into_units() {
        for n in [6u32, 12, 30] {
            let r = FiniteRing::cyclic(n).unwrap();
            for x in r.elements() {
                let s = r.mult_closure(&[x]).unwrap();
                let loc = localize(&r, &s, None).unwrap();
                let l = loc.local_ring();
                let e = loc.idempotent();
                assert_eq!(r.mul(e, e), e);
                assert_eq!(loc.ring_map(r.one()), l.one());
                for a in r.elements() {
                    for b in r.elements() {
                        assert_eq!(loc.ring_map(r.mul(a, b)), l.mul(loc.ring_map(a), loc.ring_map(b)));
                        assert_eq!(loc.ring_map(r.add(a, b)), l.add(loc.ring_map(a), loc.ring_map(b)));
                    }
                }
                assert!(s.elems().iter().all(|&t| l.is_unit(loc.ring_map(t))));
                assert_eq!(loc.kernel(), s_torsion(&r, &s));
            }
        }
    }

    #[test]
    fn local_module_is_valid() {
        let r = FiniteRing::cyclic(12).unwrap();
        let m = FiniteModule::regular(&r);
        let s = r.mult_closure(&[3]).unwrap();
        let loc = localize(&r, &s, Some(&m)).unwrap();
        let lm = loc.local_module().unwrap();
        // e = 9, eR = {0, 3, 6, 9} ≅ Z4
        assert_eq!(loc.idempotent(), 9);
        assert_eq!(lm.size(), 4);
        lm.check_laws(&r.limits()).unwrap();
        loc.local_ring().check_laws(&r.limits()).unwrap();
        assert_eq!(loc.module_kernel().unwrap().elems(), &[0, 4, 8]);
    }

    #[test]
    fn complement_of_maximal_gives_local_ring() {
        let r = FiniteRing::cyclic(12).unwrap();
        for m in r.maximal_ideals().unwrap().iter() {
            let s = r.complement_of_maximal(m).unwrap();
            let loc = localize(&r, &s, None).unwrap();
            assert_eq!(loc.local_ring().maximal_ideals().unwrap().len(), 1);
        }
    }
}
