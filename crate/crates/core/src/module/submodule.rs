use std::sync::Arc;

use super::FiniteModule;
use crate::error::{Error, Result};
use crate::lattice::{additive_closure, enumerate_spans, greedy_generators, subgroup_sum};
use crate::ring::Ideal;
use crate::set::{Elem, ElemSet};

/// A submodule: canonical element set plus a generating list.
#[derive(Clone, Debug)]
pub struct Submodule {
    module: u64,
    set: ElemSet,
    gens: Vec<Elem>,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.module == other.module && self.set == other.set
    }
}

impl Eq for Submodule {}

impl Submodule {
    pub fn module_id(&self) -> u64 {
        self.module
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

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.set.is_subset(&other.set)
    }

    pub fn is_zero(&self) -> bool {
        self.set.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.set.len() == self.set.universe()
    }
}

impl FiniteModule {
    pub(crate) fn wrap_sub(&self, set: ElemSet, gens: Vec<Elem>) -> Submodule {
        Submodule {
            module: self.id(),
            set,
            gens,
        }
    }

    pub(crate) fn check_own(&self, n: &Submodule) -> Result<()> {
        if n.module != self.id() {
            return Err(Error::ModuleMismatch);
        }
        Ok(())
    }

    fn check_ring(&self, i: &Ideal) -> Result<()> {
        if i.ring_id() != self.ring().id() {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn zero_submodule(&self) -> Submodule {
        self.wrap_sub(ElemSet::from_iter_in(self.size(), [0]), Vec::new())
    }

    pub fn whole(&self) -> Submodule {
        self.wrap_sub(ElemSet::full(self.size()), self.generators().to_vec())
    }

    /// Additive span of `{g · x}` over ring additive generators `g`.
    pub(crate) fn span_set(&self, gens: &[Elem]) -> ElemSet {
        let ring = self.ring();
        additive_closure(
            self,
            gens.iter()
                .flat_map(|&x| ring.additive_gens().iter().map(move |&g| (g, x)))
                .map(|(g, x)| self.act(g, x)),
        )
    }

    /// Smallest submodule containing `gens`.
    pub fn submodule_generated(&self, gens: &[Elem]) -> Submodule {
        let set = self.span_set(gens);
        let mut gens: Vec<Elem> = gens.iter().copied().filter(|&g| g != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        self.wrap_sub(set, gens)
    }

    /// Wraps a set already known to be a submodule, computing generators.
    pub(crate) fn submodule_from_set(&self, set: ElemSet) -> Submodule {
        let gens = greedy_generators(&set, |x| self.cyclic_set(x), |a, b| subgroup_sum(self, a, b));
        self.wrap_sub(set, gens)
    }

    /// Checks that `elems` is a submodule and wraps it.
    pub fn submodule_from_elements(&self, elems: &[Elem]) -> Result<Submodule> {
        if elems.iter().any(|&x| x as usize >= self.size()) {
            return Err(Error::InvalidPresentation("element out of range".into()));
        }
        let set = ElemSet::from_iter_in(self.size(), elems.iter().copied());
        if !self.is_submodule_set(&set) {
            return Err(Error::InvalidPresentation("set is not a submodule".into()));
        }
        Ok(self.submodule_from_set(set))
    }

    pub fn is_submodule_set(&self, set: &ElemSet) -> bool {
        if !set.contains(0) {
            return false;
        }
        let elems = set.elems();
        elems
            .iter()
            .all(|&a| elems.iter().all(|&b| set.contains(self.add(a, b))))
            && elems
                .iter()
                .all(|&a| self.ring().elements().all(|r| set.contains(self.act(r, a))))
    }

    /// Every submodule, sorted by size then elements.
    pub fn submodules(&self) -> Result<Arc<Vec<Submodule>>> {
        if let Some(v) = self.cache.submodules.get() {
            return Ok(v.clone());
        }
        let spans = enumerate_spans(
            self,
            |x| self.cyclic_set(x),
            self.limits().enumeration,
            "module",
        )?;
        let v: Vec<Submodule> = spans
            .into_iter()
            .map(|s| self.wrap_sub(s.set, s.gens))
            .collect();
        Ok(self.cache.submodules.get_or_init(|| Arc::new(v)).clone())
    }

    /// Ring elements `r` with `r · x ∈ target` for every `x` in `gens`. When
    /// `target` is a submodule and `gens` generate `X`, this is `(target :_R X)`.
    pub fn scalars_into(&self, gens: &[Elem], target: &ElemSet) -> ElemSet {
        let ring = self.ring();
        ElemSet::from_iter_in(
            ring.size(),
            ring.elements()
                .filter(|&r| gens.iter().all(|&x| target.contains(self.act(r, x)))),
        )
    }

    /// `(N :_R M) = {r : rM ⊆ N}`.
    pub fn colon_into(&self, n: &Submodule) -> Result<Ideal> {
        self.check_own(n)?;
        Ok(self.ideal_of(self.scalars_into(self.generators(), n.set())))
    }

    /// `(N :_R K) = {r : rK ⊆ N}` for two submodules.
    pub fn colon_between(&self, n: &Submodule, k: &Submodule) -> Result<Ideal> {
        self.check_own(n)?;
        self.check_own(k)?;
        Ok(self.ideal_of(self.scalars_into(k.gens(), n.set())))
    }

    fn ideal_of(&self, set: ElemSet) -> Ideal {
        debug_assert!(set.contains(0));
        self.ring().ideal_from_set(set)
    }

    /// `Ann_R(M) = (0 :_R M)`.
    pub fn annihilator(&self) -> Ideal {
        self.colon_into(&self.zero_submodule())
            .expect("own submodule")
    }

    /// `(N :_M I) = {m : Im ⊆ N}`.
    pub fn colon_in_module(&self, n: &Submodule, i: &Ideal) -> Result<Submodule> {
        self.check_own(n)?;
        self.check_ring(i)?;
        let set = ElemSet::from_iter_in(
            self.size(),
            self.elements()
                .filter(|&m| i.gens().iter().all(|&a| n.contains(self.act(a, m)))),
        );
        Ok(self.submodule_from_set(set))
    }

    /// `IN`, generated by products of generators.
    pub fn ideal_times(&self, i: &Ideal, n: &Submodule) -> Result<Submodule> {
        self.check_own(n)?;
        self.check_ring(i)?;
        let products: Vec<Elem> = i
            .gens()
            .iter()
            .flat_map(|&a| n.gens().iter().map(move |&x| (a, x)))
            .map(|(a, x)| self.act(a, x))
            .collect();
        Ok(self.submodule_generated(&products))
    }

    /// `rN` as a set (a submodule, since `R` is commutative).
    pub fn scalar_image(&self, r: Elem, n: &Submodule) -> ElemSet {
        ElemSet::from_iter_in(self.size(), n.elems().iter().map(|&x| self.act(r, x)))
    }

    pub fn sub_sum(&self, a: &Submodule, b: &Submodule) -> Result<Submodule> {
        self.check_own(a)?;
        self.check_own(b)?;
        let set = subgroup_sum(self, a.set(), b.set());
        let mut gens = a.gens().to_vec();
        gens.extend_from_slice(b.gens());
        gens.sort_unstable();
        gens.dedup();
        Ok(self.wrap_sub(set, gens))
    }

    pub fn sub_intersect(&self, a: &Submodule, b: &Submodule) -> Result<Submodule> {
        self.check_own(a)?;
        self.check_own(b)?;
        Ok(self.submodule_from_set(a.set().intersection(b.set())))
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use std::sync::Arc;

    use crate::module::{FiniteModule, ModulePresentation};
    use crate::ring::FiniteRing;
    use crate::limits::Limits;

    pub(crate) fn z2_squared() -> Arc<FiniteModule> {
        let r = FiniteRing::cyclic(2).unwrap();
        let pres = ModulePresentation {
            additive_orders: vec![2, 2],
            action_table: vec![vec![vec![1, 0], vec![0, 1]]],
        };
        FiniteModule::from_presentation(&r, pres, Limits::default()).unwrap()
    }

    /// Brute force over all subsets containing 0, closed under + and action.
    fn oracle_count(m: &FiniteModule) -> usize {
        let n = m.size();
        assert!(n <= 16);
        let ring = m.ring();
        let mut count = 0;
        for mask in 0u32..(1 << n) {
            if mask & 1 == 0 {
                continue;
            }
            let has = |x: u32| mask >> x & 1 == 1;
            let members: Vec<u32> = (0..n as u32).filter(|&x| has(x)).collect();
            let closed = members
                .iter()
                .all(|&a| members.iter().all(|&b| has(m.add(a, b))))
                && members
                    .iter()
                    .all(|&a| ring.elements().all(|r| has(m.act(r, a))));
            if closed {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn generated_submodules() {
        let r = FiniteRing::cyclic(6).unwrap();
        let m = FiniteModule::regular(&r);
        assert_eq!(m.submodule_generated(&[4]).elems(), &[0, 2, 4]);
        assert_eq!(m.submodule_generated(&[]).elems(), &[0]);
        let v = z2_squared();
        let diag = v.element(&[1, 1]).unwrap();
        let n = v.submodule_generated(&[diag]);
        assert_eq!(n.elems(), &[0, diag]);
    }

    #[test]
    fn submodule_counts() {
        assert_eq!(z2_squared().submodules().unwrap().len(), 5);
        let r4 = FiniteRing::cyclic(4).unwrap();
        assert_eq!(FiniteModule::regular(&r4).submodules().unwrap().len(), 3);
        let r5 = FiniteRing::cyclic(5).unwrap();
        assert_eq!(FiniteModule::regular(&r5).submodules().unwrap().len(), 2);
        for m in [z2_squared(), FiniteModule::regular(&r4)] {
            assert_eq!(m.submodules().unwrap().len(), oracle_count(&m));
        }
    }

    #[test]
    fn colon_and_annihilator() {
        let r4 = FiniteRing::cyclic(4).unwrap();
        let m = FiniteModule::regular(&r4);
        let n = m.submodule_generated(&[2]);
        assert_eq!(m.colon_into(&n).unwrap().elems(), &[0, 2]);
        assert!(m.colon_into(&m.whole()).unwrap().is_whole());

        let v = z2_squared();
        let first = v.submodule_generated(&[v.element(&[1, 0]).unwrap()]);
        assert!(v.colon_into(&first).unwrap().is_zero());

        let r6 = FiniteRing::cyclic(6).unwrap();
        let z2 = FiniteModule::cyclic_over(&r6, 2).unwrap();
        assert_eq!(z2.annihilator().elems(), &[0, 2, 4]);
        assert!(FiniteModule::regular(&r6).annihilator().is_zero());
        let zero = FiniteModule::cyclic_over(&r6, 1).unwrap();
        assert!(zero.annihilator().is_whole());
    }

    #[test]
    fn module_colon_by_ideal() {
        let r6 = FiniteRing::cyclic(6).unwrap();
        let m = FiniteModule::regular(&r6);
        let n = m.submodule_generated(&[2]);
        let three = r6.ideal_generated(&[3]);
        assert_eq!(m.colon_in_module(&n, &three).unwrap().elems(), &[0, 2, 4]);
        assert!(m.colon_in_module(&n, &r6.zero_ideal()).unwrap().is_whole());
        assert_eq!(m.colon_in_module(&n, &r6.whole_ideal()).unwrap(), n);
    }

    #[test]
    fn ideal_times_submodule() {
        let r4 = FiniteRing::cyclic(4).unwrap();
        let m = FiniteModule::regular(&r4);
        let two = r4.ideal_generated(&[2]);
        assert_eq!(m.ideal_times(&two, &m.whole()).unwrap().elems(), &[0, 2]);
        let n = m.submodule_generated(&[2]);
        assert_eq!(m.ideal_times(&r4.whole_ideal(), &n).unwrap(), n);
        assert!(m.ideal_times(&r4.zero_ideal(), &n).unwrap().is_zero());
    }

    #[test]
    fn sums_and_intersections() {
        let r6 = FiniteRing::cyclic(6).unwrap();
        let m = FiniteModule::regular(&r6);
        let a = m.submodule_generated(&[2]);
        let b = m.submodule_generated(&[3]);
        assert!(m.sub_intersect(&a, &b).unwrap().is_zero());
        assert!(m.sub_sum(&a, &b).unwrap().is_whole());
        assert_eq!(m.sub_sum(&a, &m.zero_submodule()).unwrap(), a);
        let other = FiniteModule::regular(&r6);
        assert!(m.sub_sum(&a, &other.whole()).is_err());
    }

    #[test]
    fn intersection_is_largest_common_submodule() {
        let r = FiniteRing::cyclic(12).unwrap();
        let m = FiniteModule::regular(&r);
        let subs = m.submodules().unwrap();
        for a in subs.iter() {
            for b in subs.iter() {
                let meet = m.sub_intersect(a, b).unwrap();
                let best = subs
                    .iter()
                    .filter(|c| c.is_subset(a) && c.is_subset(b))
                    .max_by_key(|c| c.len())
                    .unwrap();
                assert_eq!(&meet, best);
            }
        }
    }
}
