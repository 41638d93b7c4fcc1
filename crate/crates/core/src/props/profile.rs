//! Per-module caches of "witness scalar sets".
//!
//! Every S-property of a submodule `N` has the shape "some `s ∈ S` lies in
//! `W`" for a set `W` of ring elements depending only on `(M, N)`, and that
//! `W` is always an ideal. Computing `W` once per submodule turns each
//! verdict for a new `S` into a set intersection.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::Result;
use crate::module::{FiniteModule, Submodule};
use crate::ring::Ideal;
use crate::set::{Elem, ElemSet};

pub struct ModuleProfile {
    module: u64,
    subs: Arc<Vec<Submodule>>,
    index: HashMap<Vec<Elem>, usize>,
    colon: Vec<Ideal>,
    /// `(N:M)M` per submodule.
    prod1: Vec<Submodule>,
    /// `(N:M)²M` per submodule.
    prod2: Vec<Submodule>,
    idem: Vec<ElemSet>,
    mult: Vec<ElemSet>,
    pure: OnceLock<Vec<ElemSet>>,
    copure: OnceLock<Vec<ElemSet>>,
    cyclic: OnceLock<Vec<usize>>,
    elements: OnceLock<Vec<ElemSet>>,
    pairs: OnceLock<Vec<ElemSet>>,
    thm_c: OnceLock<Vec<ElemSet>>,
    thm_d: OnceLock<Vec<ElemSet>>,
}

impl FiniteModule {
    /// The cached profile, built on first use.
    pub fn profile(&self) -> Result<Arc<ModuleProfile>> {
        if let Some(p) = self.cache.profile.get() {
            return Ok(p.clone());
        }
        let p = Arc::new(ModuleProfile::build(self)?);
        Ok(self.cache.profile.get_or_init(|| p).clone())
    }
}

impl ModuleProfile {
    fn build(m: &FiniteModule) -> Result<ModuleProfile> {
        let subs = m.submodules()?;
        let ring = m.ring();
        let whole = m.whole();
        let index = subs
            .iter()
            .enumerate()
            .map(|(i, n)| (n.elems().to_vec(), i))
            .collect();
        let mut colon = Vec::with_capacity(subs.len());
        let mut prod1 = Vec::with_capacity(subs.len());
        let mut prod2 = Vec::with_capacity(subs.len());
        let mut idem = Vec::with_capacity(subs.len());
        let mut mult = Vec::with_capacity(subs.len());
        for n in subs.iter() {
            let c = m.colon_into(n)?;
            let c2 = ring.ideal_product(&c, &c)?;
            let p1 = m.ideal_times(&c, &whole)?;
            let p2 = m.ideal_times(&c2, &whole)?;
            // (N:M)²M ⊆ (N:M)M ⊆ N always
            assert!(p2.is_subset(&p1) && p1.is_subset(n), "colon containment");
            idem.push(m.scalars_into(n.gens(), p2.set()));
            mult.push(m.scalars_into(n.gens(), p1.set()));
            colon.push(c);
            prod1.push(p1);
            prod2.push(p2);
        }
        Ok(ModuleProfile {
            module: m.id(),
            subs,
            index,
            colon,
            prod1,
            prod2,
            idem,
            mult,
            pure: OnceLock::new(),
            copure: OnceLock::new(),
            cyclic: OnceLock::new(),
            elements: OnceLock::new(),
            pairs: OnceLock::new(),
            thm_c: OnceLock::new(),
            thm_d: OnceLock::new(),
        })
    }

    pub fn module_id(&self) -> u64 {
        self.module
    }

    pub fn submodules(&self) -> &[Submodule] {
        &self.subs
    }

    /// Position of a submodule in the canonical list.
    pub fn position(&self, n: &Submodule) -> Option<usize> {
        if n.module_id() != self.module {
            return None;
        }
        self.index.get(n.elems()).copied()
    }

    pub fn colon(&self, i: usize) -> &Ideal {
        &self.colon[i]
    }

    pub fn colon_times_module(&self, i: usize) -> &Submodule {
        &self.prod1[i]
    }

    pub fn colon_squared_times_module(&self, i: usize) -> &Submodule {
        &self.prod2[i]
    }

    /// `{r : rN ⊆ (N:M)²M}`.
    pub fn idempotent_scalars(&self, i: usize) -> &ElemSet {
        &self.idem[i]
    }

    /// `{r : rN ⊆ (N:M)M}`.
    pub fn multiplication_scalars(&self, i: usize) -> &ElemSet {
        &self.mult[i]
    }

    /// `⋂_I {r : r(N ∩ IM) ⊆ IN}`.
    pub fn pure_scalars(&self, m: &FiniteModule) -> Result<&[ElemSet]> {
        if let Some(v) = self.pure.get() {
            return Ok(v);
        }
        let ring = m.ring();
        let ideals = ring.ideals()?;
        let whole = m.whole();
        let im: Vec<Submodule> = ideals
            .iter()
            .map(|i| m.ideal_times(i, &whole))
            .collect::<Result<_>>()?;
        let mut out = Vec::with_capacity(self.subs.len());
        for n in self.subs.iter() {
            let mut acc = ElemSet::full(ring.size());
            for (i, ideal) in ideals.iter().enumerate() {
                let meet = m.sub_intersect(n, &im[i])?;
                let target = m.ideal_times(ideal, n)?;
                acc = acc.intersection(&m.scalars_into(meet.gens(), target.set()));
            }
            out.push(acc);
        }
        Ok(self.pure.get_or_init(|| out))
    }

    /// `⋂_I {r : r(N:_M I) ⊆ N + (0:_M I)}`.
    pub fn copure_scalars(&self, m: &FiniteModule) -> Result<&[ElemSet]> {
        if let Some(v) = self.copure.get() {
            return Ok(v);
        }
        let ring = m.ring();
        let ideals = ring.ideals()?;
        let zero = m.zero_submodule();
        let ann: Vec<Submodule> = ideals
            .iter()
            .map(|i| m.colon_in_module(&zero, i))
            .collect::<Result<_>>()?;
        let mut out = Vec::with_capacity(self.subs.len());
        for n in self.subs.iter() {
            let mut acc = ElemSet::full(ring.size());
            for (i, ideal) in ideals.iter().enumerate() {
                let col = m.colon_in_module(n, ideal)?;
                let target = m.sub_sum(n, &ann[i])?;
                acc = acc.intersection(&m.scalars_into(col.gens(), target.set()));
            }
            out.push(acc);
        }
        Ok(self.copure.get_or_init(|| out))
    }

    /// Index of `Rx` in the submodule list, per element `x`.
    pub fn cyclic_index(&self, m: &FiniteModule) -> &[usize] {
        self.cyclic.get_or_init(|| {
            m.elements()
                .map(|x| self.index[m.cyclic_set(x).elems()])
                .collect()
        })
    }

    /// `{s : sx = ax for some a ∈ (Rx:M)}` per element `x`.
    pub fn element_scalars(&self, m: &FiniteModule) -> &[ElemSet] {
        self.elements.get_or_init(|| {
            let ring = m.ring();
            let cyc = self.cyclic_index(m).to_vec();
            m.elements()
                .map(|x| {
                    let c = &self.colon[cyc[x as usize]];
                    let reach =
                        ElemSet::from_iter_in(m.size(), c.elems().iter().map(|&a| m.act(a, x)));
                    ElemSet::from_iter_in(
                        ring.size(),
                        ring.elements().filter(|&s| reach.contains(m.act(s, x))),
                    )
                })
                .collect()
        })
    }

    /// `{s : s(N ∩ K) ⊆ (N:M)(K:M)M}` for `i ≤ j`, stored row-major over the
    /// upper triangle.
    pub fn pair_scalars(&self, m: &FiniteModule) -> Result<&[ElemSet]> {
        if let Some(v) = self.pairs.get() {
            return Ok(v);
        }
        let ring = m.ring();
        let whole = m.whole();
        let k = self.subs.len();
        let mut out = Vec::with_capacity(k * (k + 1) / 2);
        for i in 0..k {
            for j in i..k {
                let meet = m.sub_intersect(&self.subs[i], &self.subs[j])?;
                let prod = ring.ideal_product(&self.colon[i], &self.colon[j])?;
                let target = m.ideal_times(&prod, &whole)?;
                out.push(m.scalars_into(meet.gens(), target.set()));
            }
        }
        Ok(self.pairs.get_or_init(|| out))
    }

    /// `⋂_{K ⊆ N} {s : sK ⊆ (N:M)K}` per submodule `N`.
    pub fn colon_absorbing_scalars(&self, m: &FiniteModule) -> Result<&[ElemSet]> {
        if let Some(v) = self.thm_c.get() {
            return Ok(v);
        }
        let ring = m.ring();
        let mut out = Vec::with_capacity(self.subs.len());
        for (i, n) in self.subs.iter().enumerate() {
            let mut acc = ElemSet::full(ring.size());
            for k in self.subs.iter().filter(|k| k.is_subset(n)) {
                let target = m.ideal_times(&self.colon[i], k)?;
                acc = acc.intersection(&m.scalars_into(k.gens(), target.set()));
            }
            out.push(acc);
        }
        Ok(self.thm_c.get_or_init(|| out))
    }

    /// `⋂_K {s : s(K:_R N)N ⊆ (K:M)(N:M)M}` per submodule `N`, `K` ranging
    /// over all submodules of `M`.
    pub fn relative_colon_scalars(&self, m: &FiniteModule) -> Result<&[ElemSet]> {
        if let Some(v) = self.thm_d.get() {
            return Ok(v);
        }
        let ring = m.ring();
        let whole = m.whole();
        let mut out = Vec::with_capacity(self.subs.len());
        for (i, n) in self.subs.iter().enumerate() {
            let mut acc = ElemSet::full(ring.size());
            for (j, k) in self.subs.iter().enumerate() {
                let kn = m.colon_between(k, n)?;
                let lhs = m.ideal_times(&kn, n)?;
                let prod = ring.ideal_product(&self.colon[j], &self.colon[i])?;
                let target = m.ideal_times(&prod, &whole)?;
                acc = acc.intersection(&m.scalars_into(lhs.gens(), target.set()));
            }
            out.push(acc);
        }
        Ok(self.thm_d.get_or_init(|| out))
    }
}
