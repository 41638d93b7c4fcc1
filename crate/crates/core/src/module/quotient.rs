use std::sync::Arc;

use super::{FiniteModule, ModuleBackend, Submodule};
use crate::error::{Error, Result};
use crate::ring::FiniteRing;
use crate::set::{Elem, ElemSet};

/// The canonical surjection `M → M/N`.
#[derive(Debug, Clone)]
pub struct Projection {
    source: u64,
    target: u64,
    coset_of: Vec<Elem>,
}

impl Projection {
    pub fn source_id(&self) -> u64 {
        self.source
    }

    pub fn target_id(&self) -> u64 {
        self.target
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.coset_of[x as usize]
    }

    /// Elements of the source sent to zero.
    pub fn kernel(&self) -> Vec<Elem> {
        (0..self.coset_of.len() as Elem)
            .filter(|&x| self.coset_of[x as usize] == 0)
            .collect()
    }
}

impl FiniteModule {
    /// `M/N`, cosets represented by their least members in ascending order.
    pub fn quotient_module(
        self: &Arc<Self>,
        n: &Submodule,
    ) -> Result<(Arc<FiniteModule>, Projection)> {
        self.check_own(n)?;
        let size = self.size();
        let mut least = vec![Elem::MAX; size];
        let mut reps = Vec::with_capacity(size / n.len());
        for x in self.elements() {
            if least[x as usize] != Elem::MAX {
                continue;
            }
            // x is the least member of its coset, since we scan upwards
            reps.push(x);
            for &k in n.elems() {
                least[self.add(x, k) as usize] = x;
            }
        }
        let mut index = vec![0 as Elem; size];
        for (i, &r) in reps.iter().enumerate() {
            index[r as usize] = i as Elem;
        }
        let coset_of: Vec<Elem> = least.iter().map(|&r| index[r as usize]).collect();
        let gens: Vec<Elem> = {
            let mut g: Vec<Elem> = self
                .generators()
                .iter()
                .map(|&x| coset_of[x as usize])
                .filter(|&c| c != 0)
                .collect();
            g.sort_unstable();
            g.dedup();
            g
        };
        let q = FiniteModule::assemble(
            self.ring().clone(),
            ModuleBackend::Quotient {
                parent: self.clone(),
                reps: reps.clone(),
                coset_of: coset_of.clone(),
            },
            reps.len(),
            Some(gens),
            self.limits(),
        );
        let proj = Projection {
            source: self.id(),
            target: q.id(),
            coset_of,
        };
        Ok((Arc::new(q), proj))
    }

    /// `N` as a module in its own right, with its inclusion into `M`.
    pub fn submodule_as_module(
        self: &Arc<Self>,
        n: &Submodule,
    ) -> Result<(Arc<FiniteModule>, Vec<Elem>)> {
        self.check_own(n)?;
        let elems = n.elems().to_vec();
        let sub = FiniteModule::restrict(
            self,
            self.ring().clone(),
            elems.clone(),
            None,
            Some(n.gens().to_vec()),
        );
        Ok((sub, elems))
    }

    /// A subset closed under addition and the action of `ring` (through
    /// `ring_lift` when `ring` is not this module's ring) as a module.
    pub(crate) fn restrict(
        parent: &Arc<FiniteModule>,
        ring: Arc<FiniteRing>,
        elems: Vec<Elem>,
        ring_lift: Option<Vec<Elem>>,
        gens_hint: Option<Vec<Elem>>,
    ) -> Arc<FiniteModule> {
        let mut pos = vec![Elem::MAX; parent.size()];
        for (i, &x) in elems.iter().enumerate() {
            pos[x as usize] = i as Elem;
        }
        let size = elems.len();
        let hint = gens_hint.map(|g| {
            let mut v: Vec<Elem> = g
                .iter()
                .map(|&x| pos[x as usize])
                .filter(|&x| x != 0)
                .collect();
            v.sort_unstable();
            v.dedup();
            v
        });
        let limits = parent.limits();
        Arc::new(FiniteModule::assemble(
            ring,
            ModuleBackend::Sub {
                parent: parent.clone(),
                elems,
                pos,
                ring_lift,
            },
            size,
            hint,
            limits,
        ))
    }

    /// Image of a set under a projection, as a submodule of the quotient.
    pub fn projected(&self, proj: &Projection, set: &ElemSet) -> Result<Submodule> {
        if proj.target != self.id() {
            return Err(Error::ModuleMismatch);
        }
        let img = ElemSet::from_iter_in(self.size(), set.iter().map(|x| proj.apply(x)));
        Ok(self.submodule_from_set(img))
    }
}
