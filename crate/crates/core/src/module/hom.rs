use super::{FiniteModule, Submodule};
use crate::error::{Error, Result};
use crate::lattice::subgroup_sum;
use crate::set::{Elem, ElemSet};

/// An `R`-linear map, stored as the images of the source generators plus
/// the full element table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    source: u64,
    target: u64,
    images: Vec<Elem>,
    map: Vec<Elem>,
}

impl Homomorphism {
    pub fn source_id(&self) -> u64 {
        self.source
    }

    pub fn target_id(&self) -> u64 {
        self.target
    }

    /// Images of the source module's generators, in generator order.
    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x as usize]
    }
}

const UNSET: Elem = Elem::MAX;

struct Search<'a> {
    src: &'a FiniteModule,
    dst: &'a FiniteModule,
    candidates: &'a [Elem],
    gens: &'a [Elem],
    map: Vec<Elem>,
    defined: Vec<Elem>,
    images: Vec<Elem>,
}

impl Search<'_> {
    /// Extends the partial map from `span(g_0..g_{i-1})` to include
    /// `R g_i` with `g_i ↦ y`. Returns how many entries were added, or
    /// `None` (after rolling back) on an inconsistency.
    fn extend(&mut self, g: Elem, y: Elem) -> Option<usize> {
        let ring = self.src.ring();
        let before = self.defined.len();
        for r in ring.elements() {
            let rg = self.src.act(r, g);
            let ry = self.dst.act(r, y);
            for k in 0..before {
                let x = self.defined[k];
                let fx = self.map[x as usize];
                let z = self.src.add(x, rg);
                let v = self.dst.add(fx, ry);
                match self.map[z as usize] {
                    UNSET => {
                        self.map[z as usize] = v;
                        self.defined.push(z);
                    }
                    w if w == v => {}
                    _ => {
                        self.rollback(before);
                        return None;
                    }
                }
            }
        }
        Some(self.defined.len() - before)
    }

    fn rollback(&mut self, to: usize) {
        for &z in &self.defined[to..] {
            self.map[z as usize] = UNSET;
        }
        self.defined.truncate(to);
    }

    fn run(&mut self, i: usize, visit: &mut dyn FnMut(&[Elem], &[Elem])) {
        if i == self.gens.len() {
            visit(&self.images, &self.map);
            return;
        }
        let mark = self.defined.len();
        for ci in 0..self.candidates.len() {
            let y = self.candidates[ci];
            if self.extend(self.gens[i], y).is_some() {
                self.images.push(y);
                self.run(i + 1, visit);
                self.images.pop();
                self.rollback(mark);
            }
        }
    }
}

impl FiniteModule {
    /// Calls `visit(images, table)` for every homomorphism `self → target`
    /// landing in `within`.
    pub fn for_each_hom(
        &self,
        target: &FiniteModule,
        within: &Submodule,
        mut visit: impl FnMut(&[Elem], &[Elem]),
    ) -> Result<()> {
        target.check_own(within)?;
        if self.ring().id() != target.ring().id() {
            return Err(Error::RingMismatch);
        }
        let gens = self.generators();
        let space = (within.len() as f64).powi(gens.len() as i32);
        let cap = self.limits().hom_candidates;
        if space > cap as f64 {
            return Err(Error::SizeExceeded {
                what: "homomorphism search",
                size: space.min(usize::MAX as f64) as usize,
                cap,
            });
        }
        let mut map = vec![UNSET; self.size()];
        map[0] = 0;
        let mut search = Search {
            src: self,
            dst: target,
            candidates: within.elems(),
            gens,
            map,
            defined: vec![0],
            images: Vec::new(),
        };
        search.run(0, &mut visit);
        Ok(())
    }

    /// Every homomorphism `self → target` with image in `within`.
    pub fn homomorphisms(
        &self,
        target: &FiniteModule,
        within: &Submodule,
    ) -> Result<Vec<Homomorphism>> {
        let mut out = Vec::new();
        self.for_each_hom(target, within, |images, map| {
            out.push(Homomorphism {
                source: self.id(),
                target: target.id(),
                images: images.to_vec(),
                map: map.to_vec(),
            })
        })?;
        Ok(out)
    }

    /// `Hom_R(M, N)N = Σ φ(N)` over all `φ: M → N`.
    pub fn hom_image_sum(&self, n: &Submodule) -> Result<Submodule> {
        let mut acc = ElemSet::from_iter_in(self.size(), [0]);
        self.for_each_hom(self, n, |_, map| {
            if acc.len() == n.len() {
                return;
            }
            let img = ElemSet::from_iter_in(self.size(), n.elems().iter().map(|&x| map[x as usize]));
            acc = subgroup_sum(self, &acc, &img);
        })?;
        Ok(self.submodule_from_set(acc))
    }
}
