//! Finite modules over finite commutative rings.
//!
//! Like rings, modules are indexed carriers in lexicographic coordinate
//! order. A module is either presented by structure constants, the regular
//! module of its ring, a direct product, a submodule viewed as a module, or
//! a quotient by a submodule.

mod hom;
mod quotient;
mod submodule;
mod validate;

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{additive_closure, greedy_generators, subgroup_sum, Additive};
use crate::limits::{Limits, ACTION_TABLE_SIZE, TABLE_SIZE};
use crate::radix::Radix;
use crate::ring::{in_range, killed_by, next_id, FiniteRing};
use crate::set::{Elem, ElemSet};

pub use hom::Homomorphism;
pub use quotient::Projection;
pub use submodule::Submodule;

/// Additive cyclic orders and the action of ring coordinate generators on
/// module coordinate generators: `action_table[i][j]` is `g_i · e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModulePresentation {
    #[serde(rename = "orders")]
    pub additive_orders: Vec<u32>,
    pub action_table: Vec<Vec<Vec<u32>>>,
}

pub(crate) enum ModuleBackend {
    Presented {
        pres: ModulePresentation,
        radix: Radix,
    },
    Regular,
    Product {
        factors: Vec<Arc<FiniteModule>>,
        radix: Radix,
    },
    Sub {
        parent: Arc<FiniteModule>,
        elems: Vec<Elem>,
        pos: Vec<Elem>,
        /// Parent-ring element for each element of this module's ring, when
        /// the ring differs from the parent's (localized modules).
        ring_lift: Option<Vec<Elem>>,
    },
    Quotient {
        parent: Arc<FiniteModule>,
        reps: Vec<Elem>,
        coset_of: Vec<Elem>,
    },
}

#[derive(Default)]
pub(crate) struct ModuleCache {
    pub(crate) submodules: OnceLock<Arc<Vec<Submodule>>>,
    pub(crate) profile: OnceLock<Arc<crate::props::ModuleProfile>>,
}

/// A validated finite module.
pub struct FiniteModule {
    id: u64,
    ring: Arc<FiniteRing>,
    size: usize,
    backend: ModuleBackend,
    neg: Vec<Elem>,
    add_table: Option<Vec<Elem>>,
    act_table: Option<Vec<Elem>>,
    additive_gens: Vec<Elem>,
    generators: Vec<Elem>,
    limits: Limits,
    pub(crate) cache: ModuleCache,
}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteModule")
            .field("id", &self.id)
            .field("size", &self.size)
            .field("ring_size", &self.ring.size())
            .field("kind", &self.kind())
            .finish()
    }
}

impl FiniteModule {
    /// Validates a presentation over `ring` and builds the module.
    pub fn from_presentation(
        ring: &Arc<FiniteRing>,
        pres: ModulePresentation,
        limits: Limits,
    ) -> Result<Arc<FiniteModule>> {
        let ring_orders = ring.coordinate_orders().ok_or(Error::Unsupported(
            "presented modules need a ring with coordinates",
        ))?;
        let orders = pres.additive_orders.clone();
        if let Some(i) = orders.iter().position(|&d| d == 0) {
            return Err(Error::InvalidPresentation(format!(
                "orders[{i}] must be at least 1"
            )));
        }
        if pres.action_table.len() != ring_orders.len() {
            return Err(Error::InvalidPresentation(format!(
                "action_table has {} rows, expected one per ring generator ({})",
                pres.action_table.len(),
                ring_orders.len()
            )));
        }
        for (i, row) in pres.action_table.iter().enumerate() {
            if row.len() != orders.len() {
                return Err(Error::InvalidPresentation(format!(
                    "action_table[{i}] has {} entries, expected {}",
                    row.len(),
                    orders.len()
                )));
            }
            for (j, v) in row.iter().enumerate() {
                in_range(&format!("action_table[{i}][{j}]"), v, &orders)?;
            }
        }
        let radix = Radix::new(&orders, limits.max_carrier).ok_or(Error::SizeExceeded {
            what: "module",
            size: orders.iter().map(|&d| d as usize).product(),
            cap: limits.max_carrier,
        })?;
        // 1 · e_j = e_j on generators, before anything else depends on the constants
        let one = ring.coords(ring.one());
        for j in 0..orders.len() {
            let mut v = vec![0u64; orders.len()];
            for (i, &c) in one.iter().enumerate() {
                for (l, &g) in pres.action_table[i][j].iter().enumerate() {
                    v[l] = (v[l] + c as u64 * g as u64) % orders[l] as u64;
                }
            }
            let mut unit = vec![0u32; orders.len()];
            unit[j] = 1 % orders[j];
            if v.iter().zip(&unit).any(|(&a, &b)| a != b as u64) {
                return Err(Error::AxiomViolation {
                    axiom: crate::error::Axiom::Unitality,
                    witness: vec![one.clone(), unit],
                });
            }
        }
        for (i, row) in pres.action_table.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !killed_by(ring_orders[i], v, &orders) || !killed_by(orders[j], v, &orders) {
                    let mut r = vec![0u32; ring_orders.len()];
                    r[i] = 1 % ring_orders[i];
                    let mut m = vec![0u32; orders.len()];
                    m[j] = 1 % orders[j];
                    return Err(Error::AxiomViolation {
                        axiom: crate::error::Axiom::WellDefined,
                        witness: vec![r, m],
                    });
                }
            }
        }
        let size = radix.size();
        let module = FiniteModule::assemble(
            ring.clone(),
            ModuleBackend::Presented { pres, radix },
            size,
            None,
            limits,
        );
        validate::check_module_laws(&module, &limits)?;
        Ok(Arc::new(module))
    }

    /// `R` acting on itself.
    pub fn regular(ring: &Arc<FiniteRing>) -> Arc<FiniteModule> {
        Arc::new(FiniteModule::assemble(
            ring.clone(),
            ModuleBackend::Regular,
            ring.size(),
            None,
            ring.limits(),
        ))
    }

    /// `Z/d` over `Z/n` with `d ∣ n`, the ring acting through reduction.
    pub fn cyclic_over(ring: &Arc<FiniteRing>, d: u32) -> Result<Arc<FiniteModule>> {
        let orders = ring.coordinate_orders();
        let n = match orders.as_deref() {
            Some([n]) => *n,
            _ => {
                return Err(Error::Unsupported(
                    "Z/d modules are defined over cyclic rings only",
                ))
            }
        };
        if d == 0 || n % d != 0 {
            return Err(Error::InvalidPresentation(format!(
                "module order {d} must divide the ring order {n}"
            )));
        }
        let pres = ModulePresentation {
            additive_orders: vec![d],
            action_table: vec![vec![vec![1 % d]]],
        };
        FiniteModule::from_presentation(ring, pres, ring.limits())
    }

    /// `Z/d_1 ⊕ … ⊕ Z/d_k` over `Z/n`, each `d_i ∣ n`.
    pub fn cyclic_sum(ring: &Arc<FiniteRing>, orders: &[u32]) -> Result<Arc<FiniteModule>> {
        let n = match ring.coordinate_orders().as_deref() {
            Some([n]) => *n,
            _ => {
                return Err(Error::Unsupported(
                    "direct sums of cyclic modules are defined over cyclic rings only",
                ))
            }
        };
        if let Some(&d) = orders.iter().find(|&&d| d == 0 || n % d != 0) {
            return Err(Error::InvalidPresentation(format!(
                "summand order {d} must divide the ring order {n}"
            )));
        }
        let row = (0..orders.len())
            .map(|j| {
                let mut v = vec![0u32; orders.len()];
                v[j] = 1 % orders[j];
                v
            })
            .collect();
        let pres = ModulePresentation {
            additive_orders: orders.to_vec(),
            action_table: vec![row],
        };
        FiniteModule::from_presentation(ring, pres, ring.limits())
    }

    pub(crate) fn assemble(
        ring: Arc<FiniteRing>,
        backend: ModuleBackend,
        size: usize,
        gens_hint: Option<Vec<Elem>>,
        limits: Limits,
    ) -> FiniteModule {
        let mut m = FiniteModule {
            id: next_id(),
            ring,
            size,
            backend,
            neg: Vec::new(),
            add_table: None,
            act_table: None,
            additive_gens: Vec::new(),
            generators: Vec::new(),
            limits,
            cache: ModuleCache::default(),
        };
        m.neg = (0..size as Elem).map(|x| m.neg_raw(x)).collect();
        if size <= TABLE_SIZE {
            let mut t = Vec::with_capacity(size * size);
            for a in 0..size as Elem {
                for b in 0..size as Elem {
                    t.push(m.add_raw(a, b));
                }
            }
            m.add_table = Some(t);
        }
        let rs = m.ring.size();
        if rs.saturating_mul(size) <= ACTION_TABLE_SIZE {
            let mut t = Vec::with_capacity(rs * size);
            for r in 0..rs as Elem {
                for x in 0..size as Elem {
                    t.push(m.act_raw(r, x));
                }
            }
            m.act_table = Some(t);
        }
        m.additive_gens = m.compute_additive_gens();
        m.generators = match gens_hint {
            Some(g) => g,
            None => m.compute_generators(),
        };
        m
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.size as Elem
    }

    pub fn is_zero(&self) -> bool {
        self.size == 1
    }

    pub fn kind(&self) -> &'static str {
        match &self.backend {
            ModuleBackend::Presented { .. } => "presented",
            ModuleBackend::Regular => "regular",
            ModuleBackend::Product { .. } => "product",
            ModuleBackend::Sub { .. } => "submodule",
            ModuleBackend::Quotient { .. } => "quotient",
        }
    }

    /// Additive generators of the carrier.
    pub fn additive_gens(&self) -> &[Elem] {
        &self.additive_gens
    }

    /// A generating set as an `R`-module.
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.add_table {
            Some(t) => t[a as usize * self.size + b as usize],
            None => self.add_raw(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    /// `r · x`.
    #[inline]
    pub fn act(&self, r: Elem, x: Elem) -> Elem {
        match &self.act_table {
            Some(t) => t[r as usize * self.size + x as usize],
            None => self.act_raw(r, x),
        }
    }

    fn add_raw(&self, a: Elem, b: Elem) -> Elem {
        match &self.backend {
            ModuleBackend::Presented { radix, .. } => radix.add(a, b),
            ModuleBackend::Regular => self.ring.add(a, b),
            ModuleBackend::Product { factors, radix } => {
                let parts: Vec<u64> = factors
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f.add(radix.digit(a, i), radix.digit(b, i)) as u64)
                    .collect();
                radix.encode_reduced(&parts)
            }
            ModuleBackend::Sub {
                parent, elems, pos, ..
            } => pos[parent.add(elems[a as usize], elems[b as usize]) as usize],
            ModuleBackend::Quotient {
                parent,
                reps,
                coset_of,
            } => coset_of[parent.add(reps[a as usize], reps[b as usize]) as usize],
        }
    }

    fn neg_raw(&self, a: Elem) -> Elem {
        match &self.backend {
            ModuleBackend::Presented { radix, .. } => radix.neg(a),
            ModuleBackend::Regular => self.ring.neg(a),
            ModuleBackend::Product { factors, radix } => {
                let parts: Vec<u64> = factors
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f.neg(radix.digit(a, i)) as u64)
                    .collect();
                radix.encode_reduced(&parts)
            }
            ModuleBackend::Sub {
                parent, elems, pos, ..
            } => pos[parent.neg(elems[a as usize]) as usize],
            ModuleBackend::Quotient {
                parent,
                reps,
                coset_of,
            } => coset_of[parent.neg(reps[a as usize]) as usize],
        }
    }

    fn act_raw(&self, r: Elem, x: Elem) -> Elem {
        match &self.backend {
            ModuleBackend::Presented { pres, radix } => {
                let rc = self.ring.coords(r);
                let orders = radix.orders();
                let mut acc = vec![0u64; orders.len()];
                for (i, &ri) in rc.iter().enumerate() {
                    if ri == 0 {
                        continue;
                    }
                    for j in 0..orders.len() {
                        let xj = radix.digit(x, j) as u64;
                        if xj == 0 {
                            continue;
                        }
                        let c = ri as u64 * xj;
                        for (l, &g) in pres.action_table[i][j].iter().enumerate() {
                            if g != 0 {
                                let d = orders[l] as u64;
                                acc[l] = (acc[l] + (c % d) * g as u64) % d;
                            }
                        }
                    }
                }
                radix.encode_reduced(&acc)
            }
            ModuleBackend::Regular => self.ring.mul(r, x),
            ModuleBackend::Product { factors, radix } => {
                let rs = self
                    .ring
                    .split(r)
                    .expect("product module over a product ring");
                let parts: Vec<u64> = factors
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f.act(rs[i], radix.digit(x, i)) as u64)
                    .collect();
                radix.encode_reduced(&parts)
            }
            ModuleBackend::Sub {
                parent,
                elems,
                pos,
                ring_lift,
            } => {
                let pr = ring_lift.as_ref().map_or(r, |l| l[r as usize]);
                pos[parent.act(pr, elems[x as usize]) as usize]
            }
            ModuleBackend::Quotient {
                parent,
                reps,
                coset_of,
            } => coset_of[parent.act(r, reps[x as usize]) as usize],
        }
    }

    fn compute_additive_gens(&self) -> Vec<Elem> {
        let mut gens: Vec<Elem> = match &self.backend {
            ModuleBackend::Presented { radix, .. } => {
                (0..radix.len()).map(|i| radix.unit(i)).collect()
            }
            ModuleBackend::Regular => self.ring.additive_gens().to_vec(),
            ModuleBackend::Product { factors, radix } => {
                embed_factor_elems(factors.len(), radix, |i| factors[i].additive_gens().to_vec())
            }
            ModuleBackend::Sub { .. } => {
                let all = ElemSet::full(self.size);
                greedy_generators(
                    &all,
                    |x| additive_closure(self, [x]),
                    |a, b| subgroup_sum(self, a, b),
                )
            }
            ModuleBackend::Quotient {
                parent, coset_of, ..
            } => parent
                .additive_gens()
                .iter()
                .map(|&g| coset_of[g as usize])
                .collect(),
        };
        gens.retain(|&g| g != 0);
        gens.sort_unstable();
        gens.dedup();
        gens
    }

    fn compute_generators(&self) -> Vec<Elem> {
        let mut gens: Vec<Elem> = match &self.backend {
            ModuleBackend::Presented { radix, .. } => {
                (0..radix.len()).map(|i| radix.unit(i)).collect()
            }
            ModuleBackend::Regular => vec![self.ring.one()],
            ModuleBackend::Product { factors, radix } => {
                embed_factor_elems(factors.len(), radix, |i| factors[i].generators().to_vec())
            }
            ModuleBackend::Sub { .. } => {
                let all = ElemSet::full(self.size);
                greedy_generators(
                    &all,
                    |x| self.cyclic_set(x),
                    |a, b| subgroup_sum(self, a, b),
                )
            }
            ModuleBackend::Quotient {
                parent, coset_of, ..
            } => parent
                .generators()
                .iter()
                .map(|&g| coset_of[g as usize])
                .collect(),
        };
        gens.retain(|&g| g != 0);
        gens.sort_unstable();
        gens.dedup();
        gens
    }

    /// The cyclic submodule `Rx` as a set.
    pub fn cyclic_set(&self, x: Elem) -> ElemSet {
        additive_closure(
            self,
            self.ring.additive_gens().iter().map(|&g| self.act(g, x)),
        )
    }

    /// Coordinate vector; derived carriers report parent coordinates
    /// (quotients use the least coset member).
    pub fn coords(&self, x: Elem) -> Vec<u32> {
        match &self.backend {
            ModuleBackend::Presented { radix, .. } => radix.decode(x),
            ModuleBackend::Regular => self.ring.coords(x),
            ModuleBackend::Product { factors, radix } => factors
                .iter()
                .enumerate()
                .flat_map(|(i, f)| f.coords(radix.digit(x, i)))
                .collect(),
            ModuleBackend::Sub { parent, elems, .. } => parent.coords(elems[x as usize]),
            ModuleBackend::Quotient { parent, reps, .. } => parent.coords(reps[x as usize]),
        }
    }

    pub fn coord_len(&self) -> usize {
        match &self.backend {
            ModuleBackend::Presented { radix, .. } => radix.len(),
            ModuleBackend::Regular => self.ring.coord_len(),
            ModuleBackend::Product { factors, .. } => factors.iter().map(|f| f.coord_len()).sum(),
            ModuleBackend::Sub { parent, .. } | ModuleBackend::Quotient { parent, .. } => {
                parent.coord_len()
            }
        }
    }

    /// Inverse of [`FiniteModule::coords`]; for quotients any coset member
    /// is accepted.
    pub fn element(&self, coords: &[u32]) -> Result<Elem> {
        let bad = || Error::InvalidElement(coords.to_vec());
        if coords.len() != self.coord_len() {
            return Err(bad());
        }
        match &self.backend {
            ModuleBackend::Presented { radix, .. } => radix.encode(coords).ok_or_else(bad),
            ModuleBackend::Regular => self.ring.element(coords),
            ModuleBackend::Product { factors, radix } => {
                let mut parts = Vec::with_capacity(factors.len());
                let mut at = 0;
                for f in factors {
                    let len = f.coord_len();
                    parts.push(f.element(&coords[at..at + len]).map_err(|_| bad())? as u64);
                    at += len;
                }
                Ok(radix.encode_reduced(&parts))
            }
            ModuleBackend::Sub { parent, pos, .. } => {
                let x = parent.element(coords).map_err(|_| bad())?;
                match pos[x as usize] {
                    Elem::MAX => Err(bad()),
                    y => Ok(y),
                }
            }
            ModuleBackend::Quotient {
                parent, coset_of, ..
            } => Ok(coset_of[parent.element(coords).map_err(|_| bad())? as usize]),
        }
    }

    pub fn format_elem(&self, x: Elem) -> String {
        crate::ring::format_coords(&self.coords(x))
    }

    pub(crate) fn coordinate_orders(&self) -> Option<Vec<u32>> {
        match &self.backend {
            ModuleBackend::Presented { radix, .. } => Some(radix.orders().to_vec()),
            ModuleBackend::Regular => self.ring.coordinate_orders(),
            ModuleBackend::Product { factors, .. } => {
                let mut v = Vec::new();
                for f in factors {
                    v.extend(f.coordinate_orders()?);
                }
                Some(v)
            }
            ModuleBackend::Sub { .. } | ModuleBackend::Quotient { .. } => None,
        }
    }

    pub(crate) fn coordinate_basis(&self) -> Option<Vec<Elem>> {
        let orders = self.coordinate_orders()?;
        let k = orders.len();
        (0..k)
            .map(|i| {
                let mut v = vec![0u32; k];
                v[i] = 1 % orders[i];
                self.element(&v).ok()
            })
            .collect()
    }

    /// Structure constants when both the module and its ring have
    /// coordinates.
    pub fn presentation(&self) -> Option<ModulePresentation> {
        if let ModuleBackend::Presented { pres, .. } = &self.backend {
            return Some(pres.clone());
        }
        let ring_basis = self.ring.coordinate_basis()?;
        let basis = self.coordinate_basis()?;
        let action_table = ring_basis
            .iter()
            .map(|&r| basis.iter().map(|&e| self.coords(self.act(r, e))).collect())
            .collect();
        Some(ModulePresentation {
            additive_orders: self.coordinate_orders()?,
            action_table,
        })
    }


    /// Factor modules when built as a direct product.
    pub fn product_factors(&self) -> Option<&[Arc<FiniteModule>]> {
        match &self.backend {
            ModuleBackend::Product { factors, .. } => Some(factors),
            _ => None,
        }
    }

    pub fn split(&self, x: Elem) -> Option<Vec<Elem>> {
        match &self.backend {
            ModuleBackend::Product { factors, radix } => {
                Some((0..factors.len()).map(|i| radix.digit(x, i)).collect())
            }
            _ => None,
        }
    }

    pub fn join(&self, parts: &[Elem]) -> Option<Elem> {
        match &self.backend {
            ModuleBackend::Product { factors, radix } if parts.len() == factors.len() => {
                let v: Vec<u64> = parts.iter().map(|&p| p as u64).collect();
                Some(radix.encode_reduced(&v))
            }
            _ => None,
        }
    }

    /// Re-runs the element-level law checks.
    pub fn check_laws(&self, limits: &Limits) -> Result<()> {
        validate::check_module_laws(self, limits)
    }

    /// Builds a direct product over an existing product ring.
    pub(crate) fn product_over(
        ring: &Arc<FiniteRing>,
        factors: Vec<Arc<FiniteModule>>,
    ) -> Result<Arc<FiniteModule>> {
        let rings = ring
            .product_factors()
            .ok_or_else(|| Error::ArityMismatch("ring is not a direct product".into()))?;
        if rings.len() != factors.len() {
            return Err(Error::ArityMismatch(format!(
                "{} module factors over {} ring factors",
                factors.len(),
                rings.len()
            )));
        }
        for (r, m) in rings.iter().zip(&factors) {
            if !Arc::ptr_eq(r, m.ring()) {
                return Err(Error::RingMismatch);
            }
        }
        let sizes: Vec<u32> = factors.iter().map(|f| f.size() as u32).collect();
        let limits = ring.limits();
        let radix = Radix::new(&sizes, limits.max_carrier).ok_or(Error::SizeExceeded {
            what: "module",
            size: sizes.iter().map(|&s| s as usize).product(),
            cap: limits.max_carrier,
        })?;
        let size = radix.size();
        Ok(Arc::new(FiniteModule::assemble(
            ring.clone(),
            ModuleBackend::Product { factors, radix },
            size,
            None,
            limits,
        )))
    }
}

fn embed_factor_elems(
    count: usize,
    radix: &Radix,
    elems: impl Fn(usize) -> Vec<Elem>,
) -> Vec<Elem> {
    let mut out = Vec::new();
    for i in 0..count {
        for g in elems(i) {
            let mut parts = vec![0u64; count];
            parts[i] = g as u64;
            out.push(radix.encode_reduced(&parts));
        }
    }
    out
}

impl Additive for FiniteModule {
    fn size(&self) -> usize {
        self.size
    }
    fn add(&self, a: Elem, b: Elem) -> Elem {
        FiniteModule::add(self, a, b)
    }
    fn neg(&self, a: Elem) -> Elem {
        FiniteModule::neg(self, a)
    }
}
