//! Finite commutative rings with identity.
//!
//! A ring is stored as an indexed carrier `0..|R|` in lexicographic
//! coordinate order. Presented rings compute products from generator
//! structure constants; derived rings (products, idealizations, corner rings
//! `eR`) compute them from their parts. Small rings cache full Cayley tables.

mod ideal;
mod validate;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Axiom, Error, Result};
use crate::lattice::Additive;
use crate::limits::{Limits, TABLE_SIZE};
use crate::module::FiniteModule;
use crate::radix::Radix;
use crate::set::{Elem, ElemSet};

pub use ideal::Ideal;
pub use validate::Validation;

pub(crate) fn next_id() -> u64 {
    static NEXT: AtomicU64 = AtomicU64::new(1);
    NEXT.fetch_add(1, Ordering::Relaxed)
}

/// Additive cyclic orders, the identity, and products of additive generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingPresentation {
    #[serde(rename = "orders")]
    pub additive_orders: Vec<u32>,
    pub one: Vec<u32>,
    pub mul_table: Vec<Vec<Vec<u32>>>,
}

impl RingPresentation {
    /// `Z/n` with one generator.
    pub fn cyclic(n: u32) -> RingPresentation {
        RingPresentation {
            additive_orders: vec![n],
            one: vec![1 % n],
            mul_table: vec![vec![vec![1 % n]]],
        }
    }

    fn check_shape(&self) -> Result<()> {
        let k = self.additive_orders.len();
        let bad = |msg: String| Err(Error::InvalidPresentation(msg));
        if let Some(i) = self.additive_orders.iter().position(|&d| d == 0) {
            return bad(format!("orders[{i}] must be at least 1"));
        }
        if self.one.len() != k {
            return bad(format!("one has {} coordinates, expected {k}", self.one.len()));
        }
        in_range("one", &self.one, &self.additive_orders)?;
        if self.mul_table.len() != k {
            return bad(format!("mul_table has {} rows, expected {k}", self.mul_table.len()));
        }
        for (i, row) in self.mul_table.iter().enumerate() {
            if row.len() != k {
                return bad(format!("mul_table[{i}] has {} entries, expected {k}", row.len()));
            }
            for (j, v) in row.iter().enumerate() {
                in_range(&format!("mul_table[{i}][{j}]"), v, &self.additive_orders)?;
            }
        }
        Ok(())
    }
}

pub(crate) fn in_range(field: &str, v: &[u32], orders: &[u32]) -> Result<()> {
    if v.len() != orders.len() {
        return Err(Error::InvalidPresentation(format!(
            "{field} has {} coordinates, expected {}",
            v.len(),
            orders.len()
        )));
    }
    for (l, (&c, &d)) in v.iter().zip(orders).enumerate() {
        if c >= d {
            return Err(Error::InvalidPresentation(format!(
                "{field}[{l}] = {c} is not below its order {d}"
            )));
        }
    }
    Ok(())
}

/// Checks that `d · v = 0` in the group with the given orders.
pub(crate) fn killed_by(d: u32, v: &[u32], orders: &[u32]) -> bool {
    v.iter()
        .zip(orders)
        .all(|(&c, &o)| (c as u64 * d as u64) % o as u64 == 0)
}

pub(crate) struct Presented {
    pub(crate) pres: RingPresentation,
    pub(crate) radix: Radix,
}

pub(crate) enum RingBackend {
    Presented(Presented),
    Product {
        factors: Vec<Arc<FiniteRing>>,
        radix: Radix,
    },
    Idealization {
        base: Arc<FiniteRing>,
        module: Arc<FiniteModule>,
    },
    /// `eR` for an idempotent `e`, with identity `e`.
    Corner {
        parent: Arc<FiniteRing>,
        elems: Vec<Elem>,
        pos: Vec<Elem>,
    },
}

pub(crate) struct Tables {
    add: Vec<Elem>,
    mul: Vec<Elem>,
}

#[derive(Default)]
pub(crate) struct RingCache {
    pub(crate) units: OnceLock<ElemSet>,
    pub(crate) ideals: OnceLock<Arc<Vec<Ideal>>>,
    pub(crate) maximal: OnceLock<Arc<Vec<Ideal>>>,
    pub(crate) prime: OnceLock<Arc<Vec<Ideal>>>,
}

/// A validated finite commutative ring with identity.
pub struct FiniteRing {
    id: u64,
    size: usize,
    one: Elem,
    backend: RingBackend,
    neg: Vec<Elem>,
    tables: Option<Tables>,
    additive_gens: Vec<Elem>,
    validation: Validation,
    limits: Limits,
    pub(crate) cache: RingCache,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("id", &self.id)
            .field("size", &self.size)
            .field("kind", &self.kind())
            .finish()
    }
}

/// Element operations exposed through [`FiniteRing::elem_op`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElemOp {
    Add,
    Neg,
    Mul,
}

/// An element tagged with the ring it belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingElement {
    ring: u64,
    index: Elem,
}

impl RingElement {
    pub fn index(&self) -> Elem {
        self.index
    }
}

impl FiniteRing {
    /// Validates a presentation and builds the ring.
    pub fn from_presentation(pres: RingPresentation, limits: Limits) -> Result<Arc<FiniteRing>> {
        pres.check_shape()?;
        let orders = pres.additive_orders.clone();
        let radix = Radix::new(&orders, limits.max_carrier).ok_or(Error::SizeExceeded {
            what: "ring",
            size: orders.iter().map(|&d| d as usize).product(),
            cap: limits.max_carrier,
        })?;
        let k = orders.len();
        let unit = |i: usize| {
            let mut v = vec![0u32; k];
            v[i] = 1 % orders[i];
            v
        };
        for i in 0..k {
            for j in 0..k {
                let g = &pres.mul_table[i][j];
                if !killed_by(orders[i], g, &orders) || !killed_by(orders[j], g, &orders) {
                    return Err(Error::AxiomViolation {
                        axiom: Axiom::WellDefined,
                        witness: vec![unit(i), unit(j)],
                    });
                }
                if pres.mul_table[i][j] != pres.mul_table[j][i] {
                    return Err(Error::AxiomViolation {
                        axiom: Axiom::Commutativity,
                        witness: vec![unit(i), unit(j)],
                    });
                }
            }
        }
        let one = radix.encode(&pres.one).expect("checked shape");
        let size = radix.size();
        let backend = RingBackend::Presented(Presented { pres, radix });
        let mut ring = FiniteRing::assemble(backend, size, one, limits);
        ring.validation = validate::check_ring_laws(&ring, &limits)?;
        Ok(Arc::new(ring))
    }

    /// `Z/n`.
    pub fn cyclic(n: u32) -> Result<Arc<FiniteRing>> {
        if n == 0 {
            return Err(Error::InvalidPresentation("n must be at least 1".into()));
        }
        FiniteRing::from_presentation(RingPresentation::cyclic(n), Limits::default())
    }

    pub(crate) fn assemble(
        backend: RingBackend,
        size: usize,
        one: Elem,
        limits: Limits,
    ) -> FiniteRing {
        let mut ring = FiniteRing {
            id: next_id(),
            size,
            one,
            backend,
            neg: Vec::new(),
            tables: None,
            additive_gens: Vec::new(),
            validation: Validation::Trusted,
            limits,
            cache: RingCache::default(),
        };
        ring.neg = (0..size as Elem).map(|x| ring.neg_raw(x)).collect();
        if size <= TABLE_SIZE {
            let mut add = Vec::with_capacity(size * size);
            let mut mul = Vec::with_capacity(size * size);
            for a in 0..size as Elem {
                for b in 0..size as Elem {
                    add.push(ring.add_raw(a, b));
                    mul.push(ring.mul_raw(a, b));
                }
            }
            ring.tables = Some(Tables { add, mul });
        }
        ring.additive_gens = ring.compute_additive_gens();
        ring
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn validation(&self) -> Validation {
        self.validation
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.size as Elem
    }

    /// Additive generators of the carrier.
    pub fn additive_gens(&self) -> &[Elem] {
        &self.additive_gens
    }

    pub fn kind(&self) -> &'static str {
        match &self.backend {
            RingBackend::Presented(_) => "presented",
            RingBackend::Product { .. } => "product",
            RingBackend::Idealization { .. } => "idealization",
            RingBackend::Corner { .. } => "corner",
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.tables {
            Some(t) => t.add[a as usize * self.size + b as usize],
            None => self.add_raw(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.tables {
            Some(t) => t.mul[a as usize * self.size + b as usize],
            None => self.mul_raw(a, b),
        }
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut acc = self.one;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn typed(&self, x: Elem) -> RingElement {
        RingElement {
            ring: self.id,
            index: x,
        }
    }

    /// Checked arithmetic on tagged elements.
    pub fn elem_op(
        &self,
        kind: ElemOp,
        a: RingElement,
        b: Option<RingElement>,
    ) -> Result<RingElement> {
        if a.ring != self.id || b.is_some_and(|b| b.ring != self.id) {
            return Err(Error::RingMismatch);
        }
        let need_b = || {
            b.map(|b| b.index)
                .ok_or_else(|| Error::ArityMismatch("binary operation needs two operands".into()))
        };
        let index = match kind {
            ElemOp::Add => self.add(a.index, need_b()?),
            ElemOp::Mul => self.mul(a.index, need_b()?),
            ElemOp::Neg => self.neg(a.index),
        };
        Ok(self.typed(index))
    }

    fn add_raw(&self, a: Elem, b: Elem) -> Elem {
        match &self.backend {
            RingBackend::Presented(p) => p.radix.add(a, b),
            RingBackend::Product { factors, radix } => {
                let parts: Vec<u64> = factors
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f.add(radix.digit(a, i), radix.digit(b, i)) as u64)
                    .collect();
                radix.encode_reduced(&parts)
            }
            RingBackend::Idealization { base, module } => {
                let m = module.size() as Elem;
                let r = base.add(a / m, b / m);
                r * m + module.add(a % m, b % m)
            }
            RingBackend::Corner { parent, elems, pos } => {
                pos[parent.add(elems[a as usize], elems[b as usize]) as usize]
            }
        }
    }

    fn neg_raw(&self, a: Elem) -> Elem {
        match &self.backend {
            RingBackend::Presented(p) => p.radix.neg(a),
            RingBackend::Product { factors, radix } => {
                let parts: Vec<u64> = factors
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f.neg(radix.digit(a, i)) as u64)
                    .collect();
                radix.encode_reduced(&parts)
            }
            RingBackend::Idealization { base, module } => {
                let m = module.size() as Elem;
                base.neg(a / m) * m + module.neg(a % m)
            }
            RingBackend::Corner { parent, elems, pos } => {
                pos[parent.neg(elems[a as usize]) as usize]
            }
        }
    }

    fn mul_raw(&self, a: Elem, b: Elem) -> Elem {
        match &self.backend {
            RingBackend::Presented(p) => {
                let orders = p.radix.orders();
                let k = orders.len();
                let mut acc = vec![0u64; k];
                for i in 0..k {
                    let ai = p.radix.digit(a, i) as u64;
                    if ai == 0 {
                        continue;
                    }
                    for j in 0..k {
                        let bj = p.radix.digit(b, j) as u64;
                        if bj == 0 {
                            continue;
                        }
                        let c = ai * bj;
                        for (l, &g) in p.pres.mul_table[i][j].iter().enumerate() {
                            if g != 0 {
                                let d = orders[l] as u64;
                                acc[l] = (acc[l] + (c % d) * g as u64) % d;
                            }
                        }
                    }
                }
                p.radix.encode_reduced(&acc)
            }
            RingBackend::Product { factors, radix } => {
                let parts: Vec<u64> = factors
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f.mul(radix.digit(a, i), radix.digit(b, i)) as u64)
                    .collect();
                radix.encode_reduced(&parts)
            }
            RingBackend::Idealization { base, module } => {
                // (r, m)(s, n) = (rs, rn + sm)
                let size = module.size() as Elem;
                let (r, m) = (a / size, a % size);
                let (s, n) = (b / size, b % size);
                base.mul(r, s) * size + module.add(module.act(r, n), module.act(s, m))
            }
            RingBackend::Corner { parent, elems, pos } => {
                pos[parent.mul(elems[a as usize], elems[b as usize]) as usize]
            }
        }
    }

    fn compute_additive_gens(&self) -> Vec<Elem> {
        let mut gens: Vec<Elem> = match &self.backend {
            RingBackend::Presented(p) => (0..p.radix.len()).map(|i| p.radix.unit(i)).collect(),
            RingBackend::Product { factors, radix } => {
                let mut out = Vec::new();
                for (i, f) in factors.iter().enumerate() {
                    for &g in f.additive_gens() {
                        let mut parts = vec![0u64; factors.len()];
                        parts[i] = g as u64;
                        out.push(radix.encode_reduced(&parts));
                    }
                }
                out
            }
            RingBackend::Idealization { base, module } => {
                let m = module.size() as Elem;
                base.additive_gens()
                    .iter()
                    .map(|&g| g * m)
                    .chain(module.additive_gens().iter().copied())
                    .collect()
            }
            RingBackend::Corner { parent, elems, pos } => {
                let e = elems[self.one as usize];
                parent
                    .additive_gens()
                    .iter()
                    .map(|&g| pos[parent.mul(e, g) as usize])
                    .collect()
            }
        };
        gens.retain(|&g| g != 0);
        gens.sort_unstable();
        gens.dedup();
        gens
    }

    /// Coordinate vector of an element. Derived carriers report the
    /// coordinates of the corresponding parent element.
    pub fn coords(&self, x: Elem) -> Vec<u32> {
        match &self.backend {
            RingBackend::Presented(p) => p.radix.decode(x),
            RingBackend::Product { factors, radix } => factors
                .iter()
                .enumerate()
                .flat_map(|(i, f)| f.coords(radix.digit(x, i)))
                .collect(),
            RingBackend::Idealization { base, module } => {
                let m = module.size() as Elem;
                let mut v = base.coords(x / m);
                v.extend(module.coords(x % m));
                v
            }
            RingBackend::Corner { parent, elems, .. } => parent.coords(elems[x as usize]),
        }
    }

    /// Number of coordinates in an element vector.
    pub fn coord_len(&self) -> usize {
        match &self.backend {
            RingBackend::Presented(p) => p.radix.len(),
            RingBackend::Product { factors, .. } => factors.iter().map(|f| f.coord_len()).sum(),
            RingBackend::Idealization { base, module } => base.coord_len() + module.coord_len(),
            RingBackend::Corner { parent, .. } => parent.coord_len(),
        }
    }

    /// Inverse of [`FiniteRing::coords`].
    pub fn element(&self, coords: &[u32]) -> Result<Elem> {
        let bad = || Error::InvalidElement(coords.to_vec());
        if coords.len() != self.coord_len() {
            return Err(bad());
        }
        match &self.backend {
            RingBackend::Presented(p) => p.radix.encode(coords).ok_or_else(bad),
            RingBackend::Product { factors, radix } => {
                let mut parts = Vec::with_capacity(factors.len());
                let mut at = 0;
                for f in factors {
                    let len = f.coord_len();
                    parts.push(f.element(&coords[at..at + len]).map_err(|_| bad())? as u64);
                    at += len;
                }
                Ok(radix.encode_reduced(&parts))
            }
            RingBackend::Idealization { base, module } => {
                let split = base.coord_len();
                let r = base.element(&coords[..split]).map_err(|_| bad())?;
                let m = module.element(&coords[split..]).map_err(|_| bad())?;
                Ok(r * module.size() as Elem + m)
            }
            RingBackend::Corner { parent, pos, .. } => {
                let x = parent.element(coords).map_err(|_| bad())?;
                match pos[x as usize] {
                    Elem::MAX => Err(bad()),
                    y => Ok(y),
                }
            }
        }
    }

    /// Human-readable element: a bare integer for one coordinate, a tuple
    /// otherwise.
    pub fn format_elem(&self, x: Elem) -> String {
        format_coords(&self.coords(x))
    }

    /// Structure constants, when the ring has them (presented rings and
    /// products or idealizations built from presented parts).
    pub fn presentation(&self) -> Option<RingPresentation> {
        match &self.backend {
            RingBackend::Presented(p) => Some(p.pres.clone()),
            RingBackend::Product { .. } | RingBackend::Idealization { .. } => {
                let gens: Vec<Elem> = self.coordinate_basis()?;
                let orders: Vec<u32> = self.coordinate_orders()?;
                let mul_table = gens
                    .iter()
                    .map(|&a| gens.iter().map(|&b| self.coords(self.mul(a, b))).collect())
                    .collect();
                Some(RingPresentation {
                    additive_orders: orders,
                    one: self.coords(self.one),
                    mul_table,
                })
            }
            RingBackend::Corner { .. } => None,
        }
    }

    /// Elements whose coordinate vectors are the unit vectors.
    pub(crate) fn coordinate_basis(&self) -> Option<Vec<Elem>> {
        let k = self.coord_len();
        let mut out = Vec::with_capacity(k);
        let orders = self.coordinate_orders()?;
        for i in 0..k {
            let mut v = vec![0u32; k];
            v[i] = 1 % orders[i];
            out.push(self.element(&v).ok()?);
        }
        Some(out)
    }

    pub(crate) fn coordinate_orders(&self) -> Option<Vec<u32>> {
        match &self.backend {
            RingBackend::Presented(p) => Some(p.radix.orders().to_vec()),
            RingBackend::Product { factors, .. } => {
                let mut v = Vec::new();
                for f in factors {
                    v.extend(f.coordinate_orders()?);
                }
                Some(v)
            }
            RingBackend::Idealization { base, module } => {
                let mut v = base.coordinate_orders()?;
                v.extend(module.coordinate_orders()?);
                Some(v)
            }
            RingBackend::Corner { .. } => None,
        }
    }


    /// Factor rings when this ring was built as a direct product.
    pub fn product_factors(&self) -> Option<&[Arc<FiniteRing>]> {
        match &self.backend {
            RingBackend::Product { factors, .. } => Some(factors),
            _ => None,
        }
    }

    /// Splits a product-ring element into factor elements.
    pub fn split(&self, x: Elem) -> Option<Vec<Elem>> {
        match &self.backend {
            RingBackend::Product { factors, radix } => {
                Some((0..factors.len()).map(|i| radix.digit(x, i)).collect())
            }
            _ => None,
        }
    }

    /// Joins factor elements into a product-ring element.
    pub fn join(&self, parts: &[Elem]) -> Option<Elem> {
        match &self.backend {
            RingBackend::Product { factors, radix } if parts.len() == factors.len() => {
                let v: Vec<u64> = parts.iter().map(|&p| p as u64).collect();
                Some(radix.encode_reduced(&v))
            }
            _ => None,
        }
    }

    /// Base ring and module when this ring is an idealization `R ∝ M`.
    pub fn idealization_parts(&self) -> Option<(&Arc<FiniteRing>, &Arc<FiniteModule>)> {
        match &self.backend {
            RingBackend::Idealization { base, module } => Some((base, module)),
            _ => None,
        }
    }

    /// Parent ring and the parent elements of the carrier, for `eR`.
    pub fn corner_parts(&self) -> Option<(&Arc<FiniteRing>, &[Elem])> {
        match &self.backend {
            RingBackend::Corner { parent, elems, .. } => Some((parent, elems)),
            _ => None,
        }
    }

    /// Re-runs the element-level law checks.
    pub fn check_laws(&self, limits: &Limits) -> Result<Validation> {
        validate::check_ring_laws(self, limits)
    }
}

impl Additive for FiniteRing {
    fn size(&self) -> usize {
        self.size
    }
    fn add(&self, a: Elem, b: Elem) -> Elem {
        FiniteRing::add(self, a, b)
    }
    fn neg(&self, a: Elem) -> Elem {
        FiniteRing::neg(self, a)
    }
}

pub(crate) fn format_coords(c: &[u32]) -> String {
    match c {
        [x] => x.to_string(),
        _ => {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            format!("({})", parts.join(","))
        }
    }
}
