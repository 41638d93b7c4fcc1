//! Derived instances: products, idealizations, homogeneous ideals, ideals
//! as modules and epimorphic images.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::module::{FiniteModule, Projection, Submodule};
use crate::multset::MultSet;
use crate::radix::Radix;
use crate::ring::{FiniteRing, Ideal, RingBackend};
use crate::set::{Elem, ElemSet};

/// `R₁ × … × Rₙ`; a single factor is returned unchanged.
pub fn product_ring(factors: &[Arc<FiniteRing>]) -> Result<Arc<FiniteRing>> {
    match factors {
        [] => Err(Error::ArityMismatch("a product needs at least one factor".into())),
        [one] => Ok(one.clone()),
        _ => {
            let sizes: Vec<u32> = factors.iter().map(|f| f.size() as u32).collect();
            let limits = factors[0].limits();
            let radix = Radix::new(&sizes, limits.max_carrier).ok_or(Error::SizeExceeded {
                what: "ring",
                size: sizes.iter().map(|&s| s as usize).product(),
                cap: limits.max_carrier,
            })?;
            let ones: Vec<u64> = factors.iter().map(|f| f.one() as u64).collect();
            let one = radix.encode_reduced(&ones);
            let size = radix.size();
            Ok(Arc::new(FiniteRing::assemble(
                RingBackend::Product {
                    factors: factors.to_vec(),
                    radix,
                },
                size,
                one,
                limits,
            )))
        }
    }
}

/// `M₁ × … × Mₙ` over the product of the factor rings; a single factor is
/// returned unchanged.
pub fn product_module(factors: &[Arc<FiniteModule>]) -> Result<Arc<FiniteModule>> {
    match factors {
        [] => Err(Error::ArityMismatch("a product needs at least one factor".into())),
        [one] => Ok(one.clone()),
        _ => {
            let rings: Vec<Arc<FiniteRing>> = factors.iter().map(|m| m.ring().clone()).collect();
            let ring = product_ring(&rings)?;
            FiniteModule::product_over(&ring, factors.to_vec())
        }
    }
}

/// `S₁ × … × Sₙ` inside a product ring.
pub fn product_mult_set(ring: &FiniteRing, sets: &[MultSet]) -> Result<MultSet> {
    let rings = match ring.product_factors() {
        Some(f) => f,
        None if sets.len() == 1 => {
            if sets[0].ring_id() != ring.id() {
                return Err(Error::RingMismatch);
            }
            return Ok(sets[0].clone());
        }
        None => return Err(Error::ArityMismatch("ring is not a direct product".into())),
    };
    if rings.len() != sets.len() {
        return Err(Error::ArityMismatch(format!(
            "{} sets for {} factors",
            sets.len(),
            rings.len()
        )));
    }
    if rings.iter().zip(sets).any(|(r, s)| r.id() != s.ring_id()) {
        return Err(Error::RingMismatch);
    }
    let mut combos: Vec<Vec<Elem>> = vec![Vec::new()];
    for s in sets {
        combos = combos
            .into_iter()
            .flat_map(|c| {
                s.elems().iter().map(move |&x| {
                    let mut c = c.clone();
                    c.push(x);
                    c
                })
            })
            .collect();
    }
    let set = ElemSet::from_iter_in(
        ring.size(),
        combos.iter().map(|c| ring.join(c).expect("arity checked")),
    );
    let mut gens = Vec::new();
    for (i, s) in sets.iter().enumerate() {
        for &g in s.gens() {
            let mut parts: Vec<Elem> = rings.iter().map(|r| r.one()).collect();
            parts[i] = g;
            gens.push(ring.join(&parts).expect("arity checked"));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    Ok(ring.wrap_mult_set(set, gens))
}

/// The trivial extension `R ∝ M` with `(a, m)(b, n) = (ab, an + bm)`.
pub fn idealization(ring: &Arc<FiniteRing>, module: &Arc<FiniteModule>) -> Result<Arc<FiniteRing>> {
    if module.ring().id() != ring.id() {
        return Err(Error::RingMismatch);
    }
    let limits = ring.limits();
    let size = ring.size().saturating_mul(module.size());
    if size > limits.max_carrier {
        return Err(Error::SizeExceeded {
            what: "ring",
            size,
            cap: limits.max_carrier,
        });
    }
    let one = ring.one() * module.size() as Elem;
    Ok(Arc::new(FiniteRing::assemble(
        RingBackend::Idealization {
            base: ring.clone(),
            module: module.clone(),
        },
        size,
        one,
        limits,
    )))
}

fn idealization_of(ext: &FiniteRing) -> Result<(&Arc<FiniteRing>, &Arc<FiniteModule>)> {
    ext.idealization_parts()
        .ok_or(Error::Unsupported("ring is not an idealization"))
}

/// `(a, m)` as an element of `R ∝ M`.
pub fn pair(ext: &FiniteRing, a: Elem, m: Elem) -> Result<Elem> {
    let (_, module) = idealization_of(ext)?;
    Ok(a * module.size() as Elem + m)
}

/// Splits an element of `R ∝ M` into `(a, m)`.
pub fn unpair(ext: &FiniteRing, x: Elem) -> Result<(Elem, Elem)> {
    let (_, module) = idealization_of(ext)?;
    let k = module.size() as Elem;
    Ok((x / k, x % k))
}

/// `I ∝ N`, an ideal of `R ∝ M` exactly when `IM ⊆ N`.
pub fn homogeneous_ideal(ext: &FiniteRing, i: &Ideal, n: &Submodule) -> Result<Ideal> {
    let (base, module) = idealization_of(ext)?;
    if i.ring_id() != base.id() {
        return Err(Error::RingMismatch);
    }
    if n.module_id() != module.id() {
        return Err(Error::ModuleMismatch);
    }
    for &a in i.gens() {
        for &m in module.generators() {
            if !n.contains(module.act(a, m)) {
                return Err(Error::NotHomogeneous {
                    a: base.coords(a),
                    m: module.coords(m),
                });
            }
        }
    }
    let k = module.size() as Elem;
    let set = ElemSet::from_iter_in(
        ext.size(),
        i.elems()
            .iter()
            .flat_map(|&a| n.elems().iter().map(move |&x| a * k + x)),
    );
    Ok(ext.ideal_from_set(set))
}

/// `S ∝ N = {(s, n) : s ∈ S, n ∈ N}`.
pub fn idealized_mult_set(ext: &FiniteRing, s: &MultSet, n: &Submodule) -> Result<MultSet> {
    let (base, module) = idealization_of(ext)?;
    if s.ring_id() != base.id() {
        return Err(Error::RingMismatch);
    }
    if n.module_id() != module.id() {
        return Err(Error::ModuleMismatch);
    }
    let k = module.size() as Elem;
    let elems: Vec<Elem> = s
        .elems()
        .iter()
        .flat_map(|&a| n.elems().iter().map(move |&x| a * k + x))
        .collect();
    ext.mult_set_from_elements(&elems)
}

/// An ideal with the restricted action, plus its inclusion into `R`.
pub fn ideal_as_module(ring: &Arc<FiniteRing>, i: &Ideal) -> Result<(Arc<FiniteModule>, Vec<Elem>)> {
    if i.ring_id() != ring.id() {
        return Err(Error::RingMismatch);
    }
    let reg = FiniteModule::regular(ring);
    let sub = reg.wrap_sub(i.set().clone(), i.gens().to_vec());
    reg.submodule_as_module(&sub)
}

/// The epimorphic image of `M` with kernel `N`.
pub fn epi_image(m: &Arc<FiniteModule>, n: &Submodule) -> Result<(Arc<FiniteModule>, Projection)> {
    m.quotient_module(n)
}
