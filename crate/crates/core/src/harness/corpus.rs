//! Deterministic instance corpora.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{
    build_module, build_ring, GeneratorList, InstanceFile, ModuleShortcut, ModuleSpec, RingShortcut,
    RingSpec,
};
use crate::limits::Limits;
use crate::multset::MultSet;
use crate::ring::FiniteRing;

/// Where an instance came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub family: String,
    pub params: String,
    pub mult_set: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDescriptor {
    pub ring: RingSpec,
    pub module: ModuleSpec,
    pub mult_set: GeneratorList,
    pub provenance: Provenance,
    pub degenerate: bool,
}

impl InstanceDescriptor {
    pub fn to_file(&self) -> InstanceFile {
        InstanceFile {
            ring: self.ring.clone(),
            module: self.module.clone(),
            mult_set: self.mult_set.clone(),
            submodule: None,
        }
    }

    /// Wraps an instance file; its submodule block, if any, is ignored.
    pub fn from_file(file: &InstanceFile, label: &str, limits: Limits) -> Result<InstanceDescriptor> {
        let inst = file.load(limits).map_err(|e| Error::InvalidPresentation(e.to_string()))?;
        Ok(InstanceDescriptor {
            ring: file.ring.clone(),
            module: file.module.clone(),
            mult_set: file.mult_set.clone(),
            provenance: Provenance {
                family: "file".into(),
                params: label.into(),
                mult_set: "given".into(),
            },
            degenerate: inst.mult_set.is_degenerate(),
        })
    }

    pub fn label(&self) -> String {
        format!(
            "{}[{}] S={}",
            self.provenance.family, self.provenance.params, self.provenance.mult_set
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `Z/n` over itself.
    Zn,
    /// `Z/d` over `Z/n`, `d ∣ n`, `d < n`.
    Zd,
    /// `Z/d₁ × Z/d₂` over `Z/m × Z/n`.
    Products,
    /// Regular modules of `Z/a × Z/b × Z/c`.
    Triples,
    /// Regular modules of `Z/n ∝ Z/d`.
    Idealizations,
    /// Regular modules of idealizations modulo nonzero proper ideals.
    Quotients,
    /// `Z/d₁ ⊕ Z/d₂` over `Z/n`.
    Sums,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Zn,
        Family::Zd,
        Family::Products,
        Family::Triples,
        Family::Idealizations,
        Family::Quotients,
        Family::Sums,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Zn => "zn",
            Family::Zd => "zd",
            Family::Products => "products",
            Family::Triples => "triples",
            Family::Idealizations => "idealizations",
            Family::Quotients => "quotients",
            Family::Sums => "sums",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s || (s == "product" && *f == Family::Products))
            .ok_or_else(|| Error::InvalidPresentation(format!("unknown family `{s}`")))
    }
}

/// Parses a comma-separated family list; `all` selects every family.
pub fn parse_families(list: &str) -> Result<Vec<Family>> {
    if list.trim() == "all" {
        return Ok(Family::ALL.to_vec());
    }
    let mut out: Vec<Family> = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusBounds {
    pub zn_max: u32,
    pub product_max: u32,
    pub triple_max: u32,
    pub idealization_max: u32,
    pub sum_max: u32,
}

impl Default for CorpusBounds {
    fn default() -> Self {
        CorpusBounds {
            zn_max: 30,
            product_max: 8,
            triple_max: 4,
            idealization_max: 8,
            sum_max: 12,
        }
    }
}

fn zn(n: u32) -> RingSpec {
    RingSpec::Shortcut(RingShortcut::Zn { n })
}

fn regular() -> ModuleSpec {
    ModuleSpec::Shortcut(ModuleShortcut::Regular)
}

/// `Z/d` over `Z/n`, written as `regular` when `d = n`.
fn zd(n: u32, d: u32) -> ModuleSpec {
    if d == n {
        regular()
    } else {
        ModuleSpec::Shortcut(ModuleShortcut::Zd { d })
    }
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// `(ring, module, params)` triples of one family, in canonical order.
fn family_settings(family: Family, b: &CorpusBounds, limits: Limits) -> Vec<(RingSpec, ModuleSpec, String)> {
    let mut out = Vec::new();
    match family {
        Family::Zn => {
            for n in 2..=b.zn_max {
                out.push((zn(n), regular(), format!("n={n}")));
            }
        }
        Family::Zd => {
            for n in 2..=b.zn_max {
                for d in divisors(n).into_iter().filter(|&d| d < n) {
                    out.push((zn(n), zd(n, d), format!("n={n},d={d}")));
                }
            }
        }
        Family::Products => {
            for m in 2..=b.product_max {
                for n in 2..=b.product_max {
                    let ring = RingSpec::Shortcut(RingShortcut::Product {
                        factors: vec![zn(m), zn(n)],
                    });
                    for d1 in divisors(m) {
                        for d2 in divisors(n) {
                            let module = ModuleSpec::Shortcut(ModuleShortcut::Product {
                                factors: vec![zd(m, d1), zd(n, d2)],
                            });
                            out.push((ring.clone(), module, format!("m={m},n={n},d1={d1},d2={d2}")));
                        }
                    }
                }
            }
        }
        Family::Triples => {
            for a in 2..=b.triple_max {
                for bb in a..=b.triple_max {
                    for c in bb..=b.triple_max {
                        let ring = RingSpec::Shortcut(RingShortcut::Product {
                            factors: vec![zn(a), zn(bb), zn(c)],
                        });
                        let module = ModuleSpec::Shortcut(ModuleShortcut::Product {
                            factors: vec![regular(), regular(), regular()],
                        });
                        out.push((ring, module, format!("a={a},b={bb},c={c}")));
                    }
                }
            }
        }
        Family::Idealizations => {
            for (ring, params) in idealization_rings(b) {
                out.push((ring, regular(), params));
            }
        }
        Family::Quotients => {
            for (ring, params) in idealization_rings(b) {
                let Ok(r) = build_ring(&ring, "ring", limits) else { continue };
                let Ok(ideals) = r.ideals() else { continue };
                for i in ideals.iter().filter(|i| !i.is_zero() && !i.is_whole()) {
                    let by: Vec<Vec<u32>> = i.gens().iter().map(|&g| r.coords(g)).collect();
                    let label = by.iter().map(|c| r.format_elem(r.element(c).unwrap())).collect::<Vec<_>>();
                    let module = ModuleSpec::Shortcut(ModuleShortcut::Quotient {
                        of: Box::new(regular()),
                        by,
                    });
                    out.push((ring.clone(), module, format!("{params},by=({})", label.join(","))));
                }
            }
        }
        Family::Sums => {
            for n in 2..=b.sum_max {
                let ds: Vec<u32> = divisors(n).into_iter().filter(|&d| d > 1).collect();
                for (i, &d1) in ds.iter().enumerate() {
                    for &d2 in &ds[i..] {
                        let module = ModuleSpec::Shortcut(ModuleShortcut::Sum { orders: vec![d1, d2] });
                        out.push((zn(n), module, format!("n={n},d1={d1},d2={d2}")));
                    }
                }
            }
        }
    }
    out
}

fn idealization_rings(b: &CorpusBounds) -> Vec<(RingSpec, String)> {
    let mut out = Vec::new();
    for n in 2..=b.idealization_max {
        for d in divisors(n).into_iter().filter(|&d| d > 1) {
            let ring = RingSpec::Shortcut(RingShortcut::Idealization {
                base: Box::new(zn(n)),
                module: Box::new(zd(n, d)),
            });
            out.push((ring, format!("n={n},d={d}")));
        }
    }
    out
}

/// `{1}`, `U(R)`, `closure({x})` for every `x`, and `R ∖ 𝔪` for every
/// maximal `𝔪`, in that order and without removing repeats.
pub fn mult_set_family(ring: &Arc<FiniteRing>) -> Result<Vec<(String, MultSet)>> {
    let mut out = vec![
        ("{1}".to_string(), ring.trivial_mult_set()),
        ("U(R)".to_string(), ring.unit_mult_set()),
    ];
    for x in ring.elements() {
        out.push((format!("closure({})", ring.format_elem(x)), ring.mult_closure(&[x])?));
    }
    for m in ring.maximal_ideals()?.iter() {
        let gens: Vec<String> = m.gens().iter().map(|&g| ring.format_elem(g)).collect();
        out.push((format!("R-({})", gens.join(",")), ring.complement_of_maximal(m)?));
    }
    Ok(out)
}

/// Every `(ring, module)` of the chosen families crossed with the ring's
/// multiplicative-set family. Settings that fail to build under `limits`
/// are left out.
pub fn generate_corpus(families: &[Family], bounds: &CorpusBounds, limits: Limits) -> Vec<InstanceDescriptor> {
    let mut out = Vec::new();
    for &family in families {
        for (ring_spec, module_spec, params) in family_settings(family, bounds, limits) {
            let Ok(ring) = build_ring(&ring_spec, "ring", limits) else { continue };
            if build_module(&ring, &module_spec, "module", limits).is_err() {
                continue;
            }
            let Ok(sets) = mult_set_family(&ring) else { continue };
            for (label, s) in sets {
                out.push(InstanceDescriptor {
                    ring: ring_spec.clone(),
                    module: module_spec.clone(),
                    mult_set: GeneratorList {
                        generators: s.gens().iter().map(|&g| ring.coords(g)).collect(),
                    },
                    provenance: Provenance {
                        family: family.name().into(),
                        params: params.clone(),
                        mult_set: label,
                    },
                    degenerate: s.is_degenerate(),
                });
            }
        }
    }
    out
}
