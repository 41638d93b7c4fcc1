//! Instance files: JSON descriptions of a ring, a module over it, a
//! multiplicative set and optionally a submodule.
//!
//! ```json
//! {
//!   "ring": {"kind": "zn", "n": 4},
//!   "module": {"kind": "regular"},
//!   "mult_set": {"generators": [[3]]}
//! }
//! ```
//!
//! Rings are `{"kind": "zn", "n"}`, `{"kind": "product", "factors"}`,
//! `{"kind": "idealization", "base", "module"}` or a raw presentation
//! `{"orders", "one", "mul_table"}`. Modules are `{"kind": "regular"}`,
//! `{"kind": "zd", "d"}`, `{"kind": "product", "factors"}`,
//! `{"kind": "sum", "orders"}` (a direct sum of cyclic modules over a
//! cyclic ring), `{"kind": "quotient", "of", "by"}` or a raw presentation
//! `{"orders", "action_table"}`. Elements are coordinate arrays; a bare
//! integer is accepted for one-coordinate carriers.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::construct::{idealization, product_module, product_ring};
use crate::error::Error;
use crate::limits::Limits;
use crate::module::{FiniteModule, ModulePresentation, Submodule};
use crate::multset::MultSet;
use crate::ring::{FiniteRing, RingPresentation};
use crate::set::Elem;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("line {line}, column {column}: {msg}")]
    Syntax { line: usize, column: usize, msg: String },
    #[error("{path}: {msg}")]
    Field { path: String, msg: String },
    #[error("{path}: {source}")]
    Invalid {
        path: String,
        #[source]
        source: Error,
    },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

fn field(path: &str, msg: impl Into<String>) -> LoadError {
    LoadError::Field {
        path: path.to_string(),
        msg: msg.into(),
    }
}

fn invalid(path: &str) -> impl FnOnce(Error) -> LoadError + '_ {
    move |source| LoadError::Invalid {
        path: path.to_string(),
        source,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingSpec {
    Shortcut(RingShortcut),
    Raw(RingPresentation),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RingShortcut {
    Zn { n: u32 },
    Product { factors: Vec<RingSpec> },
    Idealization { base: Box<RingSpec>, module: Box<ModuleSpec> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModuleSpec {
    Shortcut(ModuleShortcut),
    Raw(ModulePresentation),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ModuleShortcut {
    Regular,
    Zd { d: u32 },
    Product { factors: Vec<ModuleSpec> },
    Sum { orders: Vec<u32> },
    Quotient { of: Box<ModuleSpec>, by: Vec<Vec<u32>> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorList {
    pub generators: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub ring: RingSpec,
    pub module: ModuleSpec,
    pub mult_set: GeneratorList,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub submodule: Option<GeneratorList>,
}

/// A loaded, validated instance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub ring: Arc<FiniteRing>,
    pub module: Arc<FiniteModule>,
    pub mult_set: MultSet,
    pub submodule: Option<Submodule>,
}

// Decoding goes through `Value` so that errors can name the offending field.

fn get<'a>(obj: &'a Value, path: &str, key: &str) -> Result<&'a Value, LoadError> {
    obj.get(key)
        .ok_or_else(|| field(path, format!("missing field `{key}`")))
}

fn as_u32(v: &Value, path: &str) -> Result<u32, LoadError> {
    v.as_u64()
        .and_then(|x| u32::try_from(x).ok())
        .ok_or_else(|| field(path, "expected a non-negative integer"))
}

fn decode<T: serde::de::DeserializeOwned>(v: &Value, path: &str) -> Result<T, LoadError> {
    T::deserialize(v).map_err(|e| field(path, e.to_string()))
}

fn kind<'a>(v: &'a Value, path: &str) -> Result<Option<&'a str>, LoadError> {
    if !v.is_object() {
        return Err(field(path, "expected an object"));
    }
    match v.get("kind") {
        None => Ok(None),
        Some(k) => k
            .as_str()
            .map(Some)
            .ok_or_else(|| field(&format!("{path}.kind"), "expected a string")),
    }
}

/// An element vector, or a bare integer for one-coordinate carriers.
fn elem_vec(v: &Value, path: &str) -> Result<Vec<u32>, LoadError> {
    match v {
        Value::Array(items) => items
            .iter()
            .enumerate()
            .map(|(i, x)| as_u32(x, &format!("{path}[{i}]")))
            .collect(),
        _ => Ok(vec![as_u32(v, path)?]),
    }
}

fn elem_list(v: &Value, path: &str) -> Result<Vec<Vec<u32>>, LoadError> {
    let items = v
        .as_array()
        .ok_or_else(|| field(path, "expected an array"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, x)| elem_vec(x, &format!("{path}[{i}]")))
        .collect()
}

fn ring_spec(v: &Value, path: &str) -> Result<RingSpec, LoadError> {
    Ok(match kind(v, path)? {
        None => {
            for key in ["orders", "one", "mul_table"] {
                get(v, path, key)?;
            }
            RingSpec::Raw(decode(v, path)?)
        }
        Some("zn") => RingSpec::Shortcut(RingShortcut::Zn {
            n: as_u32(get(v, path, "n")?, &format!("{path}.n"))?,
        }),
        Some("product") => {
            let fpath = format!("{path}.factors");
            let items = get(v, path, "factors")?
                .as_array()
                .ok_or_else(|| field(&fpath, "expected an array"))?;
            let factors = items
                .iter()
                .enumerate()
                .map(|(i, f)| ring_spec(f, &format!("{fpath}[{i}]")))
                .collect::<Result<_, _>>()?;
            RingSpec::Shortcut(RingShortcut::Product { factors })
        }
        Some("idealization") => RingSpec::Shortcut(RingShortcut::Idealization {
            base: Box::new(ring_spec(get(v, path, "base")?, &format!("{path}.base"))?),
            module: Box::new(module_spec(get(v, path, "module")?, &format!("{path}.module"))?),
        }),
        Some(other) => return Err(field(&format!("{path}.kind"), format!("unknown ring kind `{other}`"))),
    })
}

fn module_spec(v: &Value, path: &str) -> Result<ModuleSpec, LoadError> {
    Ok(match kind(v, path)? {
        None => {
            for key in ["orders", "action_table"] {
                get(v, path, key)?;
            }
            ModuleSpec::Raw(decode(v, path)?)
        }
        Some("regular") => ModuleSpec::Shortcut(ModuleShortcut::Regular),
        Some("zd") => ModuleSpec::Shortcut(ModuleShortcut::Zd {
            d: as_u32(get(v, path, "d")?, &format!("{path}.d"))?,
        }),
        Some("sum") => ModuleSpec::Shortcut(ModuleShortcut::Sum {
            orders: elem_vec(get(v, path, "orders")?, &format!("{path}.orders"))?,
        }),
        Some("product") => {
            let fpath = format!("{path}.factors");
            let items = get(v, path, "factors")?
                .as_array()
                .ok_or_else(|| field(&fpath, "expected an array"))?;
            let factors = items
                .iter()
                .enumerate()
                .map(|(i, f)| module_spec(f, &format!("{fpath}[{i}]")))
                .collect::<Result<_, _>>()?;
            ModuleSpec::Shortcut(ModuleShortcut::Product { factors })
        }
        Some("quotient") => ModuleSpec::Shortcut(ModuleShortcut::Quotient {
            of: Box::new(module_spec(get(v, path, "of")?, &format!("{path}.of"))?),
            by: elem_list(get(v, path, "by")?, &format!("{path}.by"))?,
        }),
        Some(other) => {
            return Err(field(&format!("{path}.kind"), format!("unknown module kind `{other}`")))
        }
    })
}

fn generator_list(v: &Value, path: &str) -> Result<GeneratorList, LoadError> {
    if !v.is_object() {
        return Err(field(path, "expected an object"));
    }
    Ok(GeneratorList {
        generators: elem_list(get(v, path, "generators")?, &format!("{path}.generators"))?,
    })
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<InstanceFile, LoadError> {
        let v: Value = serde_json::from_str(text).map_err(|e| LoadError::Syntax {
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        })?;
        if !v.is_object() {
            return Err(field("$", "expected an object"));
        }
        Ok(InstanceFile {
            ring: ring_spec(get(&v, "$", "ring")?, "ring")?,
            module: module_spec(get(&v, "$", "module")?, "module")?,
            mult_set: generator_list(get(&v, "$", "mult_set")?, "mult_set")?,
            submodule: match v.get("submodule") {
                None | Some(Value::Null) => None,
                Some(s) => Some(generator_list(s, "submodule")?),
            },
        })
    }

    pub fn read(path: &std::path::Path) -> Result<InstanceFile, LoadError> {
        InstanceFile::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance files serialize")
    }

    pub fn load(&self, limits: Limits) -> Result<Instance, LoadError> {
        let ring = build_ring(&self.ring, "ring", limits)?;
        let module = build_module(&ring, &self.module, "module", limits)?;
        let gens = ring_elems(&ring, &self.mult_set.generators, "mult_set.generators")?;
        let mult_set = ring.mult_closure(&gens).map_err(invalid("mult_set"))?;
        let submodule = match &self.submodule {
            None => None,
            Some(g) => {
                let gens = module_elems(&module, &g.generators, "submodule.generators")?;
                Some(module.submodule_generated(&gens))
            }
        };
        Ok(Instance {
            ring,
            module,
            mult_set,
            submodule,
        })
    }
}

fn ring_elems(ring: &FiniteRing, v: &[Vec<u32>], path: &str) -> Result<Vec<Elem>, LoadError> {
    v.iter()
        .enumerate()
        .map(|(i, c)| ring.element(c).map_err(invalid(&format!("{path}[{i}]"))))
        .collect()
}

fn module_elems(m: &FiniteModule, v: &[Vec<u32>], path: &str) -> Result<Vec<Elem>, LoadError> {
    v.iter()
        .enumerate()
        .map(|(i, c)| m.element(c).map_err(invalid(&format!("{path}[{i}]"))))
        .collect()
}

pub fn build_ring(spec: &RingSpec, path: &str, limits: Limits) -> Result<Arc<FiniteRing>, LoadError> {
    match spec {
        RingSpec::Raw(p) => FiniteRing::from_presentation(p.clone(), limits).map_err(invalid(path)),
        RingSpec::Shortcut(RingShortcut::Zn { n }) => {
            if *n == 0 {
                return Err(field(&format!("{path}.n"), "n must be at least 1"));
            }
            FiniteRing::from_presentation(RingPresentation::cyclic(*n), limits).map_err(invalid(path))
        }
        RingSpec::Shortcut(RingShortcut::Product { factors }) => {
            let rings = factors
                .iter()
                .enumerate()
                .map(|(i, f)| build_ring(f, &format!("{path}.factors[{i}]"), limits))
                .collect::<Result<Vec<_>, _>>()?;
            product_ring(&rings).map_err(invalid(path))
        }
        RingSpec::Shortcut(RingShortcut::Idealization { base, module }) => {
            let base_ring = build_ring(base, &format!("{path}.base"), limits)?;
            let m = build_module(&base_ring, module, &format!("{path}.module"), limits)?;
            idealization(&base_ring, &m).map_err(invalid(path))
        }
    }
}

pub fn build_module(
    ring: &Arc<FiniteRing>,
    spec: &ModuleSpec,
    path: &str,
    limits: Limits,
) -> Result<Arc<FiniteModule>, LoadError> {
    match spec {
        ModuleSpec::Raw(p) => {
            FiniteModule::from_presentation(ring, p.clone(), limits).map_err(invalid(path))
        }
        ModuleSpec::Shortcut(ModuleShortcut::Regular) => Ok(FiniteModule::regular(ring)),
        ModuleSpec::Shortcut(ModuleShortcut::Zd { d }) => {
            FiniteModule::cyclic_over(ring, *d).map_err(invalid(path))
        }
        ModuleSpec::Shortcut(ModuleShortcut::Sum { orders }) => {
            FiniteModule::cyclic_sum(ring, orders).map_err(invalid(path))
        }
        ModuleSpec::Shortcut(ModuleShortcut::Product { factors }) => {
            let rings = ring
                .product_factors()
                .ok_or_else(|| field(path, "product modules need a product ring"))?;
            if rings.len() != factors.len() {
                return Err(field(
                    &format!("{path}.factors"),
                    format!("{} factors for a ring with {}", factors.len(), rings.len()),
                ));
            }
            let mods = rings
                .iter()
                .zip(factors)
                .enumerate()
                .map(|(i, (r, f))| build_module(r, f, &format!("{path}.factors[{i}]"), limits))
                .collect::<Result<Vec<_>, _>>()?;
            FiniteModule::product_over(ring, mods).map_err(invalid(path))
        }
        ModuleSpec::Shortcut(ModuleShortcut::Quotient { of, by }) => {
            let parent = build_module(ring, of, &format!("{path}.of"), limits)?;
            let gens = module_elems(&parent, by, &format!("{path}.by"))?;
            let n = parent.submodule_generated(&gens);
            Ok(parent.quotient_module(&n).map_err(invalid(path))?.0)
        }
    }
}

/// Re-exported for callers that build products directly.
pub fn product_of_modules(factors: &[Arc<FiniteModule>]) -> crate::error::Result<Arc<FiniteModule>> {
    product_module(factors)
}

impl Instance {
    /// The same instance with raw presentations in place of shortcuts, when
    /// both carriers have coordinates.
    pub fn to_raw_file(&self) -> Option<InstanceFile> {
        let ring = RingSpec::Raw(self.ring.presentation()?);
        let module = ModuleSpec::Raw(self.module.presentation()?);
        let generators = self
            .mult_set
            .gens()
            .iter()
            .map(|&g| self.ring.coords(g))
            .collect();
        let submodule = self.submodule.as_ref().map(|n| GeneratorList {
            generators: n.gens().iter().map(|&g| self.module.coords(g)).collect(),
        });
        Some(InstanceFile {
            ring,
            module,
            mult_set: GeneratorList { generators },
            submodule,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z4: &str = r#"{"ring": {"kind": "zn", "n": 4}, "module": {"kind": "regular"},
        "mult_set": {"generators": [[3]]}}"#;

    #[test]
    fn loads_shortcuts() {
        let inst = InstanceFile::parse(Z4).unwrap().load(Limits::default()).unwrap();
        assert_eq!(inst.ring.size(), 4);
        assert_eq!(inst.mult_set.elems(), &[1, 3]);
        let text = r#"{"ring": {"kind": "idealization", "base": {"kind": "zn", "n": 4},
            "module": {"kind": "zd", "d": 2}}, "module": {"kind": "regular"},
            "mult_set": {"generators": []}, "submodule": {"generators": [[2, 0], [0, 1]]}}"#;
        let inst = InstanceFile::parse(text).unwrap().load(Limits::default()).unwrap();
        assert_eq!(inst.ring.size(), 8);
        assert_eq!(inst.submodule.unwrap().len(), 4);
    }

    #[test]
    fn diagnostics_name_the_field() {
        let text = r#"{"ring": {"orders": [4], "mul_table": [[[1]]]},
            "module": {"kind": "regular"}, "mult_set": {"generators": []}}"#;
        let err = InstanceFile::parse(text).unwrap_err().to_string();
        assert!(err.contains("ring") && err.contains("one"), "{err}");
        let err = InstanceFile::parse("{\n  \"ring\": [1,\n}").unwrap_err();
        assert!(matches!(err, LoadError::Syntax { line: 3, .. }), "{err}");
        let text = r#"{"ring": {"kind": "product", "factors": [{"kind": "zn", "n": 2}, {"kind": "zq"}]},
            "module": {"kind": "regular"}, "mult_set": {"generators": []}}"#;
        let err = InstanceFile::parse(text).unwrap_err().to_string();
        assert!(err.starts_with("ring.factors[1].kind"), "{err}");
    }

    #[test]
    fn raw_round_trip_is_element_for_element() {
        let texts = [
            Z4.to_string(),
            r#"{"ring": {"kind": "product", "factors": [{"kind": "zn", "n": 2}, {"kind": "zn", "n": 3}]},
                "module": {"kind": "product", "factors": [{"kind": "regular"}, {"kind": "zd", "d": 3}]},
                "mult_set": {"generators": [[1, 2]]}}"#
                .to_string(),
            r#"{"ring": {"kind": "idealization", "base": {"kind": "zn", "n": 2}, "module": {"kind": "regular"}},
                "module": {"kind": "regular"}, "mult_set": {"generators": [[1, 1]]},
                "submodule": {"generators": [[0, 1]]}}"#
                .to_string(),
            r#"{"ring": {"kind": "zn", "n": 6}, "module": {"kind": "sum", "orders": [2, 3]},
                "mult_set": {"generators": [5]}}"#
                .to_string(),
        ];
        for text in texts {
            let a = InstanceFile::parse(&text).unwrap().load(Limits::default()).unwrap();
            let raw = a.to_raw_file().unwrap();
            let b = InstanceFile::parse(&raw.to_json()).unwrap().load(Limits::default()).unwrap();
            assert_eq!(a.ring.size(), b.ring.size());
            for x in a.ring.elements() {
                for y in a.ring.elements() {
                    assert_eq!(a.ring.add(x, y), b.ring.add(x, y));
                    assert_eq!(a.ring.mul(x, y), b.ring.mul(x, y));
                }
                for m in a.module.elements() {
                    assert_eq!(a.module.act(x, m), b.module.act(x, m));
                }
            }
            assert_eq!(a.mult_set.elems(), b.mult_set.elems());
            assert_eq!(
                a.submodule.map(|n| n.elems().to_vec()),
                b.submodule.map(|n| n.elems().to_vec())
            );
        }
    }
}
