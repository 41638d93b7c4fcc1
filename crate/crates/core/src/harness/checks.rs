//! One function per statement. Each evaluates its hypothesis first and
//! returns `Eval::Skip` when it fails, so vacuous passes never happen.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::{json, Value};

use crate::construct::{
    epi_image, homogeneous_ideal, ideal_as_module, idealization, idealized_mult_set,
    product_mult_set,
};
use crate::error::Result;
use crate::localize::{idempotent_power, localize, Localization};
use crate::module::{FiniteModule, Submodule};
use crate::multset::MultSet;
use crate::props::{self, Counterexample, ModuleProfile, Property, Verdict};
use crate::ring::FiniteRing;
use crate::set::{Elem, ElemSet};

#[derive(Debug, Clone)]
pub(crate) enum Eval {
    Skip(String),
    Done { holds: bool, evidence: Value },
}

fn done(holds: bool, evidence: Value) -> Result<Eval> {
    Ok(Eval::Done { holds, evidence })
}

fn skip(reason: &str) -> Result<Eval> {
    Ok(Eval::Skip(reason.to_string()))
}

/// Everything a check may need about one `(R, M)`, computed at most once
/// and shared by all multiplicative sets of that setting.
pub(crate) struct Ctx {
    pub ring: Arc<FiniteRing>,
    pub module: Arc<FiniteModule>,
    /// The multiplicative sets this setting is crossed with.
    pub family: Vec<MultSet>,
    profile: OnceLock<Result<Arc<ModuleProfile>>>,
    locs: Mutex<HashMap<Elem, Arc<Localization>>>,
    sub_modules: OnceLock<Result<Vec<Arc<FiniteModule>>>>,
    quotients: OnceLock<Result<Vec<Arc<FiniteModule>>>>,
    hom_sums: OnceLock<Result<Vec<Submodule>>>,
    ideal_modules: OnceLock<Result<IdealCtx>>,
    thm_2_8: OnceLock<Result<Eval>>,
}

struct IdealCtx {
    ext: Arc<FiniteRing>,
    /// `0 ∝ N` as an `R ∝ M`-module, per submodule `N` of `M`.
    modules: Vec<Arc<FiniteModule>>,
}

impl Ctx {
    pub fn new(ring: Arc<FiniteRing>, module: Arc<FiniteModule>, family: Vec<MultSet>) -> Ctx {
        Ctx {
            ring,
            module,
            family,
            profile: OnceLock::new(),
            locs: Mutex::new(HashMap::new()),
            sub_modules: OnceLock::new(),
            quotients: OnceLock::new(),
            hom_sums: OnceLock::new(),
            ideal_modules: OnceLock::new(),
            thm_2_8: OnceLock::new(),
        }
    }

    fn profile(&self) -> Result<Arc<ModuleProfile>> {
        self.profile.get_or_init(|| self.module.profile()).clone()
    }

    fn subs(&self) -> Result<Vec<Submodule>> {
        Ok(self.profile()?.submodules().to_vec())
    }

    fn sub_modules(&self) -> Result<&[Arc<FiniteModule>]> {
        let r = self.sub_modules.get_or_init(|| {
            self.subs()?
                .iter()
                .map(|n| Ok(self.module.submodule_as_module(n)?.0))
                .collect()
        });
        r.as_deref().map_err(Clone::clone)
    }

    fn quotients(&self) -> Result<&[Arc<FiniteModule>]> {
        let r = self.quotients.get_or_init(|| {
            self.subs()?
                .iter()
                .map(|n| {
                    let (q, proj) = epi_image(&self.module, n)?;
                    // the epimorphism must be onto with kernel exactly N
                    assert_eq!(proj.kernel(), n.elems(), "epimorphism kernel");
                    Ok(q)
                })
                .collect()
        });
        r.as_deref().map_err(Clone::clone)
    }

    fn hom_sums(&self) -> Result<&[Submodule]> {
        let r = self.hom_sums.get_or_init(|| {
            self.subs()?
                .iter()
                .map(|n| self.module.hom_image_sum(n))
                .collect()
        });
        r.as_deref().map_err(Clone::clone)
    }

    fn ideal_ctx(&self) -> Result<&IdealCtx> {
        let r = self.ideal_modules.get_or_init(|| {
            let ext = idealization(&self.ring, &self.module)?;
            let zero = self.ring.zero_ideal();
            let modules = self
                .subs()?
                .iter()
                .map(|n| Ok(ideal_as_module(&ext, &homogeneous_ideal(&ext, &zero, n)?)?.0))
                .collect::<Result<_>>()?;
            Ok(IdealCtx { ext, modules })
        });
        r.as_ref().map_err(Clone::clone)
    }

    /// The localization at `s`, shared by all sets with the same idempotent.
    fn localization(&self, s: &MultSet) -> Result<Arc<Localization>> {
        let s0 = s.elems().iter().fold(self.ring.one(), |acc, &t| self.ring.mul(acc, t));
        let e = idempotent_power(&self.ring, s0);
        if let Some(l) = self.locs.lock().expect("lock").get(&e) {
            return Ok(l.clone());
        }
        let l = Arc::new(localize(&self.ring, s, Some(&self.module))?);
        Ok(self.locs.lock().expect("lock").entry(e).or_insert(l).clone())
    }

    fn local_module(&self, s: &MultSet) -> Result<(Arc<Localization>, Arc<FiniteModule>)> {
        let l = self.localization(s)?;
        let m = l.local_module().expect("localized with a module").clone();
        Ok((l, m))
    }

    fn best(&self, s: &MultSet) -> Elem {
        self.ring
            .has_maximal_multiple(s)
            .expect("finite multiplicative sets have a maximal multiple")
    }

    // JSON helpers: elements as coordinate vectors.

    fn r(&self, x: Elem) -> Value {
        json!(self.ring.coords(x))
    }

    fn m(&self, x: Elem) -> Value {
        json!(self.module.coords(x))
    }

    fn sub_json(&self, n: &Submodule) -> Value {
        Value::Array(n.gens().iter().map(|&g| self.m(g)).collect())
    }

    fn set_json(&self, s: &MultSet) -> Value {
        Value::Array(s.gens().iter().map(|&g| self.r(g)).collect())
    }
}

/// Counterexamples in coordinates of `m` and its ring.
fn cex_json(m: &FiniteModule, c: &Counterexample) -> Value {
    let ms = |v: &[Elem]| Value::Array(v.iter().map(|&x| json!(m.coords(x))).collect());
    let rs = |v: &[Elem]| Value::Array(v.iter().map(|&x| json!(m.ring().coords(x))).collect());
    match c {
        Counterexample::Submodule { elems } => json!({ "submodule": ms(elems) }),
        Counterexample::Element { x } => json!({ "element": m.coords(*x) }),
        Counterexample::Pair { n, k } => json!({ "pair": [ms(n), ms(k)] }),
        Counterexample::Ideal { ideal } => json!({ "ideal": rs(ideal) }),
        Counterexample::SubmoduleAndIdeal { elems, ideal } => {
            json!({ "submodule": ms(elems), "ideal": rs(ideal) })
        }
    }
}

fn verdict_json(m: &FiniteModule, v: &Verdict) -> Value {
    match &v.counterexample {
        Some(c) => json!({ "holds": false, "counterexample": cex_json(m, c) }),
        None => json!({ "holds": true }),
    }
}

fn fully(m: &FiniteModule, s: &MultSet) -> Result<Verdict> {
    props::is_fully_s_idempotent(m, s)
}

fn not_fully(c: &Ctx, s: &MultSet) -> Result<Option<Eval>> {
    Ok(if fully(&c.module, s)?.holds {
        None
    } else {
        Some(Eval::Skip("M is not fully S-idempotent".into()))
    })
}

fn not_mult(c: &Ctx, s: &MultSet) -> Result<Option<Eval>> {
    Ok(if props::is_s_multiplication(&c.module, s)?.holds {
        None
    } else {
        Some(Eval::Skip("M is not an S-multiplication module".into()))
    })
}

pub(crate) fn example_2_6(c: &Ctx, s: &MultSet) -> Result<Eval> {
    let ann = c.module.annihilator();
    let Some(t) = s.set().first_common(ann.set()) else {
        return skip("Ann(M) ∩ S is empty");
    };
    let v = fully(&c.module, s)?;
    done(v.holds, json!({ "t": c.r(t), "fully_s_idempotent": verdict_json(&c.module, &v) }))
}

pub(crate) fn example_2_6_converse(c: &Ctx, s: &MultSet) -> Result<Eval> {
    if let Some(e) = not_fully(c, s)? {
        return Ok(e);
    }
    let ann = c.module.annihilator();
    let t = s.set().first_common(ann.set());
    done(t.is_some(), json!({ "t": t.map(|t| c.r(t)) }))
}

pub(crate) fn prop_2_3(c: &Ctx, s: &MultSet) -> Result<Eval> {
    let fi = fully(&c.module, &c.ring.trivial_mult_set())?;
    let fs = fully(&c.module, s)?;
    let in_units = c.ring.is_subset_units(s);
    if !fi.holds && !in_units {
        return skip("M is not fully idempotent and S is not inside U(R)");
    }
    let holds = (!fi.holds || fs.holds) && (!in_units || !fs.holds || fi.holds);
    done(
        holds,
        json!({
            "fully_idempotent": verdict_json(&c.module, &fi),
            "fully_s_idempotent": verdict_json(&c.module, &fs),
            "s_in_units": in_units,
        }),
    )
}

pub(crate) fn lemma_2_5(c: &Ctx, s: &MultSet) -> Result<Eval> {
    if let Some(e) = not_fully(c, s)? {
        return Ok(e);
    }
    let v = props::is_s_multiplication(&c.module, s)?;
    done(v.holds, json!({ "s": c.r(c.best(s)), "s_multiplication": verdict_json(&c.module, &v) }))
}

pub(crate) fn lemma_2_5_converse(c: &Ctx, s: &MultSet) -> Result<Eval> {
    if let Some(e) = not_mult(c, s)? {
        return Ok(e);
    }
    let v = fully(&c.module, s)?;
    done(v.holds, json!({ "fully_s_idempotent": verdict_json(&c.module, &v) }))
}

pub(crate) fn prop_2_8a(c: &Ctx, s: &MultSet) -> Result<Eval> {
    if let Some(e) = not_fully(c, s)? {
        return Ok(e);
    }
    let mut supersets = 0;
    for t in c.family.iter().filter(|t| s.is_subset(t)) {
        supersets += 1;
        let v = fully(&c.module, t)?;
        if !v.holds {
            return done(false, json!({ "t": c.set_json(t), "fully_t_idempotent": verdict_json(&c.module, &v) }));
        }
    }
    done(true, json!({ "supersets_checked": supersets }))
}

pub(crate) fn prop_2_8b(c: &Ctx, s: &MultSet) -> Result<Eval> {
    let l = c.localization(s)?;
    let star: Vec<Elem> = c
        .ring
        .elements()
        .filter(|&x| l.local_ring().is_unit(l.ring_map(x)))
        .collect();
    let sat = c.ring.mult_set_from_elements(&star)?;
    if !s.is_subset(&sat) {
        return done(false, json!({ "reason": "S is not inside its saturation" }));
    }
    let a = fully(&c.module, s)?;
    let b = fully(&c.module, &sat)?;
    done(
        a.holds == b.holds,
        json!({
            "saturation_size": sat.len(),
            "fully_s_idempotent": verdict_json(&c.module, &a),
            "fully_s_star_idempotent": verdict_json(&c.module, &b),
        }),
    )
}

pub(crate) fn prop_2_8c(c: &Ctx, s: &MultSet) -> Result<Eval> {
    if let Some(e) = not_fully(c, s)? {
        return Ok(e);
    }
    let subs = c.subs()?;
    for (n, sub) in subs.iter().zip(c.sub_modules()?) {
        let v = fully(sub, s)?;
        if !v.holds {
            return done(false, json!({ "submodule": c.sub_json(n), "as_module": verdict_json(sub, &v) }));
        }
    }
    done(true, json!({ "s": c.r(c.best(s)), "submodules": subs.len() }))
}

pub(crate) fn thm_2_8(c: &Ctx, _s: &MultSet) -> Result<Eval> {
    c.thm_2_8
        .get_or_init(|| {
            let ring = &c.ring;
            let a = fully(&c.module, &ring.trivial_mult_set())?.holds;
            let complement = |p: &crate::ring::Ideal| -> Result<MultSet> {
                let elems: Vec<Elem> = ring.elements().filter(|&x| !p.contains(x)).collect();
                ring.mult_set_from_elements(&elems)
            };
            let mut b = true;
            for p in ring.prime_ideals()?.iter() {
                b &= fully(&c.module, &complement(p)?)?.holds;
            }
            let (mut cc, mut d, mut support) = (true, true, 0);
            let maximal = ring.maximal_ideals()?;
            for m in maximal.iter() {
                let t = ring.complement_of_maximal(m)?;
                let holds = fully(&c.module, &t)?.holds;
                cc &= holds;
                if !c.local_module(&t)?.1.is_zero() {
                    support += 1;
                    d &= holds;
                }
            }
            done(
                a == b && b == cc && cc == d,
                json!({
                    "fully_idempotent": a,
                    "all_primes": b,
                    "all_maximal": cc,
                    "all_maximal_in_support": d,
                    "maximal_ideals": maximal.len(),
                    "support": support,
                }),
            )
        })
        .clone()
}

pub(crate) fn prop_2_9(c: &Ctx, s: &MultSet) -> Result<Eval> {
    let p = c.profile()?;
    let best = c.best(s);
    let sums = c.hom_sums()?;
    let mut count = 0;
    for (i, n) in p.submodules().iter().enumerate() {
        if s.set().first_common(p.idempotent_scalars(i)).is_none() {
            continue;
        }
        count += 1;
        // a witness exists iff the maximal multiple is one
        if n.gens().iter().any(|&x| !sums[i].contains(c.module.act(best, x))) {
            return done(
                false,
                json!({ "submodule": c.sub_json(n), "hom_image_sum": c.sub_json(&sums[i]) }),
            );
        }
    }
    done(true, json!({ "s": c.r(best), "s_idempotent_submodules": count }))
}

pub(crate) fn prop_2_9_converse(c: &Ctx, s: &MultSet) -> Result<Eval> {
    let p = c.profile()?;
    let best = c.best(s);
    let sums = c.hom_sums()?;
    let mut count = 0;
    for (i, n) in p.submodules().iter().enumerate() {
        if n.gens().iter().any(|&x| !sums[i].contains(c.module.act(best, x))) {
            continue;
        }
        count += 1;
        if s.set().first_common(p.idempotent_scalars(i)).is_none() {
            return done(
                false,
                json!({ "submodule": c.sub_json(n), "hom_image_sum": c.sub_json(&sums[i]) }),
            );
        }
    }
    done(true, json!({ "submodules_checked": count }))
}

pub(crate) fn thm_2_11(c: &Ctx, s: &MultSet) -> Result<Eval> {
    let Some(w) = c.ring.has_maximal_multiple(s) else {
        return done(false, json!({ "reason": "no maximal multiple in a finite set" }));
    };
    let m = &c.module;
    let v = [
        fully(m, s)?,
        props::cyclic_submodules_s_idempotent(m, s)?,
        props::elements_s_idempotent(m, s)?,
        props::pairwise_intersections_s_idempotent(m, s)?,
    ];
    let agree = v.iter().all(|x| x.holds == v[0].holds);
    let parts: Vec<Value> = v.iter().map(|x| verdict_json(m, x)).collect();
    done(agree, json!({ "maximal_multiple": c.r(w), "a_b_c_d": parts }))
}

/// Componentwise data when `M = M₁ × … × Mₙ` over `R = R₁ × … × Rₙ` and
/// `S = S₁ × … × Sₙ`; `Err` carries the skip reason.
fn split_setting(c: &Ctx, s: &MultSet) -> Result<std::result::Result<(Vec<Arc<FiniteModule>>, Vec<MultSet>), String>> {
    let (Some(rings), Some(mods)) = (c.ring.product_factors(), c.module.product_factors()) else {
        return Ok(Err("not a product setting".into()));
    };
    if rings.len() != mods.len() || rings.iter().zip(mods).any(|(r, m)| !Arc::ptr_eq(r, m.ring())) {
        return Ok(Err("module factors do not match ring factors".into()));
    }
    let mut parts = Vec::with_capacity(rings.len());
    for (i, r) in rings.iter().enumerate() {
        let proj: Vec<Elem> = s
            .elems()
            .iter()
            .map(|&x| c.ring.split(x).expect("product")[i])
            .collect();
        parts.push(r.mult_set_from_elements(&proj)?);
    }
    let product = product_mult_set(&c.ring, &parts)?;
    if product.set() != s.set() {
        return Ok(Err("S is not a product of multiplicative sets of the factors".into()));
    }
    Ok(Ok((mods.to_vec(), parts)))
}

fn product_equivalence(c: &Ctx, s: &MultSet, arity: Option<usize>) -> Result<Eval> {
    let (mods, sets) = match split_setting(c, s)? {
        Ok(x) => x,
        Err(reason) if arity.is_none() && reason == "not a product setting" => {
            // a single factor: the statement is M ≅ M
            let m = crate::construct::product_module(std::slice::from_ref(&c.module))?;
            let a = fully(&c.module, s)?;
            let b = fully(&m, s)?;
            return done(a.holds == b.holds, json!({ "factors": 1, "fully": a.holds }));
        }
        Err(reason) => return skip(&reason),
    };
    if arity.is_some_and(|n| n != mods.len()) {
        return skip("number of factors differs");
    }
    let whole = fully(&c.module, s)?;
    let parts: Vec<Verdict> = mods.iter().zip(&sets).map(|(m, t)| fully(m, t)).collect::<Result<_>>()?;
    let all = parts.iter().all(|v| v.holds);
    done(
        whole.holds == all,
        json!({
            "factors": mods.len(),
            "fully": verdict_json(&c.module, &whole),
            "factor_verdicts": parts.iter().zip(&mods).map(|(v, m)| verdict_json(m, v)).collect::<Vec<_>>(),
        }),
    )
}

pub(crate) fn thm_2_12(c: &Ctx, s: &MultSet) -> Result<Eval> {
    product_equivalence(c, s, Some(2))
}

pub(crate) fn thm_2_13(c: &Ctx, s: &MultSet) -> Result<Eval> {
    product_equivalence(c, s, None)
}

pub(crate) fn thm_2_14(c: &Ctx, s: &MultSet) -> Result<Eval> {
    let ictx = c.ideal_ctx()?;
    let subs = c.subs()?;
    let zero = c.module.zero_submodule();
    let s0 = idealized_mult_set(&ictx.ext, s, &zero)?;
    let sm = idealized_mult_set(&ictx.ext, s, &c.module.whole())?;
    for ((n, sub), im) in subs.iter().zip(c.sub_modules()?).zip(&ictx.modules) {
        let a = fully(sub, s)?.holds;
        let b = fully(im, &s0)?.holds;
        let cc = fully(im, &sm)?.holds;
        if a != b || b != cc {
            return done(false, json!({ "submodule": c.sub_json(n), "a": a, "b": b, "c": cc }));
        }
    }
    done(true, json!({ "submodules": subs.len(), "extension_size": ictx.ext.size() }))
}

fn kills(c: &Ctx, s: &MultSet, n: &Submodule) -> Option<Elem> {
    let zero = ElemSet::from_iter_in(c.module.size(), [0]);
    s.set().first_common(&c.module.scalars_into(n.gens(), &zero))
}

pub(crate) fn prop_2_15(c: &Ctx, s: &MultSet) -> Result<Eval> {
    if let Some(e) = not_fully(c, s)? {
        return Ok(e);
    }
    let subs = c.subs()?;
    for (n, q) in subs.iter().zip(c.quotients()?) {
        let v = fully(q, s)?;
        if !v.holds {
            return done(false, json!({ "kernel": c.sub_json(n), "image": verdict_json(q, &v) }));
        }
    }
    done(true, json!({ "s": c.r(c.best(s)), "images": subs.len() }))
}

pub(crate) fn prop_2_15_converse(c: &Ctx, s: &MultSet) -> Result<Eval> {
    let subs = c.subs()?;
    for (n, q) in subs.iter().zip(c.quotients()?) {
        let Some(t) = kills(c, s, n) else { continue };
        if !fully(q, s)?.holds {
            continue;
        }
        let v = fully(&c.module, s)?;
        return done(
            v.holds,
            json!({ "kernel": c.sub_json(n), "t": c.r(t), "fully_s_idempotent": verdict_json(&c.module, &v) }),
        );
    }
    skip("no kernel killed by S with a fully S-idempotent image")
}

pub(crate) fn cor_2_15(c: &Ctx, s: &MultSet) -> Result<Eval> {
    let fs = fully(&c.module, s)?.holds;
    let subs = c.subs()?;
    let mut applicable = fs;
    for (n, q) in subs.iter().zip(c.quotients()?) {
        let fq = fully(q, s)?.holds;
        if fs && !fq {
            return done(false, json!({ "submodule": c.sub_json(n), "direction": "M to M/N" }));
        }
        if let (Some(t), true) = (kills(c, s, n), fq) {
            applicable = true;
            if !fs {
                return done(
                    false,
                    json!({ "submodule": c.sub_json(n), "t": c.r(t), "direction": "M/N to M" }),
                );
            }
        }
    }
    if !applicable {
        return skip("M is not fully S-idempotent and no quotient qualifies");
    }
    done(true, json!({ "fully_s_idempotent": fs, "quotients": subs.len() }))
}

pub(crate) fn prop_2_16(c: &Ctx, s: &MultSet) -> Result<Eval> {
    if let Some(e) = not_fully(c, s)? {
        return Ok(e);
    }
    // T⁻¹M, S̃ and T* depend on T only through its idempotent
    let mut by_idem: BTreeMap<Elem, &MultSet> = BTreeMap::new();
    for t in &c.family {
        let (l, _) = c.local_module(t)?;
        by_idem.entry(l.idempotent()).or_insert(t);
    }
    let mut units_case = 0;
    for t in by_idem.values() {
        let (l, lm) = c.local_module(t)?;
        let st = l.localized_mult_set(s)?;
        let v = fully(&lm, &st)?;
        if !v.holds {
            return done(false, json!({ "t": c.set_json(t), "fully_s_tilde": verdict_json(&lm, &v) }));
        }
        let in_star = s.elems().iter().all(|&x| l.local_ring().is_unit(l.ring_map(x)));
        if in_star {
            units_case += 1;
            let v = fully(&lm, &l.local_ring().trivial_mult_set())?;
            if !v.holds {
                return done(false, json!({ "t": c.set_json(t), "s_in_t_star": true, "fully_idempotent": verdict_json(&lm, &v) }));
            }
        }
    }
    let (l, lm) = c.local_module(s)?;
    let v = fully(&lm, &l.local_ring().trivial_mult_set())?;
    done(
        v.holds,
        json!({
            "localizations": by_idem.len(),
            "s_in_t_star": units_case,
            "s_inverse_m": verdict_json(&lm, &v),
        }),
    )
}

pub(crate) fn cor_2_17(c: &Ctx, s: &MultSet) -> Result<Eval> {
    let w = c.best(s);
    let a = fully(&c.module, s)?;
    let (l, lm) = c.local_module(s)?;
    let b = fully(&lm, &l.local_ring().trivial_mult_set())?;
    done(
        a.holds == b.holds,
        json!({
            "maximal_multiple": c.r(w),
            "idempotent": c.r(l.idempotent()),
            "fully_s_idempotent": a.holds,
            "localization_fully_idempotent": b.holds,
        }),
    )
}

pub(crate) fn thm_2_18(c: &Ctx, s: &MultSet) -> Result<Eval> {
    if let Some(e) = not_mult(c, s)? {
        return Ok(e);
    }
    let m = &c.module;
    let subs = c.subs()?;
    let mut pure = 0;
    for (n, sub) in subs.iter().zip(c.sub_modules()?) {
        let a = props::is_s_pure_submodule(m, s, n)?.holds;
        let nm = props::is_s_multiplication(sub, s)?.holds;
        let b = nm && props::is_s_idempotent_submodule(m, s, n)?.holds;
        let cc = nm && props::colon_absorbs_submodules(m, s, n)?.holds;
        let d = nm && props::relative_colons_absorbed(m, s, n)?.holds;
        if !(a == b && b == cc && cc == d) {
            return done(
                false,
                json!({ "submodule": c.sub_json(n), "a": a, "b": b, "c": cc, "d": d, "n_s_multiplication": nm }),
            );
        }
        pure += a as usize;
    }
    done(true, json!({ "submodules": subs.len(), "s_pure": pure }))
}

pub(crate) fn prop_2_19(c: &Ctx, s: &MultSet) -> Result<Eval> {
    if let Some(e) = not_mult(c, s)? {
        return Ok(e);
    }
    let m = &c.module;
    let subs = c.subs()?;
    let mut copure = 0;
    for n in &subs {
        if !props::is_s_copure_submodule(m, s, n)?.holds {
            continue;
        }
        copure += 1;
        if !props::is_s_idempotent_submodule(m, s, n)?.holds {
            return done(false, json!({ "submodule": c.sub_json(n) }));
        }
    }
    done(true, json!({ "submodules": subs.len(), "s_copure": copure }))
}

pub(crate) fn cor_2_20(c: &Ctx, s: &MultSet) -> Result<Eval> {
    let m = &c.module;
    let fs = fully(m, s)?;
    let fp = props::is_fully(Property::SPure, m, s)?;
    let sm = props::is_s_multiplication(m, s)?.holds;
    if !fs.holds && !(sm && fp.holds) {
        return skip("M is neither fully S-idempotent nor S-multiplication and fully S-pure");
    }
    let a = !fs.holds || fp.holds;
    let b = !(sm && fp.holds) || fs.holds;
    done(
        a && b,
        json!({
            "fully_s_idempotent": verdict_json(m, &fs),
            "fully_s_pure": verdict_json(m, &fp),
            "s_multiplication": sm,
        }),
    )
}
