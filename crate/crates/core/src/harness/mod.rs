//! Executable hypothesis → conclusion checks, corpora to run them on, and a
//! seeded counterexample search.
//!
//! A check fails only when its hypothesis holds and its conclusion does not;
//! instances where the hypothesis fails are reported as skipped.

mod checks;
pub mod corpus;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::instance::{build_module, build_ring};
use crate::limits::Limits;
use crate::multset::MultSet;
use crate::report::{CheckResult, Outcome, SuiteReport};
use checks::{Ctx, Eval};

pub use corpus::{
    generate_corpus, mult_set_family, parse_families, CorpusBounds, Family, InstanceDescriptor,
    Provenance,
};

type CheckFn = fn(&Ctx, &MultSet) -> Result<Eval>;

pub struct TheoremCheck {
    pub id: &'static str,
    pub hypothesis: &'static str,
    pub conclusion: &'static str,
    run: CheckFn,
}

impl std::fmt::Debug for TheoremCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TheoremCheck").field("id", &self.id).finish()
    }
}

macro_rules! check {
    ($id:literal, $f:path, $hyp:literal, $concl:literal) => {
        TheoremCheck {
            id: $id,
            hypothesis: $hyp,
            conclusion: $concl,
            run: $f,
        }
    };
}

static REGISTRY: &[TheoremCheck] = &[
    check!("example-2.6", checks::example_2_6, "Ann(M) ∩ S ≠ ∅", "M is fully S-idempotent"),
    check!("prop-2.3", checks::prop_2_3, "M fully idempotent, or S ⊆ U(R)",
        "fully idempotent ⇒ fully S-idempotent; for S ⊆ U(R) the two agree"),
    check!("lemma-2.5", checks::lemma_2_5, "M fully S-idempotent", "M is S-multiplication"),
    check!("prop-2.8a", checks::prop_2_8a, "M fully S-idempotent",
        "M is fully T-idempotent for every family member T ⊇ S"),
    check!("prop-2.8b", checks::prop_2_8b, "none", "fully S-idempotent ⇔ fully S*-idempotent"),
    check!("prop-2.8c", checks::prop_2_8c, "M fully S-idempotent",
        "every submodule, as a module, is fully S-idempotent"),
    check!("thm-2.8", checks::thm_2_8, "none",
        "fully idempotent ⇔ fully (R∖p)-idempotent ∀ primes ⇔ ∀ maximal ⇔ ∀ maximal with M_m ≠ 0"),
    check!("prop-2.9", checks::prop_2_9, "N S-idempotent", "sN ⊆ Σ_{f ∈ Hom(M,N)} f(N) for some s ∈ S"),
    check!("thm-2.11", checks::thm_2_11, "S has a maximal multiple (always, S finite)",
        "fully S-idempotent ⇔ cyclic submodules ⇔ elements ⇔ pairwise intersections"),
    check!("thm-2.12", checks::thm_2_12, "M = M₁×M₂ over R₁×R₂, S = S₁×S₂",
        "M fully S-idempotent ⇔ each Mᵢ fully Sᵢ-idempotent"),
    check!("thm-2.13", checks::thm_2_13, "M = ∏Mᵢ over ∏Rᵢ, S = ∏Sᵢ (n = 1, 2, 3)",
        "M fully S-idempotent ⇔ each Mᵢ fully Sᵢ-idempotent"),
    check!("thm-2.14", checks::thm_2_14, "N ≤ M, R ∝ M within caps",
        "N fully S-idempotent ⇔ 0∝N fully S∝0-idempotent ⇔ 0∝N fully S∝M-idempotent"),
    check!("prop-2.15", checks::prop_2_15, "M fully S-idempotent",
        "every epimorphic image M/N is fully S-idempotent"),
    check!("prop-2.15-converse", checks::prop_2_15_converse, "tN = 0 for some t ∈ S and M/N fully S-idempotent",
        "M is fully S-idempotent"),
    check!("cor-2.15", checks::cor_2_15, "M fully S-idempotent, or some N with tN = 0 and M/N fully S-idempotent",
        "both directions between M and M/N"),
    check!("prop-2.16", checks::prop_2_16, "M fully S-idempotent",
        "T⁻¹M fully S̃-idempotent ∀T; fully idempotent when S ⊆ T*; S⁻¹M fully idempotent"),
    check!("cor-2.17", checks::cor_2_17, "S has a maximal multiple (always, S finite)",
        "M fully S-idempotent ⇔ S⁻¹M fully idempotent"),
    check!("thm-2.18", checks::thm_2_18, "M S-multiplication",
        "for each N: S-pure ⇔ (b) ⇔ (c) ⇔ (d)"),
    check!("prop-2.19", checks::prop_2_19, "M S-multiplication, N S-copure", "N is S-idempotent"),
    check!("cor-2.20", checks::cor_2_20, "M fully S-idempotent, or S-multiplication and fully S-pure",
        "fully S-idempotent ⇒ fully S-pure; S-multiplication ∧ fully S-pure ⇒ fully S-idempotent"),
];

/// Converses that do not hold in general; used to exercise the search.
static CONVERSES: &[TheoremCheck] = &[
    check!("lemma-2.5-converse", checks::lemma_2_5_converse, "M S-multiplication", "M fully S-idempotent"),
    check!("prop-2.9-converse", checks::prop_2_9_converse, "sN ⊆ Σ f(N) for some s ∈ S", "N S-idempotent"),
    check!("example-2.6-converse", checks::example_2_6_converse, "M fully S-idempotent", "Ann(M) ∩ S ≠ ∅"),
];

/// The statements checked by a full verification run.
pub fn registry() -> &'static [TheoremCheck] {
    REGISTRY
}

pub fn converses() -> &'static [TheoremCheck] {
    CONVERSES
}

pub fn find_check(id: &str) -> Result<&'static TheoremCheck> {
    REGISTRY
        .iter()
        .chain(CONVERSES)
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteOptions {
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    pub seed: u64,
    /// Self-test mode: every conclusion is negated.
    pub negate: bool,
    pub limits: Limits,
}

fn result(check: &TheoremCheck, instance: usize, outcome: Outcome) -> CheckResult {
    CheckResult {
        check: check.id.to_string(),
        instance,
        outcome,
        witness: None,
        counterexample: None,
        reason: None,
    }
}

fn evaluate(check: &TheoremCheck, ctx: &Ctx, s: &MultSet, instance: usize, negate: bool) -> CheckResult {
    if s.is_degenerate() {
        let mut r = result(check, instance, Outcome::Skipped);
        r.reason = Some("degenerate S (0 ∈ S)".into());
        return r;
    }
    match (check.run)(ctx, s) {
        Ok(Eval::Skip(reason)) => {
            let mut r = result(check, instance, Outcome::Skipped);
            r.reason = Some(reason);
            r
        }
        Ok(Eval::Done { holds, evidence }) => {
            if holds != negate {
                let mut r = result(check, instance, Outcome::Pass);
                r.witness = Some(evidence);
                r
            } else {
                let mut r = result(check, instance, Outcome::Fail);
                r.counterexample = Some(evidence);
                if negate {
                    r.reason = Some("negated conclusion (self-test)".into());
                }
                r
            }
        }
        Err(e @ Error::SizeExceeded { .. }) => {
            let mut r = result(check, instance, Outcome::Skipped);
            r.reason = Some(format!("size cap: {e}"));
            r
        }
        Err(e) => {
            let mut r = result(check, instance, Outcome::Fail);
            r.reason = Some(format!("error: {e}"));
            r
        }
    }
}

/// Runs every check on a run of descriptors sharing one `(R, M)`.
fn run_group(
    items: &[(usize, &InstanceDescriptor)],
    checks: &[&TheoremCheck],
    opts: &SuiteOptions,
) -> Vec<CheckResult> {
    let first = items[0].1;
    let built = (|| -> Result<(Ctx, Vec<MultSet>)> {
        let load = |e: crate::instance::LoadError| Error::InvalidPresentation(e.to_string());
        let ring = build_ring(&first.ring, "ring", opts.limits).map_err(load)?;
        let module = build_module(&ring, &first.module, "module", opts.limits).map_err(load)?;
        let sets = items
            .iter()
            .map(|(_, d)| {
                let gens = d
                    .mult_set
                    .generators
                    .iter()
                    .map(|c| ring.element(c))
                    .collect::<Result<Vec<_>>>()?;
                ring.mult_closure(&gens)
            })
            .collect::<Result<Vec<_>>>()?;
        let family = mult_set_family(&ring)?.into_iter().map(|(_, s)| s).collect();
        Ok((Ctx::new(ring, module, family), sets))
    })();
    let mut out = Vec::with_capacity(items.len() * checks.len());
    match built {
        Ok((ctx, sets)) => {
            for ((index, _), s) in items.iter().zip(&sets) {
                for check in checks {
                    out.push(evaluate(check, &ctx, s, *index, opts.negate));
                }
            }
        }
        Err(e) => {
            let (outcome, reason) = match e {
                Error::SizeExceeded { .. } => (Outcome::Skipped, format!("size cap: {e}")),
                _ => (Outcome::Fail, format!("error: {e}")),
            };
            for (index, _) in items {
                for check in checks {
                    let mut r = result(check, *index, outcome);
                    r.reason = Some(reason.clone());
                    out.push(r);
                }
            }
        }
    }
    out
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

/// Every check on every instance. Results come out in (instance, check)
/// order whatever the parallelism.
pub fn run_suite(
    corpus: &[InstanceDescriptor],
    checks: &[&TheoremCheck],
    opts: &SuiteOptions,
) -> SuiteReport {
    // consecutive descriptors over the same (R, M) share one context
    let mut groups: Vec<Vec<(usize, &InstanceDescriptor)>> = Vec::new();
    for (i, d) in corpus.iter().enumerate() {
        match groups.last_mut() {
            Some(g) if g[0].1.ring == d.ring && g[0].1.module == d.module => g.push((i, d)),
            _ => groups.push(vec![(i, d)]),
        }
    }
    let results: Vec<CheckResult> = with_pool(opts.jobs, || {
        groups
            .par_iter()
            .map(|g| run_group(g, checks, opts))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    });
    SuiteReport::new(opts.seed, corpus.to_vec(), results)
}

/// One check on one instance.
pub fn verify_theorem(id: &str, inst: &InstanceDescriptor, limits: Limits) -> Result<CheckResult> {
    let check = find_check(id)?;
    let opts = SuiteOptions {
        limits,
        ..SuiteOptions::default()
    };
    Ok(run_group(&[(0, inst)], &[check], &opts).remove(0))
}

/// Tries the instances of `families` within `bounds` in an order shuffled by
/// `seed` and returns the first one on which the check fails.
pub fn search_counterexamples(
    id: &str,
    families: &[Family],
    bounds: &CorpusBounds,
    seed: u64,
    opts: &SuiteOptions,
) -> Result<Option<(InstanceDescriptor, CheckResult)>> {
    let check = find_check(id)?;
    let mut corpus = generate_corpus(families, bounds, opts.limits);
    corpus.retain(|d| !d.degenerate);
    corpus.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let found = with_pool(opts.jobs, || {
        corpus.par_iter().find_map_first(|d| {
            let r = run_group(&[(0, d)], &[check], opts).remove(0);
            (r.outcome == Outcome::Fail).then(|| (d.clone(), r))
        })
    });
    Ok(found)
}

#[cfg(test)]
mod tests;
