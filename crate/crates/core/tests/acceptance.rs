//! One PASS/FAIL line per acceptance criterion, written straight to stderr
//! so it shows up even when the test harness captures output.

mod common;

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use sidem::harness::{
    self, find_check, generate_corpus, mult_set_family, registry, run_suite, search_counterexamples,
    CorpusBounds, Family, SuiteOptions, TheoremCheck,
};
use sidem::localize::localize;
use sidem::props;
use sidem::report::{Outcome, SuiteReport};
use sidem::{Elem, FiniteModule, FiniteRing, Limits};

type Outcome2 = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn criterion(n: u32, what: &str, f: impl FnOnce() -> Outcome2) -> bool {
    let r = std::panic::catch_unwind(std::panic::AssertUnwindSafe(f))
        .unwrap_or_else(|_| Err("panicked".into()));
    let line = match &r {
        Ok(detail) => format!("PASS criterion {n}: {what} — {detail}"),
        Err(why) => format!("FAIL criterion {n}: {what} — {why}"),
    };
    writeln!(std::io::stderr(), "{line}").unwrap();
    r.is_ok()
}

fn full_corpus() -> Vec<harness::InstanceDescriptor> {
    generate_corpus(&Family::ALL, &CorpusBounds::default(), Limits::default())
}

fn c1() -> Outcome2 {
    let t = Instant::now();
    let r = FiniteRing::cyclic(4).unwrap();
    let m = FiniteModule::regular(&r);
    let s = r.mult_closure(&[3]).unwrap();
    ensure(s.elems() == [1, 3], "S = {1,3}")?;
    let mult = props::is_s_multiplication(&m, &s).unwrap();
    let full = props::is_fully_s_idempotent(&m, &s).unwrap();
    let elapsed = t.elapsed();
    ensure(mult.holds, "Z/4 should be S-multiplication")?;
    ensure(!full.holds, "Z/4 should not be fully S-idempotent")?;
    ensure(
        full.counterexample == Some(props::Counterexample::Submodule { elems: vec![0, 2] }),
        format!("counterexample {:?}", full.counterexample),
    )?;
    ensure(elapsed < Duration::from_secs(1), format!("took {elapsed:?}"))?;
    Ok(format!("counterexample 2Z/4 in {elapsed:?}"))
}

fn c2(report: &SuiteReport) -> Outcome2 {
    let (id, [pass, fail, _]) = report
        .per_check()
        .into_iter()
        .find(|(id, _)| id == "example-2.6")
        .ok_or("example-2.6 missing")?;
    ensure(fail == 0, format!("{fail} violations"))?;
    ensure(pass > 0, "never applicable")?;
    // recount applicability independently of the check
    let mut applicable = 0;
    for (i, d) in report.instances.iter().enumerate() {
        if d.degenerate {
            continue;
        }
        let r = sidem::instance::build_ring(&d.ring, "r", Limits::default()).unwrap();
        let m = sidem::instance::build_module(&r, &d.module, "m", Limits::default()).unwrap();
        let gens: Vec<Elem> = d.mult_set.generators.iter().map(|c| r.element(c).unwrap()).collect();
        let s = r.mult_closure(&gens).unwrap();
        let killed = s.elems().iter().any(|&t| m.elements().all(|x| m.act(t, x) == 0));
        if killed {
            applicable += 1;
            let res = report
                .results
                .iter()
                .find(|x| x.instance == i && x.check == id)
                .unwrap();
            ensure(res.outcome == Outcome::Pass, format!("instance {i}"))?;
        }
    }
    ensure(applicable == pass, format!("{applicable} applicable vs {pass} passes"))?;
    Ok(format!("{pass} applicable instances, 0 violations"))
}

fn c3() -> Outcome2 {
    let t = Instant::now();
    for p in [2u32, 3, 5] {
        let text = format!(
            r#"{{"ring": {{"kind": "zn", "n": {p}}}, "module": {{"kind": "sum", "orders": [{p}, {p}]}},
            "mult_set": {{"generators": []}}}}"#
        );
        let inst = sidem::instance::InstanceFile::parse(&text).unwrap().load(Limits::default()).unwrap();
        let (r, m) = (&inst.ring, &inst.module);
        let s = r.unit_mult_set();
        let n = m.submodule_generated(&[m.element(&[1, 0]).unwrap()]);
        ensure(n.len() == p as usize, "N = Z/p x 0")?;
        ensure(!props::is_s_idempotent_submodule(m, &s, &n).unwrap().holds, format!("p={p}: N S-idempotent"))?;
        let h = m.hom_image_sum(&n).unwrap();
        ensure(h == n, format!("p={p}: hom image sum differs from N"))?;
        for &u in s.elems() {
            ensure(n.elems().iter().all(|&x| h.contains(m.act(u, x))), "sN ⊆ H")?;
        }
    }
    let elapsed = t.elapsed();
    ensure(elapsed < Duration::from_secs(5), format!("took {elapsed:?}"))?;
    Ok(format!("p = 2, 3, 5 in {elapsed:?}"))
}

fn c4(report: &SuiteReport, elapsed: Duration) -> Outcome2 {
    let checks = report.per_check();
    ensure(checks.len() >= 16, format!("{} checks", checks.len()))?;
    let s = &report.summary;
    if s.fail > 0 {
        let first = report.failures().next().unwrap();
        return Err(format!("{} failures, first {first:?}", s.fail));
    }
    ensure(checks.iter().all(|(_, [p, _, _])| *p > 0), "a check never passed")?;
    ensure(elapsed < Duration::from_secs(600), format!("took {elapsed:?}"))?;
    let itemized: usize = s.skipped_by_reason.values().flat_map(|m| m.values()).sum();
    ensure(itemized == s.skipped, "skips not itemized")?;
    let mut reasons: Vec<String> = Vec::new();
    for m in s.skipped_by_reason.values() {
        for k in m.keys() {
            if !reasons.contains(k) {
                reasons.push(k.clone());
            }
        }
    }
    Ok(format!(
        "{} checks × {} instances: {} pass, 0 fail, {} skipped ({} distinct reasons) in {elapsed:?}",
        checks.len(),
        report.instances.len(),
        s.pass,
        s.skipped,
        reasons.len()
    ))
}

fn c5() -> Outcome2 {
    let mut instances = 0;
    let small = settings(64);
    for (r, m) in &small {
        for (label, s) in mult_set_family(r).unwrap() {
            let fast = props::is_s_multiplication(m, &s).unwrap().holds;
            let slow = props::is_s_multiplication_by_ideals(m, &s).unwrap().holds;
            ensure(fast == slow, format!("{m:?} {label}"))?;
            instances += 1;
        }
    }
    let mut by_subsets = 0;
    for (_, m) in &small {
        let lib = library_submodules(m);
        if m.size() <= 16 {
            ensure(lib == submodules_by_subsets(m), format!("subsets {m:?}"))?;
            by_subsets += 1;
        }
        ensure(lib == submodules_by_sums(m), format!("sums {m:?}"))?;
    }
    for n in [6, 12] {
        let r = FiniteRing::cyclic(n).unwrap();
        for (label, s) in mult_set_family(&r).unwrap() {
            let sat = r.saturation(&s).unwrap();
            ensure(sat.elems() == saturation_by_definition(&r, &s), format!("Z/{n} {label}"))?;
        }
    }
    Ok(format!(
        "{instances} S-multiplication comparisons, {} lattices ({by_subsets} by subsets), saturation on Z/6, Z/12",
        small.len()
    ))
}

fn c6(report: &SuiteReport) -> Outcome2 {
    let mut count = 0;
    for (r, m) in settings(usize::MAX) {
        for (label, s) in mult_set_family(&r).unwrap() {
            let loc = localize(&r, &s, Some(&m)).unwrap();
            let (e, lr) = (loc.idempotent(), loc.local_ring());
            ensure(r.mul(e, e) == e, "e² = e")?;
            for a in r.elements() {
                for b in r.elements() {
                    ensure(loc.ring_map(r.mul(a, b)) == lr.mul(loc.ring_map(a), loc.ring_map(b)), "mul")?;
                    ensure(loc.ring_map(r.add(a, b)) == lr.add(loc.ring_map(a), loc.ring_map(b)), "add")?;
                }
            }
            let torsion: Vec<Elem> = r
                .elements()
                .filter(|&x| s.elems().iter().any(|&t| r.mul(t, x) == 0))
                .collect();
            ensure(loc.kernel().elems() == torsion, format!("kernel {label}"))?;
            ensure(s.elems().iter().all(|&t| lr.is_unit(loc.ring_map(t))), "S → units")?;
            count += 1;
        }
    }
    let cor: Vec<_> = report.results.iter().filter(|r| r.check == "cor-2.17").collect();
    ensure(cor.iter().all(|r| r.outcome != Outcome::Fail), "cor-2.17 failed")?;
    let passes: Vec<_> = cor.iter().filter(|r| r.outcome == Outcome::Pass).collect();
    ensure(
        passes.iter().all(|r| r.witness.as_ref().is_some_and(|w| w.get("maximal_multiple").is_some())),
        "missing maximal multiple witness",
    )?;
    let non_degenerate = report.instances.iter().filter(|d| !d.degenerate).count();
    ensure(passes.len() == non_degenerate, "cor-2.17 not applied everywhere")?;
    Ok(format!("{count} localizations; cor-2.17 on {} instances with witnesses", passes.len()))
}

fn c7() -> Outcome2 {
    let corpus = generate_corpus(
        &Family::ALL,
        &CorpusBounds { zn_max: 12, product_max: 4, triple_max: 3, idealization_max: 4, sum_max: 6 },
        Limits::default(),
    );
    let checks: Vec<&TheoremCheck> = registry().iter().collect();
    let negated = run_suite(&corpus, &checks, &SuiteOptions { negate: true, ..SuiteOptions::default() });
    for (id, [_, fail, _]) in negated.per_check() {
        ensure(fail > 0, format!("{id} cannot fail"))?;
    }
    let bounds = CorpusBounds { zn_max: 8, sum_max: 5, ..CorpusBounds::default() };
    let opts = SuiteOptions::default();
    for seed in [0u64, 1, 99] {
        let a = search_counterexamples("lemma-2.5-converse", &[Family::Zn], &bounds, seed, &opts).unwrap();
        let b = search_counterexamples("lemma-2.5-converse", &[Family::Zn], &bounds, seed, &opts).unwrap();
        ensure(a.is_some(), "no counterexample found")?;
        ensure(a.map(|x| x.0) == b.map(|x| x.0), format!("seed {seed} not reproducible"))?;
    }
    let found = search_counterexamples("prop-2.9-converse", &[Family::Sums], &bounds, 5, &opts).unwrap();
    ensure(found.is_some(), "prop-2.9 converse not falsified")?;
    find_check("lemma-2.5-converse").map_err(|e| e.to_string())?;
    Ok(format!("{} negated checks all fail; searches reproducible", checks.len()))
}

fn c8() -> Outcome2 {
    let dir = tempfile::TempDir::new().unwrap();
    let run = |name: &str, jobs: &str| {
        let out = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_sidem"))
            .args(["verify", "--all", "--seed", "17", "--jobs", jobs, "--out", out.to_str().unwrap()])
            .stdout(std::process::Stdio::null())
            .status()
            .unwrap();
        (status.code(), std::fs::read(out).unwrap())
    };
    let (c1, a) = run("a.json", "1");
    let (c2, b) = run("b.json", "4");
    ensure(c1 == Some(0) && c2 == Some(0), format!("exit codes {c1:?} {c2:?}"))?;
    ensure(a == b, "reports differ")?;
    Ok(format!("two {}-byte reports identical", a.len()))
}

#[test]
fn acceptance_criteria() {
    let t = Instant::now();
    let checks: Vec<&TheoremCheck> = registry().iter().collect();
    let report = run_suite(&full_corpus(), &checks, &SuiteOptions::default());
    let elapsed = t.elapsed();
    let results = [
        criterion(1, "Z/4 with S = {1,3}", c1),
        criterion(2, "Ann(M) ∩ S ≠ ∅ implies fully S-idempotent", || c2(&report)),
        criterion(3, "Z/p × Z/p over Z/p", c3),
        criterion(4, "full theorem suite on the default corpus", || c4(&report, elapsed)),
        criterion(5, "oracle equivalence", c5),
        criterion(6, "localization invariants and cor-2.17", || c6(&report)),
        criterion(7, "falsifiability and reproducible search", c7),
        criterion(8, "byte-identical reports", c8),
    ];
    assert!(results.iter().all(|&ok| ok), "acceptance criteria failed: {results:?}");
}
