use super::*;
use crate::instance::{GeneratorList, ModuleShortcut, ModuleSpec, RingShortcut, RingSpec};

fn bounds(zn_max: u32) -> CorpusBounds {
    CorpusBounds {
        zn_max,
        product_max: 3,
        triple_max: 2,
        idealization_max: 2,
        sum_max: 4,
    }
}

fn zn_instance(n: u32, s: &[u32]) -> InstanceDescriptor {
    InstanceDescriptor {
        ring: RingSpec::Shortcut(RingShortcut::Zn { n }),
        module: ModuleSpec::Shortcut(ModuleShortcut::Regular),
        mult_set: GeneratorList {
            generators: s.iter().map(|&x| vec![x]).collect(),
        },
        provenance: Provenance {
            family: "test".into(),
            params: format!("n={n}"),
            mult_set: format!("{s:?}"),
        },
        degenerate: false,
    }
}

#[test]
fn corpus_counts() {
    let c = generate_corpus(&[Family::Zn], &bounds(4), Limits::default());
    // |R| + #maximal + 2 per ring: 5 + 6 + 7
    assert_eq!(c.len(), 18);
    assert!(generate_corpus(&[], &bounds(4), Limits::default()).is_empty());
    let ideal = generate_corpus(&[Family::Idealizations], &bounds(4), Limits::default());
    assert!(ideal.iter().any(|d| d.provenance.params == "n=2,d=2"));
    let degenerate = c.iter().filter(|d| d.degenerate).count();
    // closure(0) in each ring, plus closure(2) in Z/4
    assert_eq!(degenerate, 4);
}

#[test]
fn spec_examples() {
    let pass = |id: &str, d: &InstanceDescriptor| {
        let r = verify_theorem(id, d, Limits::default()).unwrap();
        assert_eq!(r.outcome, Outcome::Pass, "{id}: {r:?}");
    };
    pass("lemma-2.5", &zn_instance(6, &[]));
    pass("thm-2.18", &zn_instance(4, &[3]));
    pass("thm-2.14", &zn_instance(2, &[]));
    let r = verify_theorem("lemma-2.5", &zn_instance(4, &[3]), Limits::default()).unwrap();
    assert_eq!(r.outcome, Outcome::Skipped);
    assert!(matches!(
        verify_theorem("no-such-check", &zn_instance(4, &[]), Limits::default()),
        Err(Error::UnknownCheck(_))
    ));
}

#[test]
fn small_suite_passes_and_self_test_fails() {
    let families = Family::ALL;
    let corpus = generate_corpus(&families, &bounds(6), Limits::default());
    let checks: Vec<&TheoremCheck> = registry().iter().collect();
    let report = run_suite(&corpus, &checks, &SuiteOptions::default());
    let fails: Vec<_> = report.failures().take(5).collect();
    assert!(fails.is_empty(), "{fails:#?}");
    let negated = run_suite(
        &corpus,
        &checks,
        &SuiteOptions {
            negate: true,
            ..SuiteOptions::default()
        },
    );
    for (id, [_, fail, _]) in negated.per_check() {
        assert!(fail > 0, "{id} never failed when negated");
    }
    assert_eq!(report.per_check().len(), checks.len());
}

#[test]
fn empty_corpus() {
    let report = run_suite(&[], &[&registry()[0]], &SuiteOptions::default());
    assert!(report.results.is_empty() && report.passed());
}

#[test]
fn search_finds_known_counterexamples() {
    let opts = SuiteOptions::default();
    let (d, _) = search_counterexamples("lemma-2.5-converse", &[Family::Zn], &bounds(4), 7, &opts)
        .unwrap()
        .expect("Z/4 is S-multiplication but not fully S-idempotent");
    assert_eq!(d.ring, RingSpec::Shortcut(RingShortcut::Zn { n: 4 }));
    for seed in [1, 2, 3] {
        let a = search_counterexamples("lemma-2.5-converse", &[Family::Zn], &bounds(8), seed, &opts).unwrap();
        let b = search_counterexamples("lemma-2.5-converse", &[Family::Zn], &bounds(8), seed, &opts).unwrap();
        assert_eq!(a.map(|x| x.0), b.map(|x| x.0));
    }
    let primes = CorpusBounds { sum_max: 3, ..bounds(4) };
    let (d, _) = search_counterexamples("prop-2.9-converse", &[Family::Sums], &primes, 0, &opts)
        .unwrap()
        .expect("Z/p ⊕ Z/p");
    let ModuleSpec::Shortcut(ModuleShortcut::Sum { orders }) = &d.module else {
        panic!("{d:?}")
    };
    assert_eq!(orders[0], orders[1]);
    assert!(search_counterexamples("lemma-2.5", &[Family::Zn], &bounds(8), 0, &opts)
        .unwrap()
        .is_none());
}
