//! Library results against brute-force oracles written only in terms of
//! element arithmetic.

mod common;

use std::collections::BTreeSet;

use common::*;
use sidem::harness::mult_set_family;
use sidem::localize::localize;
use sidem::props;
use sidem::{Elem, FiniteModule, FiniteRing};

#[test]
fn submodules_match_subset_enumeration() {
    for (_, m) in settings(16) {
        assert_eq!(library_submodules(&m), submodules_by_subsets(&m), "{m:?}");
    }
}

#[test]
fn submodules_match_sum_closure_up_to_64() {
    for (_, m) in settings(64) {
        let lib = library_submodules(&m);
        assert_eq!(lib, submodules_by_sums(&m), "{m:?}");
        for n in &lib {
            assert!(is_submodule(&m, &n.iter().copied().collect()));
        }
    }
}

/// Ideals as the closures of single elements and all their sums.
#[test]
fn ideals_match_principal_sums() {
    for n in 2..=30 {
        let r = FiniteRing::cyclic(n).unwrap();
        let reg = FiniteModule::regular(&r);
        let expected = submodules_by_sums(&reg);
        let got: BTreeSet<Vec<Elem>> = r.ideals().unwrap().iter().map(|i| i.elems().to_vec()).collect();
        assert_eq!(got, expected, "Z/{n}");
        // for Z/n these are exactly the divisors of n
        assert_eq!(got.len(), (1..=n).filter(|d| n % d == 0).count());
    }
}

#[test]
fn fast_s_multiplication_matches_ideal_search() {
    let mut compared = 0;
    for (r, m) in settings(64) {
        for (_, s) in mult_set_family(&r).unwrap() {
            let fast = props::is_s_multiplication(&m, &s).unwrap();
            let slow = props::is_s_multiplication_by_ideals(&m, &s).unwrap();
            assert_eq!(fast.holds, slow.holds, "{m:?}");
            compared += 1;
        }
    }
    assert!(compared > 1000);
}

#[test]
fn saturation_matches_definition() {
    for n in [6, 12] {
        let r = FiniteRing::cyclic(n).unwrap();
        for (label, s) in mult_set_family(&r).unwrap() {
            let sat = r.saturation(&s).unwrap();
            assert_eq!(sat.elems(), saturation_by_definition(&r, &s), "Z/{n} {label}");
        }
    }
}

#[test]
fn localization_invariants_corpus_wide() {
    for (r, m) in settings(usize::MAX) {
        for (label, s) in mult_set_family(&r).unwrap() {
            let loc = localize(&r, &s, Some(&m)).unwrap();
            let e = loc.idempotent();
            assert_eq!(r.mul(e, e), e);
            let lr = loc.local_ring();
            let f = |x| loc.ring_map(x);
            assert_eq!(f(r.one()), lr.one());
            for a in r.elements() {
                for b in r.elements() {
                    assert_eq!(f(r.add(a, b)), lr.add(f(a), f(b)));
                    assert_eq!(f(r.mul(a, b)), lr.mul(f(a), f(b)));
                }
            }
            let torsion: Vec<Elem> = r
                .elements()
                .filter(|&x| s.elems().iter().any(|&t| r.mul(t, x) == 0))
                .collect();
            assert_eq!(loc.kernel().elems(), torsion, "{label}");
            assert!(s.elems().iter().all(|&t| lr.is_unit(f(t))));
            let lm = loc.local_module().unwrap();
            let g = |x| loc.module_map(x).unwrap();
            for x in m.elements() {
                for a in r.elements() {
                    assert_eq!(g(m.act(a, x)), lm.act(f(a), g(x)));
                }
            }
            let module_torsion: Vec<Elem> = m
                .elements()
                .filter(|&x| s.elems().iter().any(|&t| m.act(t, x) == 0))
                .collect();
            assert_eq!(loc.module_kernel().unwrap().elems(), module_torsion);
        }
    }
}
