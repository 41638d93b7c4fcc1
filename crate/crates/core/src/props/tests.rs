use std::sync::Arc;

use super::*;
use crate::construct::product_module;
use crate::module::ModulePresentation;
use crate::ring::FiniteRing;
use crate::limits::Limits;

fn z(n: u32) -> Arc<FiniteRing> {
    FiniteRing::cyclic(n).unwrap()
}

fn plane(p: u32) -> Arc<FiniteModule> {
    let r = z(p);
    let pres = ModulePresentation {
        additive_orders: vec![p, p],
        action_table: vec![vec![vec![1, 0], vec![0, 1]]],
    };
    FiniteModule::from_presentation(&r, pres, Limits::default()).unwrap()
}

/// Definition-chasing oracle for "N is S-idempotent", computed from element
/// sets only: `(N:M)` by testing every `r`, `(N:M)²` as the additive span of
/// pairwise products, `(N:M)²M` as the additive span of `a·m`.
fn oracle_s_idempotent(m: &FiniteModule, s: &[u32], n: &[u32]) -> bool {
    let ring = m.ring();
    let colon: Vec<u32> = ring
        .elements()
        .filter(|&r| m.elements().all(|x| n.contains(&m.act(r, x))))
        .collect();
    let sq = crate::lattice::additive_closure(
        &**ring,
        colon.iter().flat_map(|&a| colon.iter().map(move |&b| (a, b))).map(|(a, b)| ring.mul(a, b)),
    );
    let q = crate::lattice::additive_closure(
        m,
        sq.iter().flat_map(|a| m.elements().map(move |x| (a, x))).map(|(a, x)| m.act(a, x)),
    );
    s.iter().any(|&sv| n.iter().all(|&x| q.contains(m.act(sv, x))))
}

#[test]
fn z4_units_example() {
    let r = z(4);
    let m = FiniteModule::regular(&r);
    let s = r.mult_closure(&[3]).unwrap();
    let two = m.submodule_generated(&[2]);
    assert!(!is_s_idempotent_element(&m, &s, 2).unwrap().holds);
    assert!(!is_s_idempotent_submodule(&m, &s, &two).unwrap().holds);
    let full = is_fully_s_idempotent(&m, &s).unwrap();
    assert!(!full.holds);
    assert_eq!(full.counterexample, Some(Counterexample::Submodule { elems: vec![0, 2] }));
    assert!(is_s_multiplication(&m, &s).unwrap().holds);
    assert!(!is_s_pure_submodule(&m, &s, &two).unwrap().holds);
    assert_eq!(
        is_s_copure_submodule(&m, &s, &two).unwrap().counterexample,
        Some(Counterexample::Ideal { ideal: vec![0, 2] })
    );
}

#[test]
fn trivial_submodules_pass() {
    let r = z(12);
    let m = FiniteModule::regular(&r);
    let s = r.mult_closure(&[5]).unwrap();
    for n in [m.whole(), m.zero_submodule()] {
        let v = is_s_idempotent_submodule(&m, &s, &n).unwrap();
        assert_eq!(v.witness, Some(Witness::Scalar { s: 1 }));
        assert!(is_s_pure_submodule(&m, &s, &n).unwrap().holds);
        assert!(is_s_copure_submodule(&m, &s, &n).unwrap().holds);
    }
    let e = is_s_idempotent_element(&m, &s, 0).unwrap();
    assert_eq!(e.witness, Some(Witness::ScalarAndMultiplier { s: 1, a: 0 }));
}

#[test]
fn z6_examples() {
    let r = z(6);
    let m = FiniteModule::regular(&r);
    let one = r.trivial_mult_set();
    let e = is_s_idempotent_element(&m, &one, 2).unwrap();
    assert_eq!(e.witness, Some(Witness::ScalarAndMultiplier { s: 1, a: 4 }));
    assert!(is_fully_idempotent(&m).unwrap().holds);
    let two = m.submodule_generated(&[2]);
    assert!(is_pure_submodule(&m, &two).unwrap().holds);
    assert!(is_copure_submodule(&m, &two).unwrap().holds);
    assert!(is_fully(Property::SPure, &m, &one).unwrap().holds);
}

#[test]
fn annihilator_meeting_s_forces_fully_idempotent() {
    let r = z(12);
    let m = FiniteModule::cyclic_over(&r, 3).unwrap();
    let s = r.mult_closure(&[3]).unwrap();
    assert!(is_fully_s_idempotent(&m, &s).unwrap().holds);
}

#[test]
fn plane_is_not_multiplication() {
    let v = plane(2);
    let one = v.ring().trivial_mult_set();
    let fast = is_s_multiplication(&v, &one).unwrap();
    assert!(!fast.holds);
    let diag = v.element(&[1, 1]).unwrap();
    assert!(matches!(fast.counterexample, Some(Counterexample::Submodule { .. })));
    assert_eq!(is_s_multiplication_by_ideals(&v, &one).unwrap().holds, false);
    let n = v.submodule_generated(&[diag]);
    assert!(!is_s_idempotent_submodule(&v, &one, &n).unwrap().holds);
    let zero = FiniteModule::cyclic_over(&z(6), 1).unwrap();
    let s = zero.ring().trivial_mult_set();
    assert!(is_s_multiplication(&zero, &s).unwrap().holds);
    for p in [Property::SIdempotent, Property::SPure, Property::SCopure] {
        assert!(is_fully(p, &zero, &s).unwrap().holds);
    }
}

#[test]
fn axis_of_plane_fails_but_hom_sum_covers_it() {
    for p in [2, 3, 5] {
        let v = plane(p);
        let units = v.ring().unit_mult_set();
        let axis = v.submodule_generated(&[v.element(&[1, 0]).unwrap()]);
        assert!(!is_s_idempotent_submodule(&v, &units, &axis).unwrap().holds);
        assert_eq!(v.hom_image_sum(&axis).unwrap(), axis);
    }
}

#[test]
fn degenerate_sets_are_flagged() {
    let r = z(8);
    let m = FiniteModule::regular(&r);
    let s = r.mult_closure(&[4]).unwrap();
    let v = is_fully_s_idempotent(&m, &s).unwrap();
    assert!(v.holds && v.degenerate);
}

#[test]
fn matches_definition_oracle() {
    let mut modules = Vec::new();
    for n in [4u32, 6, 8, 9, 12] {
        let r = z(n);
        modules.push(FiniteModule::regular(&r));
    }
    modules.push(plane(2));
    modules.push(product_module(&[FiniteModule::regular(&z(2)), FiniteModule::regular(&z(4))]).unwrap());
    for m in modules {
        let ring = m.ring().clone();
        for x in ring.elements() {
            let s = ring.mult_closure(&[x]).unwrap();
            for n in m.submodules().unwrap().iter() {
                assert_eq!(
                    is_s_idempotent_submodule(&m, &s, n).unwrap().holds,
                    oracle_s_idempotent(&m, s.elems(), n.elems()),
                );
            }
            assert_eq!(
                is_s_multiplication(&m, &s).unwrap().holds,
                is_s_multiplication_by_ideals(&m, &s).unwrap().holds
            );
        }
    }
}

#[test]
fn witnesses_recheck() {
    let r = z(12);
    let m = FiniteModule::regular(&r);
    for x in r.elements() {
        let s = r.mult_closure(&[x]).unwrap();
        let v = is_fully_s_idempotent(&m, &s).unwrap();
        if let Some(Witness::Each { scalars }) = &v.witness {
            for (n, &sv) in m.submodules().unwrap().iter().zip(scalars) {
                assert!(s.contains(sv));
                assert!(oracle_s_idempotent(&m, &[sv], n.elems()));
            }
        }
        let e = elements_s_idempotent(&m, &s).unwrap();
        assert_eq!(e.holds, v.holds);
    }
}
