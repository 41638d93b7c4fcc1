use proptest::prelude::*;

use sidem::construct::product_ring;
use sidem::props;
use sidem::{Elem, FiniteModule, FiniteRing, Limits, RingPresentation};

fn ring_and_elems() -> impl Strategy<Value = (u32, Vec<u32>)> {
    (2u32..=40).prop_flat_map(|n| (Just(n), prop::collection::vec(0..n, 3)))
}

/// Multiplication extended bilinearly from the structure constants.
fn raw_mul(p: &RingPresentation, a: &[u32], b: &[u32]) -> Vec<u32> {
    let k = p.additive_orders.len();
    let mut out = vec![0u64; k];
    for i in 0..k {
        for j in 0..k {
            for (l, &c) in p.mul_table[i][j].iter().enumerate() {
                out[l] += a[i] as u64 * b[j] as u64 * c as u64;
            }
        }
    }
    out.iter()
        .zip(&p.additive_orders)
        .map(|(&x, &d)| (x % d as u64) as u32)
        .collect()
}

fn is_ring(p: &RingPresentation) -> bool {
    let all: Vec<Vec<u32>> = (0..4).map(|x| vec![x / 2, x % 2]).collect();
    all.iter().all(|a| raw_mul(p, &p.one, a) == *a)
        && all.iter().all(|a| all.iter().all(|b| raw_mul(p, a, b) == raw_mul(p, b, a)))
        && all.iter().all(|a| {
            all.iter().all(|b| {
                all.iter()
                    .all(|c| raw_mul(p, &raw_mul(p, a, b), c) == raw_mul(p, a, &raw_mul(p, b, c)))
            })
        })
}

proptest! {
    #[test]
    fn divisibility_is_transitive((n, xs) in ring_and_elems()) {
        let r = FiniteRing::cyclic(n).unwrap();
        let (a, b, c) = (xs[0], xs[1], xs[2]);
        if r.divides(a, b) && r.divides(b, c) {
            prop_assert!(r.divides(a, c));
        }
    }

    #[test]
    fn units_form_a_group((n, xs) in ring_and_elems()) {
        let r = FiniteRing::cyclic(n).unwrap();
        let (a, b) = (xs[0], xs[1]);
        if r.is_unit(a) && r.is_unit(b) {
            prop_assert!(r.is_unit(r.mul(a, b)));
            prop_assert!(r.elements().any(|y| r.mul(a, y) == r.one()));
        }
    }

    #[test]
    fn ideal_operations_are_consistent((n, xs) in ring_and_elems()) {
        let r = FiniteRing::cyclic(n).unwrap();
        let i = r.ideal_generated(&[xs[0]]);
        let j = r.ideal_generated(&[xs[1]]);
        let ij = r.ideal_product(&i, &j).unwrap();
        prop_assert_eq!(&ij, &r.ideal_product(&j, &i).unwrap());
        let meet = r.ideal_intersection(&i, &j).unwrap();
        prop_assert!(ij.is_subset(&meet));
        let sum = r.ideal_sum(&i, &j).unwrap();
        prop_assert!(i.is_subset(&sum) && j.is_subset(&sum));
        prop_assert!(ij.contains(r.mul(xs[0], xs[1])));
    }

    #[test]
    fn closures_are_closed_and_minimal((n, xs) in ring_and_elems()) {
        let r = FiniteRing::cyclic(n).unwrap();
        let s = r.mult_closure(&xs).unwrap();
        prop_assert!(s.contains(r.one()));
        for &a in s.elems() {
            for &b in s.elems() {
                prop_assert!(s.contains(r.mul(a, b)));
            }
        }
        let again = r.mult_closure(s.elems()).unwrap();
        prop_assert_eq!(again.elems(), s.elems());
        prop_assert!(s.is_subset(&r.saturation(&s).unwrap()));
    }

    #[test]
    fn enlarging_s_preserves_full_idempotency((n, xs) in ring_and_elems()) {
        let r = FiniteRing::cyclic(n).unwrap();
        let m = FiniteModule::regular(&r);
        let s = r.mult_closure(&xs[..1]).unwrap();
        let t = r.mult_closure(&xs).unwrap();
        if props::is_fully_s_idempotent(&m, &s).unwrap().holds {
            prop_assert!(props::is_fully_s_idempotent(&m, &t).unwrap().holds);
        }
    }

    #[test]
    fn projections_are_homomorphisms((n, xs) in ring_and_elems()) {
        let r = FiniteRing::cyclic(n).unwrap();
        let m = FiniteModule::regular(&r);
        let sub = m.submodule_generated(&[xs[0]]);
        let (q, p) = m.quotient_module(&sub).unwrap();
        prop_assert_eq!(q.size() * sub.len(), m.size());
        let (a, b, c) = (xs[0], xs[1], xs[2]);
        prop_assert_eq!(p.apply(m.add(b, c)), q.add(p.apply(b), p.apply(c)));
        prop_assert_eq!(p.apply(m.act(a, b)), q.act(a, p.apply(b)));
        prop_assert_eq!(p.apply(xs[0]), 0);
    }

    #[test]
    fn ring_validation_matches_axioms(
        one in prop::collection::vec(0u32..2, 2),
        table in prop::collection::vec(prop::collection::vec(prop::collection::vec(0u32..2, 2), 2), 2),
    ) {
        let p = RingPresentation { additive_orders: vec![2, 2], one, mul_table: table };
        let accepted = FiniteRing::from_presentation(p.clone(), Limits::default()).is_ok();
        prop_assert_eq!(accepted, is_ring(&p));
    }

    #[test]
    fn product_elements_round_trip(a in 2u32..6, b in 2u32..6, x in 0u32..36) {
        let r = product_ring(&[FiniteRing::cyclic(a).unwrap(), FiniteRing::cyclic(b).unwrap()]).unwrap();
        let x = x % r.size() as Elem;
        let parts = r.split(x).unwrap();
        prop_assert_eq!(r.join(&parts), Some(x));
        prop_assert_eq!(r.element(&r.coords(x)).unwrap(), x);
        let one = r.one();
        prop_assert_eq!(r.mul(one, x), x);
    }
}
