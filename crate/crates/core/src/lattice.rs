//! Additive closures and breadth-first enumeration of sub-objects.
//!
//! Ideals and submodules are both additive subgroups closed under a ring
//! action, and every one of them is a finite sum of cyclic pieces. The
//! enumeration starts from `{0}` and repeatedly adjoins one cyclic piece to a
//! known sub-object until nothing new appears.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::set::{Elem, ElemSet};

/// A finite abelian group whose zero is element `0`.
pub trait Additive {
    fn size(&self) -> usize;
    fn add(&self, a: Elem, b: Elem) -> Elem;
    fn neg(&self, a: Elem) -> Elem;

    /// `n · a` by double-and-add.
    fn scale(&self, a: Elem, mut n: u64) -> Elem {
        let mut acc = 0;
        let mut base = a;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            n >>= 1;
        }
        acc
    }

    fn additive_order(&self, a: Elem) -> u64 {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.add(x, a);
            k += 1;
        }
        k
    }
}

/// Subgroup generated by `seeds`.
pub fn additive_closure<A: Additive + ?Sized>(
    group: &A,
    seeds: impl IntoIterator<Item = Elem>,
) -> ElemSet {
    let mut mask = FixedBitSet::with_capacity(group.size());
    mask.insert(0);
    let mut members: Vec<Elem> = vec![0];
    for seed in seeds {
        if mask.contains(seed as usize) {
            continue;
        }
        let mut multiples = Vec::new();
        let mut m = seed;
        while m != 0 {
            multiples.push(m);
            m = group.add(m, seed);
        }
        let snapshot = members.len();
        for i in 0..snapshot {
            let x = members[i];
            for &c in &multiples {
                let y = group.add(x, c);
                if !mask.contains(y as usize) {
                    mask.insert(y as usize);
                    members.push(y);
                }
            }
        }
    }
    ElemSet::from_mask(mask)
}

/// `a + b` for two subgroups given as sets.
pub fn subgroup_sum<A: Additive + ?Sized>(group: &A, a: &ElemSet, b: &ElemSet) -> ElemSet {
    if a.is_subset(b) {
        return b.clone();
    }
    if b.is_subset(a) {
        return a.clone();
    }
    let mut mask = FixedBitSet::with_capacity(group.size());
    for x in a.iter() {
        for y in b.iter() {
            mask.insert(group.add(x, y) as usize);
        }
    }
    ElemSet::from_mask(mask)
}

/// A sub-object produced by enumeration: its elements and the generators
/// adjoined to reach it.
#[derive(Debug, Clone)]
pub struct Span {
    pub set: ElemSet,
    pub gens: Vec<Elem>,
}

/// Greedy generating set: scan `set` in canonical order and keep every
/// element not already in the span of the kept ones.
pub fn greedy_generators(
    set: &ElemSet,
    mut cyclic: impl FnMut(Elem) -> ElemSet,
    mut sum: impl FnMut(&ElemSet, &ElemSet) -> ElemSet,
) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut span: Option<ElemSet> = None;
    for x in set.iter() {
        if x == 0 {
            continue;
        }
        if span.as_ref().is_some_and(|s| s.contains(x)) {
            continue;
        }
        let c = cyclic(x);
        span = Some(match span {
            None => c,
            Some(s) => sum(&s, &c),
        });
        gens.push(x);
        if span.as_ref().is_some_and(|s| s.len() == set.len()) {
            break;
        }
    }
    gens
}

/// Breadth-first cyclic extension. `cyclic(x)` must return the smallest
/// sub-object containing `x`. The result is sorted by size, then by elements.
pub fn enumerate_spans<A: Additive + ?Sized>(
    group: &A,
    mut cyclic: impl FnMut(Elem) -> ElemSet,
    cap: usize,
    what: &'static str,
) -> Result<Vec<Span>> {
    let n = group.size();
    if n > cap {
        return Err(Error::SizeExceeded { what, size: n, cap });
    }
    // Distinct cyclic pieces, each with its least generator.
    let mut cyclics: Vec<(Elem, ElemSet)> = Vec::new();
    let mut covered: HashMap<Vec<Elem>, ()> = HashMap::new();
    for x in 1..n as Elem {
        let c = cyclic(x);
        if covered.insert(c.elems().to_vec(), ()).is_none() {
            cyclics.push((x, c));
        }
    }

    let zero = Span {
        set: ElemSet::from_iter_in(n, [0]),
        gens: Vec::new(),
    };
    let mut seen: HashMap<Vec<Elem>, usize> = HashMap::new();
    seen.insert(zero.set.elems().to_vec(), 0);
    let mut found = vec![zero];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (x, c) in &cyclics {
            if found[i].set.contains(*x) {
                continue;
            }
            let set = subgroup_sum(group, &found[i].set, c);
            if seen.contains_key(set.elems()) {
                continue;
            }
            let mut gens = found[i].gens.clone();
            gens.push(*x);
            seen.insert(set.elems().to_vec(), found.len());
            queue.push_back(found.len());
            found.push(Span { set, gens });
        }
    }
    found.sort_by(|a, b| {
        a.set
            .len()
            .cmp(&b.set.len())
            .then_with(|| a.set.elems().cmp(b.set.elems()))
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Cyclic(u32);

    impl Additive for Cyclic {
        fn size(&self) -> usize {
            self.0 as usize
        }
        fn add(&self, a: Elem, b: Elem) -> Elem {
            (a + b) % self.0
        }
        fn neg(&self, a: Elem) -> Elem {
            (self.0 - a) % self.0
        }
    }

    #[test]
    fn closure_of_cyclic_group() {
        let g = Cyclic(12);
        assert_eq!(additive_closure(&g, [8]).elems(), &[0, 4, 8]);
        assert_eq!(additive_closure(&g, [8, 6]).elems(), &[0, 2, 4, 6, 8, 10]);
        assert_eq!(additive_closure(&g, []).elems(), &[0]);
        assert_eq!(g.scale(5, 7), 11);
        assert_eq!(g.additive_order(8), 3);
    }

    #[test]
    fn subgroups_of_z12() {
        let g = Cyclic(12);
        let spans = enumerate_spans(&g, |x| additive_closure(&g, [x]), 1024, "group").unwrap();
        // one subgroup per divisor of 12
        assert_eq!(spans.len(), 6);
        assert_eq!(spans[0].set.elems(), &[0]);
        assert_eq!(spans[5].set.len(), 12);
    }
}
