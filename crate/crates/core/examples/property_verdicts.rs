// Deciding S-idempotency and its relatives, with witnesses.

use sidem::props::{self, Property};
use sidem::{FiniteModule, FiniteRing};

pub fn run_example() -> anyhow::Result<()> {
    // Z/4 with S = {1, 3}: S-multiplication but not fully S-idempotent
    let r = FiniteRing::cyclic(4)?;
    let m = FiniteModule::regular(&r);
    let s = r.mult_closure(&[3])?;
    let full = props::is_fully_s_idempotent(&m, &s)?;
    let mult = props::is_s_multiplication(&m, &s)?;
    println!("Z/4: fully S-idempotent = {}, counterexample {:?}", full.holds, full.counterexample);
    println!("Z/4: S-multiplication = {}", mult.holds);
    assert!(!full.holds && mult.holds);

    // Z/6 is fully idempotent: every ideal is generated by an idempotent
    let r6 = FiniteRing::cyclic(6)?;
    let m6 = FiniteModule::regular(&r6);
    assert!(props::is_fully_idempotent(&m6)?.holds);
    assert!(props::is_fully(Property::SPure, &m6, &r6.trivial_mult_set())?.holds);

    // inverting 2 in Z/4 makes everything trivially true
    let s2 = r.mult_closure(&[2])?;
    let v = props::is_fully_s_idempotent(&m, &s2)?;
    println!("S = closure(2) contains 0: degenerate = {}", v.degenerate);

    // per-submodule purity on Z/4
    for n in m.submodules()?.iter() {
        let p = props::is_s_pure_submodule(&m, &s, n)?;
        let c = props::is_s_copure_submodule(&m, &s, n)?;
        println!("  N = {:?}: S-pure {}, S-copure {}", n.elems(), p.holds, c.holds);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
