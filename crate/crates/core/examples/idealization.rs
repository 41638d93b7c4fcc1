// The trivial extension R ∝ M, its homogeneous ideals and S ∝ N.

use sidem::construct::{homogeneous_ideal, idealization, idealized_mult_set, pair};
use sidem::{FiniteModule, FiniteRing};

pub fn run_example() -> anyhow::Result<()> {
    let r = FiniteRing::cyclic(4)?;
    let m = FiniteModule::cyclic_over(&r, 2)?;
    let ext = idealization(&r, &m)?;
    println!("Z/4 ∝ Z/2 has {} elements and {} ideals", ext.size(), ext.ideals()?.len());

    // (0, 1)² = 0: the module part squares to zero
    let e = pair(&ext, 0, 1)?;
    assert_eq!(ext.mul(e, e), 0);

    // I ∝ N is an ideal exactly when IM ⊆ N: 2·(Z/2) = 0, but 1·(Z/2) ≠ 0
    let zero_m = homogeneous_ideal(&ext, &r.zero_ideal(), &m.whole())?;
    println!("0 ∝ M = {} elements", zero_m.len());
    let two = r.ideal_generated(&[2]);
    assert!(homogeneous_ideal(&ext, &two, &m.zero_submodule()).is_ok());
    let half = homogeneous_ideal(&ext, &r.whole_ideal(), &m.zero_submodule());
    println!("R ∝ 0 homogeneous? {}", half.is_ok());
    assert!(half.is_err());

    let s = r.mult_closure(&[3])?;
    let sm = idealized_mult_set(&ext, &s, &m.whole())?;
    println!("S ∝ M has {} elements", sm.len());
    assert_eq!(sm.len(), 4);
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
