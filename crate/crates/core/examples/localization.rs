// Localizing a finite ring and module at a multiplicative set.

use sidem::localize::{localize, s_torsion};
use sidem::{FiniteModule, FiniteRing};

pub fn run_example() -> anyhow::Result<()> {
    let r = FiniteRing::cyclic(12)?;
    let m = FiniteModule::regular(&r);
    let s = r.mult_closure(&[3])?;
    let loc = localize(&r, &s, Some(&m))?;

    // Z/12 = Z/4 × Z/3 and 3 is zero in the second factor: S⁻¹(Z/12) is Z/4
    println!(
        "idempotent {}, local ring of order {}",
        r.format_elem(loc.idempotent()),
        loc.local_ring().size()
    );
    assert_eq!(loc.local_ring().size(), 4);

    // the kernel of r -> r/1 is exactly the S-torsion
    assert_eq!(loc.kernel(), s_torsion(&r, &s));
    for &t in s.elems() {
        assert!(loc.local_ring().is_unit(loc.ring_map(t)));
    }
    let lm = loc.local_module().expect("module given");
    println!("S⁻¹M has {} elements", lm.size());
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
