// Rings from shortcuts, products and raw structure constants.

use sidem::construct::product_ring;
use sidem::{FiniteRing, Limits, RingPresentation};

pub fn run_example() -> anyhow::Result<()> {
    let z12 = FiniteRing::cyclic(12)?;
    let units: Vec<String> = z12.units().iter().map(|u| z12.format_elem(u)).collect();
    println!("U(Z/12) = {{{}}}", units.join(", "));
    for m in z12.maximal_ideals()?.iter() {
        println!("maximal ideal of Z/12 generated by {}", z12.format_elem(m.gens()[0]));
    }
    assert_eq!(z12.ideals()?.len(), 6);

    // Z/2 × Z/3 has the same additive group as Z/6 and the same ideal count
    let p = product_ring(&[FiniteRing::cyclic(2)?, FiniteRing::cyclic(3)?])?;
    assert_eq!(p.ideals()?.len(), 4);
    let x = p.element(&[1, 2])?;
    println!("(1,2)^2 = {} in Z/2 x Z/3", p.format_elem(p.mul(x, x)));

    // GF(4) = F2[t]/(t^2 + t + 1) from structure constants on the basis {1, t}
    let gf4 = RingPresentation {
        additive_orders: vec![2, 2],
        one: vec![1, 0],
        mul_table: vec![
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 1], vec![1, 1]],
        ],
    };
    let f = FiniteRing::from_presentation(gf4, Limits::default())?;
    assert_eq!(f.units().len(), 3);
    println!("GF(4) has {} ideals and {} units", f.ideals()?.len(), f.units().len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
