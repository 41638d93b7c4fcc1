// Multiplicative sets: closures, complements of maximal ideals, saturation.

use sidem::FiniteRing;

pub fn run_example() -> anyhow::Result<()> {
    let r = FiniteRing::cyclic(12)?;
    let show = |xs: &[u32]| xs.iter().map(|&x| r.format_elem(x)).collect::<Vec<_>>().join(", ");

    let s = r.mult_closure(&[3])?;
    println!("closure(3) = {{{}}}", show(s.elems()));
    assert_eq!(s.elems(), &[1, 3, 9]);

    // every s in S becomes a unit after inverting S, and so does anything dividing one
    let sat = r.saturation(&s)?;
    println!("saturation = {{{}}}", show(sat.elems()));
    assert!(s.is_subset(&sat));

    let w = r.has_maximal_multiple(&s).expect("finite sets have one");
    println!("maximal multiple of S: {}", r.format_elem(w));

    for m in r.maximal_ideals()?.iter() {
        let c = r.complement_of_maximal(m)?;
        println!("R minus <{}> has {} elements", r.format_elem(m.gens()[0]), c.len());
    }
    assert!(r.mult_closure(&[0])?.is_degenerate());
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
