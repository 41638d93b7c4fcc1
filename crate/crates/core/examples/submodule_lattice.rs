// Submodules, colon ideals, annihilators and quotients.

use sidem::instance::InstanceFile;
use sidem::Limits;

pub fn run_example() -> anyhow::Result<()> {
    // Z/2 x Z/2 as a module over Z/2
    let text = r#"{"ring": {"kind": "zn", "n": 2},
        "module": {"kind": "sum", "orders": [2, 2]},
        "mult_set": {"generators": []}}"#;
    let inst = InstanceFile::parse(text)?.load(Limits::default())?;
    let m = &inst.module;
    let subs = m.submodules()?;
    println!("{} submodules of Z/2 x Z/2:", subs.len());
    for n in subs.iter() {
        let elems: Vec<String> = n.elems().iter().map(|&x| m.format_elem(x)).collect();
        let colon = m.colon_into(n)?;
        println!("  {{{}}}  (N:M) has {} elements", elems.join(", "), colon.len());
    }
    assert_eq!(subs.len(), 5);

    let x = m.element(&[1, 0])?;
    let line = m.submodule_generated(&[x]);
    let (q, proj) = m.quotient_module(&line)?;
    println!("quotient by <(1,0)> has {} elements; (1,1) maps to coset {}", q.size(), proj.apply(m.element(&[1, 1])?));
    assert_eq!(q.size(), 2);
    assert!(m.annihilator().is_zero());
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
