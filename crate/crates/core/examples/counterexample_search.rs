// Falsifying converses that the theory does not promise.

use sidem::harness::{search_counterexamples, CorpusBounds, Family, SuiteOptions};

pub fn run_example() -> anyhow::Result<()> {
    let bounds = CorpusBounds {
        zn_max: 8,
        sum_max: 5,
        ..CorpusBounds::default()
    };
    let opts = SuiteOptions::default();
    for (id, family) in [
        ("lemma-2.5-converse", Family::Zn),
        ("prop-2.9-converse", Family::Sums),
        ("lemma-2.5", Family::Zn),
    ] {
        match search_counterexamples(id, &[family], &bounds, 42, &opts)? {
            Some((d, r)) => println!(
                "{id}: {} fails with {}",
                d.label(),
                r.counterexample.map(|c| c.to_string()).unwrap_or_default()
            ),
            None => println!("{id}: no counterexample in {family}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
