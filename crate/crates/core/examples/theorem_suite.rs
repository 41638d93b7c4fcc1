// Running the registered implications over a small generated corpus.

use sidem::harness::{generate_corpus, registry, run_suite, CorpusBounds, Family, SuiteOptions};
use sidem::Limits;

pub fn run_example() -> anyhow::Result<()> {
    let bounds = CorpusBounds {
        zn_max: 8,
        product_max: 3,
        triple_max: 2,
        idealization_max: 3,
        sum_max: 4,
    };
    let corpus = generate_corpus(&Family::ALL, &bounds, Limits::default());
    let checks: Vec<_> = registry().iter().collect();
    let report = run_suite(&corpus, &checks, &SuiteOptions::default());
    println!("{} instances, {} checks", corpus.len(), checks.len());
    for (id, [pass, fail, skipped]) in report.per_check() {
        println!("{id:<20} pass {pass:>5} fail {fail:>3} skipped {skipped:>5}");
    }
    anyhow::ensure!(report.passed(), "{} failures", report.summary.fail);
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
