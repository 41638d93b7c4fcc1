use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use sidem::harness::{
    self, parse_families, search_counterexamples, CorpusBounds, InstanceDescriptor, SuiteOptions,
    TheoremCheck,
};
use sidem::instance::{Instance, InstanceFile};
use sidem::props::{self, Verdict};
use sidem::report::{CheckResult, Outcome, SuiteReport};
use sidem::{Elem, FiniteModule, Limits, Submodule};

#[derive(Parser)]
#[command(name = "sidem", version, about = "S-idempotent modules over finite commutative rings")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide one property of an instance.
    Check {
        #[arg(long)]
        instance: PathBuf,
        /// fully-s-idempotent, s-multiplication, s-idempotent, s-pure,
        /// s-copure, fully-s-pure, fully-s-copure (S = {1} variants drop the "s-")
        #[arg(long)]
        property: String,
        /// Submodule generators, comma-separated; coordinates joined by ':'
        #[arg(long)]
        submodule: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List submodules, ideals, maximal ideals or the multiplicative set.
    Enumerate {
        what: What,
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        annotate: bool,
    },
    /// Run theorem checks over a corpus or a single instance.
    Verify {
        #[arg(long)]
        all: bool,
        /// Check ids, comma-separated
        #[arg(long)]
        check: Option<String>,
        #[arg(long)]
        instance: Option<PathBuf>,
        #[arg(long, default_value = "zn,zd,products,triples,idealizations,quotients,sums")]
        families: String,
        /// Bound for every family (ring orders in products, idealizations and
        /// sums are further capped at 8, 8 and 12)
        #[arg(long, default_value_t = 30)]
        zn_max: u32,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Negate every conclusion; the run must then report failures
        #[arg(long)]
        self_test: bool,
    },
    /// Look for an instance on which a check fails.
    Search {
        #[arg(long)]
        check: String,
        #[arg(long, default_value = "zn")]
        families: String,
        #[arg(long, default_value_t = 8)]
        zn_max: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Submodules,
    Ideals,
    MaximalIdeals,
    MultSet,
}

/// Errors that map to exit status 2.
struct Usage(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match cli.cmd {
        Cmd::Check { instance, property, submodule, out } => {
            check(&instance, &property, submodule.as_deref(), out.as_deref())
        }
        Cmd::Enumerate { what, instance, annotate } => enumerate(what, &instance, annotate),
        Cmd::Verify { all, check, instance, families, zn_max, jobs, seed, out, self_test } => verify(
            all,
            check.as_deref(),
            instance.as_deref(),
            &families,
            zn_max,
            SuiteOptions { jobs, seed, negate: self_test, limits: Limits::default() },
            out.as_deref(),
        ),
        Cmd::Search { check, families, zn_max, seed, jobs, out } => {
            search(&check, &families, zn_max, seed, jobs, out.as_deref())
        }
    };
    match r {
        Ok(code) => ExitCode::from(code),
        Err(Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<(InstanceFile, Instance), Usage> {
    let file = InstanceFile::read(path).with_context(|| format!("{}", path.display()))?;
    let inst = file
        .load(Limits::default())
        .with_context(|| format!("{}", path.display()))?;
    Ok((file, inst))
}

fn write_out(path: Option<&Path>, report: &SuiteReport) -> Result<(), Usage> {
    if let Some(p) = path {
        std::fs::write(p, report.to_json()).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn parse_submodule(m: &FiniteModule, text: &str) -> Result<Submodule, Usage> {
    let gens = text
        .split(',')
        .map(str::trim)
        .filter(|g| !g.is_empty())
        .map(|g| {
            let coords = g
                .split(':')
                .map(|c| c.trim().parse::<u32>().map_err(|_| anyhow!("bad coordinate `{c}` in `{g}`")))
                .collect::<anyhow::Result<Vec<u32>>>()?;
            m.element(&coords).map_err(|e| anyhow!("submodule generator `{g}`: {e}"))
        })
        .collect::<anyhow::Result<Vec<Elem>>>()?;
    Ok(m.submodule_generated(&gens))
}

fn set_string(m: &FiniteModule, elems: &[Elem]) -> String {
    let items: Vec<String> = elems.iter().map(|&x| m.format_elem(x)).collect();
    format!("{{{}}}", items.join(", "))
}

fn check(path: &Path, property: &str, sub: Option<&str>, out: Option<&Path>) -> Result<u8, Usage> {
    let (file, inst) = load(path)?;
    let m = &inst.module;
    let name = property.to_string();
    let rest = name.strip_prefix("fully-").unwrap_or(&name);
    let fully = rest.len() != name.len();
    let (plain, base) = match rest.strip_prefix("s-") {
        Some(b) => (false, b),
        None => (true, rest),
    };
    let s = if plain { inst.ring.trivial_mult_set() } else { inst.mult_set.clone() };
    let submodule = match sub {
        Some(t) => Some(parse_submodule(m, t)?),
        None => inst.submodule.clone(),
    };
    let need_sub = || submodule.clone().ok_or_else(|| anyhow!("`{name}` needs --submodule or a submodule block"));
    let verdict: Verdict = match (fully, base) {
        (true, "idempotent") => props::is_fully_s_idempotent(m, &s)?,
        (true, "pure") => props::is_fully(props::Property::SPure, m, &s)?,
        (true, "copure") => props::is_fully(props::Property::SCopure, m, &s)?,
        (false, "multiplication") => props::is_s_multiplication(m, &s)?,
        (false, "idempotent") => props::is_s_idempotent_submodule(m, &s, &need_sub()?)?,
        (false, "pure") => props::is_s_pure_submodule(m, &s, &need_sub()?)?,
        (false, "copure") => props::is_s_copure_submodule(m, &s, &need_sub()?)?,
        _ => return Err(anyhow!("unknown property `{property}`").into()),
    };
    println!("property:       {name}");
    if let Some(n) = &submodule {
        println!("submodule:      {}", set_string(m, n.elems()));
    }
    println!("S:              {}", set_string_ring(&inst, s.elems()));
    println!("verdict:        {}", verdict.holds);
    if let Some(w) = &verdict.witness {
        println!("witness:        {}", serde_json::to_string(w).expect("json"));
    }
    if let Some(c) = &verdict.counterexample {
        println!("counterexample: {}", describe_counterexample(&inst, c));
    }
    println!("degenerate:     {}", verdict.degenerate);
    let descriptor = InstanceDescriptor::from_file(&file, &path.display().to_string(), Limits::default())?;
    let result = CheckResult {
        check: name,
        instance: 0,
        outcome: if verdict.holds { Outcome::Pass } else { Outcome::Fail },
        witness: verdict.witness.as_ref().map(|w| json!(w)),
        counterexample: verdict.counterexample.as_ref().map(|c| json!(c)),
        reason: verdict.degenerate.then(|| "degenerate S (0 ∈ S)".to_string()),
    };
    write_out(out, &SuiteReport::new(0, vec![descriptor], vec![result]))?;
    Ok(if verdict.holds { 0 } else { 1 })
}

fn set_string_ring(inst: &Instance, elems: &[Elem]) -> String {
    let items: Vec<String> = elems.iter().map(|&x| inst.ring.format_elem(x)).collect();
    format!("{{{}}}", items.join(", "))
}

fn describe_counterexample(inst: &Instance, c: &props::Counterexample) -> String {
    use props::Counterexample::*;
    let m = &inst.module;
    match c {
        Submodule { elems } => format!("submodule {}", set_string(m, elems)),
        Element { x } => format!("element {}", m.format_elem(*x)),
        Pair { n, k } => format!("pair {} and {}", set_string(m, n), set_string(m, k)),
        Ideal { ideal } => format!("ideal {}", set_string_ring(inst, ideal)),
        SubmoduleAndIdeal { elems, ideal } => format!(
            "submodule {} with ideal {}",
            set_string(m, elems),
            set_string_ring(inst, ideal)
        ),
    }
}

fn enumerate(what: What, path: &Path, annotate: bool) -> Result<u8, Usage> {
    let (_, inst) = load(path)?;
    let (r, m, s) = (&inst.ring, &inst.module, &inst.mult_set);
    let mut w = std::io::stdout().lock();
    match what {
        What::Submodules => {
            for n in m.submodules()?.iter() {
                write!(w, "{}", set_string(m, n.elems()))?;
                if annotate {
                    let idem = props::is_s_idempotent_submodule(m, s, n)?.holds;
                    let pure = props::is_s_pure_submodule(m, s, n)?.holds;
                    let copure = props::is_s_copure_submodule(m, s, n)?.holds;
                    write!(w, "\ts-idempotent={idem} s-pure={pure} s-copure={copure}")?;
                }
                writeln!(w)?;
            }
        }
        What::Ideals | What::MaximalIdeals => {
            let ideals = match what {
                What::Ideals => r.ideals()?,
                _ => r.maximal_ideals()?,
            };
            let maximal = r.maximal_ideals()?;
            let primes = r.prime_ideals()?;
            for i in ideals.iter() {
                write!(w, "{}", set_string_ring(&inst, i.elems()))?;
                if annotate {
                    let sq = r.ideal_product(i, i)?;
                    write!(
                        w,
                        "\tprime={} maximal={} idempotent={}",
                        primes.contains(i),
                        maximal.contains(i),
                        sq == *i
                    )?;
                }
                writeln!(w)?;
            }
        }
        What::MultSet => {
            writeln!(w, "{}", set_string_ring(&inst, s.elems()))?;
            if annotate {
                writeln!(w, "degenerate={} inside-units={}", s.is_degenerate(), r.is_subset_units(s))?;
            }
        }
    }
    Ok(0)
}

fn bounds(zn_max: u32) -> CorpusBounds {
    let d = CorpusBounds::default();
    CorpusBounds {
        zn_max,
        product_max: d.product_max.min(zn_max),
        triple_max: d.triple_max.min(zn_max),
        idealization_max: d.idealization_max.min(zn_max),
        sum_max: d.sum_max.min(zn_max),
    }
}

fn select_checks(all: bool, ids: Option<&str>) -> Result<Vec<&'static TheoremCheck>, Usage> {
    match (all, ids) {
        (true, None) => Ok(harness::registry().iter().collect()),
        (false, Some(list)) => Ok(list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(harness::find_check)
            .collect::<Result<_, _>>()?),
        (true, Some(_)) => Err(anyhow!("--all and --check are exclusive").into()),
        (false, None) => Err(anyhow!("give --all or --check ID").into()),
    }
}

fn print_report(report: &SuiteReport) -> std::io::Result<()> {
    let mut w = std::io::stdout().lock();
    writeln!(w, "{:<22} {:>8} {:>8} {:>8}", "check", "pass", "fail", "skipped")?;
    for (id, [p, f, s]) in report.per_check() {
        writeln!(w, "{id:<22} {p:>8} {f:>8} {s:>8}")?;
    }
    let sm = &report.summary;
    writeln!(w, "{:<22} {:>8} {:>8} {:>8}", "total", sm.pass, sm.fail, sm.skipped)?;
    for r in report.failures().take(20) {
        let inst = &report.instances[r.instance];
        writeln!(
            w,
            "FAIL {} on {}: {}{}",
            r.check,
            inst.label(),
            r.counterexample.as_ref().map(|c| c.to_string()).unwrap_or_default(),
            r.reason.as_ref().map(|s| format!(" ({s})")).unwrap_or_default()
        )?;
    }
    Ok(())
}

fn verify(
    all: bool,
    ids: Option<&str>,
    instance: Option<&Path>,
    families: &str,
    zn_max: u32,
    opts: SuiteOptions,
    out: Option<&Path>,
) -> Result<u8, Usage> {
    let checks = select_checks(all, ids)?;
    let corpus = match instance {
        Some(p) => {
            let (file, _) = load(p)?;
            vec![InstanceDescriptor::from_file(&file, &p.display().to_string(), opts.limits)?]
        }
        None => harness::generate_corpus(&parse_families(families)?, &bounds(zn_max), opts.limits),
    };
    let report = harness::run_suite(&corpus, &checks, &opts);
    print_report(&report)?;
    write_out(out, &report)?;
    Ok(if report.passed() { 0 } else { 3 })
}

fn search(
    id: &str,
    families: &str,
    zn_max: u32,
    seed: u64,
    jobs: Option<usize>,
    out: Option<&Path>,
) -> Result<u8, Usage> {
    harness::find_check(id)?;
    let fams = parse_families(families)?;
    if fams.is_empty() {
        return Err(anyhow!("no families selected").into());
    }
    let opts = SuiteOptions { jobs, seed, ..SuiteOptions::default() };
    let found = search_counterexamples(id, &fams, &bounds(zn_max), seed, &opts)?;
    let report = match found {
        Some((d, r)) => {
            println!("counterexample to {id}: {}", d.label());
            println!("{}", d.to_file().to_json());
            println!("{}", r.counterexample.as_ref().map(|c| c.to_string()).unwrap_or_default());
            SuiteReport::new(seed, vec![d], vec![r])
        }
        None => {
            println!("no counterexample to {id} within bounds (seed {seed})");
            SuiteReport::new(seed, vec![], vec![])
        }
    };
    write_out(out, &report)?;
    Ok(if report.passed() { 0 } else { 3 })
}
