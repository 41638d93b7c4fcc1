mod ring_arithmetic {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ring_arithmetic.rs"));
}

mod submodule_lattice {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/submodule_lattice.rs"));
}

mod mult_sets {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/mult_sets.rs"));
}

mod localization {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/localization.rs"));
}

mod idealization {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/idealization.rs"));
}

mod property_verdicts {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/property_verdicts.rs"));
}

mod theorem_suite {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/theorem_suite.rs"));
}

mod counterexample_search {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/counterexample_search.rs"));
}

mod instance_files {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/instance_files.rs"));
}

#[test]
fn ring_arithmetic_runs() {
    ring_arithmetic::run_example().expect("ring_arithmetic example should run");
}

#[test]
fn submodule_lattice_runs() {
    submodule_lattice::run_example().expect("submodule_lattice example should run");
}

#[test]
fn mult_sets_runs() {
    mult_sets::run_example().expect("mult_sets example should run");
}

#[test]
fn localization_runs() {
    localization::run_example().expect("localization example should run");
}

#[test]
fn idealization_runs() {
    idealization::run_example().expect("idealization example should run");
}

#[test]
fn property_verdicts_runs() {
    property_verdicts::run_example().expect("property_verdicts example should run");
}

#[test]
fn theorem_suite_runs() {
    theorem_suite::run_example().expect("theorem_suite example should run");
}

#[test]
fn counterexample_search_runs() {
    counterexample_search::run_example().expect("counterexample_search example should run");
}

#[test]
fn instance_files_runs() {
    instance_files::run_example().expect("instance_files example should run");
}
