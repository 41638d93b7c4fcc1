// Reading instance files and re-emitting them as raw presentations.

use sidem::instance::InstanceFile;
use sidem::Limits;

pub fn run_example() -> anyhow::Result<()> {
    let text = r#"{
        "ring": {"kind": "product", "factors": [{"kind": "zn", "n": 2}, {"kind": "zn", "n": 4}]},
        "module": {"kind": "product", "factors": [{"kind": "regular"}, {"kind": "zd", "d": 2}]},
        "mult_set": {"generators": [[1, 3]]},
        "submodule": {"generators": [[1, 0]]}
    }"#;
    let file = InstanceFile::parse(text)?;
    let inst = file.load(Limits::default())?;
    println!("|R| = {}, |M| = {}, |S| = {}", inst.ring.size(), inst.module.size(), inst.mult_set.len());

    let raw = inst.to_raw_file().expect("coordinates available");
    let again = InstanceFile::parse(&raw.to_json())?.load(Limits::default())?;
    assert_eq!(again.ring.size(), inst.ring.size());
    println!("raw form:\n{}", raw.to_json());

    // errors name the offending field
    let bad = r#"{"ring": {"orders": [2], "mul_table": [[[1]]]}, "module": {"kind": "regular"}, "mult_set": {"generators": []}}"#;
    println!("malformed: {}", InstanceFile::parse(bad).unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> anyhow::Result<()> {
    run_example()
}
