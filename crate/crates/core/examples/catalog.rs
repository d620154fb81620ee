// A resumable JSON-lines catalog: an interrupted batch picks up where it
// stopped.

use deltakit::catalog::{canonical_lines, catalog_batch, Catalog};
use deltakit::search::enumerate_semigroups;

pub fn run_example() -> deltakit::Result<()> {
    let dir = tempfile::tempdir()?;
    let path = dir.path().join("catalog.jsonl");

    let mut catalog = Catalog::open(&path)?;
    let first = catalog_batch(&mut catalog, enumerate_semigroups(9, 3), Some(5), 0)?;
    println!("first run stopped after {first} records");

    let mut catalog = Catalog::open(&path)?;
    let rest = catalog_batch(&mut catalog, enumerate_semigroups(9, 3), None, 0)?;
    println!("resumed run added {rest}; catalog holds {}", catalog.len());

    for line in canonical_lines(&path)?.iter().take(3) {
        println!("{line}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> deltakit::Result<()> {
    run_example()
}
