use deltakit::catalog::{canonical_lines, catalog_batch, Catalog, CatalogRecord};
use deltakit::search::enumerate_semigroups;
use deltakit::Error;

#[test]
fn interrupted_batch_resumes_to_identical_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let whole = dir.path().join("whole.jsonl");
    let resumed = dir.path().join("resumed.jsonl");

    let mut c = Catalog::open(&whole).unwrap();
    let total = catalog_batch(&mut c, enumerate_semigroups(20, 3), None, 0).unwrap();

    let mut c = Catalog::open(&resumed).unwrap();
    assert_eq!(catalog_batch(&mut c, enumerate_semigroups(20, 3), Some(100), 0).unwrap(), 100);
    let mut c = Catalog::open(&resumed).unwrap();
    assert_eq!(c.len(), 100);
    let rest = catalog_batch(&mut c, enumerate_semigroups(20, 3), None, 0).unwrap();
    assert_eq!(rest + 100, total);

    assert_eq!(canonical_lines(&whole).unwrap(), canonical_lines(&resumed).unwrap());
    assert_eq!(std::fs::read(&whole).unwrap(), std::fs::read(&resumed).unwrap());

    // a third pass adds nothing
    let mut c = Catalog::open(&resumed).unwrap();
    assert_eq!(catalog_batch(&mut c, enumerate_semigroups(20, 3), None, 0).unwrap(), 0);
}

#[test]
fn cataloged_records_satisfy_gcd_identities() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.jsonl");
    let mut c = Catalog::open(&path).unwrap();
    catalog_batch(&mut c, enumerate_semigroups(14, 4), None, 0).unwrap();
    for r in c.records() {
        let diffs = r.generators.windows(2).map(|w| w[1] - w[0]).fold(0, gcd);
        assert_eq!(r.delta.min(), Some(diffs), "{:?}", r.generators);
        assert_eq!(r.delta.gcd(), diffs, "{:?}", r.generators);
        assert!(!r.partial);
    }
}

#[test]
fn partial_records_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let s = deltakit::NumericalSemigroup::new(&[3, 5]).unwrap();
    let mut r = CatalogRecord::compute(&s, 0).unwrap();
    r.partial = true;
    let mut c = Catalog::open(dir.path().join("c.jsonl")).unwrap();
    assert!(matches!(c.append(r), Err(Error::PartialScanRejected)));
    assert!(c.is_empty());
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
