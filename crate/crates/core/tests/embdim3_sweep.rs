use std::collections::BTreeMap;

use deltakit::embdim3::{classify_two_element_delta, DeltaShape};
use deltakit::search::enumerate_semigroups;
use deltakit::delta_semigroup;

/// Counts for all minimal three-generated semigroups with largest generator
/// at most 14, from an independent brute-force scan.
#[test]
fn triple_census_matches_reference() {
    let triples: Vec<_> = enumerate_semigroups(14, 3).filter(|s| s.embedding_dimension() == 3).collect();
    assert_eq!(triples.len(), 112);
    assert_eq!(triples.iter().filter(|s| s.is_symmetric().unwrap()).count(), 40);

    let mut sizes = BTreeMap::new();
    for s in &triples {
        let delta = delta_semigroup(s, None).unwrap().delta;
        *sizes.entry(delta.len()).or_insert(0) += 1;
    }
    let want: BTreeMap<usize, usize> = [(1, 71), (2, 17), (3, 13), (4, 7), (5, 3), (6, 1)].into();
    assert_eq!(sizes, want);
}

#[test]
fn no_two_element_violations_up_to_twenty() {
    for s in enumerate_semigroups(20, 3).filter(|s| s.embedding_dimension() == 3) {
        let c = classify_two_element_delta(&s).unwrap();
        assert_ne!(c.kind, DeltaShape::SizeTwoViolation, "{s}: {}", c.delta);
    }
}
