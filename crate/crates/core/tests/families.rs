use deltakit::families::{
    compare_symmetric_forms, family_conjecture, family_minpres, verify_family, CheckStatus, FamilyId,
};
use deltakit::DeltaSet;

#[test]
fn minpres_sweep_beyond_acceptance_grid() {
    // (2, 5) and (7, 2) have delta bounds of a few million; larger p^x is
    // out of reach for an exhaustive scan.
    for (p, x) in [(2, 5), (7, 2)] {
        let family = family_minpres(p, x).unwrap();
        let report = verify_family(&family).unwrap();
        for c in &report.checks {
            assert_eq!(c.status, CheckStatus::Pass, "{} {}: {}", family.id, c.name, c.computed);
        }
    }
}

#[test]
fn symmetric_variant_form_differs() {
    let cmp = compare_symmetric_forms(1, 3).unwrap();
    assert_eq!(cmp.decomposition_form, vec![8, 9, 15]);
    assert_eq!(cmp.decomposition_delta, DeltaSet::from([1, 2]));
    assert_eq!(cmp.variant_form, vec![8, 9, 11]);
    assert_eq!(cmp.variant_delta, Some(DeltaSet::from([1])));
    assert_eq!(cmp.variant_symmetric, Some(false));
    assert!(cmp.discrepancy);
}

#[test]
fn further_conjecture_instances_are_consistent() {
    let ids = [
        FamilyId::CompleteIntersection { m: 1, k: 2 },
        FamilyId::CompleteIntersection { m: 2, k: 1 },
        FamilyId::Con3A { x: 4 },
        FamilyId::Con3B { x: 4 },
        FamilyId::Con3C { x: 3 },
        FamilyId::Con3D { c: 5, x: 2 },
        FamilyId::Con3D { c: 6, x: 2 },
    ];
    for id in ids {
        let family = family_conjecture(&id).unwrap();
        let report = verify_family(&family).unwrap();
        for c in &report.checks {
            assert_eq!(c.status, CheckStatus::Consistent, "{id} {}: {}", c.name, c.computed);
        }
    }
}
