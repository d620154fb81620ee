// Conjectured families: exact computation compared against the conjectured
// delta sets and presentations.

use deltakit::families::{family_conjecture, verify_family, FamilyId};

pub fn run_example() -> deltakit::Result<()> {
    let ids = [
        FamilyId::CompleteIntersection { m: 1, k: 0 },
        FamilyId::CompleteIntersection { m: 2, k: 0 },
        FamilyId::Con3B { x: 4 },
        FamilyId::Con3D { c: 5, x: 2 },
    ];
    for id in ids {
        let family = family_conjecture(&id)?;
        let report = verify_family(&family)?;
        let verdicts: Vec<String> = report.checks.iter().map(|c| format!("{} {}", c.name, c.status)).collect();
        println!("{id} = {}: {}", family.semigroup, verdicts.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> deltakit::Result<()> {
    run_example()
}
