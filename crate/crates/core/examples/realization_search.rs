// Bounded searches for semigroups and elements with a prescribed delta set
// or set of lengths.

use deltakit::search::{realize, SearchQuery, TargetKind};

pub fn run_example() -> deltakit::Result<()> {
    let q = SearchQuery::new(TargetKind::DeltaOfSemigroup, &[1, 3], 16, 4);
    println!("Δ(S) = {{1, 3}}: {}", realize(&q)?.summary());

    let q = SearchQuery::new(TargetKind::DeltaOfElement, &[2, 3], 11, 3).exhaustive();
    println!("Δ(x) = {{2, 3}}:\n{}", realize(&q)?.summary());

    let q = SearchQuery::new(TargetKind::LengthSetOfElement, &[4, 6, 9], 11, 3);
    println!("L(x) = {{4, 6, 9}}: {}", realize(&q)?.summary());

    let q = SearchQuery::new(TargetKind::DeltaOfSemigroup, &[2, 3], 16, 4);
    if let Err(e) = realize(&q) {
        println!("Δ(S) = {{2, 3}}: {e}");
    }

    let q = SearchQuery::new(TargetKind::DeltaOfSemigroup, &[1, 3, 6], 12, 4);
    println!("Δ(S) = {{1, 3, 6}}: {}", realize(&q)?.summary());
    Ok(())
}

#[allow(dead_code)]
fn main() -> deltakit::Result<()> {
    run_example()
}
