// Whole-semigroup delta sets, exact and partial.

use deltakit::{delta_bound, delta_semigroup, NumericalSemigroup};

pub fn run_example() -> deltakit::Result<()> {
    for gens in [&[6u64, 13, 14, 16][..], &[7, 15, 17], &[5, 6, 19], &[7, 8, 13]] {
        let s = NumericalSemigroup::new(gens)?;
        let scan = delta_semigroup(&s, None)?;
        println!("Δ({s}) = {}  (all x <= {})", scan.delta, scan.bound);
    }

    // Below the guaranteed bound the answer is flagged as partial.
    let s = NumericalSemigroup::new(&[6, 13, 14, 16])?;
    let scan = delta_semigroup(&s, Some(40))?;
    println!(
        "up to 40 only: {} (partial: {}, full bound {})",
        scan.delta,
        scan.partial,
        delta_bound(&s)?
    );
    println!("min Δ from generator differences: {}", s.min_delta()?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> deltakit::Result<()> {
    run_example()
}
