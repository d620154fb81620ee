// Betti elements, R-classes and minimal presentations.

use deltakit::{betti_elements, delta_bound, is_uniquely_presented, minimal_presentation, verify_presentation, NumericalSemigroup};

pub fn run_example() -> deltakit::Result<()> {
    for gens in [&[7u64, 15, 17][..], &[6, 13, 14, 16]] {
        let s = NumericalSemigroup::new(gens)?;
        let scan = betti_elements(&s, None)?;
        println!("{s}: Betti elements {:?}", scan.values());
        for r in &scan.records {
            println!("  {} has {} factorizations in {} R-classes", r.value, r.factorization_count, r.partition.classes.len());
        }
        let rho = minimal_presentation(&s)?;
        for r in &rho {
            println!("  {r}");
        }
        println!("  uniquely presented: {}", is_uniquely_presented(&s)?);

        let bound = delta_bound(&s)?;
        let short = &rho[1..];
        println!(
            "  generates up to {bound}: {}; without the first relation: {}",
            verify_presentation(&s, &rho, bound)?,
            verify_presentation(&s, short, bound)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> deltakit::Result<()> {
    run_example()
}
