// Building family members and checking every predicted invariant.

use deltakit::families::{compare_symmetric_forms, family_gap49, family_minpres, verify_family};

pub fn run_example() -> deltakit::Result<()> {
    for family in [family_minpres(3, 2)?, family_minpres(2, 3)?, family_gap49(6)?] {
        let report = verify_family(&family)?;
        println!("{} = {}", family.id, family.semigroup);
        for c in &report.checks {
            println!("  {:<10} {}", c.status.to_string(), c.name);
        }
    }

    let cmp = compare_symmetric_forms(1, 3)?;
    println!(
        "{:?} has Δ = {}; the variant {:?} has Δ = {}",
        cmp.decomposition_form,
        cmp.decomposition_delta,
        cmp.variant_form,
        cmp.variant_delta.map(|d| d.to_string()).unwrap_or_else(|| "n/a".into())
    );

    let report = verify_family(&family_minpres(3, 2)?)?;
    println!("{}", serde_json::to_string(&report.checks[0])?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> deltakit::Result<()> {
    run_example()
}
