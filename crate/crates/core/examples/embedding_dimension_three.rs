// Three-generator semigroups: invariants, symmetric decompositions and the
// `{d, 2d}` shape of two-element delta sets.

use deltakit::embdim3::{ed3_report, symmetric_decomposition, symmetric_key_length_set};
use deltakit::{length_set, NumericalSemigroup};

pub fn run_example() -> deltakit::Result<()> {
    let s = NumericalSemigroup::new(&[4, 9, 11])?;
    let report = ed3_report(&s)?;
    if let Some(inv) = &report.invariants {
        println!("{s}: c = {:?}, δ = ({}, {}, {})", inv.c, inv.delta1, inv.delta2, inv.delta3);
    }
    println!("  Δ(S) = {} classified as {:?}", report.classification.delta, report.classification.kind);

    let t = NumericalSemigroup::new(&[8, 9, 15])?;
    let d = symmetric_decomposition(&t)?;
    println!("{t}: a = {}, m1 = {}, m2 = {}, b = {}, c = {}", d.a, d.m1, d.m2, d.b, d.c);
    println!(
        "  L({}) predicted {} and scanned {}",
        d.key_element(),
        symmetric_key_length_set(&d),
        length_set(&t, d.key_element())
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> deltakit::Result<()> {
    run_example()
}
