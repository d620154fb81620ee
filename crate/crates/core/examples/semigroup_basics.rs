// Construction, minimalization, Apéry sets, gaps and symmetry.

use deltakit::NumericalSemigroup;

pub fn run_example() -> deltakit::Result<()> {
    let c = NumericalSemigroup::construct(&[11, 4, 9, 8])?;
    let s = c.semigroup;
    println!("input was minimal: {}; minimal generators {s}", c.input_was_minimal);
    println!("Apéry set of {s} with respect to 4: {:?}", s.apery(4)?);
    println!("Frobenius number: {}", s.frobenius());

    let gaps = s.gap_profile();
    println!("gaps: {:?} (genus {})", gaps.gaps, gaps.genus);

    for gens in [&[2u64, 5][..], &[8, 9, 15], &[4, 6, 9], &[4, 9, 11]] {
        let t = NumericalSemigroup::new(gens)?;
        println!("{t} symmetric: {}", t.is_symmetric()?);
    }

    match NumericalSemigroup::new(&[4, 6]) {
        Err(e) => println!("<4,6> rejected: {e}"),
        Ok(t) => println!("unexpectedly accepted {t}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> deltakit::Result<()> {
    run_example()
}
