// Enumerating every factorization of an element.

use deltakit::{factorizations_of, Factorizer, NumericalSemigroup};

pub fn run_example() -> deltakit::Result<()> {
    let s = NumericalSemigroup::new(&[4, 9, 11])?;
    for f in factorizations_of(&s, 36) {
        println!("36 = {f} . {s}  (length {})", f.length());
    }

    let fz = Factorizer::new(&s, 200);
    let busiest = (0..=200).max_by_key(|&x| fz.count(x)).unwrap_or(0);
    println!("most factorizations up to 200: {busiest} with {}", fz.count(busiest));
    Ok(())
}

#[allow(dead_code)]
fn main() -> deltakit::Result<()> {
    run_example()
}
