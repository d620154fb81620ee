// Sets of lengths of single elements, and the streaming scanner behind them.

use deltakit::{delta_of_element, length_set, LengthScanner, NumericalSemigroup};

pub fn run_example() -> deltakit::Result<()> {
    let s = NumericalSemigroup::new(&[4, 9, 11])?;
    println!("L(36) = {}", length_set(&s, 36));
    println!("Δ(36) = {}", delta_of_element(&s, 36));

    // One pass computes every length set up to a bound.
    let mut scanner = LengthScanner::new(&s, 60);
    while let Some((x, lengths)) = scanner.advance() {
        if lengths.count() > 2 {
            println!("x = {x}: {}", lengths.to_length_set());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> deltakit::Result<()> {
    run_example()
}
