// The acceptance suite on its reduced grid, as `deltakit verify-all --quick`
// runs it.

use deltakit::verify::{run_criterion, VerifyOptions};

pub fn run_example() -> deltakit::Result<()> {
    let opts = VerifyOptions {
        quick: true,
        ..Default::default()
    };
    for id in [1, 4, 6, 8] {
        let report = run_criterion(id, &opts)?;
        println!("{report}");
        for f in &report.findings {
            println!("    finding: {f}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> deltakit::Result<()> {
    run_example()
}
