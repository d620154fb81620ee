//! Acceptance suite: every criterion at full size, one verdict line each.
//! Runs without the libtest harness so the verdicts always reach stdout.

use std::process::ExitCode;

use deltakit::verify::{run_all, VerifyOptions};

fn main() -> ExitCode {
    let quick = std::env::var_os("DELTAKIT_QUICK").is_some();
    let reports = run_all(&VerifyOptions {
        quick,
        ..Default::default()
    });
    println!("acceptance ({}):", if quick { "quick grid" } else { "full grid" });
    for r in &reports {
        println!("{r}");
        for d in r.details.iter().filter(|d| d.starts_with("FAIL")) {
            println!("    {d}");
        }
        for f in &r.findings {
            println!("    finding: {f}");
        }
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("{} of {} criteria passed", reports.len() - failed, reports.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
