//! Run every bundled reference scenario and print a one-line verdict per
//! check. The same registry backs `expost fixtures --all`.
//!
//! Run with: cargo run --example reference_fixtures

use expost::fixtures::registry;

fn main() {
    let mut failures = 0;
    for record in registry() {
        println!("{} - {}", record.name, record.summary);
        let report = (record.run)();
        for check in &report.checks {
            let mark = if check.passed { "ok " } else { "FAIL" };
            println!("  [{mark}] {} ({})", check.check, check.detail);
            if !check.passed {
                failures += 1;
            }
        }
        println!();
    }
    if failures == 0 {
        println!("all fixtures passed");
    } else {
        println!("{failures} checks failed");
        std::process::exit(1);
    }
}
