//! Run the complete verification suite programmatically and inspect the
//! machine-readable report. The CLI command `bellforge verify --suite all`
//! does exactly this at the full acceptance-grade budget.

use bellforge::verify::{run_suite, Suite, VerifyBudget};

fn main() {
    // A reduced budget keeps this example quick; drop the caps (or pass
    // --max-n/--max-r on the CLI) for the acceptance-grade grids.
    let budget = VerifyBudget {
        max_n: Some(6),
        max_r: Some(3),
    };

    for suite in [
        Suite::Bell,
        Suite::Stirling,
        Suite::Section2,
        Suite::Section3,
        Suite::Section4,
        Suite::Section5,
        Suite::Section6,
    ] {
        let report = run_suite(suite, budget);
        let failed = report.results.iter().filter(|r| !r.passed).count();
        println!(
            "suite {:<9} {} ({} checks, {} failed)",
            report.suite,
            if report.passed { "PASS" } else { "FAIL" },
            report.results.len(),
            failed
        );
        assert!(report.passed, "{}", report.to_json());
    }

    // The JSON schema carries every identity, its parameters, both sides,
    // and the tolerance used.
    let sample = run_suite(Suite::Bell, budget);
    println!("\nJSON shape of a report:");
    for line in sample.to_json().lines().take(14) {
        println!("{line}");
    }
    println!("...");
}
