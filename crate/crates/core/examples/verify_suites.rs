//! Runs every verification suite at reduced sizes and prints the counts.

use spectral_riesz::verify::{run_suite, Suite, VerifyParams};

fn main() -> spectral_riesz::Result<()> {
    for report in run_suite(Suite::All, &VerifyParams::quick())? {
        let worst = report.worst().map(|r| format!("{} at {:.4}", r.check, r.point)).unwrap_or_default();
        println!("{:<14} pass {:>7} fail {:>3} skipped {:>3}   tightest: {worst}", report.suite.to_string(), report.passed(), report.failed(), report.skipped);
    }
    Ok(())
}
