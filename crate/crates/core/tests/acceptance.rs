//! End-to-end gate: runs the complete verification suite at its stated
//! tolerances and prints one line per check. Any failed line fails the
//! test; run with `--nocapture` to see the table on success too.

use discrimkit::verify::{run_all, VerifyConfig};

#[test]
fn full_verification_suite_passes() {
    let reports = run_all(&VerifyConfig::default()).expect("verification suite runs to completion");
    assert!(!reports.is_empty());
    let mut failures = Vec::new();
    for report in &reports {
        println!("{}", report.line());
        if !report.pass {
            failures.push(report.name.clone());
        }
    }
    assert!(failures.is_empty(), "failed checks: {failures:?}");
}
