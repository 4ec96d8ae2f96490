//! Full acceptance suite at reference scale; prints one line per
//! criterion and fails if any does not hold.

use cyclefact::selftest::{run_all, Scale};

#[test]
fn acceptance() {
    let results = run_all(&Scale::acceptance());
    assert_eq!(results.len(), 7);
    for (i, r) in results.iter().enumerate() {
        println!(
            "criterion {} ({}): {} ({} ms) - {}",
            i + 1,
            r.name,
            if r.passed { "PASS" } else { "FAIL" },
            r.millis,
            r.detail
        );
    }
    assert!(
        results.iter().all(|r| r.passed),
        "acceptance criteria failed: {:?}",
        results
            .iter()
            .filter(|r| !r.passed)
            .map(|r| (r.name, r.detail.clone()))
            .collect::<Vec<_>>()
    );
}
