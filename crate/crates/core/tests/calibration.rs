use frustum::oracles::WienerCandidate;
use frustum::validate::{calibration_suite, run_validation, Fault, Verdict};

#[test]
fn default_suite_passes() {
    let report = run_validation(&calibration_suite(), Fault::None);
    let failures: Vec<String> = report
        .mandatory_failures()
        .map(|r| format!("{} {} t={:?}: expected {} measured {}", r.run, r.quantity, r.t, r.expected, r.measured))
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
    assert_eq!(report.wiener_recommended, Some(WienerCandidate::Recurrence));
    let product_sum = report.wiener.iter().find(|t| t.candidate == WienerCandidate::ProductSum).unwrap();
    assert!(product_sum.matched < product_sum.total);
}

#[test]
fn fault_flips_the_verdict() {
    let report = run_validation(&calibration_suite(), Fault::ConeOrderOffByOne);
    assert!(!report.passed());
    assert!(report
        .checks
        .iter()
        .filter(|r| r.quantity == "cone-order")
        .all(|r| r.verdict == Verdict::Mismatch));
}
