//! Seeded round-trip checks for every reduction case: 1000 instances each,
//! exact equality (the maps are coordinate re-labelings).

use uset_core::reductions::run_reduction_checks;

#[test]
fn all_reduction_cases_round_trip_exactly() {
    let outcomes = run_reduction_checks(20240, 1000);
    assert!(outcomes.len() >= 9);
    for outcome in &outcomes {
        assert_eq!(outcome.cases, 1000);
        assert_eq!(
            outcome.failures, 0,
            "reduction case '{}' had {} failures",
            outcome.name, outcome.failures
        );
    }
}

#[test]
fn reduction_checks_are_seed_deterministic() {
    let a = run_reduction_checks(7, 50);
    let b = run_reduction_checks(7, 50);
    assert_eq!(a, b);
}
