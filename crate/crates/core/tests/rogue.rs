use std::collections::BTreeSet;

use traverse_laws::effect::list;
use traverse_laws::lawcheck::{
    check_linearity, check_reference, failing_laws, linearity_sides, run_suite, GenerationBudget, Law,
};
use traverse_laws::registry;
use traverse_laws::rogue::{
    diagonal_witness_input, double_prime_witness_input, DiagId, DistL, DistL1, DistL2,
};
use traverse_laws::traverse::to_list;
use traverse_laws::{Structure, Traversable, Value};

#[test]
fn declared_patterns_match_observed_failures() {
    let budget = GenerationBudget::default();
    for name in registry::ROGUE {
        let inst = registry::instance(name, 3).unwrap();
        let reports = run_suite(&*inst, &budget, &Law::TRAVERSAL).unwrap();
        let declared: BTreeSet<Law> = inst.expected_failures().into_iter().collect();
        assert_eq!(failing_laws(&reports), declared, "{name}");
    }
}

#[test]
fn diagonal_witness_lhs_is_exact() {
    let ll = list();
    let (lhs, rhs) = linearity_sides(&DiagId, &ll, &ll, &diagonal_witness_input()).unwrap();
    assert_eq!(lhs.to_string(), "[[],[],[],[1]]");
    assert_ne!(lhs, rhs);
}

#[test]
fn double_prime_witness_lhs_is_exact() {
    let ll = list();
    let (lhs, rhs) = linearity_sides(&DistL2, &ll, &ll, &double_prime_witness_input()).unwrap();
    assert_eq!(lhs.to_string(), "[[],[],[],[[[1]]]]");
    assert_eq!(rhs.to_string(), "[[],[],[[[1]]],[[[1]]]]");
}

#[test]
fn reference_cases_are_replayed_as_failures() {
    for inst in [&DiagId as &dyn Traversable, &DistL2] {
        for case in inst.reference_cases() {
            let report = check_reference(inst, &case).unwrap();
            assert!(!report.passed() && report.reference);
        }
    }
}

#[test]
fn double_prime_collects_each_effect_twice() {
    let t = Structure::List(vec![Value::Token(0), Value::Token(1)]);
    let seen = to_list(&DistL2, &t).unwrap();
    assert_eq!(Value::Seq(seen).to_string(), "[#0,#0,#1,#1]");
    assert_eq!(Value::Seq(to_list(&DistL1, &t).unwrap()).to_string(), "[#0]");
    assert!(to_list(&DistL, &t).unwrap().is_empty());
}

#[test]
fn double_prime_passes_unitarity_but_not_linearity() {
    let budget = GenerationBudget::default();
    let reports = run_suite(&DistL2, &budget, &[Law::Unitarity, Law::Linearity, Law::VisitOnce]).unwrap();
    let failing = failing_laws(&reports);
    assert!(!failing.contains(&Law::Unitarity));
    assert!(failing.contains(&Law::Linearity) && failing.contains(&Law::VisitOnce));
}

#[test]
fn prime_drops_the_last_element_at_identity_composites() {
    // Under composition the last element is dropped twice on the right-hand side.
    let id = traverse_laws::effect::identity();
    let report = check_linearity(&DistL1, &id, &id, &GenerationBudget::default()).unwrap();
    let w = report.witness.unwrap();
    assert_eq!(w.lhs.to_string(), "Id(Id([0]))");
    assert_eq!(w.rhs.to_string(), "Id(Id([]))");
}

