use traverse_laws::lawcheck::{
    check_linearity, check_unitarity, label_positions, replay, run_suite, visit_order,
    GenerationBudget, Law,
};
use traverse_laws::registry;
use traverse_laws::traverse::to_list;
use traverse_laws::Value;

#[test]
fn failing_reports_replay_to_unequal_sides() {
    let budget = GenerationBudget::default();
    for inst in registry::all(budget.max_structure_size) {
        let laws: Vec<Law> = [Law::Applicative, Law::Morphism].into_iter().chain(Law::TRAVERSAL).collect();
        let laws = if inst.name() == "list" { laws } else { Law::TRAVERSAL.to_vec() };
        for report in run_suite(&*inst, &budget, &laws).unwrap() {
            match &report.witness {
                None => assert!(report.passed()),
                Some(w) => {
                    assert!(!report.passed());
                    assert_ne!(w.lhs, w.rhs);
                    let (lhs, rhs) = replay(&report, &*inst).unwrap().unwrap();
                    assert_eq!((lhs, rhs), (w.lhs.clone(), w.rhs.clone()), "{} {}", inst.name(), report.law);
                }
            }
        }
    }
}

#[test]
fn runs_are_deterministic() {
    let budget = GenerationBudget::default();
    for name in ["list", "arity-2", "distL1", "distL2", "diagId"] {
        let inst = registry::instance(name, 3).unwrap();
        let first = run_suite(&*inst, &budget, &Law::TRAVERSAL).unwrap();
        let second = run_suite(&*inst, &budget, &Law::TRAVERSAL).unwrap();
        assert_eq!(first, second, "{name}");
    }
}

#[test]
fn visit_order_matches_to_list_for_lawful_instances() {
    for name in registry::LAWFUL {
        let inst = registry::instance(name, 3).unwrap();
        for skel in inst.skeletons(3) {
            let labelled = label_positions(&skel);
            let order = visit_order(&*inst, &skel).unwrap();
            let listed: Vec<usize> = to_list(&*inst, &labelled)
                .unwrap()
                .iter()
                .map(|v| match v {
                    Value::Token(t) => *t as usize,
                    other => panic!("unexpected {other}"),
                })
                .collect();
            assert_eq!(order, listed, "{name}");
            let mut sorted = order.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (0..skel.positions()).collect::<Vec<_>>());
        }
    }
}

#[test]
fn cap_marks_reports_truncated() {
    let budget = GenerationBudget {
        case_cap: 10,
        ..GenerationBudget::default()
    };
    let list = registry::instance("list", 3).unwrap();
    let report = check_unitarity(&*list, &budget).unwrap();
    assert!(report.passed());
    assert!(report.truncated);
    assert_eq!(report.cases_run, 10);

    let full = check_unitarity(&*list, &GenerationBudget::default()).unwrap();
    assert!(!full.truncated);
}

#[test]
fn larger_budgets_find_the_same_first_witness() {
    let diag = registry::instance("diagId", 3).unwrap();
    let list = traverse_laws::effect::list();
    let small = check_linearity(&*diag, &list, &list, &GenerationBudget::default()).unwrap();
    let wide = GenerationBudget {
        max_effect_width: 3,
        ..GenerationBudget::default()
    };
    let large = check_linearity(&*diag, &list, &list, &wide).unwrap();
    assert_eq!(small.witness.unwrap().input, large.witness.unwrap().input);
}

#[test]
fn suite_order_is_fixed() {
    let list = registry::instance("list", 3).unwrap();
    let reports = run_suite(&*list, &GenerationBudget::default(), &Law::TRAVERSAL).unwrap();
    let laws: Vec<Law> = reports.iter().map(|r| r.law).collect();
    let mut sorted = laws.clone();
    sorted.sort();
    assert_eq!(laws, sorted);
    // unitarity, 5 purity, 16 linearity, 7 naturality, kleisli, visit-once
    assert_eq!(reports.len(), 1 + 5 + 16 + 7 + 1 + 1);
}
