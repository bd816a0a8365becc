//! Acceptance criteria. Runs without the libtest harness: every criterion
//! prints one `PASS`/`FAIL` line, and the process exits non-zero if any
//! criterion failed.
//!
//! All comparisons are exact structural equality; there are no numeric
//! tolerances. Budgets are the defaults (size 3, atoms {0,1,2}, width 2,
//! nesting 2) unless a criterion says otherwise.

use std::collections::BTreeSet;

use traverse_laws::container::{
    bin_container, canonical_dist, decode_bin, decode_list, encode_bin, encode_list, list_container,
    mu_k,
};
use traverse_laws::effect::{battery, compose, list, App, Effect, Monad};
use traverse_laws::lawcheck::{
    check_battery, check_kleisli, check_linearity, check_purity, check_reference, check_unitarity,
    failing_laws, run_suite, GenerationBudget, Law,
};
use traverse_laws::registry;
use traverse_laws::rogue::{diagonal_identity_dist, diagonal_witness_input, dist_l_double_prime, double_prime_witness_input};
use traverse_laws::traverse::{BinTraversable, ListTraversable};
use traverse_laws::{Error, Func, Result, Structure, Traversable, Value};

fn verdict(id: u8, title: &str, failures: &[String], detail: &str) -> bool {
    if failures.is_empty() {
        println!("[AC{id}] PASS  {title} ({detail})");
    } else {
        println!("[AC{id}] FAIL  {title} ({detail})");
        for f in failures {
            println!("        {f}");
        }
    }
    failures.is_empty()
}

fn budget() -> GenerationBudget {
    GenerationBudget::default()
}

/// Every filling of every skeleton from `pool`.
fn fillings(skeletons: &[Structure], pool: &[Value]) -> Vec<Structure> {
    let mut out = Vec::new();
    for skel in skeletons {
        let n = skel.positions();
        let total = pool.len().pow(n as u32);
        for mut code in 0..total {
            let mut payload = vec![Value::unit(); n];
            for slot in payload.iter_mut().rev() {
                *slot = pool[code % pool.len()].clone();
                code /= pool.len();
            }
            out.push(skel.fill(payload).unwrap());
        }
    }
    out
}

fn ac1_applicative_battery_soundness() -> bool {
    let reports = check_battery(&budget()).unwrap();
    let mut failures: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed() || r.truncated)
        .map(|r| format!("{:?}: {:?}", r.applicatives, r.witness))
        .collect();
    if reports.len() != 30 {
        failures.push(format!("expected 30 descriptors, checked {}", reports.len()));
    }
    let cases: usize = reports.iter().map(|r| r.cases_run).sum();
    verdict(
        1,
        "applicative laws + coherence for 5 base descriptors and 25 compositions",
        &failures,
        &format!("{} descriptors, {cases} cases", reports.len()),
    )
}

fn ac2_lawful_instances_pass_every_law() -> bool {
    let b = budget();
    let names = [
        "list", "bin", "id", "list-container", "bin-container", "arity-0", "arity-1", "arity-2", "arity-3",
    ];
    let mut failures = Vec::new();
    let mut cases = 0;
    for name in names {
        let inst = registry::instance(name, b.max_structure_size).unwrap();
        for r in run_suite(&*inst, &b, &Law::TRAVERSAL).unwrap() {
            cases += r.cases_run;
            if !r.passed() || r.truncated {
                failures.push(format!("{name} {} {:?}: {:?}", r.law, r.applicatives, r.witness));
            }
        }
    }
    verdict(
        2,
        "lawful and container instances pass all six traversal laws",
        &failures,
        &format!("{} instances, {cases} cases", names.len()),
    )
}

fn oracle_mismatches<E, D>(
    app: &App,
    native: &dyn Traversable,
    structures: &[Structure],
    encode: E,
    decode: D,
    container: &traverse_laws::container::FiniteContainer,
) -> Vec<String>
where
    E: Fn(&Structure) -> traverse_laws::container::ContainerValue,
    D: Fn(&Value) -> Result<Value>,
{
    let mut out = Vec::new();
    for t in structures {
        let expected = native.dist(&**app, t).unwrap();
        let got = canonical_dist(container, &**app, &encode(t)).unwrap();
        let decoded = app.map(&decode, &got).unwrap();
        if decoded != expected {
            out.push(format!("{} on {t}: {decoded} vs {expected}", app.name()));
        }
    }
    out
}

fn ac3_canonical_dist_matches_hand_written_instances() -> bool {
    let b = budget();
    let lists = list_container(3);
    let bins = bin_container(3);
    let mut failures = Vec::new();
    let mut cases = 0;
    for app in battery() {
        let pool: Vec<Value> = b.atom_effects(&app).into_iter().map(Value::effect).collect();

        let list_inputs = fillings(&ListTraversable.skeletons(3), &pool);
        cases += list_inputs.len();
        failures.extend(oracle_mismatches(
            &app,
            &ListTraversable,
            &list_inputs,
            |t| encode_list(t.as_list().unwrap(), 3).unwrap(),
            |v| match v.as_structure()? {
                Structure::Container(c) => Ok(Value::structure(Structure::List(decode_list(c)?))),
                other => Err(Error::TypeMismatch { expected: "container", found: other.to_string() }),
            },
            &lists,
        ));

        let bin_inputs = fillings(&BinTraversable.skeletons(3), &pool);
        cases += bin_inputs.len();
        failures.extend(oracle_mismatches(
            &app,
            &BinTraversable,
            &bin_inputs,
            |t| match t {
                Structure::Bin(t) => encode_bin(t, 3).unwrap(),
                _ => unreachable!(),
            },
            |v| match v.as_structure()? {
                Structure::Container(c) => Ok(Value::structure(Structure::Bin(decode_bin(c)?))),
                other => Err(Error::TypeMismatch { expected: "container", found: other.to_string() }),
            },
            &bins,
        ));
    }
    verdict(
        3,
        "canonical container dist equals hand-written List and Bin dist",
        &failures,
        &format!("{cases} structures over 5 applicatives"),
    )
}

fn ac4_paper_witnesses_reproduced() -> bool {
    let ll = compose(list(), list());
    let mut failures = Vec::new();

    let diag_lhs = match diagonal_witness_input() {
        Structure::Id(u) => diagonal_identity_dist(&*ll, u.as_effect().unwrap()).unwrap(),
        _ => unreachable!(),
    };
    if diag_lhs.to_string() != "[[],[],[],[1]]" {
        failures.push(format!("diagonal lhs {diag_lhs}"));
    }
    let dp_lhs = dist_l_double_prime(&*ll, double_prime_witness_input().as_list().unwrap()).unwrap();
    if dp_lhs.to_string() != "[[],[],[],[[[1]]]]" {
        failures.push(format!("distL'' lhs {dp_lhs}"));
    }

    for (name, expected_lhs) in [("diagId", &diag_lhs), ("distL2", &dp_lhs)] {
        let inst = registry::instance(name, 3).unwrap();
        for case in inst.reference_cases() {
            let r = check_reference(&*inst, &case).unwrap();
            match &r.witness {
                Some(w) if !r.passed() && w.lhs != w.rhs && &w.lhs == expected_lhs => {
                    println!("        {name}: {} -> lhs {} rhs {}", w.input, w.lhs, w.rhs)
                }
                _ => failures.push(format!("{name}: reference linearity report {r:?}")),
            }
        }
        let exhaustive = check_linearity(&*inst, &list(), &list(), &budget()).unwrap();
        if exhaustive.passed() {
            failures.push(format!("{name}: exhaustive linearity at List,List passed"));
        }
    }
    verdict(4, "paper linearity witnesses reproduced bit-exactly", &failures, "List∘List")
}

fn ac5_rogue_failure_patterns() -> bool {
    use Law::*;
    let b = budget();
    let expected: [(&str, &str, &[Law]); 4] = [
        ("distL", "distL", &[Unitarity, Purity, VisitOnce]),
        ("distL1", "distL'", &[Unitarity, Purity, VisitOnce]),
        ("distL2", "distL''", &[Linearity, VisitOnce]),
        ("diagId", "diagId", &[Linearity, VisitOnce]),
    ];
    let mut failures = Vec::new();
    for (name, label, pattern) in expected {
        let inst = registry::instance(name, 3).unwrap();
        let reports = run_suite(&*inst, &b, &Law::TRAVERSAL).unwrap();
        let observed = failing_laws(&reports);
        let pattern: BTreeSet<Law> = pattern.iter().copied().collect();
        let line = format!("{label}: fails {observed:?}, criterion {pattern:?}");
        println!("        {line}");
        if observed != pattern {
            let mut shown = BTreeSet::new();
            let extra: Vec<String> = reports
                .iter()
                .filter(|r| !r.passed() && !pattern.contains(&r.law) && shown.insert(r.law))
                .map(|r| {
                    let w = r.witness.as_ref().unwrap();
                    format!("{} at {:?}: input {} lhs {} rhs {}", r.law, r.applicatives, w.input, w.lhs, w.rhs)
                })
                .collect();
            failures.push(format!("{line}; extra failures e.g. {extra:?}"));
        }
    }
    verdict(5, "rogue instances fail exactly their documented laws", &failures, "full traversal suite")
}

fn ac6_purity_iff_unitarity() -> bool {
    let b = budget();
    let mut failures = Vec::new();
    let instances = registry::all(b.max_structure_size);
    for inst in &instances {
        let unitarity = check_unitarity(&**inst, &b).unwrap().passed();
        let purity = battery()
            .iter()
            .all(|app| check_purity(&**inst, app, &b).unwrap().passed());
        if unitarity != purity {
            failures.push(format!("{}: unitarity {unitarity}, purity {purity}", inst.name()));
        }
    }
    verdict(
        6,
        "unitarity verdict equals conjunction of purity verdicts",
        &failures,
        &format!("{} registered instances", instances.len()),
    )
}

fn ac7_kleisli_lemma() -> bool {
    let b = budget();
    let mut failures = Vec::new();
    for name in registry::LAWFUL {
        let inst = registry::instance(name, 3).unwrap();
        let r = check_kleisli(&*inst, &Monad::option(), &b).unwrap();
        if !r.passed() || r.truncated {
            failures.push(format!("{name}: {:?}", r.witness));
        }
    }
    let list_inst = registry::instance("list", 3).unwrap();
    match check_kleisli(&*list_inst, &Monad::list(), &b) {
        Err(Error::Precondition(_)) => {}
        other => failures.push(format!("List monad was not refused: {other:?}")),
    }
    verdict(
        7,
        "Kleisli square commutes for Option on lawful instances; List monad refused",
        &failures,
        &format!("{} instances", registry::LAWFUL.len()),
    )
}

/// `pure (\x1 .. xk -> <x1..xk>) ⊛ u1 ⊛ .. ⊛ uk`, an applicative-style oracle
/// for `μ^k` that shares no code with it.
fn tuple_via_ap(app: &App, us: &[Effect]) -> Effect {
    fn collector(k: usize, acc: Vec<Value>) -> Value {
        if k == 0 {
            return Value::Tuple(acc);
        }
        Value::Func(Func::new(format!("tuple{k}"), move |x| {
            let mut next = acc.clone();
            next.push(x.clone());
            Ok(collector(k - 1, next))
        }))
    }
    us.iter()
        .fold(app.pure(collector(us.len(), Vec::new())), |acc, u| app.ap(&acc, u).unwrap())
}

fn tuples(pool: &[Effect], k: usize) -> Vec<Vec<Effect>> {
    (0..k).fold(vec![Vec::new()], |acc, _| {
        acc.iter()
            .flat_map(|prefix| {
                pool.iter().map(move |u| {
                    let mut t = prefix.clone();
                    t.push(u.clone());
                    t
                })
            })
            .collect()
    })
}

fn mu_k_failures(f: &App, g: &App, b: &GenerationBudget) -> (usize, Vec<String>) {
    let fg = compose(f.clone(), g.clone());
    let pool = b.atom_effects(&fg);
    let mut failures = Vec::new();
    let mut cases = 0;
    for k in 0..=4 {
        for us in tuples(&pool, k) {
            cases += 1;
            let lhs = mu_k(&*fg, k, &us).unwrap();
            let outer: Vec<Effect> = us.iter().map(|u| u.un_comp().unwrap().clone()).collect();
            let rhs = Effect::comp(
                f.map(
                    &|t| {
                        let inner = t.clone().into_tuple()?.into_iter().map(Value::into_effect).collect::<Result<Vec<_>>>()?;
                        Ok(Value::effect(mu_k(&**g, k, &inner)?))
                    },
                    &mu_k(&**f, k, &outer).unwrap(),
                )
                .unwrap(),
            );
            if lhs != rhs {
                failures.push(format!("kernel {} k={k}: {lhs} vs {rhs}", fg.name()));
            }
            let clause = match us.split_first() {
                None => fg.nu(),
                Some((u, [])) => fg.map(&|x| Ok(Value::Tuple(vec![x.clone()])), u).unwrap(),
                Some((u, rest)) => fg
                    .map(
                        &|p| {
                            let (x, xs) = p.as_pair()?;
                            let mut items = vec![x.clone()];
                            items.extend(xs.clone().into_tuple()?);
                            Ok(Value::Tuple(items))
                        },
                        &fg.mult(u, &mu_k(&*fg, k - 1, rest).unwrap()).unwrap(),
                    )
                    .unwrap(),
            };
            if lhs != clause {
                failures.push(format!("defining clause {} k={k}: {lhs} vs {clause}", fg.name()));
            }
            if lhs != tuple_via_ap(&fg, &us) {
                failures.push(format!("ap oracle {} k={k}", fg.name()));
            }
            if failures.len() > 5 {
                return (cases, failures);
            }
        }
    }
    (cases, failures)
}

fn ac8_mu_k_recursion() -> bool {
    let b = budget();
    let pairs: Vec<(App, App)> = battery()
        .into_iter()
        .flat_map(|f| battery().into_iter().map(move |g| (f.clone(), g)))
        .collect();
    let results: Vec<(usize, Vec<String>)> = std::thread::scope(|s| {
        let handles: Vec<_> = pairs
            .iter()
            .map(|(f, g)| {
                let b = &b;
                s.spawn(move || mu_k_failures(f, g, b))
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let cases: usize = results.iter().map(|r| r.0).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    verdict(
        8,
        "mu_k defining clauses and composition kernel, k <= 4",
        &failures,
        &format!("{} applicative pairs, {cases} effect tuples", pairs.len()),
    )
}

fn main() -> std::process::ExitCode {
    let criteria: [(u8, fn() -> bool); 8] = [
        (1, ac1_applicative_battery_soundness),
        (2, ac2_lawful_instances_pass_every_law),
        (3, ac3_canonical_dist_matches_hand_written_instances),
        (4, ac4_paper_witnesses_reproduced),
        (5, ac5_rogue_failure_patterns),
        (6, ac6_purity_iff_unitarity),
        (7, ac7_kleisli_lemma),
        (8, ac8_mu_k_recursion),
    ];
    let mut failed = Vec::new();
    for (id, criterion) in criteria {
        let passed = std::panic::catch_unwind(criterion).unwrap_or_else(|_| {
            println!("[AC{id}] FAIL  panicked");
            false
        });
        if !passed {
            failed.push(id);
        }
    }
    println!(
        "acceptance: {} of {} criteria passed{}",
        criteria.len() - failed.len(),
        criteria.len(),
        if failed.is_empty() { String::new() } else { format!("; failed: {failed:?}") }
    );
    if failed.is_empty() {
        std::process::ExitCode::SUCCESS
    } else {
        std::process::ExitCode::FAILURE
    }
}
