//! Individual law checks.
//!
//! Each law is split in two: a `*_sides` function computing both sides of the
//! equation for one input, and a `check_*` function enumerating inputs within
//! a [`GenerationBudget`] and reporting the first failure. Witnesses can be
//! replayed through [`replay`].

use crate::effect::{
    applicative_by_name, compose, identity, App, Applicative, Effect, Identity, Monad, Morphism,
};
use crate::error::{Error, Result};
use crate::lawcheck::generate::{fill_all, first_failure, label_positions};
use crate::lawcheck::{GenerationBudget, Law, LawReport, ReferenceCase, Verdict, Witness};
use crate::traverse::{to_list, Structure, Traversable};
use crate::value::{Func, Value};

fn finish(mut report: LawReport, run: usize, truncated: bool, witness: Option<Witness>) -> LawReport {
    report.cases_run = run;
    report.truncated = truncated && witness.is_none();
    report.verdict = if witness.is_some() {
        Verdict::Fail
    } else {
        Verdict::Pass
    };
    report.witness = witness;
    report
}

/// Runs `sides` over every structure and compares under `judge`.
fn check_structures<S>(
    report: LawReport,
    structures: Vec<Structure>,
    truncated: bool,
    judge: &dyn Applicative,
    sides: S,
) -> Result<LawReport>
where
    S: Fn(&Structure) -> Result<(Effect, Effect)> + Sync,
{
    let (run, witness) = first_failure(&structures, |t| {
        let (lhs, rhs) = sides(t)?;
        Ok((!judge.eq(&lhs, &rhs)).then(|| Witness::new(Value::structure(t.clone()), lhs, rhs)))
    })?;
    Ok(finish(report, run, truncated, witness))
}

fn structures_over(trav: &dyn Traversable, budget: &GenerationBudget, pool: &[Value]) -> (Vec<Structure>, bool) {
    fill_all(&trav.skeletons(budget.max_structure_size), pool, budget.case_cap)
}

fn as_values(effects: Vec<Effect>) -> Vec<Value> {
    effects.into_iter().map(Value::effect).collect()
}

// ---- unitarity --------------------------------------------------------------

/// `dist (fmap Id t)` against `Id t`.
pub fn unitarity_sides(trav: &dyn Traversable, t: &Structure) -> Result<(Effect, Effect)> {
    let wrapped = trav.map(&|x| Ok(Value::effect(Effect::Id(x.clone()))), t)?;
    let lhs = trav.dist(&Identity, &wrapped)?;
    Ok((lhs, Effect::Id(Value::structure(t.clone()))))
}

pub fn check_unitarity(trav: &dyn Traversable, budget: &GenerationBudget) -> Result<LawReport> {
    let report = LawReport::new(Law::Unitarity, Some(trav.name()), vec!["Identity".into()]);
    let (structures, truncated) = structures_over(trav, budget, &budget.atoms());
    check_structures(report, structures, truncated, &Identity, |t| unitarity_sides(trav, t))
}

// ---- purity -----------------------------------------------------------------

/// `dist (fmap pure t)` against `pure t`.
pub fn purity_sides(trav: &dyn Traversable, app: &App, t: &Structure) -> Result<(Effect, Effect)> {
    let pured = trav.map(&|x| Ok(Value::effect(app.unit(x.clone()))), t)?;
    let lhs = trav.dist(&**app, &pured)?;
    Ok((lhs, app.unit(Value::structure(t.clone()))))
}

pub fn check_purity(trav: &dyn Traversable, app: &App, budget: &GenerationBudget) -> Result<LawReport> {
    let report = LawReport::new(Law::Purity, Some(trav.name()), vec![app.name()]);
    let (structures, truncated) = structures_over(trav, budget, &budget.atoms());
    check_structures(report, structures, truncated, &**app, |t| purity_sides(trav, app, t))
}

// ---- linearity --------------------------------------------------------------

/// `dist` at `F ∘ G` against `Comp . fmap dist . dist`. The payloads of `t`
/// are `Comp`-wrapped effects.
pub fn linearity_sides(
    trav: &dyn Traversable,
    outer: &App,
    inner: &App,
    t: &Structure,
) -> Result<(Effect, Effect)> {
    let composite = compose(outer.clone(), inner.clone());
    let lhs = trav.dist(&*composite, t)?;
    let unwrapped = trav.map(&|x| Ok(Value::effect(x.as_effect()?.un_comp()?.clone())), t)?;
    let first = trav.dist(&**outer, &unwrapped)?;
    let second = outer.map(
        &|s| Ok(Value::effect(trav.dist(&**inner, s.as_structure()?)?)),
        &first,
    )?;
    Ok((lhs, Effect::comp(second)))
}

pub fn check_linearity(
    trav: &dyn Traversable,
    outer: &App,
    inner: &App,
    budget: &GenerationBudget,
) -> Result<LawReport> {
    let composite = compose(outer.clone(), inner.clone());
    let report = LawReport::new(
        Law::Linearity,
        Some(trav.name()),
        vec![outer.name(), inner.name()],
    );
    let pool = as_values(budget.atom_effects(&composite));
    let (structures, truncated) = structures_over(trav, budget, &pool);
    check_structures(report, structures, truncated, &*composite, |t| {
        linearity_sides(trav, outer, inner, t)
    })
}

// ---- naturality -------------------------------------------------------------

/// `α_T . dist^F` against `dist^G . T α`.
pub fn naturality_sides(trav: &dyn Traversable, alpha: &Morphism, t: &Structure) -> Result<(Effect, Effect)> {
    let lhs = alpha.apply(&trav.dist(&**alpha.source(), t)?)?;
    let moved = trav.map(&|x| Ok(Value::effect(alpha.apply(x.as_effect()?)?)), t)?;
    let rhs = trav.dist(&**alpha.target(), &moved)?;
    Ok((lhs, rhs))
}

/// Refuses (with [`Error::Precondition`]) when `alpha` is not an applicative
/// morphism within the budget.
pub fn check_naturality(trav: &dyn Traversable, alpha: &Morphism, budget: &GenerationBudget) -> Result<LawReport> {
    let morphism = check_morphism(alpha, budget)?;
    if !morphism.passed() {
        return Err(Error::Precondition(format!(
            "{} is not an applicative morphism",
            alpha.name()
        )));
    }
    let mut report = LawReport::new(
        Law::Naturality,
        Some(trav.name()),
        vec![alpha.source().name(), alpha.target().name()],
    );
    report.morphism = Some(alpha.name().to_string());
    let pool = as_values(budget.atom_effects(alpha.source()));
    let (structures, truncated) = structures_over(trav, budget, &pool);
    check_structures(report, structures, truncated, &**alpha.target(), |t| {
        naturality_sides(trav, alpha, t)
    })
}

// ---- Kleisli composition ----------------------------------------------------

/// `flatten_T . M dist . dist_M` against `dist . T flatten`, for `t : T (M (M X))`
/// with raw (unwrapped) nested payloads.
pub fn kleisli_sides(trav: &dyn Traversable, monad: &Monad, t: &Structure) -> Result<(Effect, Effect)> {
    let m = monad.applicative();
    let outer = trav.dist(&**m, t)?;
    let nested = m.map(&|s| Ok(Value::effect(trav.dist(&**m, s.as_structure()?)?)), &outer)?;
    let lhs = monad.flatten(&nested)?;
    let flattened = trav.map(&|x| Ok(Value::effect(monad.flatten(x.as_effect()?)?)), t)?;
    let rhs = trav.dist(&**m, &flattened)?;
    Ok((lhs, rhs))
}

/// Refuses non-commutative monads, and monads whose flatten is not an
/// applicative morphism.
pub fn check_kleisli(trav: &dyn Traversable, monad: &Monad, budget: &GenerationBudget) -> Result<LawReport> {
    if !monad.is_commutative() {
        return Err(Error::Precondition(format!(
            "monad {} is not commutative",
            monad.name()
        )));
    }
    if !check_morphism(&monad.flatten_morphism(), budget)?.passed() {
        return Err(Error::Precondition(format!(
            "flatten of {} is not an applicative morphism",
            monad.name()
        )));
    }
    let m = monad.applicative();
    let report = LawReport::new(Law::Kleisli, Some(trav.name()), vec![m.name()]);
    let doubled = compose(m.clone(), m.clone());
    let pool = budget
        .atom_effects(&doubled)
        .iter()
        .map(|e| Ok(Value::effect(e.un_comp()?.clone())))
        .collect::<Result<Vec<_>>>()?;
    let (structures, truncated) = structures_over(trav, budget, &pool);
    check_structures(report, structures, truncated, &**m, |t| kleisli_sides(trav, monad, t))
}

// ---- visit once -------------------------------------------------------------

/// Traverses a position-labelled structure at `Const(Free)`. Returns the
/// observed token sequence and the labels in structural order.
pub fn visit_once_sides(trav: &dyn Traversable, labelled: &Structure) -> Result<(Vec<Value>, Vec<Value>)> {
    let observed = to_list(trav, labelled)?;
    let labels = labelled.payloads().into_iter().cloned().collect();
    Ok((observed, labels))
}

fn is_permutation(observed: &[Value], labels: &[Value]) -> bool {
    let ids = |vs: &[Value]| -> Option<Vec<u32>> {
        let mut ids = vs
            .iter()
            .map(|v| match v {
                Value::Token(t) => Some(*t),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        ids.sort_unstable();
        Some(ids)
    };
    matches!((ids(observed), ids(labels)), (Some(a), Some(b)) if a == b)
}

/// Positions of `skeleton` in the order the traversal visits them.
pub fn visit_order(trav: &dyn Traversable, skeleton: &Structure) -> Result<Vec<usize>> {
    let (observed, _) = visit_once_sides(trav, &label_positions(skeleton))?;
    observed
        .iter()
        .map(|v| match v {
            Value::Token(t) => Ok(*t as usize),
            other => Err(Error::mismatch("position token", other)),
        })
        .collect()
}

pub fn check_visit_once(trav: &dyn Traversable, budget: &GenerationBudget) -> Result<LawReport> {
    let report = LawReport::new(Law::VisitOnce, Some(trav.name()), vec!["Const(Free)".into()]);
    let mut structures: Vec<Structure> = trav
        .skeletons(budget.max_structure_size)
        .iter()
        .map(label_positions)
        .collect();
    let truncated = structures.len() > budget.case_cap;
    structures.truncate(budget.case_cap);
    let (run, witness) = first_failure(&structures, |t| {
        let (observed, labels) = visit_once_sides(trav, t)?;
        Ok((!is_permutation(&observed, &labels)).then(|| {
            Witness::new(
                Value::structure(t.clone()),
                Effect::Const(Value::Seq(observed)),
                Effect::Const(Value::Seq(labels)),
            )
        }))
    })?;
    Ok(finish(report, run, truncated, witness))
}

// ---- applicative laws -------------------------------------------------------

enum ApCase {
    Identity(Effect),
    Homomorphism(Value, Value),
    Interchange(Effect, Value),
    Composition(Effect, Effect, Effect),
    Coherence(Value, Value),
    UnitIsNu,
    Commutativity(Effect, Effect),
}

impl ApCase {
    fn clause(&self) -> &'static str {
        match self {
            ApCase::Identity(_) => "identity",
            ApCase::Homomorphism(..) => "homomorphism",
            ApCase::Interchange(..) => "interchange",
            ApCase::Composition(..) => "composition",
            ApCase::Coherence(..) => "coherence",
            ApCase::UnitIsNu => "unit",
            ApCase::Commutativity(..) => "commutativity",
        }
    }

    fn input(&self) -> Value {
        let e = |e: &Effect| Value::effect(e.clone());
        Value::Tuple(match self {
            ApCase::Identity(u) => vec![e(u)],
            ApCase::Homomorphism(g, x) => vec![g.clone(), x.clone()],
            ApCase::Interchange(u, x) => vec![e(u), x.clone()],
            ApCase::Composition(u, v, w) => vec![e(u), e(v), e(w)],
            ApCase::Coherence(x, y) => vec![x.clone(), y.clone()],
            ApCase::UnitIsNu => vec![],
            ApCase::Commutativity(u, v) => vec![e(u), e(v)],
        })
    }

    fn from_input(clause: &str, input: &Value) -> Result<ApCase> {
        let Value::Tuple(items) = input else {
            return Err(Error::mismatch("tuple", input));
        };
        let eff = |i: usize| -> Result<Effect> {
            items
                .get(i)
                .ok_or(Error::LengthMismatch { expected: i + 1, found: items.len() })?
                .as_effect()
                .cloned()
        };
        let val = |i: usize| -> Result<Value> {
            items
                .get(i)
                .cloned()
                .ok_or(Error::LengthMismatch { expected: i + 1, found: items.len() })
        };
        Ok(match clause {
            "identity" => ApCase::Identity(eff(0)?),
            "homomorphism" => ApCase::Homomorphism(val(0)?, val(1)?),
            "interchange" => ApCase::Interchange(eff(0)?, val(1)?),
            "composition" => ApCase::Composition(eff(0)?, eff(1)?, eff(2)?),
            "coherence" => ApCase::Coherence(val(0)?, val(1)?),
            "unit" => ApCase::UnitIsNu,
            "commutativity" => ApCase::Commutativity(eff(0)?, eff(1)?),
            other => return Err(Error::Precondition(format!("unknown clause `{other}`"))),
        })
    }

    fn sides(&self, app: &dyn Applicative) -> Result<(Effect, Effect)> {
        Ok(match self {
            ApCase::Identity(u) => (app.ap(&app.pure(Value::Func(Func::identity())), u)?, u.clone()),
            ApCase::Homomorphism(g, x) => (
                app.ap(&app.pure(g.clone()), &app.pure(x.clone()))?,
                app.pure(g.as_func()?.call(x)?),
            ),
            ApCase::Interchange(u, x) => (
                app.ap(u, &app.pure(x.clone()))?,
                app.ap(&app.pure(Value::Func(Func::apply_to(x.clone()))), u)?,
            ),
            ApCase::Composition(u, v, w) => {
                let composed = app.ap(&app.ap(&app.pure(Value::Func(Func::compose_op())), u)?, v)?;
                (app.ap(&composed, w)?, app.ap(u, &app.ap(v, w)?)?)
            }
            ApCase::Coherence(x, y) => (
                app.mult(&app.unit(x.clone()), &app.unit(y.clone()))?,
                app.unit(Value::pair(x.clone(), y.clone())),
            ),
            ApCase::UnitIsNu => (app.unit(Value::unit()), app.nu()),
            ApCase::Commutativity(u, v) => (app.mult(u, v)?, app.map(&Value::swap, &app.mult(v, u)?)?),
        })
    }
}

/// The four applicative laws, unit/multiplication coherence, `η_1 = ν`, and
/// (for descriptors flagged commutative) `F swap . μ = μ . swap`.
pub fn check_applicative_laws(app: &App, budget: &GenerationBudget) -> Result<LawReport> {
    let report = LawReport::new(Law::Applicative, None, vec![app.name()]);
    let atoms = budget.atoms();
    let values = budget.atom_effects(app);
    let funcs = budget.functions();
    let func_effects = budget.effects(app, &funcs);

    let mut cases = Vec::new();
    cases.extend(values.iter().cloned().map(ApCase::Identity));
    for g in &funcs {
        for x in &atoms {
            cases.push(ApCase::Homomorphism(g.clone(), x.clone()));
        }
    }
    for u in &func_effects {
        for x in &atoms {
            cases.push(ApCase::Interchange(u.clone(), x.clone()));
        }
    }
    'composition: for u in &func_effects {
        for v in &func_effects {
            for w in &values {
                if cases.len() >= budget.case_cap {
                    break 'composition;
                }
                cases.push(ApCase::Composition(u.clone(), v.clone(), w.clone()));
            }
        }
    }
    for x in &atoms {
        for y in &atoms {
            cases.push(ApCase::Coherence(x.clone(), y.clone()));
        }
    }
    cases.push(ApCase::UnitIsNu);
    if app.is_commutative() {
        for u in &values {
            for v in &values {
                cases.push(ApCase::Commutativity(u.clone(), v.clone()));
            }
        }
    }
    let truncated = cases.len() > budget.case_cap;
    cases.truncate(budget.case_cap);

    let (run, witness) = first_failure(&cases, |c| {
        let (lhs, rhs) = c.sides(&**app)?;
        Ok((!app.eq(&lhs, &rhs)).then(|| Witness::new(c.input(), lhs, rhs).with_clause(c.clause())))
    })?;
    Ok(finish(report, run, truncated, witness))
}

// ---- applicative morphisms --------------------------------------------------

enum MorphismCase {
    Unit(Value),
    Mult(Effect, Effect),
}

impl MorphismCase {
    fn clause(&self) -> &'static str {
        match self {
            MorphismCase::Unit(_) => "unit",
            MorphismCase::Mult(..) => "mult",
        }
    }

    fn input(&self) -> Value {
        match self {
            MorphismCase::Unit(x) => Value::Tuple(vec![x.clone()]),
            MorphismCase::Mult(u, v) => Value::Tuple(vec![Value::effect(u.clone()), Value::effect(v.clone())]),
        }
    }

    fn sides(&self, alpha: &Morphism) -> Result<(Effect, Effect)> {
        let (f, g) = (alpha.source(), alpha.target());
        Ok(match self {
            MorphismCase::Unit(x) => (alpha.apply(&f.unit(x.clone()))?, g.unit(x.clone())),
            MorphismCase::Mult(u, v) => (
                alpha.apply(&f.mult(u, v)?)?,
                g.mult(&alpha.apply(u)?, &alpha.apply(v)?)?,
            ),
        })
    }
}

/// The unit triangle and multiplication square of an applicative morphism.
pub fn check_morphism(alpha: &Morphism, budget: &GenerationBudget) -> Result<LawReport> {
    let mut report = LawReport::new(
        Law::Morphism,
        None,
        vec![alpha.source().name(), alpha.target().name()],
    );
    report.morphism = Some(alpha.name().to_string());
    let sources = budget.atom_effects(alpha.source());
    let mut cases: Vec<MorphismCase> = budget.atoms().into_iter().map(MorphismCase::Unit).collect();
    for u in &sources {
        for v in &sources {
            cases.push(MorphismCase::Mult(u.clone(), v.clone()));
        }
    }
    let truncated = cases.len() > budget.case_cap;
    cases.truncate(budget.case_cap);
    let target = alpha.target();
    let (run, witness) = first_failure(&cases, |c| {
        let (lhs, rhs) = c.sides(alpha)?;
        Ok((!target.eq(&lhs, &rhs)).then(|| Witness::new(c.input(), lhs, rhs).with_clause(c.clause())))
    })?;
    Ok(finish(report, run, truncated, witness))
}

// ---- reference cases and replay ---------------------------------------------

/// Evaluates one hand-picked input; supports unitarity, purity and linearity.
pub fn check_reference(trav: &dyn Traversable, case: &ReferenceCase) -> Result<LawReport> {
    let names = case.applicatives.iter().map(|a| a.name()).collect();
    let mut report = LawReport::new(case.law, Some(trav.name()), names);
    report.reference = true;
    let (judge, (lhs, rhs)) = match (case.law, case.applicatives.as_slice()) {
        (Law::Unitarity, []) => (identity(), unitarity_sides(trav, &case.input)?),
        (Law::Purity, [f]) => (f.clone(), purity_sides(trav, f, &case.input)?),
        (Law::Linearity, [f, g]) => (
            compose(f.clone(), g.clone()),
            linearity_sides(trav, f, g, &case.input)?,
        ),
        (law, apps) => {
            return Err(Error::Precondition(format!(
                "no reference evaluation for {law} at {} applicatives",
                apps.len()
            )))
        }
    };
    let witness =
        (!judge.eq(&lhs, &rhs)).then(|| Witness::new(Value::structure(case.input.clone()), lhs, rhs));
    Ok(finish(report, 1, false, witness))
}

fn app_named(report: &LawReport, i: usize) -> Result<App> {
    let name = report
        .applicatives
        .get(i)
        .ok_or_else(|| Error::Precondition("report names too few applicatives".into()))?;
    applicative_by_name(name).ok_or_else(|| Error::Precondition(format!("unknown applicative {name}")))
}

fn morphism_named(report: &LawReport) -> Result<Morphism> {
    let name = report.morphism.as_deref().unwrap_or_default();
    Morphism::by_name(name).ok_or_else(|| Error::Precondition(format!("unknown morphism `{name}`")))
}

/// Recomputes both sides of a report's witness from its input and the names
/// recorded in the report. `None` when there is no witness.
pub fn replay(report: &LawReport, trav: &dyn Traversable) -> Result<Option<(Effect, Effect)>> {
    let Some(w) = &report.witness else {
        return Ok(None);
    };
    let structure = || w.input.as_structure();
    let sides = match report.law {
        Law::Unitarity => unitarity_sides(trav, structure()?)?,
        Law::Purity => purity_sides(trav, &app_named(report, 0)?, structure()?)?,
        Law::Linearity => linearity_sides(trav, &app_named(report, 0)?, &app_named(report, 1)?, structure()?)?,
        Law::Naturality => naturality_sides(trav, &morphism_named(report)?, structure()?)?,
        Law::Kleisli => {
            let name = report.applicatives.first().map(String::as_str).unwrap_or_default();
            let monad = Monad::by_name(name)
                .ok_or_else(|| Error::Precondition(format!("unknown monad `{name}`")))?;
            kleisli_sides(trav, &monad, structure()?)?
        }
        Law::VisitOnce => {
            let (observed, labels) = visit_once_sides(trav, structure()?)?;
            (Effect::Const(Value::Seq(observed)), Effect::Const(Value::Seq(labels)))
        }
        Law::Applicative => {
            let clause = w.clause.as_deref().unwrap_or_default();
            ApCase::from_input(clause, &w.input)?.sides(&*app_named(report, 0)?)?
        }
        Law::Morphism => {
            let alpha = morphism_named(report)?;
            let items = match &w.input {
                Value::Tuple(items) => items.as_slice(),
                other => return Err(Error::mismatch("tuple", other)),
            };
            let case = match (w.clause.as_deref(), items) {
                (Some("unit"), [x]) => MorphismCase::Unit(x.clone()),
                (Some("mult"), [u, v]) => MorphismCase::Mult(u.as_effect()?.clone(), v.as_effect()?.clone()),
                _ => return Err(Error::Precondition("malformed morphism witness".into())),
            };
            case.sides(&alpha)?
        }
    };
    Ok(Some(sides))
}
