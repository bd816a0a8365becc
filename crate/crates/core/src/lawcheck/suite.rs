use std::collections::BTreeSet;

use super::laws::*;
use super::{GenerationBudget, Law, LawReport};
use crate::effect::{battery, battery_with_compositions, linearity_battery, Monad, Morphism};
use crate::error::Result;
use crate::traverse::Traversable;

/// Applicative laws for every battery descriptor and pairwise composition.
pub fn check_battery(budget: &GenerationBudget) -> Result<Vec<LawReport>> {
    battery_with_compositions()
        .iter()
        .map(|app| check_applicative_laws(app, budget))
        .collect()
}

/// Morphism laws for every morphism used by the naturality check.
pub fn check_morphism_battery(budget: &GenerationBudget) -> Result<Vec<LawReport>> {
    Morphism::battery()
        .iter()
        .map(|alpha| check_morphism(alpha, budget))
        .collect()
}

/// Runs the selected laws against `trav`. Battery-level laws (applicative,
/// morphism) come first; traversal laws follow in [`Law::TRAVERSAL`] order,
/// each followed by the instance's reference cases for that law.
pub fn run_suite(trav: &dyn Traversable, budget: &GenerationBudget, laws: &[Law]) -> Result<Vec<LawReport>> {
    let selected = |law: Law| laws.contains(&law);
    let mut reports = Vec::new();
    if selected(Law::Applicative) {
        reports.extend(check_battery(budget)?);
    }
    if selected(Law::Morphism) {
        reports.extend(check_morphism_battery(budget)?);
    }
    let references = trav.reference_cases();
    for law in Law::TRAVERSAL.into_iter().filter(|&l| selected(l)) {
        match law {
            Law::Unitarity => reports.push(check_unitarity(trav, budget)?),
            Law::Purity => {
                for app in battery() {
                    reports.push(check_purity(trav, &app, budget)?);
                }
            }
            Law::Linearity => {
                let apps = linearity_battery();
                for f in &apps {
                    for g in &apps {
                        reports.push(check_linearity(trav, f, g, budget)?);
                    }
                }
            }
            Law::Naturality => {
                for alpha in Morphism::battery() {
                    reports.push(check_naturality(trav, &alpha, budget)?);
                }
            }
            Law::Kleisli => reports.push(check_kleisli(trav, &Monad::option(), budget)?),
            Law::VisitOnce => reports.push(check_visit_once(trav, budget)?),
            Law::Applicative | Law::Morphism => unreachable!("not a traversal law"),
        }
        for case in references.iter().filter(|c| c.law == law) {
            reports.push(check_reference(trav, case)?);
        }
    }
    Ok(reports)
}

/// Laws with at least one failing report.
pub fn failing_laws(reports: &[LawReport]) -> BTreeSet<Law> {
    reports.iter().filter(|r| !r.passed()).map(|r| r.law).collect()
}
