//! Bounded-exhaustive law checking.

mod budget;
mod generate;
mod laws;
mod report;
mod suite;

pub use budget::GenerationBudget;
pub use laws::{
    check_applicative_laws, check_kleisli, check_linearity, check_morphism, check_naturality,
    check_purity, check_reference, check_unitarity, check_visit_once, kleisli_sides,
    linearity_sides, naturality_sides, purity_sides, replay, unitarity_sides, visit_once_sides,
    visit_order,
};
pub use report::{Law, LawReport, ReferenceCase, Verdict, Witness};
pub use suite::{check_battery, check_morphism_battery, failing_laws, run_suite};

/// Labels the positions of a skeleton with tokens `#0 .. #n-1`.
pub fn label_positions(skeleton: &crate::traverse::Structure) -> crate::traverse::Structure {
    generate::label_positions(skeleton)
}
