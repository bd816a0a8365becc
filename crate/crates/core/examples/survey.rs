//! Runs every traversal law against every registered instance and prints the
//! failing laws next to the declared ones.

use std::time::Instant;

use traverse_laws::lawcheck::{self, GenerationBudget, Law};
use traverse_laws::registry;

fn main() -> traverse_laws::Result<()> {
    let budget = GenerationBudget::default();
    for inst in registry::all(budget.max_structure_size) {
        let start = Instant::now();
        let reports = lawcheck::run_suite(&*inst, &budget, &Law::TRAVERSAL)?;
        let failing: Vec<_> = lawcheck::failing_laws(&reports).into_iter().collect();
        let declared = inst.expected_failures();
        let cases: usize = reports.iter().map(|r| r.cases_run).sum();
        println!(
            "{:<24} failing {:?} declared {:?} ({} cases, {:.2?})",
            inst.name(),
            failing,
            declared,
            cases,
            start.elapsed()
        );
    }
    Ok(())
}
