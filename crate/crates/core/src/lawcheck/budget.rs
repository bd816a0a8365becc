use crate::effect::{App, Effect};
use crate::value::{Func, Value};

/// Bounds for bounded-exhaustive generation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationBudget {
    /// Positions per generated structure.
    pub max_structure_size: usize,
    pub atom_domain: Vec<i64>,
    /// List lengths (and free-monoid word lengths) inside effects.
    pub max_effect_width: usize,
    /// Composition layers that receive non-pure samples.
    pub max_nesting: usize,
    /// Cases evaluated per check before the report is marked truncated.
    pub case_cap: usize,
}

impl Default for GenerationBudget {
    fn default() -> Self {
        GenerationBudget {
            max_structure_size: 3,
            atom_domain: vec![0, 1, 2],
            max_effect_width: 2,
            max_nesting: 2,
            case_cap: 1_000_000,
        }
    }
}

impl GenerationBudget {
    pub fn atoms(&self) -> Vec<Value> {
        self.atom_domain.iter().copied().map(Value::Atom).collect()
    }

    /// Function values used for the applicative laws.
    pub fn functions(&self) -> Vec<Value> {
        let zero = self.atom_domain.first().copied().unwrap_or(0);
        vec![
            Value::Func(Func::identity()),
            Value::Func(Func::succ()),
            Value::Func(Func::constant(Value::Atom(zero))),
        ]
    }

    pub fn effects(&self, app: &App, payloads: &[Value]) -> Vec<Effect> {
        app.samples(payloads, self.max_effect_width, self.max_nesting)
    }

    pub fn atom_effects(&self, app: &App) -> Vec<Effect> {
        self.effects(app, &self.atoms())
    }
}
