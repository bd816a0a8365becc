//! Distributive laws that type-check but are not traversals.
//!
//! They are shipped as ordinary [`Traversable`] descriptors so the checker
//! (and the command line) can demonstrate exactly which laws each one breaks.

use crate::effect::{list, App, Applicative, Effect};
use crate::error::{Error, Result};
use crate::lawcheck::{Law, ReferenceCase};
use crate::traverse::{cons_effect, list_skeletons, pure_nil, Structure, Traversable};
use crate::value::Value;

fn effects(xs: &[Value]) -> Result<Vec<&Effect>> {
    xs.iter().map(Value::as_effect).collect()
}

/// `map fst (μ (x, x))`: the effect run twice, the data kept once.
fn doubled(app: &dyn Applicative, x: &Effect) -> Result<Effect> {
    app.map(&Value::fst, &app.mult(x, x)?)
}

/// Ignores its input entirely: `pure []`.
pub fn dist_l(app: &dyn Applicative, _xs: &[Value]) -> Result<Effect> {
    Ok(pure_nil(app))
}

/// Traverses every element but the last.
pub fn dist_l_prime(app: &dyn Applicative, xs: &[Value]) -> Result<Effect> {
    let xs = effects(xs)?;
    match xs.split_last() {
        None | Some((_, [])) => Ok(pure_nil(app)),
        Some((_, init)) => init
            .iter()
            .rev()
            .try_fold(pure_nil(app), |acc, x| cons_effect(app, x, &acc)),
    }
}

/// Runs each element's effect twice before consing.
pub fn dist_l_double_prime(app: &dyn Applicative, xs: &[Value]) -> Result<Effect> {
    effects(xs)?
        .iter()
        .rev()
        .try_fold(pure_nil(app), |acc, x| cons_effect(app, &doubled(app, x)?, &acc))
}

/// The identity functor traversed along the diagonal:
/// `F π₁ · μ · d`.
pub fn diagonal_identity_dist(app: &dyn Applicative, u: &Effect) -> Result<Effect> {
    app.map(
        &|p| Ok(Value::structure(Structure::Id(p.fst()?))),
        &app.mult(u, u)?,
    )
}

fn list_payloads(t: &Structure) -> Result<&[Value]> {
    t.as_list()
}

macro_rules! rogue_list {
    ($ty:ident, $name:literal, $dist:path, [$($law:ident),*]) => {
        #[derive(Debug, Clone, Copy, Default)]
        pub struct $ty;

        impl Traversable for $ty {
            fn name(&self) -> String {
                $name.into()
            }

            fn skeletons(&self, max_size: usize) -> Vec<Structure> {
                list_skeletons(max_size)
            }

            fn dist(&self, app: &dyn Applicative, t: &Structure) -> Result<Effect> {
                $dist(app, list_payloads(t)?)
            }

            fn expected_failures(&self) -> Vec<Law> {
                vec![$(Law::$law),*]
            }

            fn reference_cases(&self) -> Vec<ReferenceCase> {
                reference_cases_for($name)
            }
        }
    };
}

rogue_list!(DistL, "distL", dist_l, [Unitarity, Purity, VisitOnce]);
rogue_list!(
    DistL1,
    "distL1",
    dist_l_prime,
    [Unitarity, Purity, Linearity, Kleisli, VisitOnce]
);
rogue_list!(DistL2, "distL2", dist_l_double_prime, [Linearity, VisitOnce]);

#[derive(Debug, Clone, Copy, Default)]
pub struct DiagId;

impl Traversable for DiagId {
    fn name(&self) -> String {
        "diagId".into()
    }

    fn skeletons(&self, _max_size: usize) -> Vec<Structure> {
        vec![Structure::Id(Value::unit())]
    }

    fn dist(&self, app: &dyn Applicative, t: &Structure) -> Result<Effect> {
        match t {
            Structure::Id(u) => diagonal_identity_dist(app, u.as_effect()?),
            other => Err(Error::mismatch("identity structure", other)),
        }
    }

    fn expected_failures(&self) -> Vec<Law> {
        vec![Law::Linearity, Law::VisitOnce]
    }

    fn reference_cases(&self) -> Vec<ReferenceCase> {
        reference_cases_for("diagId")
    }
}

fn list_of_lists(outer: Vec<Value>) -> Value {
    Value::effect(Effect::comp(Effect::List(outer)))
}

fn inner_list(items: Vec<Value>) -> Value {
    Value::effect(Effect::List(items))
}

/// `[[],[1]]` in `List (List N)`, wrapped for `List ∘ List`.
pub fn diagonal_witness_input() -> Structure {
    Structure::Id(list_of_lists(vec![
        inner_list(vec![]),
        inner_list(vec![Value::Atom(1)]),
    ]))
}

/// `[[[], [[1]]]]`: a one-element list whose element is the
/// `List ∘ List` effect `[[], [[1]]]` over lists of naturals.
pub fn double_prime_witness_input() -> Structure {
    Structure::List(vec![list_of_lists(vec![
        inner_list(vec![]),
        inner_list(vec![Value::seq_of_atoms(&[1])]),
    ])])
}

fn reference_cases_for(name: &str) -> Vec<ReferenceCase> {
    let list_pair = || -> Vec<App> { vec![list(), list()] };
    match name {
        "diagId" => vec![ReferenceCase {
            law: Law::Linearity,
            applicatives: list_pair(),
            input: diagonal_witness_input(),
        }],
        "distL2" => vec![ReferenceCase {
            law: Law::Linearity,
            applicatives: list_pair(),
            input: double_prime_witness_input(),
        }],
        _ => Vec::new(),
    }
}
