//! Applicative functors as runtime descriptors.
//!
//! The primitive presentation is monoidal: every [`Applicative`] supplies a
//! unit `η : X → F X` and a multiplication `μ : F X × F Y → F (X × Y)`, and
//! `pure`/`ap` are derived from them. Effects are values of [`Effect`], a
//! closed universe that each descriptor knows how to interpret.

mod instances;
mod monoid;
mod morphism;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::value::{write_list, Func, Value};

pub use instances::{compose, Compose, ConstApp, Identity, ListApp, OptionApp};
pub use monoid::Monoid;
pub use morphism::{Monad, Morphism};

/// A value in some applicative functor.
///
/// `Comp` wraps an outer effect whose payload positions hold inner effects
/// (as [`Value::Effect`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Effect {
    Id(Value),
    Const(Value),
    List(Vec<Value>),
    Opt(Option<Value>),
    Comp(Box<Effect>),
}

impl Effect {
    pub fn comp(outer: Effect) -> Self {
        Effect::Comp(Box::new(outer))
    }

    pub fn un_comp(&self) -> Result<&Effect> {
        match self {
            Effect::Comp(outer) => Ok(outer),
            other => Err(Error::mismatch("composed effect", other)),
        }
    }

    /// Payload values at the innermost level, looking through `Comp`.
    pub fn leaves(&self) -> Vec<&Value> {
        match self {
            Effect::Id(v) => vec![v],
            Effect::Const(_) => Vec::new(),
            Effect::List(items) => items.iter().collect(),
            Effect::Opt(v) => v.iter().collect(),
            Effect::Comp(outer) => outer
                .leaves()
                .into_iter()
                .flat_map(|v| match v {
                    Value::Effect(inner) => inner.leaves(),
                    other => vec![other],
                })
                .collect(),
        }
    }
}

/// `Comp` and nothing else is rendered transparently, so a `List∘List`
/// effect prints as a nested list.
impl fmt::Display for Effect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Effect::Id(v) => write!(f, "Id({v})"),
            Effect::Const(c) => write!(f, "K({c})"),
            Effect::List(items) => write_list(f, "[", items, "]"),
            Effect::Opt(None) => f.write_str("none"),
            Effect::Opt(Some(v)) => write!(f, "some({v})"),
            Effect::Comp(outer) => write!(f, "{outer}"),
        }
    }
}

/// Payload function used by `map`.
pub type ValueFn<'a> = dyn Fn(&Value) -> Result<Value> + 'a;

/// An applicative functor in monoidal presentation.
pub trait Applicative: Send + Sync {
    fn name(&self) -> String;

    /// `η_X`
    fn unit(&self, x: Value) -> Effect;

    /// `μ_{X,Y}`, producing an effect over pairs.
    fn mult(&self, u: &Effect, v: &Effect) -> Result<Effect>;

    fn map(&self, f: &ValueFn<'_>, u: &Effect) -> Result<Effect>;

    fn is_commutative(&self) -> bool;

    /// Small inhabitants of `F P` for the payload pool `payloads`, in a fixed
    /// order. `width` bounds list-like lengths; `nesting` bounds how many
    /// composition layers get non-pure inner samples.
    fn samples(&self, payloads: &[Value], width: usize, nesting: usize) -> Vec<Effect>;

    /// The monoidal unit `ν : 1 → F 1`.
    fn nu(&self) -> Effect {
        self.unit(Value::unit())
    }

    fn eq(&self, a: &Effect, b: &Effect) -> bool {
        a == b
    }

    fn pure(&self, x: Value) -> Effect {
        self.unit(x)
    }

    /// `ff ⊛ fx = map eval (μ (ff, fx))`
    fn ap(&self, ff: &Effect, fx: &Effect) -> Result<Effect> {
        let paired = self.mult(ff, fx)?;
        self.map(
            &|p| {
                let (g, x) = p.as_pair()?;
                g.as_func()?.call(x)
            },
            &paired,
        )
    }
}

pub type App = Arc<dyn Applicative>;

/// `μ (u, v) = map pairing u ⊛ v`, the converse derivation. Used to check
/// that the two presentations agree.
pub fn mult_via_ap(app: &dyn Applicative, u: &Effect, v: &Effect) -> Result<Effect> {
    let pairing = app.map(
        &|a| {
            let a = a.clone();
            Ok(Value::Func(Func::new(format!("pair {a}"), move |b| {
                Ok(Value::pair(a.clone(), b.clone()))
            })))
        },
        u,
    )?;
    app.ap(&pairing, v)
}

pub fn identity() -> App {
    Arc::new(Identity)
}

pub fn list() -> App {
    Arc::new(ListApp)
}

pub fn option() -> App {
    Arc::new(OptionApp)
}

pub fn const_int_sum() -> App {
    Arc::new(ConstApp::new(Monoid::int_sum()))
}

pub fn const_free() -> App {
    Arc::new(ConstApp::new(Monoid::free()))
}

/// Identity, Const(IntSum), Const(Free), List, Option.
pub fn battery() -> Vec<App> {
    vec![identity(), const_int_sum(), const_free(), list(), option()]
}

/// Every battery member and every pairwise composition.
pub fn battery_with_compositions() -> Vec<App> {
    let base = battery();
    let mut all = base.clone();
    for f in &base {
        for g in &base {
            all.push(compose(f.clone(), g.clone()));
        }
    }
    all
}

/// The applicatives whose pairs are used for linearity checks.
pub fn linearity_battery() -> Vec<App> {
    vec![identity(), const_free(), list(), option()]
}

/// Resolves a descriptor name such as `Comp(List,Const(Free))`.
pub fn applicative_by_name(name: &str) -> Option<App> {
    let name = name.trim();
    match name {
        "Identity" => return Some(identity()),
        "List" => return Some(list()),
        "Option" => return Some(option()),
        "Const(IntSum)" => return Some(const_int_sum()),
        "Const(Free)" => return Some(const_free()),
        _ => {}
    }
    let args = name.strip_prefix("Comp(")?.strip_suffix(')')?;
    let mut depth = 0usize;
    for (i, c) in args.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1)?,
            ',' if depth == 0 => {
                let outer = applicative_by_name(&args[..i])?;
                let inner = applicative_by_name(&args[i + 1..])?;
                return Some(compose(outer, inner));
            }
            _ => {}
        }
    }
    None
}
