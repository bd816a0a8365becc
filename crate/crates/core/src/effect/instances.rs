use std::sync::Arc;

use super::{App, Applicative, Effect, Monoid, ValueFn};
use crate::error::{Error, Result};
use crate::value::Value;

/// All sequences over `items` of length at most `max_len`, shortest first,
/// lexicographic within a length.
pub(crate) fn sequences(items: &[Value], max_len: usize) -> Vec<Vec<Value>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let next: Vec<Vec<Value>> = layer
            .iter()
            .flat_map(|prefix: &Vec<Value>| {
                items.iter().map(move |x| {
                    let mut seq = prefix.clone();
                    seq.push(x.clone());
                    seq
                })
            })
            .collect();
        if next.is_empty() {
            break;
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Identity;

impl Applicative for Identity {
    fn name(&self) -> String {
        "Identity".into()
    }

    fn unit(&self, x: Value) -> Effect {
        Effect::Id(x)
    }

    fn mult(&self, u: &Effect, v: &Effect) -> Result<Effect> {
        match (u, v) {
            (Effect::Id(a), Effect::Id(b)) => Ok(Effect::Id(Value::pair(a.clone(), b.clone()))),
            (Effect::Id(_), bad) | (bad, _) => Err(Error::malformed(self.name(), bad)),
        }
    }

    fn map(&self, f: &ValueFn<'_>, u: &Effect) -> Result<Effect> {
        match u {
            Effect::Id(x) => Ok(Effect::Id(f(x)?)),
            bad => Err(Error::malformed(self.name(), bad)),
        }
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn samples(&self, payloads: &[Value], _width: usize, _nesting: usize) -> Vec<Effect> {
        payloads.iter().cloned().map(Effect::Id).collect()
    }
}

/// The constant applicative of a monoid: `pure _ = K ∅`, `K a ⊛ K b = K (a ⊕ b)`.
#[derive(Debug, Clone)]
pub struct ConstApp {
    monoid: Monoid,
}

impl ConstApp {
    pub fn new(monoid: Monoid) -> Self {
        ConstApp { monoid }
    }

    pub fn monoid(&self) -> &Monoid {
        &self.monoid
    }
}

impl Applicative for ConstApp {
    fn name(&self) -> String {
        format!("Const({})", self.monoid.name())
    }

    fn unit(&self, _x: Value) -> Effect {
        Effect::Const(self.monoid.empty().clone())
    }

    fn mult(&self, u: &Effect, v: &Effect) -> Result<Effect> {
        match (u, v) {
            (Effect::Const(a), Effect::Const(b)) => Ok(Effect::Const(self.monoid.combine(a, b)?)),
            (Effect::Const(_), bad) | (bad, _) => Err(Error::malformed(self.name(), bad)),
        }
    }

    fn map(&self, _f: &ValueFn<'_>, u: &Effect) -> Result<Effect> {
        match u {
            Effect::Const(_) => Ok(u.clone()),
            bad => Err(Error::malformed(self.name(), bad)),
        }
    }

    fn is_commutative(&self) -> bool {
        self.monoid.is_commutative()
    }

    fn samples(&self, _payloads: &[Value], width: usize, _nesting: usize) -> Vec<Effect> {
        self.monoid
            .samples(width)
            .into_iter()
            .map(Effect::Const)
            .collect()
    }
}

/// The list-monad applicative. Multiplication enumerates the left operand in
/// the outer loop.
#[derive(Debug, Clone, Copy, Default)]
pub struct ListApp;

impl Applicative for ListApp {
    fn name(&self) -> String {
        "List".into()
    }

    fn unit(&self, x: Value) -> Effect {
        Effect::List(vec![x])
    }

    fn mult(&self, u: &Effect, v: &Effect) -> Result<Effect> {
        match (u, v) {
            (Effect::List(xs), Effect::List(ys)) => Ok(Effect::List(
                xs.iter()
                    .flat_map(|a| ys.iter().map(move |b| Value::pair(a.clone(), b.clone())))
                    .collect(),
            )),
            (Effect::List(_), bad) | (bad, _) => Err(Error::malformed(self.name(), bad)),
        }
    }

    fn map(&self, f: &ValueFn<'_>, u: &Effect) -> Result<Effect> {
        match u {
            Effect::List(xs) => Ok(Effect::List(xs.iter().map(f).collect::<Result<_>>()?)),
            bad => Err(Error::malformed(self.name(), bad)),
        }
    }

    fn is_commutative(&self) -> bool {
        false
    }

    fn samples(&self, payloads: &[Value], width: usize, _nesting: usize) -> Vec<Effect> {
        sequences(payloads, width)
            .into_iter()
            .map(Effect::List)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct OptionApp;

impl Applicative for OptionApp {
    fn name(&self) -> String {
        "Option".into()
    }

    fn unit(&self, x: Value) -> Effect {
        Effect::Opt(Some(x))
    }

    fn mult(&self, u: &Effect, v: &Effect) -> Result<Effect> {
        match (u, v) {
            (Effect::Opt(a), Effect::Opt(b)) => Ok(Effect::Opt(
                a.as_ref()
                    .zip(b.as_ref())
                    .map(|(a, b)| Value::pair(a.clone(), b.clone())),
            )),
            (Effect::Opt(_), bad) | (bad, _) => Err(Error::malformed(self.name(), bad)),
        }
    }

    fn map(&self, f: &ValueFn<'_>, u: &Effect) -> Result<Effect> {
        match u {
            Effect::Opt(x) => Ok(Effect::Opt(x.as_ref().map(f).transpose()?)),
            bad => Err(Error::malformed(self.name(), bad)),
        }
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn samples(&self, payloads: &[Value], _width: usize, _nesting: usize) -> Vec<Effect> {
        std::iter::once(Effect::Opt(None))
            .chain(payloads.iter().cloned().map(|x| Effect::Opt(Some(x))))
            .collect()
    }
}

/// `F ∘ G`: `pure = Comp . pure . pure`, multiplication is the outer
/// multiplication followed by the mapped inner one.
#[derive(Clone)]
pub struct Compose {
    outer: App,
    inner: App,
}

impl Compose {
    pub fn new(outer: App, inner: App) -> Self {
        Compose { outer, inner }
    }

    pub fn outer(&self) -> &App {
        &self.outer
    }

    pub fn inner(&self) -> &App {
        &self.inner
    }
}

pub fn compose(outer: App, inner: App) -> App {
    Arc::new(Compose::new(outer, inner))
}

impl Applicative for Compose {
    fn name(&self) -> String {
        format!("Comp({},{})", self.outer.name(), self.inner.name())
    }

    fn unit(&self, x: Value) -> Effect {
        Effect::comp(self.outer.unit(Value::effect(self.inner.unit(x))))
    }

    fn mult(&self, u: &Effect, v: &Effect) -> Result<Effect> {
        let (Effect::Comp(u), Effect::Comp(v)) = (u, v) else {
            let bad = if matches!(u, Effect::Comp(_)) { v } else { u };
            return Err(Error::malformed(self.name(), bad));
        };
        let paired = self.outer.mult(u, v)?;
        let inner = &self.inner;
        let out = self.outer.map(
            &|p| {
                let (a, b) = p.as_pair()?;
                Ok(Value::effect(inner.mult(a.as_effect()?, b.as_effect()?)?))
            },
            &paired,
        )?;
        Ok(Effect::comp(out))
    }

    fn map(&self, f: &ValueFn<'_>, u: &Effect) -> Result<Effect> {
        let Effect::Comp(u) = u else {
            return Err(Error::malformed(self.name(), u));
        };
        let inner = &self.inner;
        let out = self
            .outer
            .map(&|g| Ok(Value::effect(inner.map(f, g.as_effect()?)?)), u)?;
        Ok(Effect::comp(out))
    }

    fn is_commutative(&self) -> bool {
        self.outer.is_commutative() && self.inner.is_commutative()
    }

    fn samples(&self, payloads: &[Value], width: usize, nesting: usize) -> Vec<Effect> {
        let inner: Vec<Value> = if nesting > 1 {
            self.inner.samples(payloads, width.min(1), nesting - 1)
        } else {
            payloads.iter().cloned().map(|x| self.inner.unit(x)).collect()
        }
        .into_iter()
        .map(Value::effect)
        .collect();
        self.outer
            .samples(&inner, width, nesting.saturating_sub(1))
            .into_iter()
            .map(Effect::comp)
            .collect()
    }
}
