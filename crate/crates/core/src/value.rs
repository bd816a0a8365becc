//! The closed universe of element values.
//!
//! Everything that can sit in a payload position lives in [`Value`]: small
//! atoms, opaque position tokens, pairs and tuples, free-monoid sequences,
//! transient function values, and nested effects or structures (so that
//! `T (F A)` and `F (T A)` are expressible without a type-level encoding).
//!
//! The [`Display`](fmt::Display) form is the canonical textual rendering used
//! in reports: atoms print as integers, tokens as `#n`, pairs as `(a,b)`,
//! tuples as `<a,b,..>` (the one-point value is `<>`), sequences as `[..]`.

use std::fmt;
use std::sync::Arc;

use crate::effect::Effect;
use crate::error::{Error, Result};
use crate::traverse::Structure;

type FuncBody = dyn Fn(&Value) -> Result<Value> + Send + Sync;

/// A named, total function over values.
///
/// Only ever lives transiently inside `ap`. Equality is by name, so effects
/// holding functions compare sensibly in debug output but law checks never
/// rely on it.
#[derive(Clone)]
pub struct Func {
    name: Arc<str>,
    body: Arc<FuncBody>,
}

impl Func {
    pub fn new<F>(name: impl Into<Arc<str>>, body: F) -> Self
    where
        F: Fn(&Value) -> Result<Value> + Send + Sync + 'static,
    {
        Func {
            name: name.into(),
            body: Arc::new(body),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn call(&self, arg: &Value) -> Result<Value> {
        (self.body)(arg)
    }

    pub fn identity() -> Self {
        Func::new("id", |x| Ok(x.clone()))
    }

    /// Successor on atoms.
    pub fn succ() -> Self {
        Func::new("succ", |x| Ok(Value::Atom(x.as_atom()? + 1)))
    }

    pub fn constant(c: Value) -> Self {
        let name = format!("const {c}");
        Func::new(name, move |_| Ok(c.clone()))
    }

    /// `g . h`
    pub fn compose(g: &Func, h: &Func) -> Self {
        let (g, h) = (g.clone(), h.clone());
        Func::new(format!("{}.{}", g.name, h.name), move |x| g.call(&h.call(x)?))
    }

    /// The curried composition operator `(.)` as a function value.
    pub fn compose_op() -> Self {
        Func::new("(.)", |g| {
            let g = g.as_func()?.clone();
            Ok(Value::Func(Func::new(format!("(.) {}", g.name), move |h| {
                Ok(Value::Func(Func::compose(&g, h.as_func()?)))
            })))
        })
    }

    /// `\g -> g x`
    pub fn apply_to(x: Value) -> Self {
        Func::new(format!("($ {x})"), move |g| g.as_func()?.call(&x))
    }
}

impl PartialEq for Func {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl Eq for Func {}

impl fmt::Debug for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Func({})", self.name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Atom(i64),
    Token(u32),
    Pair(Box<Value>, Box<Value>),
    /// Flat k-tuple. The empty tuple is the one-point value.
    Tuple(Vec<Value>),
    /// Free-monoid carrier and plain list elements.
    Seq(Vec<Value>),
    Func(Func),
    Effect(Box<Effect>),
    Structure(Box<Structure>),
}

impl Value {
    /// The one-point value.
    pub fn unit() -> Self {
        Value::Tuple(Vec::new())
    }

    pub fn pair(a: Value, b: Value) -> Self {
        Value::Pair(Box::new(a), Box::new(b))
    }

    pub fn effect(e: Effect) -> Self {
        Value::Effect(Box::new(e))
    }

    pub fn structure(s: Structure) -> Self {
        Value::Structure(Box::new(s))
    }

    pub fn seq_of_atoms(atoms: &[i64]) -> Self {
        Value::Seq(atoms.iter().copied().map(Value::Atom).collect())
    }

    pub fn as_atom(&self) -> Result<i64> {
        match self {
            Value::Atom(n) => Ok(*n),
            other => Err(Error::mismatch("atom", other)),
        }
    }

    pub fn as_func(&self) -> Result<&Func> {
        match self {
            Value::Func(f) => Ok(f),
            other => Err(Error::NotAFunction(other.to_string())),
        }
    }

    pub fn as_pair(&self) -> Result<(&Value, &Value)> {
        match self {
            Value::Pair(a, b) => Ok((a, b)),
            other => Err(Error::mismatch("pair", other)),
        }
    }

    pub fn as_effect(&self) -> Result<&Effect> {
        match self {
            Value::Effect(e) => Ok(e),
            other => Err(Error::mismatch("effect", other)),
        }
    }

    pub fn as_structure(&self) -> Result<&Structure> {
        match self {
            Value::Structure(s) => Ok(s),
            other => Err(Error::mismatch("structure", other)),
        }
    }

    pub fn into_effect(self) -> Result<Effect> {
        match self {
            Value::Effect(e) => Ok(*e),
            other => Err(Error::mismatch("effect", other)),
        }
    }

    pub fn into_structure(self) -> Result<Structure> {
        match self {
            Value::Structure(s) => Ok(*s),
            other => Err(Error::mismatch("structure", other)),
        }
    }

    pub fn into_tuple(self) -> Result<Vec<Value>> {
        match self {
            Value::Tuple(items) => Ok(items),
            other => Err(Error::mismatch("tuple", other)),
        }
    }

    pub fn swap(&self) -> Result<Value> {
        let (a, b) = self.as_pair()?;
        Ok(Value::pair(b.clone(), a.clone()))
    }

    pub fn fst(&self) -> Result<Value> {
        Ok(self.as_pair()?.0.clone())
    }
}

pub(crate) fn write_list<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    open: &str,
    items: &[T],
    close: &str,
) -> fmt::Result {
    f.write_str(open)?;
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{item}")?;
    }
    f.write_str(close)
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Atom(n) => write!(f, "{n}"),
            Value::Token(t) => write!(f, "#{t}"),
            Value::Pair(a, b) => write!(f, "({a},{b})"),
            Value::Tuple(items) => write_list(f, "<", items, ">"),
            Value::Seq(items) => write_list(f, "[", items, "]"),
            Value::Func(func) => f.write_str(func.name()),
            Value::Effect(e) => write!(f, "{e}"),
            Value::Structure(s) => write!(f, "{s}"),
        }
    }
}
