use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::value::Value;

type Combine = dyn Fn(&Value, &Value) -> Result<Value> + Send + Sync;
type Sampler = dyn Fn(usize) -> Vec<Value> + Send + Sync;

/// A monoid over values; each one determines a constant applicative.
#[derive(Clone)]
pub struct Monoid {
    name: Arc<str>,
    empty: Value,
    combine: Arc<Combine>,
    commutative: bool,
    sampler: Arc<Sampler>,
}

impl Monoid {
    pub fn new<C, S>(
        name: impl Into<Arc<str>>,
        empty: Value,
        commutative: bool,
        combine: C,
        sampler: S,
    ) -> Self
    where
        C: Fn(&Value, &Value) -> Result<Value> + Send + Sync + 'static,
        S: Fn(usize) -> Vec<Value> + Send + Sync + 'static,
    {
        Monoid {
            name: name.into(),
            empty,
            combine: Arc::new(combine),
            commutative,
            sampler: Arc::new(sampler),
        }
    }

    /// Integers under addition.
    pub fn int_sum() -> Self {
        Monoid::new(
            "IntSum",
            Value::Atom(0),
            true,
            |a, b| Ok(Value::Atom(a.as_atom()? + b.as_atom()?)),
            |width| (0..=width as i64).map(Value::Atom).collect(),
        )
    }

    /// Sequences under concatenation. Samples are token strings over `#0`, `#1`.
    pub fn free() -> Self {
        Monoid::new(
            "Free",
            Value::Seq(Vec::new()),
            false,
            |a, b| match (a, b) {
                (Value::Seq(xs), Value::Seq(ys)) => {
                    Ok(Value::Seq(xs.iter().chain(ys).cloned().collect()))
                }
                (Value::Seq(_), other) | (other, _) => Err(Error::mismatch("sequence", other)),
            },
            |width| {
                let tokens = [Value::Token(0), Value::Token(1)];
                crate::effect::instances::sequences(&tokens, width)
                    .into_iter()
                    .map(Value::Seq)
                    .collect()
            },
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn empty(&self) -> &Value {
        &self.empty
    }

    pub fn combine(&self, a: &Value, b: &Value) -> Result<Value> {
        (self.combine)(a, b)
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn samples(&self, width: usize) -> Vec<Value> {
        (self.sampler)(width)
    }
}

impl fmt::Debug for Monoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Monoid")
            .field("name", &self.name)
            .field("empty", &self.empty)
            .field("commutative", &self.commutative)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_laws(m: &Monoid) {
        let xs = m.samples(2);
        for x in &xs {
            assert_eq!(&m.combine(m.empty(), x).unwrap(), x);
            assert_eq!(&m.combine(x, m.empty()).unwrap(), x);
            for y in &xs {
                if m.is_commutative() {
                    assert_eq!(m.combine(x, y).unwrap(), m.combine(y, x).unwrap());
                }
                for z in &xs {
                    let left = m.combine(&m.combine(x, y).unwrap(), z).unwrap();
                    let right = m.combine(x, &m.combine(y, z).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn int_sum_is_a_commutative_monoid() {
        check_laws(&Monoid::int_sum());
    }

    #[test]
    fn free_monoid_laws_and_non_commutativity() {
        let m = Monoid::free();
        check_laws(&m);
        let a = Value::Seq(vec![Value::Token(0)]);
        let b = Value::Seq(vec![Value::Token(1)]);
        assert_ne!(m.combine(&a, &b).unwrap(), m.combine(&b, &a).unwrap());
        assert_eq!(m.samples(2).len(), 7);
    }

    #[test]
    fn combine_rejects_foreign_carriers() {
        assert!(Monoid::free().combine(&Value::Atom(1), &Value::Seq(vec![])).is_err());
        assert!(Monoid::int_sum().combine(&Value::Token(1), &Value::Atom(0)).is_err());
    }
}
