//! Traversable structures and the three interdefinable entry points.
//!
//! A [`Traversable`] may define any one of `traverse`, `dist` or `consume`;
//! the other two default through
//!
//! ```text
//! traverse f = dist . fmap f
//! dist       = consume id
//! consume g  = fmap g . traverse id
//! ```
//!
//! The defaults form a cycle, so an instance that overrides none of them
//! recurses without bound.

use std::fmt;

use crate::container::ContainerValue;
use crate::effect::{Applicative, ConstApp, Effect, Identity, Monoid, ValueFn};
use crate::error::{Error, Result};
use crate::lawcheck::{Law, ReferenceCase};
use crate::value::{write_list, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bin {
    Leaf,
    Node(Box<Bin>, Value, Box<Bin>),
}

impl Bin {
    pub fn node(left: Bin, payload: Value, right: Bin) -> Self {
        Bin::Node(Box::new(left), payload, Box::new(right))
    }

    pub fn leaf_node(payload: Value) -> Self {
        Bin::node(Bin::Leaf, payload, Bin::Leaf)
    }

    pub fn size(&self) -> usize {
        match self {
            Bin::Leaf => 0,
            Bin::Node(l, _, r) => l.size() + 1 + r.size(),
        }
    }

    /// Every tree with at most `max_nodes` nodes, payloads set to `<>`.
    /// Ordered by node count, then by size of the left subtree.
    pub fn skeletons(max_nodes: usize) -> Vec<Bin> {
        let mut by_size: Vec<Vec<Bin>> = vec![vec![Bin::Leaf]];
        for n in 1..=max_nodes {
            let mut trees = Vec::new();
            for left in 0..n {
                for l in &by_size[left] {
                    for r in &by_size[n - 1 - left] {
                        trees.push(Bin::node(l.clone(), Value::unit(), r.clone()));
                    }
                }
            }
            by_size.push(trees);
        }
        by_size.into_iter().flatten().collect()
    }

    /// Payloads in order (left, node, right).
    pub fn in_order(&self) -> Vec<&Value> {
        let mut out = Vec::new();
        self.collect_in_order(&mut out);
        out
    }

    fn collect_in_order<'a>(&'a self, out: &mut Vec<&'a Value>) {
        if let Bin::Node(l, a, r) = self {
            l.collect_in_order(out);
            out.push(a);
            r.collect_in_order(out);
        }
    }

    fn map_payloads(&self, f: &ValueFn<'_>) -> Result<Bin> {
        Ok(match self {
            Bin::Leaf => Bin::Leaf,
            Bin::Node(l, a, r) => Bin::node(l.map_payloads(f)?, f(a)?, r.map_payloads(f)?),
        })
    }

    fn fill_from(&self, payloads: &mut impl Iterator<Item = Value>) -> Result<Bin> {
        Ok(match self {
            Bin::Leaf => Bin::Leaf,
            Bin::Node(l, _, r) => {
                let left = l.fill_from(payloads)?;
                let a = payloads.next().ok_or(Error::LengthMismatch {
                    expected: self.size(),
                    found: 0,
                })?;
                Bin::node(left, a, r.fill_from(payloads)?)
            }
        })
    }
}

impl fmt::Display for Bin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bin::Leaf => f.write_str("Leaf"),
            Bin::Node(l, a, r) => write!(f, "Node({l},{a},{r})"),
        }
    }
}

/// A finite structure `T A`; payloads may be plain values or effects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    List(Vec<Value>),
    Bin(Bin),
    Id(Value),
    Container(ContainerValue),
}

impl Structure {
    /// Payloads in structural order: list index, in-order for trees,
    /// payload index for containers.
    pub fn payloads(&self) -> Vec<&Value> {
        match self {
            Structure::List(xs) => xs.iter().collect(),
            Structure::Bin(t) => t.in_order(),
            Structure::Id(x) => vec![x],
            Structure::Container(v) => v.payload().iter().collect(),
        }
    }

    pub fn positions(&self) -> usize {
        match self {
            Structure::List(xs) => xs.len(),
            Structure::Bin(t) => t.size(),
            Structure::Id(_) => 1,
            Structure::Container(v) => v.payload().len(),
        }
    }

    pub fn map_payloads(&self, f: &ValueFn<'_>) -> Result<Structure> {
        Ok(match self {
            Structure::List(xs) => Structure::List(xs.iter().map(f).collect::<Result<_>>()?),
            Structure::Bin(t) => Structure::Bin(t.map_payloads(f)?),
            Structure::Id(x) => Structure::Id(f(x)?),
            Structure::Container(v) => Structure::Container(v.map_payload(f)?),
        })
    }

    /// Replaces the payloads, in structural order.
    pub fn fill(&self, payloads: Vec<Value>) -> Result<Structure> {
        let expected = self.positions();
        if payloads.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: payloads.len(),
            });
        }
        let mut it = payloads.into_iter();
        Ok(match self {
            Structure::List(_) => Structure::List(it.collect()),
            Structure::Bin(t) => Structure::Bin(t.fill_from(&mut it)?),
            Structure::Id(_) => Structure::Id(it.next().expect("one position")),
            Structure::Container(v) => Structure::Container(v.with_payload(it.collect())),
        })
    }

    /// The shape with every payload erased to `<>`.
    pub fn skeleton(&self) -> Structure {
        self.map_payloads(&|_| Ok(Value::unit()))
            .expect("erasing payloads is total")
    }

    pub fn as_list(&self) -> Result<&[Value]> {
        match self {
            Structure::List(xs) => Ok(xs),
            other => Err(Error::mismatch("list structure", other)),
        }
    }
}

/// `Id` structures render transparently.
impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Structure::List(xs) => write_list(f, "[", xs, "]"),
            Structure::Bin(t) => write!(f, "{t}"),
            Structure::Id(x) => write!(f, "{x}"),
            Structure::Container(v) => write!(f, "{v}"),
        }
    }
}

pub type PayloadFn<'a> = dyn Fn(&Value) -> Result<Effect> + 'a;
pub type ConsumeFn<'a> = dyn Fn(&Structure) -> Result<Value> + 'a;

/// A traversable candidate. Nothing here forces the laws; that is what
/// [`crate::lawcheck`] is for.
pub trait Traversable: Send + Sync {
    fn name(&self) -> String;

    /// Every shape with at most `max_size` positions (payloads `<>`), in a
    /// fixed order.
    fn skeletons(&self, max_size: usize) -> Vec<Structure>;

    fn map(&self, f: &ValueFn<'_>, t: &Structure) -> Result<Structure> {
        t.map_payloads(f)
    }

    fn traverse(&self, app: &dyn Applicative, f: &PayloadFn<'_>, t: &Structure) -> Result<Effect> {
        traverse_via_dist(self, app, f, t)
    }

    fn dist(&self, app: &dyn Applicative, t: &Structure) -> Result<Effect> {
        dist_via_consume(self, app, t)
    }

    fn consume(&self, app: &dyn Applicative, g: &ConsumeFn<'_>, t: &Structure) -> Result<Effect> {
        consume_via_traverse(self, app, g, t)
    }

    /// Laws this instance is known to break.
    fn expected_failures(&self) -> Vec<Law> {
        Vec::new()
    }

    /// Hand-picked inputs replayed alongside the exhaustive checks.
    fn reference_cases(&self) -> Vec<ReferenceCase> {
        Vec::new()
    }
}

/// `traverse f = dist . fmap f`
pub fn traverse_via_dist<T: Traversable + ?Sized>(
    trav: &T,
    app: &dyn Applicative,
    f: &PayloadFn<'_>,
    t: &Structure,
) -> Result<Effect> {
    let lifted = trav.map(&|x| Ok(Value::effect(f(x)?)), t)?;
    trav.dist(app, &lifted)
}

/// `dist = consume id`
pub fn dist_via_consume<T: Traversable + ?Sized>(
    trav: &T,
    app: &dyn Applicative,
    t: &Structure,
) -> Result<Effect> {
    trav.consume(app, &|s| Ok(Value::structure(s.clone())), t)
}

/// `consume g = fmap g . traverse id`
pub fn consume_via_traverse<T: Traversable + ?Sized>(
    trav: &T,
    app: &dyn Applicative,
    g: &ConsumeFn<'_>,
    t: &Structure,
) -> Result<Effect> {
    let distributed = trav.traverse(app, &|x| x.as_effect().cloned(), t)?;
    app.map(&|v| g(v.as_structure()?), &distributed)
}

/// The free-monoid traversal carrier: payloads in visit order.
pub fn to_list<T: Traversable + ?Sized>(trav: &T, t: &Structure) -> Result<Vec<Value>> {
    let free = ConstApp::new(Monoid::free());
    match trav.traverse(&free, &|x| Ok(Effect::Const(Value::Seq(vec![x.clone()]))), t)? {
        Effect::Const(Value::Seq(items)) => Ok(items),
        other => Err(Error::malformed(free.name(), other)),
    }
}

/// Functorial map recovered from `traverse` at the identity applicative.
pub fn map_via_traverse<T: Traversable + ?Sized>(
    trav: &T,
    f: &ValueFn<'_>,
    t: &Structure,
) -> Result<Structure> {
    match trav.traverse(&Identity, &|x| Ok(Effect::Id(f(x)?)), t)? {
        Effect::Id(v) => v.into_structure(),
        other => Err(Error::malformed("Identity", other)),
    }
}

fn cons(p: &Value) -> Result<Value> {
    let (head, rest) = p.as_pair()?;
    let rest = rest.as_structure()?.as_list()?;
    let mut items = Vec::with_capacity(rest.len() + 1);
    items.push(head.clone());
    items.extend(rest.iter().cloned());
    Ok(Value::structure(Structure::List(items)))
}

/// `pure (:) ⊛ x ⊛ rest`, in monoidal form.
pub(crate) fn cons_effect(app: &dyn Applicative, x: &Effect, rest: &Effect) -> Result<Effect> {
    app.map(&cons, &app.mult(x, rest)?)
}

pub(crate) fn pure_nil(app: &dyn Applicative) -> Effect {
    app.unit(Value::structure(Structure::List(Vec::new())))
}

pub(crate) fn list_skeletons(max_size: usize) -> Vec<Structure> {
    (0..=max_size)
        .map(|n| Structure::List(vec![Value::unit(); n]))
        .collect()
}

/// Lists, traversed left to right. Defines `traverse`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ListTraversable;

impl Traversable for ListTraversable {
    fn name(&self) -> String {
        "list".into()
    }

    fn skeletons(&self, max_size: usize) -> Vec<Structure> {
        list_skeletons(max_size)
    }

    fn traverse(&self, app: &dyn Applicative, f: &PayloadFn<'_>, t: &Structure) -> Result<Effect> {
        let items = t.as_list()?;
        items.iter().rev().try_fold(pure_nil(app), |acc, x| {
            cons_effect(app, &f(x)?, &acc)
        })
    }
}

/// Binary trees with payloads in the nodes, traversed in order. Defines `dist`.
#[derive(Debug, Clone, Copy, Default)]
pub struct BinTraversable;

impl BinTraversable {
    fn dist_tree(app: &dyn Applicative, t: &Bin) -> Result<Effect> {
        match t {
            Bin::Leaf => Ok(app.unit(Value::structure(Structure::Bin(Bin::Leaf)))),
            Bin::Node(l, a, r) => {
                let left = Self::dist_tree(app, l)?;
                let right = Self::dist_tree(app, r)?;
                let prod = app.mult(&app.mult(&left, a.as_effect()?)?, &right)?;
                app.map(
                    &|p| {
                        let (la, r) = p.as_pair()?;
                        let (l, a) = la.as_pair()?;
                        let tree = |v: &Value| -> Result<Bin> {
                            match v.as_structure()? {
                                Structure::Bin(b) => Ok(b.clone()),
                                other => Err(Error::mismatch("tree", other)),
                            }
                        };
                        Ok(Value::structure(Structure::Bin(Bin::node(
                            tree(l)?,
                            a.clone(),
                            tree(r)?,
                        ))))
                    },
                    &prod,
                )
            }
        }
    }
}

impl Traversable for BinTraversable {
    fn name(&self) -> String {
        "bin".into()
    }

    fn skeletons(&self, max_size: usize) -> Vec<Structure> {
        Bin::skeletons(max_size).into_iter().map(Structure::Bin).collect()
    }

    fn dist(&self, app: &dyn Applicative, t: &Structure) -> Result<Effect> {
        match t {
            Structure::Bin(tree) => Self::dist_tree(app, tree),
            other => Err(Error::mismatch("tree structure", other)),
        }
    }
}

/// The identity functor. Defines `consume`.
#[derive(Debug, Clone, Copy, Default)]
pub struct IdTraversable;

impl Traversable for IdTraversable {
    fn name(&self) -> String {
        "id".into()
    }

    fn skeletons(&self, _max_size: usize) -> Vec<Structure> {
        vec![Structure::Id(Value::unit())]
    }

    fn consume(&self, app: &dyn Applicative, g: &ConsumeFn<'_>, t: &Structure) -> Result<Effect> {
        match t {
            Structure::Id(u) => app.map(&|x| g(&Structure::Id(x.clone())), u.as_effect()?),
            other => Err(Error::mismatch("identity structure", other)),
        }
    }
}
