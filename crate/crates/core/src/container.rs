//! Finitary containers and their canonical traversal.
//!
//! The extension of `(S, ar)` is a sum over shapes of finite products, so the
//! traversal is assembled from two pieces: iterated multiplication `μ^k`
//! distributes an `ar(s)`-fold product, and re-injecting the shape handles the
//! sum.

use std::collections::HashMap;
use std::fmt;

use indexmap::IndexMap;

use crate::effect::Applicative;
use crate::effect::Effect;
use crate::error::{Error, Result};
use crate::traverse::{Bin, Structure, Traversable};
use crate::value::{write_list, Value};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShapeId(String);

impl ShapeId {
    pub fn new(id: impl Into<String>) -> Self {
        ShapeId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ShapeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for ShapeId {
    fn from(s: &str) -> Self {
        ShapeId::new(s)
    }
}

/// Shapes with arities, kept in declaration order. May be empty.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FiniteContainer {
    shapes: IndexMap<ShapeId, usize>,
}

impl FiniteContainer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Fails on a duplicate shape.
    pub fn insert(&mut self, shape: impl Into<ShapeId>, arity: usize) -> Result<()> {
        let shape = shape.into();
        if self.shapes.contains_key(&shape) {
            return Err(Error::Precondition(format!("duplicate shape `{shape}`")));
        }
        self.shapes.insert(shape, arity);
        Ok(())
    }

    pub fn from_shapes<I, S>(shapes: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, usize)>,
        S: Into<ShapeId>,
    {
        let mut c = FiniteContainer::new();
        for (s, ar) in shapes {
            c.insert(s, ar)?;
        }
        Ok(c)
    }

    /// One shape `s` of arity `k`: the functor `X^k`.
    pub fn single(k: usize) -> Self {
        Self::from_shapes([("s", k)]).expect("single shape")
    }

    pub fn arity(&self, shape: &ShapeId) -> Option<usize> {
        self.shapes.get(shape).copied()
    }

    pub fn shapes(&self) -> impl Iterator<Item = (&ShapeId, usize)> {
        self.shapes.iter().map(|(s, &ar)| (s, ar))
    }

    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shapes.is_empty()
    }

    /// Builds a value, checking the payload length against the arity.
    pub fn value(&self, shape: impl Into<ShapeId>, payload: Vec<Value>) -> Result<ContainerValue> {
        let shape = shape.into();
        let arity = self
            .arity(&shape)
            .ok_or_else(|| Error::UnknownShape(shape.to_string()))?;
        if payload.len() != arity {
            return Err(Error::ArityMismatch {
                shape: shape.to_string(),
                arity,
                found: payload.len(),
            });
        }
        Ok(ContainerValue { shape, payload })
    }
}

/// A shape paired with its payload vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainerValue {
    shape: ShapeId,
    payload: Vec<Value>,
}

impl ContainerValue {
    pub fn shape(&self) -> &ShapeId {
        &self.shape
    }

    pub fn payload(&self) -> &[Value] {
        &self.payload
    }

    pub(crate) fn with_payload(&self, payload: Vec<Value>) -> ContainerValue {
        ContainerValue {
            shape: self.shape.clone(),
            payload,
        }
    }

    pub(crate) fn map_payload(&self, f: &crate::effect::ValueFn<'_>) -> Result<ContainerValue> {
        Ok(self.with_payload(self.payload.iter().map(f).collect::<Result<_>>()?))
    }
}

impl fmt::Display for ContainerValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.shape)?;
        write_list(f, "{", &self.payload, "}")
    }
}

/// Iterated multiplication `μ^k : (F X)^k → F (X^k)` with `μ^0 = ν`,
/// `μ^1 = id` and `μ^{k+1} = μ · (id × μ^k)`. Tuples come out flat.
pub fn mu_k(app: &dyn Applicative, k: usize, effects: &[Effect]) -> Result<Effect> {
    if effects.len() != k {
        return Err(Error::LengthMismatch {
            expected: k,
            found: effects.len(),
        });
    }
    let Some((last, init)) = effects.split_last() else {
        return Ok(app.nu());
    };
    let mut acc = app.map(&|x| Ok(Value::Tuple(vec![x.clone()])), last)?;
    for e in init.iter().rev() {
        acc = app.map(
            &|p| {
                let (x, rest) = p.as_pair()?;
                let mut items = vec![x.clone()];
                items.extend(rest.clone().into_tuple()?);
                Ok(Value::Tuple(items))
            },
            &app.mult(e, &acc)?,
        )?;
    }
    Ok(acc)
}

/// Distributes `(s, [u_0 .. u_{k-1}])` by `μ^k` over the payload effects,
/// visited in `order`, then reattaches the shape.
fn dist_in_order(
    container: &FiniteContainer,
    app: &dyn Applicative,
    v: &ContainerValue,
    order: Option<&[usize]>,
) -> Result<Effect> {
    let arity = container
        .arity(v.shape())
        .ok_or_else(|| Error::UnknownShape(v.shape().to_string()))?;
    if v.payload().len() != arity {
        return Err(Error::ArityMismatch {
            shape: v.shape().to_string(),
            arity,
            found: v.payload().len(),
        });
    }
    let effects = v
        .payload()
        .iter()
        .map(|p| p.as_effect().cloned())
        .collect::<Result<Vec<_>>>()?;
    let effects = match order {
        Some(order) => order.iter().map(|&i| effects[i].clone()).collect(),
        None => effects,
    };
    let distributed = mu_k(app, arity, &effects)?;
    app.map(
        &|tuple| {
            let items = tuple.clone().into_tuple()?;
            let payload = match order {
                Some(order) => {
                    let mut payload = vec![Value::unit(); items.len()];
                    for (&pos, item) in order.iter().zip(items) {
                        payload[pos] = item;
                    }
                    payload
                }
                None => items,
            };
            Ok(Value::structure(Structure::Container(v.with_payload(payload))))
        },
        &distributed,
    )
}

/// The canonical traversal, visiting positions in ascending index order.
pub fn canonical_dist(
    container: &FiniteContainer,
    app: &dyn Applicative,
    v: &ContainerValue,
) -> Result<Effect> {
    dist_in_order(container, app, v, None)
}

/// A container's traversal, canonical unless a per-shape visiting order was
/// supplied.
#[derive(Debug, Clone)]
pub struct ContainerTraversable {
    name: String,
    container: FiniteContainer,
    orders: HashMap<ShapeId, Vec<usize>>,
}

impl ContainerTraversable {
    pub fn new(name: impl Into<String>, container: FiniteContainer) -> Self {
        ContainerTraversable {
            name: name.into(),
            container,
            orders: HashMap::new(),
        }
    }

    /// Visits every shape's positions back to front.
    pub fn reversed(name: impl Into<String>, container: FiniteContainer) -> Self {
        let orders = container
            .shapes()
            .map(|(s, ar)| (s.clone(), (0..ar).rev().collect()))
            .collect();
        ContainerTraversable {
            name: name.into(),
            container,
            orders,
        }
    }

    /// Visits the positions of `shape` in `order`, which must be a
    /// permutation of `0..ar(shape)`.
    pub fn with_order(mut self, shape: impl Into<ShapeId>, order: Vec<usize>) -> Result<Self> {
        let shape = shape.into();
        let arity = self
            .container
            .arity(&shape)
            .ok_or_else(|| Error::UnknownShape(shape.to_string()))?;
        let mut seen = vec![false; arity];
        for &i in &order {
            if i >= arity || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Precondition(format!(
                    "{order:?} is not a permutation of 0..{arity}"
                )));
            }
        }
        if order.len() != arity {
            return Err(Error::Precondition(format!(
                "{order:?} is not a permutation of 0..{arity}"
            )));
        }
        self.orders.insert(shape, order);
        Ok(self)
    }

    pub fn container(&self) -> &FiniteContainer {
        &self.container
    }
}

impl Traversable for ContainerTraversable {
    fn name(&self) -> String {
        self.name.clone()
    }

    /// One skeleton per shape, regardless of arity; large arities are bounded
    /// by the case cap rather than dropped.
    fn skeletons(&self, _max_size: usize) -> Vec<Structure> {
        self.container
            .shapes()
            .map(|(s, ar)| {
                Structure::Container(ContainerValue {
                    shape: s.clone(),
                    payload: vec![Value::unit(); ar],
                })
            })
            .collect()
    }

    fn dist(&self, app: &dyn Applicative, t: &Structure) -> Result<Effect> {
        match t {
            Structure::Container(v) => {
                let order = self.orders.get(v.shape()).map(Vec::as_slice);
                dist_in_order(&self.container, app, v, order)
            }
            other => Err(Error::mismatch("container value", other)),
        }
    }
}

/// Lists of length at most `max_len`: shape `n` has arity `n`.
pub fn list_container(max_len: usize) -> FiniteContainer {
    FiniteContainer::from_shapes((0..=max_len).map(|n| (ShapeId::new(n.to_string()), n)))
        .expect("distinct shapes")
}

pub fn encode_list(xs: &[Value], max_len: usize) -> Result<ContainerValue> {
    if xs.len() > max_len {
        return Err(Error::BudgetExceeded {
            size: xs.len(),
            budget: max_len,
        });
    }
    Ok(ContainerValue {
        shape: ShapeId::new(xs.len().to_string()),
        payload: xs.to_vec(),
    })
}

pub fn decode_list(v: &ContainerValue) -> Result<Vec<Value>> {
    match v.shape().as_str().parse::<usize>() {
        Ok(n) if n == v.payload().len() => Ok(v.payload().to_vec()),
        _ => Err(Error::UnknownShape(v.shape().to_string())),
    }
}

/// Shape id of a tree skeleton: `L` for a leaf, `N(l,r)` for a node.
pub fn bin_shape_id(t: &Bin) -> ShapeId {
    fn go(t: &Bin, out: &mut String) {
        match t {
            Bin::Leaf => out.push('L'),
            Bin::Node(l, _, r) => {
                out.push_str("N(");
                go(l, out);
                out.push(',');
                go(r, out);
                out.push(')');
            }
        }
    }
    let mut out = String::new();
    go(t, &mut out);
    ShapeId(out)
}

fn parse_bin_shape(id: &str) -> Option<Bin> {
    fn go(s: &[u8], pos: &mut usize) -> Option<Bin> {
        match s.get(*pos)? {
            b'L' => {
                *pos += 1;
                Some(Bin::Leaf)
            }
            b'N' => {
                *pos += 1;
                let expect = |c: u8, pos: &mut usize| {
                    (s.get(*pos) == Some(&c)).then(|| *pos += 1)
                };
                expect(b'(', pos)?;
                let l = go(s, pos)?;
                expect(b',', pos)?;
                let r = go(s, pos)?;
                expect(b')', pos)?;
                Some(Bin::node(l, Value::unit(), r))
            }
            _ => None,
        }
    }
    let mut pos = 0;
    let t = go(id.as_bytes(), &mut pos)?;
    (pos == id.len()).then_some(t)
}

/// Trees with at most `max_nodes` nodes: one shape per skeleton, arity the
/// node count, payload in in-order position order.
pub fn bin_container(max_nodes: usize) -> FiniteContainer {
    FiniteContainer::from_shapes(
        Bin::skeletons(max_nodes)
            .iter()
            .map(|t| (bin_shape_id(t), t.size())),
    )
    .expect("distinct skeletons")
}

pub fn encode_bin(t: &Bin, max_nodes: usize) -> Result<ContainerValue> {
    if t.size() > max_nodes {
        return Err(Error::BudgetExceeded {
            size: t.size(),
            budget: max_nodes,
        });
    }
    Ok(ContainerValue {
        shape: bin_shape_id(t),
        payload: t.in_order().into_iter().cloned().collect(),
    })
}

pub fn decode_bin(v: &ContainerValue) -> Result<Bin> {
    let skeleton =
        parse_bin_shape(v.shape().as_str()).ok_or_else(|| Error::UnknownShape(v.shape().to_string()))?;
    match Structure::Bin(skeleton).fill(v.payload().to_vec())? {
        Structure::Bin(t) => Ok(t),
        _ => unreachable!("fill preserves the variant"),
    }
}

/// Wraps a container's canonical traversal as a traversable descriptor.
pub fn container_traversable(name: impl Into<String>, container: FiniteContainer) -> ContainerTraversable {
    ContainerTraversable::new(name, container)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::effect::{const_free, identity, list, Identity};

    fn tok_seq(tokens: &[u32]) -> Effect {
        Effect::Const(Value::Seq(tokens.iter().copied().map(Value::Token).collect()))
    }

    #[test]
    fn mu_k_clauses() {
        let app = list();
        assert_eq!(mu_k(&*app, 0, &[]).unwrap(), app.unit(Value::unit()));
        let u = Effect::List(vec![Value::Atom(1), Value::Atom(2)]);
        assert_eq!(
            mu_k(&*app, 1, std::slice::from_ref(&u)).unwrap().to_string(),
            "[<1>,<2>]"
        );
        assert!(matches!(
            mu_k(&*app, 2, &[u]),
            Err(Error::LengthMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn mu_k_at_free_monoid_combines_left_to_right() {
        let out = mu_k(&*const_free(), 3, &[tok_seq(&[0]), tok_seq(&[1]), tok_seq(&[2])]).unwrap();
        assert_eq!(out, tok_seq(&[0, 1, 2]));
    }

    #[test]
    fn canonical_dist_examples() {
        let c = FiniteContainer::single(2);
        let v = c
            .value(
                "s",
                vec![
                    Value::effect(Effect::Id(Value::Atom(1))),
                    Value::effect(Effect::Id(Value::Atom(2))),
                ],
            )
            .unwrap();
        let out = canonical_dist(&c, &Identity, &v).unwrap();
        let expected = c.value("s", vec![Value::Atom(1), Value::Atom(2)]).unwrap();
        assert_eq!(out, Effect::Id(Value::structure(Structure::Container(expected))));

        let v = c
            .value("s", vec![Value::effect(tok_seq(&[0])), Value::effect(tok_seq(&[1]))])
            .unwrap();
        assert_eq!(canonical_dist(&c, &*const_free(), &v).unwrap(), tok_seq(&[0, 1]));
    }

    #[test]
    fn arity_zero_distributes_to_pure() {
        let c = FiniteContainer::single(0);
        let v = c.value("s", vec![]).unwrap();
        let out = canonical_dist(&c, &*list(), &v).unwrap();
        assert_eq!(out, list().unit(Value::structure(Structure::Container(v))));
    }

    #[test]
    fn arity_is_checked() {
        let c = FiniteContainer::single(2);
        assert!(matches!(
            c.value("s", vec![Value::Atom(0)]),
            Err(Error::ArityMismatch { arity: 2, found: 1, .. })
        ));
        assert!(matches!(c.value("t", vec![]), Err(Error::UnknownShape(_))));
        let other = FiniteContainer::single(1);
        let v = other.value("s", vec![Value::effect(Effect::Id(Value::Atom(0)))]).unwrap();
        assert!(canonical_dist(&c, &*identity(), &v).is_err());
        assert!(FiniteContainer::from_shapes([("p", 2), ("p", 3)]).is_err());
    }

    #[test]
    fn reversed_order_visits_back_to_front() {
        let trav = ContainerTraversable::reversed("rev", FiniteContainer::single(3));
        let c = trav.container().clone();
        let v = c
            .value(
                "s",
                (0..3).map(|i| Value::effect(tok_seq(&[i]))).collect(),
            )
            .unwrap();
        let out = trav.dist(&*const_free(), &Structure::Container(v)).unwrap();
        assert_eq!(out, tok_seq(&[2, 1, 0]));
    }

    #[test]
    fn with_order_validates_permutation() {
        let base = ContainerTraversable::new("c", FiniteContainer::single(3));
        assert!(base.clone().with_order("s", vec![2, 0, 1]).is_ok());
        assert!(base.clone().with_order("s", vec![0, 0, 1]).is_err());
        assert!(base.clone().with_order("s", vec![0, 1]).is_err());
        assert!(base.with_order("t", vec![]).is_err());
    }

    #[test]
    fn list_encoding() {
        let xs = vec![Value::Atom(7), Value::Atom(8)];
        let v = encode_list(&xs, 3).unwrap();
        assert_eq!(v.shape().as_str(), "2");
        assert_eq!(v.payload(), xs.as_slice());
        assert_eq!(decode_list(&v).unwrap(), xs);
        assert!(matches!(
            encode_list(&xs, 1),
            Err(Error::BudgetExceeded { size: 2, budget: 1 })
        ));
    }

    #[test]
    fn bin_encoding() {
        let t = Bin::node(Bin::leaf_node(Value::Atom(1)), Value::Atom(2), Bin::Leaf);
        let v = encode_bin(&t, 3).unwrap();
        assert_eq!(v.shape().as_str(), "N(N(L,L),L)");
        assert_eq!(v.to_string(), "N(N(L,L),L){1,2}");
        assert_eq!(decode_bin(&v).unwrap(), t);
        assert_eq!(bin_container(3).len(), 1 + 1 + 2 + 5);
        assert!(parse_bin_shape("N(L,L").is_none());
        assert!(parse_bin_shape("N(L,L)x").is_none());
    }
}
