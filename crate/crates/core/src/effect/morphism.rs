use std::fmt;
use std::sync::Arc;

use super::{compose, identity, list, option, App, Effect};
use crate::error::{Error, Result};
use crate::value::Value;

type EffectFn = dyn Fn(&Effect) -> Result<Effect> + Send + Sync;

/// A candidate applicative morphism `F → G`. Whether it really preserves
/// unit and multiplication is decided by `lawcheck::check_morphism`.
#[derive(Clone)]
pub struct Morphism {
    name: Arc<str>,
    source: App,
    target: App,
    apply: Arc<EffectFn>,
}

impl Morphism {
    pub fn new<F>(name: impl Into<Arc<str>>, source: App, target: App, apply: F) -> Self
    where
        F: Fn(&Effect) -> Result<Effect> + Send + Sync + 'static,
    {
        Morphism {
            name: name.into(),
            source,
            target,
            apply: Arc::new(apply),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &App {
        &self.source
    }

    pub fn target(&self) -> &App {
        &self.target
    }

    pub fn apply(&self, e: &Effect) -> Result<Effect> {
        (self.apply)(e)
    }

    /// `η : Id → F`, the unique morphism out of the initial applicative.
    pub fn unit_embedding(target: App) -> Self {
        let name = format!("eta[{}]", target.name());
        let t = target.clone();
        Morphism::new(name, identity(), target, move |e| match e {
            Effect::Id(x) => Ok(t.unit(x.clone())),
            bad => Err(Error::malformed("Identity", bad)),
        })
    }

    /// `List → Option`, first element if any.
    pub fn safe_head() -> Self {
        Morphism::new("safe-head", list(), option(), |e| match e {
            Effect::List(xs) => Ok(Effect::Opt(xs.first().cloned())),
            bad => Err(Error::malformed("List", bad)),
        })
    }

    /// `List → Option`, last element if any. Also a morphism: the last pair of
    /// a left-outer product is the pair of last elements.
    pub fn safe_last() -> Self {
        Morphism::new("safe-last", list(), option(), |e| match e {
            Effect::List(xs) => Ok(Effect::Opt(xs.last().cloned())),
            bad => Err(Error::malformed("List", bad)),
        })
    }

    /// `List → Option`, second element if any. Not a morphism.
    pub fn safe_second() -> Self {
        Morphism::new("safe-second", list(), option(), |e| match e {
            Effect::List(xs) => Ok(Effect::Opt(xs.get(1).cloned())),
            bad => Err(Error::malformed("List", bad)),
        })
    }

    /// `flatten : Option ∘ Option → Option`.
    pub fn option_flatten() -> Self {
        Monad::option().flatten_morphism()
    }

    /// Unit embeddings into every battery member, then safe-head and the
    /// option flatten.
    pub fn battery() -> Vec<Morphism> {
        super::battery()
            .into_iter()
            .map(Morphism::unit_embedding)
            .chain([Morphism::safe_head(), Morphism::option_flatten()])
            .collect()
    }

    pub fn by_name(name: &str) -> Option<Morphism> {
        Morphism::battery()
            .into_iter()
            .chain([Morphism::safe_last(), Morphism::safe_second()])
            .chain([Monad::list().flatten_morphism(), Monad::identity().flatten_morphism()])
            .find(|m| m.name() == name)
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Morphism({}: {} -> {})",
            self.name,
            self.source.name(),
            self.target.name()
        )
    }
}

/// A monad given by its applicative and its multiplication on raw nested
/// effects (`M (M X)` without a `Comp` wrapper).
#[derive(Clone)]
pub struct Monad {
    name: Arc<str>,
    applicative: App,
    flatten: Arc<EffectFn>,
}

impl Monad {
    pub fn new<F>(name: impl Into<Arc<str>>, applicative: App, flatten: F) -> Self
    where
        F: Fn(&Effect) -> Result<Effect> + Send + Sync + 'static,
    {
        Monad {
            name: name.into(),
            applicative,
            flatten: Arc::new(flatten),
        }
    }

    pub fn option() -> Self {
        Monad::new("Option", option(), |e| match e {
            Effect::Opt(None) => Ok(Effect::Opt(None)),
            Effect::Opt(Some(inner)) => match inner.as_effect()? {
                inner @ Effect::Opt(_) => Ok(inner.clone()),
                bad => Err(Error::malformed("Option", bad)),
            },
            bad => Err(Error::malformed("Option", bad)),
        })
    }

    pub fn list() -> Self {
        Monad::new("List", list(), |e| match e {
            Effect::List(outer) => {
                let mut out = Vec::new();
                for inner in outer {
                    match inner.as_effect()? {
                        Effect::List(xs) => out.extend(xs.iter().cloned()),
                        bad => return Err(Error::malformed("List", bad)),
                    }
                }
                Ok(Effect::List(out))
            }
            bad => Err(Error::malformed("List", bad)),
        })
    }

    pub fn identity() -> Self {
        Monad::new("Identity", identity(), |e| match e {
            Effect::Id(inner) => match inner.as_effect()? {
                inner @ Effect::Id(_) => Ok(inner.clone()),
                bad => Err(Error::malformed("Identity", bad)),
            },
            bad => Err(Error::malformed("Identity", bad)),
        })
    }

    pub fn by_name(name: &str) -> Option<Monad> {
        match name {
            "Option" => Some(Monad::option()),
            "List" => Some(Monad::list()),
            "Identity" => Some(Monad::identity()),
            _ => None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn applicative(&self) -> &App {
        &self.applicative
    }

    pub fn is_commutative(&self) -> bool {
        self.applicative.is_commutative()
    }

    pub fn flatten(&self, e: &Effect) -> Result<Effect> {
        (self.flatten)(e)
    }

    /// `flatten` seen as a candidate morphism `M ∘ M → M`.
    pub fn flatten_morphism(&self) -> Morphism {
        let me = self.clone();
        Morphism::new(
            format!("flatten[{}]", self.name),
            compose(self.applicative.clone(), self.applicative.clone()),
            self.applicative.clone(),
            move |e| me.flatten(e.un_comp()?),
        )
    }

    /// Lifts an `M X` into `M (M X)` by `map unit`; useful for samples.
    pub fn nest(&self, e: &Effect) -> Result<Effect> {
        let app = self.applicative.clone();
        self.applicative
            .map(&|x| Ok(Value::effect(app.unit(x.clone()))), e)
    }
}

impl fmt::Debug for Monad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monad({})", self.name)
    }
}
