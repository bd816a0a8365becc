//! Named traversable instances, for the command line and registry-wide tests.

use std::sync::Arc;

use crate::container::{bin_container, list_container, ContainerTraversable, FiniteContainer};
use crate::rogue::{DiagId, DistL, DistL1, DistL2};
use crate::traverse::{BinTraversable, IdTraversable, ListTraversable, Traversable};

pub type Instance = Arc<dyn Traversable>;

/// Hand-written and container instances expected to satisfy every law.
pub const LAWFUL: [&str; 10] = [
    "list",
    "bin",
    "id",
    "list-container",
    "bin-container",
    "list-container-reversed",
    "arity-0",
    "arity-1",
    "arity-2",
    "arity-3",
];

pub const ROGUE: [&str; 4] = ["distL", "distL1", "distL2", "diagId"];

/// Looks an instance up by name. Container instances are built with shapes up
/// to `max_size` positions.
pub fn instance(name: &str, max_size: usize) -> Option<Instance> {
    let inst: Instance = match name {
        "list" => Arc::new(ListTraversable),
        "bin" => Arc::new(BinTraversable),
        "id" => Arc::new(IdTraversable),
        "distL" => Arc::new(DistL),
        "distL1" => Arc::new(DistL1),
        "distL2" => Arc::new(DistL2),
        "diagId" => Arc::new(DiagId),
        "list-container" => Arc::new(ContainerTraversable::new(name, list_container(max_size))),
        "list-container-reversed" => {
            Arc::new(ContainerTraversable::reversed(name, list_container(max_size)))
        }
        "bin-container" => Arc::new(ContainerTraversable::new(name, bin_container(max_size))),
        _ => {
            let k = name.strip_prefix("arity-")?.parse().ok()?;
            Arc::new(ContainerTraversable::new(name, FiniteContainer::single(k)))
        }
    };
    Some(inst)
}

/// Every registered name, lawful first.
pub fn names() -> impl Iterator<Item = &'static str> {
    LAWFUL.into_iter().chain(ROGUE)
}

pub fn all(max_size: usize) -> Vec<Instance> {
    names().filter_map(|n| instance(n, max_size)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves_to_itself() {
        for name in names() {
            assert_eq!(instance(name, 3).unwrap().name(), name);
        }
        assert!(instance("tree", 3).is_none());
        assert_eq!(instance("arity-7", 3).unwrap().name(), "arity-7");
    }

    #[test]
    fn rogues_declare_failures_and_lawful_ones_do_not() {
        for name in LAWFUL {
            assert!(instance(name, 3).unwrap().expected_failures().is_empty());
        }
        for name in ROGUE {
            assert!(!instance(name, 3).unwrap().expected_failures().is_empty());
        }
    }
}
