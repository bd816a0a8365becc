//! Applicative functors and traversable functors as runtime descriptors, with
//! a bounded-exhaustive checker for the traversal laws.
//!
//! ```
//! use traverse_laws::{lawcheck, registry};
//!
//! let list = registry::instance("list", 3).unwrap();
//! let budget = lawcheck::GenerationBudget::default();
//! let report = lawcheck::check_unitarity(&*list, &budget).unwrap();
//! assert!(report.passed());
//! ```

pub mod container;
pub mod effect;
pub mod error;
pub mod lawcheck;
pub mod registry;
pub mod rogue;
pub mod traverse;
pub mod value;

pub use effect::{App, Applicative, Effect};
pub use error::{Error, Result};
pub use traverse::{Bin, Structure, Traversable};
pub use value::{Func, Value};
