use std::fmt;
use std::str::FromStr;

use crate::effect::{App, Effect};
use crate::traverse::Structure;
use crate::value::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    Applicative,
    Morphism,
    Unitarity,
    Purity,
    Linearity,
    Naturality,
    Kleisli,
    VisitOnce,
}

impl Law {
    /// The laws a traversable instance is checked against, in suite order.
    pub const TRAVERSAL: [Law; 6] = [
        Law::Unitarity,
        Law::Purity,
        Law::Linearity,
        Law::Naturality,
        Law::Kleisli,
        Law::VisitOnce,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Law::Applicative => "applicative",
            Law::Morphism => "morphism",
            Law::Unitarity => "unitarity",
            Law::Purity => "purity",
            Law::Linearity => "linearity",
            Law::Naturality => "naturality",
            Law::Kleisli => "kleisli",
            Law::VisitOnce => "visit-once",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Law {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [Law::Applicative, Law::Morphism]
            .into_iter()
            .chain(Law::TRAVERSAL)
            .find(|l| l.as_str() == s)
            .ok_or_else(|| format!("unknown law `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// A failing case: the input and the two sides that should have agreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Which equation failed, for checks bundling several.
    pub clause: Option<String>,
    pub input: Value,
    pub lhs: Effect,
    pub rhs: Effect,
}

impl Witness {
    pub fn new(input: Value, lhs: Effect, rhs: Effect) -> Self {
        Witness {
            clause: None,
            input,
            lhs,
            rhs,
        }
    }

    pub fn with_clause(mut self, clause: impl Into<String>) -> Self {
        self.clause = Some(clause.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: Law,
    pub traversable: Option<String>,
    pub applicatives: Vec<String>,
    pub morphism: Option<String>,
    pub cases_run: usize,
    pub verdict: Verdict,
    /// Enumeration stopped at the case cap.
    pub truncated: bool,
    /// The case came from the instance's hand-picked inputs.
    pub reference: bool,
    pub witness: Option<Witness>,
}

impl LawReport {
    pub(crate) fn new(law: Law, traversable: Option<String>, applicatives: Vec<String>) -> Self {
        LawReport {
            law,
            traversable,
            applicatives,
            morphism: None,
            cases_run: 0,
            verdict: Verdict::Pass,
            truncated: false,
            reference: false,
            witness: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// A specific input replayed for one law at fixed applicatives.
#[derive(Clone)]
pub struct ReferenceCase {
    pub law: Law,
    pub applicatives: Vec<App>,
    pub input: Structure,
}

impl fmt::Debug for ReferenceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.applicatives.iter().map(|a| a.name()).collect();
        f.debug_struct("ReferenceCase")
            .field("law", &self.law)
            .field("applicatives", &names)
            .field("input", &self.input.to_string())
            .finish()
    }
}
