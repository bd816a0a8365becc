//! The `lawcheck` command: runs the law suites against a named instance or a
//! container loaded from a file, and prints a text or JSON report.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{ArgGroup, Parser, ValueEnum};
use serde::Serialize;

use traverse_laws::container::{ContainerTraversable, FiniteContainer};
use traverse_laws::lawcheck::{failing_laws, run_suite, GenerationBudget, Law, LawReport};
use traverse_laws::registry;
use traverse_laws::Traversable;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONTAINER: i32 = 3;

pub const CAP_ENV: &str = "LAWCHECK_BUDGET_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LawSelection {
    All,
    One(Law),
}

fn parse_law(s: &str) -> Result<LawSelection, String> {
    if s == "all" {
        return Ok(LawSelection::All);
    }
    let law: Law = s.parse()?;
    Ok(LawSelection::One(law))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "lawcheck", version, about = "Check traversal laws by bounded-exhaustive enumeration")]
#[command(group(ArgGroup::new("target").required(true).args(["instance", "container"])))]
pub struct Cli {
    /// Registered instance name (see --list)
    #[arg(long)]
    pub instance: Option<String>,

    /// Container file: one `<shape-id> <arity>` per line
    #[arg(long, value_name = "PATH")]
    pub container: Option<PathBuf>,

    /// Laws to check, comma separated: unitarity, purity, linearity,
    /// naturality, kleisli, visit-once, applicative, morphism, all
    #[arg(long, value_delimiter = ',', value_parser = parse_law, default_value = "all")]
    pub laws: Vec<LawSelection>,

    /// Largest structure size (positions)
    #[arg(long)]
    pub size: Option<usize>,

    /// Atom domain, comma separated
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub atoms: Option<Vec<i64>>,

    /// Largest list length inside effects
    #[arg(long)]
    pub width: Option<usize>,

    /// Composition layers receiving non-pure samples
    #[arg(long)]
    pub nesting: Option<usize>,

    /// Cases per check before truncation (default: $LAWCHECK_BUDGET_CAP or 1000000)
    #[arg(long)]
    pub cap: Option<usize>,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Succeed only if the instance fails exactly its documented laws
    #[arg(long)]
    pub expect_fail: bool,
}

impl Cli {
    /// `env_cap` is the value of `LAWCHECK_BUDGET_CAP`, if set.
    pub fn budget(&self, env_cap: Option<&str>) -> Result<GenerationBudget, String> {
        let mut b = GenerationBudget::default();
        if let Some(raw) = env_cap {
            b.case_cap = raw
                .trim()
                .parse()
                .map_err(|_| format!("{CAP_ENV}: `{raw}` is not a non-negative integer"))?;
        }
        if let Some(v) = self.size {
            b.max_structure_size = v;
        }
        if let Some(v) = &self.atoms {
            b.atom_domain = v.clone();
        }
        if let Some(v) = self.width {
            b.max_effect_width = v;
        }
        if let Some(v) = self.nesting {
            b.max_nesting = v;
        }
        if let Some(v) = self.cap {
            b.case_cap = v;
        }
        Ok(b)
    }

    pub fn selected_laws(&self) -> Vec<Law> {
        let mut laws = BTreeSet::new();
        for sel in &self.laws {
            match sel {
                LawSelection::All => {
                    laws.extend([Law::Applicative, Law::Morphism]);
                    laws.extend(Law::TRAVERSAL);
                }
                LawSelection::One(l) => {
                    laws.insert(*l);
                }
            }
        }
        laws.into_iter().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainerParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ContainerParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ContainerParseError {}

/// Parses `<shape-id> <arity>` lines. Blank lines and `#` comments are
/// skipped.
pub fn parse_container_file(text: &str) -> Result<FiniteContainer, ContainerParseError> {
    let mut container = FiniteContainer::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| ContainerParseError { line, message };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [shape, arity] = fields.as_slice() else {
            return Err(err(format!("expected `<shape-id> <arity>`, found `{content}`")));
        };
        if !arity.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err(format!("arity `{arity}` is not a non-negative integer")));
        }
        let arity: usize = arity
            .parse()
            .map_err(|_| err(format!("arity `{arity}` is out of range")))?;
        if container.arity(&(*shape).into()).is_some() {
            return Err(err(format!("duplicate shape `{shape}`")));
        }
        container
            .insert(*shape, arity)
            .map_err(|e| err(e.to_string()))?;
    }
    Ok(container)
}

#[derive(Debug, Serialize)]
pub struct BudgetDoc {
    pub size: usize,
    pub atoms: Vec<i64>,
    pub width: usize,
    pub nesting: usize,
    pub cap: usize,
}

impl From<&GenerationBudget> for BudgetDoc {
    fn from(b: &GenerationBudget) -> Self {
        BudgetDoc {
            size: b.max_structure_size,
            atoms: b.atom_domain.clone(),
            width: b.max_effect_width,
            nesting: b.max_nesting,
            cap: b.case_cap,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct WitnessDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clause: Option<String>,
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Serialize)]
pub struct ReportDoc {
    pub law: String,
    pub applicatives: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub morphism: Option<String>,
    pub cases_run: usize,
    pub verdict: String,
    pub truncated: bool,
    pub reference: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

impl From<&LawReport> for ReportDoc {
    fn from(r: &LawReport) -> Self {
        ReportDoc {
            law: r.law.to_string(),
            applicatives: r.applicatives.clone(),
            morphism: r.morphism.clone(),
            cases_run: r.cases_run,
            verdict: r.verdict.to_string(),
            truncated: r.truncated,
            reference: r.reference,
            witness: r.witness.as_ref().map(|w| WitnessDoc {
                clause: w.clause.clone(),
                input: w.input.to_string(),
                lhs: w.lhs.to_string(),
                rhs: w.rhs.to_string(),
            }),
        }
    }
}

/// The outcome of one run.
#[derive(Debug, Serialize)]
pub struct RunDoc {
    pub instance: String,
    pub budget: BudgetDoc,
    pub expect_fail: bool,
    pub expected_failures: Vec<String>,
    pub failing_laws: Vec<String>,
    pub ok: bool,
    pub reports: Vec<ReportDoc>,
}

/// Whether the failing laws match what was asked for. Without `expect_fail`
/// nothing may fail. With it, the failing laws must be exactly the
/// instance's documented failures among the selected laws (or every selected
/// law, for an instance documenting none), and at least one.
pub fn matches_expectation(failing: &BTreeSet<Law>, expected: &BTreeSet<Law>, expect_fail: bool) -> bool {
    if expect_fail {
        !expected.is_empty() && failing == expected
    } else {
        failing.is_empty()
    }
}

pub fn expected_failures(trav: &dyn Traversable, selected: &[Law]) -> BTreeSet<Law> {
    let declared = trav.expected_failures();
    if declared.is_empty() {
        selected.iter().copied().collect()
    } else {
        declared.into_iter().filter(|l| selected.contains(l)).collect()
    }
}

/// Failure before any law ran, with the exit code to use.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

fn usage(message: String) -> CliError {
    CliError { code: EXIT_USAGE, message }
}

/// Resolves the target, runs the checks, and returns the run document.
pub fn run(cli: &Cli, env_cap: Option<&str>) -> Result<RunDoc, CliError> {
    let budget = cli.budget(env_cap).map_err(usage)?;
    let (label, trav): (String, registry::Instance) = match (&cli.instance, &cli.container) {
        (Some(name), _) => {
            let inst = registry::instance(name, budget.max_structure_size).ok_or_else(|| {
                let known: Vec<&str> = registry::names().collect();
                usage(format!("unknown instance `{name}`; known: {}", known.join(", ")))
            })?;
            (name.clone(), inst)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError {
                code: EXIT_CONTAINER,
                message: format!("{}: {e}", path.display()),
            })?;
            let container = parse_container_file(&text).map_err(|e| CliError {
                code: EXIT_CONTAINER,
                message: format!("{}: {e}", path.display()),
            })?;
            let label = path.display().to_string();
            (label.clone(), Arc::new(ContainerTraversable::new(label, container)))
        }
        (None, None) => return Err(usage("one of --instance or --container is required".into())),
    };

    let selected = cli.selected_laws();
    let reports = run_suite(&*trav, &budget, &selected).map_err(|e| CliError {
        code: EXIT_MISMATCH,
        message: e.to_string(),
    })?;
    let failing = failing_laws(&reports);
    let expected = expected_failures(&*trav, &selected);
    let names = |laws: &BTreeSet<Law>| laws.iter().map(|l| l.to_string()).collect();
    Ok(RunDoc {
        instance: label,
        budget: (&budget).into(),
        expect_fail: cli.expect_fail,
        expected_failures: if cli.expect_fail { names(&expected) } else { Vec::new() },
        failing_laws: names(&failing),
        ok: matches_expectation(&failing, &expected, cli.expect_fail),
        reports: reports.iter().map(ReportDoc::from).collect(),
    })
}

impl RunDoc {
    pub fn exit_code(&self) -> i32 {
        if self.ok {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let b = &self.budget;
        let atoms: Vec<String> = b.atoms.iter().map(i64::to_string).collect();
        writeln!(out, "instance: {}", self.instance).unwrap();
        writeln!(
            out,
            "budget: size {}, atoms {{{}}}, width {}, nesting {}, cap {}",
            b.size,
            atoms.join(","),
            b.width,
            b.nesting,
            b.cap
        )
        .unwrap();
        for r in &self.reports {
            let mut at = r.applicatives.join(", ");
            if let Some(m) = &r.morphism {
                at = format!("{m}: {at}");
            }
            let mut flags = String::new();
            if r.truncated {
                flags.push_str(" truncated");
            }
            if r.reference {
                flags.push_str(" reference");
            }
            writeln!(
                out,
                "{:<5} {:<12} [{}] cases {}{}",
                r.verdict.to_uppercase(),
                r.law,
                at,
                r.cases_run,
                flags
            )
            .unwrap();
            if let Some(w) = &r.witness {
                if let Some(c) = &w.clause {
                    writeln!(out, "      clause: {c}").unwrap();
                }
                writeln!(out, "      input:  {}", w.input).unwrap();
                writeln!(out, "      lhs:    {}", w.lhs).unwrap();
                writeln!(out, "      rhs:    {}", w.rhs).unwrap();
            }
        }
        let failed = self.reports.iter().filter(|r| r.verdict == "fail").count();
        writeln!(out, "checks: {}, failed: {failed}", self.reports.len()).unwrap();
        if self.expect_fail {
            writeln!(out, "expected failing laws: {}", list_or_none(&self.expected_failures)).unwrap();
        }
        writeln!(out, "failing laws: {}", list_or_none(&self.failing_laws)).unwrap();
        writeln!(out, "result: {}", if self.ok { "ok" } else { "mismatch" }).unwrap();
        out
    }
}

fn list_or_none(items: &[String]) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items.join(", ")
    }
}
