//! Command-line front end: reads a polynomial or a system, runs the
//! requested stage of the pipeline and prints a JSON or text report.
//!
//! Exit status is 0 on success, 1 when the queried property is refuted
//! (a negative value for `check-nonneg`, a feasible point for
//! `check-empty`) and 2 on input errors.

mod parse;
mod report;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::poly::Poly;
use crate::reduce::{
    plan_degree_principle, plan_half_degree, plan_jsparse, plan_with_bound, Constraint, HalfDegreeMode, ReduceError,
    ReductionPlan, Relation,
};
use crate::search::{
    check_feasible, minimize_reduced, oracle_feasible, oracle_min_point, SearchConfig, SearchError, Verdict,
};
use crate::sparsity::{gradient_support_test, support, SparsityError, SparsitySupport, DEFAULT_TRIALS};
use crate::symfun::{symmetry_witness, to_power_sums, AsymmetryWitness, SymError};

pub use parse::{parse_expression, parse_inline, parse_system, InputSystem, ParseError};
pub use report::{Decomposition, OracleCheck, PlanSummary, Report, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Slack allowed when comparing the reduced minimum with the oracle's.
const ORACLE_SLACK: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(
    name = "symcert",
    version,
    about = "Test-point reductions for symmetric polynomial problems"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rewrite each polynomial in the power-sum basis.
    Decompose(Options),
    /// Report which power sums each polynomial depends on.
    Sparsity(Options),
    /// Build the reduction plan without searching it.
    Reduce(Options),
    /// Search for a point where the polynomial is negative.
    CheckNonneg(Options),
    /// Search for a point satisfying every constraint.
    CheckEmpty(Options),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Decompose(_) => "decompose",
            Command::Sparsity(_) => "sparsity",
            Command::Reduce(_) => "reduce",
            Command::CheckNonneg(_) => "check-nonneg",
            Command::CheckEmpty(_) => "check-empty",
        }
    }

    fn options(&self) -> &Options {
        match self {
            Command::Decompose(o)
            | Command::Sparsity(o)
            | Command::Reduce(o)
            | Command::CheckNonneg(o)
            | Command::CheckEmpty(o) => o,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReductionMode {
    /// Pick the smallest applicable bound.
    Auto,
    /// At most max(2, d) distinct coordinates.
    Degree,
    /// Nonnegativity on points with at most max(2, d/2) distinct coordinates.
    HalfDegree,
    /// Nonnegativity on the nonnegative orthant.
    HalfDegreeOrthant,
    /// Real zeros of a single equation.
    Variety,
    /// Bound from the set of power sums the input depends on.
    Sparse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Input file, `-` for standard input, or an inline expression when
    /// `--nvars` is given. Inline statements are separated by `;`.
    pub input: String,
    #[arg(long)]
    pub nvars: Option<usize>,
    #[arg(long, value_enum, default_value_t = ReductionMode::Auto)]
    pub mode: ReductionMode,
    /// Search box radius R, giving the box [-R, R]^k.
    #[arg(long = "box")]
    pub box_radius: Option<f64>,
    /// Grid points per axis.
    #[arg(long)]
    pub grid: Option<usize>,
    /// Local descents per cell.
    #[arg(long)]
    pub starts: Option<usize>,
    #[arg(long)]
    pub iters: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Feasibility tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Use this many distinct values per cell instead of the derived bound.
    #[arg(long)]
    pub bound_override: Option<usize>,
    /// Skip the full-space sampling cross-check.
    #[arg(long)]
    pub no_oracle: bool,
    /// Random points for the gradient support test.
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
}

impl Options {
    pub fn search_config(&self) -> SearchConfig {
        let d = SearchConfig::default();
        SearchConfig {
            box_radius: self.box_radius.unwrap_or(d.box_radius),
            grid_points_per_axis: self.grid.unwrap_or(d.grid_points_per_axis),
            multistart_count: self.starts.unwrap_or(d.multistart_count),
            descent_max_iters: self.iters.unwrap_or(d.descent_max_iters),
            feasibility_tolerance: self.tol.unwrap_or(d.feasibility_tolerance),
            random_seed: self.seed.unwrap_or(d.random_seed),
            oracle_samples: d.oracle_samples,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{label} is not symmetric: {witness}")]
    NotSymmetric { label: String, witness: AsymmetryWitness },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Sparsity(#[from] SparsityError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

fn read_input(opts: &Options, stdin: &mut dyn Read) -> Result<(InputSystem, String), CliError> {
    if opts.input == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text).map_err(|source| CliError::Io {
            path: "standard input".into(),
            source,
        })?;
        return Ok((parse_system(&text, opts.nvars)?, text));
    }
    if let Some(n) = opts.nvars {
        if n == 0 {
            return Err(CliError::Usage("--nvars must be positive".into()));
        }
        let sys = parse_inline(&opts.input, n)?;
        return Ok((sys, format!("nvars: {n}\n{}", opts.input)));
    }
    let text = std::fs::read_to_string(&opts.input).map_err(|source| CliError::Io {
        path: opts.input.clone(),
        source,
    })?;
    Ok((parse_system(&text, None)?, text))
}

/// Every polynomial of the input with a label for diagnostics.
fn labelled(sys: &InputSystem) -> Vec<(String, &Poly)> {
    let mut out: Vec<(String, &Poly)> = sys.objective.iter().map(|f| ("objective".to_string(), f)).collect();
    out.extend(
        sys.constraints
            .iter()
            .enumerate()
            .map(|(i, c)| (format!("constraint {}", i + 1), &c.poly)),
    );
    out
}

fn require_symmetric(sys: &InputSystem) -> Result<(), CliError> {
    for (label, f) in labelled(sys) {
        if let Some(witness) = symmetry_witness(f) {
            return Err(CliError::NotSymmetric { label, witness });
        }
    }
    Ok(())
}

fn hash(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Union of the supports of every constraint.
fn system_support(system: &[Constraint]) -> Result<SparsitySupport, SymError> {
    let n = system[0].poly.nvars();
    system
        .iter()
        .try_fold(SparsitySupport::new(n, []), |acc, c| Ok(acc.union(&support(&c.poly)?)))
}

fn jsparse_bound(j: &SparsitySupport) -> usize {
    if j.all_even() {
        j.len()
    } else {
        j.max_index().map_or(0, |m| m.min(2 * j.len() + 1))
    }
}

fn feasibility_plan(system: &[Constraint], mode: ReductionMode) -> Result<ReductionPlan, CliError> {
    if system.is_empty() {
        return Err(CliError::Usage("no constraints given".into()));
    }
    let single_eq = system.len() == 1 && system[0].relation == Relation::Eq;
    match mode {
        ReductionMode::Degree => Ok(plan_degree_principle(system)?),
        ReductionMode::Sparse => Ok(plan_jsparse(system, &system_support(system)?)?),
        ReductionMode::Variety if single_eq => Ok(plan_half_degree(&system[0].poly, HalfDegreeMode::Variety)?),
        ReductionMode::Variety => Err(CliError::Usage("--mode variety needs exactly one equation".into())),
        ReductionMode::HalfDegree | ReductionMode::HalfDegreeOrthant => Err(CliError::Usage(
            "half-degree modes apply to nonnegativity of a single polynomial".into(),
        )),
        ReductionMode::Auto => {
            let d = system.iter().map(|c| c.poly.degree().or_zero()).max().unwrap_or(0) as usize;
            let degree_bound = d.max(2);
            let j = system_support(system)?;
            let sparse_bound = jsparse_bound(&j);
            let variety_bound = (d / 2).max(2);
            if single_eq && variety_bound <= sparse_bound && variety_bound < degree_bound {
                Ok(plan_half_degree(&system[0].poly, HalfDegreeMode::Variety)?)
            } else if sparse_bound <= degree_bound {
                Ok(plan_jsparse(system, &j)?)
            } else {
                Ok(plan_degree_principle(system)?)
            }
        }
    }
}

fn nonneg_plan(f: &Poly, mode: ReductionMode) -> Result<ReductionPlan, CliError> {
    let system = [Constraint::new(f.clone(), Relation::Ge)];
    match mode {
        ReductionMode::Auto | ReductionMode::HalfDegree => Ok(plan_half_degree(f, HalfDegreeMode::NonnegGlobal)?),
        ReductionMode::HalfDegreeOrthant => Ok(plan_half_degree(f, HalfDegreeMode::NonnegOrthant)?),
        ReductionMode::Degree => Ok(plan_degree_principle(&system)?),
        ReductionMode::Sparse => Ok(plan_jsparse(&system, &support(f)?)?),
        ReductionMode::Variety => Err(CliError::Usage(
            "--mode variety applies to equations, not nonnegativity".into(),
        )),
    }
}

fn apply_override(plan: ReductionPlan, bound: Option<usize>) -> Result<ReductionPlan, CliError> {
    let Some(k) = bound else { return Ok(plan) };
    let mut out = plan_with_bound(plan.theorem, &plan.system, k, plan.orthant_restricted)?;
    out.notes = plan.notes;
    out.notes.push(format!(
        "bound overridden on the command line: {k} instead of the derived {}",
        plan.bound
    ));
    Ok(out)
}

fn nonneg_objective(sys: &InputSystem) -> Result<&Poly, CliError> {
    match (&sys.objective, sys.constraints.as_slice()) {
        (Some(f), []) => Ok(f),
        (None, [c]) if c.relation == Relation::Ge => Ok(&c.poly),
        _ => Err(CliError::Usage(
            "check-nonneg takes a single polynomial (an objective, or one '>= 0' line)".into(),
        )),
    }
}

fn fmt_point(x: &[f64]) -> String {
    let parts: Vec<String> = x.iter().map(|v| format!("{v}")).collect();
    format!("({})", parts.join(", "))
}

fn cell_set_name(plan: &ReductionPlan) -> String {
    if plan.orthant_restricted {
        format!("A_{}+", plan.bound)
    } else {
        format!("A_{}", plan.bound)
    }
}

/// Runs a parsed command and builds its report.
pub fn execute(command: &Command, stdin: &mut dyn Read) -> Result<Report, CliError> {
    let start = Instant::now();
    let opts = command.options();
    let cfg = opts.search_config();
    cfg.validate()?;
    let (sys, raw) = read_input(opts, stdin)?;
    require_symmetric(&sys)?;
    let mut report = Report::new(command.name(), sys.nvars, hash(&raw), cfg);
    if !matches!(command, Command::Decompose(_) | Command::Sparsity(_)) {
        report.reduction = Some(
            opts.mode
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
                .to_string(),
        );
    }
    for (source, f) in labelled(&sys) {
        let rep = to_power_sums(f)?;
        report.decomposition.push(Decomposition::new(source, &rep));
    }
    match command {
        Command::Decompose(_) => {
            report.outcome = format!("decomposed {} polynomial(s)", report.decomposition.len());
        }
        Command::Sparsity(_) => {
            let polys = labelled(&sys);
            if polys.is_empty() {
                return Err(CliError::Usage("no polynomial given".into()));
            }
            let mut j = SparsitySupport::new(sys.nvars, []);
            let mut h = SparsitySupport::new(sys.nvars, []);
            for (_, f) in polys {
                j = j.union(&support(f)?);
                h = h.union(&gradient_support_test(f, opts.trials)?.support);
            }
            report.support = Some(j.indices().iter().copied().collect());
            report.gradient_support = Some(h.indices().iter().copied().collect());
            report.outcome = if j == h {
                format!("J = {j}; the gradient test agrees")
            } else {
                format!("J = {j}; the gradient test found {h}")
            };
        }
        Command::Reduce(_) => {
            let plan = if sys.constraints.is_empty() {
                let f = sys
                    .objective
                    .as_ref()
                    .ok_or_else(|| CliError::Usage("no polynomial given".into()))?;
                nonneg_plan(f, opts.mode)?
            } else {
                feasibility_plan(&sys.constraints, opts.mode)?
            };
            let plan = apply_override(plan, opts.bound_override)?;
            report.outcome = format!(
                "{} cells on {} (bound {})",
                plan.cell_count(),
                cell_set_name(&plan),
                plan.bound
            );
            report.plan = Some(PlanSummary::new(&plan, opts.bound_override, true));
        }
        Command::CheckNonneg(_) => {
            let f = nonneg_objective(&sys)?;
            let plan = apply_override(nonneg_plan(f, opts.mode)?, opts.bound_override)?;
            let search = minimize_reduced(&plan, f, &cfg)?;
            let min = search.value.unwrap_or(f64::INFINITY);
            let negative = min < -cfg.feasibility_tolerance && search.exact_value.is_none_or(|v| v < 0.0);
            if !opts.no_oracle {
                let (point, value) = oracle_min_point(f, &cfg);
                report.oracle = Some(OracleCheck {
                    value: Some(value),
                    consistent: min <= value + ORACLE_SLACK,
                    point: Some(point),
                });
            }
            if negative {
                report.exit_code = EXIT_REFUTED;
                report.outcome = format!(
                    "counterexample found: f{} = {} < 0",
                    fmt_point(search.witness.as_deref().unwrap_or(&[])),
                    search.exact_value.unwrap_or(min)
                );
            } else {
                report.outcome = format!(
                    "no counterexample found on {} (bound {}, {} cells)",
                    cell_set_name(&plan),
                    plan.bound,
                    plan.cell_count()
                );
            }
            report.plan = Some(PlanSummary::new(&plan, opts.bound_override, false));
            report.search = Some(search);
        }
        Command::CheckEmpty(_) => {
            if sys.objective.is_some() {
                return Err(CliError::Usage(
                    "check-empty takes constraints only; every line needs a relation".into(),
                ));
            }
            let plan = apply_override(feasibility_plan(&sys.constraints, opts.mode)?, opts.bound_override)?;
            let search = check_feasible(&plan, &cfg)?;
            let found = search.verdict == Verdict::FeasibleWitnessFound;
            if !opts.no_oracle && search.verdict != Verdict::InfeasibleProved {
                let point = oracle_feasible(&sys.constraints, &cfg);
                report.oracle = Some(OracleCheck {
                    value: None,
                    consistent: found || point.is_none(),
                    point,
                });
            }
            report.outcome = match search.verdict {
                Verdict::FeasibleWitnessFound => {
                    report.exit_code = EXIT_REFUTED;
                    format!(
                        "system is feasible: witness {}",
                        fmt_point(search.witness.as_deref().unwrap_or(&[]))
                    )
                }
                Verdict::InfeasibleProved => format!("system is empty: {}", search.note),
                _ => format!(
                    "no witness found on {} (bound {}, {} cells); heuristic, not a proof of emptiness",
                    cell_set_name(&plan),
                    plan.bound,
                    plan.cell_count()
                ),
            };
            report.plan = Some(PlanSummary::new(&plan, opts.bound_override, false));
            report.search = Some(search);
        }
    }
    report.elapsed_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Full command-line entry point; returns the process exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let out: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command, stdin) {
        Ok(report) => {
            let text = match cli.command.options().format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            let _ = writeln!(stdout, "{text}");
            report.exit_code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INPUT
        }
    }
}
