use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::reduce::{ReductionPlan, TheoremTag};
use crate::search::{SearchConfig, SearchReport};
use crate::sparsity::support_of_rep;
use crate::symfun::PowerSumRep;
use crate::Degree;

/// Version of the report layout described by `docs/report.schema.json`.
pub const SCHEMA_VERSION: &str = "1.0.0";

/// Plans larger than this list only their cell count.
const MAX_LISTED_CELLS: usize = 200;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Decomposition {
    pub source: String,
    /// `g` in the power-sum variables `p1..pn`.
    pub g: String,
    pub weighted_degree: Option<u32>,
    pub support: Vec<usize>,
}

impl Decomposition {
    pub fn new(source: String, rep: &PowerSumRep) -> Self {
        Decomposition {
            source,
            g: rep.to_text(),
            weighted_degree: match rep.weighted_degree() {
                Degree::Finite(d) => Some(d),
                Degree::MinusInfinity => None,
            },
            support: support_of_rep(rep).indices().iter().copied().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanSummary {
    pub theorem: TheoremTag,
    pub bound: usize,
    pub published_bound: Option<usize>,
    pub bound_override: Option<usize>,
    pub orthant_restricted: bool,
    pub degree: u32,
    pub cell_count: usize,
    /// Cell labels such as `(2,1)` or `(1)+2z`, when requested and not too many.
    pub cells: Option<Vec<String>>,
    pub notes: Vec<String>,
}

impl PlanSummary {
    pub fn new(plan: &ReductionPlan, bound_override: Option<usize>, list_cells: bool) -> Self {
        PlanSummary {
            theorem: plan.theorem,
            bound: plan.bound,
            published_bound: plan.published_bound,
            bound_override,
            orthant_restricted: plan.orthant_restricted,
            degree: plan.degree,
            cell_count: plan.cell_count(),
            cells: (list_cells && plan.cell_count() <= MAX_LISTED_CELLS)
                .then(|| plan.cells.iter().map(|c| c.partition.to_string()).collect()),
            notes: plan.notes.clone(),
        }
    }
}

/// Full-space sampling run alongside the reduced search.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleCheck {
    /// Sampled minimum, for nonnegativity checks.
    pub value: Option<f64>,
    /// Best sampled point, or a feasible point for emptiness checks.
    pub point: Option<Vec<f64>>,
    /// Whether the reduced search did at least as well as the oracle.
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub tool: String,
    pub tool_version: String,
    pub mode: String,
    pub reduction: Option<String>,
    pub nvars: usize,
    pub input_sha256: String,
    pub config: SearchConfig,
    pub decomposition: Vec<Decomposition>,
    pub support: Option<Vec<usize>>,
    pub gradient_support: Option<Vec<usize>>,
    pub plan: Option<PlanSummary>,
    pub search: Option<SearchReport>,
    pub oracle: Option<OracleCheck>,
    pub outcome: String,
    pub exit_code: i32,
    pub elapsed_seconds: f64,
}

impl Report {
    pub fn new(mode: &str, nvars: usize, input_sha256: String, config: SearchConfig) -> Self {
        Report {
            schema_version: SCHEMA_VERSION.to_string(),
            tool: env!("CARGO_PKG_NAME").to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            mode: mode.to_string(),
            reduction: None,
            nvars,
            input_sha256,
            config,
            decomposition: Vec::new(),
            support: None,
            gradient_support: None,
            plan: None,
            search: None,
            oracle: None,
            outcome: String::new(),
            exit_code: 0,
            elapsed_seconds: 0.0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    /// Human-readable summary.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}: {}", self.mode, self.outcome);
        let _ = writeln!(s, "nvars: {}", self.nvars);
        for d in &self.decomposition {
            let _ = writeln!(s, "{}: g = {}", d.source, d.g);
        }
        if let Some(j) = &self.support {
            let _ = writeln!(s, "support J: {}", index_set(j));
        }
        if let Some(h) = &self.gradient_support {
            let _ = writeln!(s, "gradient test: {}", index_set(h));
        }
        if let Some(p) = &self.plan {
            let _ = writeln!(
                s,
                "plan: {:?}, bound {}{}, {} cells",
                p.theorem,
                p.bound,
                if p.orthant_restricted { " (orthant)" } else { "" },
                p.cell_count
            );
            if let Some(cells) = &p.cells {
                let _ = writeln!(s, "cells: {}", cells.join(" "));
            }
            for n in &p.notes {
                let _ = writeln!(s, "note: {n}");
            }
        }
        if let Some(r) = &self.search {
            if let Some(v) = r.value {
                let _ = writeln!(s, "search value: {v}");
            }
            if let Some(w) = &r.witness {
                let _ = writeln!(s, "witness: {w:?}");
            }
            if let Some(c) = &r.witness_cell {
                let _ = writeln!(s, "witness cell: {c}");
            }
        }
        if let Some(o) = &self.oracle {
            if let Some(v) = o.value {
                let _ = writeln!(s, "oracle minimum: {v}");
            }
            let _ = writeln!(s, "oracle consistent: {}", o.consistent);
        }
        let _ = write!(s, "elapsed: {:.3}s", self.elapsed_seconds);
        s
    }
}

fn index_set(j: &[usize]) -> String {
    let parts: Vec<String> = j.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}
