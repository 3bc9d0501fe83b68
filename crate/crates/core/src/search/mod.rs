//! Desk-scale numeric search over reduced cells, and brute-force oracles
//! over the full box `[-R, R]^n` to validate the reductions.
//!
//! Every cell is searched by a grid scan followed by multistart local
//! descent. Cells run in parallel; each owns a ChaCha stream derived from
//! `(random_seed, cell index)` and results are merged in enumeration order,
//! so reports do not depend on scheduling.
//!
//! A negative feasibility answer is heuristic. The only emptiness claims
//! made are for constraints that are impossible on their face (see
//! [`trivially_infeasible`]).

mod local;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::float::Compiled;
use crate::poly::{f64_to_rational, Exponent, Poly, Rational};
use crate::reduce::{
    point_profile, substitute_rep, CellInstance, Constraint, Partition, PointProfile, ReductionPlan, Relation,
};
use crate::symfun::{to_power_sums, SymError};

use local::{descend, Penalty, Smooth};

/// Upper limit on grid points scanned per cell; the per-axis count shrinks
/// in higher dimension to respect it.
const GRID_BUDGET: usize = 50_000;
/// Local descents the full-space oracles run from their best samples.
const ORACLE_DESCENTS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("the reduction plan has no cells")]
    EmptyPlan,
    #[error("objective has {got} variables but the plan is for {expected}")]
    Arity { expected: usize, got: usize },
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Search box `[-R, R]^k`.
    pub box_radius: f64,
    pub grid_points_per_axis: usize,
    pub multistart_count: usize,
    pub descent_max_iters: usize,
    pub feasibility_tolerance: f64,
    pub random_seed: u64,
    /// Random samples drawn by the oracles when `n > 3`.
    pub oracle_samples: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            box_radius: 2.0,
            grid_points_per_axis: 33,
            multistart_count: 64,
            descent_max_iters: 200,
            feasibility_tolerance: 1e-8,
            random_seed: 0,
            oracle_samples: 100_000,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), SearchError> {
        let bad = |what: &str| Err(SearchError::InvalidConfig(what.to_string()));
        if !(self.box_radius.is_finite() && self.box_radius > 0.0) {
            return bad("box_radius must be positive");
        }
        if self.grid_points_per_axis == 0 || self.multistart_count == 0 || self.descent_max_iters == 0 {
            return bad("grid, multistart and iteration counts must be positive");
        }
        if self.oracle_samples == 0 {
            return bad("oracle_samples must be positive");
        }
        if !(self.feasibility_tolerance.is_finite() && self.feasibility_tolerance >= 0.0) {
            return bad("feasibility_tolerance must be nonnegative");
        }
        Ok(())
    }

    /// Margin strict relations are pushed to during descent.
    fn strict_margin(&self) -> f64 {
        (100.0 * self.feasibility_tolerance).max(1e-6)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    FeasibleWitnessFound,
    /// Nothing found within the box and budget; not a proof of emptiness.
    NoWitnessFound,
    /// Some constraint is impossible on its face.
    InfeasibleProved,
    MinEstimate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub verdict: Verdict,
    /// Full-space point expanded from the winning cell.
    pub witness: Option<Vec<f64>>,
    pub witness_cell: Option<Partition>,
    /// Best objective value, or the penalty at the witness for feasibility.
    pub value: Option<f64>,
    /// Objective re-evaluated exactly at the witness (rounded to `f64`).
    pub exact_value: Option<f64>,
    /// Whether exact evaluation at the witness satisfies every original
    /// constraint within ten times the tolerance.
    pub witness_verified: Option<bool>,
    pub cells_examined: usize,
    pub profile: Option<PointProfile>,
    pub note: String,
}

/// A plan cell prepared for float search: orthant cells are rewritten in
/// `s` with `T_j = s_j²`.
struct PreparedCell<'a> {
    partition: &'a Partition,
    orthant: bool,
    dim: usize,
    lo: f64,
    hi: f64,
}

impl<'a> PreparedCell<'a> {
    fn new(cell: &'a CellInstance, radius: f64) -> Self {
        let half = if cell.orthant_restricted { radius.sqrt() } else { radius };
        PreparedCell {
            partition: &cell.partition,
            orthant: cell.orthant_restricted,
            dim: cell.partition.effective_len(),
            lo: -half,
            hi: half,
        }
    }

    /// Puts a reduced polynomial into search coordinates.
    fn lift(&self, reduced: &Poly) -> Poly {
        if !self.orthant {
            return reduced.clone();
        }
        let k = self.dim;
        let squares: Vec<Poly> = (0..k)
            .map(|j| {
                let mut e = vec![0; k];
                e[j] = 2;
                Poly::monomial(Exponent::new(e), Rational::one())
            })
            .collect();
        reduced.compose(&squares, k).expect("one square per variable")
    }

    /// Cell values `T` from search coordinates.
    fn values(&self, s: &[f64]) -> Vec<f64> {
        if self.orthant {
            s.iter().map(|v| v * v).collect()
        } else {
            s.to_vec()
        }
    }

    fn witness(&self, s: &[f64]) -> Vec<f64> {
        self.partition.expand(&self.values(s), 0.0)
    }
}

fn cell_rng(cfg: &SearchConfig, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.random_seed);
    rng.set_stream(index as u64);
    rng
}

fn grid_axis(points: usize, lo: f64, hi: f64) -> Vec<f64> {
    if points == 1 {
        return vec![0.5 * (lo + hi)];
    }
    (0..points)
        .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
        .collect()
}

/// Visits every point of a `dim`-dimensional tensor grid.
fn for_each_grid_point(dim: usize, axis: &[f64], mut visit: impl FnMut(&[f64])) {
    let m = axis.len();
    let mut idx = vec![0usize; dim];
    let mut x: Vec<f64> = vec![axis[0]; dim];
    loop {
        visit(&x);
        let mut d = 0;
        loop {
            if d == dim {
                return;
            }
            idx[d] += 1;
            if idx[d] < m {
                x[d] = axis[idx[d]];
                break;
            }
            idx[d] = 0;
            x[d] = axis[0];
            d += 1;
        }
    }
}

fn grid_points_for(cfg: &SearchConfig, dim: usize) -> usize {
    let mut m = cfg.grid_points_per_axis.max(2);
    while m > 2 && m.checked_pow(dim as u32).is_none_or(|t| t > GRID_BUDGET) {
        m -= 1;
    }
    m
}

/// Grid scan plus random starts; returns starting points ordered by the
/// scan's preference (best grid points first, then random points).
fn starting_points<F: Smooth>(f: &F, cfg: &SearchConfig, lo: f64, hi: f64, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let dim = f.dim();
    let axis = grid_axis(grid_points_for(cfg, dim), lo, hi);
    let mut scored: Vec<(f64, Vec<f64>)> = Vec::new();
    for_each_grid_point(dim, &axis, |x| {
        let v = f.value(x);
        scored.push((if v.is_nan() { f64::INFINITY } else { v }, x.to_vec()));
    });
    scored.sort_by(|a, b| a.0.total_cmp(&b.0));
    let from_grid = cfg.multistart_count.div_ceil(2).min(scored.len());
    let mut starts: Vec<Vec<f64>> = scored.into_iter().take(from_grid).map(|(_, x)| x).collect();
    while starts.len() < cfg.multistart_count {
        starts.push((0..dim).map(|_| rng.random_range(lo..=hi)).collect());
    }
    starts
}

struct CellMin {
    s: Vec<f64>,
    value: f64,
}

fn minimize_cell(cell: &PreparedCell<'_>, poly: &Poly, cfg: &SearchConfig, rng: &mut ChaCha8Rng) -> CellMin {
    let compiled = Compiled::new(poly);
    if cell.dim == 0 {
        return CellMin {
            s: Vec::new(),
            value: compiled.value.eval(&[]),
        };
    }
    let mut best = CellMin {
        s: Vec::new(),
        value: f64::INFINITY,
    };
    for start in starting_points(&compiled, cfg, cell.lo, cell.hi, rng) {
        let (s, v) = descend(&compiled, &start, cell.lo, cell.hi, cfg.descent_max_iters);
        if v < best.value || best.s.is_empty() {
            best = CellMin { s, value: v };
        }
    }
    best
}

/// Minimum of the objective over the plan's cells inside the search box.
pub fn minimize_reduced(
    plan: &ReductionPlan,
    objective: &Poly,
    cfg: &SearchConfig,
) -> Result<SearchReport, SearchError> {
    cfg.validate()?;
    if plan.cells.is_empty() {
        return Err(SearchError::EmptyPlan);
    }
    if objective.nvars() != plan.nvars {
        return Err(SearchError::Arity {
            expected: plan.nvars,
            got: objective.nvars(),
        });
    }
    let rep = to_power_sums(objective)?;
    let results: Vec<(CellMin, Vec<f64>)> = plan
        .cells
        .par_iter()
        .enumerate()
        .map(|(i, cell)| {
            let prepared = PreparedCell::new(cell, cfg.box_radius);
            let poly = prepared.lift(&substitute_rep(&rep, &cell.partition));
            let mut rng = cell_rng(cfg, i);
            let m = minimize_cell(&prepared, &poly, cfg, &mut rng);
            let w = prepared.witness(&m.s);
            (m, w)
        })
        .collect();
    let (best_idx, (best, witness)) = results
        .into_iter()
        .enumerate()
        .reduce(|a, b| if b.1 .0.value < a.1 .0.value { b } else { a })
        .expect("at least one cell");
    let exact_value = exact_eval(objective, &witness);
    Ok(SearchReport {
        verdict: Verdict::MinEstimate,
        profile: Some(point_profile(&witness, 0.0)),
        witness: Some(witness),
        witness_cell: Some(plan.cells[best_idx].partition.clone()),
        value: Some(best.value),
        exact_value,
        witness_verified: None,
        cells_examined: plan.cells.len(),
        note: format!(
            "minimum over {} cells (bound {}) within the box of radius {}",
            plan.cells.len(),
            plan.bound,
            cfg.box_radius
        ),
    })
}

fn exact_point(x: &[f64]) -> Option<Vec<Rational>> {
    x.iter().map(|&v| f64_to_rational(v)).collect()
}

fn exact_eval(f: &Poly, x: &[f64]) -> Option<f64> {
    let pt = exact_point(x)?;
    crate::poly::rational_to_f64(&f.eval(&pt).ok()?).into()
}

/// Checks the original constraints exactly at a float point.
pub fn verify_witness(system: &[Constraint], x: &[f64], tol: f64) -> bool {
    let (Some(pt), Some(tol)) = (exact_point(x), f64_to_rational(tol)) else {
        return false;
    };
    system.iter().all(|c| {
        c.poly
            .eval(&pt)
            .map(|v| c.relation.holds_exact(&v, &tol))
            .unwrap_or(false)
    })
}

/// True when a constraint cannot hold anywhere: the polynomial is constant
/// and violates its relation, or every monomial has only even exponents and
/// all coefficients share one sign, pinning the value on one side of its
/// constant term in a way the relation rules out.
pub fn trivially_infeasible(c: &Constraint) -> bool {
    let f = &c.poly;
    if f.is_zero() {
        return matches!(c.relation, Relation::Gt | Relation::Ne);
    }
    let c0 = f.constant_term();
    let even = f.terms().all(|(e, _)| e.as_slice().iter().all(|k| k % 2 == 0));
    if !even {
        return false;
    }
    let nonconst = || f.terms().filter(|(e, _)| !e.is_constant());
    let all_nonneg = nonconst().all(|(_, v)| v.is_positive());
    let all_nonpos = nonconst().all(|(_, v)| v.is_negative());
    let zero = Rational::zero();
    // f >= c0 everywhere (attained at 0) when all_nonneg; f <= c0 when all_nonpos
    match c.relation {
        Relation::Eq => (all_nonneg && c0 > zero) || (all_nonpos && c0 < zero),
        Relation::Ge => all_nonpos && c0 < zero,
        Relation::Gt => all_nonpos && c0 <= zero,
        Relation::Ne => false,
    }
}

fn penalty_for(constraints: Vec<(Poly, Relation)>, dim: usize, cfg: &SearchConfig) -> Penalty {
    Penalty {
        constraints: constraints.into_iter().map(|(p, r)| (Compiled::new(&p), r)).collect(),
        margin: cfg.strict_margin(),
        dim,
    }
}

/// Searches every cell for a point satisfying all reduced constraints.
pub fn check_feasible(plan: &ReductionPlan, cfg: &SearchConfig) -> Result<SearchReport, SearchError> {
    cfg.validate()?;
    if plan.cells.is_empty() {
        return Err(SearchError::EmptyPlan);
    }
    if let Some(i) = plan.system.iter().position(trivially_infeasible) {
        return Ok(SearchReport {
            verdict: Verdict::InfeasibleProved,
            witness: None,
            witness_cell: None,
            value: None,
            exact_value: None,
            witness_verified: None,
            cells_examined: 0,
            profile: None,
            note: format!("constraint {} cannot be satisfied by any real point", i + 1),
        });
    }
    let tol = cfg.feasibility_tolerance;
    let found: Vec<Option<(Vec<f64>, f64)>> = plan
        .cells
        .par_iter()
        .enumerate()
        .map(|(i, cell)| {
            let prepared = PreparedCell::new(cell, cfg.box_radius);
            let constraints = cell
                .constraints
                .iter()
                .map(|c| (prepared.lift(&c.reduced), c.relation))
                .collect();
            let penalty = penalty_for(constraints, prepared.dim, cfg);
            let mut rng = cell_rng(cfg, i);
            feasible_point(&penalty, &prepared, cfg, &mut rng, tol).map(|(s, v)| (prepared.witness(&s), v))
        })
        .collect();
    let hit = found.into_iter().enumerate().find_map(|(i, r)| r.map(|r| (i, r)));
    Ok(match hit {
        Some((i, (witness, penalty))) => SearchReport {
            verdict: Verdict::FeasibleWitnessFound,
            witness_verified: Some(verify_witness(&plan.system, &witness, 10.0 * tol)),
            profile: Some(point_profile(&witness, 0.0)),
            witness: Some(witness),
            witness_cell: Some(plan.cells[i].partition.clone()),
            value: Some(penalty),
            exact_value: None,
            cells_examined: plan.cells.len(),
            note: format!("witness found in cell {}", plan.cells[i].partition),
        },
        None => SearchReport {
            verdict: Verdict::NoWitnessFound,
            witness: None,
            witness_cell: None,
            value: None,
            exact_value: None,
            witness_verified: None,
            cells_examined: plan.cells.len(),
            profile: None,
            note: format!(
                "no witness in {} cells within the box of radius {} (heuristic, not a proof of emptiness)",
                plan.cells.len(),
                cfg.box_radius
            ),
        },
    })
}

fn feasible_point(
    penalty: &Penalty,
    cell: &PreparedCell<'_>,
    cfg: &SearchConfig,
    rng: &mut ChaCha8Rng,
    tol: f64,
) -> Option<(Vec<f64>, f64)> {
    if cell.dim == 0 {
        return penalty.satisfied(&[], tol).then(|| (Vec::new(), penalty.value(&[])));
    }
    for start in starting_points(penalty, cfg, cell.lo, cell.hi, rng) {
        if penalty.satisfied(&start, tol) {
            return Some((start.clone(), penalty.value(&start)));
        }
        let (s, v) = descend(penalty, &start, cell.lo, cell.hi, cfg.descent_max_iters);
        if penalty.satisfied(&s, tol) {
            return Some((s, v));
        }
    }
    None
}

/// Candidate points for the full-space oracles: the whole grid for `n <= 3`,
/// seeded uniform samples otherwise.
fn oracle_candidates(n: usize, cfg: &SearchConfig, mut score: impl FnMut(&[f64]) -> f64) -> Vec<(f64, Vec<f64>)> {
    let r = cfg.box_radius;
    let mut scored = Vec::new();
    if n <= 3 {
        let axis = grid_axis(cfg.grid_points_per_axis, -r, r);
        for_each_grid_point(n, &axis, |x| scored.push((score(x), x.to_vec())));
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.random_seed);
        rng.set_stream(u64::MAX);
        let mut x = vec![0.0; n];
        for _ in 0..cfg.oracle_samples {
            for v in x.iter_mut() {
                *v = rng.random_range(-r..=r);
            }
            scored.push((score(&x), x.clone()));
        }
    }
    for s in scored.iter_mut() {
        if s.0.is_nan() {
            s.0 = f64::INFINITY;
        }
    }
    scored.sort_by(|a, b| a.0.total_cmp(&b.0));
    scored
}

/// Brute-force minimum of `f` over the full box, with local refinement of
/// the best samples. Returns the best point and value.
pub fn oracle_min_point(f: &Poly, cfg: &SearchConfig) -> (Vec<f64>, f64) {
    let n = f.nvars();
    let compiled = Compiled::new(f);
    if n == 0 {
        return (Vec::new(), compiled.value.eval(&[]));
    }
    let r = cfg.box_radius;
    let scored = oracle_candidates(n, cfg, |x| compiled.value.eval(x));
    let starts: Vec<Vec<f64>> = scored.into_iter().take(ORACLE_DESCENTS).map(|(_, x)| x).collect();
    let refined: Vec<(Vec<f64>, f64)> = starts
        .par_iter()
        .map(|x0| descend(&compiled, x0, -r, r, cfg.descent_max_iters))
        .collect();
    refined
        .into_iter()
        .reduce(|a, b| if b.1 < a.1 { b } else { a })
        .expect("at least one start")
}

pub fn oracle_min(f: &Poly, cfg: &SearchConfig) -> f64 {
    oracle_min_point(f, cfg).1
}

/// Brute-force search for a point of the full box satisfying the system.
pub fn oracle_feasible(system: &[Constraint], cfg: &SearchConfig) -> Option<Vec<f64>> {
    let n = system.first()?.poly.nvars();
    let tol = cfg.feasibility_tolerance;
    let r = cfg.box_radius;
    let penalty = penalty_for(system.iter().map(|c| (c.poly.clone(), c.relation)).collect(), n, cfg);
    if n == 0 {
        return penalty.satisfied(&[], tol).then(Vec::new);
    }
    let scored = oracle_candidates(n, cfg, |x| penalty.value(x));
    if let Some((_, x)) = scored.iter().find(|(v, x)| *v == 0.0 && penalty.satisfied(x, tol)) {
        return Some(x.clone());
    }
    let starts: Vec<Vec<f64>> = scored.into_iter().take(ORACLE_DESCENTS).map(|(_, x)| x).collect();
    let refined: Vec<Option<Vec<f64>>> = starts
        .par_iter()
        .map(|x0| {
            let (x, _) = descend(&penalty, x0, -r, r, cfg.descent_max_iters);
            penalty.satisfied(&x, tol).then_some(x)
        })
        .collect();
    refined.into_iter().flatten().next()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{power_sum, rat};
    use crate::reduce::{plan_degree_principle, plan_half_degree, plan_jsparse, HalfDegreeMode};
    use crate::sparsity::SparsitySupport;

    fn cfg(radius: f64) -> SearchConfig {
        SearchConfig {
            box_radius: radius,
            ..SearchConfig::default()
        }
    }

    #[test]
    fn p2_minimum_at_origin() {
        let f = power_sum(3, 2);
        let plan = plan_half_degree(&f, HalfDegreeMode::NonnegGlobal).unwrap();
        let rep = minimize_reduced(&plan, &f, &cfg(1.0)).unwrap();
        assert_eq!(rep.verdict, Verdict::MinEstimate);
        assert!(rep.value.unwrap().abs() < 1e-12);
        assert!(rep.profile.unwrap().distinct_count <= plan.bound);
    }

    #[test]
    fn cauchy_schwarz_quartic_is_nonnegative() {
        let f = &power_sum(3, 4).scale(&rat(3)) - &power_sum(3, 2).pow(2);
        let plan = plan_half_degree(&f, HalfDegreeMode::NonnegGlobal).unwrap();
        assert_eq!(plan.bound, 2);
        let rep = minimize_reduced(&plan, &f, &cfg(2.0)).unwrap();
        assert!(rep.value.unwrap() >= -1e-6);
        let oracle = oracle_min(&f, &cfg(2.0));
        assert!((-1e-6..=0.05).contains(&oracle), "oracle {oracle}");
    }

    #[test]
    fn linear_boundary_minimum() {
        let f = power_sum(3, 1);
        let plan = plan_degree_principle(&[Constraint::new(f.clone(), Relation::Ge)]).unwrap();
        let rep = minimize_reduced(&plan, &f, &cfg(1.0)).unwrap();
        assert_eq!(rep.value.unwrap(), -3.0);
        assert_eq!(rep.witness.unwrap(), vec![-1.0; 3]);
        assert_eq!(rep.witness_cell.unwrap().parts(), &[3]);
    }

    #[test]
    fn uniform_point_on_p2_sphere() {
        let n = 4;
        let f = &power_sum(n, 2) - &Poly::one(n);
        let sys = [Constraint::new(f, Relation::Eq)];
        let plan = plan_jsparse(&sys, &SparsitySupport::new(n, [2])).unwrap();
        let rep = check_feasible(&plan, &SearchConfig::default()).unwrap();
        assert_eq!(rep.verdict, Verdict::FeasibleWitnessFound);
        let w = rep.witness.unwrap();
        assert!(w.iter().all(|&v| (v - 0.5).abs() < 1e-8), "{w:?}");
        assert_eq!(rep.profile.unwrap().distinct_positive_count, 1);
        assert_eq!(rep.witness_verified, Some(true));
    }

    #[test]
    fn negative_sphere_is_proved_empty() {
        let f = &power_sum(3, 2) + &Poly::one(3);
        let sys = [Constraint::new(f, Relation::Eq)];
        let plan = plan_degree_principle(&sys).unwrap();
        let rep = check_feasible(&plan, &SearchConfig::default()).unwrap();
        assert_eq!(rep.verdict, Verdict::InfeasibleProved);
        assert!(oracle_feasible(&sys, &SearchConfig::default()).is_none());
    }

    #[test]
    fn two_equations_in_two_variables() {
        let n = 2;
        let sys = [
            Constraint::new(power_sum(n, 1), Relation::Eq),
            Constraint::new(&power_sum(n, 2) - &Poly::constant(n, rat(2)), Relation::Eq),
        ];
        let plan = plan_degree_principle(&sys).unwrap();
        let rep = check_feasible(&plan, &SearchConfig::default()).unwrap();
        assert_eq!(rep.verdict, Verdict::FeasibleWitnessFound);
        assert_eq!(rep.witness_cell.unwrap().parts(), &[1, 1]);
        let w = rep.witness.unwrap();
        assert!((w[0].abs() - 1.0).abs() < 1e-8 && (w[0] + w[1]).abs() < 1e-8);
    }

    #[test]
    fn oracle_examples() {
        assert!(oracle_min(&power_sum(3, 2), &cfg(2.0)).abs() < 1e-12);
        assert_eq!(oracle_min(&power_sum(2, 1), &cfg(1.0)), -2.0);
        let x = oracle_feasible(&[Constraint::new(power_sum(2, 1), Relation::Eq)], &cfg(2.0)).unwrap();
        assert!((x[0] + x[1]).abs() <= 1e-8);
        let n = 3;
        let sys = [
            Constraint::new(&Poly::one(n) - &power_sum(n, 2), Relation::Ge),
            Constraint::new(&power_sum(n, 1) - &Poly::one(n), Relation::Ge),
        ];
        let x = oracle_feasible(&sys, &cfg(2.0)).unwrap();
        assert!(verify_witness(&sys, &x, 1e-8));
    }

    #[test]
    fn trivial_infeasibility_rules() {
        let n = 2;
        let p2 = power_sum(n, 2);
        let c = |p: Poly, r| Constraint::new(p, r);
        assert!(trivially_infeasible(&c(&p2 + &Poly::one(n), Relation::Eq)));
        assert!(trivially_infeasible(&c(&(-&p2) - &Poly::one(n), Relation::Ge)));
        assert!(trivially_infeasible(&c(-&p2, Relation::Gt)));
        assert!(!trivially_infeasible(&c(-&p2, Relation::Ge)));
        assert!(!trivially_infeasible(&c(&p2 - &Poly::one(n), Relation::Eq)));
        assert!(!trivially_infeasible(&c(power_sum(n, 1), Relation::Eq)));
        assert!(trivially_infeasible(&c(Poly::zero(n), Relation::Ne)));
        assert!(trivially_infeasible(&c(Poly::constant(n, rat(-1)), Relation::Ge)));
    }

    #[test]
    fn reports_are_deterministic() {
        let f = &power_sum(4, 4) - &power_sum(4, 2);
        let plan = plan_half_degree(&f, HalfDegreeMode::NonnegGlobal).unwrap();
        let a = minimize_reduced(&plan, &f, &SearchConfig::default()).unwrap();
        let b = minimize_reduced(&plan, &f, &SearchConfig::default()).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn config_validation() {
        let bad = SearchConfig {
            box_radius: -1.0,
            ..SearchConfig::default()
        };
        assert!(bad.validate().is_err());
        assert!(SearchConfig::default().validate().is_ok());
    }
}
