//! Test-set bounds, cell enumeration and the reduced polynomials `f^ϑ`.
//!
//! A cell is a partition `ϑ` of `n` (optionally with a block of coordinates
//! pinned to zero). It parameterizes the points whose coordinates take `k`
//! values `T_1..T_k` with multiplicities `ϑ_1..ϑ_k`; substituting such a
//! point into `f` gives a `k`-variate polynomial. Substitution runs on the
//! power-sum form, `p_i ↦ Σ_j ϑ_j·T_j^i`, so its cost tracks the size of `g`
//! rather than `n`.

use std::collections::HashSet;
use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{rat, Exponent, Poly, Rational};
use crate::sparsity::{support_of_rep, SparsitySupport};
use crate::symfun::{to_power_sums, PowerSumRep, SymError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error("constraint {index} has {got} variables, expected {expected}")]
    Arity { index: usize, expected: usize, got: usize },
    #[error("cell is for n = {cell} but the polynomial has {poly} variables")]
    CellArity { cell: usize, poly: usize },
    #[error("the constraint system is empty")]
    EmptySystem,
    #[error("constraint {index} depends on power sums {support}, which is not contained in J = {declared}")]
    NotSparse {
        index: usize,
        support: String,
        declared: String,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

/// A weakly decreasing sequence of positive parts plus a count of
/// coordinates pinned to zero, covering `n` coordinates in total.
///
/// Zero parts are dropped on construction; `declared_len` keeps the length
/// the cell was enumerated with.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    n: usize,
    parts: Vec<usize>,
    zero_block: usize,
    declared_len: usize,
}

impl Partition {
    pub fn new(n: usize, parts: Vec<usize>, zero_block: usize) -> Result<Self, ReduceError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ReduceError::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        let total: usize = parts.iter().sum::<usize>() + zero_block;
        if total != n {
            return Err(ReduceError::InvalidPartition(format!(
                "parts {parts:?} and {zero_block} zeros cover {total} coordinates, not {n}"
            )));
        }
        let declared_len = parts.len();
        let parts = parts.into_iter().filter(|&p| p > 0).collect();
        Ok(Partition {
            n,
            parts,
            zero_block,
            declared_len,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn zero_block(&self) -> usize {
        self.zero_block
    }

    pub fn declared_len(&self) -> usize {
        self.declared_len
    }

    /// Number of free values `T_j`, i.e. the number of nonzero parts.
    pub fn effective_len(&self) -> usize {
        self.parts.len()
    }

    /// The full point: `t[j]` repeated `ϑ_j` times, then `zero_block` zeros.
    pub fn expand<T: Clone>(&self, t: &[T], zero: T) -> Vec<T> {
        assert_eq!(t.len(), self.parts.len(), "one value per part");
        let mut out = Vec::with_capacity(self.n);
        for (v, &m) in t.iter().zip(&self.parts) {
            out.extend(std::iter::repeat_n(v.clone(), m));
        }
        out.extend(std::iter::repeat_n(zero, self.zero_block));
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))?;
        if self.zero_block > 0 {
            write!(f, "+{}z", self.zero_block)?;
        }
        Ok(())
    }
}

/// All weakly decreasing `k`-tuples of nonnegative integers summing to `n`,
/// in lexicographically decreasing order.
pub fn partitions(n: usize, k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(left: usize, max: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // remaining parts are at most `first`, so `first * slots >= left`
        let lo = left.div_ceil(slots);
        for first in (lo..=max.min(left)).rev() {
            cur.push(first);
            rec(left - first, first, slots - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, n, k, &mut cur, &mut out);
    out.into_iter()
        .map(|parts| Partition::new(n, parts, 0).expect("generated partitions are valid"))
        .collect()
}

/// Cells for nonnegative points with at most `d` distinct positive values:
/// `ϑ ⊢_d (n - z)` with `z` pinned zeros, for `z = 0..=n`.
pub fn orthant_cells(n: usize, d: usize) -> Vec<Partition> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for z in 0..=n {
        let m = n - z;
        let cells: Vec<Partition> = if m == 0 {
            vec![Partition::new(n, Vec::new(), n).expect("all-zero cell")]
        } else {
            partitions(m, d)
                .into_iter()
                .map(|p| Partition { n, zero_block: z, ..p })
                .collect()
        };
        for c in cells {
            if seen.insert((c.parts.clone(), c.zero_block)) {
                out.push(c);
            }
        }
    }
    out
}

/// Relation of a constraint polynomial to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "=0")]
    Eq,
    #[serde(rename = ">=0")]
    Ge,
    #[serde(rename = ">0")]
    Gt,
    #[serde(rename = "!=0")]
    Ne,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=0",
            Relation::Ge => ">=0",
            Relation::Gt => ">0",
            Relation::Ne => "!=0",
        }
    }

    /// Tolerant test: equalities within `tol`, strict relations beyond `tol`.
    pub fn holds(self, v: f64, tol: f64) -> bool {
        match self {
            Relation::Eq => v.abs() <= tol,
            Relation::Ge => v >= -tol,
            Relation::Gt => v > tol,
            Relation::Ne => v.abs() > tol,
        }
    }

    pub fn holds_exact(self, v: &Rational, tol: &Rational) -> bool {
        match self {
            Relation::Eq => v.abs() <= *tol,
            Relation::Ge => *v >= -tol.clone(),
            Relation::Gt => v > tol,
            Relation::Ne => v.abs() > *tol,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub poly: Poly,
    pub relation: Relation,
}

impl Constraint {
    pub fn new(poly: Poly, relation: Relation) -> Self {
        Constraint { poly, relation }
    }
}

/// `f^ϑ` for one cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedInstance {
    pub partition: Partition,
    pub reduced: Poly,
    /// Values `T_j` must be strictly positive.
    pub orthant_restricted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedConstraint {
    pub reduced: Poly,
    pub relation: Relation,
}

/// One cell of a plan with every constraint of the system reduced on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellInstance {
    pub partition: Partition,
    pub orthant_restricted: bool,
    pub constraints: Vec<ReducedConstraint>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremTag {
    DegreePrinciple,
    HalfDegree,
    JsparseEven,
    JsparseOdd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HalfDegreeMode {
    NonnegGlobal,
    NonnegOrthant,
    Variety,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionPlan {
    pub theorem: TheoremTag,
    /// Bound on distinct coordinates (`k` or `ℓ`), or on distinct positive
    /// coordinates for orthant plans.
    pub bound: usize,
    /// A weaker bound stated alongside the one in use, when the two differ.
    pub published_bound: Option<usize>,
    pub orthant_restricted: bool,
    pub nvars: usize,
    /// Maximum total degree over the system.
    pub degree: u32,
    /// The unreduced system, kept for witness verification.
    pub system: Vec<Constraint>,
    pub cells: Vec<CellInstance>,
    pub notes: Vec<String>,
}

impl ReductionPlan {
    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }
}

/// `p_i ↦ Σ_j ϑ_j T_j^i` applied to a power-sum representation.
pub fn substitute_rep(rep: &PowerSumRep, cell: &Partition) -> Poly {
    let k = cell.effective_len();
    let subs: Vec<Poly> = (1..=rep.nvars() as u32)
        .map(|i| {
            let terms = cell.parts.iter().enumerate().map(|(j, &m)| {
                let mut e = vec![0; k];
                e[j] = i;
                (Exponent::new(e), rat(m as i64))
            });
            Poly::from_terms(k, terms).expect("exponents have length k")
        })
        .collect();
    rep.g().compose(&subs, k).expect("one substitute per power sum")
}

pub fn substitute(f: &Poly, cell: &Partition) -> Result<ReducedInstance, ReduceError> {
    if cell.n != f.nvars() {
        return Err(ReduceError::CellArity {
            cell: cell.n,
            poly: f.nvars(),
        });
    }
    let rep = to_power_sums(f)?;
    Ok(ReducedInstance {
        partition: cell.clone(),
        reduced: substitute_rep(&rep, cell),
        orthant_restricted: cell.zero_block > 0,
    })
}

fn system_reps(system: &[Constraint]) -> Result<(usize, Vec<PowerSumRep>), ReduceError> {
    let first = system.first().ok_or(ReduceError::EmptySystem)?;
    let n = first.poly.nvars();
    let mut reps = Vec::with_capacity(system.len());
    for (index, c) in system.iter().enumerate() {
        if c.poly.nvars() != n {
            return Err(ReduceError::Arity {
                index,
                expected: n,
                got: c.poly.nvars(),
            });
        }
        reps.push(to_power_sums(&c.poly)?);
    }
    Ok((n, reps))
}

fn system_degree(system: &[Constraint]) -> u32 {
    system.iter().map(|c| c.poly.degree().or_zero()).max().unwrap_or(0)
}

fn build_cells(system: &[Constraint], reps: &[PowerSumRep], cells: Vec<Partition>, orthant: bool) -> Vec<CellInstance> {
    use rayon::prelude::*;
    cells
        .into_par_iter()
        .map(|partition| CellInstance {
            constraints: system
                .iter()
                .zip(reps)
                .map(|(c, rep)| ReducedConstraint {
                    reduced: substitute_rep(rep, &partition),
                    relation: c.relation,
                })
                .collect(),
            orthant_restricted: orthant,
            partition,
        })
        .collect()
}

/// Builds a plan with an explicit bound. `orthant` selects orthant cells
/// (at most `bound` distinct positive values plus zeros) instead of
/// partitions of `n` into `bound` parts.
pub fn plan_with_bound(
    theorem: TheoremTag,
    system: &[Constraint],
    bound: usize,
    orthant: bool,
) -> Result<ReductionPlan, ReduceError> {
    let (n, reps) = system_reps(system)?;
    let cells = if orthant {
        orthant_cells(n, bound)
    } else {
        partitions(n, bound)
    };
    Ok(ReductionPlan {
        theorem,
        bound,
        published_bound: None,
        orthant_restricted: orthant,
        nvars: n,
        degree: system_degree(system),
        cells: build_cells(system, &reps, cells, orthant),
        system: system.to_vec(),
        notes: Vec::new(),
    })
}

/// Degree principle: a symmetric system of degree `d` is feasible iff it is
/// feasible on points with at most `max(2, d)` distinct coordinates.
pub fn plan_degree_principle(system: &[Constraint]) -> Result<ReductionPlan, ReduceError> {
    let d = system_degree(system) as usize;
    plan_with_bound(TheoremTag::DegreePrinciple, system, d.max(2), false)
}

/// Half-degree principle for a single polynomial of degree `d`.
///
/// * `NonnegGlobal`: `f >= 0` on `ℝⁿ`, tested on `A_k`, `k = max(2, ⌊d/2⌋)`.
/// * `NonnegOrthant`: `f >= 0` on the nonnegative orthant, tested on orthant
///   cells with `max(1, ⌊d/2⌋)` distinct positive values.
/// * `Variety`: `f = 0` has a real solution, searched on `A_k` with the same
///   `k` as the global case; the stated `max(2, d)` is kept as
///   `published_bound`.
pub fn plan_half_degree(f: &Poly, mode: HalfDegreeMode) -> Result<ReductionPlan, ReduceError> {
    let d = f.degree().or_zero() as usize;
    let half = d / 2;
    let (bound, orthant, relation) = match mode {
        HalfDegreeMode::NonnegGlobal => (half.max(2), false, Relation::Ge),
        HalfDegreeMode::NonnegOrthant => (half.max(1), true, Relation::Ge),
        HalfDegreeMode::Variety => (half.max(2), false, Relation::Eq),
    };
    let system = [Constraint::new(f.clone(), relation)];
    let mut plan = plan_with_bound(TheoremTag::HalfDegree, &system, bound, orthant)?;
    if mode == HalfDegreeMode::Variety {
        let stated = d.max(2);
        plan.published_bound = Some(stated);
        plan.notes.push(format!(
            "variety search uses k = max(2, floor(d/2)) = {bound}; the weaker stated bound is max(2, d) = {stated}"
        ));
    }
    Ok(plan)
}

/// Reduction for `J`-sparse systems. All-even `J` gives orthant cells with at
/// most `|J|` distinct positive values; otherwise partitions into
/// `ℓ = min(max J, 2|J| + 1)` parts.
pub fn plan_jsparse(system: &[Constraint], j: &SparsitySupport) -> Result<ReductionPlan, ReduceError> {
    let (_, reps) = system_reps(system)?;
    for (index, rep) in reps.iter().enumerate() {
        let s = support_of_rep(rep);
        if !s.is_subset(j) {
            return Err(ReduceError::NotSparse {
                index,
                support: s.to_string(),
                declared: j.to_string(),
            });
        }
    }
    let d = j.len();
    if j.all_even() {
        plan_with_bound(TheoremTag::JsparseEven, system, d, true)
    } else {
        let jd = j.max_index().expect("an odd index exists");
        plan_with_bound(TheoremTag::JsparseOdd, system, jd.min(2 * d + 1), false)
    }
}

/// Number of distinct coordinates and of distinct positive coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointProfile {
    pub distinct_count: usize,
    pub distinct_positive_count: usize,
    pub tolerance: f64,
}

/// Profile of a float point. Sorted coordinates whose consecutive gaps are
/// at most `tol` are merged into one value (single linkage). A merged group
/// counts as positive when all its members exceed `tol`.
pub fn point_profile(x: &[f64], tol: f64) -> PointProfile {
    let mut v: Vec<f64> = x.to_vec();
    v.sort_by(f64::total_cmp);
    let mut groups: Vec<(f64, f64)> = Vec::new();
    for &xi in &v {
        match groups.last_mut() {
            Some((_, hi)) if xi - *hi <= tol => *hi = xi,
            _ => groups.push((xi, xi)),
        }
    }
    PointProfile {
        distinct_count: groups.len(),
        distinct_positive_count: groups.iter().filter(|(lo, _)| *lo > tol).count(),
        tolerance: tol,
    }
}

pub fn point_profile_exact(x: &[Rational]) -> PointProfile {
    let distinct: HashSet<&Rational> = x.iter().collect();
    PointProfile {
        distinct_count: distinct.len(),
        distinct_positive_count: distinct.iter().filter(|v| v.is_positive()).count(),
        tolerance: 0.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{elem_sym, power_sum, ratio};

    fn parts(ps: &[Partition]) -> Vec<(Vec<usize>, usize)> {
        ps.iter().map(|p| (p.parts().to_vec(), p.zero_block())).collect()
    }

    #[test]
    fn partition_examples() {
        assert_eq!(
            parts(&partitions(4, 2)),
            vec![(vec![4], 0), (vec![3, 1], 0), (vec![2, 2], 0)]
        );
        assert_eq!(parts(&partitions(6, 1)), vec![(vec![6], 0)]);
        assert_eq!(
            parts(&partitions(3, 3)),
            vec![(vec![3], 0), (vec![2, 1], 0), (vec![1, 1, 1], 0)]
        );
        assert!(partitions(4, 2).iter().all(|p| p.declared_len() == 2));
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, vec![1, 2], 0).is_err());
        assert!(Partition::new(3, vec![2], 0).is_err());
        let p = Partition::new(5, vec![3, 1, 0], 1).unwrap();
        assert_eq!(p.effective_len(), 2);
        assert_eq!(p.declared_len(), 3);
        assert_eq!(p.expand(&[7, 8], 0), vec![7, 7, 7, 8, 0]);
        assert_eq!(p.to_string(), "(3,1)+1z");
    }

    #[test]
    fn orthant_cell_examples() {
        assert_eq!(
            parts(&orthant_cells(2, 1)),
            vec![(vec![2], 0), (vec![1], 1), (vec![], 2)]
        );
        assert_eq!(parts(&orthant_cells(1, 1)), vec![(vec![1], 0), (vec![], 1)]);
        assert_eq!(
            parts(&orthant_cells(3, 2)),
            vec![
                (vec![3], 0),
                (vec![2, 1], 0),
                (vec![2], 1),
                (vec![1, 1], 1),
                (vec![1], 2),
                (vec![], 3)
            ]
        );
    }

    #[test]
    fn substitution_examples() {
        let cell = Partition::new(3, vec![2, 1], 0).unwrap();
        let t = |i| Poly::var(2, i);
        let r = substitute(&power_sum(3, 2), &cell).unwrap();
        assert_eq!(r.reduced, &t(0).pow(2).scale(&rat(2)) + &t(1).pow(2));
        let r = substitute(&power_sum(5, 1), &Partition::new(5, vec![5], 0).unwrap()).unwrap();
        assert_eq!(r.reduced, Poly::var(1, 0).scale(&rat(5)));
        // e2(T1, T1, T2) = T1^2 + 2 T1 T2
        let r = substitute(&elem_sym(3, 2).unwrap(), &cell).unwrap();
        assert_eq!(r.reduced, &t(0).pow(2) + &(&t(0) * &t(1)).scale(&rat(2)));
        let pt = [ratio(3, 7), rat(-2)];
        assert_eq!(
            r.reduced.eval(&pt).unwrap(),
            elem_sym(3, 2).unwrap().eval(&cell.expand(&pt, rat(0))).unwrap()
        );
    }

    #[test]
    fn substitution_on_all_zero_cell() {
        let f = &power_sum(3, 2) + &Poly::constant(3, rat(4));
        let cell = Partition::new(3, vec![], 3).unwrap();
        let r = substitute(&f, &cell).unwrap();
        assert_eq!(r.reduced, Poly::constant(0, rat(4)));
        assert!(substitute(&f, &Partition::new(2, vec![2], 0).unwrap()).is_err());
    }

    #[test]
    fn degree_principle_plans() {
        let sys = [Constraint::new(power_sum(3, 1), Relation::Eq)];
        let plan = plan_degree_principle(&sys).unwrap();
        assert_eq!(plan.bound, 2);
        assert_eq!(
            plan.cells
                .iter()
                .map(|c| c.partition.parts().to_vec())
                .collect::<Vec<_>>(),
            vec![vec![3], vec![2, 1]]
        );
        let cubic = [Constraint::new(power_sum(5, 3), Relation::Ge)];
        assert_eq!(plan_degree_principle(&cubic).unwrap().bound, 3);
        assert_eq!(plan_degree_principle(&[]).unwrap_err(), ReduceError::EmptySystem);
        let bad = [Constraint::new(Poly::var(2, 0), Relation::Eq)];
        assert!(matches!(plan_degree_principle(&bad), Err(ReduceError::Sym(_))));
    }

    #[test]
    fn half_degree_bounds() {
        let f4 = power_sum(4, 4);
        assert_eq!(plan_half_degree(&f4, HalfDegreeMode::NonnegGlobal).unwrap().bound, 2);
        assert_eq!(
            plan_half_degree(&power_sum(4, 2), HalfDegreeMode::NonnegGlobal)
                .unwrap()
                .bound,
            2
        );
        let f5 = &power_sum(4, 5) + &power_sum(4, 4);
        assert_eq!(plan_half_degree(&f5, HalfDegreeMode::NonnegGlobal).unwrap().bound, 2);
        let f6 = power_sum(4, 6);
        assert_eq!(plan_half_degree(&f6, HalfDegreeMode::NonnegGlobal).unwrap().bound, 3);
        let orth = plan_half_degree(&power_sum(4, 2), HalfDegreeMode::NonnegOrthant).unwrap();
        assert_eq!(orth.bound, 1);
        assert!(orth.orthant_restricted);
        let var = plan_half_degree(&f6, HalfDegreeMode::Variety).unwrap();
        assert_eq!((var.bound, var.published_bound), (3, Some(6)));
        assert_eq!(var.cells[0].constraints[0].relation, Relation::Eq);
    }

    #[test]
    fn jsparse_plans() {
        let n = 6;
        let f = &power_sum(n, 2) + &power_sum(n, 4);
        let j = SparsitySupport::new(n, [2, 4]);
        let plan = plan_jsparse(&[Constraint::new(f, Relation::Ge)], &j).unwrap();
        assert_eq!(
            (plan.theorem, plan.bound, plan.orthant_restricted),
            (TheoremTag::JsparseEven, 2, true)
        );
        assert_eq!(plan.cells.len(), orthant_cells(6, 2).len());

        let g = &power_sum(n, 1) - &power_sum(n, 3);
        let j = SparsitySupport::new(n, [1, 3]);
        let plan = plan_jsparse(&[Constraint::new(g.clone(), Relation::Eq)], &j).unwrap();
        assert_eq!((plan.theorem, plan.bound), (TheoremTag::JsparseOdd, 3));

        let err = plan_jsparse(&[Constraint::new(g, Relation::Eq)], &SparsitySupport::new(n, [1])).unwrap_err();
        assert!(matches!(err, ReduceError::NotSparse { index: 0, .. }));
    }

    #[test]
    fn jsparse_witness_cell() {
        let n = 4;
        let f = &power_sum(n, 2) - &Poly::one(n);
        let plan = plan_jsparse(
            &[Constraint::new(f.clone(), Relation::Eq)],
            &SparsitySupport::new(n, [2]),
        )
        .unwrap();
        let cell = plan
            .cells
            .iter()
            .find(|c| c.partition.parts() == [4] && c.partition.zero_block() == 0)
            .unwrap();
        let half = ratio(1, 2);
        assert_eq!(
            cell.constraints[0].reduced.eval(std::slice::from_ref(&half)).unwrap(),
            rat(0)
        );
        assert_eq!(f.eval(&cell.partition.expand(&[half], rat(0))).unwrap(), rat(0));
    }

    #[test]
    fn profiles() {
        let p = point_profile_exact(&[rat(1), rat(1), rat(2), rat(0)]);
        assert_eq!((p.distinct_count, p.distinct_positive_count), (3, 2));
        let p = point_profile_exact(&[rat(0), rat(0), rat(0)]);
        assert_eq!((p.distinct_count, p.distinct_positive_count), (1, 0));
        let p = point_profile(&[1.0, 1.0 + 1e-12, 5.0], 1e-9);
        assert_eq!(p.distinct_count, 2);
        let p = point_profile(&[-1.0, 0.0, 1e-12, 3.0], 1e-9);
        assert_eq!((p.distinct_count, p.distinct_positive_count), (3, 1));
    }
}
