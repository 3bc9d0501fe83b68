//! Power-sum support of symmetric polynomials.
//!
//! [`support`] reads the index set off the unique power-sum representation.
//! [`gradient_support_test`] gets the same set a second way: by the chain
//! rule `∇f = V·D·∇g(p(x))`, so `V⁻¹∇f = D·∇g(p(x))` has a nonzero `j`-th entry
//! at some point exactly when `g` depends on `Z_j`. The test evaluates
//! `V⁻¹∇f` at random integer points using the closed-form inverse below.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::poly::{elem_sym, elem_sym_values, rat, Poly, Rational};
use crate::symfun::{to_power_sums, PowerSumRep, SymError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SparsityError {
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error("coordinates {0} and {1} coincide; the Vandermonde matrix is singular")]
    Collision(usize, usize),
    #[error("cannot draw {n} distinct integers from [-{bound}, {bound}]")]
    Sampling { n: usize, bound: i64 },
}

/// The set `J` of power-sum indices (1-based) a symmetric polynomial depends on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsitySupport {
    nvars: usize,
    indices: BTreeSet<usize>,
}

impl SparsitySupport {
    pub fn new(nvars: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        SparsitySupport {
            nvars,
            indices: indices.into_iter().collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn indices(&self) -> &BTreeSet<usize> {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.indices.contains(&j)
    }

    pub fn is_subset(&self, other: &SparsitySupport) -> bool {
        self.indices.is_subset(&other.indices)
    }

    pub fn union(&self, other: &SparsitySupport) -> SparsitySupport {
        SparsitySupport {
            nvars: self.nvars.max(other.nvars),
            indices: self.indices.union(&other.indices).copied().collect(),
        }
    }

    pub fn all_even(&self) -> bool {
        self.indices.iter().all(|j| j % 2 == 0)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.indices.iter().next_back().copied()
    }
}

impl fmt::Display for SparsitySupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn support_of_rep(rep: &PowerSumRep) -> SparsitySupport {
    SparsitySupport::new(rep.nvars(), rep.g().variables_used().into_iter().map(|v| v + 1))
}

/// Minimal `J` such that `f` is `J`-sparse.
pub fn support(f: &Poly) -> Result<SparsitySupport, SymError> {
    Ok(support_of_rep(&to_power_sums(f)?))
}

/// `V = (x_i^(j-1))`, rows indexed by coordinates.
pub fn vandermonde(point: &[Rational]) -> Vec<Vec<Rational>> {
    let n = point.len();
    point
        .iter()
        .map(|x| {
            let mut row = Vec::with_capacity(n);
            let mut acc = Rational::one();
            for _ in 0..n {
                row.push(acc.clone());
                acc *= x;
            }
            row
        })
        .collect()
}

fn check_distinct(point: &[Rational]) -> Result<(), SparsityError> {
    for i in 0..point.len() {
        for j in i + 1..point.len() {
            if point[i] == point[j] {
                return Err(SparsityError::Collision(i + 1, j + 1));
            }
        }
    }
    Ok(())
}

/// `V⁻¹` at a point with pairwise-distinct coordinates, from the closed form
///
/// `V⁻¹[i][j] = (-1)^(n-i) · e_{n-i}(x without x_j) / Π_{l≠j} (x_j - x_l)`
///
/// with 1-based `i, j`. Column `j` holds the coefficients of the Lagrange
/// basis polynomial for node `x_j`.
pub fn vandermonde_inverse_at(point: &[Rational]) -> Result<Vec<Vec<Rational>>, SparsityError> {
    check_distinct(point)?;
    let n = point.len();
    let mut inv = vec![vec![Rational::zero(); n]; n];
    for j in 0..n {
        let others: Vec<Rational> = point
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != j)
            .map(|(_, x)| x.clone())
            .collect();
        let e = elem_sym_values(&others);
        let denom: Rational = others.iter().map(|xl| &point[j] - xl).product();
        for (i, row) in inv.iter_mut().enumerate() {
            // 1-based row index i+1: sign (-1)^(n-i-1), e_{n-i-1}
            let k = n - i - 1;
            let v = &e[k] / &denom;
            row[j] = if k.is_multiple_of(2) { v } else { -v };
        }
    }
    Ok(inv)
}

/// The closed-form inverse kept as rational functions: entry `(i, j)` is
/// `numerators[i][j] / denominators[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VandermondeData {
    pub nvars: usize,
    pub numerators: Vec<Vec<Poly>>,
    pub denominators: Vec<Poly>,
}

impl VandermondeData {
    pub fn symbolic(n: usize) -> Self {
        let x = |l: usize| Poly::var(n, l);
        let mut numerators = vec![vec![Poly::zero(n); n]; n];
        let mut denominators = Vec::with_capacity(n);
        for j in 0..n {
            // e_k over the variables other than x_j: embed the (n-1)-variable
            // e_k by mapping its variables onto the remaining indices.
            let others: Vec<Poly> = (0..n).filter(|&l| l != j).map(x).collect();
            for (i, row) in numerators.iter_mut().enumerate() {
                let k = n - i - 1;
                let ek = elem_sym(n - 1, k)
                    .expect("k <= n - 1")
                    .compose(&others, n)
                    .expect("n - 1 substitutes");
                row[j] = if k.is_multiple_of(2) { ek } else { -ek };
            }
            let denom = (0..n)
                .filter(|&l| l != j)
                .fold(Poly::one(n), |acc, l| &acc * &(&x(j) - &x(l)));
            denominators.push(denom);
        }
        VandermondeData {
            nvars: n,
            numerators,
            denominators,
        }
    }

    pub fn eval_at(&self, point: &[Rational]) -> Result<Vec<Vec<Rational>>, SparsityError> {
        check_distinct(point)?;
        let denoms: Vec<Rational> = self
            .denominators
            .iter()
            .map(|d| d.eval(point).expect("point length"))
            .collect();
        Ok(self
            .numerators
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&denoms)
                    .map(|(num, d)| num.eval(point).expect("point length") / d)
                    .collect()
            })
            .collect())
    }
}

pub(crate) fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Result of the randomized gradient test, with the first point at which
/// each reported index was seen nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradientSupport {
    pub support: SparsitySupport,
    pub witnesses: BTreeMap<usize, Vec<Rational>>,
    pub trials: usize,
}

pub const DEFAULT_TRIALS: usize = 8;

pub fn gradient_support_test(f: &Poly, trials: usize) -> Result<GradientSupport, SparsityError> {
    gradient_support_test_seeded(f, trials, 0)
}

/// Evaluates `h = V⁻¹∇f` at `trials` random points whose coordinates are
/// distinct integers in `[-T, T]`, `T = 4·(deg f + n)`, and reports the
/// indices where some evaluation is nonzero.
pub fn gradient_support_test_seeded(f: &Poly, trials: usize, seed: u64) -> Result<GradientSupport, SparsityError> {
    if let Some(w) = crate::symfun::symmetry_witness(f) {
        return Err(SymError::NotSymmetric(w).into());
    }
    let n = f.nvars();
    let bound = 4 * (f.degree().or_zero() as i64 + n as i64);
    let width = (2 * bound + 1) as usize;
    if n > width {
        return Err(SparsityError::Sampling { n, bound });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<Vec<Rational>> = (0..trials)
        .map(|_| {
            rand::seq::index::sample(&mut rng, width, n)
                .into_iter()
                .map(|u| rat(u as i64 - bound))
                .collect()
        })
        .collect();
    let grad = f.gradient();
    let nonzero: Vec<Vec<bool>> = points
        .par_iter()
        .map(|pt| {
            let gv: Vec<Rational> = grad.iter().map(|g| g.eval(pt).expect("point length")).collect();
            let inv = vandermonde_inverse_at(pt).expect("sampled coordinates are distinct");
            mat_vec(&inv, &gv).iter().map(|h| !h.is_zero()).collect()
        })
        .collect();
    let mut witnesses = BTreeMap::new();
    for (pt, flags) in points.iter().zip(&nonzero) {
        for (j, &nz) in flags.iter().enumerate() {
            if nz {
                witnesses.entry(j + 1).or_insert_with(|| pt.clone());
            }
        }
    }
    Ok(GradientSupport {
        support: SparsitySupport::new(n, witnesses.keys().copied()),
        witnesses,
        trials,
    })
}
