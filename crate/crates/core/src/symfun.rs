//! Symmetry checks and conversion of symmetric polynomials to the power-sum
//! basis.
//!
//! Conversion goes through the elementary symmetric basis: repeatedly strip
//! the graded-lex leading term `c·x^a` with `c·e_1^(a1-a2)·e_2^(a2-a3)⋯`, then
//! replace every `e_j` by its Newton-identity expression in the power sums.
//! All arithmetic stays in ℚ; the denominators Newton's identities introduce
//! are kept as they are.

use std::fmt;

use num_traits::One;
use thiserror::Error;

use crate::poly::{elem_sym, power_sum, Degree, Exponent, Poly, PolyError, Rational};

/// A permutation of the variables and a monomial whose coefficient it changes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymmetryWitness {
    /// Variable `i` is sent to `permutation[i]` (zero-based).
    pub permutation: Vec<usize>,
    pub monomial: Exponent,
}

impl fmt::Display for AsymmetryWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let perm: Vec<String> = self.permutation.iter().map(|p| format!("x{}", p + 1)).collect();
        let mono = Poly::monomial(self.monomial.clone(), Rational::one());
        write!(
            f,
            "the substitution (x1..x{}) -> ({}) changes the coefficient of {}",
            self.permutation.len(),
            perm.join(", "),
            mono
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("polynomial is not symmetric: {0}")]
    NotSymmetric(AsymmetryWitness),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The unique `g` with `f = g(p_1, ..., p_n)`; `g` is written in variables
/// `Z_1..Z_n`, so `g.nvars() == n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerSumRep {
    nvars: usize,
    g: Poly,
}

impl PowerSumRep {
    pub fn new(g: Poly) -> Self {
        PowerSumRep { nvars: g.nvars(), g }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn g(&self) -> &Poly {
        &self.g
    }

    /// Maximum over monomials `Z^a` of `Σ i·a_i`.
    pub fn weighted_degree(&self) -> Degree {
        weighted_degree(&self.g)
    }

    /// `g` printed with `p1, p2, ...` as variable names, which is also valid
    /// input for the expression parser.
    pub fn to_text(&self) -> String {
        self.g.to_text("p")
    }
}

pub(crate) fn weighted_degree(g: &Poly) -> Degree {
    g.terms()
        .map(|(e, _)| {
            e.as_slice()
                .iter()
                .enumerate()
                .map(|(i, &a)| (i as u32 + 1) * a)
                .sum::<u32>()
        })
        .max()
        .map_or(Degree::MinusInfinity, Degree::Finite)
}

/// `f = g0(p_1..p_k) + Σ_{j=k+1}^{d'} g_{j-k}(p_1..p_k)·p_j` with
/// `k = ⌊d/2⌋` (at least 1) and `d' = min(d, n)`.
///
/// `g0` and every tail entry live in `k` variables `Z_1..Z_k`; when `k > n`
/// the extra variables simply never occur.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollarySplit {
    pub k: usize,
    pub dprime: usize,
    pub g0: Poly,
    /// `tail[i]` multiplies `p_{k+1+i}`.
    pub tail: Vec<Poly>,
}

impl CorollarySplit {
    /// Reassembles the polynomial in `n` variables.
    pub fn expand(&self, n: usize) -> Poly {
        let low: Vec<Poly> = (1..=self.k as u32).map(|i| power_sum(n, i)).collect();
        let mut out = self.g0.compose(&low, n).expect("split arity");
        for (i, gi) in self.tail.iter().enumerate() {
            let pj = power_sum(n, (self.k + 1 + i) as u32);
            out = &out + &(&gi.compose(&low, n).expect("split arity") * &pj);
        }
        out
    }
}

/// Returns a permutation that changes `f` together with an affected monomial,
/// or `None` when `f` is symmetric.
///
/// Only the two generators of the symmetric group are tried: the
/// transposition of the first two variables and the full cycle.
pub fn symmetry_witness(f: &Poly) -> Option<AsymmetryWitness> {
    let n = f.nvars();
    if n < 2 {
        return None;
    }
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    for perm in [swap, cycle] {
        let g = f.permute(&perm);
        if &g != f {
            let monomial = f
                .terms()
                .chain(g.terms())
                .map(|(e, _)| e)
                .find(|e| f.coefficient(e) != g.coefficient(e))
                .expect("distinct polynomials differ in some coefficient")
                .clone();
            return Some(AsymmetryWitness {
                permutation: perm,
                monomial,
            });
        }
    }
    None
}

pub fn is_symmetric(f: &Poly) -> bool {
    symmetry_witness(f).is_none()
}

fn require_symmetric(f: &Poly) -> Result<(), SymError> {
    match symmetry_witness(f) {
        Some(w) => Err(SymError::NotSymmetric(w)),
        None => Ok(()),
    }
}

/// Newton-identity expressions `q_0 = 1, q_1, ..., q_n` with
/// `e_j = q_j(p_1, ..., p_j)`, each a polynomial in `n` variables `Z`.
pub fn newton_table(n: usize) -> Vec<Poly> {
    let z: Vec<Poly> = (0..n).map(|i| Poly::var(n, i)).collect();
    let mut q = vec![Poly::one(n)];
    for k in 1..=n {
        // k·e_k = Σ_{i=1}^k (-1)^(i-1) e_{k-i} p_i
        let mut acc = Poly::zero(n);
        for i in 1..=k {
            let term = &q[k - i] * &z[i - 1];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        q.push(acc.scale(&Rational::new(1.into(), (k as i64).into())));
    }
    q
}

/// The polynomial `q_j` in `Z_1..Z_n` with `e_j = q_j(p_1, ..., p_j)`.
pub fn newton_e_to_p(n: usize, j: usize) -> Result<Poly, PolyError> {
    if j == 0 || j > n {
        return Err(PolyError::ElemSymIndex { n, j });
    }
    Ok(newton_table(j).swap_remove(j).extend_vars(n))
}

/// Rewrites a symmetric `f` as a polynomial in `Y_1..Y_n` with `Y_j ↦ e_j`.
pub fn to_elementary(f: &Poly) -> Result<Poly, SymError> {
    require_symmetric(f)?;
    let n = f.nvars();
    let e: Vec<Poly> = (1..=n).map(|j| elem_sym(n, j).expect("j <= n")).collect();
    let mut rest = f.clone();
    let mut h = Poly::zero(n);
    while let Some((lead, c)) = rest.leading_term() {
        let a = lead.as_slice();
        let c = c.clone();
        debug_assert!(
            a.windows(2).all(|w| w[0] >= w[1]),
            "leading exponent of a symmetric polynomial is sorted"
        );
        let b: Vec<u32> = (0..n).map(|j| a[j] - if j + 1 < n { a[j + 1] } else { 0 }).collect();
        let mut prod = Poly::constant(n, c.clone());
        for (ej, &bj) in e.iter().zip(&b) {
            if bj > 0 {
                prod = &prod * &ej.pow(bj);
            }
        }
        rest = &rest - &prod;
        h = &h + &Poly::monomial(Exponent::new(b), c);
    }
    Ok(h)
}

/// The unique power-sum representation of a symmetric polynomial.
pub fn to_power_sums(f: &Poly) -> Result<PowerSumRep, SymError> {
    let n = f.nvars();
    let h = to_elementary(f)?;
    let q = newton_table(n);
    let g = h.compose(&q[1..], n)?;
    Ok(PowerSumRep { nvars: n, g })
}

/// Expands `g(p_1, ..., p_n)` back into the `x` variables.
pub fn from_power_sums(rep: &PowerSumRep) -> Poly {
    let n = rep.nvars;
    let p: Vec<Poly> = (1..=n as u32).map(|i| power_sum(n, i)).collect();
    rep.g.compose(&p, n).expect("PowerSumRep keeps g.nvars == n")
}

/// Splits the power-sum representation into the low block `p_1..p_k` and the
/// linear tail in `p_{k+1}..p_{d'}`.
pub fn corollary_split(f: &Poly) -> Result<CorollarySplit, SymError> {
    let rep = to_power_sums(f)?;
    let n = f.nvars();
    let d = f.degree().or_zero() as usize;
    let k = (d / 2).max(1);
    let dprime = d.min(n);
    let mut g0 = Poly::zero(k);
    let mut tail = vec![Poly::zero(k); dprime.saturating_sub(k)];
    for (e, c) in rep.g.terms() {
        let a = e.as_slice();
        let mut low = a[..k.min(n)].to_vec();
        low.resize(k, 0);
        let low = Poly::monomial(Exponent::new(low), c.clone());
        let high: Vec<usize> = (k..n).filter(|&v| a[v] > 0).collect();
        match high.as_slice() {
            [] => g0 = &g0 + &low,
            [v] if a[*v] == 1 => {
                let slot = v - k;
                tail[slot] = &tail[slot] + &low;
            }
            _ => unreachable!("weighted degree <= d rules out products of two high power sums"),
        }
    }
    Ok(CorollarySplit { k, dprime, g0, tail })
}

/// The monomial symmetric polynomial `m_λ`: the sum of `x^a` over all distinct
/// rearrangements `a` of `λ` padded with zeros to length `n`.
///
/// Panics if `λ` has more than `n` entries.
pub fn monomial_symmetric(n: usize, lambda: &[u32]) -> Poly {
    assert!(lambda.len() <= n, "partition longer than the variable count");
    let mut a = lambda.to_vec();
    a.resize(n, 0);
    a.sort_unstable();
    let mut out = Poly::zero(n);
    loop {
        out = &out + &Poly::monomial(Exponent::new(a.clone()), Rational::one());
        if !next_permutation(&mut a) {
            break;
        }
    }
    out
}

fn next_permutation(a: &mut [u32]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).expect("pivot exists");
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// The symmetric polynomial `g(p_1, ..., p_m)` in `n` variables, where `g`
/// has `m` variables. Unlike a [`PowerSumRep`], `m` may exceed `n`.
pub fn eval_in_power_sums(g: &Poly, n: usize) -> Poly {
    let p: Vec<Poly> = (1..=g.nvars() as u32).map(|i| power_sum(n, i)).collect();
    g.compose(&p, n).expect("one power sum per variable of g")
}
