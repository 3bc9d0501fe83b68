//! Exact sparse multivariate polynomials over ℚ.
//!
//! Terms live in a `BTreeMap` keyed by [`Exponent`] under graded
//! lexicographic order, so iteration and display are deterministic. Zero
//! coefficients are never stored. The variable count is fixed per value and
//! mixing arities is an error rather than a silent promotion.
//!
//! A separate floating-point path ([`FloatPoly`]) exists for the numeric
//! search layer; everything algebraic goes through exact rationals.

pub(crate) mod float;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use float::FloatPoly;

/// Exact coefficient type used throughout the crate.
pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Shorthand for `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable count mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("point has {got} coordinates but the polynomial has {expected} variables")]
    PointLength { expected: usize, got: usize },
    #[error("elementary symmetric index {j} exceeds the variable count {n}")]
    ElemSymIndex { n: usize, j: usize },
    #[error("exponent of length {got} used with {expected} variables")]
    ExponentLength { expected: usize, got: usize },
}

/// Exponent vector of a monomial, one entry per ambient variable.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of `x1`, then `x2`, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(exps: Vec<u32>) -> Self {
        Exponent(exps)
    }

    pub fn zero(nvars: usize) -> Self {
        Exponent(vec![0; nvars])
    }

    pub fn unit(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        Exponent(e)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total degree of a polynomial. The zero polynomial has degree
/// `MinusInfinity`, which sorts below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::MinusInfinity => None,
        }
    }

    /// Finite degree, with the zero polynomial mapped to 0.
    pub fn or_zero(self) -> u32 {
        self.finite().unwrap_or(0)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(d) => write!(f, "{d}"),
            Degree::MinusInfinity => write!(f, "-inf"),
        }
    }
}

/// Sparse polynomial in `nvars` variables with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Exponent::zero(nvars), c);
        }
        p
    }

    /// The variable `x_{index+1}` (indices are zero-based).
    ///
    /// Panics if `index >= nvars`.
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(
            index < nvars,
            "variable index {index} out of range for {nvars} variables"
        );
        let mut p = Self::zero(nvars);
        p.terms.insert(Exponent::unit(nvars, index), Rational::one());
        p
    }

    pub fn monomial(exp: Exponent, coeff: Rational) -> Self {
        let nvars = exp.len();
        let mut p = Self::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(exp, coeff);
        }
        p
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero)
    /// terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (exp, c) in terms {
            if exp.len() != nvars {
                return Err(PolyError::ExponentLength {
                    expected: nvars,
                    got: exp.len(),
                });
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, exp: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Exponent::is_constant)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &Exponent) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Exponent::zero(self.nvars))
    }

    /// Graded-lex leading term.
    pub fn leading_term(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(Exponent::total_degree)
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite)
    }

    /// Highest exponent of variable `var` over all terms (0 for the zero polynomial).
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e.0[var]).max().unwrap_or(0)
    }

    /// Indices of variables that occur in some term.
    pub fn variables_used(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.degree_in(v) > 0).collect()
    }

    /// Rebuilds the term map from scratch. A well-formed value is returned unchanged.
    pub fn normalized(&self) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), c.clone())))
            .expect("stored exponents match nvars")
    }

    fn check_arity(&self, other: &Poly) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::ArityMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_arity(other)?;
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.nvars);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        self.check_point(point.len())?;
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(&e.0) {
                if k > 0 {
                    term *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Floating-point evaluation. Coefficients are rounded to `f64` first.
    pub fn eval_f64(&self, point: &[f64]) -> Result<f64, PolyError> {
        self.check_point(point.len())?;
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut term = rational_to_f64(c);
                for (x, &k) in point.iter().zip(&e.0) {
                    if k > 0 {
                        term *= x.powi(k as i32);
                    }
                }
                term
            })
            .sum())
    }

    fn check_point(&self, len: usize) -> Result<(), PolyError> {
        if len != self.nvars {
            return Err(PolyError::PointLength {
                expected: self.nvars,
                got: len,
            });
        }
        Ok(())
    }

    /// Partial derivative with respect to variable `var` (zero-based).
    pub fn partial(&self, var: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e.0[var];
            if k == 0 {
                continue;
            }
            let mut de = e.clone();
            de.0[var] -= 1;
            out.add_term(de, c * rat(k as i64));
        }
        out
    }

    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.nvars).map(|v| self.partial(v)).collect()
    }

    /// Substitutes `subs[i]` for variable `i`. Every substitute must live in
    /// `target_nvars` variables; the result does too.
    pub fn compose(&self, subs: &[Poly], target_nvars: usize) -> Result<Poly, PolyError> {
        if subs.len() != self.nvars {
            return Err(PolyError::ArityMismatch {
                left: self.nvars,
                right: subs.len(),
            });
        }
        if let Some(bad) = subs.iter().find(|s| s.nvars != target_nvars) {
            return Err(PolyError::ArityMismatch {
                left: target_nvars,
                right: bad.nvars,
            });
        }
        // powers[v][k] = subs[v]^k, grown on demand
        let mut powers: Vec<Vec<Poly>> = subs.iter().map(|_| vec![Poly::one(target_nvars)]).collect();
        let mut out = Poly::zero(target_nvars);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(target_nvars, c.clone());
            for (v, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let k = k as usize;
                while powers[v].len() <= k {
                    let next = &powers[v][powers[v].len() - 1] * &subs[v];
                    powers[v].push(next);
                }
                term = &term * &powers[v][k];
            }
            for (te, tc) in term.terms {
                out.add_term(te, tc);
            }
        }
        Ok(out)
    }

    /// Renames variables: variable `i` becomes variable `perm[i]`.
    ///
    /// Panics if `perm` is not a permutation of `0..nvars`.
    pub fn permute(&self, perm: &[usize]) -> Poly {
        assert_eq!(perm.len(), self.nvars, "permutation length");
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut pe = vec![0; self.nvars];
            for (i, &k) in e.0.iter().enumerate() {
                pe[perm[i]] = k;
            }
            out.terms.insert(Exponent(pe), c.clone());
        }
        assert_eq!(out.terms.len(), self.terms.len(), "not a permutation");
        out
    }

    /// Reinterprets the polynomial in the first `k` variables. Returns `None`
    /// if some variable with index `>= k` occurs.
    pub fn truncate_vars(&self, k: usize) -> Option<Poly> {
        if k >= self.nvars {
            return Some(self.extend_vars(k));
        }
        let mut out = Poly::zero(k);
        for (e, c) in &self.terms {
            if e.0[k..].iter().any(|&x| x > 0) {
                return None;
            }
            out.terms.insert(Exponent(e.0[..k].to_vec()), c.clone());
        }
        Some(out)
    }

    /// Embeds into `m >= nvars` variables by appending unused ones.
    pub fn extend_vars(&self, m: usize) -> Poly {
        assert!(m >= self.nvars);
        let mut out = Poly::zero(m);
        for (e, c) in &self.terms {
            let mut v = e.0.clone();
            v.resize(m, 0);
            out.terms.insert(Exponent(v), c.clone());
        }
        out
    }

    /// Canonical text using `prefix` followed by a 1-based index for each
    /// variable, e.g. `-3/2*x1^2*x2 + x3 - 1`. Terms appear in descending
    /// graded-lex order.
    pub fn to_text(&self, prefix: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || e.is_constant() {
                factors.push(abs.to_string());
            }
            for (v, &k) in e.0.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(format!("{prefix}{}", v + 1)),
                    _ => factors.push(format!("{prefix}{}^{k}", v + 1)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

pub(crate) fn rational_to_f64(c: &Rational) -> f64 {
    c.to_f64().unwrap_or_else(|| {
        if c.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact rational value of a finite float.
pub fn f64_to_rational(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("x"))
    }
}

// Operator forms panic on arity mismatch; use the `checked_*` methods when
// the arities are not known to agree.

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("polynomial arity mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// The power sum `p_i = x1^i + ... + xn^i`.
pub fn power_sum(n: usize, i: u32) -> Poly {
    assert!(n >= 1 && i >= 1, "power_sum requires n >= 1 and i >= 1");
    let mut p = Poly::zero(n);
    for v in 0..n {
        let mut e = vec![0; n];
        e[v] = i;
        p.terms.insert(Exponent(e), Rational::one());
    }
    p
}

/// The elementary symmetric polynomial `e_j` in `n` variables; `e_0 = 1`.
pub fn elem_sym(n: usize, j: usize) -> Result<Poly, PolyError> {
    if j > n {
        return Err(PolyError::ElemSymIndex { n, j });
    }
    let mut p = Poly::zero(n);
    let mut chosen = vec![0u32; n];
    fn rec(p: &mut Poly, chosen: &mut [u32], start: usize, left: usize) {
        if left == 0 {
            p.terms.insert(Exponent(chosen.to_vec()), Rational::one());
            return;
        }
        for v in start..=chosen.len() - left {
            chosen[v] = 1;
            rec(p, chosen, v + 1, left - 1);
            chosen[v] = 0;
        }
    }
    rec(&mut p, &mut chosen, 0, j);
    Ok(p)
}

/// Values `e_0(xs), ..., e_m(xs)` of the elementary symmetric polynomials at a
/// point, read off the coefficients of `prod (1 + x t)`.
pub fn elem_sym_values(xs: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::one()];
    for x in xs {
        e.push(Rational::zero());
        for j in (1..e.len()).rev() {
            let prev = e[j - 1].clone();
            e[j] += prev * x;
        }
    }
    e
}
