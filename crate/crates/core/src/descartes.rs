//! Sign variations and Descartes-style root-count bounds for univariate
//! polynomials with rational coefficients.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::poly::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DescartesError {
    #[error("the zero polynomial has no finite root bound")]
    ZeroPolynomial,
}

/// Coefficients `a_0, ..., a_n` in ascending degree. Trailing zeros are
/// allowed and ignored by degree queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffSeq(pub Vec<Rational>);

impl CoeffSeq {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        CoeffSeq(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        CoeffSeq(coeffs.iter().map(|&c| crate::poly::rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Degree ignoring trailing zeros; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|c| !c.is_zero())
    }

    pub fn nonzero_terms(&self) -> usize {
        self.0.iter().filter(|c| !c.is_zero()).count()
    }

    /// Index of the lowest nonzero coefficient, i.e. the multiplicity of the
    /// root at zero.
    pub fn lowest_index(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    /// Coefficients of `c(-T)`.
    pub fn reflect(&self) -> CoeffSeq {
        CoeffSeq(
            self.0
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// Exact value at `t` by Horner's rule.
    pub fn eval(&self, t: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }
}

/// Number of sign changes in the sequence of nonzero coefficients.
pub fn sign_variations(c: &CoeffSeq) -> usize {
    let mut last: Option<bool> = None;
    let mut count = 0;
    for a in c.0.iter().filter(|a| !a.is_zero()) {
        let neg = a.is_negative();
        if last.is_some_and(|l| l != neg) {
            count += 1;
        }
        last = Some(neg);
    }
    count
}

/// Descartes' bound on the number of roots in `(0, ∞)`, counted with
/// multiplicity.
pub fn positive_root_bound(c: &CoeffSeq) -> Result<usize, DescartesError> {
    if c.is_zero() {
        return Err(DescartesError::ZeroPolynomial);
    }
    Ok(sign_variations(c))
}

/// Descartes' bound on the number of roots in `(-∞, 0)`.
pub fn negative_root_bound(c: &CoeffSeq) -> Result<usize, DescartesError> {
    positive_root_bound(&c.reflect())
}

/// Term-count bound on distinct real roots: with `m` nonzero terms each side
/// of zero holds at most `m - 1` roots, plus one for zero itself, and never
/// more than the degree. Returns `min(D, 2(m-1)+1)`.
pub fn distinct_real_root_bound_fewnomial(c: &CoeffSeq) -> Result<usize, DescartesError> {
    let degree = c.degree().ok_or(DescartesError::ZeroPolynomial)?;
    let m = c.nonzero_terms();
    Ok(degree.min(2 * (m - 1) + 1))
}

/// Sharper variant of [`distinct_real_root_bound_fewnomial`] that uses the
/// actual sign variations of `c(T)` and `c(-T)` and counts zero only when it
/// is a root.
pub fn distinct_real_root_bound(c: &CoeffSeq) -> Result<usize, DescartesError> {
    let degree = c.degree().ok_or(DescartesError::ZeroPolynomial)?;
    let zero_root = usize::from(c.lowest_index() != Some(0));
    let total = sign_variations(c) + sign_variations(&c.reflect()) + zero_root;
    Ok(total.min(degree))
}
