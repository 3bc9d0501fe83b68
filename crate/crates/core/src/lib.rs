//! Test-point reductions for symmetric polynomials.
//!
//! A symmetric polynomial in `n` variables is rewritten in the power-sum
//! basis, and questions about nonnegativity or feasibility over `ℝⁿ` are
//! reduced to finitely many small problems over points with few distinct
//! coordinates. The numeric layer in [`search`] explores those small
//! problems and cross-checks them against brute-force sampling of the full
//! space.

pub mod cli;
pub mod descartes;
pub mod poly;
pub mod reduce;
pub mod search;
pub mod sparsity;
pub mod symfun;

pub use poly::{Degree, Exponent, Poly, PolyError, Rational};
