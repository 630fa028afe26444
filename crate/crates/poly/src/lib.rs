//! Exact arithmetic and factorization for sparse bivariate polynomials over ℤ.
//!
//! The crate provides two polynomial types:
//!
//! * [`BiPoly`] — a sparse element of ℤ[x, y] with a canonical string form,
//!   ring arithmetic, exact division, and complete factorization into
//!   irreducibles ([`BiPoly::factor`]).
//! * [`UniPoly`] — a dense element of ℤ[t], used internally by the bivariate
//!   factorization (via Kronecker substitution) and exposed because it is
//!   useful on its own.
//!
//! Everything is exact: coefficients are arbitrary-precision integers and no
//! floating point is used anywhere. Factorization over ℤ runs the classical
//! pipeline — squarefree decomposition (Yun), factorization modulo a small
//! prime (Berlekamp), quadratic Hensel lifting to a coefficient bound, and
//! Zassenhaus subset recombination. Bivariate factorization reduces to the
//! univariate case by the substitution y ↦ x^(deg_x + 1), which is injective
//! on the support of any divisor, and certifies every factor by exact
//! division.

mod bipoly;
mod error;
mod factor_bi;
mod factor_uni;
mod modpoly;
mod unipoly;

pub use bipoly::BiPoly;
pub use error::{Error, Result};
pub use factor_bi::BiFactorization;
pub use factor_uni::UniFactorization;
pub use unipoly::UniPoly;

/// Resource limits for factorization.
///
/// Factoring is exponential in the worst case (subset recombination), so the
/// routines take explicit caps and fail loudly with [`Error::CapExceeded`]
/// instead of running away.
#[derive(Debug, Clone, Copy)]
pub struct FactorCaps {
    /// Maximum total degree of a bivariate polynomial accepted for
    /// factorization.
    pub max_total_degree: u32,
    /// Maximum number of trial-division attempts during recombination.
    pub max_division_attempts: u64,
}

impl Default for FactorCaps {
    fn default() -> Self {
        FactorCaps {
            max_total_degree: 64,
            max_division_attempts: 50_000_000,
        }
    }
}
