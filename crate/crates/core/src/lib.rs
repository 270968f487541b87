//! Exact-arithmetic verification workbench for partial-sum Rogers-Ramanujan
//! identities.
//!
//! Everything is computed over the integers: Laurent polynomials in `q`,
//! power series truncated at an explicit order, and quotients of Laurent
//! polynomials compared by cross-multiplication. Each identity family is
//! evaluated as two independently computed sides and checked for exact
//! coefficient equality; the combinatorial statements are additionally
//! backed by brute-force partition enumeration.
//!
//! Module map:
//! - [`poly`]: Laurent polynomials with arbitrary-precision coefficients
//! - [`series`]: truncated series with explicit exactness horizon
//! - [`rational`]: quotients of Laurent polynomials
//! - [`poch`]: q-Pochhammer symbols and Gaussian binomials
//! - [`classical`]: Jacobi triple product, Euler's q-exponential, Jacobi cube
//! - [`schur`]: Schur polynomials, partial theta sums and the main theorem
//! - [`bailey`]: Bailey pairs, q-Chu-Vandermonde and Watson-Sears checks
//! - [`chain`]: the truncated-series proof-chain families
//! - [`partitions`]: successive ranks, oscillations and minimal partitions
//! - [`registry`]: named family catalogue used by the command line front end

pub mod bailey;
pub mod chain;
pub mod classical;
pub mod partitions;
pub mod poch;
pub mod poly;
pub mod rational;
pub mod registry;
pub mod report;
pub mod schur;
pub mod series;

pub use poly::LaurentPoly;
pub use rational::RationalFunction;
pub use report::{Mismatch, Status, VerificationReport};
pub use schur::{SchurFamily, SchurFlavor};
pub use series::TruncatedSeries;

/// Binomial coefficient C(n, 2) for any integer n, as used in the quadratic
/// exponents throughout: n(n-1)/2.
pub fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("partition is not a member of the required set: {0}")]
    Membership(String),
    #[error("unknown family: {0}")]
    UnknownFamily(String),
}
