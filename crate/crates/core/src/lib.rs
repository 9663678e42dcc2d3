//! Exact-arithmetic kernel for the spectral theory of the Lame equation.
//!
//! The crate computes, in exact rational arithmetic:
//!
//! * ordinary, twisted and theta-twisted Lame spectral polynomials,
//! * Lame polynomials (band-edge solutions) and Hermite-Halphen polynomials,
//! * the covering maps `(B, nu) -> (x0, y0)` of the Hermite-Krichever
//!   construction together with the auxiliary function `kappa`,
//! * hyperelliptic-to-elliptic reduction polynomials,
//! * Cohn polynomials in the Klein invariant `J`,
//! * Jacobi-form spectral polynomials and exact band-edge isolation.
//!
//! Everything is built on a small multivariate polynomial engine over
//! arbitrary-precision rationals with subresultant-PRS elimination.

mod cache;
pub mod cohn;
pub mod covering;
pub mod elim;
pub mod error;
pub mod hk;
pub mod jacobi;
pub mod moduli;
pub mod mpoly;
pub mod rational;
pub mod reference;
pub mod schema;
pub mod spectral;
pub mod symmetric;
pub mod twisted;
pub mod upoly;

pub use error::{Error, Result};
pub use mpoly::{MPoly, Mono, Var};
pub use rational::Rat;
pub use upoly::UPoly;
