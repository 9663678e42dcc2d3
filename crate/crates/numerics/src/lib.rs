//! Floating-point layer: complex elliptic special functions, the
//! Floquet-monodromy oracle, and the reduced Lame dispersion relations.
//!
//! Exact data (spectral polynomials, covering maps, band-edge isolation)
//! comes from `lame-core`; this crate evaluates it on the real energy axis
//! and cross-checks every dispersion value against direct integration of
//! the differential equation.

pub mod curve;
pub mod dispersion;
pub mod elliptic;
pub mod error;
pub mod moduli;
pub mod ode;
pub mod oracle;
pub mod par;
pub mod phi;
pub mod quadrature;
pub mod reduction;
pub mod theta;

pub use error::{NumError, NumResult};
pub use par::ExecMode;
