//! Independent Floquet-monodromy oracle.
//!
//! Integrates `-psi'' + l(l+1) m sn^2(alpha|m) psi = E psi` across one real
//! period `[0, 2K]` from two independent initial conditions; the monodromy
//! trace `t` decides band (`|t| <= 2`) versus gap, and
//! `k = arccos(t/2) / 2K` recovers the crystal momentum with no input from
//! the covering-map machinery. Everything downstream is checked against it.

use crate::elliptic::sncndn_real;
use crate::error::{NumError, NumResult};
use crate::ode::integrate;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy)]
pub struct MonodromyResult {
    pub trace: f64,
    /// `arccos(trace/2) / 2K`: real inside a band, complex in a gap.
    pub k_oracle: Complex64,
    pub in_band: bool,
}

pub fn hill_monodromy_oracle(ell: u32, e: f64, m: f64) -> NumResult<MonodromyResult> {
    if !(0.0..1.0).contains(&m) {
        return Err(NumError::Domain { what: "modulus parameter", value: m });
    }
    let k = crate::elliptic::complete_k(m)?;
    let strength = (ell * (ell + 1)) as f64 * m;
    let rhs = move |alpha: f64, y: &[f64; 4]| {
        let (s, _, _) = sncndn_real(alpha, m);
        let q = strength * s * s - e;
        [y[1], q * y[0], y[3], q * y[2]]
    };
    let y = integrate(&rhs, 0.0, 2.0 * k, [1.0, 0.0, 0.0, 1.0], 1e-12)?;
    // Wronskian of the two solutions must stay 1
    let wronskian = y[0] * y[3] - y[2] * y[1];
    if (wronskian - 1.0).abs() > 1e-9 {
        return Err(NumError::StiffnessFailure { step: wronskian - 1.0 });
    }
    let trace = y[0] + y[3];
    let k_oracle = Complex64::from(trace / 2.0).acos() / (2.0 * k);
    Ok(MonodromyResult { trace, k_oracle, in_band: trace.abs() <= 2.0 })
}

/// Wronskian drift over one period, for the self-consistency invariant.
pub fn wronskian_drift(ell: u32, e: f64, m: f64) -> NumResult<f64> {
    let k = crate::elliptic::complete_k(m)?;
    let strength = (ell * (ell + 1)) as f64 * m;
    let rhs = move |alpha: f64, y: &[f64; 4]| {
        let (s, _, _) = sncndn_real(alpha, m);
        let q = strength * s * s - e;
        [y[1], q * y[0], y[3], q * y[2]]
    };
    let y = integrate(&rhs, 0.0, 2.0 * k, [1.0, 0.0, 0.0, 1.0], 1e-12)?;
    Ok((y[0] * y[3] - y[2] * y[1] - 1.0).abs())
}
