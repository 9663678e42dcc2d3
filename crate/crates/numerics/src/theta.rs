//! Jacobi theta series and the zeta function `Z`.
//!
//! A `ThetaContext` fixes the modulus data `(m, K, K', q)` once; the series
//! truncate when a term drops below `1e-16` of the partial sum. Arguments
//! are reduced by the real period `2K` and the quasi-period `2iK'` (each
//! upward step of `2iK'` shifts `Z` by `-i pi / K`), after which the nome
//! series converge geometrically on the whole strip.

use crate::elliptic::complete_k;
use crate::error::{NumError, NumResult};
use num_complex::Complex64;

#[derive(Debug, Clone)]
pub struct ThetaContext {
    pub m: f64,
    pub k: f64,
    pub kprime: f64,
    pub q: f64,
    pub truncation: usize,
}

impl ThetaContext {
    pub fn new(m: f64) -> NumResult<Self> {
        // the nome degrades toward m = 0, 1; the supported window is ample
        // for the lemniscatic numerics this crate exists for
        if !(0.05..=0.95).contains(&m) {
            return Err(NumError::Domain { what: "modulus window [0.05, 0.95]", value: m });
        }
        let k = complete_k(m)?;
        let kprime = complete_k(1.0 - m)?;
        let q = (-std::f64::consts::PI * kprime / k).exp();
        Ok(ThetaContext { m, k, kprime, q, truncation: 64 })
    }

    /// `theta_4(v | q)` and its `v`-derivative, by the cosine series.
    pub fn theta4_and_deriv(&self, v: Complex64) -> (Complex64, Complex64) {
        let mut t4 = Complex64::new(1.0, 0.0);
        let mut d4 = Complex64::new(0.0, 0.0);
        let mut qn = 1.0f64;
        let mut sign = 1.0f64;
        for n in 1..=self.truncation {
            // q^(n^2) built multiplicatively: q^(n^2) = q^((n-1)^2) q^(2n-1)
            qn *= self.q.powi(2 * n as i32 - 1);
            sign = -sign;
            let arg = 2.0 * n as f64 * v;
            let term = 2.0 * sign * qn * arg.cos();
            let dterm = -2.0 * sign * qn * (2.0 * n as f64) * arg.sin();
            t4 += term;
            d4 += dterm;
            if term.norm() < 1e-16 * t4.norm() && n > 4 {
                break;
            }
        }
        (t4, d4)
    }

    /// Jacobi zeta `Z(u) = (pi / 2K) theta4'(v) / theta4(v)` at `v = pi u / 2K`,
    /// with period reduction and the `-i pi / K` shift per `2iK'` step.
    pub fn jacobi_z(&self, u: Complex64) -> NumResult<Complex64> {
        let mut u = u;
        let mut shift = Complex64::new(0.0, 0.0);
        // reduce Im(u) into [0, 2K')
        let steps = (u.im / (2.0 * self.kprime)).floor();
        if steps != 0.0 {
            u -= Complex64::new(0.0, 2.0 * self.kprime * steps);
            shift -= Complex64::i() * std::f64::consts::PI / self.k * steps;
        }
        // reduce Re(u) mod 2K
        let re_steps = (u.re / (2.0 * self.k)).floor();
        if re_steps != 0.0 {
            u -= 2.0 * self.k * re_steps;
        }
        let v = std::f64::consts::PI * u / (2.0 * self.k);
        let (t4, d4) = self.theta4_and_deriv(v);
        // theta4 vanishes at u = iK' (mod lattice); quotients degenerate there
        if t4.norm() < 1e-10 {
            return Err(NumError::NearThetaZero { magnitude: t4.norm() });
        }
        Ok(std::f64::consts::PI / (2.0 * self.k) * d4 / t4 + shift)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> ThetaContext {
        ThetaContext::new(0.5).unwrap()
    }

    #[test]
    fn z_is_odd_and_vanishes_at_origin_and_k() {
        let c = ctx();
        assert!(c.jacobi_z(Complex64::from(0.0)).unwrap().norm() < 1e-14);
        assert!(c.jacobi_z(Complex64::from(c.k)).unwrap().norm() < 1e-14);
        let u = Complex64::new(0.4, 0.2);
        let zp = c.jacobi_z(u).unwrap();
        let zm = c.jacobi_z(-u).unwrap();
        assert!((zp + zm).norm() < 1e-12);
    }

    #[test]
    fn z_periodicity() {
        let c = ctx();
        for i in 0..8 {
            let u = Complex64::new(-1.0 + 0.42 * i as f64, 0.3);
            let a = c.jacobi_z(u).unwrap();
            let b = c.jacobi_z(u + 2.0 * c.k).unwrap();
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn z_quasi_periodicity_in_the_imaginary_direction() {
        // Z(u + 2iK') = Z(u) - i pi / K
        let c = ctx();
        let jump = Complex64::i() * std::f64::consts::PI / c.k;
        for i in 0..8 {
            let u = Complex64::new(0.3 * i as f64, 0.25 * c.kprime);
            let a = c.jacobi_z(u).unwrap();
            let b = c.jacobi_z(u + Complex64::new(0.0, 2.0 * c.kprime)).unwrap();
            assert!((b - (a - jump)).norm() < 1e-10, "i = {i}");
        }
    }

    #[test]
    fn z_matches_quadrature_definition() {
        // Z(u) = E(am u) - (E/K) u; cross-check against a direct numeric
        // integral of dn^2 - E/K on the real axis.
        let c = ctx();
        let u_end = 1.1f64;
        // Simpson integration of dn^2(t) - E/K
        let n = 2000;
        let h = u_end / n as f64;
        let mut acc = 0.0;
        for i in 0..=n {
            let t = i as f64 * h;
            let (_, _, dn) = crate::elliptic::sncndn_real(t, c.m);
            let w = if i == 0 || i == n {
                1.0
            } else if i % 2 == 1 {
                4.0
            } else {
                2.0
            };
            acc += w * (dn * dn);
        }
        let int_dn2 = acc * h / 3.0;
        // complete E via AGM-free series: E/K = int_0^K dn^2 / K; reuse the
        // same rule over [0, K]
        let nk = 4000;
        let hk = c.k / nk as f64;
        let mut acck = 0.0;
        for i in 0..=nk {
            let t = i as f64 * hk;
            let (_, _, dn) = crate::elliptic::sncndn_real(t, c.m);
            let w = if i == 0 || i == nk {
                1.0
            } else if i % 2 == 1 {
                4.0
            } else {
                2.0
            };
            acck += w * (dn * dn);
        }
        let e_over_k = (acck * hk / 3.0) / c.k;
        let z_ref = int_dn2 - e_over_k * u_end;
        let z = c.jacobi_z(Complex64::from(u_end)).unwrap();
        assert!((z.re - z_ref).abs() < 1e-9, "{} vs {z_ref}", z.re);
        assert!(z.im.abs() < 1e-12);
    }
}
