//! Inversion of `dn^2` on the spectral curve and the base dispersion
//! relation `k_1`.
//!
//! For real energy the equation `dn^2(alpha_0 | m) = E - m` has its
//! solutions on the four edges of the quarter-period rectangle; each case
//! is a monotone real root-find. The two lattice-inequivalent solutions
//! differ by the involution `alpha -> -alpha`, and the branch is pinned by
//! `m sn cn dn (alpha_0) = i nu_tilde`, which selects a unique sign once
//! the curve point `(E, nu_tilde)` is given.

use crate::elliptic::{jacobi_sn_cn_dn, sncndn_real};
use crate::error::{NumError, NumResult};
use crate::theta::ThetaContext;
use num_complex::Complex64;

/// Solves `f(t) = target` for monotone `f` on `[lo, hi]` by bisection with
/// a Newton-free endpoint guard; `f` must be finite inside.
fn solve_monotone(f: impl Fn(f64) -> f64, lo: f64, hi: f64, target: f64) -> f64 {
    let mut a = lo;
    let mut b = hi;
    let fa = f(a) - target;
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        let fm = f(mid) - target;
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (fa > 0.0) {
            a = mid;
        } else {
            b = mid;
        }
        if (b - a).abs() < 1e-16 * (1.0 + b.abs()) {
            break;
        }
    }
    0.5 * (a + b)
}

/// `alpha_0` in the fundamental rectangle `[0, 2K) x [0, 2K')` with
/// `dn^2(alpha_0 | m) = E - m` and the branch fixed by
/// `m sn cn dn (alpha_0) = i nu_tilde`.
pub fn invert_dn_squared(
    e: f64,
    nu_tilde: Complex64,
    ctx: &ThetaContext,
) -> NumResult<Complex64> {
    let m = ctx.m;
    let k = ctx.k;
    let kp = ctx.kprime;
    let w = e - m;
    let edge_tol = 1e-13 * (1.0 + w.abs());

    // base solution on the rectangle boundary
    let base: Complex64 = if (w - 1.0).abs() < edge_tol {
        Complex64::new(0.0, 0.0)
    } else if (w - (1.0 - m)).abs() < edge_tol {
        Complex64::new(k, 0.0)
    } else if w.abs() < edge_tol {
        Complex64::new(k, kp)
    } else if w > 1.0 {
        // alpha = i t: dn^2 = (dn/cn)^2 (t | 1-m), increasing 1 -> inf
        let f = |t: f64| {
            let (_, c1, d1) = sncndn_real(t, 1.0 - m);
            (d1 / c1).powi(2)
        };
        // keep away from the pole at t = K'
        let t = solve_monotone(f, 0.0, kp * (1.0 - 1e-12), w);
        Complex64::new(0.0, t)
    } else if w > 1.0 - m {
        // alpha real: dn^2(t|m), decreasing on [0, K]
        let f = |t: f64| {
            let (_, _, d) = sncndn_real(t, m);
            d * d
        };
        Complex64::new(solve_monotone(f, 0.0, k, w), 0.0)
    } else if w > 0.0 {
        // alpha = K + i t: dn^2 = (1-m)(cn/dn)^2 (t | 1-m), decreasing to 0
        let f = |t: f64| {
            let (_, c1, d1) = sncndn_real(t, 1.0 - m);
            (1.0 - m) * (c1 / d1).powi(2)
        };
        Complex64::new(k, solve_monotone(f, 0.0, kp, w))
    } else {
        // alpha = t + i K': dn^2 = -(cn/sn)^2 (t | m), increasing -inf -> 0
        let f = |t: f64| {
            let (s, c, _) = sncndn_real(t, m);
            -(c / s).powi(2)
        };
        let t = solve_monotone(f, 1e-12 * k, k, w);
        Complex64::new(t, kp)
    };

    // the involution partner inside the same rectangle
    let partner = {
        let re = if base.re == 0.0 { 0.0 } else { 2.0 * k - base.re };
        let im = if base.im == 0.0 { 0.0 } else { 2.0 * kp - base.im };
        Complex64::new(re, im)
    };

    let target = Complex64::i() * nu_tilde;
    let product = |alpha: Complex64| -> NumResult<Complex64> {
        let t = jacobi_sn_cn_dn(alpha, m)?;
        Ok(m * t.sn * t.cn * t.dn)
    };
    let pb = product(base)?;
    // floor the scale at O(1): at band edges both the product and nu vanish
    // and only an absolute comparison is meaningful
    let scale = pb.norm().max(nu_tilde.norm()).max(1.0);
    if (pb - target).norm() <= 1e-9 * scale {
        return Ok(base);
    }
    let pp = product(partner)?;
    if (pp - target).norm() <= 1e-9 * scale {
        return Ok(partner);
    }
    // at band edges both candidates give ~0 = ~0; otherwise the caller's
    // (E, nu) pair does not sit on the curve
    let mismatch = (pb - target).norm().min((pp - target).norm());
    if mismatch <= 1e-6 * scale {
        return Ok(if (pb - target).norm() <= (pp - target).norm() { base } else { partner });
    }
    Err(NumError::NoConsistentBranch { mismatch })
}

/// Base dispersion relation: `k_1 = -i Z(alpha_0) + pi / 2K` at the curve
/// point `(E, nu_tilde)`; one determination (additive multi-valuedness mod
/// `pi / K` is the caller's bookkeeping).
pub fn k1(e: f64, nu_tilde: Complex64, ctx: &ThetaContext) -> NumResult<Complex64> {
    let alpha0 = invert_dn_squared(e, nu_tilde, ctx)?;
    let z = ctx.jacobi_z(alpha0)?;
    Ok(-Complex64::i() * z + std::f64::consts::PI / (2.0 * ctx.k))
}

/// Fold a real crystal momentum into `[0, pi/2K]`: reduce mod `pi/K`, then
/// reflect the upper half.
pub fn fold_momentum(k_re: f64, k_period: f64) -> f64 {
    let p = k_period; // pi / K
    let mut r = k_re.rem_euclid(p);
    if r > 0.5 * p {
        r = p - r;
    }
    r
}

/// Distance between two folded momenta, respecting the reflection ends.
pub fn folded_distance(a: f64, b: f64, k_period: f64) -> f64 {
    let fa = fold_momentum(a, k_period);
    let fb = fold_momentum(b, k_period);
    (fa - fb).abs().min((fa + fb).abs()).min((k_period - fa - fb).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> ThetaContext {
        ThetaContext::new(0.5).unwrap()
    }

    #[test]
    fn lattice_point_cases() {
        let c = ctx();
        // E = 1 + m: dn^2 = 1 at the origin
        let a = invert_dn_squared(1.5, Complex64::from(0.0), &c).unwrap();
        assert!(a.norm() < 1e-12);
        // E = m: dn^2 = 0 at K + iK'
        let a = invert_dn_squared(0.5, Complex64::from(0.0), &c).unwrap();
        assert!((a - Complex64::new(c.k, c.kprime)).norm() < 1e-12);
        // E = 1: dn^2 = 1 - m at K
        let a = invert_dn_squared(1.0, Complex64::from(0.0), &c).unwrap();
        assert!((a - Complex64::from(c.k)).norm() < 1e-12);
    }

    #[test]
    fn branch_selection_follows_nu() {
        let c = ctx();
        // top band: E = 2.0, nu^2 = (E-1)(E-m)(E-m-1) = 1 * 1.5 * 0.5
        let e = 2.0;
        let nu = (1.5f64 * 0.5).sqrt();
        let a_plus = invert_dn_squared(e, Complex64::from(nu), &c).unwrap();
        let a_minus = invert_dn_squared(e, Complex64::from(-nu), &c).unwrap();
        assert!((a_plus + a_minus - Complex64::new(0.0, 2.0 * c.kprime)).norm() < 1e-9);
        let t = jacobi_sn_cn_dn(a_plus, c.m).unwrap();
        let p = c.m * t.sn * t.cn * t.dn;
        assert!((p - Complex64::i() * nu).norm() < 1e-9);
    }

    #[test]
    fn inconsistent_nu_rejected() {
        let c = ctx();
        let bad = invert_dn_squared(2.0, Complex64::from(10.0), &c);
        assert!(matches!(bad, Err(NumError::NoConsistentBranch { .. })));
    }

    #[test]
    fn folding() {
        let c = ctx();
        let p = std::f64::consts::PI / c.k;
        assert!((fold_momentum(0.3 + 5.0 * p, p) - 0.3).abs() < 1e-12);
        assert!((fold_momentum(p - 0.3, p) - 0.3).abs() < 1e-12);
        assert!(folded_distance(0.3, -0.3 + 7.0 * p, p) < 1e-12);
    }
}
