//! Numeric evaluation of the fundamental multiplicative function on the
//! base curve: `Phi(x, y; x0, y0) = exp[ 1/2 int (y + y0)/(x - x0) dx/y ]`.
//!
//! The integral runs from a declared basepoint along a straight segment in
//! the `x`-plane; the `y`-branch is continued by marching anchors along the
//! path, so the value is deterministic for the declared homotopy class.
//! `Phi(basepoint) = 1` by construction; only ratios and multipliers are
//! meaningful, matching the normalization freedom of the definition.

use crate::error::{NumError, NumResult};
use crate::quadrature::integrate_adaptive;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy)]
pub struct CurvePoint {
    pub x: Complex64,
    pub y: Complex64,
}

#[derive(Debug, Clone)]
pub struct PhiContext {
    pub g2: f64,
    pub g3: f64,
    /// Start of every integration path; `Phi` is 1 here.
    pub basepoint: CurvePoint,
}

fn curve_rhs(x: Complex64, g2: f64, g3: f64) -> Complex64 {
    4.0 * x * x * x - g2 * x - g3
}

impl PhiContext {
    /// Basepoint above `x_b` on the principal branch.
    pub fn new(g2: f64, g3: f64, x_b: Complex64) -> NumResult<Self> {
        let y2 = curve_rhs(x_b, g2, g3);
        if y2.norm() < 1e-12 {
            return Err(NumError::PathThroughSingularity { at: 0.0 });
        }
        Ok(PhiContext {
            g2,
            g3,
            basepoint: CurvePoint { x: x_b, y: y2.sqrt() },
        })
    }

    /// `y(x(t))` anchors along the straight path, continued from the
    /// basepoint branch in `n` marching steps.
    fn branch_anchors(&self, x_to: Complex64, n: usize) -> NumResult<Vec<Complex64>> {
        let mut anchors = Vec::with_capacity(n + 1);
        let mut y_prev = self.basepoint.y;
        anchors.push(y_prev);
        for i in 1..=n {
            let t = i as f64 / n as f64;
            let x = self.basepoint.x + t * (x_to - self.basepoint.x);
            let y2 = curve_rhs(x, self.g2, self.g3);
            if y2.norm() < 1e-14 {
                return Err(NumError::PathThroughSingularity { at: t });
            }
            let r = y2.sqrt();
            let y = if (r - y_prev).norm() <= (r + y_prev).norm() { r } else { -r };
            anchors.push(y);
            y_prev = y;
        }
        Ok(anchors)
    }

    /// `Phi` at `(x, y)` relative to the basepoint; the supplied `y` must
    /// match the branch reached by the default path (checked).
    pub fn phi(&self, target: CurvePoint, x0: Complex64, y0: Complex64) -> NumResult<Complex64> {
        let n = 256usize;
        let anchors = self.branch_anchors(target.x, n)?;
        let reached = anchors[n];
        if (reached - target.y).norm() > 1e-6 * (1.0 + target.y.norm()) {
            return Err(NumError::NoConsistentBranch {
                mismatch: (reached - target.y).norm(),
            });
        }
        let dx = target.x - self.basepoint.x;
        let xb = self.basepoint.x;
        let g2 = self.g2;
        let g3 = self.g3;
        let mut integrand = |t: f64| -> NumResult<Complex64> {
            let x = xb + t * dx;
            let y2 = curve_rhs(x, g2, g3);
            let idx = ((t * n as f64).round() as usize).min(n);
            let anchor = anchors[idx];
            if y2.norm() < 1e-14 {
                return Err(NumError::PathThroughSingularity { at: t });
            }
            let r = y2.sqrt();
            let y = if (r - anchor).norm() <= (r + anchor).norm() { r } else { -r };
            let denom = x - x0;
            if denom.norm() < 1e-12 {
                return Err(NumError::PathThroughSingularity { at: t });
            }
            Ok(0.5 * (y + y0) / denom * dx / y)
        };
        let integral = integrate_adaptive(&mut integrand, 0.0, 1.0, 1e-10)?;
        Ok(integral.exp())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lemniscatic() -> PhiContext {
        // g2 = 1, g3 = 0: branch values 0, +-1/2
        PhiContext::new(1.0, 0.0, Complex64::from(2.0)).unwrap()
    }

    #[test]
    fn normalized_at_basepoint() {
        let ctx = lemniscatic();
        let p = ctx
            .phi(ctx.basepoint, Complex64::from(0.1), Complex64::from(0.3))
            .unwrap();
        assert!((p - 1.0).norm() < 1e-12);
    }

    #[test]
    fn branch_point_case_is_a_square_root() {
        // (x0, y0) = (e, 0): Phi = sqrt((x - e)/(x_b - e)), so the ratio of
        // two evaluations matches the square-root ratio.
        let ctx = lemniscatic();
        let e = 0.5f64;
        let x1 = Complex64::from(3.0);
        let x2 = Complex64::from(5.0);
        let y1 = curve_rhs(x1, 1.0, 0.0).sqrt();
        let y2 = curve_rhs(x2, 1.0, 0.0).sqrt();
        let p1 = ctx
            .phi(CurvePoint { x: x1, y: y1 }, Complex64::from(e), Complex64::from(0.0))
            .unwrap();
        let p2 = ctx
            .phi(CurvePoint { x: x2, y: y2 }, Complex64::from(e), Complex64::from(0.0))
            .unwrap();
        let expect = ((x1 - e) / (x2 - e)).sqrt();
        assert!(((p1 / p2) - expect).norm() < 1e-8, "{} vs {expect}", p1 / p2);
    }

    #[test]
    fn simple_zero_at_the_parametrizing_point() {
        // |Phi(x0 + delta)| scales linearly in delta near (x0, y0).
        let ctx = lemniscatic();
        let x0 = Complex64::from(1.2);
        let y0 = curve_rhs(x0, 1.0, 0.0).sqrt();
        let measure = |delta: f64| {
            let x = x0 + delta;
            let y = {
                // stay on the branch containing y0
                let r = curve_rhs(x, 1.0, 0.0).sqrt();
                if (r - y0).norm() <= (r + y0).norm() { r } else { -r }
            };
            ctx.phi(CurvePoint { x, y }, x0, y0).unwrap().norm()
        };
        let m1 = measure(1e-3);
        let m2 = measure(5e-4);
        let ratio = m1 / m2;
        assert!((ratio - 2.0).abs() < 0.01, "zero not simple: ratio {ratio}");
    }

    #[test]
    fn path_through_pole_is_reported() {
        let ctx = lemniscatic();
        // x0 right on the path from 2.0 to 6.0
        let x0 = Complex64::from(4.0);
        let x = Complex64::from(6.0);
        let y = curve_rhs(x, 1.0, 0.0).sqrt();
        let r = ctx.phi(CurvePoint { x, y }, x0, Complex64::from(1.0));
        assert!(matches!(r, Err(NumError::PathThroughSingularity { .. })));
    }
}
