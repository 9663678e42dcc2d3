//! Numeric check of the hyperelliptic-to-elliptic reduction identity:
//! over a real spectral segment avoiding branch points,
//!
//! ```text
//! int P_l(B) dB / sqrt(L_l(B))  =  int dx0 / y0
//! ```
//!
//! with the right side evaluated through the covering map and the bare
//! curve equation (no reuse of `P_l` or `L_l`), so agreement genuinely
//! cross-checks the covering against the spectral data.

use crate::error::{NumError, NumResult};
use crate::quadrature::integrate_adaptive;
use lame_core::covering::{reduction_polynomial, theorem_l};
use lame_core::rational::Rat;
use lame_core::spectral::full_spectral;
use lame_core::Var;
use num_complex::Complex64;

pub struct ReductionCheck {
    pub lhs: f64,
    pub rhs: f64,
}

/// Both sides of the reduction identity on `[b_lo, b_hi]` at exact
/// invariants `(g2, g3)`; the segment must keep `L_l > 0` and the image
/// `f(x0) > 0` (checked by sampling).
pub fn reduction_identity(
    ell: u32,
    g2: &Rat,
    g3: &Rat,
    b_lo: f64,
    b_hi: f64,
) -> NumResult<ReductionCheck> {
    let cm = theorem_l(ell)?;
    let red = reduction_polynomial(ell)?;
    let full = full_spectral(ell)?.poly;
    let assign = [(Var::G2, g2.clone()), (Var::G3, g3.clone())];
    let to_f64 = |p: &lame_core::MPoly| -> Vec<f64> {
        p.eval_rat(&assign)
            .coeff_vec(Var::B)
            .into_iter()
            .map(|c| c.as_constant().expect("B only").to_f64())
            .collect()
    };
    let horner = |cs: &[f64], b: f64| cs.iter().rev().fold(0.0, |a, c| a * b + c);
    let pl = to_f64(&red.p);
    let lfull = to_f64(&full);
    let x0n = to_f64(&cm.x0.num);
    let x0d = to_f64(&cm.x0.den);
    // derivative coefficients of the x0 quotient
    let d_poly = |cs: &[f64]| -> Vec<f64> {
        cs.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| i as f64 * c)
            .collect()
    };
    let x0n_d = d_poly(&x0n);
    let x0d_d = d_poly(&x0d);
    let g2f = g2.to_f64();
    let g3f = g3.to_f64();

    // sanity sweep: positivity of both radicands, sign of the image branch
    let x0_at = |b: f64| horner(&x0n, b) / horner(&x0d, b);
    let f_at = |x: f64| 4.0 * x * x * x - g2f * x - g3f;
    let mut y_sign = 0.0;
    for i in 0..=64 {
        let b = b_lo + (b_hi - b_lo) * i as f64 / 64.0;
        if horner(&lfull, b) <= 0.0 {
            return Err(NumError::Domain { what: "segment leaves the positive sheet", value: b });
        }
        let fx = f_at(x0_at(b));
        if fx <= 0.0 {
            return Err(NumError::Domain { what: "image hits a branch point", value: b });
        }
        if i == 0 {
            // anchor the curve branch to y0 = (y0/nu)(b_lo) * sqrt(L(b_lo))
            let yn = to_f64(&cm.y0_over_nu.num);
            let yd = to_f64(&cm.y0_over_nu.den);
            y_sign = (horner(&yn, b) / horner(&yd, b)).signum();
        }
    }

    let mut lhs_f = |b: f64| -> NumResult<Complex64> {
        Ok(Complex64::from(horner(&pl, b) / horner(&lfull, b).sqrt()))
    };
    let lhs = integrate_adaptive(&mut lhs_f, b_lo, b_hi, 1e-10)?.re;

    let mut rhs_f = |b: f64| -> NumResult<Complex64> {
        let n = horner(&x0n, b);
        let d = horner(&x0d, b);
        let dn = horner(&x0n_d, b);
        let dd = horner(&x0d_d, b);
        let dx0 = (dn * d - n * dd) / (d * d);
        let x0 = n / d;
        let y0 = y_sign * f_at(x0).sqrt();
        Ok(Complex64::from(dx0 / y0))
    };
    let rhs = integrate_adaptive(&mut rhs_f, b_lo, b_hi, 1e-10)?.re;
    Ok(ReductionCheck { lhs, rhs })
}
