//! Jacobi-form spectral polynomials and exact band-edge isolation.
//!
//! The transformed energy `B = -E + l(l+1)(m+1)/3` and the invariants
//! `g2(m), g3(m)` carry the spectral polynomial into the Jacobi picture;
//! the Jacobi-form spectral polynomial is the *negative* of the result,
//! which makes it monic of degree `2l + 1` in `E`. Its roots are the band
//! edges `E_0 < E_1 <= ... <= E_{2l}`.

use crate::covering::{CoveringMap, RatFunc};
use crate::error::{Error, Result};
use crate::moduli::{g2_poly_in_m, g3_poly_in_m};
use crate::mpoly::{MPoly, Var};
use crate::rational::Rat;
use crate::spectral::full_spectral;
use crate::upoly::UPoly;

/// `B(E, m) = -E + l(l+1)(m+1)/3` as a polynomial in `(En, m)`.
pub fn b_of_e(ell: u32) -> MPoly {
    let c = Rat::frac((ell * (ell + 1)) as i64, 3);
    MPoly::var(Var::En).neg().add(
        &MPoly::var(Var::M)
            .add(&MPoly::one())
            .scale(&c),
    )
}

/// Substitute `(B, g2, g3) -> (B(E,m), g2(m), g3(m))` in a spectral-family
/// polynomial, producing a polynomial in `(En, m)` (and `e`, if present).
pub fn to_jacobi_picture(p: &MPoly, ell: u32) -> MPoly {
    p.subst(&[
        (Var::B, b_of_e(ell)),
        (Var::G2, g2_poly_in_m()),
        (Var::G3, g3_poly_in_m()),
    ])
}

#[derive(Debug, Clone)]
pub struct JacobiSpectral {
    pub ell: u32,
    pub m: Rat,
    /// Monic degree-(2l+1) polynomial in `E` with rational coefficients.
    pub poly: UPoly,
}

/// Jacobi-form spectral polynomial with the modulus kept symbolic:
/// a polynomial in `(En, m)`, monic in `En`.
pub fn jacobi_spectral_symbolic(ell: u32) -> Result<MPoly> {
    let full = full_spectral(ell)?.poly;
    Ok(to_jacobi_picture(&full, ell).neg())
}

/// Jacobi-form spectral polynomial at a rational modulus.
pub fn jacobi_spectral(ell: u32, m: &Rat) -> Result<JacobiSpectral> {
    if m.is_zero() || m.is_one() {
        return Err(Error::DegenerateModulus);
    }
    let symb = jacobi_spectral_symbolic(ell)?;
    let at_m = symb.eval_rat(&[(Var::M, m.clone())]);
    let coeffs: Vec<Rat> = at_m
        .coeff_vec(Var::En)
        .into_iter()
        .map(|c| c.as_constant().expect("only E remains"))
        .collect();
    let poly = UPoly::from_coeffs(coeffs);
    debug_assert_eq!(poly.degree(), 2 * ell as usize + 1);
    debug_assert!(poly.lc().is_one());
    Ok(JacobiSpectral { ell, m: m.clone(), poly })
}

/// All `2l + 1` band edges at a real rational modulus, sorted ascending.
/// The Sturm count must certify exactly `2l + 1` distinct real roots.
pub fn band_edges(ell: u32, m: &Rat) -> Result<Vec<f64>> {
    let js = jacobi_spectral(ell, m)?;
    let expected = 2 * ell as usize + 1;
    let sqf = js.poly.squarefree_part();
    if sqf.degree() != expected {
        return Err(Error::RootCountMismatch { expected, got: sqf.degree() });
    }
    let roots = js.poly.real_roots();
    if roots.len() != expected {
        return Err(Error::RootCountMismatch { expected, got: roots.len() });
    }
    Ok(roots)
}

/// A covering-map component recast in the Jacobi picture: numerator and
/// denominator in `(En, m)`, denominator monic in `En`.
pub fn ratfunc_to_jacobi(rf: &RatFunc, ell: u32) -> (MPoly, MPoly) {
    let num = to_jacobi_picture(&rf.num, ell);
    let den = to_jacobi_picture(&rf.den, ell);
    let lc = den
        .leading_coeff(Var::En)
        .as_constant()
        .expect("denominator stays rational-leading in E");
    (num.scale(&lc.recip()), den.scale(&lc.recip()))
}

/// The reduced-energy map `E -> E_l(E|m) = -x0(B(E,m)) + 2(m+1)/3` as a
/// rational function in `(En, m)`.
pub fn reduced_energy_map(cm: &CoveringMap) -> (MPoly, MPoly) {
    let (nx, dx) = ratfunc_to_jacobi(&cm.x0, cm.ell);
    let shift = MPoly::var(Var::M).add(&MPoly::one()).scale(&Rat::frac(2, 3));
    let num = nx.neg().add(&shift.mul(&dx));
    (num, dx)
}

/// `nu_tilde_l / nu_tilde = (y0/nu)/2` in the Jacobi picture.
pub fn nu_ratio_map(cm: &CoveringMap) -> (MPoly, MPoly) {
    let (ny, dy) = ratfunc_to_jacobi(&cm.y0_over_nu, cm.ell);
    (ny.scale(&Rat::frac(1, 2)), dy)
}

/// `kappa/nu` in the Jacobi picture (the same function of `E`; the second
/// term of the reduced dispersion relation is `kappa_hat(E|m) nu_tilde`).
pub fn kappa_ratio_map(cm: &CoveringMap) -> (MPoly, MPoly) {
    ratfunc_to_jacobi(&cm.kappa_over_nu, cm.ell)
}
