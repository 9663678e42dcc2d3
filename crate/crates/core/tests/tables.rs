//! Golden tables: every published polynomial family reproduced
//! coefficient-for-coefficient against the reference rows.

use lame_core::cohn::{cohn_polynomial, CohnKind};
use lame_core::covering::reduction_polynomial;
use lame_core::mpoly::{MPoly, Var};
use lame_core::reference as reference_rows;
use lame_core::spectral::{
    hermite_halphen, lame_polynomial, spectral_poly_i, spectral_poly_ii,
};
use lame_core::twisted::{theta_twisted_spectral, twisted_spectral, TwistedKind};

#[test]
fn table_hermite_halphen() {
    for ell in 1..=3u32 {
        assert_eq!(
            hermite_halphen(ell),
            reference_rows::hermite_halphen_row(ell).unwrap(),
            "ell = {ell}"
        );
    }
}

#[test]
fn table_lame_polynomials() {
    let b = MPoly::var(Var::B);
    let e = MPoly::var(Var::E);
    for ell in 2..=8u32 {
        let got = lame_polynomial(ell, false, &b, Some(&e)).unwrap().polynomial();
        assert_eq!(got, reference_rows::lame_polynomial_row_i(ell).unwrap(), "I ell={ell}");
    }
    for ell in 1..=8u32 {
        let got = lame_polynomial(ell, true, &b, Some(&e)).unwrap().polynomial();
        assert_eq!(got, reference_rows::lame_polynomial_row_ii(ell).unwrap(), "II ell={ell}");
    }
}

#[test]
fn table_spectral_polynomials() {
    for ell in 1..=8u32 {
        assert_eq!(
            spectral_poly_i(ell).unwrap().poly,
            reference_rows::spectral_row_i(ell).unwrap(),
            "L^I ell={ell}"
        );
        assert_eq!(
            spectral_poly_ii(ell).unwrap().poly,
            reference_rows::spectral_row_ii(ell).unwrap(),
            "L^II ell={ell}"
        );
    }
}

#[test]
fn table_cohn() {
    use reference_rows::CohnRowKind;
    for ell in 1..=8u32 {
        assert_eq!(
            cohn_polynomial(ell, CohnKind::TypeI).unwrap().poly,
            reference_rows::cohn_row(ell, CohnRowKind::TypeI).unwrap(),
            "Type I ell={ell}"
        );
        assert_eq!(
            cohn_polynomial(ell, CohnKind::TypeII).unwrap().poly,
            reference_rows::cohn_row(ell, CohnRowKind::TypeII).unwrap(),
            "Type II ell={ell}"
        );
    }
}

#[test]
fn table_twisted_spectral_polynomials() {
    for ell in 1..=8u32 {
        assert_eq!(
            twisted_spectral(ell, TwistedKind::I).unwrap().poly,
            reference_rows::twisted_row_i(ell).unwrap(),
            "Lt^I ell={ell}"
        );
    }
    for ell in 1..=6u32 {
        assert_eq!(
            twisted_spectral(ell, TwistedKind::II).unwrap().poly,
            reference_rows::twisted_row_ii(ell).unwrap(),
            "Lt^II ell={ell}"
        );
    }
}

#[test]
fn table_theta_twisted_spectral_polynomials() {
    for ell in 1..=8u32 {
        assert_eq!(
            theta_twisted_spectral(ell).unwrap().poly,
            reference_rows::theta_row(ell).unwrap(),
            "Ltheta ell={ell}"
        );
    }
}

#[test]
fn table_reduction_polynomials() {
    for ell in 1..=8u32 {
        assert_eq!(
            reduction_polynomial(ell).unwrap().p_hat,
            reference_rows::reduction_row(ell).unwrap(),
            "P_hat ell={ell}"
        );
    }
}
