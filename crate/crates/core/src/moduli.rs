//! Parameter-space conversions between the modular parameter `m` and the
//! Weierstrass data `(e1, e2, e3; g2, g3)`, plus the Klein invariant `J`.
//!
//! Conventions (`A = 1` throughout):
//!
//! ```text
//! (e1, e2, e3) = ((2-m)/3, (2m-1)/3, -(m+1)/3)
//! g2 = 4 (m^2 - m + 1) / 3
//! g3 = 4 (m-2)(2m-1)(m+1) / 27
//! J  = g2^3 / (g2^3 - 27 g3^2) = (4/27) (m^2-m+1)^3 / (m^2 (1-m)^2)
//! ```

use crate::error::{Error, Result};
use crate::mpoly::{MPoly, Var};
use crate::rational::Rat;

/// Exact elliptic-curve data for a rational modulus. Floating quantities
/// (complete integrals, nome) live in the numerics layer and are derived
/// from this bundle.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipticParams {
    pub m: Rat,
    pub e: [Rat; 3],
    pub g2: Rat,
    pub g3: Rat,
    pub j: Rat,
}

/// Exact parameters for a rational `m` outside {0, 1}.
pub fn params_from_m(m: &Rat) -> Result<EllipticParams> {
    if m.is_zero() || m.is_one() {
        return Err(Error::DegenerateModulus);
    }
    let third = Rat::frac(1, 3);
    let e1 = (Rat::from_int(2) - m) * &third;
    let e2 = (Rat::from_int(2) * m - Rat::one()) * &third;
    let e3 = -(m + &Rat::one()) * &third;
    let g2 = Rat::frac(4, 3) * (m * m - m + &Rat::one());
    let g3 = Rat::frac(4, 27)
        * (m - &Rat::from_int(2))
        * (Rat::from_int(2) * m - Rat::one())
        * (m + &Rat::one());
    let j = j_of_m(m)?;
    debug_assert_eq!(&e1 + &e2 + &e3, Rat::zero());
    debug_assert_eq!(&e1 - &e3, Rat::one());
    Ok(EllipticParams { m: m.clone(), e: [e1, e2, e3], g2, g3, j })
}

/// Klein invariant of a rational modulus, `J = (4/27)(m^2-m+1)^3 / (m(1-m))^2`.
pub fn j_of_m(m: &Rat) -> Result<Rat> {
    if m.is_zero() || m.is_one() {
        return Err(Error::DegenerateModulus);
    }
    let num = (m * m - m + &Rat::one()).pow(3);
    let d = m * &(Rat::one() - m);
    Ok(Rat::frac(4, 27) * num / (&d * &d))
}

/// Klein invariant from rational invariants; the discriminant must be
/// nonzero.
pub fn j_of_invariants(g2: &Rat, g3: &Rat) -> Result<Rat> {
    let disc = g2.pow(3) - Rat::from_int(27) * g3.pow(2);
    if disc.is_zero() {
        return Err(Error::DegenerateModulus);
    }
    Ok(g2.pow(3) / disc)
}

/// Weierstrass invariants as polynomials in the symbolic modulus `m`
/// (for exact Jacobi-form substitutions).
pub fn g2_poly_in_m() -> MPoly {
    // 4 (m^2 - m + 1) / 3
    let m = MPoly::var(Var::M);
    m.pow(2)
        .sub(&m)
        .add(&MPoly::one())
        .scale(&Rat::frac(4, 3))
}

pub fn g3_poly_in_m() -> MPoly {
    // 4 (m - 2)(2m - 1)(m + 1) / 27
    let m = MPoly::var(Var::M);
    m.sub(&MPoly::from_int(2))
        .mul(&m.scale(&Rat::from_int(2)).sub(&MPoly::one()))
        .mul(&m.add(&MPoly::one()))
        .scale(&Rat::frac(4, 27))
}

/// The three branch values as polynomials in `m`, in the fixed order
/// `(e1, e2, e3) = ((2 - m)/3, (2m - 1)/3, -(m + 1)/3)`.
pub fn e_polys_in_m() -> [MPoly; 3] {
    let m = MPoly::var(Var::M);
    [
        MPoly::from_int(2).sub(&m).scale(&Rat::frac(1, 3)),
        m.scale(&Rat::from_int(2)).sub(&MPoly::one()).scale(&Rat::frac(1, 3)),
        m.add(&MPoly::one()).scale(&Rat::frac(-1, 3)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemniscatic_point() {
        // m = 1/2: (e1, e2, e3) = (1/2, 0, -1/2), g2 = 1, g3 = 0, J = 1.
        let p = params_from_m(&Rat::frac(1, 2)).unwrap();
        assert_eq!(p.e, [Rat::frac(1, 2), Rat::zero(), Rat::frac(-1, 2)]);
        assert_eq!(p.g2, Rat::one());
        assert_eq!(p.g3, Rat::zero());
        assert_eq!(p.j, Rat::one());
    }

    #[test]
    fn j_equals_one_on_the_lemniscatic_orbit() {
        assert_eq!(j_of_m(&Rat::from_int(2)).unwrap(), Rat::one());
        assert_eq!(j_of_m(&Rat::from_int(-1)).unwrap(), Rat::one());
    }

    #[test]
    fn sixfold_symmetry() {
        for m in [Rat::frac(3, 7), Rat::frac(-2, 5), Rat::frac(9, 4), Rat::frac(22, 7)] {
            let j = j_of_m(&m).unwrap();
            assert_eq!(j_of_m(&(Rat::one() - &m)).unwrap(), j);
            assert_eq!(j_of_m(&m.recip()).unwrap(), j);
        }
    }

    #[test]
    fn j_identity_with_invariants() {
        for m in [Rat::frac(1, 3), Rat::frac(5, 2), Rat::frac(-7, 11)] {
            let p = params_from_m(&m).unwrap();
            // J (g2^3 - 27 g3^2) = g2^3 exactly.
            let disc = p.g2.pow(3) - Rat::from_int(27) * p.g3.pow(2);
            assert_eq!(&p.j * &disc, p.g2.pow(3));
            assert_eq!(j_of_invariants(&p.g2, &p.g3).unwrap(), p.j);
        }
    }

    #[test]
    fn degenerate_moduli_rejected() {
        assert!(matches!(params_from_m(&Rat::zero()), Err(Error::DegenerateModulus)));
        assert!(matches!(params_from_m(&Rat::one()), Err(Error::DegenerateModulus)));
    }

    #[test]
    fn symbolic_polynomials_match_rational_path() {
        let m = Rat::frac(4, 9);
        let p = params_from_m(&m).unwrap();
        let assign = [(Var::M, m)];
        assert_eq!(g2_poly_in_m().eval_full(&assign), p.g2);
        assert_eq!(g3_poly_in_m().eval_full(&assign), p.g3);
        let es = e_polys_in_m();
        for k in 0..3 {
            assert_eq!(es[k].eval_full(&assign), p.e[k]);
        }
    }
}
