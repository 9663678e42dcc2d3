//! The covering map `(B, nu) -> (x0, y0)` from spectral polynomials, the
//! auxiliary function `kappa`, and the hyperelliptic-to-elliptic reduction
//! polynomials.
//!
//! The covering data assemble directly from the five spectral families:
//!
//! ```text
//! x0       = e + (4 / [l(l+1)]^2)  L^II (Lt^II)^2 / (L^I (Lt^I)^2)
//! y0/nu    = (16 / [l(l+1)]^3) prod_gamma Lt^II / ((L^I)^2 (Lt^I)^3)
//! kappa/nu = -((l-1)(l+2) / l(l+1)) Ltheta / (L^I Lt^I)
//! ```
//!
//! `x0` must come out independent of which branch value is used: after the
//! `e`-cubic reduction every `e`-term cancels. That cancellation doubles as
//! the strongest internal consistency check on the whole spectral stack, so
//! it is verified on every construction rather than trusted.

use crate::elim::{discriminant, gcd_in_var, ring_div_exact, strip_leading_coeff};
use crate::error::{Error, Result};
use crate::mpoly::{MPoly, Var};
use crate::rational::Rat;
use crate::spectral::{full_spectral, spectral_poly_i, spectral_poly_ii};
use crate::twisted::{theta_twisted_spectral, twisted_spectral, TwistedKind};
use crate::upoly::UPoly;

/// Quotient of two polynomials in lowest terms, denominator monic in `B`.
#[derive(Debug, Clone, PartialEq)]
pub struct RatFunc {
    pub num: MPoly,
    pub den: MPoly,
}

impl RatFunc {
    /// Builds the reduced form: cancel the `B`-gcd exactly, renormalize the
    /// denominator monic in `B`.
    pub fn reduced(num: MPoly, den: MPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut num = num;
        let mut den = den;
        if !num.is_zero() {
            let g = gcd_in_var(&num, &den, Var::B);
            if g.degree(Var::B) > 0 {
                num = num.div_exact(&g).ok_or(Error::NonpolynomialQuotient)?;
                den = den.div_exact(&g).ok_or(Error::NonpolynomialQuotient)?;
            }
        }
        let lc = den
            .leading_coeff(Var::B)
            .as_constant()
            .ok_or(Error::NonpolynomialQuotient)?;
        Ok(RatFunc {
            num: num.scale(&lc.recip()),
            den: den.scale(&lc.recip()),
        })
    }

    pub fn constant(c: Rat) -> RatFunc {
        RatFunc { num: MPoly::constant(c), den: MPoly::one() }
    }

    /// Exact evaluation at rational `(B, g2, g3)`.
    pub fn eval_rat(&self, b: &Rat, g2: &Rat, g3: &Rat) -> Result<Rat> {
        let assign = [
            (Var::B, b.clone()),
            (Var::G2, g2.clone()),
            (Var::G3, g3.clone()),
        ];
        let d = self.den.eval_full(&assign);
        if d.is_zero() {
            return Err(Error::CoveringPole);
        }
        Ok(self.num.eval_full(&assign) / d)
    }

    /// Floating evaluation in `B` after substituting numeric invariants.
    pub fn eval_f64(&self, b: f64, g2: &Rat, g3: &Rat) -> Result<f64> {
        let assign = [(Var::G2, g2.clone()), (Var::G3, g3.clone())];
        let den = self.den.eval_rat(&assign).eval_f64(Var::B, b);
        if den == 0.0 {
            return Err(Error::CoveringPole);
        }
        Ok(self.num.eval_rat(&assign).eval_f64(Var::B, b) / den)
    }

    pub fn degree_max(&self) -> usize {
        self.num.degree(Var::B).max(self.den.degree(Var::B))
    }
}

#[derive(Debug, Clone)]
pub struct CoveringMap {
    pub ell: u32,
    pub x0: RatFunc,
    pub y0_over_nu: RatFunc,
    pub kappa_over_nu: RatFunc,
}

/// Assembles the covering map and auxiliary function for degree `ell`.
pub fn theorem_l(ell: u32) -> Result<CoveringMap> {
    let li = spectral_poly_i(ell)?.poly;
    let lii = spectral_poly_ii(ell)?.poly;
    let lti = twisted_spectral(ell, TwistedKind::I)?.poly;
    let ltii = twisted_spectral(ell, TwistedKind::II)?.poly;
    let ltheta = theta_twisted_spectral(ell)?.poly;
    let w = (ell * (ell + 1)) as i64;

    // x0: e * den + (4/w^2) L^II (Lt^II)^2 must lose every e after reduction.
    let den_x = li.mul(&lti.pow(2));
    let num_x_e = MPoly::var(Var::E)
        .mul(&den_x)
        .add(&lii.mul_red(&ltii.pow_red(2)).scale(&Rat::frac(4, w * w)))
        .reduce_e();
    if num_x_e.uses_var(Var::E) {
        return Err(Error::GammaDisagreement);
    }
    let x0 = RatFunc::reduced(num_x_e, den_x)?;

    let num_y = crate::elim::branch_product(&ltii)
        .scale(&Rat::from_big(16.into(), (w * w * w).into()));
    let den_y = li.pow(2).mul(&lti.pow(3));
    let y0_over_nu = RatFunc::reduced(num_y, den_y)?;

    let kfac = Rat::frac(-((ell as i64 - 1) * (ell as i64 + 2)), w);
    let kappa_over_nu = RatFunc::reduced(ltheta.scale(&kfac), li.mul(&lti))?;

    Ok(CoveringMap { ell, x0, y0_over_nu, kappa_over_nu })
}

impl CoveringMap {
    /// Symbolic curve identity `(y0/nu)^2 L_ell = 4 x0^3 - g2 x0 - g3` as an
    /// equality of cross-multiplied polynomials.
    pub fn verify_curve_identity_symbolic(&self) -> Result<()> {
        let full = full_spectral(self.ell)?.poly;
        let (nx, dx) = (&self.x0.num, &self.x0.den);
        let (ny, dy) = (&self.y0_over_nu.num, &self.y0_over_nu.den);
        let lhs = ny.pow(2).mul(&full).mul(&dx.pow(3));
        let rhs = nx
            .pow(3)
            .scale(&Rat::from_int(4))
            .sub(&MPoly::var(Var::G2).mul(nx).mul(&dx.pow(2)))
            .sub(&MPoly::var(Var::G3).mul(&dx.pow(3)))
            .mul(&dy.pow(2));
        if lhs == rhs {
            Ok(())
        } else {
            Err(Error::GammaDisagreement)
        }
    }

    /// Spot-check of the curve identity at exact rational points that avoid
    /// the denominators' zeros.
    pub fn verify_curve_identity_at(&self, points: &[(Rat, Rat, Rat)]) -> Result<usize> {
        let full = full_spectral(self.ell)?.poly;
        let mut checked = 0;
        for (b, g2, g3) in points {
            let assign = [
                (Var::B, b.clone()),
                (Var::G2, g2.clone()),
                (Var::G3, g3.clone()),
            ];
            if self.x0.den.eval_full(&assign).is_zero()
                || self.y0_over_nu.den.eval_full(&assign).is_zero()
            {
                continue;
            }
            let x0 = self.x0.eval_rat(b, g2, g3)?;
            let y0n = self.y0_over_nu.eval_rat(b, g2, g3)?;
            let l = full.eval_full(&assign);
            let lhs = &y0n * &y0n * l;
            let rhs = Rat::from_int(4) * x0.pow(3) - g2 * &x0 - g3.clone();
            if lhs != rhs {
                return Err(Error::GammaDisagreement);
            }
            checked += 1;
        }
        Ok(checked)
    }
}

#[derive(Debug, Clone)]
pub struct ReductionPolynomial {
    pub ell: u32,
    /// `P = (y0/nu)^{-1} dx0/dB`, exactly.
    pub p: MPoly,
    /// `P = (l(l+1)/4) P_hat` with `P_hat` monic of degree `ell - 1`.
    pub p_hat: MPoly,
}

/// The polynomial of the pulled-back holomorphic 1-form:
/// `P dB / nu = dx0 / y0` under the covering map.
pub fn reduction_polynomial(ell: u32) -> Result<ReductionPolynomial> {
    let cm = theorem_l(ell)?;
    reduction_from_covering(&cm)
}

pub fn reduction_from_covering(cm: &CoveringMap) -> Result<ReductionPolynomial> {
    let ell = cm.ell;
    let (nx, dx) = (&cm.x0.num, &cm.x0.den);
    let (ny, dy) = (&cm.y0_over_nu.num, &cm.y0_over_nu.den);
    // dx0/dB = (nx' dx - nx dx') / dx^2 ; P = (dx0/dB) * dy / ny
    let deriv_num = nx
        .derivative(Var::B)
        .mul(dx)
        .sub(&nx.mul(&dx.derivative(Var::B)));
    let p_num = deriv_num.mul(dy);
    let p_den = dx.pow(2).mul(ny);
    let p = ring_div_exact(&p_num, &p_den).ok_or(Error::NonpolynomialQuotient)?;
    let w = (ell * (ell + 1)) as i64;
    let p_hat = p.scale(&Rat::frac(4, w));
    let lc = p_hat.leading_coeff(Var::B).as_constant();
    if p_hat.degree(Var::B) != (ell as usize).saturating_sub(1)
        || lc.map(|c| !c.is_one()).unwrap_or(true)
    {
        return Err(Error::DegreeMismatch {
            what: "reduction polynomial",
            expected: ell as usize - 1,
            got: p_hat.degree(Var::B),
        });
    }
    Ok(ReductionPolynomial { ell, p, p_hat })
}

/// Eliminates `(g2, g3)` from an isobaric coincidence condition down to a
/// primitive integer polynomial in the Klein invariant `J`, through the
/// gauge `g3 = 1` plus a separate test of the `g3 = 0` ray (`J = 1`).
pub fn j_condition(cond: &MPoly) -> Result<UPoly> {
    for v in Var::ALL {
        if cond.uses_var(v) && v != Var::G2 && v != Var::G3 {
            return Err(Error::UnsupportedVariables);
        }
    }
    if cond.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if cond.as_constant().is_some() {
        // never vanishes: empty coincidence locus
        return Ok(UPoly::constant(Rat::one()));
    }
    let jvar = MPoly::var(Var::J);
    let g2 = MPoly::var(Var::G2);
    // J (g2^3 - 27) - g2^3 in the g3 = 1 gauge.
    let rel = jvar
        .mul(&g2.pow(3).sub(&MPoly::from_int(27)))
        .sub(&g2.pow(3));
    let gauged = cond.eval_rat(&[(Var::G3, Rat::one())]);
    let mut jpoly = if gauged.as_constant().is_some() {
        // condition was a pure power of g3: no locus beyond the J = 1 ray
        UPoly::constant(Rat::one())
    } else {
        let res = crate::elim::resultant(&gauged, &rel, Var::G2)?;
        let coeffs: Vec<Rat> = res
            .coeff_vec(Var::J)
            .into_iter()
            .map(|c| c.as_constant().ok_or(Error::UnsupportedVariables))
            .collect::<Result<_>>()?;
        UPoly::from_coeffs(coeffs)
    };
    if jpoly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    // g3 = 0 ray: if the condition dies identically there, J = 1 belongs to
    // the locus and the gauge above cannot see it.
    let on_ray = cond.eval_rat(&[(Var::G3, Rat::zero())]);
    if on_ray.is_zero() {
        let j_minus_1 = UPoly::from_coeffs(vec![-Rat::one(), Rat::one()]);
        if !jpoly.div_rem(&j_minus_1).1.is_zero() {
            jpoly = jpoly.mul(&j_minus_1);
        }
    }
    Ok(jpoly.squarefree_part().primitive_positive())
}

/// Double-critical-point locus of the covering: values of `J` where
/// `P_hat_ell` has a double root. Returns the primitive `J`-condition;
/// a constant polynomial means the locus is empty.
pub fn branch_degeneracy(ell: u32) -> Result<UPoly> {
    let red = reduction_polynomial(ell)?;
    if red.p_hat.degree(Var::B) < 2 {
        return Ok(UPoly::constant(Rat::one()));
    }
    let disc = discriminant(&red.p_hat, Var::B)?;
    j_condition(&disc)
}

/// Root of a linear primitive `J`-condition, if that is what it is.
pub fn linear_root(p: &UPoly) -> Option<Rat> {
    if p.degree() == 1 {
        Some(-&p.coeffs[0] / &p.coeffs[1])
    } else {
        None
    }
}

/// Covering degree: `max(deg num, deg den)` of `x0`, equal to `l(l+1)/2`.
pub fn covering_degree(cm: &CoveringMap) -> usize {
    cm.x0.degree_max()
}

/// `strip + monic` normalization against a known-rational leading
/// coefficient; shared with the verification suite.
pub fn monic_in_b(p: &MPoly) -> Result<MPoly> {
    strip_leading_coeff(p, Var::B).ok_or(Error::NonpolynomialQuotient)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::{b, g2, g3};

    #[test]
    fn covering_ell1() {
        let cm = theorem_l(1).unwrap();
        assert_eq!(cm.x0.num, b());
        assert_eq!(cm.x0.den, MPoly::one());
        assert_eq!(cm.y0_over_nu.num, MPoly::from_int(2));
        assert!(cm.kappa_over_nu.num.is_zero());
    }

    #[test]
    fn covering_ell2() {
        let cm = theorem_l(2).unwrap();
        // x0 = (B^3 + 27 g3) / (9 (B^2 - 3 g2))
        let num = b()
            .pow(3)
            .add(&g3().scale(&Rat::from_int(27)))
            .scale(&Rat::frac(1, 9));
        let den = b().pow(2).sub(&g2().scale(&Rat::from_int(3)));
        assert_eq!(cm.x0.num, num);
        assert_eq!(cm.x0.den, den);
        // kappa/nu = -2 / (3 (B^2 - 3 g2))
        assert_eq!(cm.kappa_over_nu.num, MPoly::constant(Rat::frac(-2, 3)));
        assert_eq!(cm.kappa_over_nu.den, den);
        // y0/nu = 2 (B^3 - 9 g2 B - 54 g3) / (27 (B^2 - 3 g2)^2)
        let ynum = b()
            .pow(3)
            .sub(&g2().mul(&b()).scale(&Rat::from_int(9)))
            .sub(&g3().scale(&Rat::from_int(54)))
            .scale(&Rat::frac(2, 27));
        assert_eq!(cm.y0_over_nu.num, ynum);
        assert_eq!(cm.y0_over_nu.den, den.pow(2));
    }

    #[test]
    fn covering_ell3_kappa() {
        // kappa/nu = -10 / (3 B (4 B^2 - 75 g2)) over a monic denominator.
        let cm = theorem_l(3).unwrap();
        let den = b().mul(&b().pow(2).sub(&g2().scale(&Rat::frac(75, 4))));
        assert_eq!(cm.kappa_over_nu.den, den);
        assert_eq!(cm.kappa_over_nu.num, MPoly::constant(Rat::frac(-10, 12)));
    }

    #[test]
    fn curve_identity_small() {
        for ell in 1..=3 {
            theorem_l(ell).unwrap().verify_curve_identity_symbolic().unwrap();
        }
    }

    #[test]
    fn covering_degree_law_small() {
        for ell in 1..=4 {
            let cm = theorem_l(ell).unwrap();
            assert_eq!(covering_degree(&cm), (ell * (ell + 1) / 2) as usize);
        }
    }

    #[test]
    fn reduction_polynomials_small() {
        assert_eq!(reduction_polynomial(2).unwrap().p_hat, b());
        assert_eq!(reduction_polynomial(2).unwrap().p, b().scale(&Rat::frac(3, 2)));
        assert_eq!(
            reduction_polynomial(3).unwrap().p_hat,
            b().pow(2).sub(&g2().scale(&Rat::frac(15, 4)))
        );
    }

    #[test]
    fn branch_degeneracy_cases() {
        // ell = 2: P_hat = B is linear, no double root anywhere.
        assert_eq!(branch_degeneracy(2).unwrap().degree(), 0);
        // ell = 3: disc(B^2 - 15/4 g2) = 15 g2, vanishing only at J = 0.
        let j3 = branch_degeneracy(3).unwrap();
        assert_eq!(j3.degree(), 1);
        assert_eq!(linear_root(&j3).unwrap(), Rat::zero());
        // ell = 4: the double-root locus sits at J = -2500/12879.
        let j4 = branch_degeneracy(4).unwrap();
        assert_eq!(linear_root(&j4).unwrap(), Rat::frac(-2500, 12879));
    }
}
