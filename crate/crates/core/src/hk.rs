//! The Hermite-Krichever coefficient recurrences at a concrete point of the
//! spectral curve.
//!
//! Given `(B, nu)` with `nu^2 = L_ell(B)` and the covering data
//! `(x0, y0, kappa)` of Theorem L's formulas, the solution shape
//! `[A(x) + B(x) (y + y0)/(x - x0)] Phi exp(kappa int dx/y)` has polynomial
//! coefficients determined by a coupled downward recurrence; the two `x^-1`
//! residuals must vanish. The recurrence is generic over the scalar type so
//! the same code runs exactly over `Q(nu)` (a quadratic extension) and in
//! floating complex arithmetic (the numerics crate supplies that scalar).

use crate::covering::CoveringMap;
use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::spectral::full_spectral;
use crate::mpoly::Var;

/// Scalar operations the recurrence needs. `one_like`/`zero_like` take a
/// witness so value types may carry context (the exact scalar carries
/// `nu^2`).
pub trait HkScalar: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn scale_rat(&self, r: &Rat) -> Self;
}

/// Element `re + im * nu` of the quadratic extension `Q(nu)`, `nu^2` rational.
#[derive(Debug, Clone, PartialEq)]
pub struct QExt {
    pub re: Rat,
    pub im: Rat,
    pub nu2: Rat,
}

impl QExt {
    pub fn rational(r: Rat, nu2: &Rat) -> Self {
        QExt { re: r, im: Rat::zero(), nu2: nu2.clone() }
    }

    pub fn nu_times(r: Rat, nu2: &Rat) -> Self {
        QExt { re: Rat::zero(), im: r, nu2: nu2.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl HkScalar for QExt {
    fn zero_like(&self) -> Self {
        QExt { re: Rat::zero(), im: Rat::zero(), nu2: self.nu2.clone() }
    }
    fn one_like(&self) -> Self {
        QExt { re: Rat::one(), im: Rat::zero(), nu2: self.nu2.clone() }
    }
    fn add(&self, o: &Self) -> Self {
        QExt { re: &self.re + &o.re, im: &self.im + &o.im, nu2: self.nu2.clone() }
    }
    fn sub(&self, o: &Self) -> Self {
        QExt { re: &self.re - &o.re, im: &self.im - &o.im, nu2: self.nu2.clone() }
    }
    fn mul(&self, o: &Self) -> Self {
        QExt {
            re: &self.re * &o.re + &(&self.im * &o.im) * &self.nu2,
            im: &self.re * &o.im + &self.im * &o.re,
            nu2: self.nu2.clone(),
        }
    }
    fn scale_rat(&self, r: &Rat) -> Self {
        QExt { re: &self.re * r, im: &self.im * r, nu2: self.nu2.clone() }
    }
}

/// Point data feeding the recurrence.
#[derive(Debug, Clone)]
pub struct HkInputs<T> {
    pub b: T,
    pub g2: T,
    pub g3: T,
    pub x0: T,
    pub y0: T,
    pub kappa: T,
}

#[derive(Debug, Clone)]
pub struct HkSolution<T> {
    /// Coefficients of `A(x)`, ascending in the power of `x`.
    pub a: Vec<T>,
    /// Coefficients of `B(x)`, ascending.
    pub b: Vec<T>,
    /// The two `x^-1` residuals; zero exactly when the point is consistent.
    pub residual_a: T,
    pub residual_b: T,
}

/// Polynomial degrees of the two factors: `(l-1)/2, (l-3)/2` for odd `l`,
/// `l/2 - 1, l/2 - 1` for even `l`.
pub fn hk_degrees(ell: u32) -> (i64, i64) {
    let l = ell as i64;
    if l % 2 == 1 {
        ((l - 1) / 2, (l - 3) / 2)
    } else {
        (l / 2 - 1, l / 2 - 1)
    }
}

/// Runs the coupled recurrence top-down. Normalization: the top coefficient
/// of `A` (odd `ell`), resp. `B` (even `ell`), is one.
pub fn hk_run<T: HkScalar>(ell: u32, inp: &HkInputs<T>) -> HkSolution<T> {
    let l = ell as i64;
    let odd = l % 2 == 1;
    let (top_a, top_b) = hk_degrees(ell);
    let zero = inp.b.zero_like();
    let one = inp.b.one_like();

    let na = (top_a.max(-1) + 2) as usize;
    let nb = (top_b.max(-1) + 2) as usize;
    let mut av: Vec<T> = vec![zero.clone(); na]; // a[0] = x^-1 ... a[top+1]
    let mut bv: Vec<T> = vec![zero.clone(); nb];
    let geta = |av: &Vec<T>, j: i64| -> T {
        if j > top_a || j < -1 {
            zero.clone()
        } else {
            av[(j + 1) as usize].clone()
        }
    };
    let getb = |bv: &Vec<T>, j: i64| -> T {
        if j > top_b || j < -1 {
            zero.clone()
        } else {
            bv[(j + 1) as usize].clone()
        }
    };

    let x0sq = inp.x0.mul(&inp.x0);
    let k2_minus_b = inp.kappa.mul(&inp.kappa).sub(&inp.b);
    let kx0_minus_y0 = inp.kappa.mul(&inp.x0).sub(&inp.y0);
    let ky0 = inp.kappa.mul(&inp.y0);
    // kappa (4 x0^2 - g2) - 2 x0 y0
    let kc = inp
        .kappa
        .mul(&x0sq.scale_rat(&Rat::from_int(4)).sub(&inp.g2))
        .sub(&inp.x0.mul(&inp.y0).scale_rat(&Rat::from_int(2)));
    // 2 kappa x0 - y0
    let two_kx0_minus_y0 = inp.kappa.mul(&inp.x0).scale_rat(&Rat::from_int(2)).sub(&inp.y0);

    // residual of the A-recurrence at index j, pivot term excluded
    let rest_a = |av: &Vec<T>, bv: &Vec<T>, j: i64| -> T {
        let lin = inp
            .x0
            .scale_rat(&Rat::from_int(4 * j + 5))
            .add(&k2_minus_b);
        let quad = x0sq
            .scale_rat(&Rat::from_int(4))
            .sub(&inp.g2.scale_rat(&Rat::frac(2 * j + 5, 2)))
            .sub(&ky0.scale_rat(&Rat::from_int(2)))
            .scale_rat(&Rat::from_int(j + 2));
        lin.mul(&geta(av, j + 1))
            .add(&quad.mul(&geta(av, j + 2)))
            .sub(&inp.g3.mul(&geta(av, j + 3)).scale_rat(&Rat::from_int((j + 2) * (j + 3))))
            .add(&inp.kappa.mul(&getb(bv, j)).scale_rat(&Rat::from_int(8 * (j + 1))))
            .add(&kx0_minus_y0.mul(&getb(bv, j + 1)).scale_rat(&Rat::from_int(4 * (2 * j + 3))))
            .add(&kc.mul(&getb(bv, j + 2)).scale_rat(&Rat::from_int(2 * (j + 2))))
    };
    // residual of the B-recurrence at index j
    let rest_b = |av: &Vec<T>, bv: &Vec<T>, j: i64| -> T {
        let lin = inp
            .x0
            .scale_rat(&Rat::from_int(-(4 * j + 7)))
            .add(&k2_minus_b);
        let quad = x0sq
            .scale_rat(&Rat::from_int(-4))
            .sub(&inp.g2.scale_rat(&Rat::frac(2 * j + 3, 2)))
            .add(&ky0.scale_rat(&Rat::from_int(2)))
            .scale_rat(&Rat::from_int(j + 2));
        lin.mul(&getb(bv, j + 1))
            .add(&quad.mul(&getb(bv, j + 2)))
            .sub(&inp.g3.mul(&getb(bv, j + 3)).scale_rat(&Rat::from_int((j + 2) * (j + 3))))
            .add(&inp.kappa.mul(&geta(av, j + 1)).scale_rat(&Rat::from_int(2 * j + 3)))
            .sub(&two_kx0_minus_y0.mul(&geta(av, j + 2)).scale_rat(&Rat::from_int(j + 2)))
    };

    let pivot_a = |j: i64| (2 * j - l + 1) * (2 * j + l + 2);
    let pivot_b = |j: i64| (2 * j - l + 2) * (2 * j + l + 3);

    if odd {
        av[(top_a + 1) as usize] = one;
    } else {
        bv[(top_b + 1) as usize] = one;
    }

    let start = top_a.max(top_b);
    for j in (-1..=start).rev() {
        // B first: the A-recurrence at level j consumes b_j.
        if !(!odd && j == top_b) {
            let r = rest_b(&av, &bv, j);
            if j <= top_b.max(-1) {
                bv[(j + 1) as usize] = r.scale_rat(&Rat::frac(-1, pivot_b(j)));
            }
        }
        if !(odd && j == top_a) {
            let r = rest_a(&av, &bv, j);
            if j <= top_a {
                av[(j + 1) as usize] = r.scale_rat(&Rat::frac(-1, pivot_a(j)));
            }
        }
    }

    HkSolution {
        residual_a: av[0].clone(),
        residual_b: bv[0].clone(),
        a: av[1..].to_vec(),
        b: bv[1..].to_vec(),
    }
}

/// Exact Hermite-Krichever data at a rational point `B` of the spectral
/// curve: evaluates the covering map, runs the recurrence over `Q(nu)` with
/// `nu^2 = L_ell(B)`, and demands exactly vanishing residuals.
pub fn hk_exact(
    cm: &CoveringMap,
    b: &Rat,
    g2: &Rat,
    g3: &Rat,
    branch_positive: bool,
) -> Result<(HkSolution<QExt>, Rat)> {
    let ell = cm.ell;
    let nu2 = full_spectral(ell)?
        .poly
        .eval_full(&[(Var::B, b.clone()), (Var::G2, g2.clone()), (Var::G3, g3.clone())]);
    let x0 = cm.x0.eval_rat(b, g2, g3)?;
    let y0_ratio = cm.y0_over_nu.eval_rat(b, g2, g3)?;
    let k_ratio = cm.kappa_over_nu.eval_rat(b, g2, g3)?;
    let sgn = if branch_positive { Rat::one() } else { -Rat::one() };
    let inputs = HkInputs {
        b: QExt::rational(b.clone(), &nu2),
        g2: QExt::rational(g2.clone(), &nu2),
        g3: QExt::rational(g3.clone(), &nu2),
        x0: QExt::rational(x0, &nu2),
        y0: QExt::nu_times(&y0_ratio * &sgn, &nu2),
        kappa: QExt::nu_times(&k_ratio * &sgn, &nu2),
    };
    let sol = hk_run(ell, &inputs);
    if !sol.residual_a.is_zero() {
        return Err(Error::NonvanishingResidual { which: 'a', magnitude: f64::NAN });
    }
    if !sol.residual_b.is_zero() {
        return Err(Error::NonvanishingResidual { which: 'b', magnitude: f64::NAN });
    }
    Ok((sol, nu2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::theorem_l;

    #[test]
    fn ell1_degenerates_to_phi() {
        // A = 1, B = 0, kappa = 0 at any regular B.
        let cm = theorem_l(1).unwrap();
        let (sol, _) = hk_exact(&cm, &Rat::frac(7, 3), &Rat::one(), &Rat::frac(1, 5), true).unwrap();
        assert_eq!(sol.a.len(), 1);
        assert!(sol.a[0].re.is_one() && sol.a[0].im.is_zero());
        assert!(sol.b.is_empty());
    }

    #[test]
    fn ell2_generic_point_residuals_vanish() {
        // g2 = 1, g3 = 0 (the lemniscatic curve), B = 0 is a band edge of
        // the full spectral polynomial: nu = 0 there, x0 = 0.
        let cm = theorem_l(2).unwrap();
        let (sol, nu2) = hk_exact(&cm, &Rat::zero(), &Rat::one(), &Rat::zero(), true).unwrap();
        assert!(nu2.is_zero());
        assert_eq!(sol.a.len(), 1);
        assert_eq!(sol.b.len(), 1);
        // generic point too
        let (_, nu2) = hk_exact(&cm, &Rat::from_int(4), &Rat::one(), &Rat::zero(), true).unwrap();
        assert!(!nu2.is_zero());
        // and on the negative branch
        hk_exact(&cm, &Rat::from_int(4), &Rat::one(), &Rat::zero(), false).unwrap();
    }

    #[test]
    fn ell2_type_ii_band_edge_maps_to_branch_point() {
        // B = -3 e_gamma with e = 1/2 (m = 1/2 data): x0 = e, y0 = 0,
        // kappa = 0.
        let cm = theorem_l(2).unwrap();
        let b = Rat::frac(-3, 2);
        let x0 = cm.x0.eval_rat(&b, &Rat::one(), &Rat::zero()).unwrap();
        assert_eq!(x0, Rat::frac(1, 2));
        let (sol, nu2) = hk_exact(&cm, &b, &Rat::one(), &Rat::zero(), true).unwrap();
        assert!(nu2.is_zero()); // band edge: nu = 0, hence y0 = kappa = 0
        assert!(sol.residual_a.is_zero() && sol.residual_b.is_zero());
    }

    #[test]
    fn ell3_and_ell4_residuals_vanish_generically() {
        for (ell, b) in [(3u32, Rat::frac(9, 2)), (4, Rat::frac(22, 5))] {
            let cm = theorem_l(ell).unwrap();
            let (sol, _) = hk_exact(&cm, &b, &Rat::frac(2, 3), &Rat::frac(-1, 7), true).unwrap();
            assert!(sol.residual_a.is_zero());
            assert!(sol.residual_b.is_zero());
            let (da, db) = hk_degrees(ell);
            assert_eq!(sol.a.len() as i64, da + 1);
            assert_eq!(sol.b.len() as i64, db.max(-1) + 1);
        }
    }

    #[test]
    fn pole_of_covering_reported() {
        // ell = 2 denominator B^2 - 3 g2 vanishes at B = sqrt(3 g2):
        // pick g2 = 3, B = 3.
        let cm = theorem_l(2).unwrap();
        let err = hk_exact(&cm, &Rat::from_int(3), &Rat::from_int(3), &Rat::zero(), true);
        assert!(matches!(err, Err(Error::CoveringPole)));
    }
}
