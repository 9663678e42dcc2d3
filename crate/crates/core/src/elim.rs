//! Polynomial elimination: pseudo-division, subresultant-PRS resultants,
//! discriminants, gcds and squarefree decomposition with respect to one
//! variable.
//!
//! The coefficient ring is the multivariate ring of [`MPoly`], possibly
//! including the branch value `e` reduced modulo `e^3 = (g2 e + g3)/4`.
//! That quotient is an integral domain (the cubic is irreducible over
//! `Q(g2, g3)`), so polynomial remainder sequences behave as over any
//! domain; exact coefficient divisions that involve `e` go through the
//! multiplication-matrix adjugate of the divisor.

use crate::error::{Error, Result};
use crate::mpoly::{MPoly, Var};
use crate::rational::Rat;

/// Coefficient arithmetic for polynomials in some main variable: products
/// are reduced so `deg_e <= 2` stays invariant.
fn cmul(a: &MPoly, b: &MPoly) -> MPoly {
    a.mul_red(b)
}

/// Exact division in the coefficient ring. Plain multivariate division when
/// the divisor avoids `e`; otherwise multiply by the adjugate of the
/// divisor's multiplication matrix and divide by its norm.
pub fn ring_div_exact(a: &MPoly, b: &MPoly) -> Option<MPoly> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(MPoly::zero());
    }
    if !b.uses_var(Var::E) {
        let q = a.div_exact(b)?;
        return Some(q);
    }
    let (adj, norm) = e_adjugate(b);
    if norm.is_zero() {
        return None;
    }
    let prod = cmul(a, &adj);
    // Divide every coefficient of the e-free norm out of the product.
    prod.div_exact(&norm)
}

/// For `b = b0 + b1 e + b2 e^2`, returns `(badj, norm)` with
/// `b * badj = norm (mod e^3 - (g2 e + g3)/4)` and `norm` free of `e`.
/// `norm` is also the product of `b` over the three branch values.
pub fn e_adjugate(b: &MPoly) -> (MPoly, MPoly) {
    assert!(b.degree(Var::E) <= 2, "reduce e before taking the adjugate");
    let b0 = b.coeff_of(Var::E, 0);
    let b1 = b.coeff_of(Var::E, 1);
    let b2 = b.coeff_of(Var::E, 2);
    let q = Rat::frac(1, 4);
    let g2q = MPoly::var(Var::G2).scale(&q);
    let g3q = MPoly::var(Var::G3).scale(&q);

    // Multiplication matrix of b on the basis {1, e, e^2}.
    let m00 = b0.clone();
    let m01 = g3q.mul(&b2);
    let m02 = g3q.mul(&b1);
    let m10 = b1.clone();
    let m11 = b0.add(&g2q.mul(&b2));
    let m12 = g2q.mul(&b1).add(&g3q.mul(&b2));
    let m20 = b2.clone();
    let m21 = b1.clone();
    let m22 = m11.clone();

    let det = m00
        .mul(&m11.mul(&m22).sub(&m12.mul(&m21)))
        .sub(&m01.mul(&m10.mul(&m22).sub(&m12.mul(&m20))))
        .add(&m02.mul(&m10.mul(&m21).sub(&m11.mul(&m20))));

    // First column of the adjugate gives the coordinates of norm * b^{-1}.
    let a0 = m11.mul(&m22).sub(&m12.mul(&m21));
    let a1 = m12.mul(&m20).sub(&m10.mul(&m22));
    let a2 = m10.mul(&m21).sub(&m11.mul(&m20));

    let e = MPoly::var(Var::E);
    let adj = a0.add(&e.mul(&a1)).add(&e.pow(2).mul(&a2));
    (adj, det)
}

/// Product of `p` over the three branch values `e_1, e_2, e_3`; equivalently
/// the norm of `p` in the cubic extension. The result is free of `e`.
pub fn branch_product(p: &MPoly) -> MPoly {
    let red = p.reduce_e();
    let (_, norm) = e_adjugate(&red);
    norm
}

/// Pseudo-division of `a` by `b` in the main variable `v`:
/// `lc(b)^(da - db + 1) * a = quo * b + rem` with `deg_v rem < deg_v b`.
pub fn pseudo_div(a: &MPoly, b: &MPoly, v: Var) -> (MPoly, MPoly) {
    let db = b.degree(v);
    assert!(!b.is_zero(), "pseudo-division by zero");
    let da = a.degree(v);
    if a.is_zero() || da < db {
        // Normalization: lc(b)^(da-db+1) is taken as lc(b)^0 = 1 here.
        return (MPoly::zero(), a.clone());
    }
    let lb = b.leading_coeff(v);
    let bvec = b.coeff_vec(v);
    let mut r = a.coeff_vec(v);
    let mut q = vec![MPoly::zero(); da - db + 1];
    let mut steps = 0u32;
    loop {
        let dr = r.iter().rposition(|c| !c.is_zero());
        let dr = match dr {
            Some(d) if d >= db => d,
            _ => break,
        };
        let shift = dr - db;
        let lead = r[dr].clone();
        for c in r.iter_mut() {
            *c = cmul(c, &lb);
        }
        for c in q.iter_mut() {
            *c = cmul(c, &lb);
        }
        q[shift] = q[shift].add(&lead);
        for (i, bc) in bvec.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&cmul(&lead, bc));
        }
        r[dr] = MPoly::zero();
        steps += 1;
    }
    // Pad with the missing lc powers so the defining identity holds.
    let want = (da - db + 1) as u32;
    if steps < want {
        let extra = pow_ring(&lb, want - steps);
        for c in r.iter_mut() {
            *c = cmul(c, &extra);
        }
        for c in q.iter_mut() {
            *c = cmul(c, &extra);
        }
    }
    (MPoly::from_coeff_vec(v, &q), MPoly::from_coeff_vec(v, &r))
}

fn pow_ring(p: &MPoly, e: u32) -> MPoly {
    let mut acc = MPoly::one();
    let mut base = p.clone();
    let mut k = e;
    while k > 0 {
        if k & 1 == 1 {
            acc = cmul(&acc, &base);
        }
        k >>= 1;
        if k > 0 {
            base = cmul(&base, &base);
        }
    }
    acc
}

/// Resultant of `a` and `b` with respect to `v`, in the Sylvester-determinant
/// sign convention, by the subresultant polynomial remainder sequence.
pub fn resultant(a: &MPoly, b: &MPoly, v: Var) -> Result<MPoly> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let (da, db) = (a.degree(v), b.degree(v));
    let mut sign_neg = false;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = !sign_neg;
        }
    }
    let db = b.degree(v);
    if db == 0 {
        // res(a, const) = const^deg(a)
        let p = pow_ring(&b, a.degree(v) as u32);
        return Ok(if sign_neg { p.neg() } else { p });
    }
    // Strip rational contents: res(c*a, d*b) = c^deg(b) d^deg(a) res(a, b).
    let ca = a.content();
    let cb = b.content();
    let mut scale = Rat::one();
    if !ca.is_one() && !ca.is_zero() {
        a = a.scale(&ca.recip());
        scale *= &ca.pow(b.degree(v) as u32);
    }
    if !cb.is_one() && !cb.is_zero() {
        b = b.scale(&cb.recip());
        scale *= &cb.pow(a.degree(v) as u32);
    }

    let mut g = MPoly::one();
    let mut h = MPoly::one();
    loop {
        let (da, db) = (a.degree(v), b.degree(v));
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let (_, r) = pseudo_div(&a, &b, v);
        a = b;
        let denom = cmul(&g, &pow_ring(&h, delta));
        b = match ring_div_exact(&r, &denom) {
            Some(q) => q,
            None => panic!("subresultant division failed; coefficient ring is not a domain?"),
        };
        g = a.leading_coeff(v);
        h = if delta == 0 {
            h
        } else {
            // h <- g^delta / h^(delta - 1)
            ring_div_exact(&pow_ring(&g, delta), &pow_ring(&h, delta - 1))
                .expect("subresultant h-update division failed")
        };
        if b.is_zero() {
            return Ok(MPoly::zero());
        }
        if b.degree(v) == 0 {
            let dega = a.degree(v) as u32;
            // res = sign * scale * lc(b)^deg(a) / h^(deg(a) - 1)
            let num = pow_ring(&b, dega);
            let res = if dega == 0 {
                num
            } else {
                ring_div_exact(&num, &pow_ring(&h, dega - 1))
                    .expect("subresultant final division failed")
            };
            let res = res.scale(&scale);
            return Ok(if sign_neg { res.neg() } else { res });
        }
    }
}

/// Discriminant with respect to `v`, in the standard convention
/// `(-1)^(n(n-1)/2) res(a, da/dv) / lc(a)`.
pub fn discriminant(a: &MPoly, v: Var) -> Result<MPoly> {
    let n = a.degree(v);
    if n < 2 {
        return Err(Error::DegreeTooLow { var: v.name(), degree: n });
    }
    let da = a.derivative(v);
    let res = resultant(a, &da, v)?;
    let lc = a.leading_coeff(v);
    let q = ring_div_exact(&res, &lc).ok_or(Error::NonpolynomialQuotient)?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { q.neg() } else { q })
}

/// Normalize a factor determined only up to a coefficient-ring scalar:
/// divide out the leading coefficient in `v` when it divides every
/// coefficient (true for the monic-up-to-content spectral families),
/// otherwise settle for rational-primitive form.
fn normalize_factor(p: &MPoly, v: Var) -> MPoly {
    match strip_leading_coeff(p, v) {
        Some(q) => q.primitive_part(),
        None => p.primitive_part(),
    }
}

/// Fast one-sided coprimality certificate: specialize every variable except
/// `v` at a rational point and take a univariate gcd. A constant gcd with a
/// surviving leading coefficient proves the true gcd is 1, because the true
/// gcd's leading coefficient divides `a`'s and the specialized true gcd
/// divides the specialized one.
fn certified_coprime(a: &MPoly, b: &MPoly, v: Var) -> bool {
    use crate::upoly::UPoly;
    // `e` is algebraic over Q(g2, g3); quotient-ring divisibility does not
    // specialize along free assignments of it, so no certificate there.
    if a.uses_var(Var::E) || b.uses_var(Var::E) {
        return false;
    }
    let mut others: Vec<Var> = Vec::new();
    for w in Var::ALL {
        if w != v && (a.uses_var(w) || b.uses_var(w)) {
            others.push(w);
        }
    }
    // Two deterministic sample points; either suffices.
    for salt in [1i64, 2] {
        let assign: Vec<(Var, Rat)> = others
            .iter()
            .enumerate()
            .map(|(i, &w)| (w, Rat::frac(2 * salt + 3 * i as i64 + 1, 2 + i as i64)))
            .collect();
        let lcn = a.leading_coeff(v).eval_rat(&assign);
        if lcn.as_constant().map(|c| c.is_zero()).unwrap_or(true) {
            continue;
        }
        let to_upoly = |p: &MPoly| -> Option<UPoly> {
            let sp = p.eval_rat(&assign);
            let cs: Option<Vec<Rat>> =
                sp.coeff_vec(v).into_iter().map(|c| c.as_constant()).collect();
            cs.map(UPoly::from_coeffs)
        };
        if let (Some(ua), Some(ub)) = (to_upoly(a), to_upoly(b)) {
            if !ua.is_zero() && !ub.is_zero() && ua.gcd(&ub).degree() == 0 {
                return true;
            }
        }
    }
    false
}

/// gcd of `a` and `b` as polynomials in `v` over the fraction field of the
/// coefficient ring, computed by a subresultant remainder sequence. The
/// result is determined up to a coefficient-ring factor; leading-coefficient
/// content is stripped when possible.
pub fn gcd_in_var(a: &MPoly, b: &MPoly, v: Var) -> MPoly {
    if a.degree(v) > 0 && b.degree(v) > 0 && certified_coprime(a, b, v) {
        return MPoly::one();
    }
    gcd_in_var_prs(a, b, v)
}

fn gcd_in_var_prs(a: &MPoly, b: &MPoly, v: Var) -> MPoly {
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    let (mut a, mut b) = if a.degree(v) >= b.degree(v) {
        (a.primitive_part(), b.primitive_part())
    } else {
        (b.primitive_part(), a.primitive_part())
    };
    if b.degree(v) == 0 {
        return MPoly::one();
    }
    let mut g = MPoly::one();
    let mut h = MPoly::one();
    loop {
        let delta = (a.degree(v) - b.degree(v)) as u32;
        let (_, r) = pseudo_div(&a, &b, v);
        if r.is_zero() {
            return normalize_factor(&b, v);
        }
        if r.degree(v) == 0 {
            return MPoly::one();
        }
        a = b;
        let denom = cmul(&g, &pow_ring(&h, delta));
        b = ring_div_exact(&r, &denom)
            .expect("subresultant gcd division failed")
            .primitive_part();
        g = a.leading_coeff(v);
        h = if delta == 0 {
            h
        } else {
            ring_div_exact(&pow_ring(&g, delta), &pow_ring(&h, delta - 1))
                .expect("subresultant gcd h-update failed")
        };
    }
}

/// Division of `a` by `b` in `v` over the fraction field, up to a scalar of
/// the coefficient ring: returns `q` with `q ~ a/b` when the division is
/// exact, `None` otherwise. The caller normalizes.
pub fn div_in_var(a: &MPoly, b: &MPoly, v: Var) -> Option<MPoly> {
    if a.is_zero() {
        return Some(MPoly::zero());
    }
    let (q, r) = pseudo_div(a, b, v);
    if r.is_zero() {
        Some(q.primitive_part())
    } else {
        None
    }
}

/// Squarefree decomposition of `p` with respect to `v` over the fraction
/// field of the coefficient ring: pairs `(factor, multiplicity)` with the
/// factors squarefree, pairwise coprime in `v`, and normalized to rational
/// primitive form. Scalar content is dropped.
pub fn squarefree_decomposition(p: &MPoly, v: Var) -> Vec<(MPoly, usize)> {
    let mut out = Vec::new();
    if p.degree(v) == 0 {
        return out;
    }
    let dp = p.derivative(v);
    let mut c = gcd_in_var(p, &dp, v);
    if c.degree(v) == 0 {
        out.push((normalize_factor(p, v), 1));
        return out;
    }
    let mut w = div_in_var(p, &c, v).expect("gcd must divide");
    let mut i = 1usize;
    while c.degree(v) > 0 {
        let y = gcd_in_var(&c, &w, v);
        if w.degree(v) > y.degree(v) {
            let z = div_in_var(&w, &y, v).expect("gcd must divide");
            out.push((normalize_factor(&z, v), i));
        }
        c = div_in_var(&c, &y, v).expect("gcd chain must divide");
        w = y;
        i += 1;
    }
    if w.degree(v) > 0 {
        out.push((normalize_factor(&w, v), i));
    }
    out
}

/// Strip a polynomial leading coefficient: when every coefficient of `p`
/// (as a polynomial in `v`) is divisible by `lc_v(p)`, divide it out. This
/// turns "monic up to a coefficient-ring unit" into honest monic form.
pub fn strip_leading_coeff(p: &MPoly, v: Var) -> Option<MPoly> {
    let lc = p.leading_coeff(v);
    if lc.as_constant().is_some() {
        return p.monic_in(v);
    }
    let q = ring_div_exact(p, &lc)?;
    q.monic_in(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::{b, e_sym, g2, g3};

    #[test]
    fn resultant_of_x_and_x2_minus_c() {
        // res_kappa(kappa, kappa^2 - B) = -B in Sylvester convention?
        // Sylvester matrix of (x, x^2 - B): rows for f=x (deg 1), g (deg 2):
        // f shifted twice, g once: det [[1,0,0],[0,1,0],[1,0,-B]] = -B.
        let k = MPoly::var(Var::Kappa);
        let p = k.pow(2).sub(&b());
        let r = resultant(&k, &p, Var::Kappa).unwrap();
        // any fixed sign convention is fine downstream (outputs are
        // re-normalized monic); pin the Sylvester-determinant one
        assert_eq!(r, b().neg());
    }

    #[test]
    fn resultant_substitution_case() {
        // res_x0(x0 - B, y0^2 - 4 x0^3 + g2 x0 + g3) = y0^2 - 4B^3 + g2 B + g3
        let x0 = MPoly::var(Var::X0);
        let y0 = MPoly::var(Var::Y0);
        let f = x0.sub(&b());
        let g = y0
            .pow(2)
            .sub(&x0.pow(3).scale(&Rat::from_int(4)))
            .add(&g2().mul(&x0))
            .add(&g3());
        let r = resultant(&f, &g, Var::X0).unwrap();
        let expect = y0
            .pow(2)
            .sub(&b().pow(3).scale(&Rat::from_int(4)))
            .add(&g2().mul(&b()))
            .add(&g3());
        assert_eq!(r, expect);
    }

    #[test]
    fn resultant_matches_sylvester_on_spec_instance() {
        // res_B(B^2 - 3 g2, 2B): Sylvester det [[1,0,-3g2],[2,0,0],[0,2,0]]
        // = -12 g2.
        let f = b().pow(2).sub(&g2().scale(&Rat::from_int(3)));
        let g = b().scale(&Rat::from_int(2));
        let r = resultant(&f, &g, Var::B).unwrap();
        assert_eq!(r, g2().scale(&Rat::from_int(-12)));
    }

    #[test]
    fn discriminant_of_quadratic() {
        // disc_B(B^2 - 3 g2) = 12 g2 (standard convention disc(x^2-c) = 4c).
        let f = b().pow(2).sub(&g2().scale(&Rat::from_int(3)));
        let d = discriminant(&f, Var::B).unwrap();
        assert_eq!(d, g2().scale(&Rat::from_int(12)));
    }

    #[test]
    fn discriminant_of_depressed_cubic() {
        // disc(B^3 + pB + q) = -4p^3 - 27 q^2 with p = -52 g2, q = 560 g3.
        let p = g2().scale(&Rat::from_int(-52));
        let q = g3().scale(&Rat::from_int(560));
        let f = b().pow(3).add(&p.mul(&b())).add(&q);
        let d = discriminant(&f, Var::B).unwrap();
        let expect = p.pow(3).scale(&Rat::from_int(-4)).sub(&q.pow(2).scale(&Rat::from_int(27)));
        assert_eq!(d, expect);
        assert_eq!(d.isobaric_weight(), Some(6));
    }

    #[test]
    fn degree_too_low_error() {
        assert!(matches!(
            discriminant(&b(), Var::B),
            Err(Error::DegreeTooLow { .. })
        ));
    }

    #[test]
    fn zero_input_error() {
        assert!(matches!(
            resultant(&MPoly::zero(), &b(), Var::B),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn shared_root_kills_resultant() {
        // (B - g2)(B + g3) and (B - g2)(B - 7) share the root B = g2.
        let f = b().sub(&g2()).mul(&b().add(&g3()));
        let g = b().sub(&g2()).mul(&b().sub(&MPoly::from_int(7)));
        assert!(resultant(&f, &g, Var::B).unwrap().is_zero());
    }

    #[test]
    fn branch_product_of_e() {
        // prod e_gamma = g3/4, prod (B - e_gamma) = B^3 - g2 B/4 - g3/4.
        assert_eq!(branch_product(&e_sym()), g3().scale(&Rat::frac(1, 4)));
        let p = b().sub(&e_sym());
        let expect = b()
            .pow(3)
            .sub(&g2().mul(&b()).scale(&Rat::frac(1, 4)))
            .sub(&g3().scale(&Rat::frac(1, 4)));
        assert_eq!(branch_product(&p), expect);
    }

    #[test]
    fn quotient_ring_division() {
        // ((B + e^2) * (e - 5 g3)) / (e - 5 g3) recovers B + e^2.
        let a = b().add(&e_sym().pow(2));
        let d = e_sym().sub(&g3().scale(&Rat::from_int(5)));
        let prod = a.mul_red(&d);
        let q = ring_div_exact(&prod, &d).unwrap();
        assert_eq!(q, a);
    }

    #[test]
    fn squarefree_decomposition_basic() {
        // (B - g2)^2 (B + g3)^3 B
        let f1 = b().sub(&g2());
        let f2 = b().add(&g3());
        let p = f1.pow(2).mul(&f2.pow(3)).mul(&b());
        let parts = squarefree_decomposition(&p, Var::B);
        let find = |mult: usize| {
            parts
                .iter()
                .filter(|(_, m)| *m == mult)
                .map(|(f, _)| f.clone())
                .next()
                .unwrap()
        };
        assert_eq!(find(1), b());
        assert_eq!(find(2), f1.primitive_part());
        assert_eq!(find(3), f2.primitive_part());
    }

    #[test]
    fn gcd_over_fraction_field() {
        let f1 = b().pow(2).sub(&g2().scale(&Rat::from_int(3)));
        let p = f1.mul(&b().add(&g3()));
        let q = f1.mul(&b().sub(&MPoly::from_int(2)));
        let g = gcd_in_var(&p, &q, Var::B);
        assert_eq!(g, f1);
    }
}
