//! Complete elliptic integrals and Jacobi elliptic functions.
//!
//! `K(m)` comes from the arithmetic-geometric mean. Real-argument
//! `sn, cn, dn` use the descending Landen transformation; complex arguments
//! split through the addition formulas with the complementary modulus, so
//! only real evaluations are ever needed underneath.

use crate::error::{NumError, NumResult};
use num_complex::Complex64;

/// Complete elliptic integral of the first kind, parameter convention
/// `K(m) = int_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt`.
pub fn complete_k(m: f64) -> NumResult<f64> {
    if !(0.0..1.0).contains(&m) {
        return Err(NumError::Domain {
            what: "complete elliptic integral parameter",
            value: m,
        });
    }
    if m == 0.0 {
        return Ok(std::f64::consts::FRAC_PI_2);
    }
    let mut a = 1.0f64;
    let mut b = (1.0 - m).sqrt();
    for _ in 0..40 {
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        if (a - b).abs() < 1e-17 * a {
            break;
        }
        a = an;
        b = bn;
    }
    Ok(std::f64::consts::FRAC_PI_2 / a)
}

/// Real Jacobi functions `(sn, cn, dn)(u | m)` by descending Landen.
pub fn sncndn_real(u: f64, m: f64) -> (f64, f64, f64) {
    let mc = 1.0 - m;
    const CA: f64 = 1.0e-14;
    if m.abs() < 1.5e-16 {
        return (u.sin(), u.cos(), 1.0);
    }
    if mc.abs() < 1.5e-16 {
        let c = 1.0 / u.cosh();
        return (u.tanh(), c, c);
    }
    let mut emc = mc;
    let mut a = 1.0f64;
    let mut em = [0.0f64; 16];
    let mut en = [0.0f64; 16];
    let mut c;
    let mut l = 0usize;
    let mut uu = u;
    for i in 0..16 {
        l = i;
        em[i] = a;
        emc = emc.sqrt();
        en[i] = emc;
        c = 0.5 * (a + emc);
        if (a - emc).abs() <= CA * a {
            break;
        }
        emc *= a;
        a = c;
    }
    // at the deepest level the functions are circular
    uu *= 0.5 * (a + en[l]);
    let mut sn = uu.sin();
    let mut cn = uu.cos();
    let mut dn = 1.0;
    if sn != 0.0 {
        a = cn / sn;
        c = a * (0.5 * (em[l] + en[l]));
        for i in (0..=l).rev() {
            let b = em[i];
            a *= c;
            c *= dn;
            dn = (en[i] + a) / (b + a);
            a = c / b;
        }
        a = 1.0 / (c * c + 1.0).sqrt();
        sn = if sn < 0.0 { -a } else { a };
        cn = c * sn;
    }
    (sn, cn, dn)
}

/// Complex Jacobi triple at parameter `m in (0, 1)`.
#[derive(Debug, Clone, Copy)]
pub struct JacobiTriple {
    pub sn: Complex64,
    pub cn: Complex64,
    pub dn: Complex64,
}

/// `sn, cn, dn` at a complex argument through the real/imaginary split
/// `u + iv`: real evaluations at modulus `m` and `1 - m` combine through
/// the addition formulas. Errors within ~1e-8 of a lattice pole.
pub fn jacobi_sn_cn_dn(u: Complex64, m: f64) -> NumResult<JacobiTriple> {
    if !(0.0..1.0).contains(&m) {
        return Err(NumError::Domain { what: "modulus parameter", value: m });
    }
    let (s, c, d) = sncndn_real(u.re, m);
    let (s1, c1, d1) = sncndn_real(u.im, 1.0 - m);
    let denom = c1 * c1 + m * (s * s1) * (s * s1);
    if denom.abs() < 1e-12 {
        return Err(NumError::NearPole { distance: denom.abs() });
    }
    let i = Complex64::i();
    let sn = (Complex64::from(s * d1) + i * (c * d * s1 * c1)) / denom;
    let cn = (Complex64::from(c * c1) - i * (s * d * s1 * d1)) / denom;
    let dn = (Complex64::from(d * c1 * d1) - i * (m * s * c * s1)) / denom;
    Ok(JacobiTriple { sn, cn, dn })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_special_values() {
        assert!((complete_k(0.0).unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        // lemniscatic value
        assert!((complete_k(0.5).unwrap() - 1.854_074_677_301_372).abs() < 1e-13);
        assert!(complete_k(1.0).is_err());
        assert!(complete_k(-0.1).is_err());
    }

    #[test]
    fn agm_matches_landen_series() {
        // One descending Landen step, then the Maclaurin series: an
        // independent route to K(m), to 1e-13 across the working range.
        for i in 1..=9 {
            let m = i as f64 / 10.0;
            let k1 = {
                let kp = (1.0 - m).sqrt();
                let m1 = ((1.0 - kp) / (1.0 + kp)).powi(2);
                // K(m) = 2/(1 + kp) * K(m1)
                let mut sum = 0.0;
                let mut term = 1.0f64; // ((2n)! / (2^2n (n!)^2))^2 m1^n
                for n in 0..50 {
                    sum += term;
                    let nf = n as f64;
                    let ratio = (2.0 * nf + 1.0) / (2.0 * nf + 2.0);
                    term *= ratio * ratio * m1;
                }
                std::f64::consts::FRAC_PI_2 * sum * 2.0 / (1.0 + kp)
            };
            assert!(
                (complete_k(m).unwrap() - k1).abs() < 1e-13,
                "m = {m}"
            );
        }
    }

    #[test]
    fn quarter_period_values() {
        let m = 0.5;
        let k = complete_k(m).unwrap();
        let t = jacobi_sn_cn_dn(Complex64::from(0.0), m).unwrap();
        assert!((t.sn.norm()) < 1e-14);
        assert!((t.cn - 1.0).norm() < 1e-14);
        assert!((t.dn - 1.0).norm() < 1e-14);
        let t = jacobi_sn_cn_dn(Complex64::from(k), m).unwrap();
        assert!((t.sn - 1.0).norm() < 1e-12);
        assert!(t.cn.norm() < 1e-12);
        assert!((t.dn - (1.0 - m).sqrt()).norm() < 1e-12);
    }

    #[test]
    fn identities_at_random_complex_points() {
        // sn^2 + cn^2 = 1 and m sn^2 + dn^2 = 1 at 100 spread points.
        let m = 0.37;
        let kp = complete_k(1.0 - m).unwrap();
        let mut failures = 0;
        for i in 0..10 {
            for j in 0..10 {
                let u = Complex64::new(
                    -3.0 + 0.67 * i as f64,
                    -0.9 * kp + 0.19 * kp * j as f64,
                );
                let t = match jacobi_sn_cn_dn(u, m) {
                    Ok(t) => t,
                    Err(_) => continue,
                };
                let id1 = t.sn * t.sn + t.cn * t.cn - 1.0;
                let id2 = m * t.sn * t.sn + t.dn * t.dn - 1.0;
                if id1.norm() > 1e-12 || id2.norm() > 1e-12 {
                    failures += 1;
                }
            }
        }
        assert_eq!(failures, 0);
    }

    #[test]
    fn half_period_translation() {
        // sn(u + 2K) = -sn(u) at spread complex points.
        let m = 0.5;
        let k = complete_k(m).unwrap();
        for i in 0..20 {
            let u = Complex64::new(-2.0 + 0.21 * i as f64, 0.13 * (i as f64 - 10.0));
            let a = jacobi_sn_cn_dn(u, m).unwrap();
            let b = jacobi_sn_cn_dn(u + 2.0 * k, m).unwrap();
            assert!((a.sn + b.sn).norm() < 1e-11, "i = {i}");
        }
    }
}
