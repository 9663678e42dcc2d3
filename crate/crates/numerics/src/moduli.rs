//! Complex-modulus helpers. The exact layer handles rational `m`; the
//! Klein invariant itself is a rational function, so complex moduli are a
//! plain floating evaluation.

use num_complex::Complex64;

/// `J(m) = (4/27) (m^2 - m + 1)^3 / (m^2 (1 - m)^2)` for complex `m`.
pub fn klein_invariant(m: Complex64) -> Complex64 {
    let num = (m * m - m + 1.0).powu(3);
    let den = (m * (1.0 - m)).powu(2);
    4.0 / 27.0 * num / den
}
