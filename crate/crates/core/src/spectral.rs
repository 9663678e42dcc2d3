//! Lame polynomials and spectral polynomials from coefficient recurrences.
//!
//! Substituting the four solution shapes `C(x)`, `D(x) y`,
//! `E(x) sqrt(x - e)`, `F(x) y / sqrt(x - e)` into the elliptic-curve form
//! of the Lame equation and equating powers of `x` gives one four-term
//! recurrence per species. Running a recurrence top-down with the leading
//! coefficient set to 1 produces the polynomial factor; the coefficient at
//! `x^-1` is the spectral condition, and its normalized form is the
//! spectral polynomial of the family.
//!
//! The same module owns the Hermite-Halphen polynomials (the monic-in-`x`
//! polynomial solutions of the symmetric-square equation) and the identity
//! expressing `nu^2` through them, which must reproduce the full spectral
//! polynomial with every trace of the curve point cancelling.

use crate::elim::{branch_product, strip_leading_coeff};
use crate::error::{Error, Result};
use crate::mpoly::{MPoly, Var};
use crate::rational::Rat;
use serde::{Deserialize, Serialize};

/// The four Lame polynomial species in the elliptic-curve classification.
///
/// * `C`: Type I, single-valued `C(x)` (species 1, even `ell`)
/// * `D`: Type I, `D(x) y` (species 4, odd `ell >= 3`)
/// * `E`: Type II, `E(x) sqrt(x - e)` (species 2, odd `ell`)
/// * `F`: Type II, `F(x) y / sqrt(x - e)` (species 3, even `ell`)
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    C,
    D,
    E,
    F,
}

impl Family {
    pub fn species(self) -> u8 {
        match self {
            Family::C => 1,
            Family::E => 2,
            Family::F => 3,
            Family::D => 4,
        }
    }

    fn letter(self) -> char {
        match self {
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
        }
    }

    /// Degree of the polynomial factor, from the parity proposition.
    pub fn top_degree(self, ell: u32) -> Result<i64> {
        let l = ell as i64;
        match self {
            Family::C if ell >= 2 && ell % 2 == 0 => Ok(l / 2),
            Family::D if ell >= 3 && ell % 2 == 1 => Ok((l - 3) / 2),
            Family::E if ell % 2 == 1 => Ok((l - 1) / 2),
            Family::F if ell >= 2 && ell % 2 == 0 => Ok((l - 2) / 2),
            Family::C | Family::F if ell % 2 == 1 => {
                Err(Error::ParityMismatch { family: self.letter(), ell })
            }
            Family::D | Family::E if ell % 2 == 0 => {
                Err(Error::ParityMismatch { family: self.letter(), ell })
            }
            _ => Err(Error::EllTooSmall {
                needed: match self {
                    Family::D => 3,
                    _ => 2,
                },
                got: ell,
            }),
        }
    }

    pub fn is_type_ii(self) -> bool {
        matches!(self, Family::E | Family::F)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpectralKind {
    #[serde(rename = "type-I")]
    TypeI,
    #[serde(rename = "type-II")]
    TypeII,
    #[serde(rename = "twisted-I")]
    TwistedI,
    #[serde(rename = "twisted-II")]
    TwistedII,
    #[serde(rename = "theta-twisted")]
    ThetaTwisted,
    #[serde(rename = "full")]
    Full,
    #[serde(rename = "full-twisted")]
    FullTwisted,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralPolynomial {
    pub kind: SpectralKind,
    pub ell: u32,
    pub poly: MPoly,
}

/// Coefficients of one recurrence run, from `x^top` down to `x^-1`.
#[derive(Debug, Clone)]
pub struct RecurrenceCoefficients {
    pub family: Family,
    pub ell: u32,
    /// `coeffs[i]` is the coefficient of `x^(top - i)`; the last entry is
    /// the `x^-1` coefficient, i.e. the spectral condition.
    pub coeffs: Vec<MPoly>,
}

impl RecurrenceCoefficients {
    pub fn top_degree(&self) -> i64 {
        self.coeffs.len() as i64 - 2
    }

    /// Coefficient of `x^j` (zero above the top degree).
    pub fn coeff(&self, j: i64) -> MPoly {
        let top = self.top_degree();
        if j > top || j < -1 {
            return MPoly::zero();
        }
        self.coeffs[(top - j) as usize].clone()
    }

    pub fn spectral_condition(&self) -> &MPoly {
        self.coeffs.last().expect("recurrence holds at least x^-1")
    }

    /// The polynomial factor (without the `x^-1` entry), in `x`.
    pub fn polynomial(&self) -> MPoly {
        let top = self.top_degree();
        let mut acc = MPoly::zero();
        for j in 0..=top {
            acc = acc.add(&self.coeff(j).mul(&MPoly::var_pow(Var::X, j as u16)));
        }
        acc
    }
}

fn half_int(twice: i64) -> Rat {
    Rat::frac(twice, 2)
}

/// Runs one of the four recurrences with the given spectral parameter and
/// branch value (symbols by default, numbers when substituted), from the
/// species' top degree down to `x^-1`.
pub fn run_recurrence(
    family: Family,
    ell: u32,
    b_value: &MPoly,
    e_value: &MPoly,
) -> Result<RecurrenceCoefficients> {
    let top = family.top_degree(ell)?;
    let l = ell as i64;
    let g2 = MPoly::var(Var::G2);
    let g3 = MPoly::var(Var::G3);
    let e2 = e_value.mul_red(e_value);

    // coeff(j) for j in top..=-1, stored top-first.
    let mut coeffs: Vec<MPoly> = Vec::with_capacity((top + 2) as usize);
    coeffs.push(MPoly::one());
    let get = |coeffs: &Vec<MPoly>, j: i64| -> MPoly {
        if j > top || j < top - (coeffs.len() as i64 - 1) {
            MPoly::zero()
        } else {
            coeffs[(top - j) as usize].clone()
        }
    };

    for j in (-1..top).rev() {
        let c1 = get(&coeffs, j + 1);
        let c2 = get(&coeffs, j + 2);
        let c3 = get(&coeffs, j + 3);
        // a(j) * coeff_j + sum of higher terms = 0
        let (a_j, rest) = match family {
            Family::C => {
                let a = (2 * j - l) * (2 * j + l + 1);
                let rest = b_value
                    .mul_red(&c1)
                    .neg()
                    .sub(&g2.scale(&(half_int(2 * j + 3) * Rat::from_int(j + 2))).mul_red(&c2))
                    .sub(&g3.scale(&Rat::from_int((j + 2) * (j + 3))).mul_red(&c3));
                (a, rest)
            }
            Family::D => {
                let a = (2 * j - l + 3) * (2 * j + l + 4);
                let rest = b_value
                    .mul_red(&c1)
                    .neg()
                    .sub(&g2.scale(&(half_int(2 * j + 5) * Rat::from_int(j + 2))).mul_red(&c2))
                    .sub(&g3.scale(&Rat::from_int((j + 2) * (j + 3))).mul_red(&c3));
                (a, rest)
            }
            Family::E => {
                let a = (2 * j - l + 1) * (2 * j + l + 2);
                let lin = e_value.scale(&Rat::from_int(4 * j + 5)).sub(b_value);
                let quad = e2
                    .scale(&Rat::from_int(4))
                    .sub(&g2.scale(&half_int(2 * j + 5)))
                    .scale(&Rat::from_int(j + 2));
                let rest = lin
                    .mul_red(&c1)
                    .add(&quad.mul_red(&c2))
                    .sub(&g3.scale(&Rat::from_int((j + 2) * (j + 3))).mul_red(&c3));
                (a, rest)
            }
            Family::F => {
                let a = (2 * j - l + 2) * (2 * j + l + 3);
                let lin = e_value.scale(&Rat::from_int(-(4 * j + 7))).sub(b_value);
                let quad = e2
                    .scale(&Rat::from_int(-4))
                    .sub(&g2.scale(&half_int(2 * j + 3)))
                    .scale(&Rat::from_int(j + 2));
                let rest = lin
                    .mul_red(&c1)
                    .add(&quad.mul_red(&c2))
                    .sub(&g3.scale(&Rat::from_int((j + 2) * (j + 3))).mul_red(&c3));
                (a, rest)
            }
        };
        debug_assert!(a_j != 0, "recurrence pivot vanished below the top degree");
        coeffs.push(rest.neg().scale(&Rat::frac(1, a_j)));
    }

    Ok(RecurrenceCoefficients { family, ell, coeffs })
}

/// Normalizes a spectral condition: strip rational content, make monic in B.
fn normalize_spectral(p: &MPoly) -> Result<MPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = p.primitive_part();
    strip_leading_coeff(&p, Var::B).ok_or(Error::NonpolynomialQuotient)
}

/// Type-I Lame spectral polynomial `L^I_ell(B; g2, g3)`.
pub fn spectral_poly_i(ell: u32) -> Result<SpectralPolynomial> {
    let poly = crate::cache::memo(crate::cache::FamilyKey::TypeI, ell, || {
        spectral_poly_i_uncached(ell)
    })?;
    Ok(SpectralPolynomial { kind: SpectralKind::TypeI, ell, poly })
}

fn spectral_poly_i_uncached(ell: u32) -> Result<MPoly> {
    let poly = if ell == 1 {
        MPoly::one()
    } else {
        let family = if ell % 2 == 0 { Family::C } else { Family::D };
        let rec = run_recurrence(family, ell, &MPoly::var(Var::B), &MPoly::var(Var::E))?;
        normalize_spectral(rec.spectral_condition())?
    };
    let expected = degree_type_i(ell);
    if poly.degree(Var::B) != expected {
        return Err(Error::DegreeMismatch {
            what: "type-I spectral polynomial",
            expected,
            got: poly.degree(Var::B),
        });
    }
    Ok(poly)
}

/// Type-II Lame spectral polynomial `L^II_ell(B; e, g2, g3)`.
pub fn spectral_poly_ii(ell: u32) -> Result<SpectralPolynomial> {
    let poly = crate::cache::memo(crate::cache::FamilyKey::TypeII, ell, || {
        spectral_poly_ii_uncached(ell)
    })?;
    Ok(SpectralPolynomial { kind: SpectralKind::TypeII, ell, poly })
}

fn spectral_poly_ii_uncached(ell: u32) -> Result<MPoly> {
    let family = if ell % 2 == 0 { Family::F } else { Family::E };
    let rec = run_recurrence(family, ell, &MPoly::var(Var::B), &MPoly::var(Var::E))?;
    let poly = normalize_spectral(rec.spectral_condition())?;
    let expected = degree_type_ii(ell);
    if poly.degree(Var::B) != expected {
        return Err(Error::DegreeMismatch {
            what: "type-II spectral polynomial",
            expected,
            got: poly.degree(Var::B),
        });
    }
    Ok(poly)
}

/// Full spectral polynomial: `L^I * prod_gamma L^II(e_gamma)`, free of `e`,
/// monic of degree `2 ell + 1`.
pub fn full_spectral(ell: u32) -> Result<SpectralPolynomial> {
    let poly = crate::cache::memo(crate::cache::FamilyKey::Full, ell, || {
        full_spectral_uncached(ell)
    })?;
    Ok(SpectralPolynomial { kind: SpectralKind::Full, ell, poly })
}

fn full_spectral_uncached(ell: u32) -> Result<MPoly> {
    let li = spectral_poly_i(ell)?;
    let lii = spectral_poly_ii(ell)?;
    let prod = branch_product(&lii.poly);
    let poly = li.poly.mul(&prod);
    debug_assert!(!poly.uses_var(Var::E));
    let expected = 2 * ell as usize + 1;
    if poly.degree(Var::B) != expected {
        return Err(Error::DegreeMismatch {
            what: "full spectral polynomial",
            expected,
            got: poly.degree(Var::B),
        });
    }
    Ok(poly)
}

pub fn degree_type_i(ell: u32) -> usize {
    if ell % 2 == 1 {
        ((ell - 1) / 2) as usize
    } else {
        (ell / 2 + 1) as usize
    }
}

pub fn degree_type_ii(ell: u32) -> usize {
    if ell % 2 == 1 {
        ((ell + 1) / 2) as usize
    } else {
        (ell / 2) as usize
    }
}

/// Lame polynomial factor coefficients for the requested type, with `B`
/// (and `e` for Type II) either symbolic or substituted. Returns the
/// coefficient run including the `x^-1` residual, which vanishes exactly
/// when `B` is a root of the corresponding spectral polynomial.
pub fn lame_polynomial(
    ell: u32,
    type_ii: bool,
    b_value: &MPoly,
    e_value: Option<&MPoly>,
) -> Result<RecurrenceCoefficients> {
    let family = match (type_ii, ell % 2) {
        (false, 0) => Family::C,
        (false, 1) => Family::D,
        (true, 1) => Family::E,
        (true, 0) => Family::F,
        _ => unreachable!(),
    };
    let e_default = MPoly::var(Var::E);
    let e_value = e_value.unwrap_or(&e_default);
    run_recurrence(family, ell, b_value, e_value)
}

/// Monic-in-`x` Hermite-Halphen polynomial of degree `ell`: the polynomial
/// solution of the symmetric-square equation, via its own downward
/// recurrence `2(2s+1)(s-ell)(s+ell+1) phi_s = 4B(s+1) phi_{s+1}
/// + g2 (s+2)(s+1)(s+3/2) phi_{s+2} + g3 (s+3)(s+2)(s+1) phi_{s+3}`.
pub fn hermite_halphen(ell: u32) -> MPoly {
    let l = ell as i64;
    let b = MPoly::var(Var::B);
    let g2 = MPoly::var(Var::G2);
    let g3 = MPoly::var(Var::G3);
    let n = ell as usize;
    let mut phi = vec![MPoly::zero(); n + 1];
    phi[n] = MPoly::one();
    for s in (0..n).rev() {
        let si = s as i64;
        let get = |k: usize| -> MPoly {
            if k <= n {
                phi[k].clone()
            } else {
                MPoly::zero()
            }
        };
        let mut rhs = b.mul(&get(s + 1)).scale(&Rat::from_int(4 * (si + 1)));
        rhs = rhs.add(
            &g2.mul(&get(s + 2))
                .scale(&(Rat::from_int((si + 2) * (si + 1)) * Rat::frac(2 * si + 3, 2))),
        );
        rhs = rhs.add(&g3.mul(&get(s + 3)).scale(&Rat::from_int((si + 3) * (si + 2) * (si + 1))));
        let denom = 2 * (2 * si + 1) * (si - l) * (si + l + 1);
        debug_assert!(denom != 0);
        phi[s] = rhs.scale(&Rat::frac(1, denom));
    }
    let mut out = MPoly::zero();
    for (s, c) in phi.iter().enumerate() {
        out = out.add(&c.mul(&MPoly::var_pow(Var::X, s as u16)));
    }
    out
}

/// Evaluates `nu^2 = -1/2 F (y d/dx)^2 F + [1/2 (y d/dx) F]^2 + (q + B) F^2`
/// with `F` the Hermite-Halphen polynomial and `y^2` reduced through the
/// curve equation. The `x`-dependence must cancel identically; the constant
/// part is returned and equals the full spectral polynomial.
pub fn nu_squared_check(ell: u32) -> Result<SpectralPolynomial> {
    // The identity holds for the solution normalized monic in B (scaling F
    // by c scales nu^2 by c^2).
    let f = hermite_halphen(ell)
        .monic_in(Var::B)
        .expect("Hermite-Halphen leading B-coefficient is rational");
    let x = MPoly::var(Var::X);
    let b = MPoly::var(Var::B);
    let g2 = MPoly::var(Var::G2);
    let g3 = MPoly::var(Var::G3);
    // curve data: fcurve = 4x^3 - g2 x - g3, its x-derivative
    let fcurve = x.pow(3).scale(&Rat::from_int(4)).sub(&g2.mul(&x)).sub(&g3);
    let fprime = x.pow(2).scale(&Rat::from_int(12)).sub(&g2);

    let df = f.derivative(Var::X);
    let ddf = df.derivative(Var::X);
    let q = x.scale(&Rat::from_int((ell * (ell + 1)) as i64));

    // nu^2 = -1/4 f' F F' - 1/2 f F F'' + 1/4 f F'^2 + (q + B) F^2
    let nu2 = fprime
        .mul(&f)
        .mul(&df)
        .scale(&Rat::frac(-1, 4))
        .add(&fcurve.mul(&f).mul(&ddf).scale(&Rat::frac(-1, 2)))
        .add(&fcurve.mul(&df.pow(2)).scale(&Rat::frac(1, 4)))
        .add(&q.add(&b).mul(&f.pow(2)));

    let coeffs = nu2.coeff_vec(Var::X);
    for c in coeffs.iter().skip(1) {
        if !c.is_zero() {
            return Err(Error::ResidualXDependence);
        }
    }
    Ok(SpectralPolynomial {
        kind: SpectralKind::Full,
        ell,
        poly: coeffs.into_iter().next().unwrap_or_else(MPoly::zero),
    })
}
