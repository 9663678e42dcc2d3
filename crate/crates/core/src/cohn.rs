//! Cohn polynomials: the loci in elliptic moduli space where band edges
//! collide.
//!
//! A pair of Type-I (resp. Type-II) band edges coincides exactly when the
//! discriminant of `L^I` (resp. of the full Type-II product) vanishes; both
//! discriminants are isobaric in `(g2, g3)`, so the condition descends to a
//! polynomial in the Klein invariant `J`. Coefficients are normalized to
//! primitive integer form with positive leading coefficient.

use crate::covering::j_condition;
use crate::elim::{branch_product, discriminant};
use crate::error::Result;
use crate::mpoly::Var;
use crate::rational::Rat;
use crate::spectral::{degree_type_i, degree_type_ii, spectral_poly_i, spectral_poly_ii};
use crate::upoly::UPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CohnKind {
    TypeI,
    TypeII,
}

#[derive(Debug, Clone)]
pub struct CohnPolynomial {
    pub ell: u32,
    pub kind: CohnKind,
    /// Primitive integer polynomial in `J`, positive leading coefficient.
    /// The constant 1 encodes an empty coincidence locus (the table dashes).
    pub poly: UPoly,
}

pub fn cohn_polynomial(ell: u32, kind: CohnKind) -> Result<CohnPolynomial> {
    let spectral = match kind {
        CohnKind::TypeI => spectral_poly_i(ell)?.poly,
        CohnKind::TypeII => branch_product(&spectral_poly_ii(ell)?.poly),
    };
    if spectral.degree(Var::B) < 2 {
        return Ok(CohnPolynomial { ell, kind, poly: UPoly::constant(Rat::one()) });
    }
    let disc = discriminant(&spectral, Var::B)?;
    let poly = j_condition(&disc)?;
    Ok(CohnPolynomial { ell, kind, poly })
}

/// Certifies by a Sturm count that `p` has no real root in `[1, oo)`.
/// Roots there would put a band-edge collision at a real modulus.
pub fn no_roots_from_one(p: &UPoly) -> bool {
    if p.degree() == 0 {
        return true;
    }
    let chain = p.sturm_chain();
    // (1 - eps, oo) via open-interval counting at a left endpoint below 1,
    // plus an explicit check at 1 itself.
    if p.eval(&Rat::one()).is_zero() {
        return false;
    }
    p.count_roots_above(&chain, &Rat::one()) == 0
}

/// Conjectured Cohn degree for Type I: `floor((N^2 - N + 4)/6)` with
/// `N = deg L^I`, zero when there is no polynomial at all.
pub fn conjectured_degree_i(ell: u32) -> usize {
    let n = degree_type_i(ell);
    if n < 2 {
        return 0;
    }
    (n * n - n + 4) / 6
}

/// Conjectured Cohn degree for Type II: `N(N-1)/2` with `N = deg L^II`.
pub fn conjectured_degree_ii(ell: u32) -> usize {
    let n = degree_type_ii(ell);
    n * (n - 1) / 2
}

#[derive(Debug, Clone)]
pub struct CohnDegreeRow {
    pub ell: u32,
    pub kind: CohnKind,
    pub degree: usize,
    pub conjectured: usize,
    pub divisible_by_j: bool,
}

/// Degree-conjecture report over `1..=ell_max`: computed degree vs. the
/// conjectured closed form, and whether `J` divides the Type-I polynomial
/// (expected exactly when `ell = 2 mod 3`).
pub fn cohn_degree_report(ell_max: u32) -> Result<Vec<CohnDegreeRow>> {
    let mut rows = Vec::new();
    for ell in 1..=ell_max {
        for kind in [CohnKind::TypeI, CohnKind::TypeII] {
            let c = cohn_polynomial(ell, kind)?;
            let divisible_by_j = c.poly.degree() >= 1 && c.poly.coeffs[0].is_zero();
            let conjectured = match kind {
                CohnKind::TypeI => conjectured_degree_i(ell),
                CohnKind::TypeII => conjectured_degree_ii(ell),
            };
            rows.push(CohnDegreeRow {
                ell,
                kind,
                degree: c.poly.degree(),
                conjectured,
                divisible_by_j,
            });
        }
    }
    Ok(rows)
}

/// Pretty-prints an integer polynomial in `J` with factored integer
/// coefficients, e.g. `2^2 3^5 J + 5^2 7^2`.
pub fn factored_form(p: &UPoly) -> String {
    if p.degree() == 0 {
        return "---".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    for (k, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = factored_integer(&c.abs());
        let jpow = match k {
            0 => String::new(),
            1 => " J".to_string(),
            _ => format!(" J^{k}"),
        };
        let body = if mag == "1" && k > 0 {
            jpow.trim_start().to_string()
        } else {
            format!("{mag}{jpow}")
        };
        if parts.is_empty() {
            parts.push(if c.is_negative() { format!("-{body}") } else { body });
        } else {
            parts.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
        }
    }
    parts.join(" ")
}

fn factored_integer(r: &Rat) -> String {
    use num_bigint::BigInt;
    use num_traits::{One, Zero};
    debug_assert!(r.is_integer());
    let mut n = r.numer().clone();
    if n.is_zero() {
        return "0".into();
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2);
    // trial division is plenty for table-sized coefficients
    while &p * &p <= n {
        let mut k = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            k += 1;
        }
        if k > 0 {
            factors.push((p.clone(), k));
        }
        p += if p == BigInt::from(2) { BigInt::one() } else { BigInt::from(2) };
    }
    if n > BigInt::one() {
        factors.push((n, 1));
    }
    if factors.is_empty() {
        return "1".into();
    }
    factors
        .iter()
        .map(|(p, k)| if *k == 1 { format!("{p}") } else { format!("{p}^{k}") })
        .collect::<Vec<_>>()
        .join(" ")
}
