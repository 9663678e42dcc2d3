//! Rewriting symmetric polynomials in the branch values `e1, e2, e3` in
//! terms of the invariants `g2, g3`.
//!
//! The branch values are the roots of `4e^3 - g2 e - g3`, so
//! `e1 + e2 + e3 = 0`, `e1 e2 + e2 e3 + e3 e1 = -g2/4`, `e1 e2 e3 = g3/4`.
//! Any symmetric polynomial in them is a polynomial in `g2, g3`; the
//! rewriting follows the elementary-symmetric leading-term reduction.

use crate::error::{Error, Result};
use crate::mpoly::{MPoly, Mono, Var};
use crate::rational::Rat;

const EVARS: [Var; 3] = [Var::E1, Var::E2, Var::E3];

fn swap_vars(p: &MPoly, a: Var, b: Var) -> MPoly {
    let mut out = MPoly::zero();
    for (m, c) in p.terms() {
        let mut m2 = *m;
        m2.0.swap(a as usize, b as usize);
        out.insert_term(m2, c.clone());
    }
    out
}

/// Elementary symmetric polynomials in `e1, e2, e3`.
fn elementary(k: usize) -> MPoly {
    let e1 = MPoly::var(Var::E1);
    let e2 = MPoly::var(Var::E2);
    let e3 = MPoly::var(Var::E3);
    match k {
        1 => e1.add(&e2).add(&e3),
        2 => e1.mul(&e2).add(&e2.mul(&e3)).add(&e3.mul(&e1)),
        3 => e1.mul(&e2).mul(&e3),
        _ => unreachable!(),
    }
}

/// Values of the elementary symmetric polynomials on the branch cubic.
fn elementary_value(k: usize) -> MPoly {
    match k {
        1 => MPoly::zero(),
        2 => MPoly::var(Var::G2).scale(&Rat::frac(-1, 4)),
        3 => MPoly::var(Var::G3).scale(&Rat::frac(1, 4)),
        _ => unreachable!(),
    }
}

/// Leading term of `p` in pure lex order on `(e1, e2, e3)`; in the polynomial
/// ring over the remaining variables.
fn lex_leading_e(p: &MPoly) -> Option<(u16, u16, u16)> {
    p.terms()
        .map(|(m, _)| (m.exp(Var::E1), m.exp(Var::E2), m.exp(Var::E3)))
        .filter(|&(a, b, c)| a > 0 || b > 0 || c > 0)
        .max()
}

/// Rewrites a polynomial symmetric in `e1, e2, e3` as a polynomial in
/// `g2, g3` (and whatever other variables it carries). Fails with
/// [`Error::NotSymmetric`] when the input is not invariant under
/// permutations of the three branch values.
pub fn symmetrize_over_e(p: &MPoly) -> Result<MPoly> {
    if swap_vars(p, Var::E1, Var::E2) != *p || swap_vars(p, Var::E2, Var::E3) != *p {
        return Err(Error::NotSymmetric);
    }
    let mut work = p.clone();
    let mut out = MPoly::zero();
    while let Some((a1, a2, a3)) = lex_leading_e(&work) {
        debug_assert!(a1 >= a2 && a2 >= a3, "symmetric leading exponents must descend");
        // Coefficient of the leading e-monomial, over the other variables.
        let target = {
            let mut m = Mono::unit();
            m.0[Var::E1 as usize] = a1;
            m.0[Var::E2 as usize] = a2;
            m.0[Var::E3 as usize] = a3;
            m
        };
        let mut coeff = MPoly::zero();
        for (m, c) in work.terms() {
            if m.exp(Var::E1) == a1 && m.exp(Var::E2) == a2 && m.exp(Var::E3) == a3 {
                let mut m2 = *m;
                m2.0[Var::E1 as usize] = 0;
                m2.0[Var::E2 as usize] = 0;
                m2.0[Var::E3 as usize] = 0;
                coeff.insert_term(m2, c.clone());
            }
        }
        let _ = target;
        // sigma1^(a1-a2) sigma2^(a2-a3) sigma3^a3 has the same leading term.
        let sym = elementary(1)
            .pow((a1 - a2) as u32)
            .mul(&elementary(2).pow((a2 - a3) as u32))
            .mul(&elementary(3).pow(a3 as u32));
        work = work.sub(&coeff.mul(&sym));
        let value = elementary_value(1)
            .pow((a1 - a2) as u32)
            .mul(&elementary_value(2).pow((a2 - a3) as u32))
            .mul(&elementary_value(3).pow(a3 as u32));
        out = out.add(&coeff.mul(&value));
    }
    Ok(out.add(&work))
}

/// Substitutes the single branch symbol `e` by `e1`, `e2`, `e3` in turn and
/// symmetrizes the product. This is how per-branch data such as
/// `L^II(B; e_gamma)` turn into branch-free invariant polynomials.
pub fn symmetrized_product(p: &MPoly) -> Result<MPoly> {
    let copies: Vec<MPoly> = EVARS
        .iter()
        .map(|&v| p.subst(&[(Var::E, MPoly::var(v))]))
        .collect();
    let prod = copies[0].mul(&copies[1]).mul(&copies[2]);
    symmetrize_over_e(&prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elim::branch_product;
    use crate::mpoly::{b, g2, g3};

    fn ev(k: usize) -> MPoly {
        elementary(k)
    }

    #[test]
    fn product_of_branch_values() {
        assert_eq!(symmetrize_over_e(&ev(3)).unwrap(), g3().scale(&Rat::frac(1, 4)));
    }

    #[test]
    fn trace_vanishes() {
        assert_eq!(symmetrize_over_e(&ev(1)).unwrap(), MPoly::zero());
    }

    #[test]
    fn squares_of_pairs() {
        // e1^2 e2^2 + e2^2 e3^2 + e3^2 e1^2 = g2^2 / 16
        let e1 = MPoly::var(Var::E1);
        let e2 = MPoly::var(Var::E2);
        let e3 = MPoly::var(Var::E3);
        let p = e1
            .mul(&e2)
            .pow(2)
            .add(&e2.mul(&e3).pow(2))
            .add(&e3.mul(&e1).pow(2));
        assert_eq!(
            symmetrize_over_e(&p).unwrap(),
            g2().pow(2).scale(&Rat::frac(1, 16))
        );
    }

    #[test]
    fn rejects_asymmetric_input() {
        let p = MPoly::var(Var::E1).sub(&MPoly::var(Var::E2));
        assert!(matches!(symmetrize_over_e(&p), Err(Error::NotSymmetric)));
    }

    #[test]
    fn idempotent_on_e_free_input() {
        let p = b().pow(2).mul(&g3()).sub(&g2());
        assert_eq!(symmetrize_over_e(&p).unwrap(), p);
    }

    #[test]
    fn agrees_with_branch_norm() {
        // prod_gamma (B - e_gamma) both ways.
        let via_norm = branch_product(&b().sub(&crate::mpoly::e_sym()));
        let via_sym = symmetrized_product(&b().sub(&crate::mpoly::e_sym())).unwrap();
        assert_eq!(via_norm, via_sym);
    }

    #[test]
    fn matches_explicit_rational_roots() {
        // Roots 1, 2, -3 of a rational cubic: sigma1 = 0, sigma2 = -7,
        // sigma3 = -6, so g2 = 28, g3 = -24. Evaluate a symmetric poly both
        // ways on a deterministic sweep of such root triples.
        let samples: [(i64, i64); 20] = [
            (1, 2), (1, 3), (2, 3), (-1, 3), (2, -5), (4, 1), (3, 3), (-2, -3),
            (5, 2), (1, -4), (7, 2), (-3, 5), (2, 9), (6, -1), (-5, -7), (8, 3),
            (9, -2), (4, 7), (-6, 1), (10, 3),
        ];
        let e1 = MPoly::var(Var::E1);
        let e2 = MPoly::var(Var::E2);
        let e3 = MPoly::var(Var::E3);
        // p = sum e_i^4 + B * sum e_i e_j
        let p = e1
            .pow(4)
            .add(&e2.pow(4))
            .add(&e3.pow(4))
            .add(&b().mul(&ev(2)));
        let sym = symmetrize_over_e(&p).unwrap();
        for (r1, r2) in samples {
            let r3 = -r1 - r2;
            if r1 == r2 || r2 == r3 || r1 == r3 {
                continue;
            }
            let (r1, r2, r3) = (Rat::from_int(r1), Rat::from_int(r2), Rat::from_int(r3));
            let s2 = &r1 * &r2 + &r2 * &r3 + &r3 * &r1;
            let s3 = &r1 * &r2 * &r3;
            let g2v = Rat::from_int(-4) * &s2;
            let g3v = Rat::from_int(4) * &s3;
            let bv = Rat::frac(5, 7);
            let direct = p.eval_full(&[
                (Var::E1, r1),
                (Var::E2, r2),
                (Var::E3, r3),
                (Var::B, bv.clone()),
            ]);
            let reduced = sym.eval_full(&[(Var::G2, g2v), (Var::G3, g3v), (Var::B, bv)]);
            assert_eq!(direct, reduced);
        }
    }
}
