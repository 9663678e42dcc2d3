//! Twisted and theta-twisted Lame spectral polynomials.
//!
//! A twisted Lame polynomial carries an extra factor `exp(kappa int dx/y)`,
//! `kappa != 0`; a theta-twisted one is a combination
//! `A(x) Phi + 2 B(x) Phi^(1)` of the fundamental function and its
//! derivative, based at a point `(x0, y0)` off the branch points. Each
//! family satisfies a coupled pair of coefficient recurrences. Running them
//! top-down leaves two `x^-1` residuals; the spectral polynomial is the
//! eliminant of the pair, after the structurally guaranteed spurious factor
//! (`kappa`, resp. `y0`) is divided out of the parity-appropriate residual.
//!
//! Elimination order for the theta-twisted system: `y0` first (cheap, the
//! residuals are linear in `y0` after curve reduction), then `x0`.

use crate::elim::{resultant, squarefree_decomposition, strip_leading_coeff};
use crate::error::{Error, Result};
use crate::mpoly::{MPoly, Var};
use crate::rational::Rat;
use crate::spectral::{SpectralKind, SpectralPolynomial};
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistedKind {
    I,
    II,
}

/// Values to run a system at: the symbols themselves, or exact rationals
/// for fast specialized runs (the branch value must then be a root of
/// `4e^3 - g2 e - g3`).
#[derive(Debug, Clone)]
pub struct ModuliSubst {
    pub g2: MPoly,
    pub g3: MPoly,
    pub e: MPoly,
}

impl ModuliSubst {
    pub fn symbolic() -> Self {
        ModuliSubst {
            g2: MPoly::var(Var::G2),
            g3: MPoly::var(Var::G3),
            e: MPoly::var(Var::E),
        }
    }

    pub fn rational(g2: &Rat, g3: &Rat, e: &Rat) -> Self {
        debug_assert_eq!(
            Rat::from_int(4) * e.pow(3) - g2 * e - g3.clone(),
            Rat::zero(),
            "branch value must solve the moduli cubic"
        );
        ModuliSubst {
            g2: MPoly::constant(g2.clone()),
            g3: MPoly::constant(g3.clone()),
            e: MPoly::constant(e.clone()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct TwistedSystem {
    pub ell: u32,
    pub kind: SpectralKind,
    /// Residual of the first family (`c_-1`, `e_-1`, or `a_-1`), with the
    /// spurious `kappa` (resp. `y0`) factor already divided out when `ell`'s
    /// parity puts it here.
    pub eliminand_a: MPoly,
    /// Residual of the second family (`d_-1`, `f_-1`, or `b_-1`), treated
    /// the same way.
    pub eliminand_b: MPoly,
    /// Polynomial factor coefficients of the first family, degree-descending.
    pub poly_a: Vec<MPoly>,
    /// Polynomial factor coefficients of the second family.
    pub poly_b: Vec<MPoly>,
}

/// deg `Lt^I_ell` from the covering-degree proposition.
pub fn degree_twisted_i(ell: u32) -> usize {
    let l = ell as usize;
    if l % 2 == 1 {
        (l * l - 1) / 4
    } else {
        l * l / 4 - 1
    }
}

/// deg `Lt^II_ell`.
pub fn degree_twisted_ii(ell: u32) -> usize {
    let l = ell as usize;
    if l % 2 == 1 {
        (l * l - 1) / 4
    } else {
        l * l / 4
    }
}

/// deg `Ltheta_ell` (zero for the trivial conventions below `ell = 4`).
pub fn degree_theta_twisted(ell: u32) -> usize {
    if ell <= 3 {
        return 0;
    }
    let l = ell as usize;
    if l % 2 == 1 {
        (l + 1) * (l - 3) / 4
    } else {
        l * (l - 2) / 4
    }
}

struct CoeffTable {
    map: HashMap<i64, MPoly>,
    top: i64,
}

impl CoeffTable {
    fn new(top: i64) -> Self {
        CoeffTable { map: HashMap::new(), top }
    }

    fn get(&self, j: i64) -> MPoly {
        if j > self.top {
            return MPoly::zero();
        }
        self.map.get(&j).cloned().unwrap_or_else(MPoly::zero)
    }

    fn set(&mut self, j: i64, v: MPoly) {
        self.map.insert(j, v);
    }

    fn dense_descending(&self) -> Vec<MPoly> {
        (0..=self.top.max(0)).rev().map(|j| self.get(j)).collect()
    }
}

fn solve(pivot: i64, rest: MPoly) -> MPoly {
    debug_assert!(pivot != 0, "recurrence pivot vanished off the normalization point");
    rest.scale(&Rat::frac(-1, pivot))
}

/// Exact division by a single variable; panics if any term misses it, since
/// divisibility is structural for the parity in question.
fn divide_out_var(p: &MPoly, v: Var) -> MPoly {
    let mut out = MPoly::zero();
    for (m, c) in p.terms() {
        let k = m.exp(v);
        assert!(k >= 1, "residual not divisible by {}", v.name());
        let mut m2 = *m;
        m2.0[v as usize] = k - 1;
        out.insert_term(m2, c.clone());
    }
    out
}

/// Coupled recurrences for twisted Lame polynomials of Type I (`C + D y`)
/// or Type II (`E sqrt(x-e) + F y/sqrt(x-e)`), run with `B`, `kappa` and
/// (for Type II) `e` symbolic.
pub fn twisted_recurrence(ell: u32, kind: TwistedKind) -> Result<TwistedSystem> {
    twisted_recurrence_at(ell, kind, &ModuliSubst::symbolic())
}

/// Same recurrences with substituted moduli.
pub fn twisted_recurrence_at(
    ell: u32,
    kind: TwistedKind,
    subs: &ModuliSubst,
) -> Result<TwistedSystem> {
    match kind {
        TwistedKind::I if ell < 3 => Err(Error::EllTooSmall { needed: 3, got: ell }),
        TwistedKind::II if ell < 2 => Err(Error::EllTooSmall { needed: 2, got: ell }),
        TwistedKind::I => twisted_recurrence_i(ell, subs),
        TwistedKind::II => twisted_recurrence_ii(ell, subs),
    }
}

fn twisted_recurrence_i(ell: u32, subs: &ModuliSubst) -> Result<TwistedSystem> {
    let l = ell as i64;
    let odd = ell % 2 == 1;
    let (top_c, top_d) = if odd { ((l - 1) / 2, (l - 3) / 2) } else { (l / 2, (l - 4) / 2) };
    let b = MPoly::var(Var::B);
    let g2 = subs.g2.clone();
    let g3 = subs.g3.clone();
    let kap = MPoly::var(Var::Kappa);
    let k2_minus_b = kap.pow(2).sub(&b);

    let mut c = CoeffTable::new(top_c);
    let mut d = CoeffTable::new(top_d);
    if odd {
        d.set(top_d, MPoly::one());
    } else {
        c.set(top_c, MPoly::one());
    }

    // Residual of the D-recurrence at index i, without the pivot term.
    let rec_d_rest = |c: &CoeffTable, d: &CoeffTable, i: i64| -> MPoly {
        k2_minus_b
            .mul(&d.get(i + 1))
            .sub(&g2.mul(&d.get(i + 2)).scale(&(Rat::from_int(i + 2) * Rat::frac(2 * i + 5, 2))))
            .sub(&g3.mul(&d.get(i + 3)).scale(&Rat::from_int((i + 2) * (i + 3))))
            .add(&kap.mul(&c.get(i + 2)).scale(&Rat::from_int(2 * (i + 2))))
    };
    // Residual of the C-recurrence at index j, without the pivot term.
    let rec_c_rest = |c: &CoeffTable, d: &CoeffTable, j: i64| -> MPoly {
        k2_minus_b
            .mul(&c.get(j + 1))
            .sub(&g2.mul(&c.get(j + 2)).scale(&(Rat::from_int(j + 2) * Rat::frac(2 * j + 3, 2))))
            .sub(&g3.mul(&c.get(j + 3)).scale(&Rat::from_int((j + 2) * (j + 3))))
            .add(&kap.mul(&d.get(j - 1)).scale(&Rat::from_int(2 * (4 * j + 2))))
            .sub(&kap.mul(&d.get(j + 1)).mul(&g2).scale(&Rat::frac(2 * (2 * j + 3), 2)))
            .sub(&kap.mul(&d.get(j + 2)).mul(&g3).scale(&Rat::from_int(2 * (j + 2))))
    };

    let pivot_d = |i: i64| (2 * i - l + 3) * (2 * i + l + 4);
    let pivot_c = |j: i64| (2 * j - l) * (2 * j + l + 1);

    let start = top_c.max(top_d + 1);
    for j in (0..=start).rev() {
        // d_{j-1} from the D-recurrence at i = j - 1.
        let i = j - 1;
        if odd && i == top_d {
            // normalization slot; the pivot vanishes there
            debug_assert_eq!(pivot_d(i), 0);
        } else {
            let rest = rec_d_rest(&c, &d, i);
            if i > top_d {
                debug_assert!(rest.is_zero(), "coefficient above the top degree must vanish");
            } else {
                d.set(i, solve(pivot_d(i), rest));
            }
        }
        // c_j from the C-recurrence.
        if !odd && j == top_c {
            debug_assert_eq!(pivot_c(j), 0);
            debug_assert!(rec_c_rest(&c, &d, j).is_zero());
        } else {
            let rest = rec_c_rest(&c, &d, j);
            if j > top_c {
                debug_assert!(rest.is_zero());
            } else {
                c.set(j, solve(pivot_c(j), rest));
            }
        }
    }
    // Tail: c_-1 needs d_-2.
    d.set(-2, solve(pivot_d(-2), rec_d_rest(&c, &d, -2)));
    c.set(-1, solve(pivot_c(-1), rec_c_rest(&c, &d, -1)));

    let (c_res, d_res) = (c.get(-1), d.get(-1));
    let (elim_a, elim_b) = if odd {
        (divide_out_var(&c_res, Var::Kappa), d_res)
    } else {
        (c_res, divide_out_var(&d_res, Var::Kappa))
    };
    Ok(TwistedSystem {
        ell,
        kind: SpectralKind::TwistedI,
        eliminand_a: elim_a,
        eliminand_b: elim_b,
        poly_a: c.dense_descending(),
        poly_b: d.dense_descending(),
    })
}

fn twisted_recurrence_ii(ell: u32, subs: &ModuliSubst) -> Result<TwistedSystem> {
    let l = ell as i64;
    let odd = ell % 2 == 1;
    let (top_e, top_f) = if odd { ((l - 1) / 2, (l - 3) / 2) } else { (l / 2 - 1, l / 2 - 1) };
    let b = MPoly::var(Var::B);
    let g2 = subs.g2.clone();
    let g3 = subs.g3.clone();
    let ee = subs.e.clone();
    let ee2 = ee.mul_red(&ee);
    let kap = MPoly::var(Var::Kappa);
    let k2_minus_b = kap.pow(2).sub(&b);

    let mut e = CoeffTable::new(top_e);
    let mut f = CoeffTable::new(top_f);
    if odd {
        e.set(top_e, MPoly::one());
    } else {
        f.set(top_f, MPoly::one());
    }

    let rec_f_rest = |e: &CoeffTable, f: &CoeffTable, j: i64| -> MPoly {
        let lin = ee.scale(&Rat::from_int(-(4 * j + 7))).add(&k2_minus_b);
        let quad = ee2
            .scale(&Rat::from_int(-4))
            .sub(&g2.scale(&Rat::frac(2 * j + 3, 2)))
            .scale(&Rat::from_int(j + 2));
        lin.mul_red(&f.get(j + 1))
            .add(&quad.mul_red(&f.get(j + 2)))
            .sub(&g3.mul_red(&f.get(j + 3)).scale(&Rat::from_int((j + 2) * (j + 3))))
            .add(&kap.mul_red(&e.get(j + 1)).scale(&Rat::frac(2 * (2 * j + 3), 2)))
            .sub(&kap.mul_red(&ee.mul_red(&e.get(j + 2))).scale(&Rat::from_int(2 * (j + 2))))
    };
    let rec_e_rest = |e: &CoeffTable, f: &CoeffTable, j: i64| -> MPoly {
        let lin = ee.scale(&Rat::from_int(4 * j + 5)).add(&k2_minus_b);
        let quad = ee2
            .scale(&Rat::from_int(4))
            .sub(&g2.scale(&Rat::frac(2 * j + 5, 2)))
            .scale(&Rat::from_int(j + 2));
        let twist = ee2.sub(&g2.scale(&Rat::frac(1, 4)));
        lin.mul_red(&e.get(j + 1))
            .add(&quad.mul_red(&e.get(j + 2)))
            .sub(&g3.mul_red(&e.get(j + 3)).scale(&Rat::from_int((j + 2) * (j + 3))))
            .add(&kap.mul_red(&f.get(j)).scale(&Rat::from_int(2 * (4 * j + 4))))
            .add(&kap.mul_red(&ee.mul_red(&f.get(j + 1))).scale(&Rat::from_int(2 * (4 * j + 6))))
            .add(&kap.mul_red(&twist.mul_red(&f.get(j + 2))).scale(&Rat::from_int(2 * (4 * j + 8))))
    };

    let pivot_f = |j: i64| (2 * j - l + 2) * (2 * j + l + 3);
    let pivot_e = |j: i64| (2 * j - l + 1) * (2 * j + l + 2);

    let start = top_e.max(top_f);
    for j in (-1..=start).rev() {
        // f_j first: the E-recurrence at level j consumes it.
        if !odd && j == top_f {
            debug_assert_eq!(pivot_f(j), 0);
            debug_assert!(rec_f_rest(&e, &f, j).is_zero());
        } else {
            let rest = rec_f_rest(&e, &f, j);
            if j > top_f {
                debug_assert!(rest.is_zero());
            } else {
                f.set(j, solve(pivot_f(j), rest));
            }
        }
        if odd && j == top_e {
            debug_assert_eq!(pivot_e(j), 0);
            debug_assert!(rec_e_rest(&e, &f, j).is_zero());
        } else {
            let rest = rec_e_rest(&e, &f, j);
            if j > top_e {
                debug_assert!(rest.is_zero());
            } else {
                e.set(j, solve(pivot_e(j), rest));
            }
        }
    }

    let (e_res, f_res) = (e.get(-1), f.get(-1));
    let (elim_a, elim_b) = if odd {
        (e_res, divide_out_var(&f_res, Var::Kappa))
    } else {
        (divide_out_var(&e_res, Var::Kappa), f_res)
    };
    Ok(TwistedSystem {
        ell,
        kind: SpectralKind::TwistedII,
        eliminand_a: elim_a,
        eliminand_b: elim_b,
        poly_a: e.dense_descending(),
        poly_b: f.dense_descending(),
    })
}

/// Coupled recurrences for the theta-twisted family, with `B`, `x0`, `y0`
/// symbolic; coefficients are kept reduced through the curve identity
/// `y0^2 = 4 x0^3 - g2 x0 - g3`.
pub fn theta_twisted_system(ell: u32) -> Result<TwistedSystem> {
    theta_twisted_system_at(ell, &ModuliSubst::symbolic())
}

pub fn theta_twisted_system_at(ell: u32, subs: &ModuliSubst) -> Result<TwistedSystem> {
    if ell < 4 {
        return Err(Error::EllTooSmall { needed: 4, got: ell });
    }
    let l = ell as i64;
    let odd = ell % 2 == 1;
    let (top_a, top_b) = if odd { ((l - 1) / 2, (l - 5) / 2) } else { (l / 2 - 2, l / 2 - 1) };
    let b = MPoly::var(Var::B);
    let g2 = subs.g2.clone();
    let g3 = subs.g3.clone();
    let x0 = MPoly::var(Var::X0);
    let y0 = MPoly::var(Var::Y0);
    let x0sq = x0.pow(2);

    let mut ca = CoeffTable::new(top_a);
    let mut cb = CoeffTable::new(top_b);
    if odd {
        ca.set(top_a, MPoly::one());
    } else {
        cb.set(top_b, MPoly::one());
    }

    let curve = curve_rhs(subs);
    let mul = |a: &MPoly, bb: &MPoly| reduce_y0_with(&a.mul(bb), &curve);

    let rec_a_rest = |ca: &CoeffTable, cb: &CoeffTable, j: i64| -> MPoly {
        let lin = x0.scale(&Rat::from_int(4 * j + 5)).sub(&b);
        let quad = x0sq
            .scale(&Rat::from_int(4))
            .sub(&g2.scale(&Rat::frac(2 * j + 5, 2)))
            .scale(&Rat::from_int(j + 2));
        mul(&lin, &ca.get(j + 1))
            .add(&mul(&quad, &ca.get(j + 2)))
            .sub(&mul(&g3, &ca.get(j + 3)).scale(&Rat::from_int((j + 2) * (j + 3))))
            .sub(&mul(&y0, &cb.get(j + 1)).scale(&Rat::from_int(2 * (4 * j + 6))))
            .sub(&mul(&mul(&x0, &y0), &cb.get(j + 2)).scale(&Rat::from_int(4 * (j + 2))))
    };
    let rec_b_rest = |ca: &CoeffTable, cb: &CoeffTable, j: i64| -> MPoly {
        let lin = x0.scale(&Rat::from_int(-(4 * j + 7))).sub(&b);
        let quad = x0sq
            .scale(&Rat::from_int(-4))
            .sub(&g2.scale(&Rat::frac(2 * j + 3, 2)))
            .scale(&Rat::from_int(j + 2));
        mul(&lin, &cb.get(j + 1))
            .add(&mul(&quad, &cb.get(j + 2)))
            .sub(&mul(&g3, &cb.get(j + 3)).scale(&Rat::from_int((j + 2) * (j + 3))))
            .add(&mul(&y0, &ca.get(j + 2)).scale(&Rat::from_int(j + 2)))
    };

    let pivot_a = |j: i64| (2 * j - l + 1) * (2 * j + l + 2);
    let pivot_b = |j: i64| (2 * j - l + 2) * (2 * j + l + 3);

    let start = top_a.max(top_b);
    for j in (-1..=start).rev() {
        if odd && j == top_a {
            debug_assert_eq!(pivot_a(j), 0);
            debug_assert!(rec_a_rest(&ca, &cb, j).is_zero());
        } else {
            let rest = rec_a_rest(&ca, &cb, j);
            if j > top_a {
                debug_assert!(rest.is_zero());
            } else {
                ca.set(j, solve(pivot_a(j), rest));
            }
        }
        if !odd && j == top_b {
            debug_assert_eq!(pivot_b(j), 0);
            debug_assert!(rec_b_rest(&ca, &cb, j).is_zero());
        } else {
            let rest = rec_b_rest(&ca, &cb, j);
            if j > top_b {
                debug_assert!(rest.is_zero());
            } else {
                cb.set(j, solve(pivot_b(j), rest));
            }
        }
    }

    let (a_res, b_res) = (ca.get(-1), cb.get(-1));
    let (elim_a, elim_b) = if odd {
        (a_res, divide_out_var(&b_res, Var::Y0))
    } else {
        (divide_out_var(&a_res, Var::Y0), b_res)
    };
    Ok(TwistedSystem {
        ell,
        kind: SpectralKind::ThetaTwisted,
        eliminand_a: elim_a,
        eliminand_b: elim_b,
        poly_a: ca.dense_descending(),
        poly_b: cb.dense_descending(),
    })
}

/// `4 x0^3 - g2 x0 - g3` with the given moduli values.
fn curve_rhs(subs: &ModuliSubst) -> MPoly {
    let x0 = MPoly::var(Var::X0);
    x0.pow(3)
        .scale(&Rat::from_int(4))
        .sub(&subs.g2.mul(&x0))
        .sub(&subs.g3)
}

/// Rewrite `y0^k`, `k >= 2`, through `y0^2 = curve` until `deg_y0 <= 1`.
fn reduce_y0_with(p: &MPoly, curve: &MPoly) -> MPoly {
    let mut p = p.clone();
    while p.degree(Var::Y0) > 1 {
        let mut low = MPoly::zero();
        let mut rest = MPoly::zero();
        for (m, c) in p.terms() {
            let k = m.exp(Var::Y0);
            if k <= 1 {
                low.insert_term(*m, c.clone());
            } else {
                let mut m2 = *m;
                m2.0[Var::Y0 as usize] = k - 2;
                rest.insert_term(m2, c.clone());
            }
        }
        p = low.add(&rest.mul(curve));
    }
    p
}

/// Halve every `kappa` exponent; valid because both residuals are even in
/// `kappa` once the spurious factor is removed.
fn fold_kappa_squared(p: &MPoly) -> MPoly {
    let mut out = MPoly::zero();
    for (m, c) in p.terms() {
        let k = m.exp(Var::Kappa);
        assert!(k % 2 == 0, "residual must be even in kappa");
        let mut m2 = *m;
        m2.0[Var::Kappa as usize] = k / 2;
        out.insert_term(m2, c.clone());
    }
    out
}

/// Normalizes an eliminant down to the proposition degree: fast path when
/// the degree already matches; otherwise squarefree factor selection, taking
/// the unique combination of squarefree factors whose degrees sum to the
/// target. Anything still unresolved is an error, never a guess.
pub fn fit_to_degree(r: &MPoly, target: usize, what: &'static str) -> Result<MPoly> {
    if r.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let r = r.primitive_part();
    let deg = r.degree(Var::B);
    if deg == target {
        if let Some(m) = strip_leading_coeff(&r, Var::B) {
            return Ok(m);
        }
    }
    if deg < target {
        return Err(Error::DegreeMismatch { what, expected: target, got: deg });
    }
    let parts = squarefree_decomposition(&r, Var::B);
    // Unique subset of squarefree factors (each taken once) of total degree
    // `target`; a single exact-degree factor is the common case.
    let degs: Vec<usize> = parts.iter().map(|(f, _)| f.degree(Var::B)).collect();
    let n = parts.len();
    let mut hits: Vec<u32> = Vec::new();
    for mask in 1u32..(1 << n) {
        let total: usize = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| degs[i])
            .sum();
        if total == target {
            hits.push(mask);
        }
    }
    match hits.len() {
        0 => Err(Error::DegreeMismatch { what, expected: target, got: deg }),
        1 => {
            let mut prod = MPoly::one();
            for i in 0..n {
                if hits[0] & (1 << i) != 0 {
                    prod = prod.mul_red(&parts[i].0);
                }
            }
            strip_leading_coeff(&prod, Var::B).ok_or(Error::NonpolynomialQuotient)
        }
        _ => Err(Error::AmbiguousFactors { what, target }),
    }
}

/// Twisted Lame spectral polynomial `Lt^I` or `Lt^II`, monic in `B`.
pub fn twisted_spectral(ell: u32, kind: TwistedKind) -> Result<SpectralPolynomial> {
    let key = match kind {
        TwistedKind::I => crate::cache::FamilyKey::TwistedI,
        TwistedKind::II => crate::cache::FamilyKey::TwistedII,
    };
    let poly = crate::cache::memo(key, ell, || {
        Ok(twisted_spectral_at(ell, kind, &ModuliSubst::symbolic())?.poly)
    })?;
    let skind = match kind {
        TwistedKind::I => SpectralKind::TwistedI,
        TwistedKind::II => SpectralKind::TwistedII,
    };
    Ok(SpectralPolynomial { kind: skind, ell, poly })
}

/// The same eliminant at substituted moduli (fast for large `ell`).
pub fn twisted_spectral_at(
    ell: u32,
    kind: TwistedKind,
    subs: &ModuliSubst,
) -> Result<SpectralPolynomial> {
    let trivial = match kind {
        TwistedKind::I if ell <= 2 => Some(SpectralKind::TwistedI),
        TwistedKind::II if ell == 1 => Some(SpectralKind::TwistedII),
        _ => None,
    };
    if let Some(k) = trivial {
        return Ok(SpectralPolynomial { kind: k, ell, poly: MPoly::one() });
    }
    let sys = twisted_recurrence_at(ell, kind, subs)?;
    let a = fold_kappa_squared(&sys.eliminand_a);
    let b = fold_kappa_squared(&sys.eliminand_b);
    let res = resultant(&a, &b, Var::Kappa)?;
    let (target, what) = match kind {
        TwistedKind::I => (degree_twisted_i(ell), "twisted type-I spectral polynomial"),
        TwistedKind::II => (degree_twisted_ii(ell), "twisted type-II spectral polynomial"),
    };
    let poly = fit_to_degree(&res, target, what)?;
    Ok(SpectralPolynomial { kind: sys.kind, ell, poly })
}

/// Theta-twisted spectral polynomial `Ltheta_ell`, monic in `B`: eliminate
/// `y0` against the curve identity, then `x0` between the two results.
pub fn theta_twisted_spectral(ell: u32) -> Result<SpectralPolynomial> {
    let poly = crate::cache::memo(crate::cache::FamilyKey::ThetaTwisted, ell, || {
        Ok(theta_twisted_spectral_at(ell, &ModuliSubst::symbolic())?.poly)
    })?;
    Ok(SpectralPolynomial { kind: SpectralKind::ThetaTwisted, ell, poly })
}

pub fn theta_twisted_spectral_at(ell: u32, subs: &ModuliSubst) -> Result<SpectralPolynomial> {
    if ell <= 3 {
        return Ok(SpectralPolynomial {
            kind: SpectralKind::ThetaTwisted,
            ell,
            poly: MPoly::one(),
        });
    }
    let sys = theta_twisted_system_at(ell, subs)?;
    let curve = curve_rhs(subs);
    let pa = eliminate_y0(&sys.eliminand_a, &curve);
    let pb = eliminate_y0(&sys.eliminand_b, &curve);
    let res = resultant(&pa, &pb, Var::X0)?;
    let poly = fit_to_degree(
        &res,
        degree_theta_twisted(ell),
        "theta-twisted spectral polynomial",
    )?;
    Ok(SpectralPolynomial { kind: SpectralKind::ThetaTwisted, ell, poly })
}

/// Resultant against `y0^2 - curve` with respect to `y0`: for `p + q y0`
/// this is `p^2 - q^2 curve`.
fn eliminate_y0(pl: &MPoly, curve: &MPoly) -> MPoly {
    let r = reduce_y0_with(pl, curve);
    let p = r.coeff_of(Var::Y0, 0);
    let q = r.coeff_of(Var::Y0, 1);
    if q.is_zero() {
        return p;
    }
    p.pow(2).sub(&q.pow(2).mul(curve))
}

/// Full twisted spectral polynomial `Lt^I * prod_gamma Lt^II(e_gamma)`,
/// free of `e`, of degree `ell^2 - 1`.
pub fn full_twisted(ell: u32) -> Result<SpectralPolynomial> {
    let lt1 = twisted_spectral(ell, TwistedKind::I)?;
    let lt2 = twisted_spectral(ell, TwistedKind::II)?;
    let prod = crate::elim::branch_product(&lt2.poly);
    let poly = lt1.poly.mul(&prod);
    debug_assert!(!poly.uses_var(Var::E));
    let expected = (ell * ell) as usize - 1;
    if poly.degree(Var::B) != expected {
        return Err(Error::DegreeMismatch {
            what: "full twisted spectral polynomial",
            expected,
            got: poly.degree(Var::B),
        });
    }
    Ok(SpectralPolynomial { kind: SpectralKind::FullTwisted, ell, poly })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::{b, e_sym, g2, g3};
    use crate::spectral::{run_recurrence, Family};

    #[test]
    fn twisted_i_ell3() {
        // Lt^I_3 = B^2 - 75/4 g2.
        let lt = twisted_spectral(3, TwistedKind::I).unwrap();
        assert_eq!(lt.poly, b().pow(2).sub(&g2().scale(&Rat::frac(75, 4))));
    }

    #[test]
    fn twisted_i_ell4() {
        let lt = twisted_spectral(4, TwistedKind::I).unwrap();
        let expect = b()
            .pow(3)
            .sub(&g2().mul(&b()).scale(&Rat::frac(343, 4)))
            .sub(&g3().scale(&Rat::frac(1715, 2)));
        assert_eq!(lt.poly, expect);
    }

    #[test]
    fn twisted_ii_ell2() {
        let lt = twisted_spectral(2, TwistedKind::II).unwrap();
        assert_eq!(lt.poly, b().sub(&e_sym().scale(&Rat::from_int(6))));
    }

    #[test]
    fn twisted_ii_ell3() {
        let lt = twisted_spectral(3, TwistedKind::II).unwrap();
        let expect = b()
            .pow(2)
            .sub(&e_sym().mul(&b()).scale(&Rat::from_int(15)))
            .sub(&e_sym().pow(2).scale(&Rat::from_int(225)))
            .add(&g2().scale(&Rat::frac(75, 4)));
        assert_eq!(lt.poly, expect);
    }

    #[test]
    fn conventions() {
        assert_eq!(twisted_spectral(1, TwistedKind::I).unwrap().poly, MPoly::one());
        assert_eq!(twisted_spectral(2, TwistedKind::I).unwrap().poly, MPoly::one());
        assert_eq!(twisted_spectral(1, TwistedKind::II).unwrap().poly, MPoly::one());
        assert_eq!(theta_twisted_spectral(3).unwrap().poly, MPoly::one());
    }

    #[test]
    fn kappa_zero_reduces_to_ordinary() {
        // At kappa = 0 the normalized family of the twisted system matches
        // the ordinary recurrence and the cross-coupled family vanishes.
        let sys = twisted_recurrence(5, TwistedKind::I).unwrap();
        let ord = run_recurrence(Family::D, 5, &b(), &e_sym()).unwrap();
        for (i, cf) in sys.poly_b.iter().enumerate() {
            let at0 = cf.eval_rat(&[(Var::Kappa, Rat::zero())]);
            assert_eq!(at0, ord.coeffs[i], "d coefficient {i}");
        }
        for cf in &sys.poly_a {
            assert!(cf.eval_rat(&[(Var::Kappa, Rat::zero())]).is_zero());
        }
    }

    #[test]
    fn theta_system_degenerates_to_ordinary_at_branch_point() {
        // (x0, y0) = (e, 0) turns the theta recurrences into the ordinary
        // Type-II ones.
        let sys = theta_twisted_system(6).unwrap();
        let orde = run_recurrence(Family::F, 6, &b(), &e_sym()).unwrap();
        let subst = [(Var::X0, e_sym()), (Var::Y0, MPoly::zero())];
        for (i, cf) in sys.poly_b.iter().enumerate() {
            let sp = cf.subst(&subst).reduce_e();
            assert_eq!(sp, orde.coeffs[i], "b coefficient {i}");
        }
    }

    #[test]
    fn theta_twisted_ell4() {
        let lt = theta_twisted_spectral(4).unwrap();
        assert_eq!(lt.poly, b().pow(2).sub(&g2().scale(&Rat::frac(196, 3))));
    }

    #[test]
    fn theta_twisted_ell5() {
        let lt = theta_twisted_spectral(5).unwrap();
        let expect = b()
            .pow(3)
            .sub(&g2().mul(&b()).scale(&Rat::frac(1053, 4)))
            .sub(&g3().scale(&Rat::frac(25515, 4)));
        assert_eq!(lt.poly, expect);
    }

    #[test]
    fn theta_degree_shapes() {
        let s4 = theta_twisted_system(4).unwrap();
        assert_eq!(s4.poly_a.len(), 1); // deg A = 0
        assert_eq!(s4.poly_b.len(), 2); // deg B = 1
        let s5 = theta_twisted_system(5).unwrap();
        assert_eq!(s5.poly_a.len(), 3); // deg A = 2
        assert_eq!(s5.poly_b.len(), 1); // deg B = 0
    }

    #[test]
    fn full_twisted_degree() {
        for ell in 2..=4 {
            let f = full_twisted(ell).unwrap();
            assert_eq!(f.poly.degree(Var::B), (ell * ell) as usize - 1);
            assert_eq!(f.poly.isobaric_weight(), Some((ell * ell) as i64 - 1));
        }
    }
}
