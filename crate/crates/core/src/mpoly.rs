//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! One fixed variable universe serves the whole crate:
//!
//! * `B`              spectral parameter,
//! * `g2`, `g3`       Weierstrass invariants,
//! * `e`              a branch value `e_gamma` of `4x^3 - g2 x - g3`,
//! * `x`              the curve coordinate (Hermite-Halphen polynomials),
//! * `kappa`          the twisting exponent,
//! * `x0`, `y0`       the projection target point on the base curve,
//! * `En`, `m`        Jacobi-form energy and modulus,
//! * `J`              Klein invariant,
//! * `e1`, `e2`, `e3` the three branch values, for symmetrization only.
//!
//! Terms are kept in graded-lexicographic order (total degree first, then
//! lexicographic with `B` strongest), which fixes serialization byte-for-byte.
//! No zero coefficients are ever stored.
//!
//! Powers of `e` above 2 are reducible through `e^3 = (g2 e + g3)/4`; the
//! reduction is applied by [`MPoly::reduce_e`] and by the `mul_red` helper,
//! which the spectral-family code calls after every product so that stored
//! polynomials always satisfy `deg_e <= 2`.

use crate::rational::Rat;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

pub const NVARS: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    B = 0,
    G2 = 1,
    G3 = 2,
    E = 3,
    X = 4,
    Kappa = 5,
    X0 = 6,
    Y0 = 7,
    En = 8,
    M = 9,
    J = 10,
    E1 = 11,
    E2 = 12,
    E3 = 13,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::B,
        Var::G2,
        Var::G3,
        Var::E,
        Var::X,
        Var::Kappa,
        Var::X0,
        Var::Y0,
        Var::En,
        Var::M,
        Var::J,
        Var::E1,
        Var::E2,
        Var::E3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Var::B => "B",
            Var::G2 => "g2",
            Var::G3 => "g3",
            Var::E => "e",
            Var::X => "x",
            Var::Kappa => "kappa",
            Var::X0 => "x0",
            Var::Y0 => "y0",
            Var::En => "E",
            Var::M => "m",
            Var::J => "J",
            Var::E1 => "e1",
            Var::E2 => "e2",
            Var::E3 => "e3",
        }
    }

    /// Doubled isobaric weight, under which every spectral-family output is
    /// homogeneous: w(B) = w(e) = 1, w(g2) = 2, w(g3) = 3, and the curve data
    /// weigh in as w(x) = w(x0) = 1, w(y0) = 3/2, w(kappa) = 1/2, w(E) = 1.
    /// Doubling keeps the bookkeeping integral. `m` and `J` are weightless.
    pub fn weight2(self) -> i64 {
        match self {
            Var::B | Var::E | Var::X | Var::X0 | Var::En => 2,
            Var::G2 => 4,
            Var::G3 => 6,
            Var::Kappa => 1,
            Var::Y0 => 3,
            Var::M | Var::J => 0,
            Var::E1 | Var::E2 | Var::E3 => 2,
        }
    }
}

/// Exponent vector in graded-lex order (total degree first).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono(pub [u16; NVARS]);

impl Mono {
    pub fn unit() -> Self {
        Mono([0; NVARS])
    }

    pub fn var(v: Var, k: u16) -> Self {
        let mut m = [0u16; NVARS];
        m[v as usize] = k;
        Mono(m)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&p| p as u32).sum()
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v as usize]
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut m = [0u16; NVARS];
        for i in 0..NVARS {
            m[i] = self.0[i]
                .checked_add(other.0[i])
                .expect("monomial exponent overflow");
        }
        Mono(m)
    }

    /// Componentwise division; `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut m = [0u16; NVARS];
        for i in 0..NVARS {
            m[i] = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Mono(m))
    }

    pub fn weight2(&self) -> i64 {
        Var::ALL
            .iter()
            .map(|&v| v.weight2() * self.0[v as usize] as i64)
            .sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => self.0.cmp(&other.0),
            ord => ord,
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let p = self.exp(v);
            if p > 0 {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if p == 1 {
                    write!(f, "{}", v.name())?;
                } else {
                    write!(f, "{}^{}", v.name(), p)?;
                }
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Mono, Rat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        MPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = MPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Mono::unit(), c);
        }
        p
    }

    pub fn from_int(n: i64) -> Self {
        MPoly::constant(Rat::from_int(n))
    }

    pub fn var(v: Var) -> Self {
        MPoly::monomial(Mono::var(v, 1), Rat::one())
    }

    pub fn var_pow(v: Var, k: u16) -> Self {
        MPoly::monomial(Mono::var(v, k), Rat::one())
    }

    pub fn monomial(m: Mono, c: Rat) -> Self {
        let mut p = MPoly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| *m == Mono::unit())
    }

    /// The constant term (zero when absent).
    pub fn constant_term(&self) -> Rat {
        self.terms.get(&Mono::unit()).cloned().unwrap_or_else(Rat::zero)
    }

    /// Constant value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn insert_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn degree(&self, v: Var) -> usize {
        self.terms.keys().map(|m| m.exp(v) as usize).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn uses_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Highest monomial in graded-lex order, with its coefficient.
    pub fn leading_term(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(*m, -c);
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero();
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = MPoly::zero();
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let p = m.exp(v);
            if p > 0 {
                let mut m2 = *m;
                m2.0[v as usize] = p - 1;
                out.insert_term(m2, c * &Rat::from_int(p as i64));
            }
        }
        out
    }

    /// Reduce powers of `e` with `e^3 = (g2 e + g3)/4` until `deg_e <= 2`.
    pub fn reduce_e(&self) -> MPoly {
        if self.degree(Var::E) <= 2 {
            return self.clone();
        }
        let quarter = Rat::frac(1, 4);
        let mut out = MPoly::zero();
        let mut pending: Vec<(Mono, Rat)> =
            self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        while let Some((m, c)) = pending.pop() {
            let pe = m.exp(Var::E);
            if pe <= 2 {
                out.insert_term(m, c);
                continue;
            }
            // e^pe = e^(pe-3) * (g2 e + g3)/4
            let mut base = m;
            base.0[Var::E as usize] = pe - 3;
            let c4 = &c * &quarter;
            let mut m_g2e = base;
            m_g2e.0[Var::G2 as usize] += 1;
            m_g2e.0[Var::E as usize] += 1;
            pending.push((m_g2e, c4.clone()));
            let mut m_g3 = base;
            m_g3.0[Var::G3 as usize] += 1;
            pending.push((m_g3, c4));
        }
        out
    }

    /// Product with eager `e`-reduction; the normal form for the spectral
    /// family ring keeps `deg_e <= 2`.
    pub fn mul_red(&self, other: &MPoly) -> MPoly {
        self.mul(other).reduce_e()
    }

    pub fn pow_red(&self, exp: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_red(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_red(&base);
            }
        }
        acc
    }

    /// Coefficient of `v^k` as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, k: usize) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            if m.exp(v) as usize == k {
                let mut m2 = *m;
                m2.0[v as usize] = 0;
                out.insert_term(m2, c.clone());
            }
        }
        out
    }

    /// Dense coefficient list in `v`: index i holds the coefficient of v^i.
    pub fn coeff_vec(&self, v: Var) -> Vec<MPoly> {
        let d = self.degree(v);
        let mut out = vec![MPoly::zero(); d + 1];
        for (m, c) in &self.terms {
            let mut m2 = *m;
            let k = m.exp(v) as usize;
            m2.0[v as usize] = 0;
            out[k].insert_term(m2, c.clone());
        }
        out
    }

    /// Rebuild from a dense coefficient list in `v`.
    pub fn from_coeff_vec(v: Var, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let mk = Mono::var(v, k as u16);
            for (m, r) in &c.terms {
                out.insert_term(m.mul(&mk), r.clone());
            }
        }
        out
    }

    /// Leading coefficient with respect to `v` (zero polynomial for zero).
    pub fn leading_coeff(&self, v: Var) -> MPoly {
        if self.is_zero() {
            return MPoly::zero();
        }
        self.coeff_of(v, self.degree(v))
    }

    /// Substitute rational values for a subset of the variables.
    pub fn eval_rat(&self, assign: &[(Var, Rat)]) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut m2 = *m;
            let mut coeff = c.clone();
            for (v, val) in assign {
                let p = m.exp(*v);
                if p > 0 {
                    coeff *= &val.pow(p as u32);
                    m2.0[*v as usize] = 0;
                }
            }
            out.insert_term(m2, coeff);
        }
        out
    }

    /// Substitute polynomials for a subset of the variables.
    pub fn subst(&self, assign: &[(Var, MPoly)]) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut m2 = *m;
            let mut factor = MPoly::one();
            for (v, val) in assign {
                let p = m.exp(*v);
                if p > 0 {
                    m2.0[*v as usize] = 0;
                    factor = factor.mul(&val.pow(p as u32));
                }
            }
            out = out.add(&factor.mul_mono(&m2, c));
        }
        out
    }

    /// Full rational evaluation; every variable must be assigned.
    pub fn eval_full(&self, assign: &[(Var, Rat)]) -> Rat {
        let v = self.eval_rat(assign);
        v.as_constant().expect("eval_full left free variables")
    }

    /// Evaluate a univariate polynomial in `v` at a float argument by Horner.
    pub fn eval_f64(&self, v: Var, t: f64) -> f64 {
        let coeffs = self.coeff_vec(v);
        let mut acc = 0.0;
        for c in coeffs.iter().rev() {
            let c0 = c
                .as_constant()
                .expect("eval_f64 requires a univariate polynomial")
                .to_f64();
            acc = acc * t + c0;
        }
        acc
    }

    /// Rational content: gcd of all coefficients (zero for the zero poly).
    pub fn content(&self) -> Rat {
        let mut g = Rat::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the rational content; sign normalized so the graded-lex
    /// leading coefficient is positive.
    pub fn primitive_part(&self) -> MPoly {
        if self.is_zero() {
            return MPoly::zero();
        }
        let mut c = self.content();
        if self.leading_term().map(|(_, k)| k.is_negative()).unwrap_or(false) {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Exact multivariate division; `None` when `self` is not a multiple of
    /// `divisor`. Works by cancelling graded-lex leading terms.
    pub fn div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        let (dm, dc) = {
            let (m, c) = divisor.leading_term().unwrap();
            (*m, c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading_term().unwrap();
                (*m, c.clone())
            };
            let qm = rm.div(&dm)?;
            let qc = &rc / &dc;
            quot.insert_term(qm, qc.clone());
            rem = rem.sub(&divisor.mul_mono(&qm, &qc));
        }
        Some(quot)
    }

    /// Doubled isobaric weight when homogeneous, `None` otherwise.
    pub fn isobaric_weight2(&self) -> Option<i64> {
        let mut it = self.terms.keys();
        let w = it.next()?.weight2();
        if it.all(|m| m.weight2() == w) {
            Some(w)
        } else {
            None
        }
    }

    /// Isobaric weight under w(B) = w(e) = 1, w(g2) = 2, w(g3) = 3 for
    /// polynomials in those variables; `None` when not homogeneous.
    pub fn isobaric_weight(&self) -> Option<i64> {
        let w2 = self.isobaric_weight2()?;
        if w2 % 2 == 0 {
            Some(w2 / 2)
        } else {
            None
        }
    }

    /// Make monic in `v`; the leading coefficient must be a nonzero rational.
    pub fn monic_in(&self, v: Var) -> Option<MPoly> {
        let lc = self.leading_coeff(v).as_constant()?;
        if lc.is_zero() {
            return None;
        }
        Some(self.scale(&lc.recip()))
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if *m == Mono::unit() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m:?}")?;
            } else {
                write!(f, "{mag}*{m:?}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Convenience constructors used throughout the crate and its tests.
pub fn b() -> MPoly {
    MPoly::var(Var::B)
}
pub fn g2() -> MPoly {
    MPoly::var(Var::G2)
}
pub fn g3() -> MPoly {
    MPoly::var(Var::G3)
}
pub fn e_sym() -> MPoly {
    MPoly::var(Var::E)
}

/// The branch-value cubic `4e^3 - g2 e - g3` vanishes; products over the
/// three branch values therefore reduce to `g2`, `g3` data. This helper is
/// the monic version `e^3 - (g2 e + g3)/4` used as a modulus.
pub fn e_cubic_monic() -> MPoly {
    let mut p = MPoly::zero();
    p.insert_term(Mono::var(Var::E, 3), Rat::one());
    let mut m1 = Mono::var(Var::E, 1);
    m1.0[Var::G2 as usize] = 1;
    p.insert_term(m1, Rat::frac(-1, 4));
    p.insert_term(Mono::var(Var::G3, 1), Rat::frac(-1, 4));
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order_matches_serialization_contract() {
        // B^2 has total degree 2 and dominates B*g2? No: both degree 2,
        // lex: B^2 = (2,0,..) > (1,1,..) = B*g2. And g2^2 < B*g3 despite
        // weights, because order is degree-then-lex.
        let b2 = Mono::var(Var::B, 2);
        let mut bg2 = Mono::var(Var::B, 1);
        bg2.0[Var::G2 as usize] = 1;
        assert!(b2 > bg2);
        let g2g2 = Mono::var(Var::G2, 2);
        let mut bg3 = Mono::var(Var::B, 1);
        bg3.0[Var::G3 as usize] = 1;
        assert!(bg3 > g2g2);
    }

    #[test]
    fn e_cube_reduces() {
        // (e)(e)(e) -> (g2 e + g3)/4
        let e = e_sym();
        let p = e.mul_red(&e).mul_red(&e);
        let mut expected = MPoly::zero();
        let mut m1 = Mono::var(Var::E, 1);
        m1.0[Var::G2 as usize] = 1;
        expected.insert_term(m1, Rat::frac(1, 4));
        expected.insert_term(Mono::var(Var::G3, 1), Rat::frac(1, 4));
        assert_eq!(p, expected);
    }

    #[test]
    fn low_e_degree_products_stay_unreduced() {
        // (B - e)(B + 3e) = B^2 + 2eB - 3e^2, e^2 kept.
        let p = b().sub(&e_sym()).mul_red(&b().add(&e_sym().scale(&Rat::from_int(3))));
        assert_eq!(p.degree(Var::E), 2);
        assert_eq!(p.coeff_of(Var::E, 2).as_constant().unwrap(), Rat::from_int(-3));
        let c1 = p.coeff_of(Var::E, 1);
        assert_eq!(c1, b().scale(&Rat::from_int(2)));
        // weight 2 on every term
        assert_eq!(p.isobaric_weight(), Some(2));
    }

    #[test]
    fn add_identity() {
        let p = b().mul(&g3()).sub(&g2().pow(3));
        assert_eq!(p.add(&MPoly::zero()), p);
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = b().pow(3).sub(&g2().scale(&Rat::frac(52, 1)).mul(&b()));
        let d = b().add(&g3().scale(&Rat::frac(7, 3)));
        let prod = a.mul(&d);
        assert_eq!(prod.div_exact(&d).unwrap(), a);
        assert!(b().div_exact(&g2()).is_none());
    }

    #[test]
    fn derivative_and_eval() {
        let p = b().pow(3).sub(&g2().mul(&b()).scale(&Rat::from_int(52)));
        let dp = p.derivative(Var::B);
        let expect = b().pow(2).scale(&Rat::from_int(3)).sub(&g2().scale(&Rat::from_int(52)));
        assert_eq!(dp, expect);
        let v = p.eval_full(&[(Var::B, Rat::from_int(2)), (Var::G2, Rat::frac(1, 2))]);
        assert_eq!(v, Rat::from_int(8) - Rat::from_int(52));
    }
}
