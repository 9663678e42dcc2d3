//! Reduced dispersion relations on the Jacobi-form spectral curve.
//!
//! For each degree the covering data turn `k_l` into the base relation
//! plus an algebraic term:
//!
//! ```text
//! k_l(E, nu | m) = k_1(E_l(E|m), nu_l(E, nu | m)) + kappa_hat_l(E|m) nu
//! ```
//!
//! with `E_l = -x0(B) + 2(m+1)/3`, `nu_l = (y0/nu)(B) nu / 2`,
//! `kappa_hat_l = (kappa/nu)(B)`, all at `B = -E + l(l+1)(m+1)/3`. Both
//! terms are functions of the curve point `(E, nu)`, so no sign ambiguity
//! survives; the additive `pi/K` multi-valuedness is folded for plotting.

use crate::curve::{fold_momentum, k1};
use crate::error::{NumError, NumResult};
use crate::par::{map_indexed, ExecMode};
use crate::theta::ThetaContext;
use lame_core::covering::{theorem_l, CoveringMap, RatFunc};
use lame_core::hk::{hk_run, HkInputs, HkScalar, HkSolution};
use lame_core::jacobi;
use lame_core::moduli::{params_from_m, EllipticParams};
use lame_core::rational::Rat;
use lame_core::upoly::UPoly;
use lame_core::Var;
use num_complex::Complex64;

/// Covering-map component with exact invariants substituted: exact
/// rational coefficients for the real-energy path (the degree-30+
/// numerators of high degrees shed several digits to cancellation under
/// f64 Horner), plus f64 copies for complex arguments.
#[derive(Debug, Clone)]
struct CoveringComponent {
    num: UPoly,
    den: UPoly,
    num_f: Vec<f64>,
    den_f: Vec<f64>,
}

impl CoveringComponent {
    fn from_exact(rf: &RatFunc, g2: &Rat, g3: &Rat) -> Self {
        let assign = [(Var::G2, g2.clone()), (Var::G3, g3.clone())];
        let coeffs = |p: &lame_core::MPoly| -> Vec<Rat> {
            p.eval_rat(&assign)
                .coeff_vec(Var::B)
                .into_iter()
                .map(|c| c.as_constant().expect("only B remains"))
                .collect()
        };
        let num = UPoly::from_coeffs(coeffs(&rf.num));
        let den = UPoly::from_coeffs(coeffs(&rf.den));
        let to_f = |p: &UPoly| p.coeffs.iter().map(|c| c.to_f64()).collect();
        CoveringComponent { num_f: to_f(&num), den_f: to_f(&den), num, den }
    }

    /// Exact evaluation at a dyadic rational point, rounded once at the end.
    fn eval_exact(&self, b: &Rat) -> (f64, f64) {
        (self.num.eval(b).to_f64(), self.den.eval(b).to_f64())
    }

    fn eval_complex(&self, b: Complex64) -> (Complex64, Complex64) {
        let horner = |cs: &[f64]| {
            cs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * b + c)
        };
        (horner(&self.num_f), horner(&self.den_f))
    }
}

/// Everything needed to evaluate `k_l` at one modulus.
#[derive(Debug, Clone)]
pub struct LameSystem {
    pub ell: u32,
    pub params: EllipticParams,
    pub theta: ThetaContext,
    /// Jacobi-form spectral polynomial, exact.
    pub ltilde: UPoly,
    /// Sorted band edges.
    pub edges: Vec<f64>,
    x0: CoveringComponent,
    y0_over_nu: CoveringComponent,
    kappa_over_nu: CoveringComponent,
    /// E-positions of the covering-map poles (zeros of the denominators).
    pub pole_positions: Vec<f64>,
    /// `B = -E + l(l+1)(m+1)/3`.
    pub b_shift: f64,
    pub covering: CoveringMap,
}

impl LameSystem {
    pub fn new(ell: u32, m: &Rat) -> NumResult<Self> {
        let params = params_from_m(m)?;
        let theta = ThetaContext::new(m.to_f64())?;
        let ltilde = jacobi::jacobi_spectral(ell, m)?.poly;
        let edges = jacobi::band_edges(ell, m)?;
        let covering = theorem_l(ell)?;
        let x0 = CoveringComponent::from_exact(&covering.x0, &params.g2, &params.g3);
        let y0_over_nu =
            CoveringComponent::from_exact(&covering.y0_over_nu, &params.g2, &params.g3);
        let kappa_over_nu =
            CoveringComponent::from_exact(&covering.kappa_over_nu, &params.g2, &params.g3);
        let b_shift = (ell * (ell + 1)) as f64 * (m.to_f64() + 1.0) / 3.0;
        // pole positions in E from the exact denominator of x0
        let assign = [(Var::G2, params.g2.clone()), (Var::G3, params.g3.clone())];
        let den_b = covering.x0.den.eval_rat(&assign);
        let den_coeffs: Vec<Rat> = den_b
            .coeff_vec(Var::B)
            .into_iter()
            .map(|c| c.as_constant().expect("B only"))
            .collect();
        let pole_positions = UPoly::from_coeffs(den_coeffs)
            .real_roots()
            .into_iter()
            .map(|b| b_shift - b)
            .collect();
        Ok(LameSystem {
            ell,
            params,
            theta,
            ltilde,
            edges,
            x0,
            y0_over_nu,
            kappa_over_nu,
            pole_positions,
            b_shift,
            covering,
        })
    }

    /// Exact evaluation of the spectral polynomial at a dyadic energy.
    pub fn ltilde_at(&self, e: f64) -> f64 {
        match Rat::from_f64(e) {
            Some(er) => self.ltilde.eval(&er).to_f64(),
            None => f64::NAN,
        }
    }

    /// Principal branch of `nu_tilde`: nonnegative real in a band, positive
    /// imaginary in a gap.
    pub fn nu_principal(&self, e: f64) -> Complex64 {
        let v = self.ltilde_at(e);
        if v >= 0.0 {
            Complex64::from(v.sqrt())
        } else {
            Complex64::new(0.0, (-v).sqrt())
        }
    }

    /// Band index of a sample: `Some(j)` when inside band `j` (0-based, the
    /// last band extends to infinity), `None` in a gap or outside.
    pub fn band_index(&self, e: f64) -> Option<usize> {
        let n = self.edges.len();
        if e < self.edges[0] {
            return None;
        }
        for j in 0..(n - 1) / 2 {
            if e >= self.edges[2 * j] && e <= self.edges[2 * j + 1] {
                return Some(j);
            }
        }
        if e >= self.edges[n - 1] {
            return Some((n - 1) / 2);
        }
        None
    }

    pub fn near_pole(&self, e: f64) -> bool {
        self.pole_positions.iter().any(|p| (e - p).abs() < 1e-6)
    }

    /// The reduced curve point and algebraic term at energy `E`:
    /// `(E_l, y0/nu at B, kappa/nu at B)`, evaluated exactly in `B`.
    pub fn reduced_data(&self, e: f64) -> NumResult<(f64, f64, f64)> {
        let b = self.b_shift - e;
        let br = Rat::from_f64(b).ok_or(NumError::CoveringPole { b })?;
        let (nx, dx) = self.x0.eval_exact(&br);
        let (ny, dy) = self.y0_over_nu.eval_exact(&br);
        let (nk, dk) = self.kappa_over_nu.eval_exact(&br);
        if dx == 0.0 || dy == 0.0 || dk == 0.0 {
            return Err(NumError::CoveringPole { b });
        }
        let x0 = nx / dx;
        let e_l = -x0 + 2.0 * (self.theta.m + 1.0) / 3.0;
        Ok((e_l, ny / dy, nk / dk))
    }

    /// Reduced dispersion relation at the curve point `(E, nu)`.
    pub fn k_ell(&self, e: f64, nu: Complex64) -> NumResult<Complex64> {
        if self.ell == 1 {
            return k1(e, nu, &self.theta);
        }
        if self.near_pole(e) {
            return Err(NumError::CoveringPole { b: self.b_shift - e });
        }
        let (e_l, y_ratio, k_ratio) = self.reduced_data(e)?;
        let nu_l = 0.5 * y_ratio * nu;
        let base = k1(e_l, nu_l, &self.theta)?;
        Ok(base + k_ratio * nu)
    }

    pub fn momentum_period(&self) -> f64 {
        std::f64::consts::PI / self.theta.k
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleFlag {
    Ok,
    NearPole,
    NearEdge,
    BranchError,
}

/// One row of a dispersion scan.
#[derive(Debug, Clone)]
pub struct DispersionSample {
    pub e: f64,
    pub nu: Complex64,
    pub k: Complex64,
    /// Folded into `[0, pi/2K]`; meaningful in bands.
    pub k_folded: f64,
    pub band_index: Option<usize>,
    pub flag: SampleFlag,
}

/// Scan `[emin, emax]` with `n` samples. Phase one fixes the `nu` branch by
/// continuity (sequential by nature, re-anchoring at band edges); phase two
/// evaluates the dispersion relation per sample in the requested mode.
pub fn dispersion_scan(
    sys: &LameSystem,
    emin: f64,
    emax: f64,
    n: usize,
    mode: ExecMode,
) -> Vec<DispersionSample> {
    assert!(n >= 2 && emax > emin);
    let h = (emax - emin) / (n - 1) as f64;
    // phase 1: branch continuation
    let mut nus: Vec<Complex64> = Vec::with_capacity(n);
    let mut prev: Option<Complex64> = None;
    let mut prev_band: Option<usize> = None;
    for i in 0..n {
        let e = emin + h * i as f64;
        let base = sys.nu_principal(e);
        let band = sys.band_index(e);
        let nu = match prev {
            Some(p) if band == prev_band => {
                if (base - p).norm() <= (-base - p).norm() {
                    base
                } else {
                    -base
                }
            }
            // re-anchor on the principal branch at each edge crossing
            _ => base,
        };
        prev = Some(nu);
        prev_band = band;
        nus.push(nu);
    }
    // phase 2: parallel evaluation
    let period = sys.momentum_period();
    map_indexed(mode, n, |i| {
        let e = emin + h * i as f64;
        let nu = nus[i];
        let band = sys.band_index(e);
        let near_edge = sys.edges.iter().any(|&s| (e - s).abs() < 1e-9);
        if sys.near_pole(e) {
            return DispersionSample {
                e,
                nu,
                k: Complex64::new(f64::NAN, f64::NAN),
                k_folded: f64::NAN,
                band_index: band,
                flag: SampleFlag::NearPole,
            };
        }
        match sys.k_ell(e, nu) {
            Ok(k) => DispersionSample {
                e,
                nu,
                k,
                k_folded: fold_momentum(k.re, period),
                band_index: band,
                flag: if near_edge { SampleFlag::NearEdge } else { SampleFlag::Ok },
            },
            Err(_) => DispersionSample {
                e,
                nu,
                k: Complex64::new(f64::NAN, f64::NAN),
                k_folded: f64::NAN,
                band_index: band,
                flag: SampleFlag::BranchError,
            },
        }
    })
}

/// Complex scalar for the Hermite-Krichever recurrence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CScalar(pub Complex64);

impl HkScalar for CScalar {
    fn zero_like(&self) -> Self {
        CScalar(Complex64::new(0.0, 0.0))
    }
    fn one_like(&self) -> Self {
        CScalar(Complex64::new(1.0, 0.0))
    }
    fn add(&self, o: &Self) -> Self {
        CScalar(self.0 + o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        CScalar(self.0 - o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        CScalar(self.0 * o.0)
    }
    fn scale_rat(&self, r: &Rat) -> Self {
        CScalar(self.0 * r.to_f64())
    }
}

/// Floating Hermite-Krichever run at a complex spectral point: evaluates
/// the covering data, runs the recurrence, and demands the residuals vanish
/// to `1e-10` relative to the largest computed coefficient.
pub fn hk_complex(
    sys: &LameSystem,
    b: Complex64,
    branch_positive: bool,
) -> NumResult<HkSolution<CScalar>> {
    let (nx, dx) = sys.x0.eval_complex(b);
    let (ny, dy) = sys.y0_over_nu.eval_complex(b);
    let (nk, dk) = sys.kappa_over_nu.eval_complex(b);
    if dx.norm() < 1e-12 || dy.norm() < 1e-12 || dk.norm() < 1e-12 {
        return Err(NumError::CoveringPole { b: b.re });
    }
    // nu^2 = L(B) = -Ltilde(E) at E = shift - B
    let e = sys.b_shift as f64 - b.re;
    let _ = e;
    let lb = {
        // evaluate L(B) = -Ltilde(shift - B) through the exact polynomial
        let et = Complex64::from(sys.b_shift) - b;
        let mut acc = Complex64::new(0.0, 0.0);
        for c in sys.ltilde.coeffs.iter().rev() {
            acc = acc * et + c.to_f64();
        }
        -acc
    };
    let sgn = if branch_positive { 1.0 } else { -1.0 };
    let nu = sgn * lb.sqrt();
    let inputs = HkInputs {
        b: CScalar(b),
        g2: CScalar(Complex64::from(sys.params.g2.to_f64())),
        g3: CScalar(Complex64::from(sys.params.g3.to_f64())),
        x0: CScalar(nx / dx),
        y0: CScalar(ny / dy * nu),
        kappa: CScalar(nk / dk * nu),
    };
    let sol = hk_run(sys.ell, &inputs);
    let scale = sol
        .a
        .iter()
        .chain(sol.b.iter())
        .map(|c| c.0.norm())
        .fold(1.0f64, f64::max);
    for (which, r) in [('a', &sol.residual_a), ('b', &sol.residual_b)] {
        if r.0.norm() > 1e-10 * scale {
            return Err(NumError::NonvanishingResidual {
                which,
                magnitude: r.0.norm(),
            });
        }
    }
    Ok(sol)
}
