//! The verification suite: one check per acceptance criterion, each
//! returning a machine-readable report. The `verify` subcommand and the
//! acceptance test target both drive these functions.

use lame_core::cohn::{cohn_degree_report, cohn_polynomial, no_roots_from_one, CohnKind};
use lame_core::covering::{
    branch_degeneracy, covering_degree, linear_root, reduction_polynomial, theorem_l,
};
use lame_core::jacobi;
use lame_core::mpoly::{MPoly, Var};
use lame_core::rational::Rat;
use lame_core::reference;
use lame_core::spectral::{
    degree_type_i, degree_type_ii, full_spectral, hermite_halphen, lame_polynomial,
    nu_squared_check, spectral_poly_i, spectral_poly_ii,
};
use lame_core::twisted::{
    degree_theta_twisted, degree_twisted_i, degree_twisted_ii, full_twisted,
    theta_twisted_spectral, theta_twisted_spectral_at, twisted_spectral,
    twisted_spectral_at, ModuliSubst, TwistedKind,
};
use lame_numerics::curve::folded_distance;
use lame_numerics::dispersion::LameSystem;
use lame_numerics::oracle::hill_monodromy_oracle;
use lame_numerics::reduction::reduction_identity;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub criterion: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    fn pass(criterion: u32, name: &'static str, detail: String) -> Self {
        CheckReport { criterion, name, passed: true, detail }
    }

    fn fail(criterion: u32, name: &'static str, detail: String) -> Self {
        CheckReport { criterion, name, passed: false, detail }
    }
}

fn outcome(
    criterion: u32,
    name: &'static str,
    result: Result<String, String>,
) -> CheckReport {
    match result {
        Ok(d) => CheckReport::pass(criterion, name, d),
        Err(d) => CheckReport::fail(criterion, name, d),
    }
}

/// Criterion 1: every published table row, coefficient for coefficient.
pub fn check_golden_tables() -> CheckReport {
    let run = || -> Result<String, String> {
        let mut rows = 0usize;
        for ell in 1..=3u32 {
            if hermite_halphen(ell) != reference::hermite_halphen_row(ell).unwrap() {
                return Err(format!("Hermite-Halphen row ell={ell}"));
            }
            rows += 1;
        }
        let b = MPoly::var(Var::B);
        let e = MPoly::var(Var::E);
        for ell in 2..=8u32 {
            let got = lame_polynomial(ell, false, &b, Some(&e))
                .map_err(|er| er.to_string())?
                .polynomial();
            if got != reference::lame_polynomial_row_i(ell).unwrap() {
                return Err(format!("Type-I polynomial factor ell={ell}"));
            }
            rows += 1;
        }
        for ell in 1..=8u32 {
            let got = lame_polynomial(ell, true, &b, Some(&e))
                .map_err(|er| er.to_string())?
                .polynomial();
            if got != reference::lame_polynomial_row_ii(ell).unwrap() {
                return Err(format!("Type-II polynomial factor ell={ell}"));
            }
            rows += 1;
        }
        for ell in 1..=8u32 {
            if spectral_poly_i(ell).map_err(|e| e.to_string())?.poly
                != reference::spectral_row_i(ell).unwrap()
            {
                return Err(format!("L^I ell={ell}"));
            }
            if spectral_poly_ii(ell).map_err(|e| e.to_string())?.poly
                != reference::spectral_row_ii(ell).unwrap()
            {
                return Err(format!("L^II ell={ell}"));
            }
            rows += 2;
        }
        for ell in 1..=8u32 {
            if twisted_spectral(ell, TwistedKind::I).map_err(|e| e.to_string())?.poly
                != reference::twisted_row_i(ell).unwrap()
            {
                return Err(format!("Lt^I ell={ell}"));
            }
            rows += 1;
        }
        for ell in 1..=6u32 {
            if twisted_spectral(ell, TwistedKind::II).map_err(|e| e.to_string())?.poly
                != reference::twisted_row_ii(ell).unwrap()
            {
                return Err(format!("Lt^II ell={ell}"));
            }
            rows += 1;
        }
        for ell in 1..=8u32 {
            if theta_twisted_spectral(ell).map_err(|e| e.to_string())?.poly
                != reference::theta_row(ell).unwrap()
            {
                return Err(format!("Ltheta ell={ell}"));
            }
            rows += 1;
        }
        for ell in 1..=8u32 {
            if reduction_polynomial(ell).map_err(|e| e.to_string())?.p_hat
                != reference::reduction_row(ell).unwrap()
            {
                return Err(format!("P_hat ell={ell}"));
            }
            rows += 1;
        }
        for ell in 1..=8u32 {
            for (kind, rkind) in [
                (CohnKind::TypeI, reference::CohnRowKind::TypeI),
                (CohnKind::TypeII, reference::CohnRowKind::TypeII),
            ] {
                if cohn_polynomial(ell, kind).map_err(|e| e.to_string())?.poly
                    != reference::cohn_row(ell, rkind).unwrap()
                {
                    return Err(format!("Cohn {kind:?} ell={ell}"));
                }
                rows += 1;
            }
        }
        Ok(format!("{rows} table rows exact"))
    };
    outcome(1, "golden-tables", run())
}

/// Criterion 2: the closed-form degree laws through `ell = 12`.
pub fn check_degree_laws() -> CheckReport {
    let run = || -> Result<String, String> {
        for ell in 1..=12u32 {
            let li = spectral_poly_i(ell).map_err(|e| e.to_string())?.poly;
            if li.degree(Var::B) != degree_type_i(ell) {
                return Err(format!("deg L^I ell={ell}"));
            }
            let lii = spectral_poly_ii(ell).map_err(|e| e.to_string())?.poly;
            if lii.degree(Var::B) != degree_type_ii(ell) {
                return Err(format!("deg L^II ell={ell}"));
            }
            let full = full_spectral(ell).map_err(|e| e.to_string())?.poly;
            if full.degree(Var::B) != 2 * ell as usize + 1 {
                return Err(format!("deg full spectral ell={ell}"));
            }
        }
        // twisted and theta families: symbolic through 8, exact rational
        // specializations as witnesses above (leading-coefficient survival
        // is enforced by the degree-normalization policy itself)
        let points = [(1i64, 2i64), (2, 3), (1, 5)];
        for ell in 1..=12u32 {
            let mut got: (Option<usize>, Option<usize>, Option<usize>) = (None, None, None);
            if ell <= 8 {
                got.0 = Some(
                    twisted_spectral(ell, TwistedKind::I)
                        .map_err(|e| e.to_string())?
                        .poly
                        .degree(Var::B),
                );
                got.1 = Some(
                    twisted_spectral(ell, TwistedKind::II)
                        .map_err(|e| e.to_string())?
                        .poly
                        .degree(Var::B),
                );
                got.2 = Some(
                    theta_twisted_spectral(ell)
                        .map_err(|e| e.to_string())?
                        .poly
                        .degree(Var::B),
                );
            } else {
                for (r1, r2) in points {
                    let (r1, r2) = (Rat::from_int(r1), Rat::from_int(r2));
                    let r3 = -&r1 - &r2;
                    let s2 = &r1 * &r2 + &r2 * &r3 + &r3 * &r1;
                    let s3 = &r1 * &r2 * &r3;
                    let subs = ModuliSubst::rational(
                        &(Rat::from_int(-4) * s2),
                        &(Rat::from_int(4) * s3),
                        &r1,
                    );
                    if got.0.is_none() {
                        if let Ok(p) = twisted_spectral_at(ell, TwistedKind::I, &subs) {
                            got.0 = Some(p.poly.degree(Var::B));
                        }
                    }
                    if got.1.is_none() {
                        if let Ok(p) = twisted_spectral_at(ell, TwistedKind::II, &subs) {
                            got.1 = Some(p.poly.degree(Var::B));
                        }
                    }
                    if got.2.is_none() {
                        if let Ok(p) = theta_twisted_spectral_at(ell, &subs) {
                            got.2 = Some(p.poly.degree(Var::B));
                        }
                    }
                }
            }
            if got.0 != Some(degree_twisted_i(ell)) {
                return Err(format!("deg Lt^I ell={ell}: {:?}", got.0));
            }
            if got.1 != Some(degree_twisted_ii(ell)) {
                return Err(format!("deg Lt^II ell={ell}: {:?}", got.1));
            }
            if got.2 != Some(degree_theta_twisted(ell)) {
                return Err(format!("deg Ltheta ell={ell}: {:?}", got.2));
            }
        }
        for ell in 1..=8u32 {
            let f = full_twisted(ell).map_err(|e| e.to_string())?.poly;
            if f.degree(Var::B) != (ell * ell) as usize - 1 {
                return Err(format!("deg full twisted ell={ell}"));
            }
        }
        Ok("N^I, N^II, Nt^I, Nt^II, Ntheta match closed forms for ell <= 12; \
            full degrees 2l+1 and l^2-1 exact"
            .into())
    };
    outcome(2, "degree-laws", run())
}

/// Criterion 3: covering-map internal consistency through `ell = 8`.
pub fn check_covering_consistency(ell_max: u32) -> CheckReport {
    let run = || -> Result<String, String> {
        let points: Vec<(Rat, Rat, Rat)> = (0..24)
            .map(|k| {
                (
                    Rat::frac(2 * k + 3, 2),
                    Rat::frac(k + 1, 3),
                    Rat::frac(7 - 3 * k, 5),
                )
            })
            .collect();
        for ell in 1..=ell_max {
            // theorem_l itself fails unless every branch-value term cancels
            let cm = theorem_l(ell).map_err(|e| format!("ell={ell}: {e}"))?;
            if covering_degree(&cm) != (ell * (ell + 1) / 2) as usize {
                return Err(format!("covering degree ell={ell}"));
            }
            if ell <= 4 {
                cm.verify_curve_identity_symbolic()
                    .map_err(|_| format!("curve identity ell={ell}"))?;
            } else {
                let n = cm
                    .verify_curve_identity_at(&points)
                    .map_err(|_| format!("curve identity ell={ell}"))?;
                if n < 20 {
                    return Err(format!("only {n} usable spot-check points at ell={ell}"));
                }
            }
        }
        Ok(format!(
            "x0 branch-independent, curve identity and degree l(l+1)/2 hold, ell <= {ell_max}"
        ))
    };
    outcome(3, "covering-consistency", run())
}

/// Criterion 4: the position-independent `nu^2` identity, `ell <= 5`.
pub fn check_nu_squared() -> CheckReport {
    let run = || -> Result<String, String> {
        for ell in 1..=5u32 {
            let lhs = nu_squared_check(ell).map_err(|e| format!("ell={ell}: {e}"))?;
            let rhs = full_spectral(ell).map_err(|e| e.to_string())?;
            if lhs.poly != rhs.poly {
                return Err(format!("nu^2 != full spectral at ell={ell}"));
            }
        }
        Ok("nu^2 expression reproduces the full spectral polynomial, ell <= 5".into())
    };
    outcome(4, "nu-squared", run())
}

/// Criterion 5: Cohn root locations, `J`-divisibility, conjectured degrees.
pub fn check_cohn_properties() -> CheckReport {
    let run = || -> Result<String, String> {
        for ell in 1..=8u32 {
            for kind in [CohnKind::TypeI, CohnKind::TypeII] {
                let c = cohn_polynomial(ell, kind).map_err(|e| e.to_string())?;
                if !no_roots_from_one(&c.poly) {
                    return Err(format!("{kind:?} ell={ell} has a root in [1, oo)"));
                }
            }
        }
        for row in cohn_degree_report(8).map_err(|e| e.to_string())? {
            if row.degree != row.conjectured {
                return Err(format!(
                    "degree {} != conjectured {} at ell={} {:?}",
                    row.degree, row.conjectured, row.ell, row.kind
                ));
            }
            if row.kind == CohnKind::TypeI
                && row.divisible_by_j != (row.degree > 0 && row.ell % 3 == 2)
            {
                return Err(format!("J-divisibility pattern broken at ell={}", row.ell));
            }
        }
        Ok("no roots in [1, oo); degrees match the conjecture; J | Type-I \
            exactly for ell = 2 mod 3 (ell <= 8)"
            .into())
    };
    outcome(5, "cohn-properties", run())
}

/// Criterion 6: Jacobi-form spectral polynomials and lemniscatic edges.
pub fn check_jacobi_spectral() -> CheckReport {
    let run = || -> Result<String, String> {
        let en = MPoly::var(Var::En);
        let mm = MPoly::var(Var::M);
        // degree-1..3 factorizations
        let p1 = jacobi::jacobi_spectral_symbolic(1).map_err(|e| e.to_string())?;
        let f1 = en
            .sub(&MPoly::one())
            .mul(&en.sub(&mm))
            .mul(&en.sub(&mm).sub(&MPoly::one()));
        if p1 != f1 {
            return Err("degree-1 factorization".into());
        }
        let p2 = jacobi::jacobi_spectral_symbolic(2).map_err(|e| e.to_string())?;
        let q = en
            .pow(2)
            .sub(&mm.add(&MPoly::one()).scale(&Rat::from_int(4)).mul(&en))
            .add(&mm.scale(&Rat::from_int(12)));
        let f2 = q
            .mul(&en.sub(&mm).sub(&MPoly::one()))
            .mul(&en.sub(&mm.scale(&Rat::from_int(4))).sub(&MPoly::one()))
            .mul(&en.sub(&mm).sub(&MPoly::from_int(4)));
        if p2 != f2 {
            return Err("degree-2 factorization".into());
        }
        let p3 = jacobi::jacobi_spectral_symbolic(3).map_err(|e| e.to_string())?;
        let f3 = {
            let lin = en.sub(&mm.scale(&Rat::from_int(4))).sub(&MPoly::from_int(4));
            let a = en
                .pow(2)
                .sub(&mm.scale(&Rat::from_int(2))
                    .add(&MPoly::from_int(5))
                    .scale(&Rat::from_int(2))
                    .mul(&en))
                .add(&mm.scale(&Rat::from_int(8)).add(&MPoly::from_int(3)).scale(&Rat::from_int(3)));
            let b = en
                .pow(2)
                .sub(&mm.scale(&Rat::from_int(5))
                    .add(&MPoly::from_int(2))
                    .scale(&Rat::from_int(2))
                    .mul(&en))
                .add(&mm.pow(2)
                    .scale(&Rat::from_int(3))
                    .add(&mm.scale(&Rat::from_int(8)))
                    .scale(&Rat::from_int(3)));
            let c = en
                .pow(2)
                .sub(&mm.add(&MPoly::one()).scale(&Rat::from_int(10)).mul(&en))
                .add(&mm.pow(2)
                    .scale(&Rat::from_int(3))
                    .add(&mm.scale(&Rat::from_int(26)))
                    .add(&MPoly::from_int(3))
                    .scale(&Rat::from_int(3)));
            lin.mul(&a).mul(&b).mul(&c)
        };
        if p3 != f3 {
            return Err("degree-3 factorization".into());
        }
        // integer root E = l(l+1)/2 at the lemniscatic modulus
        let half = Rat::frac(1, 2);
        for ell in 1..=12u32 {
            let js = jacobi::jacobi_spectral(ell, &half).map_err(|e| e.to_string())?;
            if !js.poly.eval(&Rat::frac((ell * (ell + 1)) as i64, 2)).is_zero() {
                return Err(format!("integer root missing at ell={ell}"));
            }
        }
        // closed-form band edges at m = 1/2 to 1e-10
        let s3 = 3f64.sqrt();
        let s6 = 6f64.sqrt();
        let s15 = 15f64.sqrt();
        let closed: [&[f64]; 3] = [
            &[0.5, 1.0, 1.5],
            &[3.0 - s3, 1.5, 3.0, 4.5, 3.0 + s3],
            &[4.5 - s6, 6.0 - s15, 7.5 - s6, 6.0, 4.5 + s6, 6.0 + s15, 7.5 + s6],
        ];
        for ell in 1..=3u32 {
            let edges = jacobi::band_edges(ell, &half).map_err(|e| e.to_string())?;
            let mut expect = closed[ell as usize - 1].to_vec();
            expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (a, b) in edges.iter().zip(&expect) {
                if (a - b).abs() > 1e-10 {
                    return Err(format!("edge {a} vs {b} at ell={ell}"));
                }
            }
        }
        Ok("factorizations exact; integer lemniscatic root to ell = 12; \
            m = 1/2 edges match closed forms to 1e-10"
            .into())
    };
    outcome(6, "jacobi-spectral", run())
}

/// Criterion 7: dispersion relations versus the Floquet-monodromy oracle.
pub fn check_dispersion_oracle(ell_list: &[u32], per_band: usize) -> CheckReport {
    let run = || -> Result<String, String> {
        let m = Rat::frac(1, 2);
        let mut worst: f64 = 0.0;
        for &ell in ell_list {
            let sys = LameSystem::new(ell, &m).map_err(|e| e.to_string())?;
            let period = sys.momentum_period();
            let edges = sys.edges.clone();
            // every band edge carries |trace| = 2 to 1e-8
            for &e in &edges {
                let r = hill_monodromy_oracle(ell, e, 0.5).map_err(|e| e.to_string())?;
                if (r.trace.abs() - 2.0).abs() > 1e-8 {
                    return Err(format!("edge {e} ell={ell}: |trace| = {}", r.trace.abs()));
                }
            }
            // in-band sampling
            let nbands = (edges.len() + 1) / 2;
            for j in 0..nbands {
                let (a, b) = if 2 * j + 1 < edges.len() {
                    (edges[2 * j], edges[2 * j + 1])
                } else {
                    (edges[2 * j], edges[2 * j] + 4.0)
                };
                for i in 0..per_band {
                    let t = (i as f64 + 0.5) / per_band as f64;
                    let e = a + (b - a) * t;
                    if sys.near_pole(e) {
                        continue;
                    }
                    let nu = sys.nu_principal(e);
                    let k = sys.k_ell(e, nu).map_err(|e| e.to_string())?;
                    let oracle =
                        hill_monodromy_oracle(ell, e, 0.5).map_err(|e| e.to_string())?;
                    let d = folded_distance(k.re, oracle.k_oracle.re, period);
                    worst = worst.max(d);
                    if d > 1e-6 {
                        return Err(format!("ell={ell} E={e}: |dk| = {d:e}"));
                    }
                }
            }
            // gap samples are evanescent
            for j in 0..(edges.len() - 1) / 2 {
                let gap_mid = 0.5 * (edges[2 * j + 1] + edges[2 * j + 2]);
                if sys.near_pole(gap_mid) {
                    continue;
                }
                let nu = sys.nu_principal(gap_mid);
                let k = sys.k_ell(gap_mid, nu).map_err(|e| e.to_string())?;
                if k.im.abs() <= 1e-6 {
                    return Err(format!("gap sample at {gap_mid} not evanescent"));
                }
            }
        }
        Ok(format!("max |k - k_oracle| = {worst:.3e} over {per_band}/band samples"))
    };
    outcome(7, "dispersion-oracle", run())
}

/// Criterion 8: `k ~ sqrt(E)` at `E = 1e4`.
pub fn check_asymptotics() -> CheckReport {
    let run = || -> Result<String, String> {
        let m = Rat::frac(1, 2);
        let e = 1.0e4;
        let mut ratios = Vec::new();
        for ell in 1..=3u32 {
            let sys = LameSystem::new(ell, &m).map_err(|e| e.to_string())?;
            let nu = sys.nu_principal(e);
            let k = sys.k_ell(e, nu).map_err(|e| e.to_string())?;
            let ratio = k.re.abs() / e.sqrt();
            if !(0.99..=1.01).contains(&ratio) {
                return Err(format!("ell={ell}: k/sqrt(E) = {ratio}"));
            }
            ratios.push(format!("{ratio:.6}"));
        }
        Ok(format!("k/sqrt(E) at E=1e4: {}", ratios.join(", ")))
    };
    outcome(8, "asymptotics", run())
}

/// Criterion 9: the hyperelliptic-to-elliptic reduction, numerically and
/// exactly.
pub fn check_reduction() -> CheckReport {
    let run = || -> Result<String, String> {
        for ell in 1..=8u32 {
            let red = reduction_polynomial(ell).map_err(|e| e.to_string())?;
            let w = Rat::frac((ell * (ell + 1)) as i64, 4);
            if red.p != red.p_hat.scale(&w) {
                return Err(format!("prefactor l(l+1)/4 fails at ell={ell}"));
            }
            if red.p_hat.degree(Var::B) != ell as usize - 1
                || !red
                    .p_hat
                    .leading_coeff(Var::B)
                    .as_constant()
                    .map(|c| c.is_one())
                    .unwrap_or(false)
            {
                return Err(format!("P_hat not monic of degree l-1 at ell={ell}"));
            }
        }
        let mut details = Vec::new();
        for (ell, lo, hi) in [(2u32, 1.9, 2.4), (3, 1.5, 3.4)] {
            let c = reduction_identity(ell, &Rat::one(), &Rat::zero(), lo, hi)
                .map_err(|e| e.to_string())?;
            let d = (c.lhs - c.rhs).abs();
            if d > 1e-8 {
                return Err(format!("ell={ell}: sides differ by {d:e}"));
            }
            details.push(format!("ell={ell}: |diff| = {d:.2e}"));
        }
        Ok(format!("P_hat exact to ell=8; integral identity: {}", details.join("; ")))
    };
    outcome(9, "reduction", run())
}

/// Criterion 10: the double-critical-point locus of the degree-4 covering.
pub fn check_branch_degeneracy() -> CheckReport {
    let run = || -> Result<String, String> {
        let j4 = branch_degeneracy(4).map_err(|e| e.to_string())?;
        let root = linear_root(&j4).ok_or("degree-4 condition is not linear")?;
        if root != Rat::frac(-2500, 12879) {
            return Err(format!("J = {root}, expected -2500/12879"));
        }
        // companion facts: empty locus at ell = 2, J = 0 at ell = 3
        if branch_degeneracy(2).map_err(|e| e.to_string())?.degree() != 0 {
            return Err("ell=2 locus should be empty".into());
        }
        let j3 = branch_degeneracy(3).map_err(|e| e.to_string())?;
        if linear_root(&j3) != Some(Rat::zero()) {
            return Err("ell=3 locus should be J = 0".into());
        }
        Ok("J = -2500/12879 exactly at ell = 4".into())
    };
    outcome(10, "branch-degeneracy", run())
}

/// Runs the full suite in criterion order.
pub fn run_all() -> Vec<CheckReport> {
    vec![
        check_golden_tables(),
        check_degree_laws(),
        check_covering_consistency(8),
        check_nu_squared(),
        check_cohn_properties(),
        check_jacobi_spectral(),
        check_dispersion_oracle(&[1, 2, 3], 50),
        check_asymptotics(),
        check_reduction(),
        check_branch_degeneracy(),
    ]
}

/// Runs one named check (the names double as CLI arguments).
pub fn run_named(name: &str, ell: Option<u32>) -> Option<CheckReport> {
    match name {
        "golden-tables" | "tables" => Some(check_golden_tables()),
        "degree-laws" => Some(check_degree_laws()),
        "gamma-independence" | "covering-consistency" | "curve-identity"
        | "covering-degree" => Some(check_covering_consistency(ell.unwrap_or(8))),
        "nu-squared" => Some(check_nu_squared()),
        "cohn" | "cohn-properties" => Some(check_cohn_properties()),
        "jacobi" | "jacobi-spectral" => Some(check_jacobi_spectral()),
        "dispersion-oracle" => Some(check_dispersion_oracle(
            &ell.map(|l| vec![l]).unwrap_or_else(|| vec![1, 2, 3]),
            50,
        )),
        "asymptotics" => Some(check_asymptotics()),
        "reduction" => Some(check_reduction()),
        "branch-degeneracy" => Some(check_branch_degeneracy()),
        _ => None,
    }
}
