//! Subcommand implementations. Every command renders its full output into a
//! string (deterministic byte-for-byte for a fixed configuration) which the
//! binary writes to stdout or a file.

use crate::output::{fmt_e, poly_json, poly_text, ratfunc_json};
use crate::verify;
use lame_core::cohn::{cohn_polynomial, factored_form, CohnKind};
use lame_core::covering::{reduction_polynomial, theorem_l};
use lame_core::jacobi::band_edges;
use lame_core::mpoly::{MPoly, Var};
use lame_core::rational::Rat;
use lame_core::spectral::{
    full_spectral, hermite_halphen, lame_polynomial, spectral_poly_i, spectral_poly_ii,
};
use lame_core::twisted::{theta_twisted_spectral, twisted_spectral, TwistedKind};
use lame_numerics::dispersion::{dispersion_scan, LameSystem, SampleFlag};
use lame_numerics::reduction::reduction_identity;
use lame_numerics::ExecMode;
use serde_json::json;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutFormat {
    Json,
    Text,
}

pub type CmdResult = Result<String, String>;

/// Symbolic work beyond this degree needs an explicit opt-in; the twisted
/// eliminations grow super-polynomially.
pub const SYMBOLIC_BUDGET: u32 = 10;

fn budget_check(ell: u32, force: bool, what: &str) -> Result<(), String> {
    if ell > SYMBOLIC_BUDGET && !force {
        return Err(format!(
            "{what} at ell = {ell} exceeds the default symbolic budget ({SYMBOLIC_BUDGET}); \
             pass --force to run it anyway"
        ));
    }
    Ok(())
}

pub fn cmd_tables(family: &str, ell: u32, format: OutFormat, force: bool) -> CmdResult {
    if ell < 1 {
        return Err("ell must be at least 1".into());
    }
    let err = |e: lame_core::Error| e.to_string();
    // (kind tag for the JSON schema, display name, polynomial)
    let mut rows: Vec<(&'static str, String, MPoly)> = Vec::new();
    match family {
        "spectral" => {
            rows.push(("type-I", format!("L_I_{ell}"), spectral_poly_i(ell).map_err(err)?.poly));
            rows.push((
                "type-II",
                format!("L_II_{ell}"),
                spectral_poly_ii(ell).map_err(err)?.poly,
            ));
        }
        "full" => {
            rows.push(("full", format!("L_{ell}"), full_spectral(ell).map_err(err)?.poly));
        }
        "lame" => {
            let b = MPoly::var(Var::B);
            let e = MPoly::var(Var::E);
            if ell >= 2 {
                rows.push((
                    "type-I",
                    format!("lame_I_{ell}"),
                    lame_polynomial(ell, false, &b, Some(&e)).map_err(err)?.polynomial(),
                ));
            }
            rows.push((
                "type-II",
                format!("lame_II_{ell}"),
                lame_polynomial(ell, true, &b, Some(&e)).map_err(err)?.polynomial(),
            ));
        }
        "hermite" => {
            rows.push(("hermite-halphen", format!("F_{ell}"), hermite_halphen(ell)));
        }
        "twisted" => {
            budget_check(ell, force, "twisted elimination")?;
            rows.push((
                "twisted-I",
                format!("Lt_I_{ell}"),
                twisted_spectral(ell, TwistedKind::I).map_err(err)?.poly,
            ));
            rows.push((
                "twisted-II",
                format!("Lt_II_{ell}"),
                twisted_spectral(ell, TwistedKind::II).map_err(err)?.poly,
            ));
        }
        "theta" => {
            budget_check(ell, force, "theta-twisted elimination")?;
            rows.push((
                "theta-twisted",
                format!("Ltheta_{ell}"),
                theta_twisted_spectral(ell).map_err(err)?.poly,
            ));
        }
        "reduction" => {
            budget_check(ell, force, "covering-map assembly")?;
            rows.push((
                "reduction",
                format!("P_hat_{ell}"),
                reduction_polynomial(ell).map_err(err)?.p_hat,
            ));
        }
        "cohn" => {
            let c1 = cohn_polynomial(ell, CohnKind::TypeI).map_err(err)?;
            let c2 = cohn_polynomial(ell, CohnKind::TypeII).map_err(err)?;
            return Ok(match format {
                OutFormat::Text => format!(
                    "cohn_I_{ell} = {}\ncohn_II_{ell} = {}\n",
                    factored_form(&c1.poly),
                    factored_form(&c2.poly)
                ),
                OutFormat::Json => {
                    let coeffs = |p: &lame_core::UPoly| -> Vec<String> {
                        p.coeffs.iter().map(|c| c.to_string()).collect()
                    };
                    let v = json!({
                        "ell": ell,
                        "type_I": {"coeffs_ascending": coeffs(&c1.poly),
                                    "factored": factored_form(&c1.poly)},
                        "type_II": {"coeffs_ascending": coeffs(&c2.poly),
                                     "factored": factored_form(&c2.poly)},
                    });
                    format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
                }
            });
        }
        other => return Err(format!("unknown table family `{other}`")),
    }
    match format {
        OutFormat::Text => {
            let mut out = String::new();
            for (_, name, p) in &rows {
                let _ = writeln!(out, "{}", poly_text(name, p));
            }
            Ok(out)
        }
        OutFormat::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(kind, name, p)| {
                    let pj = poly_json(p).map_err(|e| e.to_string())?;
                    Ok(json!({"kind": kind, "name": name, "ell": ell, "poly": pj}))
                })
                .collect::<Result<_, String>>()?;
            Ok(format!("{}\n", serde_json::to_string_pretty(&items).unwrap()))
        }
    }
}

pub fn cmd_covering(ell: u32, force: bool) -> CmdResult {
    budget_check(ell, force, "covering-map assembly")?;
    let cm = theorem_l(ell).map_err(|e| e.to_string())?;
    let red = reduction_polynomial(ell).map_err(|e| e.to_string())?;
    let v = json!({
        "ell": ell,
        "x0": ratfunc_json(&cm.x0).map_err(|e| e.to_string())?,
        "y0_over_nu": ratfunc_json(&cm.y0_over_nu).map_err(|e| e.to_string())?,
        "kappa_over_nu": ratfunc_json(&cm.kappa_over_nu).map_err(|e| e.to_string())?,
        "p_hat": poly_json(&red.p_hat).map_err(|e| e.to_string())?,
    });
    Ok(format!("{}\n", serde_json::to_string_pretty(&v).unwrap()))
}

pub fn cmd_cohn(ell: u32, format: OutFormat) -> CmdResult {
    cmd_tables("cohn", ell, format, false)
}

pub fn cmd_bandedges(ell: u32, m: &Rat) -> CmdResult {
    let edges = band_edges(ell, m).map_err(|e| e.to_string())?;
    let mut out = String::new();
    for (i, e) in edges.iter().enumerate() {
        let _ = writeln!(out, "E_{i} = {}", fmt_e(*e));
    }
    Ok(out)
}

pub fn cmd_dispersion(
    ell: u32,
    m: &Rat,
    emin: f64,
    emax: f64,
    samples: usize,
    sequential: bool,
) -> CmdResult {
    if samples < 2 || emax <= emin {
        return Err("need at least 2 samples and emax > emin".into());
    }
    let sys = LameSystem::new(ell, m).map_err(|e| e.to_string())?;
    let mode = if sequential { ExecMode::Sequential } else { ExecMode::auto() };
    let scan = dispersion_scan(&sys, emin, emax, samples, mode);
    let mut out = String::from("E,nu_re,nu_im,k_re,k_im,k_folded,band_index,flags\n");
    for s in &scan {
        let band = s.band_index.map(|b| b.to_string()).unwrap_or_default();
        let flag = match s.flag {
            SampleFlag::Ok => "ok",
            SampleFlag::NearPole => "near-pole",
            SampleFlag::NearEdge => "near-edge",
            SampleFlag::BranchError => "branch-error",
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            fmt_e(s.e),
            fmt_e(s.nu.re),
            fmt_e(s.nu.im),
            fmt_e(s.k.re),
            fmt_e(s.k.im),
            fmt_e(s.k_folded),
            band,
            flag
        );
    }
    Ok(out)
}

pub fn cmd_reduce(
    ell: u32,
    m: &Rat,
    b_lo: Option<f64>,
    b_hi: Option<f64>,
    force: bool,
) -> CmdResult {
    budget_check(ell, force, "covering-map assembly")?;
    let params = lame_core::moduli::params_from_m(m).map_err(|e| e.to_string())?;
    let red = reduction_polynomial(ell).map_err(|e| e.to_string())?;
    let (lo, hi) = match (b_lo, b_hi, ell) {
        (Some(a), Some(b), _) => (a, b),
        (None, None, 2) => (1.9, 2.4),
        (None, None, 3) => (1.5, 3.4),
        _ => return Err("pass --blo and --bhi for this degree".into()),
    };
    let check =
        reduction_identity(ell, &params.g2, &params.g3, lo, hi).map_err(|e| e.to_string())?;
    let v = json!({
        "ell": ell,
        "m": m.to_string(),
        "p_hat": poly_json(&red.p_hat).map_err(|e| e.to_string())?,
        "segment": [fmt_e(lo), fmt_e(hi)],
        "spectral_side": fmt_e(check.lhs),
        "elliptic_side": fmt_e(check.rhs),
        "difference": fmt_e((check.lhs - check.rhs).abs()),
    });
    Ok(format!("{}\n", serde_json::to_string_pretty(&v).unwrap()))
}

/// Returns `(rendered report, all_passed)`.
pub fn cmd_verify(check: Option<&str>, ell: Option<u32>, format: OutFormat) -> (String, bool) {
    let reports = match check {
        Some(name) => match verify::run_named(name, ell) {
            Some(r) => vec![r],
            None => {
                return (format!("unknown check `{name}`\n"), false);
            }
        },
        None => verify::run_all(),
    };
    let ok = reports.iter().all(|r| r.passed);
    let out = match format {
        OutFormat::Json => {
            format!("{}\n", serde_json::to_string_pretty(&reports).unwrap())
        }
        OutFormat::Text => {
            let mut out = String::new();
            for r in &reports {
                let _ = writeln!(
                    out,
                    "criterion {:2} [{}]: {} - {}",
                    r.criterion,
                    r.name,
                    if r.passed { "PASS" } else { "FAIL" },
                    r.detail
                );
            }
            out
        }
    };
    (out, ok)
}
