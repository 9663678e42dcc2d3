//! Deterministic output formatting: fixed float format, stable JSON term
//! order (inherited from the graded-lex serialization), CSV assembly.

use lame_core::covering::RatFunc;
use lame_core::schema::{self, PolyJson, RatFuncJson};
use lame_core::Result as CoreResult;
use lame_core::MPoly;

/// `%.12e`-style formatting: fixed 12-digit mantissa, signed two-digit
/// exponent; identical across runs for identical input.
pub fn fmt_e(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{x:.12e}");
    let (mant, exp) = s.split_once('e').expect("exponent form");
    let e: i32 = exp.parse().expect("exponent digits");
    format!("{}e{}{:02}", mant, if e < 0 { '-' } else { '+' }, e.abs())
}

pub fn poly_json(p: &MPoly) -> CoreResult<PolyJson> {
    schema::spectral_poly_to_json(p)
}

pub fn ratfunc_json(rf: &RatFunc) -> CoreResult<RatFuncJson> {
    Ok(RatFuncJson {
        num: schema::spectral_poly_to_json(&rf.num)?,
        den: schema::spectral_poly_to_json(&rf.den)?,
    })
}

/// Text rendering of a polynomial row, `name = terms`.
pub fn poly_text(name: &str, p: &MPoly) -> String {
    format!("{name} = {p}")
}
