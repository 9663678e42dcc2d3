//! JSON interchange schema for polynomials and rational functions.
//!
//! A polynomial in the spectral-family ring serializes as
//! `{"vars": ["B","g2","g3","e"], "terms": [{"coeff": "num/den",
//! "pows": [i,j,k,l]}, ...]}` with the terms in graded-lex order. The same
//! shape with a different `vars` list carries Jacobi-form (`E`, `m`) and
//! Klein-invariant (`J`) polynomials.

use crate::error::{Error, Result};
use crate::mpoly::{MPoly, Mono, Var};
use crate::rational::Rat;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TermJson {
    pub coeff: String,
    pub pows: Vec<u16>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RatFuncJson {
    pub num: PolyJson,
    pub den: PolyJson,
}

/// Default variable set of the spectral-family ring.
pub const SPECTRAL_VARS: [Var; 4] = [Var::B, Var::G2, Var::G3, Var::E];

fn var_by_name(name: &str) -> Option<Var> {
    Var::ALL.into_iter().find(|v| v.name() == name)
}

/// Serialize over an explicit variable list; every variable the polynomial
/// actually uses must be listed.
pub fn poly_to_json(p: &MPoly, vars: &[Var]) -> Result<PolyJson> {
    for v in Var::ALL {
        if p.uses_var(v) && !vars.contains(&v) {
            return Err(Error::UnsupportedVariables);
        }
    }
    let mut terms: Vec<(Mono, TermJson)> = p
        .terms()
        .map(|(m, c)| {
            (
                *m,
                TermJson {
                    coeff: c.to_string(),
                    pows: vars.iter().map(|&v| m.exp(v)).collect(),
                },
            )
        })
        .collect();
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(PolyJson {
        vars: vars.iter().map(|v| v.name().to_string()).collect(),
        terms: terms.into_iter().map(|(_, t)| t).collect(),
    })
}

pub fn poly_from_json(j: &PolyJson) -> Result<MPoly> {
    let vars: Vec<Var> = j
        .vars
        .iter()
        .map(|n| var_by_name(n).ok_or(Error::UnsupportedVariables))
        .collect::<Result<_>>()?;
    let mut p = MPoly::zero();
    for t in &j.terms {
        if t.pows.len() != vars.len() {
            return Err(Error::UnsupportedVariables);
        }
        let c = Rat::from_str(&t.coeff).map_err(|_| Error::UnsupportedVariables)?;
        let mut m = Mono::unit();
        for (v, &pow) in vars.iter().zip(&t.pows) {
            m.0[*v as usize] += pow;
        }
        p.insert_term(m, c);
    }
    Ok(p)
}

pub fn spectral_poly_to_json(p: &MPoly) -> Result<PolyJson> {
    poly_to_json(p, &SPECTRAL_VARS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::{b, e_sym, g2, g3};

    #[test]
    fn round_trip_and_term_order() {
        let p = b()
            .pow(3)
            .sub(&g2().mul(&b()).scale(&Rat::from_int(52)))
            .add(&g3().scale(&Rat::from_int(560)))
            .add(&e_sym().scale(&Rat::frac(-3, 2)));
        let j = spectral_poly_to_json(&p).unwrap();
        // graded-lex: B^3 has the highest degree, constant-degree-1 terms last.
        assert_eq!(j.terms.last().unwrap().pows, vec![3, 0, 0, 0]);
        assert_eq!(j.vars, vec!["B", "g2", "g3", "e"]);
        let q = poly_from_json(&j).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rejects_out_of_schema_variables() {
        let p = MPoly::var(Var::Kappa);
        assert!(spectral_poly_to_json(&p).is_err());
    }
}
