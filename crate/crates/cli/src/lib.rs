//! Command-line front end: spectral tables, covering maps, Cohn
//! polynomials, band edges, dispersion scans, the reduction identity, and
//! the one-shot verification suite.

pub mod commands;
pub mod output;
pub mod verify;
