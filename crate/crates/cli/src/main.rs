use clap::{Parser, Subcommand};
use lame_cli::commands::{
    cmd_bandedges, cmd_cohn, cmd_covering, cmd_dispersion, cmd_reduce, cmd_tables,
    cmd_verify, OutFormat,
};
use lame_core::rational::Rat;
use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;

/// Spectral polynomials, covering maps and dispersion relations of the
/// integer-degree Lame equation, in exact arithmetic with a numeric layer
/// cross-checked against direct Floquet integration.
#[derive(Parser)]
#[command(name = "lame", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit polynomial family rows (spectral, lame, hermite, twisted,
    /// theta, reduction, cohn, full).
    Tables {
        #[arg(long)]
        family: String,
        #[arg(long)]
        ell: u32,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<String>,
        /// Allow symbolic degrees beyond the default budget of 10.
        #[arg(long)]
        force: bool,
    },
    /// Covering map and auxiliary data as JSON rational functions.
    Covering {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        force: bool,
    },
    /// Cohn polynomials in the Klein invariant, factored like the tables.
    Cohn {
        #[arg(long)]
        ell: u32,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Band edges at a rational modulus, 12 significant digits.
    Bandedges {
        #[arg(long)]
        ell: u32,
        /// Modulus as `p/q` (exact path) or a decimal.
        #[arg(long)]
        m: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Dispersion scan as CSV: E, nu, k, folded k, band index, flags.
    Dispersion {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        m: String,
        #[arg(long)]
        emin: f64,
        #[arg(long)]
        emax: f64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long)]
        out: Option<String>,
        /// Disable the data-parallel scan path.
        #[arg(long)]
        sequential: bool,
    },
    /// Reduction polynomial plus the numeric two-sided integral identity.
    Reduce {
        #[arg(long)]
        ell: u32,
        #[arg(long, default_value = "1/2")]
        m: String,
        #[arg(long)]
        blo: Option<f64>,
        #[arg(long)]
        bhi: Option<f64>,
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        force: bool,
    },
    /// Run the verification suite (all criteria, or one named check).
    Verify {
        #[arg(long)]
        check: Option<String>,
        #[arg(long)]
        ell: Option<u32>,
        /// Accepted for interface parity; the suite pins m = 1/2 anyway.
        #[arg(long)]
        m: Option<String>,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<String>,
    },
}

fn parse_format(s: &str) -> Result<OutFormat, String> {
    match s {
        "json" => Ok(OutFormat::Json),
        "text" => Ok(OutFormat::Text),
        other => Err(format!("unknown format `{other}` (use json or text)")),
    }
}

fn parse_m(s: &str) -> Result<Rat, String> {
    Rat::from_str(s).map_err(|e| format!("cannot parse modulus `{s}`: {e}"))
}

fn deliver(out: Option<&str>, body: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, body).map_err(|e| e.to_string()),
        None => {
            std::io::stdout()
                .write_all(body.as_bytes())
                .map_err(|e| e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<(String, Option<String>, bool), String> = match cli.cmd {
        Cmd::Tables { family, ell, format, out, force } => parse_format(&format)
            .and_then(|f| cmd_tables(&family, ell, f, force))
            .map(|body| (body, out, true)),
        Cmd::Covering { ell, out, force } => {
            cmd_covering(ell, force).map(|body| (body, out, true))
        }
        Cmd::Cohn { ell, format, out } => parse_format(&format)
            .and_then(|f| cmd_cohn(ell, f))
            .map(|body| (body, out, true)),
        Cmd::Bandedges { ell, m, out } => parse_m(&m)
            .and_then(|m| cmd_bandedges(ell, &m))
            .map(|body| (body, out, true)),
        Cmd::Dispersion { ell, m, emin, emax, samples, out, sequential } => parse_m(&m)
            .and_then(|m| cmd_dispersion(ell, &m, emin, emax, samples, sequential))
            .map(|body| (body, out, true)),
        Cmd::Reduce { ell, m, blo, bhi, out, force } => parse_m(&m)
            .and_then(|m| cmd_reduce(ell, &m, blo, bhi, force))
            .map(|body| (body, out, true)),
        Cmd::Verify { check, ell, m: _, format, out } => parse_format(&format).map(|f| {
            let (body, ok) = cmd_verify(check.as_deref(), ell, f);
            (body, out, ok)
        }),
    };
    match result {
        Ok((body, out, ok)) => {
            if let Err(e) = deliver(out.as_deref(), &body) {
                eprintln!("error: {e}");
                return ExitCode::FAILURE;
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
