//! Command-line front end: dataset generation, verification runs, and
//! machine-readable reports for the partner-potential family.
//!
//! Exit-code contract: 0 success, 1 verification/convergence failure,
//! 2 usage or domain error.

pub mod commands;
pub mod figures;
pub mod output;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

/// Errors mapped onto the exit-code contract.
#[derive(Debug)]
pub enum CliError {
    /// Invalid usage or parameter domain (exit 2).
    Usage(String),
    /// Verification, convergence, or I/O failure (exit 1).
    Failed(String),
}

impl From<partnerpot::Error> for CliError {
    fn from(e: partnerpot::Error) -> Self {
        match e {
            partnerpot::Error::Domain(_) | partnerpot::Error::Range(_) => {
                CliError::Usage(e.to_string())
            }
            partnerpot::Error::Convergence(_) | partnerpot::Error::Bracket(_) => {
                CliError::Failed(e.to_string())
            }
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failed(format!("i/o error: {e}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Sum,
    Closedform,
}

#[derive(Parser)]
#[command(
    name = "partnerpot",
    version,
    about = "Partner potentials of the harmonic oscillator: curve data, verification, and BEC critical temperatures"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Sample the potential V_{p,s} on a uniform grid (CSV: x,V)
    Potential {
        /// Depth parameter, p > -1
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        /// Rescaled skew, |s| < 1
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        s: f64,
        #[arg(long, default_value_t = -5.0, allow_negative_numbers = true)]
        xmin: f64,
        #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
        xmax: f64,
        /// Number of sample points (>= 2)
        #[arg(long, default_value_t = 1001)]
        points: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample normalized eigenfunctions (CSV: x,psi_k,...)
    Eigenstates {
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        s: f64,
        /// Level indices, -1..=10, comma-separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true,
              default_values_t = [-1i32, 0, 1])]
        k: Vec<i32>,
        #[arg(long, default_value_t = -5.0, allow_negative_numbers = true)]
        xmin: f64,
        #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
        xmax: f64,
        #[arg(long, default_value_t = 1001)]
        points: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification bundle against the grid oracle (JSON report)
    Verify {
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        s: f64,
        /// Number of levels to verify (1..=10)
        #[arg(long, default_value_t = 5)]
        levels: usize,
        /// Oracle half-width L (default 12; env ARTIFACT_GRID_L)
        #[arg(long = "grid-L")]
        grid_l: Option<f64>,
        /// Oracle interior points (default 6000; env ARTIFACT_GRID_N)
        #[arg(long = "grid-n")]
        grid_n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare quadrature of 1/φ² with the closed-form normalization (JSON)
    NormCheck {
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        s: f64,
        #[arg(long = "grid-L")]
        grid_l: Option<f64>,
        #[arg(long = "grid-n")]
        grid_n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Critical temperature of N bosons in the dimple trap (CSV: p,Tc,Tc_ratio)
    Bec {
        /// Atom number
        #[arg(long = "N")]
        n_atoms: u64,
        /// Dimple depth parameter (start of range when --p-max is given)
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        p: f64,
        /// Sweep end (inclusive); rows every --p-step
        #[arg(long = "p-max")]
        p_max: Option<f64>,
        #[arg(long = "p-step")]
        p_step: Option<f64>,
        #[arg(long, value_enum, default_value_t = Method::Closedform)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the builtin figure datasets (1..=5) into a directory
    Figures {
        /// Figure index, 1..=5
        which: u8,
        #[arg(long)]
        outdir: PathBuf,
        /// Override the depth parameter of figures 1-4 (marks files custom)
        #[arg(long, allow_negative_numbers = true)]
        p: Option<f64>,
        /// Override the atom number of figure 5 (marks files custom)
        #[arg(long = "N")]
        n_atoms: Option<u64>,
    },
}

fn require_csv(format: Format) -> Result<(), CliError> {
    if format == Format::Json {
        return Err(CliError::Usage(
            "curve data is CSV-only; JSON is reserved for verification reports".into(),
        ));
    }
    Ok(())
}

fn require_json(format: Format) -> Result<(), CliError> {
    if format == Format::Csv {
        return Err(CliError::Usage("verification reports are JSON-only".into()));
    }
    Ok(())
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Potential {
            p,
            s,
            xmin,
            xmax,
            points,
            format,
            out,
        } => {
            require_csv(format)?;
            commands::potential(p, s, xmin, xmax, points, out.as_deref())
        }
        Command::Eigenstates {
            p,
            s,
            k,
            xmin,
            xmax,
            points,
            format,
            out,
        } => {
            require_csv(format)?;
            commands::eigenstates(p, s, &k, xmin, xmax, points, out.as_deref())
        }
        Command::Verify {
            p,
            s,
            levels,
            grid_l,
            grid_n,
            format,
            out,
        } => {
            require_json(format)?;
            commands::verify(p, s, levels, grid_l, grid_n, out.as_deref())
        }
        Command::NormCheck {
            p,
            s,
            grid_l,
            grid_n,
            format,
            out,
        } => {
            require_json(format)?;
            commands::norm_check(p, s, grid_l, grid_n, out.as_deref())
        }
        Command::Bec {
            n_atoms,
            p,
            p_max,
            p_step,
            method,
            format,
            out,
        } => {
            require_csv(format)?;
            commands::bec(n_atoms, p, p_max, p_step, method, out.as_deref())
        }
        Command::Figures {
            which,
            outdir,
            p,
            n_atoms,
        } => figures::emit_figure(which, &outdir, p, n_atoms).map(|_| ()),
    }
}
