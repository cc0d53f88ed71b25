//! `cubegrowth`: growth series and coefficient checks for cube complexes.
//!
//! Exit status: 0 when every requested identity passes, 1 when one fails, 2 on
//! unreadable or malformed input, 3 when a precondition does not hold.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "cubegrowth", version, about = "Growth series of CAT(0) cube complexes in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Args, Debug)]
pub struct ComplexArgs {
    /// Cube complex file (`cube v0 v1 ...` lines).
    pub file: PathBuf,
    /// Restrict to this vertex.
    #[arg(long)]
    pub base: Option<String>,
}

#[derive(Args, Debug)]
pub struct TorusArgs {
    /// Dimension n of the torus.
    #[arg(long)]
    pub dim: usize,
    /// Subdivision k ≥ 2 of each circle factor.
    #[arg(long)]
    pub subdiv: usize,
    /// Ball radius; defaults to the smallest one in which every lift is star-complete.
    #[arg(long)]
    pub radius: Option<usize>,
}

#[derive(Args, Debug)]
pub struct BallArgs {
    /// Product graph file (`gen a order=2|inf`, `edge a b`) or, for racg-ball, a
    /// nerve file (`facet ...`).
    pub file: PathBuf,
    #[arg(long)]
    pub radius: usize,
    /// Uniform truncation degree; by default each row goes to its own safe degree.
    #[arg(long)]
    pub degree: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Structural checks: gluing, nonpositive curvature, CAT(0), Euler characteristic.
    Check(ComplexArgs),
    /// f-polynomial of a simplicial complex, or of each vertex link of a cube complex.
    Fpoly {
        file: PathBuf,
        #[arg(long)]
        base: Option<String>,
    },
    /// Coefficients c_xy at a vertex, with the linear-system oracle as a cross-check.
    Coeffs {
        file: PathBuf,
        #[arg(long)]
        base: String,
    },
    /// Sum of the coefficients at each vertex against f_x(-t/(1+t)).
    SumCoeffs(ComplexArgs),
    /// Growth series t^d(x,y) of a finite complex.
    Growth(ComplexArgs),
    /// Exact check that the coefficient matrix inverts the growth matrix.
    Verify { file: PathBuf },
    /// Closed-form Davis growth series of a flag nerve against ball counts.
    Davis {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        degree: usize,
        /// Ball radius; defaults to the degree.
        #[arg(long)]
        radius: Option<usize>,
    },
    /// Exact inversion for Z^n acting on the k-subdivided n-torus cover.
    Torus(TorusArgs),
    /// Truncated inversion on a ball of a right-angled Artin group.
    RaagBall(BallArgs),
    /// Truncated inversion on a ball of a right-angled Coxeter group.
    RacgBall(BallArgs),
    /// Reciprocity r(1/t) = (-1)^n r(t): of a Davis growth series (nerve file) or of
    /// the torus matrices (--dim, --subdiv).
    Reciprocity {
        file: Option<PathBuf>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        subdiv: Option<usize>,
    },
    /// Trace of c̄ at t = √-1 against the Euler characteristic of the quotient.
    EulerTrace {
        file: Option<PathBuf>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        subdiv: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.verb, cli.format) {
        Ok((code, text)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
