//! Command-line interface. Every verb reads an arrangement document, given
//! as a file path or as a named builtin, and writes a structured report
//! with stable key ordering to standard output.
//!
//! Exit codes: 0 success, 1 invariant failure, 2 input error, 3 resource
//! limit exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tropcell::complex::{bounded_subcomplex, enumerate_cells, TropicalComplex};
use tropcell::doc::{load_document, render_document, ArrangementDocument};
use tropcell::mixed::MixedSubdivision;
use tropcell::pipeline::{face_poset_from_points, generate_random_generic, verify_all};
use tropcell::render::{render_arrangement_svg, render_mixed_svg};
use tropcell::report::{betti_report, cells_report, fvector_report, ideals_report, mixed_report};
use tropcell::{Error, FailureClass, Result};

const INPUT_HELP: &str = "Document path or builtin: running-example, nongeneric-example, \
cyclic N D, hypersimplex K M";

#[derive(Parser)]
#[command(
    name = "tropcell",
    version,
    about = "Cell decompositions of the tropical torus, their type and cotype ideals, \
minimal (co)cellular resolutions, and dual mixed subdivisions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every cell of the decomposition with dimension, types, and boundedness
    Cells {
        #[arg(required = true, help = INPUT_HELP)]
        input: Vec<String>,
    },
    /// List the cells of the bounded subcomplex
    Bounded {
        #[arg(required = true, help = INPUT_HELP)]
        input: Vec<String>,
    },
    /// Print the type and cotype ideals, fine and coarse
    Ideals {
        #[arg(required = true, help = INPUT_HELP)]
        input: Vec<String>,
    },
    /// Print Betti tables of the four minimal (co)cellular resolutions
    Betti {
        #[arg(required = true, help = INPUT_HELP)]
        input: Vec<String>,
    },
    /// Print f-vectors and Euler characteristics
    Fvector {
        #[arg(required = true, help = INPUT_HELP)]
        input: Vec<String>,
    },
    /// Print the dual mixed subdivision of the dilated simplex
    Mixed {
        #[arg(required = true, help = INPUT_HELP)]
        input: Vec<String>,
    },
    /// Run the face-poset pipeline and print the full report
    Faceposet {
        #[arg(required = true, help = INPUT_HELP)]
        input: Vec<String>,
    },
    /// Draw the decomposition, or the mixed subdivision, as SVG (d = 3 only)
    Render {
        #[arg(required = true, help = INPUT_HELP)]
        input: Vec<String>,
        /// Draw the dual mixed subdivision instead of the decomposition
        #[arg(long)]
        mixed: bool,
        /// Write the picture to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full invariant suite and report every check
    Verify {
        #[arg(required = true, help = INPUT_HELP)]
        input: Vec<String>,
    },
    /// Generate a random generic arrangement document
    Generate {
        /// Number of hyperplanes
        n: usize,
        /// Ambient coordinate count (the torus has dimension d−1)
        d: usize,
        /// Seed for the deterministic coordinate stream
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// Stable mapping from error classes to exit codes: bad input 2, resource
/// limits 3, everything that signals a violated invariant 1.
fn exit_code(e: &Error) -> u8 {
    match e.class() {
        FailureClass::InvariantViolation => 1,
        FailureClass::InvalidInput => 2,
        FailureClass::ResourceLimit => 3,
    }
}

fn load(input: &[String]) -> Result<(ArrangementDocument, TropicalComplex)> {
    let doc = load_document(input)?;
    let arr = doc.to_arrangement()?;
    let tc = enumerate_cells(&arr)?;
    Ok((doc, tc))
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Cells { input } => {
            let (_, tc) = load(&input)?;
            print!("{}", cells_report(&tc));
        }
        Command::Bounded { input } => {
            let (_, tc) = load(&input)?;
            print!("{}", cells_report(&bounded_subcomplex(&tc)));
        }
        Command::Ideals { input } => {
            let (_, tc) = load(&input)?;
            print!("{}", ideals_report(&tc)?);
        }
        Command::Betti { input } => {
            let (_, tc) = load(&input)?;
            print!("{}", betti_report(&tc)?);
        }
        Command::Fvector { input } => {
            let (_, tc) = load(&input)?;
            print!("{}", fvector_report(&tc));
        }
        Command::Mixed { input } => {
            let (_, tc) = load(&input)?;
            print!("{}", mixed_report(&tc)?);
        }
        Command::Faceposet { input } => {
            let doc = load_document(&input)?;
            print!("{}", face_poset_from_points(&doc)?.render());
        }
        Command::Render { input, mixed, out } => {
            let (_, tc) = load(&input)?;
            let svg = if mixed {
                render_mixed_svg(&MixedSubdivision::from_tropical_complex(&tc)?)?
            } else {
                render_arrangement_svg(&tc)?
            };
            match out {
                Some(path) => std::fs::write(path, svg)?,
                None => print!("{svg}"),
            }
        }
        Command::Verify { input } => {
            let doc = load_document(&input)?;
            let outcome = verify_all(&doc)?;
            print!("{}", outcome.render());
            if !outcome.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Generate { n, d, seed } => {
            let doc = generate_random_generic(n, d, seed)?;
            print!("{}", render_document(&doc));
        }
    }
    Ok(ExitCode::SUCCESS)
}
