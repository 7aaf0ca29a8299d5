//! `ratassoc`: build, inspect and verify rational associahedra from the command line.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ratassoc::homology::Field;
use ratassoc::{Caps, CoprimePair, Error};

#[derive(Parser, Debug)]
#[command(name = "ratassoc", version, about = "Rational associahedra: build, collapse, verify")]
struct Cli {
    /// Largest number of faces any complex may have.
    #[arg(long, global = true, env = "RATASSOC_MAX_FACES", default_value_t = 10_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_faces: u64,

    /// Largest number of Dyck paths that may be enumerated.
    #[arg(long, global = true, env = "RATASSOC_MAX_PATHS", default_value_t = 10_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_paths: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct PairArgs {
    /// Smaller element of the coprime pair.
    #[arg(long)]
    a: u32,
    /// Larger element of the coprime pair; the polygon has boundary points 0..=b.
    #[arg(long)]
    b: u32,
}

impl PairArgs {
    fn pair(self) -> Result<CoprimePair, Error> {
        CoprimePair::new(self.a, self.b)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Dot,
    Svg,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum ModelArg {
    Ass,
    Hat,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum FieldArg {
    Gf2,
    Q,
}

impl From<FieldArg> for Field {
    fn from(f: FieldArg) -> Self {
        match f {
            FieldArg::Gf2 => Field::Gf2,
            FieldArg::Q => Field::Rational,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a complex and print its facets (or all faces).
    Build {
        #[command(flatten)]
        pair: PairArgs,
        /// Lattice-path model (ass) or the full noncrossing model (hat).
        #[arg(long, value_enum, default_value = "ass")]
        model: ModelArg,
        /// Include every face, not only the facets.
        #[arg(long)]
        faces: bool,
        /// Output format.
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// f- and h-vectors, compared with the Kirkman and Narayana formulas for the lattice-path model.
    Fvector {
        #[command(flatten)]
        pair: PairArgs,
        /// Lattice-path model (ass) or the full noncrossing model (hat).
        #[arg(long, value_enum, default_value = "ass")]
        model: ModelArg,
        /// Output format.
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Decide whether a noncrossing set of admissible diagonals is a face of the lattice-path model.
    Membership {
        #[command(flatten)]
        pair: PairArgs,
        /// Comma-separated diagonals, e.g. "5-7,2-4,0-5,0-4".
        #[arg(long, allow_hyphen_values = true)]
        face: String,
        /// Output format.
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The obstruction graph.
    Obstruction {
        #[command(flatten)]
        pair: PairArgs,
        /// Only the component whose edges share this larger endpoint.
        #[arg(long)]
        component: Option<usize>,
        /// Output format.
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Compute the collapse certificate from the noncrossing model onto the lattice-path model.
    Collapse {
        #[command(flatten)]
        pair: PairArgs,
        /// Where to write the certificate; "-" for standard output.
        #[arg(long, default_value = "-")]
        emit: PathBuf,
    },
    /// Replay a certificate against freshly built complexes.
    Verify {
        /// Certificate file; "-" for standard input.
        #[arg(long)]
        cert: PathBuf,
    },
    /// Reduced Betti numbers.
    Homology {
        #[command(flatten)]
        pair: PairArgs,
        /// Coefficient field.
        #[arg(long, value_enum, default_value = "gf2")]
        field: FieldArg,
        /// Lattice-path model (ass) or the full noncrossing model (hat).
        #[arg(long, value_enum, default_value = "ass")]
        model: ModelArg,
        /// Output format.
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Complementary admissible sets and rank duality for every a coprime to b.
    Duality {
        /// Polygon size; every a < b coprime to b is checked.
        #[arg(long)]
        b: u32,
        /// Output format.
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Draw a face (default: every admissible diagonal) as an SVG chord diagram.
    Render {
        #[command(flatten)]
        pair: PairArgs,
        /// Comma-separated diagonals to draw solid.
        #[arg(long, allow_hyphen_values = true)]
        face: Option<String>,
    },
}

/// Failures that map to exit codes.
#[derive(Debug)]
pub enum Failure {
    /// A check ran and came out negative.
    Verification(String),
    Usage(String),
    Caps(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Caps(_) => 3,
            Failure::Io(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Usage(m) | Failure::Caps(m) | Failure::Io(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let text = e.to_string();
        match e {
            Error::NotCoprime { .. }
            | Error::BadOrder { .. }
            | Error::InvalidDiagonal { .. }
            | Error::InvalidPath(_)
            | Error::NotAFaceOfHat(_)
            | Error::IndexOutOfRange { .. } => Failure::Usage(text),
            Error::CapExceeded { .. } | Error::GroundTooLarge(_) => Failure::Caps(text),
            Error::Parse(_) => Failure::Io(text),
            _ => Failure::Verification(text),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps { max_paths: cli.max_paths as u128, max_faces: cli.max_faces as usize };
    match commands::run(cli.command, &caps) {
        Ok(output) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(output.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(4);
            }
            ExitCode::SUCCESS
        }
        Err((output, failure)) => {
            if let Some(out) = output {
                let _ = std::io::stdout().write_all(out.as_bytes());
            }
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
