mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Repr {
    Vrep,
    Hrep,
}

/// Exact analysis of generalized-lush (GL) polyhedral normed spaces.
///
/// Exit status: 0 when the verdict is positive or the command succeeded,
/// 1 when the verdict is negative, 2 on input or usage errors.
#[derive(Parser, Debug)]
#[command(name = "glspace", version)]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Check facets in parallel. Output is unaffected.
    #[arg(long, global = true)]
    pub parallel: bool,
    /// Seed for `gen` and sampling probes.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Refuse inputs of larger dimension.
    #[arg(long, default_value_t = 4, global = true)]
    pub max_dim: usize,
    /// Append wall-clock time to the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether every facet of the unit ball is plump.
    CheckGl { file: PathBuf },
    /// Classify a planar unit ball: parallelogram, affine-regular hexagon, or not GL.
    #[command(name = "classify-2d")]
    Classify2d { file: PathBuf },
    /// Decide whether an absolute norm is GL-monotone.
    CheckGlm {
        file: PathBuf,
        /// Run the full vertex enumeration even when the coordinate test fails.
        #[arg(long)]
        audit: bool,
    },
    /// Decide whether an absolute norm is GL-respecting.
    CheckGlr { file: PathBuf },
    /// Build the sum of component spaces under an absolute outer norm.
    BuildSum {
        outer: PathBuf,
        #[arg(required = true)]
        components: Vec<PathBuf>,
        /// Write the sum's unit ball here.
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Repr::Vrep)]
        repr: Repr,
        /// Also decide whether the sum is GL.
        #[arg(long)]
        check: bool,
    },
    /// Run the lemma checks: lower bound, difference body, volume bound,
    /// edge census (planar) and GL-monotone consistency (absolute norms).
    Audit { file: PathBuf },
    /// Generate a polytope: a fixture name, `polygon:<k>`, `polytope3:<k>`,
    /// `image:<fixture>` or `absolute:<n>`.
    Gen {
        spec: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Repr::Vrep)]
        repr: Repr,
    },
    /// Distance from a point to a facet, against the plumpness target `1 − x*(y)`.
    Distance {
        file: PathBuf,
        /// Coordinates, e.g. `1,0` or `"1 -1/2"`.
        point: String,
        /// Facet index as listed by `check-gl`.
        facet: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
