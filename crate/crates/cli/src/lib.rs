//! Command-line front end: every analysis as a subcommand printing
//! `key = value` lines.
//!
//! Exit codes: 0 success, 1 internal consistency failure, 2 unreadable or
//! invalid input, 3 only out-of-scope verdicts under `--strict`, 4 a seeded
//! search exhausted its budget.

mod commands;
mod input;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use commands::{Mode, RepTask};
use input::{resolve_seed, Target};
pub use report::exit;
use report::{Outcome, Report};

pub const DEFAULT_TRIALS: usize = 16;

#[derive(Parser)]
#[command(name = "cy2", version, about = "Dimensions, smoothness and explicit representations for preprojective and surface group algebras")]
struct Cli {
    /// Seed for randomized constructions; falls back to $CY2_SEED, then 0.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Random vectors tried by cyclic-vector searches.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    /// Exit with code 3 when every verdict is OutOfScope.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TargetArgs {
    /// Quiver file, or `builtin:<family>[:<k>]`.
    #[arg(short = 'q', long = "quiver")]
    quiver: Option<String>,
    /// Dimension vector: `label=value ...` or a positional list.
    #[arg(long, num_args = 1..)]
    dim: Vec<String>,
    /// Surface group algebra, `g=<g> n=<n>`.
    #[arg(long, num_args = 1..=2)]
    surface: Vec<String>,
}

impl TargetArgs {
    fn target(&self) -> Result<Target, report::Fail> {
        let dim = (!self.dim.is_empty()).then(|| self.dim.join(" "));
        let surface = (!self.surface.is_empty()).then(|| self.surface.join(" "));
        Target::from_args(self.quiver.as_deref(), dim.as_deref(), surface.as_deref(), None)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Quiver file checks.
    Quiver {
        #[command(subcommand)]
        command: QuiverCommand,
    },
    /// Positive roots below a dimension vector.
    Roots {
        #[arg(short = 'q', long = "quiver")]
        quiver: String,
        #[arg(long, num_args = 1..)]
        below: Vec<String>,
    },
    /// Whether simple representations exist.
    Simples(TargetArgs),
    /// Dimensions of Rep, its quotient and Hilb.
    Dims(TargetArgs),
    /// Smoothness of the Nori-Hilbert scheme.
    Smooth(TargetArgs),
    /// Local quiver at a semisimple point.
    LocalQuiver {
        #[arg(short = 'q', long = "quiver")]
        quiver: String,
        /// `<vector>:<mult>[:distinct]`, repeatable.
        #[arg(long = "factor", required = true)]
        factors: Vec<String>,
    },
    /// A cyclic non-simple semisimple type.
    Witness(TargetArgs),
    /// Analyses of a representation file.
    Rep {
        #[command(subcommand)]
        command: RepCommand,
    },
    /// Constructions for surface group algebras.
    Surface {
        #[command(subcommand)]
        command: SurfaceCommand,
    },
    /// Dimension and smoothness table.
    PaperTable {
        /// Rows `surface g=<g> n=<n>` or `quiver <file> dim <vector>`.
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum QuiverCommand {
    Check {
        #[arg(short = 'q', long = "quiver")]
        quiver: String,
        #[arg(long, num_args = 1..)]
        dim: Vec<String>,
    },
}

#[derive(Subcommand)]
enum RepCommand {
    /// Check the defining relation.
    Verify { file: PathBuf },
    /// Tangent space dimension and the End identity.
    Tangent { file: PathBuf },
    /// Dimension of the endomorphism algebra.
    End { file: PathBuf },
    /// Dimensions of Ext^0, Ext^1, Ext^2.
    Profile { file: PathBuf },
    /// Cyclic vector search with certificate.
    Cyclic { file: PathBuf },
    /// Simplicity by span density.
    Simple { file: PathBuf },
}

#[derive(Subcommand)]
enum SurfaceCommand {
    /// A certified simple representation.
    MakeSimple {
        #[arg(long, num_args = 1..=2, required = true)]
        surface: Vec<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// A cyclic representation with two-sided annihilator.
    MakeTwosided {
        #[arg(long, num_args = 1..=2, required = true)]
        surface: Vec<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn dispatch(cli: &Cli, r: &mut Report) -> Outcome {
    match &cli.command {
        Command::Quiver {
            command: QuiverCommand::Check { quiver, dim },
        } => {
            let dim = (!dim.is_empty()).then(|| dim.join(" "));
            commands::quiver_check(r, quiver, dim.as_deref())
        }
        Command::Roots { quiver, below } => commands::roots(r, quiver, &below.join(" ")),
        Command::Simples(t) => commands::moduli(r, &t.target()?, Mode::Simples),
        Command::Dims(t) => commands::moduli(r, &t.target()?, Mode::Dims),
        Command::Smooth(t) => commands::moduli(r, &t.target()?, Mode::Smooth),
        Command::LocalQuiver { quiver, factors } => commands::local(r, quiver, factors),
        Command::Witness(t) => commands::witness(r, &t.target()?),
        Command::Rep { command } => {
            let (file, task) = match command {
                RepCommand::Verify { file } => (file, RepTask::Verify),
                RepCommand::Tangent { file } => (file, RepTask::Tangent),
                RepCommand::End { file } => (file, RepTask::End),
                RepCommand::Profile { file } => (file, RepTask::Profile),
                RepCommand::Simple { file } => (file, RepTask::Simple),
                RepCommand::Cyclic { file } => {
                    let (seed, source) = resolve_seed(cli.seed)?;
                    (
                        file,
                        RepTask::Cyclic {
                            seed,
                            source,
                            trials: cli.trials,
                        },
                    )
                }
            };
            commands::rep(r, file, task)
        }
        Command::Surface { command } => match command {
            SurfaceCommand::MakeSimple { surface, output } => {
                commands::make_simple(r, &surface.join(" "), resolve_seed(cli.seed)?, output.as_deref())
            }
            SurfaceCommand::MakeTwosided { surface, output } => {
                commands::make_two_sided(r, &surface.join(" "), output.as_deref())
            }
        },
        Command::PaperTable { input } => commands::paper_table(r, input.as_deref()),
    }
}

/// Runs the command line `args` (program name first), writing the report
/// to `out`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { exit::INPUT } else { exit::OK };
        }
    };
    let mut report = Report::default();
    let outcome = dispatch(&cli, &mut report);
    for line in report.lines() {
        let _ = writeln!(out, "{line}");
    }
    match outcome {
        Err(f) => {
            let _ = writeln!(out, "error = {}", f.message);
            f.code
        }
        Ok(()) if cli.strict && report.only_out_of_scope() => exit::OUT_OF_SCOPE,
        Ok(()) => exit::OK,
    }
}
