//! The `tvk` command-line frontend: validation of category and modular
//! data, Turaev–Viro and Reshetikhin–Turaev invariants, manifest
//! verification of |M|_C = τ_{Z(C)}(M), and torus-space dimensions.

mod closed_form;
mod commands;
mod report;
mod source;

use std::time::Instant;

use clap::{Parser, Subcommand};

pub use closed_form::closed_form;
pub use commands::{export, shipped_files};
pub use report::{Check, Input, Metadata, RunReport, Scalar, Status};
pub use source::data_dir;

#[derive(Debug, Parser)]
#[command(name = "tvk", version, about = "State-sum and surgery invariants of 3-manifolds")]
pub struct Cli {
    /// Print the run report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for coloring enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Decimal places shown for approximate values.
    #[arg(long, global = true, default_value_t = 12)]
    pub digits: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load a category (and optionally modular data) and run every check.
    Validate { category: String, modular: Option<String> },
    /// Turaev–Viro invariant of a triangulation.
    Tv {
        category: String,
        triangulation: Option<String>,
        /// A builtin triangulation: s3, s3_2tet, s1xs2, t3, lens(p,q).
        #[arg(long)]
        builtin: Option<String>,
    },
    /// Reshetikhin–Turaev invariant of a surgery presentation.
    Rt { modular: String, surgery: String },
    /// Compare both invariants on every case of a manifest.
    Verify { manifest: String },
    /// Dimension of the state space of a closed surface.
    Dim {
        category: String,
        #[arg(long, default_value_t = 1)]
        genus: usize,
    },
    /// Write the shipped data files into a directory.
    Export { dir: std::path::PathBuf },
}

/// An input problem: unreadable file, bad syntax, unknown builtin.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct InputError(pub String);

/// Run a parsed command line and return its report.
pub fn run(cli: &Cli, argv: Vec<String>) -> RunReport {
    let start = Instant::now();
    let mut report = RunReport::new(argv, cli.threads, cli.digits);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.threads.max(1)).build();
    let outcome = match pool {
        Ok(pool) => pool.install(|| commands::dispatch(&cli.command, &mut report)),
        Err(e) => Err(InputError(format!("cannot start worker pool: {e}"))),
    };
    if let Err(e) = outcome {
        report.error = Some(e.0);
    }
    report.metadata.elapsed_ms = start.elapsed().as_millis();
    report.finish();
    report
}

/// Parse `args` (without the program name), run, and return the rendered
/// output and exit code.
pub fn main_with<I, S>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(std::iter::once("tvk".to_string()).chain(args.iter().cloned())) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (e.to_string(), code);
        }
    };
    let report = run(&cli, args);
    let text = if cli.json { report.to_json() + "\n" } else { report.to_text() };
    (text, report.status.exit_code())
}
