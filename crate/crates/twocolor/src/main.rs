use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use twocolor::commands::{self, verdict_code, CliError, Options, Outcome};
use twocolor::spec::Format;

/// Build and verify finite windows of generic minimal 2-colorings.
///
/// Exit status: 0 success, 2 invalid spec, 3 resource limit, 4 failed
/// verification or internal invariant.
#[derive(Parser)]
#[command(name = "twocolor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a minimal 2-coloring window and its certificate.
    BuildMt(Common),
    /// Build a grid periodicity window and its certificate.
    BuildGp(Common),
    /// Replay a certificate and recompute every witness.
    Verify(Common),
    /// Check toast axioms and the boundary-distance profile.
    Toast(Common),
    /// Shifted-stack layout and segment cover check.
    Markers(Common),
}

#[derive(Args)]
struct Common {
    /// JSON run specification.
    #[arg(long)]
    spec: PathBuf,
    /// Directory for artifacts.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    max_side: Option<i64>,
    #[arg(long)]
    max_steps: Option<usize>,
}

impl From<Common> for Options {
    fn from(c: Common) -> Self {
        Options { spec: c.spec, out: c.out, format: c.format, max_side: c.max_side, max_steps: c.max_steps }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<Outcome, CliError> = match cli.command {
        Command::BuildMt(c) => commands::build_mt(&c.into()),
        Command::BuildGp(c) => commands::build_gp(&c.into()),
        Command::Verify(c) => commands::verify(&c.into()),
        Command::Toast(c) => commands::toast(&c.into()),
        Command::Markers(c) => commands::markers(&c.into()),
    };
    let code = match result {
        Ok(outcome) => {
            let text = serde_json::to_string_pretty(&outcome.report).expect("reports serialize");
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            verdict_code(outcome.pass)
        }
        Err(e) => {
            eprintln!("twocolor: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
