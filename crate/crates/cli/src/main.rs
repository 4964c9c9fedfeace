//! `toric`: fan and polytope analyses from the command line.
//!
//! Exit codes: 0 when the analysis completed, 1 on invalid input, 2 when the
//! result is inconclusive.

mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand};
use serde_json::json;
use toric_core::classgroup::DEFAULT_SEARCH_BOUND;

use commands::{CliError, Output};

#[derive(Parser)]
#[command(name = "toric", version, about = "Additive actions, Euler symmetry and orbit analysis for toric varieties")]
struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Coefficient-sum cap for monoid searches on non-pointed cones.
    #[arg(long, global = true, value_name = "K", default_value_t = DEFAULT_SEARCH_BOUND)]
    search_bound: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Does the fan admit a complete collection of Demazure roots?
    CheckAdditive {
        #[arg(long)]
        fan: PathBuf,
    },
    /// List all Demazure roots.
    DemazureRoots {
        #[arg(long)]
        fan: PathBuf,
    },
    /// Divisor class group and relations among ray classes.
    ClassGroup {
        #[arg(long)]
        fan: PathBuf,
    },
    /// Γ monoids, Aut(X)-orbit classes and Euler flags of torus orbits.
    Orbits {
        #[arg(long)]
        fan: PathBuf,
    },
    /// Is the polytope inscribed in a rectangle?
    CheckInscribed {
        #[arg(long)]
        polytope: PathBuf,
    },
    /// Is the polytope very ample?
    CheckVeryAmple {
        #[arg(long)]
        polytope: PathBuf,
    },
    /// Normal fan of the polytope, in the fan file format.
    NormalFan {
        #[arg(long)]
        polytope: PathBuf,
    },
    /// Monomial fundamental form and Euler action at a rectangle vertex.
    FundamentalForm {
        #[arg(long)]
        polytope: PathBuf,
    },
    /// Euler symmetry, from a fan or from a very ample polytope.
    #[command(group(ArgGroup::new("input").required(true).args(["fan", "polytope"])))]
    EulerSymmetric {
        #[arg(long)]
        fan: Option<PathBuf>,
        #[arg(long)]
        polytope: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::CheckAdditive { .. } => "check-additive",
            Command::DemazureRoots { .. } => "demazure-roots",
            Command::ClassGroup { .. } => "class-group",
            Command::Orbits { .. } => "orbits",
            Command::CheckInscribed { .. } => "check-inscribed",
            Command::CheckVeryAmple { .. } => "check-very-ample",
            Command::NormalFan { .. } => "normal-fan",
            Command::FundamentalForm { .. } => "fundamental-form",
            Command::EulerSymmetric { .. } => "euler-symmetric",
        }
    }
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::CheckAdditive { fan } => commands::check_additive(fan),
        Command::DemazureRoots { fan } => commands::roots(fan),
        Command::ClassGroup { fan } => commands::class_group(fan),
        Command::Orbits { fan } => commands::orbits(fan, cli.search_bound),
        Command::CheckInscribed { polytope } => commands::check_inscribed(polytope),
        Command::CheckVeryAmple { polytope } => commands::check_very_ample(polytope),
        Command::NormalFan { polytope } => commands::normal_fan_cmd(polytope, cli.json),
        Command::FundamentalForm { polytope } => commands::fundamental(polytope),
        Command::EulerSymmetric { fan, polytope } => {
            commands::euler_symmetric(fan.as_deref(), polytope.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    match run(&cli) {
        Ok(Output::Document(s)) => {
            println!("{s}");
            ExitCode::SUCCESS
        }
        Ok(Output::Report(r)) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&r.to_json()).expect("serializable"));
            } else {
                print!("{}", r.text());
                println!("time: {:.1} ms", start.elapsed().as_secs_f64() * 1e3);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if cli.json {
                let doc = json!({
                    "command": cli.command.name(),
                    "error": e.to_string(),
                    "status": e.status(),
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
