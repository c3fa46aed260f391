use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use entropic_bell::scan::Family;
use entropic_bell_cli::{commands, CliError};

/// Entropy Venn diagrams and Bell inequalities for dichotomic variables.
#[derive(Debug, Parser)]
#[command(name = "ebell", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Entropy diagram and pairwise summary of a three-variable distribution.
    Diagram {
        #[arg(long)]
        dist: PathBuf,
    },
    /// Evaluate every inequality for a distribution file or a singlet setup.
    Check {
        #[arg(long, conflicts_with_all = ["theta", "phi"], required_unless_present = "theta")]
        dist: Option<PathBuf>,
        #[arg(long, allow_negative_numbers = true, requires = "phi")]
        theta: Option<f64>,
        #[arg(long, allow_negative_numbers = true, requires = "theta")]
        phi: Option<f64>,
        /// Read angles in degrees.
        #[arg(long)]
        degrees: bool,
    },
    /// Write left-hand sides of both families over a range of phi as CSV.
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        theta: f64,
        #[arg(long, allow_negative_numbers = true)]
        phi_min: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        phi_max: Option<f64>,
        #[arg(long, default_value_t = 721)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        degrees: bool,
    },
    /// Find the angles of maximal violation for one inequality family.
    Maximize {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, default_value_t = 720)]
        resolution: usize,
    },
    /// Evaluate the counting inequality on a population count file.
    Wigner {
        #[arg(long)]
        counts: PathBuf,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|_| format!("expected `entropic` or `conventional`, got `{s}`"))
}

fn run(command: Command) -> Result<String, CliError> {
    let to_radians = |degrees: bool, x: f64| if degrees { x.to_radians() } else { x };
    match command {
        Command::Diagram { dist } => commands::diagram(&dist),
        Command::Check { dist: Some(dist), .. } => commands::check_distribution(&dist),
        Command::Check { theta: Some(theta), phi: Some(phi), degrees, .. } => {
            commands::check_quantum(to_radians(degrees, theta), to_radians(degrees, phi))
        }
        Command::Check { .. } => Err(CliError::Invalid("check needs --dist or --theta and --phi".into())),
        Command::Sweep { theta, phi_min, phi_max, steps, out, degrees } => {
            let phi_min = phi_min.map_or(0.0, |x| to_radians(degrees, x));
            let phi_max = phi_max.map_or(std::f64::consts::PI, |x| to_radians(degrees, x));
            commands::sweep(to_radians(degrees, theta), phi_min, phi_max, steps, &out)
        }
        Command::Maximize { family, resolution } => commands::maximize(family, resolution),
        Command::Wigner { counts } => commands::wigner(&counts),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
