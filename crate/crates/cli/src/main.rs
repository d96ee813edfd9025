use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cutreal::cutmodel::GridWindow;
use cutreal::{ArithMode, Rational};
use cutreal_cli::commands::{self, CliError};
use cutreal_cli::laws::Corrupt;
use cutreal_cli::oracle::{self, OracleConfig};

#[derive(Parser)]
#[command(name = "cutreal", version, about = "Exact extended-real arithmetic from Dedekind cuts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression; `-` is the pseudodifference of the mode.
    Eval {
        /// sup (lower cuts, -inf absorbing) or inf (upper cuts, +inf absorbing)
        #[arg(long)]
        mode: ArithMode,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print the infinity tables of both arithmetics.
    Tables,
    /// Run the randomized law checks.
    Oracle {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Half-width of the sampling window.
        #[arg(long, default_value = "4")]
        bound: Rational,
        /// Grid denominator of the sampling window.
        #[arg(long, default_value_t = 8)]
        denom: u64,
        #[arg(long, hide = true)]
        corrupt: Option<String>,
    },
    /// Infimal convolution of two function tables.
    Infconv {
        #[arg(long)]
        f1: PathBuf,
        #[arg(long)]
        f2: PathBuf,
        /// Output CSV path, `-` for stdout.
        #[arg(long)]
        out: PathBuf,
    },
    /// Scalarize the example set-valued function along a direction w.
    Scalarize {
        /// Direction `a,b`.
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        /// Grid `lo:hi:step`; must contain 0.
        #[arg(long, allow_hyphen_values = true, default_value = commands::DEFAULT_GRID)]
        grid: String,
        /// Output CSV path, `-` for stdout.
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Eval { mode, expr } => println!("{}", commands::eval(mode, &expr)?),
        Command::Tables => print!("{}", commands::tables()),
        Command::Oracle { trials, seed, bound, denom, corrupt } => {
            let window = GridWindow::new(bound, denom)?;
            let corrupt = match corrupt {
                None => Corrupt(None),
                Some(name) => Corrupt(Some(
                    Corrupt::SUPPORTED
                        .into_iter()
                        .find(|s| *s == name)
                        .ok_or_else(|| CliError::Usage(format!("unknown law {name:?}")))?,
                )),
            };
            let report = oracle::run(&OracleConfig { trials, seed, window, corrupt });
            println!("{report}");
            if !report.passed() {
                return Err(CliError::Check("law check failed".into()));
            }
        }
        Command::Infconv { f1, f2, out } => commands::write_output(&out, &commands::infconv(&f1, &f2)?)?,
        Command::Scalarize { w, grid, out } => {
            let w = commands::parse_direction(&w)?;
            let grid = commands::parse_grid(&grid)?;
            commands::write_output(&out, &commands::scalarize(&w, grid)?)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
