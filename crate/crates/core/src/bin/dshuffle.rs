//! Command-line front end. Exit codes: 0 pass or member, 1 fail or
//! non-member, 2 error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dshuffle::cli_io::commands::{cmd_check, cmd_dims, cmd_mlv, cmd_verify, CommandOutput, DimsRequest, Which, EXIT_ERROR};
use dshuffle::cli_io::{MlvQuery, SuiteConfig};
use dshuffle::foundations::GroupSpec;
use dshuffle::graded_solver::Family;

#[derive(Parser)]
#[command(name = "dshuffle", version, about = "Exact truncated double shuffle computations at roots of unity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Membership test on a series document.
    Check {
        /// dmr0 | stab-mod | stab-w | stab-m | stab-alg, or the same with a -lie suffix.
        #[arg(long)]
        which: String,
        #[arg(long)]
        input: PathBuf,
        /// Truncate the input to this cap.
        #[arg(long)]
        cap: Option<usize>,
        /// Must match the document group.
        #[arg(long)]
        group: Option<String>,
    },
    /// Graded kernel dimensions and inclusions.
    Dims {
        #[arg(long)]
        group: String,
        #[arg(long)]
        max_degree: usize,
        /// dmr0 | stab-mod | stab-alg | all
        #[arg(long, default_value = "all")]
        which: String,
        /// Fixed cap for every degree; default is degree + 2.
        #[arg(long)]
        cap: Option<usize>,
        /// Directory for one witness document per nonzero kernel.
        #[arg(long)]
        emit_witness: Option<PathBuf>,
    },
    /// Randomized identity suites.
    Verify {
        /// Suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        cap: usize,
        #[arg(long, default_value = "trivial")]
        group: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Numeric multiple L-value.
    Mlv {
        /// Exponents k1,...,kr.
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<u32>,
        /// Root residues a1,...,ar (default all 0).
        #[arg(long, value_delimiter = ',')]
        a: Vec<u32>,
        /// Root order N.
        #[arg(long, default_value_t = 1)]
        order: u32,
        /// Summation bound M.
        #[arg(long, default_value_t = 1_000_000)]
        bound: u64,
    },
}

fn run(cli: Cli) -> Result<CommandOutput, String> {
    let group = |s: &str| GroupSpec::parse(s).map_err(|e| e.to_string());
    Ok(match cli.command {
        Command::Check { which, input, cap, group: g } => {
            let which = Which::parse(&which).map_err(|e| e.to_string())?;
            let text = std::fs::read_to_string(&input).map_err(|e| format!("{}: {e}", input.display()))?;
            let g = g.as_deref().map(group).transpose()?;
            cmd_check(which, &text, cap, g.as_ref())
        }
        Command::Dims { group: g, max_degree, which, cap, emit_witness } => {
            let families = if which == "all" {
                let g = group(&g)?;
                let mut f = vec![Family::StabMod, Family::StabAlg];
                if g.is_cyclic() {
                    f.insert(0, Family::Dmr0);
                }
                f
            } else {
                which.split(',').map(Family::parse).collect::<Result<_, _>>().map_err(|e| e.to_string())?
            };
            let req = DimsRequest { group: group(&g)?, max_degree, families, cap };
            cmd_dims(&req, emit_witness.as_deref())
        }
        Command::Verify { suite, cap, group: g, seed, trials } => {
            cmd_verify(&suite, &SuiteConfig { group: group(&g)?, cap, seed, trials })
        }
        Command::Mlv { k, a, order, bound } => {
            let roots = if a.is_empty() { vec![0; k.len()] } else { a };
            cmd_mlv(&MlvQuery { ks: k, roots, order, bound })
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run(cli).unwrap_or_else(|e| CommandOutput { code: EXIT_ERROR, text: format!("error: {e}\n") });
    if out.code == EXIT_ERROR {
        eprint!("{}", out.text);
    } else {
        print!("{}", out.text);
    }
    ExitCode::from(out.code as u8)
}
