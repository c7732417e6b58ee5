use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use wittlab::commands::{self, Preset, RamanujanKind};
use wittlab::input::{parse_graph, parse_index_list, parse_polynomial, parse_rationals, parse_residues};
use wittlab::{exit, CliError, Output, OutputFormat, RunConfig};
use wittlab_core::graphs::Graph;

/// Lie algebra dimensions, entropy and finiteness from characteristic polynomials.
#[derive(Parser, Debug)]
#[command(name = "wittlab", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct Limits {
    /// Number of dimensions K to tabulate [default: 64].
    #[arg(long)]
    dims: Option<usize>,
    /// Truncation order N for series [default: max(64, K)].
    #[arg(long)]
    order: Option<usize>,
    /// Backward-error tolerance for numeric roots [default: 1e-10].
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Characteristic polynomial analysis.
    #[command(subcommand)]
    Char(CharCommand),
    /// Graph invariants of right-angled Artin Lie algebras.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Necklace polynomial values M_k(x).
    Necklace {
        /// Indices, e.g. 1..4 or 1,3,5.
        #[arg(long)]
        k: String,
        /// Integer or p/q arguments, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Root-of-unity sums P_k(m) or C_k(m).
    Ramanujan {
        #[arg(value_enum)]
        kind: RamanujanKind,
        #[arg(long)]
        k: String,
        #[arg(long)]
        m: String,
    },
    /// Worked examples: free R, free-sum R S, one-relator M, braid N, labute M, filiform, spiga.
    Preset {
        name: String,
        params: Vec<u64>,
        #[command(flatten)]
        limits: Limits,
    },
}

#[derive(Subcommand, Debug)]
enum CharCommand {
    /// Eigenvalues, entropy, dimensions and finiteness verdict.
    Analyze {
        /// Coefficients from degree 0 upward, e.g. 1,-11,33,-33,11.
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[command(flatten)]
        limits: Limits,
    },
}

#[derive(Subcommand, Debug)]
enum GraphCommand {
    /// Alternating clique polynomial. Reads stdin when no file is given.
    CliquePoly { file: Option<PathBuf> },
    /// Lower-central-series ranks of the right-angled Artin group.
    Ranks {
        #[arg(long)]
        k: usize,
        file: Option<PathBuf>,
    },
    /// Mantel and Turán-type checks on c_1, c_2.
    Turan { file: Option<PathBuf> },
    /// Cayley graph of Z/n; residues are closed under negation.
    Cayley { modulus: u64, residues: String },
}

fn read_graph(file: &Option<PathBuf>) -> Result<Graph, CliError> {
    let src = match file {
        Some(path) => fs::read_to_string(path)?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    parse_graph(&src)
}

fn config(limits: Option<Limits>, format: OutputFormat) -> Result<RunConfig, CliError> {
    let l = limits.unwrap_or(Limits {
        dims: None,
        order: None,
        tol: None,
    });
    RunConfig::build(l.dims, l.order, l.tol, format, RunConfig::max_vertices_from_env()?)
}

fn preset_of(name: &str, params: &[u64]) -> Result<Preset, CliError> {
    let p = match (name, params) {
        ("free", [r]) => Preset::Free(*r),
        ("free-sum", [r, s]) => Preset::FreeSum(*r, *s),
        ("one-relator", [m]) => Preset::OneRelator(*m),
        ("braid", [n]) => Preset::Braid(*n),
        ("labute", [m]) => Preset::Labute(*m),
        ("filiform", []) => Preset::Filiform,
        ("spiga", []) => Preset::Spiga,
        _ => {
            return Err(CliError::input(format!(
                "unknown preset {name} with {} parameter(s); expected free R, free-sum R S, \
                 one-relator M, braid N, labute M, filiform or spiga",
                params.len()
            )))
        }
    };
    Ok(p)
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Char(CharCommand::Analyze { poly, limits }) => {
            let cfg = config(Some(limits), format)?;
            commands::char_analyze(&parse_polynomial(&poly)?, &cfg)
        }
        Command::Graph(g) => {
            let cfg = config(None, format)?;
            match g {
                GraphCommand::CliquePoly { file } => commands::graph_clique_poly(&read_graph(&file)?, &cfg),
                GraphCommand::Ranks { k, file } => {
                    if k == 0 {
                        return Err(CliError::input("--k must be at least 1"));
                    }
                    commands::graph_ranks(&read_graph(&file)?, k, &cfg)
                }
                GraphCommand::Turan { file } => commands::graph_turan(&read_graph(&file)?, &cfg),
                GraphCommand::Cayley { modulus, residues } => {
                    commands::graph_cayley(modulus, &parse_residues(&residues)?)
                }
            }
        }
        Command::Necklace { k, x } => Ok(commands::necklace(&parse_index_list(&k)?, &parse_rationals(&x)?)),
        Command::Ramanujan { kind, k, m } => Ok(commands::ramanujan(
            kind,
            &parse_index_list(&k)?,
            &parse_index_list(&m)?,
        )),
        Command::Preset { name, params, limits } => {
            let cfg = config(Some(limits), format)?;
            commands::preset(&preset_of(&name, &params)?, &cfg)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::INPUT } else { exit::OK });
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(out.render(format).as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("wittlab: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
