use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

#[derive(Parser)]
#[command(name = "schur-toeplitz", version, about = "Banded Toeplitz minors, adjugates and eigenvectors via Schur polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct SymbolArgs {
    /// Symbol document (JSON); read from stdin when absent or "-".
    pub symbol: Option<PathBuf>,
    /// auto, exact or float.
    #[arg(long, default_value = "auto")]
    pub backend: String,
}

#[derive(Subcommand)]
enum Command {
    /// Determinant of T_n(a).
    Det {
        #[command(flatten)]
        sym: SymbolArgs,
        #[arg(short)]
        n: usize,
        /// schur, baxter_schmidt, trench, dense, banded, or all.
        #[arg(long, default_value = "baxter_schmidt")]
        method: String,
    },
    /// Minor of T_n(a) with the given rows and columns struck out.
    Minor {
        #[command(flatten)]
        sym: SymbolArgs,
        #[arg(short)]
        n: usize,
        /// One-based, comma separated.
        #[arg(long, default_value = "")]
        strike_rows: String,
        #[arg(long, default_value = "")]
        strike_cols: String,
        /// expanded or flipped.
        #[arg(long, default_value = "expanded")]
        variant: String,
    },
    /// Adjugate entry (r, s), or the whole matrix as JSON Lines.
    Adj(EntryArgs),
    /// Inverse entry (r, s), or the whole matrix as JSON Lines.
    Inv(EntryArgs),
    /// Eigenvector candidate for the value x.
    Eig {
        #[command(flatten)]
        sym: SymbolArgs,
        #[arg(short)]
        n: usize,
        #[arg(short, allow_hyphen_values = true)]
        x: String,
        /// Zeros of a - x, comma separated; found numerically on the float backend when absent.
        #[arg(long, allow_hyphen_values = true)]
        roots: Option<String>,
    },
    /// Skew Schur polynomial at given roots or elementary sequence.
    Schur {
        /// Outer shape, e.g. "2,1" or "(5,4,2)/(2)".
        shape: String,
        /// Inner shape when not given inside SHAPE.
        #[arg(long)]
        inner: Option<String>,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "eseq", required_unless_present = "eseq")]
        roots: Option<String>,
        /// e_0, e_1, ..., e_w with e_0 = 1; later terms vanish.
        #[arg(long, allow_hyphen_values = true)]
        eseq: Option<String>,
        #[arg(long, default_value = "auto")]
        backend: String,
    },
    /// Skew Pieri expansion of s_{λ/(r)} into straight shapes.
    Expand {
        /// λ, or λ/(r) in one string such as "(8,8,8,5)/(2)".
        shape: String,
        #[arg(short)]
        r: Option<usize>,
    },
    /// Closed-form versus banded-elimination determinant timings.
    Bench {
        #[arg(long, default_value = "1000,2000,100000,1000000")]
        n_list: String,
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, default_value_t = 4)]
        w: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest n for banded elimination.
        #[arg(long, default_value_t = 20_000)]
        cutoff: usize,
    },
}

#[derive(Args)]
pub struct EntryArgs {
    #[command(flatten)]
    pub sym: SymbolArgs,
    #[arg(short)]
    pub n: usize,
    #[arg(short, required_unless_present = "full")]
    pub r: Option<usize>,
    #[arg(short, required_unless_present = "full")]
    pub s: Option<usize>,
    /// Every entry, one JSON object per line in row-major order.
    #[arg(long, conflicts_with_all = ["r", "s"])]
    pub full: bool,
    /// skew, skew_flipped, schur_sum or trench.
    #[arg(long, default_value = "skew")]
    pub method: String,
}

/// Exit 2 for bad input, 3 for mathematical failure.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Math(String),
}

impl From<schur_toeplitz::Error> for CliError {
    fn from(e: schur_toeplitz::Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Math(e.to_string())
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

impl SymbolArgs {
    pub fn read_document(&self) -> CliResult<schur_toeplitz::document::SymbolDocument> {
        let text = match &self.symbol {
            Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?,
            _ => {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
                buf
            }
        };
        Ok(schur_toeplitz::document::SymbolDocument::from_json(&text)?)
    }
}

fn configure_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var("SCHUR_TOEPLITZ_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Input(format!("SCHUR_TOEPLITZ_THREADS={raw:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Input(e.to_string()))
}

fn run(cli: Cli) -> CliResult<()> {
    configure_threads()?;
    match cli.command {
        Command::Det { sym, n, method } => commands::det(&sym, n, &method),
        Command::Minor {
            sym,
            n,
            strike_rows,
            strike_cols,
            variant,
        } => commands::minor(&sym, n, &strike_rows, &strike_cols, &variant),
        Command::Adj(args) => commands::entries(&args, false),
        Command::Inv(args) => commands::entries(&args, true),
        Command::Eig { sym, n, x, roots } => commands::eig(&sym, n, &x, roots.as_deref()),
        Command::Schur {
            shape,
            inner,
            roots,
            eseq,
            backend,
        } => commands::schur(&shape, inner.as_deref(), roots.as_deref(), eseq.as_deref(), &backend),
        Command::Expand { shape, r } => commands::expand(&shape, r),
        Command::Bench {
            n_list,
            p,
            w,
            seed,
            cutoff,
        } => commands::bench(&n_list, p, w, seed, cutoff),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
