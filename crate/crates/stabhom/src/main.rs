use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use stabhom::commands::{self, CommandResult, Failure, Search, EXIT_USAGE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Stable module theory over finite-dimensional bound quiver algebras, in exact arithmetic.
///
/// ALGEBRA is a JSON algebra file or a fixture name (a2, a3, kronecker, commutative-square,
/// dual-numbers, truncated-cubic, nakayama3), optionally with a field suffix such as `a2:2` or
/// `a2:q`.
#[derive(Debug, Parser)]
#[command(name = "stabhom", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension, path basis and indecomposable projectives, injectives and simples.
    Info { algebra: String },
    /// Torsion, cotorsion, duals, transpose, certificates and stable Homs of one module.
    Invariants { algebra: String, module: PathBuf },
    /// Hom, Ext¹ and both stable Homs from A to B.
    Stablehom { algebra: String, a: PathBuf, b: PathBuf },
    /// A ⊗ B and A ⊗̄ B for a right module A and a left module B.
    Tensor { algebra: String, a: PathBuf, b: PathBuf },
    /// Defect and values of a finitely presented functor, at the given modules or the probes.
    Functor { algebra: String, functor: PathBuf, modules: Vec<PathBuf> },
    /// Run the law catalog on seeded random modules.
    Verify {
        algebra: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        /// Comma-separated law names; all laws when omitted.
        #[arg(long, value_delimiter = ',')]
        laws: Option<Vec<String>>,
    },
    /// Search generated modules for torsion or cotorsion phenomena.
    Catalog {
        #[arg(long, value_enum)]
        search: Search,
        #[arg(required = true)]
        algebras: Vec<String>,
        #[arg(long, default_value_t = 100)]
        budget: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
    },
}

fn path_str(p: &std::path::Path) -> String {
    p.display().to_string()
}

fn run(command: &Command) -> CommandResult {
    use commands::*;
    match command {
        Command::Info { algebra } => info(&load_algebra(algebra)?),
        Command::Invariants { algebra, module } => {
            let alg = load_algebra(algebra)?;
            invariants(&read_module_arg(&path_str(module), &alg)?)
        }
        Command::Stablehom { algebra, a, b } => {
            let alg = load_algebra(algebra)?;
            stablehom(&read_module_arg(&path_str(a), &alg)?, &read_module_arg(&path_str(b), &alg)?)
        }
        Command::Tensor { algebra, a, b } => {
            let alg = load_algebra(algebra)?;
            tensor_cmd(&read_module_arg(&path_str(a), &alg)?, &read_module_arg(&path_str(b), &alg)?)
        }
        Command::Functor { algebra, functor: file, modules } => {
            let alg = load_algebra(algebra)?;
            let f = read_functor_arg(&path_str(file), &alg)?;
            let at = modules
                .iter()
                .map(|p| Ok((path_str(p), read_module_arg(&path_str(p), &alg)?)))
                .collect::<Result<Vec<_>, Failure>>()?;
            functor(&f, &at)
        }
        Command::Verify { algebra, seed, count, max_dim, laws } => {
            verify_cmd(&load_algebra(algebra)?, *seed, *count, *max_dim, laws.as_deref())
        }
        Command::Catalog { search, algebras, budget, seed, max_dim } => {
            let algs = algebras
                .iter()
                .map(|a| Ok((a.clone(), load_algebra(a)?)))
                .collect::<Result<Vec<_>, Failure>>()?;
            catalog(&algs, *search, *budget, *seed, *max_dim)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let output = match run(&cli.command) {
        Ok(o) => o,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            return ExitCode::from(code as u8);
        }
    };
    let text = match (cli.format, &cli.command) {
        (Format::Json, _) => stabhom::format::to_json(&output.value),
        (Format::Text, Command::Verify { .. }) => commands::render_verify_text(&output.value),
        (Format::Text, _) => commands::render_text(&output.value),
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    if matches!(cli.command, Command::Verify { .. }) {
        eprintln!("wall time: {:.3}s", start.elapsed().as_secs_f64());
    }
    ExitCode::from(output.code as u8)
}
