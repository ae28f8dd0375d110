//! `eop`: command-line front end for the edge open packing toolkit.
//!
//! Every command prints one JSON document to stdout and a one-line summary to
//! stderr. Exit status is 0 when the report carries no failure flag, 1 when it
//! does, and 2 on errors (printed as a JSON error object).

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use eop_core::exact::Budget;
use eop_core::gadgets::GadgetKind;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "eop", version, about = "Edge open packing toolkit")]
struct Cli {
    /// Branch-and-bound node limit for exact solves.
    #[arg(long, global = true, default_value_t = eop_core::exact::DEFAULT_NODE_LIMIT)]
    node_limit: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Exact,
    Tree,
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Universal,
    Eulerian,
    Planar,
}

impl From<Kind> for GadgetKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Universal => GadgetKind::Universal,
            Kind::Eulerian => GadgetKind::EulerianBipartite,
            Kind::Planar => GadgetKind::PlanarDeg4,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// EOP number and a maximum EOP set.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Check a claimed EOP set given as a file of 1-based `u v` pairs.
    Verify {
        file: PathBuf,
        #[arg(long)]
        set: PathBuf,
    },
    /// Independence number and a maximum independent set.
    Alpha { file: PathBuf },
    /// Build a reduction gadget; `--out` also writes `<out>.names`.
    Gadget {
        #[arg(value_enum)]
        kind: Kind,
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        verify: bool,
    },
    /// The m/δ bound, 𝓕 membership and the tightness characterization.
    Bounds { file: PathBuf },
    /// EOP number after deleting each edge.
    Removal { file: PathBuf },
    /// Graph G and edge e with ρ(G) = b and ρ(G - e) = a, verified exactly.
    Realize {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A tight member of 𝓕 with part sizes |A|,|B|,|C|.
    FamilyF {
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare ρ with the structural descriptions of ρ = 1 and ρ = 2.
    Charsmall { file: PathBuf },
    /// Time the tree solver on seeded random trees.
    BenchTree {
        #[arg(long, num_args = 1.., required = true)]
        n: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Runs per size; the fastest is reported.
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
}

/// Result of a command: its JSON payload, whether it passed, and the summary line.
pub struct Outcome {
    pub input: Option<Value>,
    pub result: Value,
    pub ok: bool,
    pub summary: String,
}

#[derive(Debug)]
pub struct CliError {
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    pub fn new(kind: &'static str, message: impl ToString) -> Self {
        CliError {
            kind,
            message: message.to_string(),
        }
    }
}

impl From<eop_core::Error> for CliError {
    fn from(e: eop_core::Error) -> Self {
        use eop_core::Error as E;
        let kind = match e {
            E::BudgetExceeded { .. } => "budget_exceeded",
            E::InfeasiblePattern(_) | E::OutOfRange { .. } => "infeasible_parameters",
            _ => "invalid_input",
        };
        CliError::new(kind, e)
    }
}

fn echo(cmd: &Command) -> Value {
    match cmd {
        Command::Solve { file, method } => {
            json!({"name": "solve", "file": file, "method": format!("{method:?}").to_lowercase()})
        }
        Command::Verify { file, set } => json!({"name": "verify", "file": file, "set": set}),
        Command::Alpha { file } => json!({"name": "alpha", "file": file}),
        Command::Gadget {
            kind,
            file,
            out,
            verify,
        } => json!({
            "name": "gadget",
            "kind": format!("{kind:?}").to_lowercase(),
            "file": file,
            "out": out,
            "verify": verify,
        }),
        Command::Bounds { file } => json!({"name": "bounds", "file": file}),
        Command::Removal { file } => json!({"name": "removal", "file": file}),
        Command::Realize { a, b, out } => json!({"name": "realize", "a": a, "b": b, "out": out}),
        Command::FamilyF { k, sizes, out } => {
            json!({"name": "family-f", "k": k, "sizes": sizes, "out": out})
        }
        Command::Charsmall { file } => json!({"name": "charsmall", "file": file}),
        Command::BenchTree { n, seed, repeats } => {
            json!({"name": "bench-tree", "n": n, "seed": seed, "repeats": repeats})
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let budget = Budget::nodes(cli.node_limit);
    match &cli.command {
        Command::Solve { file, method } => commands::solve(file, *method, budget),
        Command::Verify { file, set } => commands::verify(file, set),
        Command::Alpha { file } => commands::alpha(file, budget),
        Command::Gadget {
            kind,
            file,
            out,
            verify,
        } => commands::gadget(file, (*kind).into(), out.as_deref(), *verify, budget),
        Command::Bounds { file } => commands::bounds(file, budget),
        Command::Removal { file } => commands::removal(file, budget),
        Command::Realize { a, b, out } => commands::realize(*a, *b, out.as_deref(), budget),
        Command::FamilyF { k, sizes, out } => commands::family_f(*k, sizes, out.as_deref(), budget),
        Command::Charsmall { file } => commands::charsmall(file, budget),
        Command::BenchTree { n, seed, repeats } => commands::bench_tree(n, *seed, *repeats),
    }
}

// A closed stdout (e.g. piped into `head`) is not worth a panic.
fn emit(doc: &Value) {
    let text = serde_json::to_string_pretty(doc).expect("json values always serialize");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn print_error(command: Option<Value>, err: &CliError) -> ExitCode {
    let doc = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "error": {"kind": err.kind, "message": err.message},
    });
    emit(&doc);
    eprintln!("error: {}", err.message);
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            let message = e.to_string();
            let first = message.lines().next().unwrap_or("invalid arguments");
            return print_error(
                None,
                &CliError::new("usage", first.trim_start_matches("error: ")),
            );
        }
    };
    let command = echo(&cli.command);
    let start = std::time::Instant::now();
    match run(&cli) {
        Ok(out) => {
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "command": command,
                "input": out.input,
                "result": out.result,
                "ok": out.ok,
                "elapsed_ms": start.elapsed().as_secs_f64() * 1e3,
            });
            emit(&doc);
            eprintln!("{}", out.summary);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => print_error(Some(command), &err),
    }
}
