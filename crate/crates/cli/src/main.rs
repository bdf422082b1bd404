//! `mhag`: verify, evaluate and export group-cograded multiplier Hopf algebras.
//!
//! Exit codes: 0 all checks pass, 1 some check failed (the JSON report is printed),
//! 2 input error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use mhag_core::eval::{eval, OPS};
use mhag_core::session::{export, Session};
use mhag_core::suite::{self, literal_comparison, AxiomReport, Suite};
use mhag_core::Error;

#[derive(Parser)]
#[command(name = "mhag", version, about = "Exact checks of group-cograded multiplier Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Session spec (JSON)
    #[arg(long)]
    spec: PathBuf,

    /// Overrides the sampling seed
    #[arg(long)]
    seed: Option<u64>,

    /// Overrides the window radius for infinite instances
    #[arg(long)]
    window: Option<i64>,

    /// Writes the output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run axiom suites
    Verify {
        #[command(flatten)]
        common: Common,

        /// Comma-separated suites; all when omitted
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
    },
    /// Evaluate one operation on literal arguments
    Eval {
        #[command(flatten)]
        common: Common,

        /// Operation name, e.g. mul, delta, antipode, xi, r
        op: String,

        /// JSON arguments: gradings `[α, β]`, elements `[[a, b], [coeff, a, b], ..]`
        args: Vec<String>,
    },
    /// Write structure constants of a finite component
    Export {
        #[command(flatten)]
        common: Common,
    },
    /// Compare against closed forms; literal-form mismatches are informational
    OracleCompare {
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Input(String),
    Checks(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn load(c: &Common) -> Result<Session, Failure> {
    let text = fs::read_to_string(&c.spec).map_err(|e| Failure::Input(format!("{}: {e}", c.spec.display())))?;
    let mut s = Session::parse(&text)?;
    if let Some(seed) = c.seed {
        s.mode.set_seed(seed);
    }
    if let Some(w) = c.window {
        s.mode.set_window(w);
    }
    Ok(s)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            // a closed pipe (`| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Verify { common, suite } => {
            let suites: Vec<Box<dyn Suite>> = if suite.is_empty() {
                suite::registry()
            } else {
                suite.iter().map(|n| suite::lookup(n.trim())).collect::<Result<_, _>>()?
            };
            let ctx = load(&common)?.context()?;
            let reports: Vec<AxiomReport> = suite::run_suites(&ctx, &suites).into_iter().flat_map(|r| r.reports).collect();
            finish(common.out.as_deref(), &reports, reports.iter().all(AxiomReport::passed))
        }
        Command::Eval { common, op, args } => {
            let s = load(&common)?;
            let vals = args
                .iter()
                .map(|a| serde_json::from_str::<Value>(a).map_err(|e| Failure::Input(format!("argument {a:?}: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            if !OPS.iter().any(|(n, _)| *n == op) {
                let known: Vec<_> = OPS.iter().map(|(n, sig)| format!("{n}({sig})")).collect();
                return Err(Failure::Input(format!("unknown operation {op:?}; known: {}", known.join(" "))));
            }
            emit(common.out.as_deref(), &eval(&s, &op, &vals)?)
        }
        Command::Export { common } => {
            let s = load(&common)?;
            emit(common.out.as_deref(), &export(&s)?)
        }
        Command::OracleCompare { common } => {
            let ctx = load(&common)?.context()?;
            let checked = suite::lookup("oracle")?.run(&ctx);
            let informational = literal_comparison(&ctx);
            #[derive(Serialize)]
            struct Compare<'a> {
                checked: &'a [AxiomReport],
                informational: &'a [AxiomReport],
            }
            let ok = checked.iter().all(AxiomReport::passed);
            let text = to_json(&Compare { checked: &checked, informational: &informational });
            emit(common.out.as_deref(), &text)?;
            if ok {
                Ok(())
            } else {
                Err(Failure::Checks(if common.out.is_some() { text } else { String::new() }))
            }
        }
    }
}

fn finish(out: Option<&Path>, reports: &[AxiomReport], ok: bool) -> Result<(), Failure> {
    let text = to_json(&reports);
    emit(out, &text)?;
    match (ok, out) {
        (true, _) => Ok(()),
        // failures always reach stdout, even when the report also went to a file
        (false, Some(_)) => Err(Failure::Checks(text)),
        (false, None) => Err(Failure::Checks(String::new())),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks(text)) => {
            if !text.is_empty() {
                println!("{text}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
