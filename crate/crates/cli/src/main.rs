//! Command-line front end: load a structure file, run the selected
//! computations, and emit tables and verdicts.
//!
//! Exit status: 0 when every verdict-type report passes, 1 on input errors
//! (missing file, parse or validation failure), 2 when a verified check
//! fails (identity or duality violation), 3 on an internal convention
//! failure (e.g. H = [L,Λ] not scalar).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use hharm_core::model::{parse::parse_str, HermitianStructure, Injection};
use hharm_core::report::{assemble, Selection};

mod render;

#[derive(Parser)]
#[command(
    name = "hharm",
    about = "Exact harmonic-form tables and identity checks for invariant Hermitian structures",
    version
)]
struct Args {
    /// Structure file (line-oriented text or JSON-shaped document)
    input: PathBuf,

    /// Comma-separated reports: tables, identities, dualities, lefschetz,
    /// primitives, inequalities, lambda, pluriclosed, holomorphic,
    /// injectivity, or all
    #[arg(long, default_value = "all")]
    reports: String,

    /// Output format
    #[arg(long, default_value = "text", value_parser = ["text", "csv", "json"])]
    format: String,

    /// Seed for the extra identity-form selection (logged in the output)
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,

    /// Skip the Betti-dependent checks (for input that is not known to be a
    /// nilmanifold, where invariant Betti numbers need not be topological)
    #[arg(long)]
    no_betti: bool,

    /// Deliberately sabotage the computation to exercise the failure exit
    /// paths end to end (self-test aid for CI pipelines)
    #[arg(long, value_parser = ["identity-failure", "convention-failure"])]
    inject: Option<String>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(code) => code,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            code
        }
    }
}

fn run(args: &Args) -> Result<ExitCode, (ExitCode, String)> {
    let input_err = |msg: String| (ExitCode::from(1), msg);

    let sel = Selection::parse(&args.reports).map_err(input_err)?;
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| input_err(format!("{}: {e}", args.input.display())))?;
    let spec = parse_str(&text).map_err(|e| input_err(format!("{}: {e}", args.input.display())))?;

    let inject = match args.inject.as_deref() {
        Some("identity-failure") => Some(Injection::IdentityFailure),
        Some("convention-failure") => Some(Injection::ConventionFailure),
        _ => None,
    };

    let structure = HermitianStructure::build_with(spec, inject)
        .map_err(|e| (ExitCode::from(3), e.to_string()))?;

    let report = assemble(&structure, &sel, args.seed, args.no_betti);

    let rendered = match args.format.as_str() {
        "json" => {
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
        "csv" => render::csv(&report),
        _ => render::text(&report),
    };

    match &args.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| input_err(format!("{}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }

    Ok(if report.all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}
