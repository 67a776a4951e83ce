use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use multigroup::carrier::DEFAULT_GUARD;
use multigroup::claims::{run_all, run_claim, DemoReport, CLAIM_IDS};
use multigroup::dsl::{build_carrier_expr, compile_spec, parse_spec, Diagnostic, SpecSource};
use multigroup::run::{run_spec, RunOptions};
use multigroup::CheckMode;

const GUARD_VAR: &str = "MULTIGROUP_GUARD";

#[derive(Parser)]
#[command(name = "multigroup", version, about = "Exhaustive axiom checking for finite algebraic systems")]
struct Cli {
    /// Worker threads for the checks (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse, compile and check a spec file.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Leave per-check wall times out of the report.
        #[arg(long)]
        no_timing: bool,
    },
    /// Run the built-in claim suite, or one claim by id.
    Demo {
        claim: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the size of a carrier such as `gl(2,3)` or `cyclic(4) x symmetric(3)`.
    Enumerate {
        carrier: String,
        /// Also print the elements, one per line.
        #[arg(long)]
        list: bool,
    },
}

fn guard() -> Result<u64, String> {
    match std::env::var(GUARD_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| format!("{GUARD_VAR} must be a non-negative integer, got '{v}'")),
        Err(_) => Ok(DEFAULT_GUARD),
    }
}

fn print_diagnostics(origin: &str, diags: &[Diagnostic]) {
    for d in diags {
        eprintln!("{origin}:{d}");
    }
}

fn verify(file: PathBuf, format: Format, no_timing: bool, guard: u64) -> ExitCode {
    let src = match SpecSource::from_file(&file) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{}: {e}", file.display());
            return ExitCode::from(2);
        }
    };
    let draft = match parse_spec(&src) {
        Ok(d) => d,
        Err(diags) => {
            print_diagnostics(&src.origin, &diags);
            return ExitCode::from(2);
        }
    };
    print_diagnostics(&src.origin, &draft.warnings);
    let spec = match compile_spec(&draft, guard) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{}:{e}", src.origin);
            return ExitCode::from(2);
        }
    };
    let report = run_spec(&spec, &src, RunOptions { timing: !no_timing, mode: CheckMode::Exhaustive });
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn demo(claim: Option<String>, format: Format) -> ExitCode {
    let report = match claim.as_deref() {
        None | Some("all") => run_all(),
        Some(id) => match run_claim(id) {
            Ok(r) => DemoReport::new(vec![r]),
            Err(e) => {
                eprintln!("{e}; known claims: {}", CLAIM_IDS.join(", "));
                return ExitCode::from(2);
            }
        },
    };
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn enumerate(expr: &str, list: bool, guard: u64) -> ExitCode {
    match build_carrier_expr(expr, guard) {
        Ok(c) => {
            println!("{}", c.len());
            if list {
                for e in c.elements() {
                    println!("{e}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("cannot configure thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    let guard = match guard() {
        Ok(g) => g,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    match cli.command {
        Command::Verify { file, format, no_timing } => verify(file, format, no_timing, guard),
        Command::Demo { claim, format } => demo(claim, format),
        Command::Enumerate { carrier, list } => enumerate(&carrier, list, guard),
    }
}
