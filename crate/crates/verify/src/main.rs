use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use rankone::catalog::TheoremId;
use rankone::lie_ambient::AlgebraFamily;
use verify::report::CaseResult;
use verify::{check_file, explore, run_campaign, selftest, CheckError, Report, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "verify", version, about = "Exact sphericity checks for subalgebras of rank-one simple Lie algebras")]
struct Cli {
    /// Seed of the pseudo-random sample vector.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Replay one classification table over a range of sizes.
    Table {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 0)]
        n_min: usize,
        #[arg(long)]
        n_max: Option<usize>,
        /// Write the JSON-lines report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Check a subalgebra given as a JSON file.
    Check {
        #[arg(long)]
        file: PathBuf,
    },
    /// Compute rows the tables may be missing, without asserting them.
    Explore {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run the invariant suites.
    Selftest,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn print_human(results: &[CaseResult]) {
    for r in results {
        let outcome = r.computed.outcome.as_deref().unwrap_or("-");
        let reason = r.computed.reason.as_deref().unwrap_or("-");
        eprintln!("{:<22} {:<48} {:<13} {:<22} {}", r.status.to_string(), r.case_id, outcome, reason, r.computed.error.as_deref().unwrap_or(""));
    }
}

fn emit(report: &Report, json: Option<&PathBuf>) -> ExitCode {
    print_human(&report.cases);
    let s = &report.summary;
    eprintln!("total {}  pass {}  fail {}  discrepancy-candidates {}", s.total, s.pass, s.fail, s.discrepancy_candidates);
    let text = report.to_jsonl();
    match json {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                return usage(format!("cannot write {}: {e}", path.display()));
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(report.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Table { id, n_min, n_max, json } => {
            let table: TheoremId = match id.parse() {
                Ok(t) => t,
                Err(e) => return usage(e),
            };
            let n_max = n_max.unwrap_or(n_min);
            match run_campaign(table, n_min..=n_max, cli.seed) {
                Ok(report) => emit(&report, json.as_ref()),
                Err(e) => usage(e),
            }
        }
        Command::Check { file } => match check_file(&file, cli.seed) {
            Ok(result) => {
                let c = &result.computed;
                println!("verdict: {} ({})", c.outcome.as_deref().unwrap_or("-"), c.reason.as_deref().unwrap_or("-"));
                if let Some(w) = &c.witness {
                    println!("witness: [{}] rank {} of {}", w.join(", "), c.witness_rank.unwrap_or(0), c.required_rank.unwrap_or(0));
                }
                println!("{}", serde_json::to_string(&result).expect("result serializes"));
                ExitCode::SUCCESS
            }
            Err(e @ (CheckError::Io(..) | CheckError::Parse(_))) => usage(e),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Command::Explore { family, n } => {
            let Some(f) = AlgebraFamily::from_tag(&family, n) else {
                return usage(format!("unknown family {family:?} (n = {n:?})"));
            };
            match explore(f, cli.seed) {
                Ok(report) => emit(&report, None),
                Err(e) => usage(e),
            }
        }
        Command::Selftest => {
            let suites = selftest::all_suites(cli.seed);
            let mut failed = false;
            for s in &suites {
                let mark = if s.passed() { "PASS" } else { "FAIL" };
                println!("{mark} {:<28} {:>6} checks  {:>8.2?}", s.name, s.checks, s.elapsed);
                for f in s.failures.iter().take(10) {
                    println!("     {f}");
                }
                failed |= !s.passed();
            }
            ExitCode::from(u8::from(failed))
        }
    }
}
