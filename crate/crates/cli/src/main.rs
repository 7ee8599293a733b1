use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use adjoint_core::g2model::{verify_iwasawa, verify_lie_models};
use adjoint_core::lfunc::{verify_identities, verify_integral, verify_lfactor, PlaceCase};
use adjoint_core::orbits::{double_coset_check, DEFAULT_CAP};
use adjoint_core::report::TypoEntry;
use adjoint_core::{Result, VerificationReport};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "adjoint", version, about = "Exact verification of the unramified adjoint L-function computation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one or all verification suites.
    Verify {
        #[command(subcommand)]
        suite: Suite,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Args, Clone)]
struct OutputOpts {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Leave the timestamp out of JSON output.
    #[arg(long, global = true)]
    no_timestamp: bool,
    /// Run independent suites concurrently; report order is unchanged.
    #[arg(long, global = true)]
    parallel: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CaseArg {
    Split,
    Nonsplit,
    Both,
}

impl CaseArg {
    fn cases(self) -> Vec<PlaceCase> {
        match self {
            CaseArg::Split => vec![PlaceCase::Split],
            CaseArg::Nonsplit => vec![PlaceCase::Nonsplit],
            CaseArg::Both => vec![PlaceCase::Split, PlaceCase::Nonsplit],
        }
    }
}

#[derive(Subcommand)]
enum Suite {
    /// G2 and SU(2,1) Lie algebra models.
    Lie,
    /// Iwasawa factorizations of the torus element.
    Iwasawa,
    /// Poincaré series and the split and non-split sum identities.
    Identities {
        #[arg(long, default_value_t = 12)]
        degree: u32,
    },
    /// Local L-factors and the Frobenius eigenspaces.
    Lfactor {
        #[arg(long, value_enum, default_value_t = CaseArg::Both)]
        case: CaseArg,
    },
    /// Inner integral and the unramified proposition.
    Integral {
        #[arg(long, value_enum, default_value_t = CaseArg::Both)]
        case: CaseArg,
        #[arg(long, default_value_t = 12)]
        degree: u32,
    },
    /// Orbit of v_rho over F_q and its parabolic orbits.
    Orbits {
        #[arg(long, default_value_t = 5)]
        q: u64,
        #[arg(long, default_value_t = 2)]
        rho: i64,
    },
    /// Every suite.
    All {
        #[arg(long, default_value_t = 12)]
        degree: u32,
        #[arg(long, default_value_t = 5)]
        q: u64,
        #[arg(long, default_value_t = 2)]
        rho: i64,
    },
}

type Job = Box<dyn FnOnce() -> Result<VerificationReport> + Send>;

fn jobs(suite: &Suite, parallel: bool) -> Vec<Job> {
    match *suite {
        Suite::Lie => vec![Box::new(verify_lie_models)],
        Suite::Iwasawa => vec![Box::new(verify_iwasawa)],
        Suite::Identities { degree } => vec![Box::new(move || verify_identities(degree))],
        Suite::Lfactor { case } => vec![Box::new(move || {
            verify_lfactor(case != CaseArg::Nonsplit, case != CaseArg::Split)
        })],
        Suite::Integral { case, degree } => vec![Box::new(move || verify_integral(&case.cases(), degree))],
        Suite::Orbits { q, rho } => vec![Box::new(move || double_coset_check(q, rho, DEFAULT_CAP, parallel))],
        Suite::All { degree, q, rho } => vec![
            Box::new(verify_lie_models),
            Box::new(verify_iwasawa),
            Box::new(move || verify_identities(degree)),
            Box::new(|| verify_lfactor(true, true)),
            Box::new(move || verify_integral(&CaseArg::Both.cases(), degree)),
            Box::new(move || double_coset_check(q, rho, DEFAULT_CAP, parallel)),
        ],
    }
}

fn run_jobs(jobs: Vec<Job>, parallel: bool) -> Result<Vec<VerificationReport>> {
    if parallel {
        std::thread::scope(|s| {
            let handles: Vec<_> = jobs.into_iter().map(|j| s.spawn(j)).collect();
            handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
        })
    } else {
        jobs.into_iter().map(|j| j()).collect()
    }
}

#[derive(Serialize)]
struct Document<'a> {
    tool: &'static str,
    version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    timestamp: Option<u64>,
    passed: bool,
    suites: &'a [VerificationReport],
    typo_ledger: Vec<TypoEntry>,
}

fn aggregate_ledger(reports: &[VerificationReport]) -> Vec<TypoEntry> {
    let mut out: Vec<TypoEntry> = Vec::new();
    for t in reports.iter().flat_map(|r| &r.typo_ledger) {
        if !out.contains(t) {
            out.push(t.clone());
        }
    }
    out
}

fn render(reports: &[VerificationReport], opts: &OutputOpts) -> String {
    let passed = reports.iter().all(VerificationReport::passed);
    let ledger = aggregate_ledger(reports);
    match opts.format {
        Format::Json => {
            let doc = Document {
                tool: "adjoint",
                version: env!("CARGO_PKG_VERSION"),
                timestamp: (!opts.no_timestamp)
                    .then(|| SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)),
                passed,
                suites: reports,
                typo_ledger: ledger,
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s: String = reports.iter().map(VerificationReport::to_text).collect::<Vec<_>>().join("\n");
            if reports.len() > 1 {
                s.push_str("\n== typo ledger\n");
                for t in &ledger {
                    s.push_str(&format!("  {}: printed {} -> {}\n", t.location, t.printed, t.resolution));
                }
            }
            let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
            s.push_str(&format!("\n{}: {} suite(s), {failed} failing check(s)\n", if passed { "OK" } else { "FAILED" }, reports.len()));
            s
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Command::Verify { suite, out } = cli.command;
    let reports = match run_jobs(jobs(&suite, out.parallel), out.parallel) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = render(&reports, &out);
    match &out.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if reports.iter().all(VerificationReport::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
