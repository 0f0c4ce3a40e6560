use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use flagsphere::census::{self, CensusConfig, CensusReport};
use flagsphere::format::{parse_complex, to_canonical_text};
use flagsphere::generators;
use flagsphere::report::{self, parse_suites};
use flagsphere::{Error, SimplicialComplex};

/// Number of census worker threads; unset means one per core.
const WORKERS_ENV: &str = "FLAGSPHERE_WORKERS";

#[derive(Parser)]
#[command(name = "flagsphere", version, about = "Exact f/h/gamma invariants of simplicial complexes and flag-sphere identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print invariants, flagness and homology certification of a complex file
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Check identities exactly; exits 1 if any fails
    Verify {
        /// Complex file, or `gen:EXPR` such as `gen:susp:cycle:10`
        input: String,
        /// Comma-separated: all, ds, theorem, links, gamma, joins, conjecture
        #[arg(long, default_value = "all")]
        suite: String,
        /// Also exit 1 on a conjecture FINDING
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Enumerate labeled graphs and keep clique complexes that are homology spheres
    Census {
        #[arg(long)]
        max_vertices: usize,
        #[arg(long, allow_negative_numbers = true)]
        dim: Option<isize>,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        /// Allow more than 7 vertices
        #[arg(long)]
        force: bool,
        /// Keep one representative per isomorphism class
        #[arg(long)]
        dedup: bool,
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Write a named complex in the canonical file format
    Generate {
        /// icosahedron, two-points, cycle, cross-polytope, simplex-boundary
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Output {
    #[arg(long)]
    json: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotASphere(_)
            | Error::WrongParity { .. }
            | Error::CapExceeded { .. }
            | Error::NotDivisible { .. }
            | Error::NotPalindromic { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 2, message }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| input_error(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    text
}

fn read_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    let text = fs::read_to_string(path).map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
    parse_complex(&text).map_err(|e| match e {
        Error::Parse { .. } => input_error(format!("{}: {e}", path.display())),
        other => other.into(),
    })
}

fn load(input: &str) -> Result<SimplicialComplex, Failure> {
    match input.strip_prefix("gen:") {
        Some(expr) => Ok(generators::from_expr(expr)?),
        None => read_complex(Path::new(input)),
    }
}

fn worker_pool() -> Result<rayon::ThreadPool, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(value) = std::env::var(WORKERS_ENV) {
        let n: usize = value
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| input_error(format!("{WORKERS_ENV} must be a positive integer, got {value:?}")))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| input_error(format!("cannot start workers: {e}")))
}

fn census_text(r: &CensusReport) -> String {
    let mut out = String::new();
    for rec in &r.records {
        out.push_str(&census::record_line(rec));
        out.push('\n');
    }
    let dim = r.dim_filter.map_or("any".to_string(), |d| d.to_string());
    out.push_str(&format!(
        "max_vertices={} dim={} graphs={} survivors={} findings={} identity_failures={}\n",
        r.max_vertices, dim, r.graphs_examined, r.survivors, r.findings, r.identity_failures
    ));
    out
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze { file, out } => {
            let complex = read_complex(&file)?;
            let report = report::analyze_report(&complex, &file.display().to_string())?;
            let text = if out.json { to_json(&report) } else { report.to_string() };
            emit(out.output.as_deref(), &text)?;
            Ok(0)
        }
        Command::Verify { input, suite, strict, out } => {
            let (suites, explicit) = parse_suites(&suite).map_err(input_error)?;
            let complex = load(&input)?;
            let report = report::verify(&complex, &input, &suites, explicit)?;
            let text = if out.json { to_json(&report) } else { report.to_string() };
            emit(out.output.as_deref(), &text)?;
            Ok(if !report.all_hold() || (strict && report.has_findings()) { 1 } else { 0 })
        }
        Command::Census { max_vertices, dim, csv, force, dedup, strict, out } => {
            let config = CensusConfig { max_vertices, dim_filter: dim, force };
            census::check_config(&config)?;
            let mut report = worker_pool()?.install(|| census::run_census(&config))?;
            if dedup {
                report.records = census::dedup_isomorphic(&report.records);
                report.survivors = report.records.len();
                report.findings = report.records.iter().filter(|r| r.finding).count();
                report.identity_failures = report.records.iter().filter(|r| !r.identities_hold()).count();
            }
            let text = if csv {
                census::records_to_csv(&report.records)
            } else if out.json {
                to_json(&report)
            } else {
                census_text(&report)
            };
            emit(out.output.as_deref(), &text)?;
            for r in report.records.iter().filter(|r| r.finding) {
                eprintln!("FINDING: n={} mask={:#x} violates the conjectured sign", r.vertex_count, r.graph_mask);
            }
            Ok(if report.identity_failures > 0 || (strict && report.findings > 0) { 1 } else { 0 })
        }
        Command::Generate { name, n, m, output } => {
            let complex = generators::by_name(&name, n, m)?;
            emit(output.as_deref(), &to_canonical_text(&complex))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
