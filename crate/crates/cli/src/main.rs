//! `nhilbert`: run the verification suites from the command line.
//!
//! Exit codes: 0 when every report passes (expected-failure fixtures count
//! as passing), 1 when any report fails, 2 for invalid input of any kind
//! (bad flags, unreadable or malformed instance files, specs the math
//! rejects, such as degenerate anchors or unbounded functionals).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::Parser;
use nhilbert_core::scalar::FieldMode;
use nhilbert_core::TolerancePolicy;
use nhilbert_harness::instance::InstanceSpec;
use nhilbert_harness::report_io::{exit_code, render_text, reports_to_ndjson, RunHeader};
use nhilbert_harness::suites::{run_suite, SuiteName};

/// Overrides the default tolerances when set; the `--tol` flag wins over it.
const TOL_ENV: &str = "NHILBERT_TOL";

#[derive(Debug, Parser)]
#[command(
    name = "nhilbert",
    version,
    about = "Verify n-inner-product space theorems on seeded random instances",
    after_help = "Exit codes: 0 all reports pass, 1 at least one failure, 2 invalid input."
)]
struct Cli {
    /// Suite to run: axioms|riesz|sesq|polarize|schwarz|norms|operator|all.
    #[arg(value_parser = SuiteName::from_str)]
    suite: SuiteName,

    /// Ambient dimension of the space.
    #[arg(long)]
    dim: Option<usize>,

    /// Order n of the n-inner product (the anchor has n-1 vectors).
    #[arg(long)]
    order: Option<usize>,

    /// Scalar field for drawn data.
    #[arg(long, value_parser = parse_field)]
    field: Option<FieldMode>,

    /// Root seed for all randomness.
    #[arg(long)]
    seed: Option<u64>,

    /// Trial count override (default: each suite's documented count).
    #[arg(long)]
    trials: Option<u64>,

    /// Tolerance override, used as both absolute and relative.
    #[arg(long)]
    tol: Option<f64>,

    /// Instance spec file (JSON); flags override its fields.
    #[arg(long)]
    input: Option<PathBuf>,

    /// Also write the NDJSON report stream to this file.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Print NDJSON to stdout instead of the text rendering.
    #[arg(long)]
    json: bool,
}

fn parse_field(s: &str) -> Result<FieldMode, String> {
    match s {
        "real" => Ok(FieldMode::Real),
        "complex" => Ok(FieldMode::Complex),
        other => Err(format!("unknown field `{other}` (expected real|complex)")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("nhilbert: error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let spec = build_spec(&cli)?;
    let reports = run_suite(cli.suite, &spec).map_err(|e| e.to_string())?;
    let header = RunHeader::new(&cli.suite.to_string(), spec.seed, spec.tolerance());

    if let Some(path) = &cli.out {
        let ndjson = reports_to_ndjson(&header, &reports);
        fs::write(path, ndjson).map_err(|e| format!("writing {}: {e}", path.display()))?;
    }
    if cli.json {
        print!("{}", reports_to_ndjson(&header, &reports));
    } else {
        print!("{}", render_text(&header, &reports));
    }
    Ok(ExitCode::from(exit_code(&reports) as u8))
}

/// Assemble the instance spec: file (if given), then flag overrides, then
/// the tolerance chain flag > env var > file/default.
fn build_spec(cli: &Cli) -> Result<InstanceSpec, String> {
    let mut spec = match &cli.input {
        Some(path) => {
            let text =
                fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?;
            serde_json::from_str(&text).map_err(|e| format!("parsing {}: {e}", path.display()))?
        }
        None => InstanceSpec::default(),
    };
    if let Some(d) = cli.dim {
        spec.dim = d;
    }
    if let Some(n) = cli.order {
        spec.order = n;
    }
    if let Some(f) = cli.field {
        spec.field = f;
    }
    if let Some(s) = cli.seed {
        spec.seed = s;
    }
    if let Some(t) = cli.trials {
        spec.trials = Some(t);
    }

    let env_tol = match std::env::var(TOL_ENV) {
        Ok(raw) => Some(
            raw.parse::<f64>()
                .map_err(|_| format!("{TOL_ENV} must be a float, got `{raw}`"))?,
        ),
        Err(_) => None,
    };
    if let Some(x) = cli.tol.or(env_tol) {
        if !x.is_finite() || x < 0.0 {
            return Err(format!(
                "tolerance must be a finite non-negative float, got {x}"
            ));
        }
        spec.tol = Some(TolerancePolicy::new(x, x));
    }
    Ok(spec)
}
