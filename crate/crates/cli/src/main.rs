//! Command-line front end: basis generation, verification, Gram matrices,
//! kernel dimensions, and Jacobi coefficients, all in exact arithmetic.
//!
//! Machine-readable output goes to stdout as JSON or plain lines; human
//! summaries go to stderr. Exit codes: 0 success, 1 verification failure,
//! 2 usage or format error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_traits::One;

use mbasis_core::json::{self, BasisFile};
use mbasis_core::scalar::{rat_from_str, rat_to_string};
use mbasis_core::{
    branch_basis, default_chain, fischer_gram, jacobi_poly, kernel_dim_oracle, verify_basis,
    BasisMode, Rat,
};

const DEFAULT_MAX_DEGREE: u32 = 8;

#[derive(Parser)]
#[command(
    name = "mbasis",
    version,
    about = "Exact orthogonal bases of spherical harmonics and monogenics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an orthogonal basis and emit it as canonical JSON.
    Gen(GenArgs),
    /// Print the exact Gram matrix of a basis file; exits 0 iff diagonal.
    Gram {
        /// Basis file produced by `gen`.
        file: PathBuf,
    },
    /// Re-verify a basis file and print one JSON check per line.
    Verify {
        /// Basis file produced by `gen`.
        file: PathBuf,
        /// Also check the element count against the kernel-dimension oracle.
        #[arg(long)]
        oracle: bool,
        /// Worker threads for the verification fan-out.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Print the exact dimension of the harmonic or monogenic kernel.
    Dims {
        #[arg(long)]
        mode: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: u32,
    },
    /// Print exact Jacobi polynomial coefficients as `power: p/q` lines.
    Jacobi {
        #[arg(long)]
        n: u32,
        /// First parameter, a rational like `1/2` or `3`.
        #[arg(long)]
        alpha: String,
        /// Second parameter, a rational like `1/2` or `3`.
        #[arg(long)]
        beta: String,
    },
}

#[derive(Args)]
struct GenArgs {
    /// `harmonic`/`har` or `monogenic`/`mon`.
    #[arg(long)]
    mode: String,
    /// Ambient dimension.
    #[arg(long)]
    m: usize,
    /// Homogeneity degree.
    #[arg(long)]
    n: u32,
    /// Head dimensions per branching level (entries 1 or 2, summing to m);
    /// defaults to step-two with a trailing 1 for odd m.
    #[arg(long, value_delimiter = ',')]
    chain: Option<Vec<usize>>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Run the full verification suite and embed its report in the file.
    #[arg(long)]
    verify: bool,
    /// Cross-check the element count against the kernel-dimension oracle.
    #[arg(long)]
    oracle: bool,
    /// Attach inexact unit-scale factors 1/sqrt(norm2) to each element.
    #[arg(long)]
    normalize: bool,
    /// Worker threads for the label fan-out; 1 keeps timing deterministic.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

enum CliError {
    /// Exit 2: bad configuration or malformed input.
    Usage(String),
    /// Exit 1: a requested check failed.
    Check(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

type CliResult = Result<(), CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Gram { file } => cmd_gram(&file),
        Command::Verify { file, oracle, jobs } => cmd_verify(&file, oracle, jobs),
        Command::Dims { mode, m, n } => cmd_dims(&mode, m, n),
        Command::Jacobi { n, alpha, beta } => cmd_jacobi(n, &alpha, &beta),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Check(msg)) => {
            eprintln!("mbasis: check failed: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("mbasis: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Print a line to stdout, tolerating a consumer that closed the pipe.
fn emit(line: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{line}");
}

fn max_degree_guard() -> Result<u32, CliError> {
    match std::env::var("MBASIS_MAX_DEGREE") {
        Ok(v) => v
            .parse::<u32>()
            .map_err(|_| CliError::usage(format!("invalid MBASIS_MAX_DEGREE value `{v}`"))),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

fn parse_mode(s: &str) -> Result<BasisMode, CliError> {
    BasisMode::parse(s).map_err(|e| CliError::usage(e.to_string()))
}

fn check_degree(n: u32) -> Result<(), CliError> {
    let guard = max_degree_guard()?;
    if n > guard {
        return Err(CliError::usage(format!(
            "degree {n} exceeds the guard {guard}; raise MBASIS_MAX_DEGREE to override"
        )));
    }
    Ok(())
}

fn install_pool<T: Send>(jobs: usize, work: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    if jobs == 0 {
        return Err(CliError::usage("--jobs must be at least 1"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::usage(format!("cannot build thread pool: {e}")))?;
    Ok(pool.install(work))
}

fn cmd_gen(args: GenArgs) -> CliResult {
    let mode = parse_mode(&args.mode)?;
    check_degree(args.n)?;
    let chain = args.chain.unwrap_or_else(|| default_chain(args.m));

    let elements = install_pool(args.jobs, || branch_basis(mode, args.m, args.n, &chain))?
        .map_err(|e| CliError::usage(format!("generation failed: {e}")))?;

    let mut all_passed = true;
    if args.oracle {
        let expected =
            kernel_dim_oracle(mode, args.m, args.n).map_err(|e| CliError::usage(e.to_string()))?;
        if elements.len() != expected {
            all_passed = false;
            eprintln!(
                "mbasis: count mismatch: {} elements vs kernel dimension {expected}",
                elements.len()
            );
        } else {
            eprintln!("mbasis: count matches kernel dimension {expected}");
        }
    }
    let report = if args.verify {
        let report = install_pool(args.jobs, || {
            verify_basis(&elements, mode, args.m, args.n, &chain, args.oracle)
        })?
        .map_err(|e| CliError::usage(e.to_string()))?;
        if !report.passed() {
            all_passed = false;
        }
        eprintln!(
            "mbasis: verification {} ({} checks, {} failures)",
            if report.passed() { "passed" } else { "FAILED" },
            report.checks.len(),
            report.failures()
        );
        Some(report)
    } else {
        None
    };

    let file = BasisFile {
        mode,
        m: args.m,
        n: args.n,
        chain,
        elements,
        report,
        normalized: args.normalize,
    };
    let rendered = json::basis_file_to_string(&file);
    match &args.out {
        Some(path) => std::fs::write(path, rendered + "\n")
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?,
        None => emit(&rendered),
    }
    eprintln!(
        "mbasis: wrote {} {} basis elements for m={}, n={}",
        file.elements.len(),
        file.mode.as_str(),
        file.m,
        file.n
    );
    if all_passed {
        Ok(())
    } else {
        Err(CliError::Check("generation checks failed".into()))
    }
}

fn read_basis(path: &PathBuf) -> Result<BasisFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    json::basis_file_from_str(&text).map_err(|e| CliError::usage(e.to_string()))
}

fn cmd_gram(path: &PathBuf) -> CliResult {
    let file = read_basis(path)?;
    let polys: Vec<_> = file.elements.iter().map(|e| e.poly.clone()).collect();
    let gram = fischer_gram(&polys).map_err(|e| CliError::usage(e.to_string()))?;
    let mut diagonal = true;
    for (i, row) in gram.iter().enumerate() {
        let rendered: Vec<[String; 2]> = row
            .iter()
            .enumerate()
            .map(|(j, entry)| {
                if i != j && !entry.is_zero() {
                    diagonal = false;
                }
                [rat_to_string(&entry.re), rat_to_string(&entry.im)]
            })
            .collect();
        emit(&serde_json::to_string(&rendered).expect("gram row"));
    }
    eprintln!(
        "mbasis: {} x {} Gram matrix is {}",
        gram.len(),
        gram.len(),
        if diagonal { "diagonal" } else { "NOT diagonal" }
    );
    if diagonal {
        Ok(())
    } else {
        Err(CliError::Check(
            "Gram matrix has nonzero off-diagonal entries".into(),
        ))
    }
}

fn cmd_verify(path: &PathBuf, oracle: bool, jobs: usize) -> CliResult {
    let file = read_basis(path)?;
    let report = install_pool(jobs, || {
        verify_basis(
            &file.elements,
            file.mode,
            file.m,
            file.n,
            &file.chain,
            oracle,
        )
    })?
    .map_err(|e| CliError::usage(e.to_string()))?;
    for check in &report.checks {
        let line = serde_json::json!({
            "detail": check.detail,
            "name": check.name,
            "passed": check.passed,
        });
        emit(&line.to_string());
    }
    emit(
        &serde_json::json!({ "failures": report.failures(), "passed": report.passed() })
            .to_string(),
    );
    eprintln!(
        "mbasis: verification {} ({} checks)",
        if report.passed() { "passed" } else { "FAILED" },
        report.checks.len()
    );
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Check(format!(
            "{} verification checks failed",
            report.failures()
        )))
    }
}

fn cmd_dims(mode: &str, m: usize, n: u32) -> CliResult {
    let mode = parse_mode(mode)?;
    check_degree(n)?;
    let bound = match mode {
        BasisMode::Harmonic => 6,
        BasisMode::Monogenic => 5,
    };
    if m == 0 || m > bound {
        return Err(CliError::usage(format!(
            "dimension {m} outside desk-scale bounds (1..={bound} for {} mode)",
            mode.as_str()
        )));
    }
    let dim = kernel_dim_oracle(mode, m, n).map_err(|e| CliError::usage(e.to_string()))?;
    emit(&dim.to_string());
    Ok(())
}

fn cmd_jacobi(n: u32, alpha: &str, beta: &str) -> CliResult {
    let alpha = rat_from_str(alpha).map_err(|e| CliError::usage(e.to_string()))?;
    let beta = rat_from_str(beta).map_err(|e| CliError::usage(e.to_string()))?;
    let poly = jacobi_poly(n, &alpha, &beta);
    for power in 0..=n {
        emit(&format!("{power}: {}", format_rat(&poly.coeff(power))));
    }
    Ok(())
}

/// Human rendering of a rational: reduced, `/1` omitted. Denominators are
/// kept positive by the underlying representation.
fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_formatting() {
        assert_eq!(format_rat(&rat_from_str("3/2").unwrap()), "3/2");
        assert_eq!(format_rat(&rat_from_str("4/2").unwrap()), "2");
        assert_eq!(format_rat(&rat_from_str("0").unwrap()), "0");
        assert_eq!(format_rat(&rat_from_str("-7/3").unwrap()), "-7/3");
    }
}
