use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nsgreen::grid::{write_binary, write_csv};
use nsgreen::harness::{
    convergence_csv, format_report, kernel_table_csv, run_convergence, run_selftest, solve_case, CaseKind,
    Fault, TestCase, BOUNDARY_DECAY,
};
use nsgreen::kernels::Dimension;
use nsgreen::solver::KernelKind;
use nsgreen::Error;

/// Regularized free-space Green's functions: kernel tables, test solves and
/// convergence studies.
#[derive(Parser)]
#[command(name = "nsgreen", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate regularized and singular G and K for plotting.
    KernelTable {
        #[arg(long)]
        dim: usize,
        /// Grid spacing; the regularization length is h/π.
        #[arg(long, default_value_t = 1.0)]
        h: f64,
        #[arg(long, default_value_t = 3.0)]
        ref_length: f64,
        #[arg(long, default_value_t = 10.0)]
        r_max: f64,
        #[arg(long, default_value_t = 201)]
        samples: usize,
        /// Output path; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve an analytic case and report errors against its reference.
    Solve {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = KernelArg::Regularized)]
        kernel: KernelArg,
        /// Solution file; with `--kernel both` the kernel name is inserted
        /// before the extension.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Binary)]
        format: Format,
    },
    /// Grid-refinement study; writes one CSV row per size and kernel.
    Convergence {
        #[command(flatten)]
        case: CaseArgs,
        /// Ascending powers of two, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, value_enum, default_value_t = KernelArg::Both)]
        kernel: KernelArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in oracle checks.
    Selftest {
        #[arg(long, value_enum, hide = true, default_value_t = FaultArg::None)]
        inject_fault: FaultArg,
    },
}

#[derive(clap::Args)]
struct CaseArgs {
    #[arg(long)]
    dim: usize,
    #[arg(long, value_enum, default_value_t = CaseArg::Gaussian)]
    case: CaseArg,
    /// Gaussian width c, bump radius R, or the point-vortex domain half-width.
    #[arg(long, default_value_t = 1.0)]
    width: f64,
    #[arg(long, default_value_t = 3.0)]
    ref_length: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum CaseArg {
    Gaussian,
    CompactBump,
    PointVortex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KernelArg {
    Regularized,
    Singular,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Binary,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    None,
    GammaSign,
    GammaPlacement,
    NoPadding,
}

impl KernelArg {
    fn kinds(self) -> Vec<KernelKind> {
        match self {
            Self::Regularized => vec![KernelKind::Regularized],
            Self::Singular => vec![KernelKind::Singular],
            Self::Both => vec![KernelKind::Regularized, KernelKind::Singular],
        }
    }
}

impl CaseArgs {
    fn build(&self) -> nsgreen::Result<TestCase> {
        let kind = match self.case {
            CaseArg::Gaussian => CaseKind::Gaussian,
            CaseArg::CompactBump => CaseKind::CompactBump,
            CaseArg::PointVortex => CaseKind::PointVortex,
        };
        TestCase::new(Dimension::new(self.dim)?, kind, self.width, self.ref_length)
    }
}

enum Failure {
    Validation(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) => Failure::Io(e.to_string()),
            other => Failure::Validation(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            let mut w = create(path)?;
            w.write_all(text.as_bytes())?;
            w.flush()?;
        }
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn tagged(path: &Path, tag: &str) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}.{tag}.{}", ext.to_string_lossy()),
        None => format!("{stem}.{tag}"),
    };
    path.with_file_name(name)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::KernelTable { dim, h, ref_length, r_max, samples, out } => {
            let text = kernel_table_csv(Dimension::new(dim)?, h, ref_length, r_max, samples)?;
            emit(&text, out.as_deref())
        }
        Command::Solve { case, n, kernel, out, format } => {
            let case = case.build()?;
            let kinds = kernel.kinds();
            for kind in kinds.iter().copied() {
                let report = solve_case(&case, n, kind)?;
                if !report.resolved() {
                    eprintln!(
                        "warning: right-hand side is {:.2e} of its peak at the domain boundary (limit {BOUNDARY_DECAY:.0e})",
                        report.boundary_decay
                    );
                }
                println!(
                    "kernel {} n {n} h {:e} error_linf {:e} error_l2 {:e}",
                    kind.name(),
                    report.solution.grid().spacing(),
                    report.error_linf,
                    report.error_l2
                );
                if let Some(path) = &out {
                    let path = if kinds.len() > 1 { tagged(path, kind.name()) } else { path.clone() };
                    let mut w = create(&path)?;
                    match format {
                        Format::Binary => write_binary(&report.solution, &mut w)?,
                        Format::Csv => write_csv(&report.solution, &mut w)?,
                    }
                    w.flush()?;
                }
            }
            Ok(())
        }
        Command::Convergence { case, n, kernel, out } => {
            let case = case.build()?;
            if case.boundary_decay() > BOUNDARY_DECAY {
                eprintln!(
                    "warning: right-hand side is {:.2e} of its peak at the domain boundary",
                    case.boundary_decay()
                );
            }
            let rows = run_convergence(&case, &n, &kernel.kinds())?;
            emit(&convergence_csv(&rows), out.as_deref())
        }
        Command::Selftest { inject_fault } => {
            let fault = match inject_fault {
                FaultArg::None => Fault::None,
                FaultArg::GammaSign => Fault::GammaSign,
                FaultArg::GammaPlacement => Fault::GammaPlacement,
                FaultArg::NoPadding => Fault::NoPadding,
            };
            let results = run_selftest(fault);
            print!("{}", format_report(&results));
            if results.iter().all(|r| r.passed) {
                Ok(())
            } else {
                Err(Failure::Validation("self test failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
