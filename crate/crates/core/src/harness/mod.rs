//! Analytic test cases, refinement studies, kernel tables and self checks
//! behind the `nsgreen` command line tool.

mod cases;
mod selftest;
mod study;
mod table;

pub use cases::{
    CaseKind, RadialReference, TestCase, BOUNDARY_DECAY, BUMP_DOMAIN_FACTOR, GAUSSIAN_DOMAIN_FACTOR,
};
pub use selftest::{format_report, run_selftest, Fault, SuiteResult};
pub use study::{convergence_csv, relative_errors, run_convergence, solve_case, ConvergenceRecord, SolveReport};
pub use table::kernel_table_csv;
