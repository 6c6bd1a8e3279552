//! Solves of analytic cases and grid-refinement studies.

use std::fmt::Write as _;
use std::thread;

use super::cases::{TestCase, BOUNDARY_DECAY};
use crate::error::{domain, Result};
use crate::grid::ScalarField;
use crate::solver::{build_plan, KernelKind};

/// Outcome of one solve against the case reference.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub kind: KernelKind,
    pub solution: ScalarField,
    pub reference: ScalarField,
    /// `max |A - A_ref| / max |A_ref|`.
    pub error_linf: f64,
    /// `‖A - A_ref‖₂ / ‖A_ref‖₂`.
    pub error_l2: f64,
    /// Right-hand side at the box boundary over its peak.
    pub boundary_decay: f64,
}

impl SolveReport {
    pub fn resolved(&self) -> bool {
        self.boundary_decay <= BOUNDARY_DECAY
    }
}

/// Relative `(l_inf, l_2)` errors of `value` against `reference`.
pub fn relative_errors(value: &ScalarField, reference: &ScalarField) -> Result<(f64, f64)> {
    value.grid().ensure_same(reference.grid())?;
    let (mut linf, mut sum2, mut peak, mut ref2) = (0.0f64, 0.0, 0.0f64, 0.0);
    for (a, r) in value.values().iter().zip(reference.values()) {
        linf = linf.max((a - r).abs());
        sum2 += (a - r) * (a - r);
        peak = peak.max(r.abs());
        ref2 += r * r;
    }
    if peak == 0.0 {
        return Ok((linf, sum2.sqrt()));
    }
    Ok((linf / peak, (sum2 / ref2).sqrt()))
}

pub fn solve_case(case: &TestCase, n: usize, kind: KernelKind) -> Result<SolveReport> {
    let grid = case.grid(n)?;
    let rhs = case.rhs(&grid)?;
    let reference = case.reference(&grid)?;
    let plan = build_plan(&grid, case.ref_length(), kind == KernelKind::Regularized)?;
    let solution = plan.solve_poisson(&rhs)?;
    let (error_linf, error_l2) = relative_errors(&solution, &reference)?;
    Ok(SolveReport { kind, solution, reference, error_linf, error_l2, boundary_decay: case.boundary_decay() })
}

/// One row of a refinement study.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRecord {
    pub n: usize,
    pub h: f64,
    pub kernel: KernelKind,
    pub error_linf: f64,
    pub error_l2: f64,
    /// `log₂` of the `l_inf` error ratio to the previous row of the same
    /// kernel.
    pub observed_order: Option<f64>,
}

/// Solves `case` for every `n` and kernel. Rows are grouped by kernel in the
/// given order, `n` ascending. Grid sizes run on separate threads.
pub fn run_convergence(case: &TestCase, ns: &[usize], kinds: &[KernelKind]) -> Result<Vec<ConvergenceRecord>> {
    if ns.is_empty() || kinds.is_empty() {
        return domain("a convergence study needs at least one size and one kernel");
    }
    if ns.windows(2).any(|w| w[1] <= w[0]) {
        return domain(format!("sizes must be strictly increasing, got {ns:?}"));
    }
    if let Some(n) = ns.iter().find(|n| !n.is_power_of_two()) {
        return domain(format!("sizes must be powers of two, got {n}"));
    }
    let jobs: Vec<(KernelKind, usize)> = kinds.iter().flat_map(|&k| ns.iter().map(move |&n| (k, n))).collect();
    let reports: Vec<Result<SolveReport>> = thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .iter()
            .map(|&(k, n)| scope.spawn(move || solve_case(case, n, k)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("solve thread panicked")).collect()
    });
    let mut rows: Vec<ConvergenceRecord> = Vec::with_capacity(jobs.len());
    for (&(kernel, n), report) in jobs.iter().zip(reports) {
        let report = report?;
        let observed_order = match rows.last() {
            Some(prev) if prev.kernel == kernel => Some((prev.error_linf / report.error_linf).log2()),
            _ => None,
        };
        rows.push(ConvergenceRecord {
            n,
            h: report.solution.grid().spacing(),
            kernel,
            error_linf: report.error_linf,
            error_l2: report.error_l2,
            observed_order,
        });
    }
    Ok(rows)
}

pub fn convergence_csv(rows: &[ConvergenceRecord]) -> String {
    let mut out = String::from("n,h,kernel,error_linf,error_l2,observed_order\n");
    for r in rows {
        let order = r.observed_order.map(|o| format!("{o:e}")).unwrap_or_default();
        writeln!(out, "{},{:e},{},{:e},{:e},{}", r.n, r.h, r.kernel.name(), r.error_linf, r.error_l2, order)
            .expect("write to string");
    }
    out
}
