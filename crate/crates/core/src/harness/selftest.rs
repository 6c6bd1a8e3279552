//! Oracle-backed self checks run by `nsgreen selftest`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::grid::{ScalarField, UniformGrid};
use crate::kernels::{Dimension, RadialKernel};
use crate::specfun::{self, oracle_quadrature_piecewise, EULER_GAMMA};
use crate::transform::{build_kernel_table, dft_forward, KernelSpectrum, SpectralBuffer};

/// Deliberate defects used to show that the suites can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fault {
    #[default]
    None,
    /// `C₂` built with `-γ`.
    GammaSign,
    /// `C₂` with `γ` outside the `1/(2π)` factor.
    GammaPlacement,
    /// Convolution without zero padding, hence periodic.
    NoPadding,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn suite(name: &'static str, outcome: Result<String, String>) -> SuiteResult {
    match outcome {
        Ok(detail) => SuiteResult { name, passed: true, detail },
        Err(detail) => SuiteResult { name, passed: false, detail },
    }
}

pub fn run_selftest(fault: Fault) -> Vec<SuiteResult> {
    vec![
        suite("specfun accuracy", specfun_accuracy()),
        suite("kernel ODE residual", kernel_residual()),
        suite("asymptotic matching", asymptotic_matching(fault)),
        suite("DFT oracle", dft_oracle()),
        suite("convolution identity", convolution_identity(fault)),
        suite("aperiodicity", aperiodicity(fault)),
    ]
}

pub fn format_report(results: &[SuiteResult]) -> String {
    let mut out = format!("{:<22} {:<6} detail\n", "suite", "result");
    for r in results {
        out.push_str(&format!(
            "{:<22} {:<6} {}\n",
            r.name,
            if r.passed { "PASS" } else { "FAIL" },
            r.detail
        ));
    }
    out
}

fn check(worst: f64, bound: f64, what: &str) -> Result<String, String> {
    let text = format!("{what} {worst:.2e} (bound {bound:.0e})");
    if worst <= bound {
        Ok(text)
    } else {
        Err(text)
    }
}

/// Library values against quadrature of integral representations. Bessel
/// errors are scaled by `max(|J|, √(2/(πx)))` so that zeros do not dominate.
fn specfun_accuracy() -> Result<String, String> {
    let fail = |e: crate::Error| e.to_string();
    let mut worst = 0.0f64;
    for i in 0..60 {
        let x = 1e-8 * 1e11f64.powf(i as f64 / 59.0);
        let envelope = (2.0 / (PI * x.max(1.0))).sqrt();
        let step = PI / 2.0;
        let si_ref = oracle_quadrature_piecewise(|t| if t == 0.0 { 1.0 } else { t.sin() / t }, 0.0, x, step, 1e-300)
            .map_err(fail)?;
        let j0_ref = oracle_quadrature_piecewise(|t| (x * t.sin()).cos(), 0.0, PI, PI / (1.0 + x / 4.0), 1e-300)
            .map_err(fail)?
            / PI;
        let j1_ref = oracle_quadrature_piecewise(|t| (x * t.sin()).sin() * t.sin(), 0.0, PI, PI / (1.0 + x / 4.0), 1e-300)
            .map_err(fail)?
            / PI;
        let ji0_ref =
            oracle_quadrature_piecewise(|t| if t == 0.0 { 0.0 } else { specfun::one_minus_j0(t) / t }, 0.0, x, step, 1e-300)
                .map_err(fail)?;
        let pairs = [
            (specfun::si(x), si_ref, si_ref.abs()),
            (specfun::j0(x), j0_ref, envelope.max(j0_ref.abs())),
            (specfun::j1(x), j1_ref, envelope.max(j1_ref.abs())),
            (specfun::ji0(x), ji0_ref, ji0_ref.abs()),
        ];
        for (v, r, scale) in pairs {
            worst = worst.max((v - r).abs() / scale);
        }
    }
    check(worst, 1e-12, "worst scaled error")
}

/// Fourth-order finite-difference Laplacian of `G` against `-ζ`.
fn kernel_residual() -> Result<String, String> {
    let h = 1e-3;
    let mut worst = 0.0f64;
    for d in 1..=3 {
        let k = RadialKernel::new(Dimension::new(d).expect("dimension"), 1.0, 3.0).map_err(|e| e.to_string())?;
        let g = |r: f64| k.greens(r);
        for rho in [0.5, 1.0, 2.0, 5.0, 10.0] {
            let d2 = (-g(rho + 2.0 * h) + 16.0 * g(rho + h) - 30.0 * g(rho) + 16.0 * g(rho - h) - g(rho - 2.0 * h))
                / (12.0 * h * h);
            let d1 = (-g(rho + 2.0 * h) + 8.0 * g(rho + h) - 8.0 * g(rho - h) + g(rho - 2.0 * h)) / (12.0 * h);
            let lap = d2 + (d as f64 - 1.0) * d1 / rho;
            worst = worst.max((lap + k.zeta(rho)).abs() / k.zeta(rho).abs());
        }
    }
    check(worst, 1e-6, "worst relative residual")
}

fn faulty_kernel(dim: Dimension, fault: Fault) -> crate::Result<RadialKernel> {
    let k = RadialKernel::new(dim, 1.0, 3.0)?;
    let log = (2.0 * k.sigma() / k.ref_length()).ln();
    Ok(match (dim, fault) {
        (Dimension::Two, Fault::GammaSign) => {
            let c1 = k.c1();
            k.with_constants(c1, (-EULER_GAMMA - log) / (2.0 * PI))
        }
        (Dimension::Two, Fault::GammaPlacement) => {
            let c1 = k.c1();
            k.with_constants(c1, -log / (2.0 * PI) + EULER_GAMMA)
        }
        _ => k,
    })
}

/// `|G - G_sing|` shrinks over `ρ ∈ {50, 100, 200, 400}` (envelope over one
/// period) and is below `1e-3` relative at `ρ = 400` (absolute in 1D).
fn asymptotic_matching(fault: Fault) -> Result<String, String> {
    let mut worst = 0.0f64;
    for d in 1..=3 {
        let dim = Dimension::new(d).expect("dimension");
        let k = faulty_kernel(dim, fault).map_err(|e| e.to_string())?;
        let gap = |r: f64| (k.greens(r) - k.singular_greens(r).unwrap_or(f64::NAN)).abs();
        let env: Vec<f64> = [50.0, 100.0, 200.0, 400.0]
            .iter()
            .map(|&r| (0..=200).map(|i| gap(r + 2.0 * PI * i as f64 / 200.0)).fold(0.0, f64::max))
            .collect();
        if env.windows(2).any(|w| w[1] >= w[0]) {
            return Err(format!("d={d}: envelope not decreasing {env:?}"));
        }
        let last = if d == 1 {
            env[3]
        } else {
            gap(400.0) / k.singular_greens(400.0).map_err(|e| e.to_string())?.abs()
        };
        if last > 1e-3 {
            return Err(format!("d={d}: gap at rho=400 is {last:.2e}"));
        }
        worst = worst.max(last);
    }
    Ok(format!("largest gap at rho=400 {worst:.2e} (bound 1e-3)"))
}

fn naive_dft(extents: &[usize], data: &[Complex64]) -> Vec<Complex64> {
    let len = data.len();
    let index = |mut flat: usize| {
        let mut idx = vec![0; extents.len()];
        for (slot, &n) in idx.iter_mut().zip(extents).rev() {
            *slot = flat % n;
            flat /= n;
        }
        idx
    };
    (0..len)
        .map(|k| {
            let ki = index(k);
            data.iter().enumerate().fold(Complex64::new(0.0, 0.0), |acc, (j, &x)| {
                let ji = index(j);
                let phase: f64 = ki
                    .iter()
                    .zip(&ji)
                    .zip(extents)
                    .map(|((&a, &b), &n)| ((a * b) % n) as f64 / n as f64)
                    .sum();
                acc + x * Complex64::from_polar(1.0, -2.0 * PI * phase)
            })
        })
        .collect()
}

fn dft_oracle() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(7);
    let mut worst = 0.0f64;
    for extents in [vec![1usize], vec![2], vec![16], vec![64], vec![8, 8], vec![4, 16], vec![4, 4, 4], vec![2, 8, 4]] {
        let len = extents.iter().product();
        let data: Vec<Complex64> = (0..len).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        let want = naive_dft(&extents, &data);
        let got = dft_forward(SpectralBuffer::new(&extents, data).map_err(|e| e.to_string())?);
        let scale = want.iter().fold(0.0f64, |m, v| m.max(v.norm()));
        for (a, b) in got.data().iter().zip(&want) {
            worst = worst.max((a - b).norm() / scale);
        }
    }
    check(worst, 1e-13, "worst relative error")
}

fn small_setup(fault: Fault) -> crate::Result<(UniformGrid, RadialKernel, KernelSpectrum)> {
    let grid = UniformGrid::new(Dimension::Three, &[8, 8, 8], 0.5, &[0.0; 3])?;
    let k = RadialKernel::for_spacing(Dimension::Three, 0.5, 3.0)?;
    let f = |o: &[isize]| k.greens(0.5 * (o.iter().map(|v| (v * v) as f64).sum::<f64>()).sqrt());
    let spectrum = match fault {
        Fault::NoPadding => KernelSpectrum::periodic_unpadded(&grid, f)?,
        _ => KernelSpectrum::new(&grid, &build_kernel_table(&grid, f)?)?,
    };
    Ok((grid, k, spectrum))
}

fn direct_sum(grid: &UniformGrid, k: &RadialKernel, source: &ScalarField) -> Vec<f64> {
    let h = grid.spacing();
    (0..grid.len())
        .map(|i| {
            let xi = grid.multi_index(i);
            source.values().iter().enumerate().fold(0.0, |acc, (j, &s)| {
                let xj = grid.multi_index(j);
                let r2: f64 = xi.iter().zip(&xj).map(|(&a, &b)| (a as f64 - b as f64).powi(2)).sum();
                acc + k.greens(h * r2.sqrt()) * s
            }) * grid.cell_volume()
        })
        .collect()
}

fn compare_direct(fault: Fault, source: impl FnOnce(&UniformGrid) -> ScalarField) -> Result<String, String> {
    let (grid, k, spectrum) = small_setup(fault).map_err(|e| e.to_string())?;
    let s = source(&grid);
    let got = spectrum.convolve(&s).map_err(|e| e.to_string())?;
    let want = direct_sum(&grid, &k, &s);
    let scale = want.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let worst = got.values().iter().zip(&want).fold(0.0f64, |m, (a, b)| m.max((a - b).abs() / scale));
    check(worst, 1e-12, "worst relative deviation from direct sum")
}

/// An impulse at a corner reproduces the shifted kernel.
fn convolution_identity(fault: Fault) -> Result<String, String> {
    compare_direct(fault, |g| {
        let mut v = vec![0.0; g.len()];
        v[g.flat_index(&[1, 0, 6])] = 1.0 / g.cell_volume();
        ScalarField::new(g.clone(), v).expect("finite")
    })
}

/// Random sources against the direct aperiodic sum.
fn aperiodicity(fault: Fault) -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(11);
    compare_direct(fault, |g| {
        ScalarField::new(g.clone(), (0..g.len()).map(|_| rng.gen_range(-1.0..1.0)).collect()).expect("finite")
    })
}
