//! Free-space Poisson and velocity solves on a uniform grid.
//!
//! `A = G∗B` is evaluated as a discrete convolution of the source with the
//! kernel sampled in real space on the doubled box. The gradient kernel
//! `∇G` gives velocities from divergence and vorticity fields.

use std::sync::OnceLock;

use crate::error::{domain, Result};
use crate::grid::{ScalarField, UniformGrid, VectorField};
use crate::kernels::{sigma_from_spacing, RadialKernel};
use crate::transform::{build_kernel_table, doubled_grid, KernelSpectrum};

/// Which Green's function the tables sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelKind {
    Regularized,
    /// Singular baseline; the 2D and 3D origin entries are set to zero.
    Singular,
}

impl KernelKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::Regularized => "regularized",
            Self::Singular => "singular",
        }
    }
}

/// Sign of the velocity recovered from a divergence field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SignConvention {
    /// `v = -∇φ`: the divergence of the output equals the input.
    #[default]
    Helmholtz,
    /// `v̂ = +ιk θ̂/k²`, the opposite sign.
    Reversed,
}

/// Precomputed kernel tables for one grid.
#[derive(Debug)]
pub struct SolverPlan {
    grid: UniformGrid,
    kernel: RadialKernel,
    kind: KernelKind,
    sign: SignConvention,
    greens_table: ScalarField,
    greens: KernelSpectrum,
    gradient: OnceLock<Vec<(ScalarField, KernelSpectrum)>>,
}

/// `f(h√q)` for every squared cell distance `q` a table of `grid` needs.
/// In 1D the table is evaluated directly.
struct RadialCache {
    values: Vec<f64>,
}

impl RadialCache {
    fn new(grid: &UniformGrid, f: impl Fn(f64) -> f64) -> Result<Self> {
        let doubled = doubled_grid(grid)?;
        let max_q: usize = doubled.extents().iter().map(|&m| (m / 2) * (m / 2)).sum();
        let h = grid.spacing();
        let values = (0..=max_q).map(|q| f(h * (q as f64).sqrt())).collect();
        Ok(Self { values })
    }

    fn get(&self, offset: &[isize]) -> f64 {
        self.values[offset.iter().map(|&o| (o * o) as usize).sum::<usize>()]
    }
}

fn radial_table(grid: &UniformGrid, f: impl Fn(f64) -> f64) -> Result<ScalarField> {
    if grid.dim().get() == 1 {
        let h = grid.spacing();
        build_kernel_table(grid, |o| f(h * o[0].unsigned_abs() as f64))
    } else {
        let cache = RadialCache::new(grid, f)?;
        build_kernel_table(grid, |o| cache.get(o))
    }
}

pub fn build_plan(grid: &UniformGrid, ref_length: f64, regularized: bool) -> Result<SolverPlan> {
    let sigma = sigma_from_spacing(grid.spacing())?;
    let kernel = RadialKernel::new(grid.dim(), sigma, ref_length)?;
    let kind = if regularized { KernelKind::Regularized } else { KernelKind::Singular };
    let d = grid.dim().get();
    let greens_table = match kind {
        KernelKind::Regularized => radial_table(grid, |r| kernel.greens(r))?,
        KernelKind::Singular => radial_table(grid, |r| {
            match (r == 0.0, d) {
                (true, 1) => ref_length / 2.0,
                (true, _) => 0.0,
                _ => kernel.singular_greens(r).unwrap_or(0.0),
            }
        })?,
    };
    let greens = KernelSpectrum::new(grid, &greens_table)?;
    Ok(SolverPlan {
        grid: grid.clone(),
        kernel,
        kind,
        sign: SignConvention::default(),
        greens_table,
        greens,
        gradient: OnceLock::new(),
    })
}

impl SolverPlan {
    pub fn with_sign_convention(mut self, sign: SignConvention) -> Self {
        self.sign = sign;
        self
    }

    pub fn grid(&self) -> &UniformGrid {
        &self.grid
    }

    pub fn kernel(&self) -> &RadialKernel {
        &self.kernel
    }

    pub fn kind(&self) -> KernelKind {
        self.kind
    }

    pub fn sign_convention(&self) -> SignConvention {
        self.sign
    }

    /// `G` on the doubled box.
    pub fn greens_table(&self) -> &ScalarField {
        &self.greens_table
    }

    /// Components of `∇G` on the doubled box.
    pub fn gradient_tables(&self) -> Result<Vec<&ScalarField>> {
        Ok(self.gradient_parts()?.iter().map(|(t, _)| t).collect())
    }

    fn gradient_parts(&self) -> Result<&[(ScalarField, KernelSpectrum)]> {
        if let Some(parts) = self.gradient.get() {
            return Ok(parts);
        }
        let d = self.grid.dim().get();
        let k = &self.kernel;
        let slope = |r: f64| match self.kind {
            KernelKind::Regularized => k.greens_gradient_radial(r),
            KernelKind::Singular if r == 0.0 => 0.0,
            KernelKind::Singular => k.singular_gradient_radial(r).unwrap_or(0.0),
        };
        let parts = if d == 1 {
            let h = self.grid.spacing();
            let table = build_kernel_table(&self.grid, |o| {
                if o[0] == 0 {
                    0.0
                } else {
                    (o[0].signum() as f64) * slope(h * o[0].unsigned_abs() as f64)
                }
            })?;
            let spec = KernelSpectrum::new(&self.grid, &table)?;
            vec![(table, spec)]
        } else {
            let cache = RadialCache::new(&self.grid, slope)?;
            (0..d)
                .map(|a| {
                    let table = build_kernel_table(&self.grid, |o| {
                        let q: isize = o.iter().map(|v| v * v).sum();
                        if q == 0 {
                            0.0
                        } else {
                            -cache.get(o) * o[a] as f64 / (q as f64).sqrt()
                        }
                    })?;
                    let spec = KernelSpectrum::new(&self.grid, &table)?;
                    Ok((table, spec))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Ok(self.gradient.get_or_init(|| parts))
    }

    /// `A = G∗B`.
    pub fn solve_poisson(&self, b: &ScalarField) -> Result<ScalarField> {
        self.greens.convolve(b)
    }

    /// Velocity of a divergence field `θ`. Under the Helmholtz convention
    /// `v = -(∇G)∗θ`.
    pub fn solve_velocity_from_divergence(&self, theta: &ScalarField) -> Result<VectorField> {
        let sign = match self.sign {
            SignConvention::Helmholtz => -1.0,
            SignConvention::Reversed => 1.0,
        };
        let parts = self.gradient_parts()?;
        let (_, first) = &parts[0];
        let s = first.source_spectrum(theta)?;
        let comps = parts
            .iter()
            .map(|(_, k)| k.combine(&[(sign, k, &s)]))
            .collect::<Result<Vec<_>>>()?;
        VectorField::from_scalars(comps)
    }

    /// `v = ∇×(G∗ω)`. In 3D `ω` has three components; in 2D it has one
    /// (the out-of-plane vorticity) and `v = ((∂_y G)∗ω, -(∂_x G)∗ω)`.
    pub fn solve_velocity_from_curl(&self, omega: &VectorField) -> Result<VectorField> {
        self.grid.ensure_same(omega.grid())?;
        let parts = self.gradient_parts()?;
        let g = |a: usize| &parts[a].1;
        match (self.grid.dim().get(), omega.count()) {
            (2, 1) => {
                let s = g(0).source_spectrum(&omega.scalar(0))?;
                VectorField::from_scalars(vec![
                    g(1).combine(&[(1.0, g(1), &s)])?,
                    g(0).combine(&[(-1.0, g(0), &s)])?,
                ])
            }
            (3, 3) => {
                let s = (0..3)
                    .map(|c| g(0).source_spectrum(&omega.scalar(c)))
                    .collect::<Result<Vec<_>>>()?;
                let comp = |i: usize| {
                    let (j, k) = ((i + 1) % 3, (i + 2) % 3);
                    g(0).combine(&[(1.0, g(j), &s[k]), (-1.0, g(k), &s[j])])
                };
                VectorField::from_scalars(vec![comp(0)?, comp(1)?, comp(2)?])
            }
            (d, c) => domain(format!("curl solve needs 1 component in 2D or 3 in 3D, got {c} in {d}D")),
        }
    }

    /// Componentwise `ψ = G∗ω`.
    pub fn solve_streamfunction(&self, omega: &VectorField) -> Result<VectorField> {
        let comps = (0..omega.count())
            .map(|c| self.solve_poisson(&omega.scalar(c)))
            .collect::<Result<Vec<_>>>()?;
        VectorField::from_scalars(comps)
    }
}
