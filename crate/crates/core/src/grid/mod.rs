//! Uniform isotropic meshes and the scalar and vector fields sampled on them.
//!
//! Samples are stored row-major with the last axis fastest. The position of
//! multi-index `i` is `origin + h·i`.

mod io;

pub use io::{read_binary, write_binary, write_csv, FILE_MAGIC, FILE_VERSION};

use crate::error::{domain, Error, Result};
use crate::kernels::Dimension;

/// Smallest accepted extent along any axis.
pub const MIN_EXTENT: usize = 4;

/// A `d`-dimensional uniform mesh with one spacing for every axis.
#[derive(Debug, Clone, PartialEq)]
pub struct UniformGrid {
    dim: Dimension,
    extents: Vec<usize>,
    spacing: f64,
    origin: Vec<f64>,
}

impl UniformGrid {
    pub fn new(dim: Dimension, extents: &[usize], spacing: f64, origin: &[f64]) -> Result<Self> {
        let d = dim.get();
        if extents.len() != d || origin.len() != d {
            return domain(format!(
                "{d}-dimensional grid needs {d} extents and origin coordinates, got {} and {}",
                extents.len(),
                origin.len()
            ));
        }
        if let Some(&n) = extents.iter().find(|&&n| n < MIN_EXTENT) {
            return domain(format!("grid extents must be at least {MIN_EXTENT}, got {n}"));
        }
        if spacing <= 0.0 || !spacing.is_finite() {
            return domain(format!("grid spacing must be positive and finite, got {spacing}"));
        }
        if origin.iter().any(|x| !x.is_finite()) {
            return domain("grid origin must be finite");
        }
        Ok(Self { dim, extents: extents.to_vec(), spacing, origin: origin.to_vec() })
    }

    /// `n` points per axis, centred so that index `n/2` sits on `center`.
    pub fn centered(dim: Dimension, n: usize, spacing: f64, center: f64) -> Result<Self> {
        let origin = vec![center - spacing * (n / 2) as f64; dim.get()];
        Self::new(dim, &vec![n; dim.get()], spacing, &origin)
    }

    /// Accepts per-axis spacings; they must all be equal.
    pub fn with_spacings(
        dim: Dimension,
        extents: &[usize],
        spacings: &[f64],
        origin: &[f64],
    ) -> Result<Self> {
        let Some(&h) = spacings.first() else {
            return domain("no grid spacing given");
        };
        if spacings.len() != dim.get() {
            return domain(format!("expected {} spacings, got {}", dim.get(), spacings.len()));
        }
        if spacings.iter().any(|&s| s != h) {
            return domain(format!("anisotropic spacing {spacings:?} is not supported"));
        }
        Self::new(dim, extents, h, origin)
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn extents(&self) -> &[usize] {
        &self.extents
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn origin(&self) -> &[f64] {
        &self.origin
    }

    /// Number of samples.
    pub fn len(&self) -> usize {
        self.extents.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Cell volume `h^d`.
    pub fn cell_volume(&self) -> f64 {
        self.spacing.powi(self.dim.get() as i32)
    }

    /// Flat offset of a multi-index.
    pub fn flat_index(&self, index: &[usize]) -> usize {
        index.iter().zip(&self.extents).fold(0, |acc, (&i, &n)| acc * n + i)
    }

    /// Multi-index of a flat offset.
    pub fn multi_index(&self, mut flat: usize) -> Vec<usize> {
        let mut index = vec![0; self.extents.len()];
        for (slot, &n) in index.iter_mut().zip(&self.extents).rev() {
            *slot = flat % n;
            flat /= n;
        }
        index
    }

    pub fn position(&self, index: &[usize]) -> Vec<f64> {
        index
            .iter()
            .zip(&self.origin)
            .map(|(&i, &x0)| x0 + self.spacing * i as f64)
            .collect()
    }

    /// Fails unless `other` is the same mesh.
    pub fn ensure_same(&self, other: &UniformGrid) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::GridMismatch(format!(
                "extents {:?} h {} origin {:?} versus extents {:?} h {} origin {:?}",
                self.extents, self.spacing, self.origin, other.extents, other.spacing, other.origin
            )))
        }
    }
}

fn check_finite(grid: &UniformGrid, values: &[f64]) -> Result<()> {
    match values.iter().position(|v| !v.is_finite()) {
        Some(flat) => Err(Error::Evaluation { index: grid.multi_index(flat), value: values[flat] }),
        None => Ok(()),
    }
}

/// Real samples on a grid. Values are always finite.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    grid: UniformGrid,
    values: Vec<f64>,
}

impl ScalarField {
    pub fn new(grid: UniformGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return domain(format!("grid has {} samples, got {} values", grid.len(), values.len()));
        }
        check_finite(&grid, &values)?;
        Ok(Self { grid, values })
    }

    pub fn zeros(grid: UniformGrid) -> Self {
        let values = vec![0.0; grid.len()];
        Self { grid, values }
    }

    /// Samples `f` at every grid position.
    pub fn sample(grid: UniformGrid, f: impl Fn(&[f64]) -> f64) -> Result<Self> {
        let values = (0..grid.len()).map(|flat| f(&grid.position(&grid.multi_index(flat)))).collect();
        Self::new(grid, values)
    }

    pub fn grid(&self) -> &UniformGrid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn get(&self, index: &[usize]) -> f64 {
        self.values[self.grid.flat_index(index)]
    }

    /// Largest absolute sample.
    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Several real components on one grid, e.g. velocity or vorticity.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorField {
    grid: UniformGrid,
    components: Vec<Vec<f64>>,
}

impl VectorField {
    pub fn new(grid: UniformGrid, components: Vec<Vec<f64>>) -> Result<Self> {
        if components.is_empty() {
            return domain("a vector field needs at least one component");
        }
        for c in &components {
            if c.len() != grid.len() {
                return domain(format!("grid has {} samples, got a component of {}", grid.len(), c.len()));
            }
            check_finite(&grid, c)?;
        }
        Ok(Self { grid, components })
    }

    pub fn zeros(grid: UniformGrid, count: usize) -> Self {
        let components = vec![vec![0.0; grid.len()]; count.max(1)];
        Self { grid, components }
    }

    pub fn from_scalars(fields: Vec<ScalarField>) -> Result<Self> {
        let Some(first) = fields.first() else {
            return domain("a vector field needs at least one component");
        };
        let grid = first.grid.clone();
        for f in &fields {
            grid.ensure_same(&f.grid)?;
        }
        Ok(Self { grid, components: fields.into_iter().map(|f| f.values).collect() })
    }

    pub fn grid(&self) -> &UniformGrid {
        &self.grid
    }

    pub fn count(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, i: usize) -> &[f64] {
        &self.components[i]
    }

    pub fn components(&self) -> &[Vec<f64>] {
        &self.components
    }

    pub fn scalar(&self, i: usize) -> ScalarField {
        ScalarField { grid: self.grid.clone(), values: self.components[i].clone() }
    }
}

/// Samples `f(|x - center|)` on the grid.
pub fn sample_radial(
    grid: &UniformGrid,
    f: impl Fn(f64) -> f64,
    center: &[f64],
) -> Result<ScalarField> {
    if center.len() != grid.dim().get() {
        return domain(format!("center has {} coordinates, grid is {}-dimensional", center.len(), grid.dim().get()));
    }
    ScalarField::sample(grid.clone(), |x| {
        let r2: f64 = x.iter().zip(center).map(|(a, b)| (a - b) * (a - b)).sum();
        f(r2.sqrt())
    })
}

/// `(max |a - b|, h^{d/2} √Σ(a - b)²)`.
pub fn norms(a: &ScalarField, b: &ScalarField) -> Result<(f64, f64)> {
    a.grid.ensure_same(&b.grid)?;
    let (linf, sum2) = a
        .values
        .iter()
        .zip(&b.values)
        .fold((0.0f64, 0.0), |(m, s), (x, y)| ((x - y).abs().max(m), s + (x - y) * (x - y)));
    Ok((linf, (a.grid.cell_volume() * sum2).sqrt()))
}
