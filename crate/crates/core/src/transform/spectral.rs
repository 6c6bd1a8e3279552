//! Spectral derivatives of fields treated as periodic on their own box.
//!
//! Used to check recovered velocities; meaningful only for fields that
//! decay to roundoff at the box edges. The Nyquist mode is differentiated
//! to zero.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::convolution::wrapped_offset;
use super::fft::{dft_forward, dft_inverse, SpectralBuffer};
use crate::error::{domain, Result};
use crate::grid::{ScalarField, VectorField};

/// `∂f/∂x_axis`.
pub fn spectral_derivative(field: &ScalarField, axis: usize) -> Result<ScalarField> {
    let grid = field.grid();
    if axis >= grid.dim().get() {
        return domain(format!("axis {axis} out of range for a {}-dimensional grid", grid.dim().get()));
    }
    let ext = grid.extents().to_vec();
    let n = ext[axis];
    let stride: usize = ext[axis + 1..].iter().product();
    let dk = 2.0 * PI / (n as f64 * grid.spacing());
    let mut spec = dft_forward(SpectralBuffer::from_real(&ext, field.values())?);
    for (flat, v) in spec.data_mut().iter_mut().enumerate() {
        let j = (flat / stride) % n;
        let k = if 2 * j == n { 0.0 } else { dk * wrapped_offset(j, n) as f64 };
        *v *= Complex64::new(0.0, k);
    }
    let values = dft_inverse(spec).into_data().into_iter().map(|v| v.re).collect();
    ScalarField::new(grid.clone(), values)
}

pub fn spectral_gradient(field: &ScalarField) -> Result<VectorField> {
    let parts = (0..field.grid().dim().get())
        .map(|a| spectral_derivative(field, a))
        .collect::<Result<Vec<_>>>()?;
    VectorField::from_scalars(parts)
}

/// `Σ_a ∂v_a/∂x_a`; the field needs one component per axis.
pub fn spectral_divergence(v: &VectorField) -> Result<ScalarField> {
    let d = v.grid().dim().get();
    if v.count() != d {
        return domain(format!("divergence needs {d} components, got {}", v.count()));
    }
    let mut acc = vec![0.0; v.grid().len()];
    for a in 0..d {
        let da = spectral_derivative(&v.scalar(a), a)?;
        for (s, x) in acc.iter_mut().zip(da.values()) {
            *s += x;
        }
    }
    ScalarField::new(v.grid().clone(), acc)
}

/// Curl of a 3D vector field.
pub fn spectral_curl(v: &VectorField) -> Result<VectorField> {
    if v.grid().dim().get() != 3 || v.count() != 3 {
        return domain("3D curl needs a three-component field on a 3D grid");
    }
    let d = |c: usize, a: usize| spectral_derivative(&v.scalar(c), a);
    let sub = |a: ScalarField, b: ScalarField| {
        let values = a.values().iter().zip(b.values()).map(|(x, y)| x - y).collect();
        ScalarField::new(a.grid().clone(), values)
    };
    VectorField::from_scalars(vec![
        sub(d(2, 1)?, d(1, 2)?)?,
        sub(d(0, 2)?, d(2, 0)?)?,
        sub(d(1, 0)?, d(0, 1)?)?,
    ])
}

/// Scalar curl `∂v_y/∂x - ∂v_x/∂y` of a planar field.
pub fn spectral_curl_2d(v: &VectorField) -> Result<ScalarField> {
    if v.grid().dim().get() != 2 || v.count() != 2 {
        return domain("2D curl needs a two-component field on a 2D grid");
    }
    let a = spectral_derivative(&v.scalar(1), 0)?;
    let b = spectral_derivative(&v.scalar(0), 1)?;
    let values = a.values().iter().zip(b.values()).map(|(x, y)| x - y).collect();
    ScalarField::new(v.grid().clone(), values)
}
