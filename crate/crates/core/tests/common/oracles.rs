//! Direct-summation oracles for transforms and convolutions, and smooth
//! test flows with closed-form velocities.

use std::f64::consts::PI;

use nsgreen::grid::{ScalarField, UniformGrid, VectorField};
use num_complex::Complex64;

/// `X_k = Σ_j x_j exp(-2πi j·k/N)` by direct summation, with the phase
/// reduced exactly in integers.
pub fn naive_dft(extents: &[usize], data: &[Complex64]) -> Vec<Complex64> {
    let unravel = |mut flat: usize| {
        let mut idx = vec![0usize; extents.len()];
        for (slot, &n) in idx.iter_mut().zip(extents).rev() {
            *slot = flat % n;
            flat /= n;
        }
        idx
    };
    (0..data.len())
        .map(|k| {
            let ki = unravel(k);
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, &x) in data.iter().enumerate() {
                let ji = unravel(j);
                let turns: f64 = ki
                    .iter()
                    .zip(&ji)
                    .zip(extents)
                    .map(|((&a, &b), &n)| ((a * b) % n) as f64 / n as f64)
                    .sum();
                acc += x * Complex64::from_polar(1.0, -2.0 * PI * turns);
            }
            acc
        })
        .collect()
}

/// `h^d Σ_j f(i - j) s_j` over every pair of grid points.
pub fn direct_convolution(source: &ScalarField, f: impl Fn(&[isize]) -> f64) -> Vec<f64> {
    let g = source.grid();
    let idx: Vec<Vec<isize>> =
        (0..g.len()).map(|k| g.multi_index(k).into_iter().map(|v| v as isize).collect()).collect();
    let mut offset = vec![0isize; g.dim().get()];
    idx.iter()
        .map(|xi| {
            let mut acc = 0.0;
            for (xj, &s) in idx.iter().zip(source.values()) {
                if s == 0.0 {
                    continue;
                }
                for ((o, a), b) in offset.iter_mut().zip(xi).zip(xj) {
                    *o = a - b;
                }
                acc += f(&offset) * s;
            }
            acc * g.cell_volume()
        })
        .collect()
}

pub fn max_abs(values: &[f64]) -> f64 {
    values.iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// `max |a - b| / max |b|`.
pub fn relative_linf(a: &[f64], b: &[f64]) -> f64 {
    let diff = a.iter().zip(b).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
    diff / max_abs(b)
}

pub fn relative_linf_vector(a: &VectorField, b: &VectorField) -> f64 {
    let scale = b.components().iter().map(|c| max_abs(c)).fold(0.0, f64::max);
    let diff = a
        .components()
        .iter()
        .zip(b.components())
        .map(|(x, y)| x.iter().zip(y).fold(0.0f64, |m, (p, q)| m.max((p - q).abs())))
        .fold(0.0, f64::max);
    diff / scale
}

/// Gaussian `g = exp(-r²/(2c²))` and the flows built from it. Every field
/// below decays like `g`, so spectral derivatives on the box are exact to
/// roundoff once `c/h` is a few cells.
pub struct GaussianFlow {
    pub c: f64,
}

impl GaussianFlow {
    fn g(&self, x: &[f64]) -> f64 {
        let r2: f64 = x.iter().map(|v| v * v).sum();
        (-r2 / (2.0 * self.c * self.c)).exp()
    }

    fn sample(&self, grid: &UniformGrid, f: impl Fn(&[f64]) -> f64) -> ScalarField {
        ScalarField::sample(grid.clone(), f).unwrap()
    }

    /// `θ = -∇²g`.
    pub fn divergence(&self, grid: &UniformGrid) -> ScalarField {
        let c2 = self.c * self.c;
        let d = grid.dim().get() as f64;
        self.sample(grid, |x| {
            let r2: f64 = x.iter().map(|v| v * v).sum();
            (d / c2 - r2 / (c2 * c2)) * self.g(x)
        })
    }

    /// `v = -∇g`, the Helmholtz velocity of [`Self::divergence`].
    pub fn divergence_velocity(&self, grid: &UniformGrid) -> VectorField {
        let c2 = self.c * self.c;
        let parts = (0..grid.dim().get()).map(|a| self.sample(grid, |x| x[a] / c2 * self.g(x))).collect();
        VectorField::from_scalars(parts).unwrap()
    }

    /// 3D vorticity of `ψ = ∇×(0, 0, g)`: `ω = (-yF, xF, 0)`,
    /// `F = g(5 - r²/c²)/c⁴`.
    pub fn vorticity_3d(&self, grid: &UniformGrid) -> VectorField {
        let c2 = self.c * self.c;
        let f = |x: &[f64]| {
            let r2: f64 = x.iter().map(|v| v * v).sum();
            self.g(x) * (5.0 - r2 / c2) / (c2 * c2)
        };
        VectorField::from_scalars(vec![
            self.sample(grid, |x| -x[1] * f(x)),
            self.sample(grid, |x| x[0] * f(x)),
            self.sample(grid, |_| 0.0),
        ])
        .unwrap()
    }

    /// `ψ = (-y g/c², x g/c², 0)`.
    pub fn streamfunction_3d(&self, grid: &UniformGrid) -> VectorField {
        let c2 = self.c * self.c;
        VectorField::from_scalars(vec![
            self.sample(grid, |x| -x[1] * self.g(x) / c2),
            self.sample(grid, |x| x[0] * self.g(x) / c2),
            self.sample(grid, |_| 0.0),
        ])
        .unwrap()
    }

    /// `v = ∇×ψ = (xz g/c⁴, yz g/c⁴, g(2/c² - (x² + y²)/c⁴))`.
    pub fn curl_velocity_3d(&self, grid: &UniformGrid) -> VectorField {
        let c2 = self.c * self.c;
        let c4 = c2 * c2;
        VectorField::from_scalars(vec![
            self.sample(grid, |x| x[0] * x[2] * self.g(x) / c4),
            self.sample(grid, |x| x[1] * x[2] * self.g(x) / c4),
            self.sample(grid, |x| self.g(x) * (2.0 / c2 - (x[0] * x[0] + x[1] * x[1]) / c4)),
        ])
        .unwrap()
    }

    /// Planar vorticity `ω = -∇²g` with `ψ = g`.
    pub fn vorticity_2d(&self, grid: &UniformGrid) -> VectorField {
        VectorField::from_scalars(vec![self.divergence(grid)]).unwrap()
    }

    /// `v = (∂_y g, -∂_x g) = (-y g/c², x g/c²)`.
    pub fn curl_velocity_2d(&self, grid: &UniformGrid) -> VectorField {
        let c2 = self.c * self.c;
        VectorField::from_scalars(vec![
            self.sample(grid, |x| -x[1] * self.g(x) / c2),
            self.sample(grid, |x| x[0] * self.g(x) / c2),
        ])
        .unwrap()
    }
}
