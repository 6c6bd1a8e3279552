//! Regularized Green's functions `G`, gradient magnitudes `K` and the
//! mollifier `ζ` for the unbounded Poisson equation `∇²A = -B`, together
//! with their singular counterparts.
//!
//! The regularized kernels solve `∇²G = -ζ`, where `ζ` is the real-space
//! image of a sharp radial cut-off at normalized wavenumber `s = σk = 1`.
//! All formulas are written in the normalized radius `ρ = r/σ`.
//!
//! | d | `G(ρ)`                              | `K(ρ)`                              |
//! |---|-------------------------------------|-------------------------------------|
//! | 1 | `-(σ/π)(ρ Si(ρ) + cos ρ) + C₁`      | `-Si(ρ)/π`                          |
//! | 2 | `-Ji₀(ρ)/(2π) + C₂`                 | `(1 - J₀(ρ))/(2πσρ)`                |
//! | 3 | `Si(ρ)/(2π²σρ)`                     | `(Si(ρ) - sin ρ)/(2π²σ²ρ²)`         |
//!
//! In 2D and 3D `∇G = -K e_r` with `K ≥ 0`; in 1D `K` is the signed slope
//! `dG/dr` for `r > 0` and the full derivative follows by odd extension.
//!
//! The integration constants make `G` approach the singular Green's function
//! for large `ρ`: `C₁ = L/2` and `C₂ = (γ - ln(2σ/L))/(2π)`.

use std::f64::consts::{FRAC_1_PI, PI};

use crate::error::{domain, Result};
use crate::specfun::{
    j1_over_x, one_minus_j0, si, si_over_x_series, sinc_minus_cos_over_x2, ji0, EULER_GAMMA,
};

/// Below this normalized radius removable singularities switch to series.
pub const SERIES_RADIUS: f64 = 1e-2;

/// `(Si(ρ) - sin ρ)/ρ²` and `(sin ρ/ρ - cos ρ)/ρ²` cancel to about `ρ²/9`
/// digits; their series take over below this radius.
pub const CANCELLATION_RADIUS: f64 = 1.0;

/// Spatial dimension of a kernel or grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dimension {
    One = 1,
    Two = 2,
    Three = 3,
}

impl Dimension {
    pub fn new(d: usize) -> Result<Self> {
        match d {
            1 => Ok(Self::One),
            2 => Ok(Self::Two),
            3 => Ok(Self::Three),
            _ => domain(format!("dimension must be 1, 2 or 3, got {d}")),
        }
    }

    pub fn get(self) -> usize {
        self as usize
    }
}

/// Mathematical constants entering the kernels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    /// Euler–Mascheroni constant.
    pub gamma: f64,
    pub pi: f64,
}

impl Constants {
    pub const STANDARD: Self = Self { gamma: EULER_GAMMA, pi: PI };
}

/// Regularization length tied to the mesh: `σ = h/π`, so that the cut-off
/// `s = 1` falls on the Nyquist wavenumber `π/h`.
pub fn sigma_from_spacing(h: f64) -> Result<f64> {
    if h <= 0.0 || !h.is_finite() {
        return domain(format!("grid spacing must be positive and finite, got {h}"));
    }
    Ok(h / PI)
}

/// Singular free-space Green's function: `-(r - L)/2`, `-ln(r/L)/(2π)` or
/// `1/(4πr)`.
pub fn singular_greens(dim: Dimension, r: f64, ref_length: f64) -> Result<f64> {
    if r.is_nan() || r <= 0.0 {
        return domain(format!("singular Green's function needs r > 0, got {r}"));
    }
    Ok(match dim {
        Dimension::One => -0.5 * (r - ref_length),
        Dimension::Two => -(r / ref_length).ln() / (2.0 * PI),
        Dimension::Three => 1.0 / (4.0 * PI * r),
    })
}

/// A regularized radial kernel for one dimension and regularization length.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialKernel {
    dim: Dimension,
    sigma: f64,
    ref_length: f64,
    c1: f64,
    c2: f64,
}

impl RadialKernel {
    /// `ref_length` is the reference length `L` fixing the 1D and 2D
    /// integration constants; it is ignored in 3D.
    pub fn new(dim: Dimension, sigma: f64, ref_length: f64) -> Result<Self> {
        if sigma <= 0.0 || !sigma.is_finite() {
            return domain(format!("sigma must be positive and finite, got {sigma}"));
        }
        if dim != Dimension::Three && !(ref_length > 0.0 && ref_length.is_finite()) {
            return domain(format!("reference length must be positive, got {ref_length}"));
        }
        let c1 = 0.5 * ref_length;
        let c2 = (EULER_GAMMA - (2.0 * sigma / ref_length).ln()) / (2.0 * PI);
        Ok(Self { dim, sigma, ref_length, c1, c2 })
    }

    /// Kernel regularized at the Nyquist scale of a mesh with spacing `h`.
    pub fn for_spacing(dim: Dimension, h: f64, ref_length: f64) -> Result<Self> {
        Self::new(dim, sigma_from_spacing(h)?, ref_length)
    }

    /// Replaces the integration constants. Used by the self-test to inject
    /// a misplaced-constant fault.
    #[doc(hidden)]
    pub fn with_constants(mut self, c1: f64, c2: f64) -> Self {
        self.c1 = c1;
        self.c2 = c2;
        self
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn ref_length(&self) -> f64 {
        self.ref_length
    }

    pub fn c1(&self) -> f64 {
        self.c1
    }

    pub fn c2(&self) -> f64 {
        self.c2
    }

    /// Mollifier `ζ(ρ) = J_{d/2}(ρ)/(2πσ²ρ)^{d/2}` at radius `|r|`.
    pub fn zeta(&self, r: f64) -> f64 {
        let s = self.sigma;
        let rho = r.abs() / s;
        match self.dim {
            Dimension::One => {
                let sinc = if rho < SERIES_RADIUS {
                    let r2 = rho * rho;
                    1.0 - r2 / 6.0 * (1.0 - r2 / 20.0 * (1.0 - r2 / 42.0))
                } else {
                    rho.sin() / rho
                };
                sinc * FRAC_1_PI / s
            }
            Dimension::Two => j1_over_x(rho) / (2.0 * PI * s * s),
            Dimension::Three => sinc_minus_cos_over_x2(rho) / (2.0 * PI * PI * s * s * s),
        }
    }

    /// Regularized Green's function at radius `|r|`.
    pub fn greens(&self, r: f64) -> f64 {
        let s = self.sigma;
        let rho = r.abs() / s;
        match self.dim {
            Dimension::One => -(s / PI) * (si(rho) * rho + rho.cos()) + self.c1,
            Dimension::Two => -ji0(rho) / (2.0 * PI) + self.c2,
            Dimension::Three => {
                let si_over_rho = if rho < SERIES_RADIUS { si_over_x_series(rho) } else { si(rho) / rho };
                si_over_rho / (2.0 * PI * PI * s)
            }
        }
    }

    /// Scalar gradient kernel `K` at radius `|r|`.
    ///
    /// 2D/3D: `K = -dG/dr ≥ 0` with `K(0) = 0`. 1D: `K = -Si(ρ)/π`, the slope
    /// `dG/dr` on the positive half-line.
    pub fn greens_gradient_radial(&self, r: f64) -> f64 {
        let s = self.sigma;
        let rho = r.abs() / s;
        match self.dim {
            Dimension::One => -si(rho) * FRAC_1_PI,
            Dimension::Two => {
                if rho == 0.0 {
                    0.0
                } else {
                    one_minus_j0(rho) / rho / (2.0 * PI * s)
                }
            }
            Dimension::Three => si_minus_sin_over_x2(rho) / (2.0 * PI * PI * s * s),
        }
    }

    /// `∇G(x)`. Zero at the origin in every dimension.
    pub fn gradient_vector(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.dim.get());
        if self.dim == Dimension::One {
            if x[0] == 0.0 {
                return vec![0.0];
            }
            return vec![x[0].signum() * self.greens_gradient_radial(x[0])];
        }
        let r = norm(x);
        if r == 0.0 {
            return vec![0.0; x.len()];
        }
        let k = self.greens_gradient_radial(r);
        x.iter().map(|xi| -k * xi / r).collect()
    }

    /// Singular Green's function with this kernel's reference length.
    pub fn singular_greens(&self, r: f64) -> Result<f64> {
        singular_greens(self.dim, r.abs(), self.ref_length)
    }

    /// Singular counterpart of [`greens_gradient_radial`](Self::greens_gradient_radial):
    /// `-1/2`, `1/(2πr)` or `1/(4πr²)`.
    pub fn singular_gradient_radial(&self, r: f64) -> Result<f64> {
        let r = r.abs();
        if r.is_nan() || r <= 0.0 {
            return domain(format!("singular gradient needs r > 0, got {r}"));
        }
        Ok(match self.dim {
            Dimension::One => -0.5,
            Dimension::Two => 1.0 / (2.0 * PI * r),
            Dimension::Three => 1.0 / (4.0 * PI * r * r),
        })
    }

    /// Singular `∇G(x)`, defined as zero at the origin.
    pub fn singular_gradient_vector(&self, x: &[f64]) -> Vec<f64> {
        let r = norm(x);
        if r == 0.0 {
            return vec![0.0; x.len()];
        }
        match self.dim {
            Dimension::One => vec![-0.5 * x[0].signum()],
            Dimension::Two => x.iter().map(|xi| -xi / (2.0 * PI * r * r)).collect(),
            Dimension::Three => x.iter().map(|xi| -xi / (4.0 * PI * r * r * r)).collect(),
        }
    }
}

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// `(Si(x) - sin x)/x²`, equal to `x/9 + O(x³)` near the origin.
fn si_minus_sin_over_x2(x: f64) -> f64 {
    if x < CANCELLATION_RADIUS {
        // Σ_{k≥1} (-1)^{k+1} 2k x^{2k-1} / ((2k+1)(2k+1)!)
        let x2 = x * x;
        let mut power = x / 6.0; // x^{2k-1}/(2k+1)! at k = 1
        let mut sum = 0.0;
        for k in 1..30 {
            let kf = k as f64;
            let term = 2.0 * kf * power / (2.0 * kf + 1.0);
            sum += if k % 2 == 1 { term } else { -term };
            if term <= 1e-18 * sum.abs() {
                break;
            }
            power *= x2 / ((2.0 * kf + 2.0) * (2.0 * kf + 3.0));
        }
        sum
    } else {
        (si(x) - x.sin()) / (x * x)
    }
}
