//! Special functions used by the regularized kernels: the sine integral,
//! Bessel functions of the first kind of order 0, 1/2, 1 and 3/2, and the
//! Bessel integral `Ji₀`. Every function is defined for nonnegative
//! arguments only.
//!
//! Each fast-path routine combines a series below a crossover with an
//! asymptotic or continued-fraction form above it. The adaptive quadrature
//! in [`quadrature`] is the independent oracle used to validate them.

mod bessel;
mod bessel_integral;
mod dd;
pub mod quadrature;
mod sine_integral;

pub use bessel::{bessel_j, BesselOrder};
pub use bessel_integral::bessel_integral_ji0;
pub use quadrature::{integrate_adaptive, oracle_quadrature, oracle_quadrature_piecewise, Quadrature};
pub use sine_integral::sine_integral;

pub(crate) use bessel::{j0, j1, j1_over_x, one_minus_j0, sinc_minus_cos_over_x2};
pub(crate) use bessel_integral::ji0;
pub(crate) use sine_integral::{si, si_over_x_series};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Accuracy contract of a shipped special function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccuracySpec {
    pub max_relative_error: f64,
    /// Closed interval on which the bound holds.
    pub domain: (f64, f64),
}

pub const SINE_INTEGRAL_ACCURACY: AccuracySpec =
    AccuracySpec { max_relative_error: 1e-12, domain: (0.0, 1e3) };
pub const BESSEL_J_ACCURACY: AccuracySpec =
    AccuracySpec { max_relative_error: 1e-12, domain: (0.0, 1e3) };
pub const BESSEL_INTEGRAL_ACCURACY: AccuracySpec =
    AccuracySpec { max_relative_error: 1e-12, domain: (0.0, 1e3) };

/// `J₀(x)` for `x ≥ 0`.
pub fn bessel_j0(x: f64) -> crate::Result<f64> {
    bessel_j(0.0, x)
}

/// `J₁(x)` for `x ≥ 0`.
pub fn bessel_j1(x: f64) -> crate::Result<f64> {
    bessel_j(1.0, x)
}
