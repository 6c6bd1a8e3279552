//! Oracles for radial kernel properties: finite differences and the
//! d-dimensional radial Fourier transform by quadrature.

use std::f64::consts::PI;

use nsgreen::kernels::RadialKernel;
use nsgreen::specfun::{bessel_j0, oracle_quadrature_piecewise};
use num_complex::Complex64;

/// Fourth-order centred second derivative.
pub fn d2(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2.0 * h))
        / (12.0 * h * h)
}

/// Fourth-order centred first derivative.
pub fn d1(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h)
}

/// Radial Laplacian `G'' + (d-1)G'/r` by fourth-order differences.
pub fn radial_laplacian(kernel: &RadialKernel, r: f64, step: f64) -> f64 {
    let d = kernel.dim().get() as f64;
    let g = |x: f64| kernel.greens(x);
    d2(g, r, step) + (d - 1.0) * d1(g, r, step) / r
}

/// Envelope of `f` over one period `2π` starting at `x`.
pub fn envelope(f: impl Fn(f64) -> f64, x: f64, period: f64) -> f64 {
    (0..=400)
        .map(|i| f(x + period * i as f64 / 400.0).abs())
        .fold(0.0, f64::max)
}

/// `J_ν(x)/x^ν` for `ν = d/2 - 1`.
fn lambda(d: usize, x: f64) -> f64 {
    match d {
        1 => (2.0 / PI).sqrt() * x.cos(),
        2 => bessel_j0(x).unwrap(),
        _ => {
            if x == 0.0 {
                (2.0 / PI).sqrt()
            } else {
                (2.0 / PI).sqrt() * x.sin() / x
            }
        }
    }
}

/// `∫_X^∞ e^{it}/t dt` by its asymptotic series (X ≫ 1).
fn exp_integral_tail(x: f64) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    for j in 0..20 {
        if j > 0 {
            term *= -i * (j as f64) / x;
        }
        sum += term;
        if term.norm() < 1e-17 {
            break;
        }
    }
    i * Complex64::from_polar(1.0, x) / x * sum
}

/// `∫_R^∞ cos(ωρ + φ)/ρ dρ`.
fn cos_tail(omega: f64, phi: f64, r: f64) -> f64 {
    let (w, p) = if omega < 0.0 { (-omega, -phi) } else { (omega, phi) };
    (Complex64::from_polar(1.0, p) * exp_integral_tail(w * r)).re
}

/// Normalized radial Fourier transform of the kernel's mollifier at `s = σk`:
/// `(2πσ²)^{d/2} ∫₀^∞ ζ(σρ) J_{d/2-1}(sρ)/(sρ)^{d/2-1} ρ^{d-1} dρ`.
///
/// Quadrature up to `cutoff`, plus the leading-order asymptotic tail of the
/// Bessel product beyond it.
pub fn mollifier_transform(kernel: &RadialKernel, s: f64, cutoff: f64) -> f64 {
    let d = kernel.dim().get();
    let sigma = kernel.sigma();
    let prefactor = (2.0 * PI * sigma * sigma).powf(d as f64 / 2.0);
    let integrand =
        |rho: f64| prefactor * kernel.zeta(sigma * rho) * lambda(d, s * rho) * rho.powi(d as i32 - 1);
    let body = oracle_quadrature_piecewise(integrand, 0.0, cutoff, PI / (1.0 + s), 1e-11).unwrap();
    // J_a(ρ) J_b(sρ) / s^b with a = d/2, b = a - 1
    let a = d as f64 / 2.0;
    let b = a - 1.0;
    let phase_a = -a * PI / 2.0 - PI / 4.0;
    let phase_b = -b * PI / 2.0 - PI / 4.0;
    let amp = 1.0 / (PI * s.sqrt() * s.powf(b));
    let tail = amp
        * (cos_tail(1.0 - s, phase_a - phase_b, cutoff) + cos_tail(1.0 + s, phase_a + phase_b, cutoff));
    body + tail
}
