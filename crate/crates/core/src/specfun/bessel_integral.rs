use std::f64::consts::{FRAC_2_PI, FRAC_PI_4};
use std::sync::OnceLock;

use num_complex::Complex64;

use super::dd::DoubleDouble;
use super::EULER_GAMMA;
use crate::error::{domain, Result};

/// Crossover between the power series and the large-argument form.
pub(crate) const SERIES_LIMIT: f64 = 30.0;

const TAIL_TERMS: usize = 90;

/// `Ji₀(x) = ∫₀ˣ (1 - J₀(q))/q dq` for `x ≥ 0`.
pub fn bessel_integral_ji0(x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return domain(format!("Bessel integral argument must be finite and nonnegative, got {x}"));
    }
    Ok(ji0(x))
}

pub(crate) fn ji0(x: f64) -> f64 {
    if x < SERIES_LIMIT {
        ji0_series(x)
    } else {
        (0.5 * x).ln() + EULER_GAMMA + j0_over_q_tail(x)
    }
}

/// `Σ_{k≥1} (-1)^{k+1} (x²/4)^k / (2k (k!)²)` in double-double.
fn ji0_series(x: f64) -> f64 {
    let q = DoubleDouble::product(x, x).scale(-0.25);
    let mut term = DoubleDouble::ONE;
    let mut sum = DoubleDouble::ZERO;
    let half_x = 0.5 * x;
    let mut k = 1.0_f64;
    loop {
        term = (term * q).div_f64(k * k);
        let contribution = term.div_f64(2.0 * k);
        sum = sum + contribution;
        if k > half_x && contribution.abs_hi() <= 1e-34 * sum.abs_hi() {
            break;
        }
        k += 1.0;
    }
    -sum.to_f64()
}

/// Coefficients `D_m` of `∫ₓ^∞ J₀(t)/t dt ~ √(2/π) x^{-3/2} Re[i e^{i(x-π/4)} Σ D_m x^{-m}]`.
///
/// Built by integrating the Hankel expansion of `H₀⁽¹⁾(t)/t` term by term,
/// using `∫ₓ^∞ e^{it} t^{-μ} dt ~ i e^{ix} x^{-μ} Σ_j (μ)_j (-i/x)^j`.
fn tail_coefficients() -> &'static [Complex64] {
    static COEFFS: OnceLock<Vec<Complex64>> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let i = Complex64::new(0.0, 1.0);
        let minus_i = -i;
        // c_k = i^k a_k(0)
        let mut hankel = Vec::with_capacity(TAIL_TERMS);
        let mut a = 1.0;
        let mut ik = Complex64::new(1.0, 0.0);
        for k in 0..TAIL_TERMS {
            if k > 0 {
                let odd = (2 * k - 1) as f64;
                a *= -(odd * odd) / (8.0 * k as f64);
                ik *= i;
            }
            hankel.push(ik * a);
        }
        let mut d = vec![Complex64::new(0.0, 0.0); TAIL_TERMS];
        for (k, &ck) in hankel.iter().enumerate() {
            let mu = k as f64 + 1.5;
            let mut rising = Complex64::new(1.0, 0.0); // (μ)_j (-i)^j
            for (j, slot) in d[k..].iter_mut().enumerate() {
                if j > 0 {
                    rising *= minus_i * (mu + (j - 1) as f64);
                }
                *slot += ck * rising;
            }
        }
        d
    })
}

fn j0_over_q_tail(x: f64) -> f64 {
    let coeffs = tail_coefficients();
    let inv = 1.0 / x;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut power = 1.0;
    let mut prev = f64::INFINITY;
    for &dm in coeffs {
        let term = dm * power;
        let mag = term.norm();
        if mag > prev {
            break;
        }
        sum += term;
        if mag < 1e-18 * sum.norm() {
            break;
        }
        prev = mag;
        power *= inv;
    }
    let (s, c) = (x - FRAC_PI_4).sin_cos();
    let re = -s * sum.re - c * sum.im;
    FRAC_2_PI.sqrt() * x.powf(-1.5) * re
}
