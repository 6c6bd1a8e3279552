//! Bessel functions of the first kind for the orders the kernels need.
//!
//! Integer orders: double-double power series below [`SERIES_LIMIT`],
//! modulus/phase form of the Hankel expansion above it. The phase is reduced
//! in double-double so that values near the zeros keep their relative
//! accuracy. Half-integer orders use their elementary closed forms.

use std::f64::consts::{FRAC_2_PI, PI};

use super::dd::DoubleDouble;
use crate::error::{domain, Result};

/// Crossover between the power series and the asymptotic expansion.
pub(crate) const SERIES_LIMIT: f64 = 20.0;

/// Orders supported by [`bessel_j`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselOrder {
    Zero,
    Half,
    One,
    ThreeHalves,
}

impl BesselOrder {
    pub fn from_f64(order: f64) -> Result<Self> {
        match order {
            0.0 => Ok(Self::Zero),
            0.5 => Ok(Self::Half),
            1.0 => Ok(Self::One),
            1.5 => Ok(Self::ThreeHalves),
            o => domain(format!("unsupported Bessel order {o}")),
        }
    }

    pub fn value(self) -> f64 {
        match self {
            Self::Zero => 0.0,
            Self::Half => 0.5,
            Self::One => 1.0,
            Self::ThreeHalves => 1.5,
        }
    }
}

/// `J_ν(x)` for `ν ∈ {0, 1/2, 1, 3/2}` and `x ≥ 0`.
pub fn bessel_j(order: f64, x: f64) -> Result<f64> {
    let order = BesselOrder::from_f64(order)?;
    if !x.is_finite() || x < 0.0 {
        return domain(format!("Bessel argument must be finite and nonnegative, got {x}"));
    }
    Ok(match order {
        BesselOrder::Zero => j0(x),
        BesselOrder::Half => j_half(x),
        BesselOrder::One => j1(x),
        BesselOrder::ThreeHalves => j_three_halves(x),
    })
}

/// Terms `t_k = (-x²/4)^k / (k!)²` for `k ≥ 1`, summed in double-double.
fn j0_tail_series(x: f64) -> DoubleDouble {
    let q = DoubleDouble::product(x, x).scale(-0.25);
    let mut term = DoubleDouble::ONE;
    let mut sum = DoubleDouble::ZERO;
    let half_x = 0.5 * x;
    let mut k = 1.0_f64;
    loop {
        term = (term * q).div_f64(k * k);
        sum = sum + term;
        if k > half_x && term.abs_hi() <= 1e-34 * sum.abs_hi() {
            break;
        }
        k += 1.0;
    }
    sum
}

/// Hankel asymptotic auxiliaries `(P, Q)` for order `nu`.
fn hankel_pq(nu: f64, x: f64) -> (f64, f64) {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut a = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..200 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        a *= (mu - odd * odd) / (8.0 * kf * x);
        let mag = a.abs();
        if mag > prev {
            break;
        }
        // signs alternate in pairs: +P, +Q, -P, -Q, ...
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * a;
        } else {
            q += sign * a;
        }
        if mag < 1e-18 {
            break;
        }
        prev = mag;
    }
    (p, q)
}

/// `cos(x + phase - quarters·π/4)` with the argument carried in double-double.
pub(crate) fn cos_shifted(x: f64, phase: f64, quarters: f64) -> f64 {
    let u = DoubleDouble::sum(x, phase) + (-DoubleDouble::PI.scale(0.25 * quarters));
    let half_pi = DoubleDouble::PI.scale(0.5);
    let turns = (u.hi / half_pi.hi).round();
    let r = u + (-half_pi.scale(turns));
    let (s_hi, c_hi) = r.hi.sin_cos();
    let sin_r = s_hi + r.lo * c_hi;
    let cos_r = c_hi - r.lo * s_hi;
    match (turns as i64).rem_euclid(4) {
        0 => cos_r,
        1 => -sin_r,
        2 => -cos_r,
        _ => sin_r,
    }
}

fn asymptotic(nu: f64, x: f64) -> f64 {
    let (p, q) = hankel_pq(nu, x);
    let modulus = p.hypot(q);
    let phase = q.atan2(p);
    // χ = x - (2ν + 1)·π/4
    (FRAC_2_PI / x).sqrt() * modulus * cos_shifted(x, phase, 2.0 * nu + 1.0)
}

pub(crate) fn j0(x: f64) -> f64 {
    if x < SERIES_LIMIT {
        (DoubleDouble::ONE + j0_tail_series(x)).to_f64()
    } else {
        asymptotic(0.0, x)
    }
}

/// `1 - J₀(x)` without cancellation at small `x`.
pub(crate) fn one_minus_j0(x: f64) -> f64 {
    if x < SERIES_LIMIT {
        -j0_tail_series(x).to_f64()
    } else {
        1.0 - asymptotic(0.0, x)
    }
}

/// Sum of `(-x²/4)^k / (k!(k+1)!)`, so that `J₁(x) = (x/2)·sum`.
fn j1_reduced_series(x: f64) -> DoubleDouble {
    let q = DoubleDouble::product(x, x).scale(-0.25);
    let mut term = DoubleDouble::ONE;
    let mut sum = DoubleDouble::ONE;
    let half_x = 0.5 * x;
    let mut k = 1.0_f64;
    loop {
        term = (term * q).div_f64(k * (k + 1.0));
        sum = sum + term;
        if k > half_x && term.abs_hi() <= 1e-34 * sum.abs_hi() {
            break;
        }
        k += 1.0;
    }
    sum
}

pub(crate) fn j1(x: f64) -> f64 {
    if x < SERIES_LIMIT {
        j1_reduced_series(x).scale(0.5 * x).to_f64()
    } else {
        asymptotic(1.0, x)
    }
}

/// `J₁(x)/x`, equal to 1/2 at the origin.
pub(crate) fn j1_over_x(x: f64) -> f64 {
    if x < SERIES_LIMIT {
        j1_reduced_series(x).scale(0.5).to_f64()
    } else {
        asymptotic(1.0, x) / x
    }
}

pub(crate) fn j_half(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    (2.0 / (PI * x)).sqrt() * x.sin()
}

/// `(sin(x)/x - cos(x))/x²`, by series below 1 where the two terms cancel.
/// Equals 1/3 at the origin.
pub(crate) fn sinc_minus_cos_over_x2(x: f64) -> f64 {
    if x < 1.0 {
        // Σ_{k≥1} (-1)^{k+1} 2k x^{2k-2} / (2k+1)!
        let x2 = x * x;
        let mut power = 1.0 / 6.0; // x^{2k-2}/(2k+1)! at k = 1
        let mut sum = 0.0;
        for k in 1..30 {
            let kf = k as f64;
            let term = 2.0 * kf * power;
            sum += if k % 2 == 1 { term } else { -term };
            if term < 1e-18 * sum.abs() {
                break;
            }
            power *= x2 / ((2.0 * kf + 2.0) * (2.0 * kf + 3.0));
        }
        sum
    } else {
        (x.sin() / x - x.cos()) / (x * x)
    }
}

pub(crate) fn j_three_halves(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    (2.0 / (PI * x)).sqrt() * x * x * sinc_minus_cos_over_x2(x)
}
