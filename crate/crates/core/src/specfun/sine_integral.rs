use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::error::{domain, Result};

/// Crossover between the power series and the continued fraction.
pub(crate) const SERIES_LIMIT: f64 = 4.0;

/// `Si(x) = ∫₀ˣ sin(q)/q dq` for `x ≥ 0`.
pub fn sine_integral(x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return domain(format!("sine integral argument must be finite and nonnegative, got {x}"));
    }
    Ok(si(x))
}

pub(crate) fn si(x: f64) -> f64 {
    if x <= SERIES_LIMIT {
        x * si_over_x_series(x)
    } else {
        si_continued_fraction(x)
    }
}

/// `Si(x)/x = Σ (-1)^k x^{2k} / ((2k+1)(2k+1)!)`.
pub(crate) fn si_over_x_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut power = 1.0; // x^{2k}/(2k+1)!
    let mut sum = 0.0;
    for k in 0..60 {
        let denom = (2 * k + 1) as f64;
        let term = power / denom;
        sum += if k % 2 == 0 { term } else { -term };
        if term <= 1e-17 * sum.abs() {
            break;
        }
        power *= x2 / ((denom + 1.0) * (denom + 2.0));
    }
    sum
}

/// `Si(x) = π/2 + Im E₁(ix)` with `E₁` from its continued fraction
/// (modified Lentz).
fn si_continued_fraction(x: f64) -> f64 {
    let tiny = 1e-300;
    let mut b = Complex64::new(1.0, x);
    let mut c = Complex64::new(1.0 / tiny, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 2..1000 {
        let a = -((i - 1) as f64).powi(2);
        b += 2.0;
        d = (d * a + b).inv();
        c = b + c.inv() * a;
        let delta = c * d;
        h *= delta;
        if (delta - 1.0).norm_sqr() < 1e-34 {
            break;
        }
    }
    let (s, co) = x.sin_cos();
    let e1 = Complex64::new(co, -s) * h;
    FRAC_PI_2 + e1.im
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_and_unit() {
        assert_eq!(sine_integral(0.0).unwrap(), 0.0);
        assert!((sine_integral(1.0).unwrap() - 0.946_083_070_367_183).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(sine_integral(f64::INFINITY).is_err());
        assert!(sine_integral(-0.5).is_err());
    }

    #[test]
    fn regimes_agree_at_the_seam() {
        for &x in &[SERIES_LIMIT, SERIES_LIMIT * (1.0 + 1e-12)] {
            let a = x * si_over_x_series(x);
            let b = si_continued_fraction(x);
            assert!((a - b).abs() < 1e-13 * a, "{a} vs {b}");
        }
    }

    #[test]
    fn large_argument_limit() {
        let v = sine_integral(1000.0).unwrap();
        assert!((v - FRAC_PI_2).abs() < 2e-3);
        for &x in &[10.0, 37.5, 250.0, 999.0] {
            assert!((si(x) - FRAC_PI_2).abs() <= 2.0 / x);
        }
    }
}
