//! Multiple-precision power-series oracle.
//!
//! Evaluates the Maclaurin series of Si, J₀, J₁ and Ji₀ in fixed-point
//! big-integer arithmetic with enough guard bits to absorb the cancellation
//! at large arguments. Arguments are doubles, hence exact dyadic rationals,
//! so the only error is the per-term truncation at `2^-P`.

use num_bigint::BigInt;
use num_traits::{Float, Signed, ToPrimitive, Zero};

struct Fixed {
    /// Fractional bits.
    precision: u64,
    /// Integer mantissa of the argument, `x = m · 2^e`.
    mantissa: BigInt,
    exponent: i64,
}

impl Fixed {
    fn new(x: f64) -> Self {
        assert!(x > 0.0 && x.is_finite());
        let (m, e, _) = Float::integer_decode(x);
        // the largest term of these series is about e^x
        let precision = 240 + (1.45 * x).ceil() as u64;
        Self { precision, mantissa: BigInt::from(m), exponent: e as i64 }
    }

    fn one(&self) -> BigInt {
        BigInt::from(1) << self.precision
    }

    fn x(&self) -> BigInt {
        shift(self.mantissa.clone(), self.exponent + self.precision as i64)
    }

    /// `t · x² · 2^extra_shift`, truncated.
    fn times_x2(&self, t: &BigInt, extra_shift: i64) -> BigInt {
        let m2 = &self.mantissa * &self.mantissa;
        shift(t * m2, 2 * self.exponent + extra_shift)
    }

    fn to_f64(&self, n: &BigInt) -> f64 {
        if n.is_zero() {
            return 0.0;
        }
        let bits = n.bits();
        let drop = bits.saturating_sub(64);
        let head = (n.abs() >> drop).to_f64().unwrap();
        let sign = if n.is_negative() { -1.0 } else { 1.0 };
        sign * head * 2f64.powi(drop as i32 - self.precision as i32)
    }
}

fn shift(n: BigInt, by: i64) -> BigInt {
    if by >= 0 {
        n << (by as u64)
    } else {
        n >> ((-by) as u64)
    }
}

/// Terms `t_k = (-x²/4)^k/(k!)²` for `k ≥ 1`, fed to `visit(k, t_k)`.
fn j0_terms(fx: &Fixed, x: f64, mut visit: impl FnMut(u64, &BigInt)) {
    let mut t = fx.one();
    let mut k = 1u64;
    loop {
        t = -fx.times_x2(&t, -2) / BigInt::from(k * k);
        if t.is_zero() && k as f64 > 0.5 * x {
            break;
        }
        visit(k, &t);
        k += 1;
    }
}

pub fn bessel_j0(x: f64) -> f64 {
    if x == 0.0 {
        return 1.0;
    }
    let fx = Fixed::new(x);
    let mut sum = fx.one();
    j0_terms(&fx, x, |_, t| sum += t);
    fx.to_f64(&sum)
}

pub fn bessel_j1(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let fx = Fixed::new(x);
    let mut t = fx.x() >> 1u32;
    let mut sum = t.clone();
    let mut k = 1u64;
    loop {
        t = -fx.times_x2(&t, -2) / BigInt::from(k * (k + 1));
        if t.is_zero() && k as f64 > 0.5 * x {
            break;
        }
        sum += &t;
        k += 1;
    }
    fx.to_f64(&sum)
}

pub fn bessel_integral_ji0(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let fx = Fixed::new(x);
    let mut sum = BigInt::zero();
    j0_terms(&fx, x, |k, t| sum -= t / BigInt::from(2 * k));
    fx.to_f64(&sum)
}

pub fn sine_integral(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let fx = Fixed::new(x);
    // p_k = (-1)^k x^{2k+1}/(2k+1)!
    let mut p = fx.x();
    let mut sum = p.clone();
    let mut k = 1u64;
    loop {
        p = -fx.times_x2(&p, 0) / BigInt::from((2 * k) * (2 * k + 1));
        if p.is_zero() && k as f64 > 0.5 * x {
            break;
        }
        sum += &p / BigInt::from(2 * k + 1);
        k += 1;
    }
    fx.to_f64(&sum)
}
