//! Adaptive Gauss–Kronrod quadrature (7-point Gauss, 15-point Kronrod).
//!
//! This is the test oracle for every integral-defined special function and
//! for the radial reference solutions of the harness. Nothing on the
//! evaluation fast path calls into it.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

// QUADPACK abscissae and weights, kept at their published precision.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for XGK[1], XGK[3], XGK[5] and the centre node.
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Default subdivision budget of [`oracle_quadrature`].
pub const DEFAULT_MAX_SUBDIVISIONS: usize = 20_000;

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    /// Estimated absolute error.
    pub error: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    abs_value: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gauss_kronrod_15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_k = fc * WGK[7];
    let mut res_g = fc * WG[3];
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = res_k * half;
    let res_asc = res_asc * half.abs();
    let mut error = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    Segment {
        a,
        b,
        value,
        error,
        abs_value: res_abs * half.abs(),
    }
}

/// Globally adaptive integration of `f` over `[a, b]`.
///
/// Converges once the summed error estimate drops below `tol`, or below the
/// rounding floor of the integrand when `tol` is tighter than what double
/// precision can certify.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
    max_subdivisions: usize,
) -> Result<Quadrature> {
    if !(a.is_finite() && b.is_finite()) || a > b {
        return Err(Error::Domain(format!("invalid interval [{a}, {b}]")));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    if a == b {
        return Ok(Quadrature { value: 0.0, error: 0.0, evaluations: 0 });
    }

    let first = gauss_kronrod_15(&f, a, b);
    let mut evaluations = 15;
    let mut error_sum = first.error;
    let mut abs_sum = first.abs_value;
    let mut heap = BinaryHeap::new();
    heap.push(first);

    let totals = |heap: &BinaryHeap<Segment>| {
        heap.iter().fold((0.0, 0.0, 0.0), |acc, s| {
            (acc.0 + s.value, acc.1 + s.error, acc.2 + s.abs_value)
        })
    };

    let mut iteration = 0usize;
    loop {
        let target = tol.max(64.0 * f64::EPSILON * abs_sum);
        // running sums drift; settle every decision on an exact recount
        if error_sum <= 2.0 * target || iteration.is_multiple_of(512) {
            let (value, error, abs_value) = totals(&heap);
            if !value.is_finite() {
                return Err(Error::Domain("integrand is not finite on the interval".into()));
            }
            error_sum = error;
            abs_sum = abs_value;
            if error <= tol.max(64.0 * f64::EPSILON * abs_value) {
                return Ok(Quadrature { value, error, evaluations });
            }
        }
        if heap.len() >= max_subdivisions {
            let (value, error, _) = totals(&heap);
            return Err(Error::Convergence { estimate: value, error_bound: error });
        }
        iteration += 1;
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        error_sum -= worst.error;
        abs_sum -= worst.abs_value;
        if mid <= worst.a || mid >= worst.b {
            // cannot split further; accept the roundoff-limited piece
            abs_sum += worst.abs_value;
            heap.push(Segment { error: 0.0, ..worst });
            continue;
        }
        for seg in [gauss_kronrod_15(&f, worst.a, mid), gauss_kronrod_15(&f, mid, worst.b)] {
            error_sum += seg.error;
            abs_sum += seg.abs_value;
            heap.push(seg);
        }
        evaluations += 30;
    }
}

/// Adaptive quadrature estimate of `∫ₐᵇ f` with absolute error below `tol`.
pub fn oracle_quadrature<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    integrate_adaptive(f, a, b, tol, DEFAULT_MAX_SUBDIVISIONS).map(|q| q.value)
}

/// Integrates over `[a, b]` in consecutive pieces of length at most `step`,
/// which keeps the heap small for long oscillatory ranges.
pub fn oracle_quadrature_piecewise<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    step: f64,
    tol: f64,
) -> Result<f64> {
    if step.is_nan() || step <= 0.0 {
        return Err(Error::Domain(format!("step must be positive, got {step}")));
    }
    let pieces = ((b - a) / step).ceil().max(1.0) as usize;
    let piece_tol = tol / pieces as f64;
    let mut total = 0.0;
    for i in 0..pieces {
        let lo = a + (b - a) * i as f64 / pieces as f64;
        let hi = if i + 1 == pieces { b } else { a + (b - a) * (i + 1) as f64 / pieces as f64 };
        total += integrate_adaptive(&f, lo, hi, piece_tol, DEFAULT_MAX_SUBDIVISIONS)?.value;
    }
    Ok(total)
}
