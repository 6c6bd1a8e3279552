use std::f64::consts::PI;

use nsgreen::harness::{CaseKind, RadialReference, TestCase};
use nsgreen::kernels::Dimension;

/// `c³ √(π/2) erf(r/(√2 c))/r`, the potential of `exp(-r²/(2c²))` in 3D.
fn gaussian_3d(r: f64, c: f64) -> f64 {
    if r == 0.0 {
        return c * c;
    }
    c.powi(3) * (PI / 2.0).sqrt() * libm::erf(r / (2f64.sqrt() * c)) / r
}

#[test]
fn gaussian_reference_matches_closed_form() {
    let c = 0.7;
    let case = TestCase::new(Dimension::Three, CaseKind::Gaussian, c, 3.0).unwrap();
    let g = case.grid(16).unwrap();
    let reference = case.reference(&g).unwrap();
    for flat in 0..g.len() {
        let x = g.position(&g.multi_index(flat));
        let r = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        let want = gaussian_3d(r, c);
        assert!((reference.values()[flat] - want).abs() <= 1e-14 * c * c, "r = {r}");
    }
}

/// The potential satisfies `A'(r) = -r^{1-d} ∫₀ʳ B s^{d-1} ds`.
#[test]
fn reference_slope_follows_enclosed_mass() {
    for d in 1..=3 {
        let dim = Dimension::new(d).unwrap();
        let b = |s: f64| (-s * s / 2.0).exp();
        let reference = RadialReference::new(dim, 3.0, b, 40.0, 1.0);
        for r in [0.5, 1.3, 3.0] {
            let h = 1e-3;
            let slope = (reference.value(r + h).unwrap() - reference.value(r - h).unwrap()) / (2.0 * h);
            let mass = nsgreen::specfun::oracle_quadrature(|s| b(s) * s.powi(d as i32 - 1), 0.0, r, 1e-15).unwrap();
            let want = -mass / r.powi(d as i32 - 1);
            assert!((slope - want).abs() <= 1e-6, "d = {d}, r = {r}: {slope} vs {want}");
        }
    }
}

/// In 2D the far field is `-Q ln(r/L)/(2π)` with `Q = ∫B`.
#[test]
fn two_dimensional_far_field() {
    let case = TestCase::new(Dimension::Two, CaseKind::CompactBump, 1.0, 3.0).unwrap();
    let b = case.profile().unwrap();
    let q = 2.0 * PI * nsgreen::specfun::oracle_quadrature(|s| b(s) * s, 0.0, 1.0, 1e-15).unwrap();
    let reference = RadialReference::new(Dimension::Two, 3.0, b, 1.0, 0.25);
    for r in [1.0f64, 2.0, 3.0, 10.0] {
        let want = -q * (r / 3.0).ln() / (2.0 * PI);
        assert!((reference.value(r).unwrap() - want).abs() <= 1e-14);
    }
}
