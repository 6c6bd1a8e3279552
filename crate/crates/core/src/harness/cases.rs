//! Analytic right-hand sides and their free-space reference solutions.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::Mutex;

use crate::error::{domain, Result};
use crate::grid::{sample_radial, ScalarField, UniformGrid};
use crate::kernels::{sigma_from_spacing, singular_greens, Dimension, RadialKernel};
use crate::specfun::oracle_quadrature_piecewise;

/// Domain half-width of the Gaussian case in units of its width `c`;
/// `exp(-8.6²/2) < 1e-16` at the boundary.
pub const GAUSSIAN_DOMAIN_FACTOR: f64 = 8.6;

/// Domain half-width of the compact bump in units of its support radius.
pub const BUMP_DOMAIN_FACTOR: f64 = 1.25;

/// Largest admissible boundary magnitude of a right-hand side, relative to
/// its peak.
pub const BOUNDARY_DECAY: f64 = 1e-16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseKind {
    /// `exp(-r²/(2c²))`.
    Gaussian,
    /// `exp(1 - 1/(1 - (r/R)²))` inside `r < R`, zero outside.
    CompactBump,
    /// A single sample of weight one at the grid centre.
    PointVortex,
}

impl CaseKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::Gaussian => "gaussian",
            Self::CompactBump => "compact-bump",
            Self::PointVortex => "point-vortex",
        }
    }
}

/// A radially symmetric right-hand side centred at the origin of a cubic
/// domain `[-W, W)^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct TestCase {
    dim: Dimension,
    kind: CaseKind,
    width: f64,
    half_width: f64,
    ref_length: f64,
}

impl TestCase {
    /// `width` is the Gaussian `c`, the bump radius `R`, or for the point
    /// vortex the domain half-width.
    pub fn new(dim: Dimension, kind: CaseKind, width: f64, ref_length: f64) -> Result<Self> {
        if width <= 0.0 || !width.is_finite() {
            return domain(format!("case width must be positive and finite, got {width}"));
        }
        if ref_length <= 0.0 || !ref_length.is_finite() {
            return domain(format!("reference length must be positive and finite, got {ref_length}"));
        }
        let half_width = match kind {
            CaseKind::Gaussian => GAUSSIAN_DOMAIN_FACTOR * width,
            CaseKind::CompactBump => BUMP_DOMAIN_FACTOR * width,
            CaseKind::PointVortex => width,
        };
        Ok(Self { dim, kind, width, half_width, ref_length })
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn kind(&self) -> CaseKind {
        self.kind
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn ref_length(&self) -> f64 {
        self.ref_length
    }

    /// `n` points per axis with `h = 2W/n`; index `n/2` is the origin.
    pub fn grid(&self, n: usize) -> Result<UniformGrid> {
        UniformGrid::centered(self.dim, n, 2.0 * self.half_width / n as f64, 0.0)
    }

    /// Radial profile `B(r)`; `None` for the point vortex.
    pub fn profile(&self) -> Option<impl Fn(f64) -> f64 + Send + Sync> {
        let (kind, w) = (self.kind, self.width);
        match kind {
            CaseKind::PointVortex => None,
            _ => Some(move |r: f64| match kind {
                CaseKind::Gaussian => (-r * r / (2.0 * w * w)).exp(),
                _ => {
                    let t = r / w;
                    if t < 1.0 {
                        (1.0 - 1.0 / (1.0 - t * t)).exp()
                    } else {
                        0.0
                    }
                }
            }),
        }
    }

    pub fn rhs(&self, grid: &UniformGrid) -> Result<ScalarField> {
        let center = vec![0.0; self.dim.get()];
        match self.profile() {
            Some(b) => sample_radial(grid, b, &center),
            None => {
                let weight = 1.0 / grid.cell_volume();
                let mid: Vec<usize> = grid.extents().iter().map(|&n| n / 2).collect();
                let at = grid.flat_index(&mid);
                let mut values = vec![0.0; grid.len()];
                values[at] = weight;
                ScalarField::new(grid.clone(), values)
            }
        }
    }

    /// The continuum solution sampled on `grid`. For the point vortex this
    /// is the singular Green's function, with the regularized `G(0)` at the
    /// centre.
    pub fn reference(&self, grid: &UniformGrid) -> Result<ScalarField> {
        let center = vec![0.0; self.dim.get()];
        match self.profile() {
            Some(b) => {
                let reference = RadialReference::new(self.dim, self.ref_length, b, self.support(), self.width);
                let field = sample_radial(grid, |r| reference.value(r).unwrap_or(f64::NAN), &center);
                reference.first_error().map_or(field, Err)
            }
            None => {
                let k = RadialKernel::new(self.dim, sigma_from_spacing(grid.spacing())?, self.ref_length)?;
                sample_radial(
                    grid,
                    |r| if r == 0.0 { k.greens(0.0) } else { k.singular_greens(r).unwrap_or(f64::NAN) },
                    &center,
                )
            }
        }
    }

    /// Profile at the nearest point of the box boundary, `r = W`, relative to
    /// its peak.
    pub fn boundary_decay(&self) -> f64 {
        self.profile().map_or(0.0, |b| b(self.half_width) / b(0.0))
    }

    /// Radius beyond which the profile is zero in double precision.
    fn support(&self) -> f64 {
        match self.kind {
            CaseKind::Gaussian => 40.0 * self.width,
            _ => self.width,
        }
    }
}

/// Surface area of the unit sphere in `d` dimensions.
fn unit_sphere_area(dim: Dimension) -> f64 {
    match dim {
        Dimension::One => 2.0,
        Dimension::Two => 2.0 * PI,
        Dimension::Three => 4.0 * PI,
    }
}

/// Free-space potential of a radial source by shell superposition:
/// `A(r) = S_d [G(r) ∫₀ʳ B s^{d-1} ds + ∫ᵣ^∞ B(s) s^{d-1} G(s) ds]`
/// with the singular `G`. Values are memoized by radius.
pub struct RadialReference<F> {
    dim: Dimension,
    ref_length: f64,
    profile: F,
    support: f64,
    step: f64,
    memo: Mutex<HashMap<u64, f64>>,
    failure: Mutex<Option<crate::Error>>,
}

impl<F: Fn(f64) -> f64> RadialReference<F> {
    /// `step` bounds the quadrature panel length; use the profile's width.
    pub fn new(dim: Dimension, ref_length: f64, profile: F, support: f64, step: f64) -> Self {
        Self {
            dim,
            ref_length,
            profile,
            support,
            step,
            memo: Mutex::new(HashMap::new()),
            failure: Mutex::new(None),
        }
    }

    fn green(&self, r: f64) -> f64 {
        singular_greens(self.dim, r, self.ref_length).expect("positive radius")
    }

    pub fn value(&self, r: f64) -> Result<f64> {
        if let Some(&v) = self.memo.lock().expect("memo").get(&r.to_bits()) {
            return Ok(v);
        }
        let v = self.compute(r);
        match v {
            Ok(v) => {
                self.memo.lock().expect("memo").insert(r.to_bits(), v);
                Ok(v)
            }
            Err(e) => {
                let msg = e.to_string();
                self.failure.lock().expect("failure").get_or_insert(e);
                domain(msg)
            }
        }
    }

    fn compute(&self, r: f64) -> Result<f64> {
        let p = self.dim.get() as i32 - 1;
        let b = &self.profile;
        let tol = 1e-300;
        let edge = r.min(self.support);
        let inner = if edge > 0.0 {
            self.green(r) * oracle_quadrature_piecewise(|s| b(s) * s.powi(p), 0.0, edge, self.step, tol)?
        } else {
            0.0
        };
        let outer = if r < self.support {
            oracle_quadrature_piecewise(
                |s| if s > 0.0 { b(s) * s.powi(p) * self.green(s) } else { 0.0 },
                r,
                self.support,
                self.step,
                tol,
            )?
        } else {
            0.0
        };
        Ok(unit_sphere_area(self.dim) * (inner + outer))
    }

    fn first_error(&self) -> Option<crate::Error> {
        self.failure.lock().expect("failure").take()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_domain_meets_decay() {
        let case = TestCase::new(Dimension::Three, CaseKind::Gaussian, 1.0, 3.0).unwrap();
        let g = case.grid(16).unwrap();
        let b = case.rhs(&g).unwrap();
        assert_eq!(b.get(&[8, 8, 8]), 1.0);
        assert!(case.boundary_decay() <= BOUNDARY_DECAY);
        let wide = TestCase::new(Dimension::Three, CaseKind::CompactBump, 1.0, 3.0).unwrap();
        assert_eq!(wide.boundary_decay(), 0.0);
    }

    #[test]
    fn bump_is_compact() {
        let case = TestCase::new(Dimension::Two, CaseKind::CompactBump, 2.0, 3.0).unwrap();
        let b = case.profile().unwrap();
        assert_eq!(b(0.0), 1.0);
        assert_eq!(b(2.0), 0.0);
        assert!(b(1.999) < 1e-200);
    }

    #[test]
    fn point_vortex_has_unit_mass() {
        let case = TestCase::new(Dimension::Two, CaseKind::PointVortex, 4.0, 3.0).unwrap();
        let g = case.grid(8).unwrap();
        let b = case.rhs(&g).unwrap();
        let mass: f64 = b.values().iter().sum::<f64>() * g.cell_volume();
        assert!((mass - 1.0).abs() < 1e-15);
        let reference = case.reference(&g).unwrap();
        let k = RadialKernel::for_spacing(Dimension::Two, g.spacing(), 3.0).unwrap();
        assert_eq!(reference.get(&[4, 4]), k.greens(0.0));
    }

    #[test]
    fn one_dimensional_reference_is_linear_outside() {
        // A = -|x| Q/2 + L Q/2 beyond the support, Q = ∫B
        let case = TestCase::new(Dimension::One, CaseKind::CompactBump, 1.0, 3.0).unwrap();
        let b = case.profile().unwrap();
        let q = 2.0 * oracle_quadrature_piecewise(&b, 0.0, 1.0, 0.25, 1e-300).unwrap();
        let reference = RadialReference::new(Dimension::One, 3.0, b, 1.0, 0.25);
        for x in [1.0, 1.2, 5.0] {
            let want = -q * (x - 3.0) / 2.0;
            assert!((reference.value(x).unwrap() - want).abs() < 1e-14);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(TestCase::new(Dimension::One, CaseKind::Gaussian, 0.0, 3.0).is_err());
        assert!(TestCase::new(Dimension::One, CaseKind::Gaussian, 1.0, -3.0).is_err());
    }
}
