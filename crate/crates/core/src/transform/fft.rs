//! Multi-dimensional complex DFT on power-of-two extents.

use num_complex::Complex64;
use rustfft::{FftDirection, FftPlanner};

use crate::error::{domain, Result};

/// Complex samples on a power-of-two box, row-major with the last axis
/// fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralBuffer {
    extents: Vec<usize>,
    data: Vec<Complex64>,
}

impl SpectralBuffer {
    pub fn new(extents: &[usize], data: Vec<Complex64>) -> Result<Self> {
        if extents.is_empty() || extents.len() > 3 {
            return domain(format!("spectral buffers have 1 to 3 axes, got {}", extents.len()));
        }
        if let Some(&n) = extents.iter().find(|n| !n.is_power_of_two()) {
            return domain(format!("transform extents must be powers of two, got {n}"));
        }
        let len: usize = extents.iter().product();
        if data.len() != len {
            return domain(format!("extents {extents:?} need {len} samples, got {}", data.len()));
        }
        Ok(Self { extents: extents.to_vec(), data })
    }

    pub fn zeros(extents: &[usize]) -> Result<Self> {
        let len = extents.iter().product();
        Self::new(extents, vec![Complex64::new(0.0, 0.0); len])
    }

    pub fn from_real(extents: &[usize], values: &[f64]) -> Result<Self> {
        Self::new(extents, values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn extents(&self) -> &[usize] {
        &self.extents
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<Complex64> {
        self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub(crate) fn transform_in_place(&mut self, direction: FftDirection) {
        let mut planner = FftPlanner::new();
        let total = self.data.len();
        let mut scratch = Vec::new();
        let mut stride = 1;
        for &n in self.extents.iter().rev() {
            let fft = planner.plan_fft(n, direction);
            if stride == 1 {
                fft.process(&mut self.data);
            } else {
                scratch.resize(total, Complex64::new(0.0, 0.0));
                let block = n * stride;
                for outer in 0..total / block {
                    for k in 0..n {
                        let src = &self.data[outer * block + k * stride..][..stride];
                        for (inner, &v) in src.iter().enumerate() {
                            scratch[(outer * stride + inner) * n + k] = v;
                        }
                    }
                }
                fft.process(&mut scratch);
                for outer in 0..total / block {
                    for k in 0..n {
                        let dst = &mut self.data[outer * block + k * stride..][..stride];
                        for (inner, v) in dst.iter_mut().enumerate() {
                            *v = scratch[(outer * stride + inner) * n + k];
                        }
                    }
                }
            }
            stride *= n;
        }
    }
}

/// Unnormalized forward transform, `X_k = Σ_j x_j e^{-2πi j·k/N}`.
pub fn dft_forward(mut buffer: SpectralBuffer) -> SpectralBuffer {
    buffer.transform_in_place(FftDirection::Forward);
    buffer
}

/// Inverse transform with the `1/N` normalization.
pub fn dft_inverse(mut buffer: SpectralBuffer) -> SpectralBuffer {
    buffer.transform_in_place(FftDirection::Inverse);
    let scale = 1.0 / buffer.len() as f64;
    for v in &mut buffer.data {
        *v *= scale;
    }
    buffer
}
