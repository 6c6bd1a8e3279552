//! Discrete Fourier transforms, free-space convolution on doubled boxes and
//! spectral derivatives.

mod convolution;
mod fft;
mod spectral;

pub use convolution::{
    build_kernel_table, convolve_free_space, doubled_grid, padded_extent, wrapped_offset,
    KernelSpectrum,
};
pub use fft::{dft_forward, dft_inverse, SpectralBuffer};
pub use spectral::{
    spectral_curl, spectral_curl_2d, spectral_derivative, spectral_divergence, spectral_gradient,
};
