//! Free-space (aperiodic) convolution by zero padding onto a doubled box.
//!
//! A kernel table on the doubled box stores the kernel at every signed
//! offset: entry `i` along an axis of extent `m` holds offset `i` for
//! `i ≤ m/2` and `i - m` otherwise. With every extent at least `2n`, the
//! circular convolution of the table with the zero-padded source equals the
//! aperiodic sum on the original `n` points.

use num_complex::Complex64;

use super::fft::{dft_forward, dft_inverse, SpectralBuffer};
use crate::error::{domain, Result};
use crate::grid::{ScalarField, UniformGrid};

/// Power-of-two extent holding `2n` points.
pub fn padded_extent(n: usize) -> usize {
    (2 * n).next_power_of_two()
}

/// Signed offset stored at table index `i` of an axis of extent `m`.
pub fn wrapped_offset(i: usize, m: usize) -> isize {
    if i <= m / 2 {
        i as isize
    } else {
        i as isize - m as isize
    }
}

/// The doubled box of `grid`: padded extents, same spacing, origin at zero.
pub fn doubled_grid(grid: &UniformGrid) -> Result<UniformGrid> {
    let extents: Vec<usize> = grid.extents().iter().map(|&n| padded_extent(n)).collect();
    UniformGrid::new(grid.dim(), &extents, grid.spacing(), &vec![0.0; extents.len()])
}

/// Samples `f` at the signed integer offsets of every table entry.
fn table_on(table_grid: UniformGrid, f: impl Fn(&[isize]) -> f64) -> Result<ScalarField> {
    let ext = table_grid.extents().to_vec();
    let mut offset = vec![0isize; ext.len()];
    let values = (0..table_grid.len())
        .map(|flat| {
            for ((o, &i), &m) in offset.iter_mut().zip(&table_grid.multi_index(flat)).zip(&ext) {
                *o = wrapped_offset(i, m);
            }
            f(&offset)
        })
        .collect();
    ScalarField::new(table_grid, values)
}

/// Kernel table for convolutions on `grid`; `f` receives the offset in
/// cells.
pub fn build_kernel_table(grid: &UniformGrid, f: impl Fn(&[isize]) -> f64) -> Result<ScalarField> {
    table_on(doubled_grid(grid)?, f)
}

/// Transformed kernel table, scaled by the cell volume.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelSpectrum {
    grid: UniformGrid,
    box_extents: Vec<usize>,
    spectrum: Vec<Complex64>,
}

impl KernelSpectrum {
    pub fn new(grid: &UniformGrid, table: &ScalarField) -> Result<Self> {
        let expected = doubled_grid(grid)?;
        let t = table.grid();
        if t.extents() != expected.extents() || t.spacing() != grid.spacing() {
            return domain(format!(
                "kernel table extents {:?} (h = {}) do not match doubled extents {:?} (h = {})",
                t.extents(),
                t.spacing(),
                expected.extents(),
                grid.spacing()
            ));
        }
        Self::from_table(grid, table)
    }

    /// Kernel wrapped on the grid itself, without padding. The result is a
    /// periodic convolution; it exists to demonstrate wrap-around error.
    #[doc(hidden)]
    pub fn periodic_unpadded(grid: &UniformGrid, f: impl Fn(&[isize]) -> f64) -> Result<Self> {
        let own = UniformGrid::new(grid.dim(), grid.extents(), grid.spacing(), &vec![0.0; grid.extents().len()])?;
        let table = table_on(own, f)?;
        Self::from_table(grid, &table)
    }

    fn from_table(grid: &UniformGrid, table: &ScalarField) -> Result<Self> {
        let box_extents = table.grid().extents().to_vec();
        let mut spectrum = dft_forward(SpectralBuffer::from_real(&box_extents, table.values())?).into_data();
        let volume = grid.cell_volume();
        for v in &mut spectrum {
            *v *= volume;
        }
        Ok(Self { grid: grid.clone(), box_extents, spectrum })
    }

    pub fn grid(&self) -> &UniformGrid {
        &self.grid
    }

    pub fn box_extents(&self) -> &[usize] {
        &self.box_extents
    }

    /// `h^d Σ_j kernel(x_i - x_j) source(x_j)` on the source grid.
    pub fn convolve(&self, source: &ScalarField) -> Result<ScalarField> {
        let s = self.source_spectrum(source)?;
        self.combine(&[(1.0, self, &s)])
    }

    /// Zero-padded forward transform of a source on this kernel's grid.
    pub fn source_spectrum(&self, source: &ScalarField) -> Result<SpectralBuffer> {
        self.grid.ensure_same(source.grid())?;
        let mut buf = SpectralBuffer::zeros(&self.box_extents)?;
        let n = self.grid.extents();
        let row = n[n.len() - 1];
        let data = buf.data_mut();
        for (r, chunk) in source.values().chunks_exact(row).enumerate() {
            let index = self.grid.multi_index(r * row);
            let start = index
                .iter()
                .zip(&self.box_extents)
                .fold(0, |acc, (&i, &m)| acc * m + i);
            for (d, &v) in data[start..start + row].iter_mut().zip(chunk) {
                *d = Complex64::new(v, 0.0);
            }
        }
        Ok(dft_forward(buf))
    }

    /// `Σ_t weight_t · (kernel_t ∗ source_t)` with a single inverse transform.
    /// All kernels must share this kernel's grid and box.
    pub fn combine(&self, terms: &[(f64, &KernelSpectrum, &SpectralBuffer)]) -> Result<ScalarField> {
        let mut acc = SpectralBuffer::zeros(&self.box_extents)?;
        for &(w, k, s) in terms {
            if k.box_extents != self.box_extents || s.extents() != self.box_extents.as_slice() {
                return domain("convolution terms live on different boxes");
            }
            self.grid.ensure_same(&k.grid)?;
            for ((a, &kv), &sv) in acc.data_mut().iter_mut().zip(&k.spectrum).zip(s.data()) {
                *a += w * kv * sv;
            }
        }
        let full = dft_inverse(acc);
        let n = self.grid.extents();
        let row = n[n.len() - 1];
        let mut values = Vec::with_capacity(self.grid.len());
        for r in 0..self.grid.len() / row {
            let index = self.grid.multi_index(r * row);
            let start = index
                .iter()
                .zip(&self.box_extents)
                .fold(0, |acc, (&i, &m)| acc * m + i);
            values.extend(full.data()[start..start + row].iter().map(|v| v.re));
        }
        ScalarField::new(self.grid.clone(), values)
    }
}

/// Free-space convolution of `source` with a kernel table on its doubled
/// grid, scaled by `h^d`.
pub fn convolve_free_space(source: &ScalarField, kernel_table: &ScalarField) -> Result<ScalarField> {
    KernelSpectrum::new(source.grid(), kernel_table)?.convolve(source)
}
