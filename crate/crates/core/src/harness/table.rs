//! Tabulated kernels for plotting.

use std::fmt::Write as _;

use crate::error::{domain, Result};
use crate::kernels::{Dimension, RadialKernel};

/// CSV of `G` and `K`, regularized and singular, on `samples` equally
/// spaced radii in `[0, r_max]` with `σ = h/π`. Singular columns are `NaN`
/// where the singular kernel is undefined.
pub fn kernel_table_csv(dim: Dimension, h: f64, ref_length: f64, r_max: f64, samples: usize) -> Result<String> {
    if samples < 2 {
        return domain(format!("need at least two samples, got {samples}"));
    }
    if r_max <= 0.0 || !r_max.is_finite() {
        return domain(format!("r_max must be positive and finite, got {r_max}"));
    }
    let k = RadialKernel::for_spacing(dim, h, ref_length)?;
    let mut out = String::new();
    writeln!(
        out,
        "# d={} h={h:e} sigma={:e} L={ref_length:e}; singular columns are NaN at r=0",
        dim.get(),
        k.sigma()
    )
    .expect("write to string");
    out.push_str("r_over_h,G_regularized,G_singular,K_regularized,K_singular\n");
    for i in 0..samples {
        let r = r_max * i as f64 / (samples - 1) as f64;
        let gs = k.singular_greens(r).unwrap_or(f64::NAN);
        let ks = k.singular_gradient_radial(r).unwrap_or(f64::NAN);
        writeln!(
            out,
            "{:e},{:e},{:e},{:e},{:e}",
            r / h,
            k.greens(r),
            gs,
            k.greens_gradient_radial(r),
            ks
        )
        .expect("write to string");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    fn row(text: &str, i: usize) -> Vec<f64> {
        text.lines().nth(2 + i).unwrap().split(',').map(|v| v.parse().unwrap()).collect()
    }

    #[test]
    fn origin_rows() {
        let t = kernel_table_csv(Dimension::Three, 1.0, 3.0, 10.0, 11).unwrap();
        let r0 = row(&t, 0);
        let sigma = 1.0 / PI;
        assert!((r0[1] - 1.0 / (2.0 * PI * PI * sigma)).abs() < 1e-15);
        assert!(r0[2].is_nan() && r0[4].is_nan());
        assert_eq!(r0[3], 0.0);
        assert_eq!(row(&t, 10)[0], 10.0);
        let t2 = kernel_table_csv(Dimension::Two, 1.0, 3.0, 10.0, 11).unwrap();
        let k = RadialKernel::for_spacing(Dimension::Two, 1.0, 3.0).unwrap();
        assert_eq!(row(&t2, 0)[1], k.c2());
    }

    #[test]
    fn deterministic_and_validated() {
        let a = kernel_table_csv(Dimension::One, 0.5, 3.0, 4.0, 50).unwrap();
        assert_eq!(a, kernel_table_csv(Dimension::One, 0.5, 3.0, 4.0, 50).unwrap());
        assert!(kernel_table_csv(Dimension::One, 0.5, 3.0, 4.0, 1).is_err());
        assert!(kernel_table_csv(Dimension::One, 0.5, 3.0, 0.0, 5).is_err());
        assert!(kernel_table_csv(Dimension::One, 0.0, 3.0, 1.0, 5).is_err());
    }
}
