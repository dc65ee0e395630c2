//! Patch-based contrast quality index.
//!
//! Each 11x11 Gaussian-weighted patch contributes the product of a contrast
//! change term `(4/pi) atan((cov + C) / (var_a + C))`, a structural term
//! `(cov + C) / (sd_a sd_b + C)` and a mean intensity term
//! `exp(-|mu_a - mu_b| / L)`, with `C = 3` and `L = 256`. `a` is the
//! reference; a contrast gain in `b` can push the score above one.

use super::window::{local_stats, WINDOW};
use crate::error::{Error, Result};
use crate::image::{Field, ImagePlane};

const C: f64 = 3.0;
const L: f64 = 256.0;

pub fn pcqi(a: &ImagePlane, b: &ImagePlane) -> Result<f64> {
    if a.dims() != b.dims() {
        return Err(Error::shape(a.dims(), b.dims()));
    }
    pcqi_field(&super::luma255(a), &super::luma255(b))
}

pub fn pcqi_field(a: &Field, b: &Field) -> Result<f64> {
    if a.dims() != b.dims() {
        return Err(Error::shape(a.dims(), b.dims()));
    }
    super::require_min_dim(a.dims(), WINDOW, "PCQI patch")?;
    let s = local_stats(a, b);
    let n = s.mu_a.len();
    let total: f64 = (0..n)
        .map(|i| {
            let va = s.var_a[i].max(0.0);
            let vb = s.var_b[i].max(0.0);
            let cov = s.cov[i];
            let contrast = 4.0 / std::f64::consts::PI * ((cov + C) / (va + C)).atan();
            let structure = (cov + C) / (va.sqrt() * vb.sqrt() + C);
            let intensity = (-(s.mu_a[i] - s.mu_b[i]).abs() / L).exp();
            contrast * structure * intensity
        })
        .sum();
    Ok(total / n as f64)
}
