//! Structural similarity on Rec.601 luma.
//!
//! 11x11 Gaussian window (sigma 1.5), `K1 = 0.01`, `K2 = 0.03`, dynamic range
//! 255, averaged over every fully contained window.

use super::window::{local_stats, WINDOW};
use crate::error::{Error, Result};
use crate::image::{Field, ImagePlane};

const K1: f64 = 0.01;
const K2: f64 = 0.03;
const L: f64 = 255.0;

pub fn ssim(a: &ImagePlane, b: &ImagePlane) -> Result<f64> {
    if a.dims() != b.dims() {
        return Err(Error::shape(a.dims(), b.dims()));
    }
    ssim_field(&super::luma255(a), &super::luma255(b))
}

/// SSIM of two single-channel fields already on the 0-255 scale.
pub fn ssim_field(a: &Field, b: &Field) -> Result<f64> {
    if a.dims() != b.dims() {
        return Err(Error::shape(a.dims(), b.dims()));
    }
    super::require_min_dim(a.dims(), WINDOW, "SSIM window")?;
    let c1 = (K1 * L).powi(2);
    let c2 = (K2 * L).powi(2);
    let s = local_stats(a, b);
    let n = s.mu_a.len();
    let total: f64 = (0..n)
        .map(|i| {
            let (ma, mb) = (s.mu_a[i], s.mu_b[i]);
            ((2.0 * ma * mb + c1) * (2.0 * s.cov[i] + c2))
                / ((ma * ma + mb * mb + c1) * (s.var_a[i] + s.var_b[i] + c2))
        })
        .sum();
    Ok(total / n as f64)
}
