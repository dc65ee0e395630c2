use crate::error::{Error, Result};
use crate::image::ImagePlane;

/// Mean squared error over all pixels and channels on the 0-255 scale.
pub fn mse(a: &ImagePlane, b: &ImagePlane) -> Result<f64> {
    if a.dims() != b.dims() {
        return Err(Error::shape(a.dims(), b.dims()));
    }
    let n = (a.pixels().len() * 3) as f64;
    let sum: f64 = a
        .pixels()
        .iter()
        .zip(b.pixels())
        .flat_map(|(p, q)| (0..3).map(move |k| (p[k] - q[k]) * 255.0))
        .map(|d| d * d)
        .sum();
    Ok(sum / n)
}

/// `10 log10(255^2 / mse)`; `+inf` for a zero error.
pub fn psnr_from_mse(mse: f64) -> f64 {
    if mse <= 0.0 {
        f64::INFINITY
    } else {
        10.0 * (255.0f64 * 255.0 / mse).log10()
    }
}

pub fn psnr(a: &ImagePlane, b: &ImagePlane) -> Result<f64> {
    mse(a, b).map(psnr_from_mse)
}
