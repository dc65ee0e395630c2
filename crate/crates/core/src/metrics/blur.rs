//! No-reference perceptual blur estimate.
//!
//! The luma plane is re-blurred with a 9-tap box filter (zero padding)
//! separately along each axis. Along each axis the neighbour differences of
//! the original are compared with those of the re-blurred copy; the share of
//! variation that the re-blur fails to remove measures remaining sharpness.
//! The score is the larger of the two per-axis blur values, in `[0, 1]`.

use crate::error::Result;
use crate::image::{Field, ImagePlane};

const TAPS: usize = 9;

pub fn blur_metric(a: &ImagePlane) -> Result<f64> {
    blur_metric_field(&super::luma255(a))
}

fn box_blur(f: &Field, horizontal: bool) -> Vec<f64> {
    let (w, h) = f.dims();
    let r = (TAPS / 2) as isize;
    let mut out = vec![0.0; w * h];
    for y in 0..h {
        for x in 0..w {
            let mut s = 0.0;
            for k in -r..=r {
                let (xx, yy) = if horizontal {
                    (x as isize + k, y as isize)
                } else {
                    (x as isize, y as isize + k)
                };
                if xx >= 0 && yy >= 0 && (xx as usize) < w && (yy as usize) < h {
                    s += f.get(xx as usize, yy as usize);
                }
            }
            out[y * w + x] = s / TAPS as f64;
        }
    }
    out
}

/// Blur along one axis. Differences are taken between pixel `p` and its
/// successor along the axis, over the interior `1..n-2` of both axes.
fn axis_blur(f: &Field, horizontal: bool) -> f64 {
    let (w, h) = f.dims();
    let blurred = box_blur(f, horizontal);
    let (mut s_d, mut s_v) = (0.0, 0.0);
    for y in 1..h - 1 {
        for x in 1..w - 1 {
            let (nx, ny) = if horizontal { (x + 1, y) } else { (x, y + 1) };
            let d_f = (f.get(x, y) - f.get(nx, ny)).abs();
            let d_b = (blurred[y * w + x] - blurred[ny * w + nx]).abs();
            s_d += d_f;
            s_v += (d_f - d_b).max(0.0);
        }
    }
    if s_d > 0.0 {
        (s_d - s_v) / s_d
    } else {
        0.0
    }
}

pub fn blur_metric_field(f: &Field) -> Result<f64> {
    super::require_min_dim(f.dims(), TAPS, "blur filter")?;
    Ok(axis_blur(f, false).max(axis_blur(f, true)))
}
