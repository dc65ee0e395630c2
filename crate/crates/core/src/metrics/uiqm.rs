//! Underwater image quality measure.
//!
//! `UIQM = 0.3282 UICM + 0.2953 UISM + 3.5753 UIConM` on the 0-255 scale.
//!
//! * UICM (colourfulness): alpha-trimmed mean and variance of the RG and YB
//!   opponent channels, `-0.0268 |mu| + 0.1586 sqrt(var_rg + var_yb)`.
//! * UISM (sharpness): EME over 8x8 blocks of each Sobel-magnitude weighted
//!   channel, combined with Rec.601 weights.
//! * UIConM (contrast): logAMEE over 8x8 blocks of the luma plane.

use crate::error::Result;
use crate::image::{Field, ImagePlane};

pub const UICM_WEIGHT: f64 = 0.3282;
pub const UISM_WEIGHT: f64 = 0.2953;
pub const UICONM_WEIGHT: f64 = 3.5753;

pub const BLOCK: usize = 8;
const TRIM: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Uiqm {
    pub uicm: f64,
    pub uism: f64,
    pub uiconm: f64,
    pub uiqm: f64,
}

/// Weighted combination of the three sub-measures.
pub fn combine(uicm: f64, uism: f64, uiconm: f64) -> f64 {
    UICM_WEIGHT * uicm + UISM_WEIGHT * uism + UICONM_WEIGHT * uiconm
}

pub fn uiqm(a: &ImagePlane) -> Result<Uiqm> {
    super::require_min_dim(a.dims(), BLOCK, "UIQM block")?;
    let uicm = uicm(a);
    let uism = uism(a);
    let uiconm = uiconm(a);
    Ok(Uiqm {
        uicm,
        uism,
        uiconm,
        uiqm: combine(uicm, uism, uiconm),
    })
}

/// Mean after dropping `ceil(t K)` smallest and `floor(t K)` largest samples.
fn trimmed_mean(mut v: Vec<f64>, trim: f64) -> f64 {
    v.sort_by(f64::total_cmp);
    let k = v.len();
    let lo = (trim * k as f64).ceil() as usize;
    let hi = (trim * k as f64).floor() as usize;
    let kept = &v[lo..k - hi];
    kept.iter().sum::<f64>() / kept.len() as f64
}

fn uicm(a: &ImagePlane) -> f64 {
    let rg: Vec<f64> = a.pixels().iter().map(|p| (p[0] - p[1]) * 255.0).collect();
    let yb: Vec<f64> = a
        .pixels()
        .iter()
        .map(|p| ((p[0] + p[1]) / 2.0 - p[2]) * 255.0)
        .collect();
    let spread =
        |v: &[f64], mu: f64| v.iter().map(|x| (x - mu).powi(2)).sum::<f64>() / v.len() as f64;
    let mu_rg = trimmed_mean(rg.clone(), TRIM);
    let mu_yb = trimmed_mean(yb.clone(), TRIM);
    let var = spread(&rg, mu_rg) + spread(&yb, mu_yb);
    -0.0268 * mu_rg.hypot(mu_yb) + 0.1586 * var.sqrt()
}

/// Sobel gradient magnitude with replicated borders.
fn sobel_magnitude(f: &Field) -> Field {
    let (w, h) = f.dims();
    let at = |x: isize, y: isize| {
        let xx = x.clamp(0, w as isize - 1) as usize;
        let yy = y.clamp(0, h as isize - 1) as usize;
        f.get(xx, yy)
    };
    Field::from_fn(w, h, |x, y| {
        let (x, y) = (x as isize, y as isize);
        let gx = (at(x + 1, y - 1) + 2.0 * at(x + 1, y) + at(x + 1, y + 1))
            - (at(x - 1, y - 1) + 2.0 * at(x - 1, y) + at(x - 1, y + 1));
        let gy = (at(x - 1, y + 1) + 2.0 * at(x, y + 1) + at(x + 1, y + 1))
            - (at(x - 1, y - 1) + 2.0 * at(x, y - 1) + at(x + 1, y - 1));
        gx.hypot(gy)
    })
    .expect("dimensions come from a valid field")
}

/// Visits the `(max, min)` of every complete block; trailing partial blocks are skipped.
fn block_extrema(f: &Field, mut visit: impl FnMut(f64, f64)) -> usize {
    let (w, h) = f.dims();
    let (bw, bh) = (w / BLOCK, h / BLOCK);
    for by in 0..bh {
        for bx in 0..bw {
            let mut mx = f64::NEG_INFINITY;
            let mut mn = f64::INFINITY;
            for y in by * BLOCK..(by + 1) * BLOCK {
                for x in bx * BLOCK..(bx + 1) * BLOCK {
                    let v = f.get(x, y);
                    mx = mx.max(v);
                    mn = mn.min(v);
                }
            }
            visit(mx, mn);
        }
    }
    bw * bh
}

fn eme(f: &Field) -> f64 {
    let mut total = 0.0;
    let n = block_extrema(f, |mx, mn| {
        if mn > 0.0 && mx > 0.0 {
            total += (mx / mn).ln();
        }
    });
    2.0 / n as f64 * total
}

fn uism(a: &ImagePlane) -> f64 {
    const LAMBDA: [f64; 3] = [0.299, 0.587, 0.114];
    (0..3)
        .map(|c| {
            let ch = a.channel(c);
            let ch = Field::new(
                ch.width(),
                ch.height(),
                ch.values().iter().map(|v| v * 255.0).collect(),
            )
            .expect("same dimensions");
            let mag = sobel_magnitude(&ch);
            let edge = Field::new(
                ch.width(),
                ch.height(),
                mag.values()
                    .iter()
                    .zip(ch.values())
                    .map(|(m, v)| m * v)
                    .collect(),
            )
            .expect("same dimensions");
            LAMBDA[c] * eme(&edge)
        })
        .sum()
}

fn uiconm(a: &ImagePlane) -> f64 {
    let luma = super::luma255(a);
    let mut total = 0.0;
    let n = block_extrema(&luma, |mx, mn| {
        let top = mx - mn;
        let bot = mx + mn;
        if top > 0.0 && bot > 0.0 {
            let ratio = top / bot;
            total += ratio * ratio.ln();
        }
    });
    -total / n as f64
}
