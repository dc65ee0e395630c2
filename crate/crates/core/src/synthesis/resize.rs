//! Bilinear resampling with pixel-centre alignment and clamped edges.

use crate::image::{DepthMap, ImagePlane};

/// Source coordinate, lower index and weight of the upper neighbour.
fn taps(dst: usize, src: usize) -> Vec<(usize, usize, f64)> {
    let scale = src as f64 / dst as f64;
    (0..dst)
        .map(|i| {
            let s = ((i as f64 + 0.5) * scale - 0.5).clamp(0.0, (src - 1) as f64);
            let lo = s.floor() as usize;
            let hi = (lo + 1).min(src - 1);
            (lo, hi, s - lo as f64)
        })
        .collect()
}

fn resample<T: Copy>(
    src_w: usize,
    src_h: usize,
    dst_w: usize,
    dst_h: usize,
    get: impl Fn(usize, usize) -> T,
    mix: impl Fn(T, T, f64) -> T,
) -> Vec<T> {
    let xs = taps(dst_w, src_w);
    let ys = taps(dst_h, src_h);
    let mut out = Vec::with_capacity(dst_w * dst_h);
    for &(y0, y1, fy) in &ys {
        for &(x0, x1, fx) in &xs {
            let top = mix(get(x0, y0), get(x1, y0), fx);
            let bottom = mix(get(x0, y1), get(x1, y1), fx);
            out.push(mix(top, bottom, fy));
        }
    }
    out
}

pub fn resize_image(img: &ImagePlane, width: usize, height: usize) -> ImagePlane {
    if img.dims() == (width, height) {
        return img.clone();
    }
    let pixels = resample(
        img.width(),
        img.height(),
        width,
        height,
        |x, y| img.get(x, y),
        |a, b, t| std::array::from_fn(|k| a[k] + (b[k] - a[k]) * t),
    );
    ImagePlane::new(width, height, pixels).expect("convex combinations of valid pixels")
}

pub fn resize_depth(depth: &DepthMap, width: usize, height: usize) -> DepthMap {
    if depth.dims() == (width, height) {
        return depth.clone();
    }
    let values = resample(
        depth.width(),
        depth.height(),
        width,
        height,
        |x, y| depth.get(x, y),
        |a, b, t| a + (b - a) * t,
    );
    DepthMap::new(width, height, values).expect("convex combinations of valid depths")
}
