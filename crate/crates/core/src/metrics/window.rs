//! Sliding-window helpers shared by SSIM and PCQI.

use crate::image::Field;

pub(crate) const WINDOW: usize = 11;
pub(crate) const SIGMA: f64 = 1.5;

/// Normalised 1-D Gaussian taps; the 2-D window is their outer product.
pub(crate) fn gaussian_taps(size: usize, sigma: f64) -> Vec<f64> {
    let r = (size / 2) as f64;
    let taps: Vec<f64> = (0..size)
        .map(|i| {
            let x = i as f64 - r;
            (-(x * x) / (2.0 * sigma * sigma)).exp()
        })
        .collect();
    let sum: f64 = taps.iter().sum();
    taps.into_iter().map(|t| t / sum).collect()
}

/// Weighted means over every fully contained window ("valid" region),
/// computed separably. Output is `(w - k + 1) x (h - k + 1)` row-major.
pub(crate) fn valid_filter(values: &[f64], width: usize, height: usize, taps: &[f64]) -> Vec<f64> {
    let k = taps.len();
    let ow = width + 1 - k;
    let oh = height + 1 - k;
    let mut rows = vec![0.0; ow * height];
    for y in 0..height {
        let src = &values[y * width..(y + 1) * width];
        for x in 0..ow {
            rows[y * ow + x] = taps.iter().zip(&src[x..x + k]).map(|(t, v)| t * v).sum();
        }
    }
    let mut out = vec![0.0; ow * oh];
    for y in 0..oh {
        for x in 0..ow {
            out[y * ow + x] = taps
                .iter()
                .enumerate()
                .map(|(i, t)| t * rows[(y + i) * ow + x])
                .sum();
        }
    }
    out
}

/// Local means, variances and covariance of two fields under the Gaussian window.
pub(crate) struct LocalStats {
    pub mu_a: Vec<f64>,
    pub mu_b: Vec<f64>,
    pub var_a: Vec<f64>,
    pub var_b: Vec<f64>,
    pub cov: Vec<f64>,
}

/// Second moments are accumulated around each window's own mean, so
/// `var_a` equals `cov` exactly when `a == b` and is never negative.
pub(crate) fn local_stats(a: &Field, b: &Field) -> LocalStats {
    let (w, h) = a.dims();
    let taps = gaussian_taps(WINDOW, SIGMA);
    let av = a.values();
    let bv = b.values();
    let mu_a = valid_filter(av, w, h, &taps);
    let mu_b = valid_filter(bv, w, h, &taps);
    let k = taps.len();
    let ow = w + 1 - k;
    let n = mu_a.len();
    let (mut var_a, mut var_b, mut cov) = (vec![0.0; n], vec![0.0; n], vec![0.0; n]);
    for i in 0..n {
        let (ox, oy) = (i % ow, i / ow);
        let (ma, mb) = (mu_a[i], mu_b[i]);
        let (mut saa, mut sbb, mut sab) = (0.0, 0.0, 0.0);
        for (j, tj) in taps.iter().enumerate() {
            let row = (oy + j) * w + ox;
            for (l, tl) in taps.iter().enumerate() {
                let wt = tj * tl;
                let da = av[row + l] - ma;
                let db = bv[row + l] - mb;
                saa += wt * da * da;
                sbb += wt * db * db;
                sab += wt * da * db;
            }
        }
        var_a[i] = saa;
        var_b[i] = sbb;
        cov[i] = sab;
    }
    LocalStats {
        mu_a,
        mu_b,
        var_a,
        var_b,
        cov,
    }
}
