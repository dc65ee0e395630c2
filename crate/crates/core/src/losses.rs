//! Loss functions evaluated on images, transmission maps and the
//! attenuation/background vector.

use crate::error::{Error, Result};
use crate::image::{Field, ImagePlane, TransmissionMap};

/// Forward-difference gradients of a scalar field.
///
/// `gx[r][c] = m[r][c+1] - m[r][c]` with the last column zero, and `gy`
/// likewise along rows with the last row zero.
#[derive(Debug, Clone, PartialEq)]
pub struct GradientPair {
    pub gx: Field,
    pub gy: Field,
}

/// How per-pixel gradient differences are accumulated by [`gradient_loss`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GradientNorm {
    /// Sum of squared differences.
    #[default]
    Squared,
    /// Sum of absolute differences.
    Absolute,
}

pub fn gradients(m: &Field) -> GradientPair {
    let (w, h) = m.dims();
    let gx = Field::from_fn(w, h, |x, y| {
        if x + 1 < w {
            m.get(x + 1, y) - m.get(x, y)
        } else {
            0.0
        }
    })
    .expect("dimensions come from a valid field");
    let gy = Field::from_fn(w, h, |x, y| {
        if y + 1 < h {
            m.get(x, y + 1) - m.get(x, y)
        } else {
            0.0
        }
    })
    .expect("dimensions come from a valid field");
    GradientPair { gx, gy }
}

fn same_dims(a: (usize, usize), b: (usize, usize)) -> Result<()> {
    if a != b {
        return Err(Error::shape(a, b));
    }
    Ok(())
}

/// Gradient loss between two single-channel fields, summed over pixels.
pub fn field_gradient_loss(a: &Field, b: &Field, norm: GradientNorm) -> Result<f64> {
    same_dims(a.dims(), b.dims())?;
    let ga = gradients(a);
    let gb = gradients(b);
    let term = |d: f64| match norm {
        GradientNorm::Squared => d * d,
        GradientNorm::Absolute => d.abs(),
    };
    let sum_x: f64 = ga
        .gx
        .values()
        .iter()
        .zip(gb.gx.values())
        .map(|(p, q)| term(p - q))
        .sum();
    let sum_y: f64 = ga
        .gy
        .values()
        .iter()
        .zip(gb.gy.values())
        .map(|(p, q)| term(p - q))
        .sum();
    Ok(sum_x + sum_y)
}

/// Gradient-preserving loss between an estimated and a reference
/// transmission map, summed over pixels and channels.
pub fn gradient_loss(t_hat: &TransmissionMap, t: &TransmissionMap) -> Result<f64> {
    gradient_loss_with(t_hat, t, GradientNorm::default())
}

pub fn gradient_loss_with(
    t_hat: &TransmissionMap,
    t: &TransmissionMap,
    norm: GradientNorm,
) -> Result<f64> {
    same_dims(t_hat.dims(), t.dims())?;
    (0..3).try_fold(0.0, |acc, c| {
        Ok(acc + field_gradient_loss(&t_hat.channel(c), &t.channel(c), norm)?)
    })
}

/// Mean absolute difference over all pixels and channels.
pub fn l1_pixel(a: &ImagePlane, b: &ImagePlane) -> Result<f64> {
    same_dims(a.dims(), b.dims())?;
    Ok(mean_abs(a.pixels(), b.pixels()))
}

fn mean_abs(a: &[[f64; 3]], b: &[[f64; 3]]) -> f64 {
    let n = (a.len() * 3) as f64;
    a.iter()
        .zip(b)
        .flat_map(|(p, q)| (0..3).map(move |k| (p[k] - q[k]).abs()))
        .sum::<f64>()
        / n
}

/// Transmission objective: gradient loss plus mean absolute difference.
pub fn transmission_objective(t_hat: &TransmissionMap, t: &TransmissionMap) -> Result<f64> {
    transmission_objective_with(t_hat, t, GradientNorm::default())
}

pub fn transmission_objective_with(
    t_hat: &TransmissionMap,
    t: &TransmissionMap,
    norm: GradientNorm,
) -> Result<f64> {
    let grad = gradient_loss_with(t_hat, t, norm)?;
    Ok(grad + mean_abs(t_hat.values(), t.values()))
}

/// Single-channel transmission objective.
pub fn field_transmission_objective(a: &Field, b: &Field, norm: GradientNorm) -> Result<f64> {
    let grad = field_gradient_loss(a, b, norm)?;
    let n = a.values().len() as f64;
    let l1 = a
        .values()
        .iter()
        .zip(b.values())
        .map(|(p, q)| (p - q).abs())
        .sum::<f64>()
        / n;
    Ok(grad + l1)
}

/// Mean absolute difference between two `C ++ B` vectors.
pub fn cb_loss(pred: &[f64], truth: &[f64]) -> Result<f64> {
    if pred.len() != truth.len() || pred.len() != 6 {
        return Err(Error::Shape {
            expected: "two 6-component vectors".into(),
            actual: format!("{} and {} components", pred.len(), truth.len()),
        });
    }
    Ok(pred
        .iter()
        .zip(truth)
        .map(|(p, t)| (p - t).abs())
        .sum::<f64>()
        / 6.0)
}
