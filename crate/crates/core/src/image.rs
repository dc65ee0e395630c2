//! Planar containers for images, depth and transmission.
//!
//! All pixel storage is row-major `f64`. Images hold interleaved RGB triples
//! with channel order R, G, B.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One scalar per color channel.
///
/// Serialized as a three element array `[r, g, b]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct ChannelTriple {
    pub r: f64,
    pub g: f64,
    pub b: f64,
}

impl ChannelTriple {
    pub const fn new(r: f64, g: f64, b: f64) -> Self {
        Self { r, g, b }
    }

    pub const fn splat(v: f64) -> Self {
        Self { r: v, g: v, b: v }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.r, self.g, self.b]
    }

    pub fn map(self, f: impl Fn(f64) -> f64) -> Self {
        Self::new(f(self.r), f(self.g), f(self.b))
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|v| v.is_finite())
    }
}

impl From<[f64; 3]> for ChannelTriple {
    fn from(v: [f64; 3]) -> Self {
        Self::new(v[0], v[1], v[2])
    }
}

impl From<ChannelTriple> for [f64; 3] {
    fn from(t: ChannelTriple) -> Self {
        t.to_array()
    }
}

fn check_dims(width: usize, height: usize, len: usize) -> Result<()> {
    if width == 0 || height == 0 {
        return Err(Error::domain(format!(
            "dimensions must be positive, got {width}x{height}"
        )));
    }
    if width * height != len {
        return Err(Error::Shape {
            expected: format!("{} values for {width}x{height}", width * height),
            actual: format!("{len} values"),
        });
    }
    Ok(())
}

/// A single-channel scalar field.
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    width: usize,
    height: usize,
    values: Vec<f64>,
}

impl Field {
    pub fn new(width: usize, height: usize, values: Vec<f64>) -> Result<Self> {
        check_dims(width, height, values.len())?;
        Ok(Self {
            width,
            height,
            values,
        })
    }

    pub fn from_fn(width: usize, height: usize, f: impl Fn(usize, usize) -> f64) -> Result<Self> {
        let values = (0..height)
            .flat_map(|y| (0..width).map(move |x| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        Self::new(width, height, values)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.values[y * self.width + x]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

/// An RGB image with intensities nominally in `[0, 1]`.
///
/// Construction only requires finite values; operations that may leave the
/// unit range (unclamped restoration) document it, and [`ImagePlane::clamped`]
/// brings a plane back into range.
#[derive(Debug, Clone, PartialEq)]
pub struct ImagePlane {
    width: usize,
    height: usize,
    pixels: Vec<[f64; 3]>,
}

impl ImagePlane {
    pub fn new(width: usize, height: usize, pixels: Vec<[f64; 3]>) -> Result<Self> {
        check_dims(width, height, pixels.len())?;
        if pixels.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::domain("image contains non-finite intensities"));
        }
        Ok(Self {
            width,
            height,
            pixels,
        })
    }

    pub fn filled(width: usize, height: usize, rgb: [f64; 3]) -> Result<Self> {
        Self::new(width, height, vec![rgb; width * height])
    }

    pub fn from_fn(
        width: usize,
        height: usize,
        f: impl Fn(usize, usize) -> [f64; 3],
    ) -> Result<Self> {
        let pixels = (0..height)
            .flat_map(|y| (0..width).map(move |x| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        Self::new(width, height, pixels)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> [f64; 3] {
        self.pixels[y * self.width + x]
    }

    pub fn pixels(&self) -> &[[f64; 3]] {
        &self.pixels
    }

    /// Per-pixel map preserving dimensions. Non-finite results are rejected.
    pub fn map(&self, f: impl Fn([f64; 3]) -> [f64; 3]) -> Result<Self> {
        Self::new(
            self.width,
            self.height,
            self.pixels.iter().map(|&p| f(p)).collect(),
        )
    }

    pub fn clamped(&self) -> Self {
        Self {
            width: self.width,
            height: self.height,
            pixels: self
                .pixels
                .iter()
                .map(|p| p.map(|v| v.clamp(0.0, 1.0)))
                .collect(),
        }
    }

    pub fn is_unit_range(&self) -> bool {
        self.pixels
            .iter()
            .flatten()
            .all(|v| (0.0..=1.0).contains(v))
    }

    pub fn channel(&self, c: usize) -> Field {
        assert!(c < 3, "channel index out of range");
        Field {
            width: self.width,
            height: self.height,
            values: self.pixels.iter().map(|p| p[c]).collect(),
        }
    }

    /// Rec.601 luma, `0.299 R + 0.587 G + 0.114 B`, on the same scale as the image.
    pub fn luminance(&self) -> Field {
        Field {
            width: self.width,
            height: self.height,
            values: self
                .pixels
                .iter()
                .map(|p| 0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2])
                .collect(),
        }
    }

    pub fn channel_means(&self) -> [f64; 3] {
        let n = self.pixels.len() as f64;
        let mut acc = [0.0; 3];
        for p in &self.pixels {
            for c in 0..3 {
                acc[c] += p[c];
            }
        }
        acc.map(|s| s / n)
    }

    pub(crate) fn ensure_same_dims(&self, other: (usize, usize)) -> Result<()> {
        if self.dims() != other {
            return Err(Error::shape(self.dims(), other));
        }
        Ok(())
    }
}

/// Per-pixel object to camera distance in meters.
#[derive(Debug, Clone, PartialEq)]
pub struct DepthMap {
    width: usize,
    height: usize,
    depth: Vec<f64>,
}

impl DepthMap {
    pub fn new(width: usize, height: usize, depth: Vec<f64>) -> Result<Self> {
        check_dims(width, height, depth.len())?;
        if let Some(bad) = depth.iter().find(|d| !d.is_finite() || **d < 0.0) {
            return Err(Error::domain(format!(
                "depth must be finite and non-negative, got {bad}"
            )));
        }
        Ok(Self {
            width,
            height,
            depth,
        })
    }

    pub fn constant(width: usize, height: usize, meters: f64) -> Result<Self> {
        Self::new(width, height, vec![meters; width * height])
    }

    pub fn from_fn(width: usize, height: usize, f: impl Fn(usize, usize) -> f64) -> Result<Self> {
        let field = Field::from_fn(width, height, f)?;
        Self::new(width, height, field.values)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.depth[y * self.width + x]
    }

    pub fn values(&self) -> &[f64] {
        &self.depth
    }
}

/// Per-pixel, per-channel transmission in `(0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransmissionMap {
    width: usize,
    height: usize,
    t: Vec<[f64; 3]>,
}

impl TransmissionMap {
    pub fn new(width: usize, height: usize, t: Vec<[f64; 3]>) -> Result<Self> {
        check_dims(width, height, t.len())?;
        if let Some(bad) = t.iter().flatten().find(|v| !(**v > 0.0 && **v <= 1.0)) {
            return Err(Error::domain(format!(
                "transmission must lie in (0, 1], got {bad}"
            )));
        }
        Ok(Self { width, height, t })
    }

    pub fn uniform(width: usize, height: usize, t: [f64; 3]) -> Result<Self> {
        Self::new(width, height, vec![t; width * height])
    }

    pub fn from_fn(
        width: usize,
        height: usize,
        f: impl Fn(usize, usize) -> [f64; 3],
    ) -> Result<Self> {
        let t = (0..height)
            .flat_map(|y| (0..width).map(move |x| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        Self::new(width, height, t)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> [f64; 3] {
        self.t[y * self.width + x]
    }

    pub fn values(&self) -> &[[f64; 3]] {
        &self.t
    }

    pub fn channel(&self, c: usize) -> Field {
        assert!(c < 3, "channel index out of range");
        Field {
            width: self.width,
            height: self.height,
            values: self.t.iter().map(|p| p[c]).collect(),
        }
    }

    pub fn min_value(&self) -> f64 {
        self.t
            .iter()
            .flatten()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }
}
