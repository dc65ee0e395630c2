//! File formats at the quantization boundary.
//!
//! Everything inside the crate is `f64`; conversion to 8 or 16 bit happens
//! only here. Depth is read from 16-bit grayscale PNG (millimeters) or PFM
//! (meters).

mod pfm;
mod png;

pub use self::pfm::{read_pfm, write_pfm};
pub use self::png::{
    read_depth_png16, read_rgb, read_transmission16, write_depth_png16, write_rgb8,
    write_transmission16,
};

use std::path::Path;

use crate::error::{Error, Result};
use crate::image::{DepthMap, ImagePlane};

/// Rounds every intensity to the nearest 8-bit level, `round(v * 255) / 255`.
pub fn quantize8(img: &ImagePlane) -> ImagePlane {
    img.clamped()
        .map(|p| p.map(|v| to_u8(v) as f64 / 255.0))
        .expect("quantized values are finite")
}

#[inline]
pub(crate) fn to_u8(v: f64) -> u8 {
    (v.clamp(0.0, 1.0) * 255.0).round() as u8
}

#[inline]
pub(crate) fn to_u16(v: f64) -> u16 {
    (v.clamp(0.0, 1.0) * 65535.0).round() as u16
}

/// Reads a depth map, dispatching on extension: `.pfm` is meters, anything
/// else must be a 16-bit grayscale PNG in millimeters.
pub fn read_depth(path: &Path) -> Result<DepthMap> {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("pfm") => read_pfm(path),
        Some(ext) if ext.eq_ignore_ascii_case("png") => read_depth_png16(path),
        _ => Err(Error::Parse {
            path: path.to_path_buf(),
            message: "depth must be a .png (16-bit millimeters) or .pfm file".into(),
        }),
    }
}
