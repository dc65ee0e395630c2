use std::path::Path;

use image::{DynamicImage, ImageBuffer, Luma, Rgb};

use super::{to_u16, to_u8};
use crate::error::{Error, Result};
use crate::image::{DepthMap, ImagePlane, TransmissionMap};

fn open(path: &Path) -> Result<DynamicImage> {
    let reader = image::ImageReader::open(path).map_err(|e| Error::io(path, e))?;
    let reader = reader
        .with_guessed_format()
        .map_err(|e| Error::io(path, e))?;
    reader.decode().map_err(|e| Error::Image {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn is_sixteen_bit(img: &DynamicImage) -> bool {
    matches!(
        img,
        DynamicImage::ImageLuma16(_)
            | DynamicImage::ImageLumaA16(_)
            | DynamicImage::ImageRgb16(_)
            | DynamicImage::ImageRgba16(_)
    )
}

fn save(path: &Path, img: DynamicImage) -> Result<()> {
    img.save_with_format(path, image::ImageFormat::Png)
        .map_err(|e| match e {
            image::ImageError::IoError(io) => Error::io(path, io),
            other => Error::Image {
                path: path.to_path_buf(),
                message: other.to_string(),
            },
        })
}

/// Reads an RGB image scaled to `[0, 1]`. 8 and 16 bit inputs are accepted;
/// alpha is discarded.
pub fn read_rgb(path: &Path) -> Result<ImagePlane> {
    let img = open(path)?;
    let (w, h) = (img.width() as usize, img.height() as usize);
    let pixels = if is_sixteen_bit(&img) {
        img.to_rgb16()
            .pixels()
            .map(|p| p.0.map(|v| v as f64 / 65535.0))
            .collect()
    } else {
        img.to_rgb8()
            .pixels()
            .map(|p| p.0.map(|v| v as f64 / 255.0))
            .collect()
    };
    ImagePlane::new(w, h, pixels)
}

/// Writes an 8-bit RGB PNG; values are clamped then rounded.
pub fn write_rgb8(path: &Path, img: &ImagePlane) -> Result<()> {
    let buf: Vec<u8> = img.pixels().iter().flat_map(|p| p.map(to_u8)).collect();
    let out = ImageBuffer::<Rgb<u8>, _>::from_raw(img.width() as u32, img.height() as u32, buf)
        .expect("buffer length matches dimensions");
    save(path, DynamicImage::ImageRgb8(out))
}

/// Writes transmission as 16-bit RGB scaled by 65535. Levels are kept at
/// least 1 so the stored map stays strictly positive.
pub fn write_transmission16(path: &Path, t: &TransmissionMap) -> Result<()> {
    let buf: Vec<u16> = t
        .values()
        .iter()
        .flat_map(|p| p.map(|v| to_u16(v).max(1)))
        .collect();
    let out = ImageBuffer::<Rgb<u16>, _>::from_raw(t.width() as u32, t.height() as u32, buf)
        .expect("buffer length matches dimensions");
    save(path, DynamicImage::ImageRgb16(out))
}

pub fn read_transmission16(path: &Path) -> Result<TransmissionMap> {
    let img = open(path)?;
    if !is_sixteen_bit(&img) {
        return Err(Error::Parse {
            path: path.to_path_buf(),
            message: "transmission map must be a 16-bit PNG".into(),
        });
    }
    let (w, h) = (img.width() as usize, img.height() as usize);
    let t = img
        .to_rgb16()
        .pixels()
        .map(|p| p.0.map(|v| v.max(1) as f64 / 65535.0))
        .collect();
    TransmissionMap::new(w, h, t).map_err(|e| Error::Parse {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

/// Reads a 16-bit grayscale PNG whose levels are millimeters.
pub fn read_depth_png16(path: &Path) -> Result<DepthMap> {
    let img = open(path)?;
    let DynamicImage::ImageLuma16(gray) = img else {
        return Err(Error::Parse {
            path: path.to_path_buf(),
            message: "depth PNG must be 16-bit grayscale (millimeters)".into(),
        });
    };
    let (w, h) = (gray.width() as usize, gray.height() as usize);
    let depth = gray.pixels().map(|p| p.0[0] as f64 / 1000.0).collect();
    DepthMap::new(w, h, depth)
}

/// Writes depth as 16-bit grayscale millimeters, saturating at 65.535 m.
pub fn write_depth_png16(path: &Path, depth: &DepthMap) -> Result<()> {
    let buf: Vec<u16> = depth
        .values()
        .iter()
        .map(|d| (d * 1000.0).round().min(u16::MAX as f64) as u16)
        .collect();
    let out =
        ImageBuffer::<Luma<u16>, _>::from_raw(depth.width() as u32, depth.height() as u32, buf)
            .expect("buffer length matches dimensions");
    save(path, DynamicImage::ImageLuma16(out))
}
