//! Portable float map, single channel (`Pf`) or RGB (`PF`, first channel used).
//!
//! Rows are stored bottom to top; a negative scale marks little-endian data.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::image::DepthMap;

fn parse_err(path: &Path, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        message: message.into(),
    }
}

pub fn read_pfm(path: &Path) -> Result<DepthMap> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    // three whitespace-terminated header tokens
    let mut tokens = Vec::with_capacity(4);
    let mut pos = 0;
    while tokens.len() < 4 {
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if start == pos {
            return Err(parse_err(path, "truncated PFM header"));
        }
        tokens.push(
            std::str::from_utf8(&bytes[start..pos])
                .map_err(|_| parse_err(path, "non-ASCII PFM header"))?,
        );
    }
    // exactly one whitespace byte separates the header from the data
    pos += 1;

    let channels = match tokens[0] {
        "Pf" => 1,
        "PF" => 3,
        other => return Err(parse_err(path, format!("bad PFM magic `{other}`"))),
    };
    let width: usize = tokens[1]
        .parse()
        .map_err(|_| parse_err(path, "bad PFM width"))?;
    let height: usize = tokens[2]
        .parse()
        .map_err(|_| parse_err(path, "bad PFM height"))?;
    let scale: f64 = tokens[3]
        .parse()
        .map_err(|_| parse_err(path, "bad PFM scale"))?;
    let little = scale < 0.0;

    let need = width * height * channels * 4;
    let data = bytes
        .get(pos..pos + need)
        .ok_or_else(|| parse_err(path, "truncated PFM data"))?;
    let mut depth = vec![0.0; width * height];
    for row in 0..height {
        let y = height - 1 - row;
        for x in 0..width {
            let off = ((row * width + x) * channels) * 4;
            let raw = [data[off], data[off + 1], data[off + 2], data[off + 3]];
            let v = if little {
                f32::from_le_bytes(raw)
            } else {
                f32::from_be_bytes(raw)
            };
            depth[y * width + x] = v as f64;
        }
    }
    DepthMap::new(width, height, depth).map_err(|e| parse_err(path, e.to_string()))
}

/// Writes a little-endian single-channel PFM.
pub fn write_pfm(path: &Path, depth: &DepthMap) -> Result<()> {
    let (w, h) = depth.dims();
    let mut out = format!("Pf\n{w} {h}\n-1.0\n").into_bytes();
    out.reserve(w * h * 4);
    for y in (0..h).rev() {
        for x in 0..w {
            out.extend_from_slice(&(depth.get(x, y) as f32).to_le_bytes());
        }
    }
    fs::write(path, out).map_err(|e| Error::io(path, e))
}
