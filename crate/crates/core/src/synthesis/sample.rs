//! One synthesized tuple and its on-disk directory layout.
//!
//! ```text
//! <dir>/clean.png     8-bit RGB
//! <dir>/degraded.png  8-bit RGB
//! <dir>/trans.png     16-bit RGB, T * 65535
//! <dir>/meta.json     water_type, water_depth, attenuation, background, seed, source
//! ```

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::image::{ChannelTriple, DepthMap, ImagePlane, TransmissionMap};
use crate::io;
use crate::model::{self, RestorationParams};
use crate::water::WaterType;

pub const CLEAN_FILE: &str = "clean.png";
pub const DEGRADED_FILE: &str = "degraded.png";
pub const TRANSMISSION_FILE: &str = "trans.png";
pub const META_FILE: &str = "meta.json";

/// Provenance and scene parameters of a sample, stored as `meta.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampleMeta {
    pub water_type: WaterType,
    /// Water depth `D` in meters.
    pub water_depth: f64,
    /// Wavelength attenuation `C`.
    pub attenuation: ChannelTriple,
    /// Background light `B`.
    pub background: ChannelTriple,
    /// Child seed the parameters were drawn with; `None` for hand-specified runs.
    pub seed: Option<u64>,
    pub source: String,
}

impl SampleMeta {
    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| Error::Parse {
            path: path.to_path_buf(),
            message: e.to_string(),
        })
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self).expect("meta serializes");
        text.push('\n');
        fs::write(path, text).map_err(|e| Error::io(path, e))
    }
}

/// The five-part training tuple plus provenance.
#[derive(Debug, Clone)]
pub struct SceneSample {
    pub clean: ImagePlane,
    pub degraded: ImagePlane,
    pub transmission: TransmissionMap,
    pub attenuation: ChannelTriple,
    pub background: ChannelTriple,
    pub meta: SampleMeta,
}

impl SceneSample {
    pub fn params(&self) -> RestorationParams {
        RestorationParams {
            attenuation: self.attenuation,
            background: self.background,
            transmission: self.transmission.clone(),
        }
    }

    /// Writes the sample into `dir`, creating it if needed.
    pub fn write_dir(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        io::write_rgb8(&dir.join(CLEAN_FILE), &self.clean)?;
        io::write_rgb8(&dir.join(DEGRADED_FILE), &self.degraded)?;
        io::write_transmission16(&dir.join(TRANSMISSION_FILE), &self.transmission)?;
        self.meta.write(&dir.join(META_FILE))
    }

    /// Reads a sample directory written by [`SceneSample::write_dir`].
    pub fn read_dir(dir: &Path) -> Result<Self> {
        let meta = SampleMeta::read(&dir.join(META_FILE))?;
        let clean = io::read_rgb(&dir.join(CLEAN_FILE))?;
        let degraded = io::read_rgb(&dir.join(DEGRADED_FILE))?;
        let transmission = io::read_transmission16(&dir.join(TRANSMISSION_FILE))?;
        if clean.dims() != degraded.dims() {
            return Err(Error::shape(clean.dims(), degraded.dims()));
        }
        if clean.dims() != transmission.dims() {
            return Err(Error::shape(clean.dims(), transmission.dims()));
        }
        Ok(Self {
            clean,
            degraded,
            transmission,
            attenuation: meta.attenuation,
            background: meta.background,
            meta,
        })
    }
}

/// Degrades `clean` for the given water type, water depth and background.
///
/// `clean` and `depth` must already share dimensions. The returned
/// `degraded` plane is unquantized; callers that persist the clean image
/// should quantize it first so the stored tuple stays self-consistent.
pub fn synthesize_sample(
    clean: &ImagePlane,
    depth: &DepthMap,
    water_type: WaterType,
    water_depth: f64,
    background: ChannelTriple,
) -> Result<SceneSample> {
    if clean.dims() != depth.dims() {
        return Err(Error::shape(clean.dims(), depth.dims()));
    }
    let (alpha, beta) = crate::water::iop_lookup(water_type);
    let attenuation = model::wavelength_attenuation(alpha, water_depth)?;
    let transmission = model::transmission_from_depth(beta, depth)?;
    let params = RestorationParams::new(attenuation, background, transmission)?;
    let degraded = model::degrade(clean, &params)?;
    Ok(SceneSample {
        clean: clean.clone(),
        degraded,
        transmission: params.transmission,
        attenuation,
        background,
        meta: SampleMeta {
            water_type,
            water_depth,
            attenuation,
            background,
            seed: None,
            source: String::new(),
        },
    })
}
