//! Dataset generation from a directory of RGB-D sources.
//!
//! Sources pair `name.png` with `name.depth.png` (16-bit millimeters) or
//! `name.pfm` (meters). Sample `i` uses source `i mod n_sources` and the
//! child seed `child_seed(config.seed, i)`.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::SynthesisConfig;
use super::resize::{resize_depth, resize_image};
use super::sample::{synthesize_sample, SceneSample};
use super::sampling::{child_seed, rng_from_seed, sample_scene_params};
use crate::error::{Error, Result};
use crate::image::{DepthMap, ImagePlane};
use crate::io;
use crate::water::WaterType;

pub const MANIFEST_FILE: &str = "manifest.json";

/// An image and its depth map on disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourcePair {
    pub id: String,
    pub image: PathBuf,
    pub depth: PathBuf,
}

/// An in-memory source, already resized to the output size.
#[derive(Debug, Clone)]
pub struct LoadedSource {
    pub id: String,
    pub image: ImagePlane,
    pub depth: DepthMap,
}

impl SourcePair {
    /// Loads and resizes to `[width, height]`; the clean image is quantized
    /// to 8 bit so the stored sample reproduces the degradation input.
    pub fn load(&self, size: [usize; 2]) -> Result<LoadedSource> {
        let image = io::read_rgb(&self.image)?;
        let depth = io::read_depth(&self.depth)?;
        if image.dims() != depth.dims() {
            return Err(Error::Shape {
                expected: format!(
                    "{}x{} ({})",
                    image.width(),
                    image.height(),
                    self.image.display()
                ),
                actual: format!(
                    "{}x{} ({})",
                    depth.width(),
                    depth.height(),
                    self.depth.display()
                ),
            });
        }
        Ok(LoadedSource {
            id: self.id.clone(),
            image: io::quantize8(&resize_image(&image, size[0], size[1])),
            depth: resize_depth(&depth, size[0], size[1]),
        })
    }
}

/// Lists image/depth pairs in `dir`, sorted by id. Images without a depth
/// companion are skipped with a warning.
pub fn scan_sources(dir: &Path) -> Result<Vec<SourcePair>> {
    let entries = fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    let mut names = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| Error::io(dir, e))?;
        if let Some(name) = entry.file_name().to_str() {
            names.push(name.to_owned());
        }
    }
    names.sort();
    let mut pairs = Vec::new();
    for name in &names {
        let Some(stem) = name.strip_suffix(".png") else {
            continue;
        };
        if stem.ends_with(".depth") {
            continue;
        }
        let png_depth = dir.join(format!("{stem}.depth.png"));
        let pfm_depth = dir.join(format!("{stem}.pfm"));
        let depth = if png_depth.is_file() {
            png_depth
        } else if pfm_depth.is_file() {
            pfm_depth
        } else {
            log::warn!("skipping {name}: no {stem}.depth.png or {stem}.pfm");
            continue;
        };
        pairs.push(SourcePair {
            id: stem.to_owned(),
            image: dir.join(name),
            depth,
        });
    }
    Ok(pairs)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub index: usize,
    pub dir: String,
    pub source: String,
    pub water_type: WaterType,
    pub water_depth: f64,
    pub seed: u64,
}

/// Index of a generated dataset, stored as `manifest.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub config: SynthesisConfig,
    pub count: usize,
    pub samples: Vec<ManifestEntry>,
}

impl Manifest {
    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| Error::Parse {
            path: path.to_path_buf(),
            message: e.to_string(),
        })
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self).expect("manifest serializes");
        text.push('\n');
        fs::write(path, text).map_err(|e| Error::io(path, e))
    }
}

pub fn sample_dir_name(index: usize) -> String {
    format!("sample_{index:06}")
}

/// Builds sample `index` from already loaded sources.
pub fn build_sample(
    sources: &[LoadedSource],
    index: usize,
    config: &SynthesisConfig,
) -> Result<SceneSample> {
    let src = &sources[index % sources.len()];
    let seed = child_seed(config.seed, index as u64);
    let p = sample_scene_params(&mut rng_from_seed(seed), config);
    let mut sample = synthesize_sample(
        &src.image,
        &src.depth,
        p.water_type,
        p.water_depth,
        p.background,
    )?;
    sample.meta.seed = Some(seed);
    sample.meta.source = src.id.clone();
    Ok(sample)
}

/// Writes `n` samples plus `manifest.json` under `out`.
///
/// The output is a pure function of the source contents, `config` and `n`;
/// `parallel` only changes scheduling.
pub fn generate_dataset(
    sources: &[SourcePair],
    n: usize,
    config: &SynthesisConfig,
    out: &Path,
    parallel: bool,
) -> Result<Manifest> {
    config.validate()?;
    if sources.is_empty() {
        return Err(Error::domain("no image/depth source pairs"));
    }
    if n == 0 {
        return Err(Error::domain("sample count must be at least 1"));
    }
    let used = &sources[..sources.len().min(n)];
    let loaded: Vec<LoadedSource> = if parallel {
        used.par_iter()
            .map(|s| s.load(config.output_size))
            .collect::<Result<_>>()?
    } else {
        used.iter()
            .map(|s| s.load(config.output_size))
            .collect::<Result<_>>()?
    };
    fs::create_dir_all(out).map_err(|e| Error::io(out, e))?;

    let one = |index: usize| -> Result<ManifestEntry> {
        let sample = build_sample(&loaded, index, config)?;
        let dir = sample_dir_name(index);
        sample.write_dir(&out.join(&dir))?;
        Ok(ManifestEntry {
            index,
            dir,
            source: sample.meta.source,
            water_type: sample.meta.water_type,
            water_depth: sample.meta.water_depth,
            seed: sample.meta.seed.expect("generated samples carry a seed"),
        })
    };
    let samples: Vec<ManifestEntry> = if parallel {
        (0..n).into_par_iter().map(one).collect::<Result<_>>()?
    } else {
        (0..n).map(one).collect::<Result<_>>()?
    };

    let manifest = Manifest {
        config: config.clone(),
        count: n,
        samples,
    };
    manifest.write(&out.join(MANIFEST_FILE))?;
    Ok(manifest)
}
