//! IOP-based synthesis of degraded samples from RGB-D sources.
//!
//! For each sample a water type is drawn from the configured set, a water
//! depth `D` and background light `B` are drawn uniformly from their ranges,
//! and the clean image is degraded with that type's absorption and
//! scattering coefficients and the source's per-pixel depth.

mod config;
mod dataset;
mod depth;
mod resize;
mod sample;
mod sampling;

pub use self::config::{BackgroundMode, SynthesisConfig};
pub use self::dataset::{
    build_sample, generate_dataset, sample_dir_name, scan_sources, LoadedSource, Manifest,
    ManifestEntry, SourcePair, MANIFEST_FILE,
};
pub use self::depth::{procedural_depth, DepthSpec};
pub use self::resize::{resize_depth, resize_image};
pub use self::sample::{
    synthesize_sample, SampleMeta, SceneSample, CLEAN_FILE, DEGRADED_FILE, META_FILE,
    TRANSMISSION_FILE,
};
pub use self::sampling::{child_seed, rng_from_seed, sample_scene_params, SceneParams};
