//! Seeded parameter sampling.
//!
//! Every sample owns a ChaCha8 stream seeded with a child seed derived from
//! `(master, index)`, so a sample's parameters do not depend on how many
//! other samples were drawn before it or on which thread drew them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::config::{BackgroundMode, SynthesisConfig};
use crate::image::ChannelTriple;
use crate::water::WaterType;

/// Scene-level parameters drawn for one sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SceneParams {
    pub water_type: WaterType,
    /// Water depth `D` in meters.
    pub water_depth: f64,
    pub background: ChannelTriple,
}

/// SplitMix64 finaliser over `master` and `index`.
pub fn child_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn uniform<R: Rng + ?Sized>(rng: &mut R, [lo, hi]: [f64; 2]) -> f64 {
    if lo == hi {
        // keep the stream position independent of the range
        let _: f64 = rng.random();
        lo
    } else {
        lo + (hi - lo) * rng.random::<f64>()
    }
}

/// Draws water type, water depth and background light.
///
/// The stream is consumed in a fixed order: type, depth, then three
/// background draws (the shared mode uses the first and discards two).
pub fn sample_scene_params<R: Rng + ?Sized>(rng: &mut R, config: &SynthesisConfig) -> SceneParams {
    let water_type = config.water_types[rng.random_range(0..config.water_types.len())];
    let water_depth = uniform(rng, config.depth_range);
    let b: [f64; 3] = std::array::from_fn(|_| uniform(rng, config.background_range));
    let background = match config.background_mode {
        BackgroundMode::PerChannel => ChannelTriple::from(b),
        BackgroundMode::Shared => ChannelTriple::splat(b[0]),
    };
    SceneParams {
        water_type,
        water_depth,
        background,
    }
}
