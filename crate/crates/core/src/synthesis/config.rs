use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::water::WaterType;

/// How the background light is drawn from `background_range`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BackgroundMode {
    /// Each channel drawn independently.
    #[default]
    PerChannel,
    /// One draw replicated to all three channels.
    Shared,
}

/// Sampling ranges and output geometry for dataset synthesis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthesisConfig {
    pub water_types: Vec<WaterType>,
    /// Water depth `D` in meters, inclusive.
    pub depth_range: [f64; 2],
    pub background_range: [f64; 2],
    #[serde(default)]
    pub background_mode: BackgroundMode,
    /// `[width, height]` of every emitted sample.
    pub output_size: [usize; 2],
    pub seed: u64,
}

impl Default for SynthesisConfig {
    fn default() -> Self {
        Self {
            water_types: WaterType::DEFAULT_SYNTHESIS.to_vec(),
            depth_range: [2.0, 10.0],
            background_range: [0.5, 1.0],
            background_mode: BackgroundMode::PerChannel,
            output_size: [256, 256],
            seed: 0,
        }
    }
}

impl SynthesisConfig {
    pub fn validate(&self) -> Result<()> {
        if self.water_types.is_empty() {
            return Err(Error::domain("at least one water type is required"));
        }
        let [d0, d1] = self.depth_range;
        if !(d0.is_finite() && d1.is_finite() && 0.0 <= d0 && d0 <= d1) {
            return Err(Error::domain(format!(
                "depth range must satisfy 0 <= min <= max, got [{d0}, {d1}]"
            )));
        }
        let [b0, b1] = self.background_range;
        if !(0.0 <= b0 && b0 <= b1 && b1 <= 1.0) {
            return Err(Error::domain(format!(
                "background range must satisfy 0 <= min <= max <= 1, got [{b0}, {b1}]"
            )));
        }
        if self.output_size[0] == 0 || self.output_size[1] == 0 {
            return Err(Error::domain("output size must be positive"));
        }
        Ok(())
    }
}
