//! Fixtures shared by the criterion benches.

use aquarestore::synthesis::{procedural_depth, synthesize_sample, DepthSpec};
use aquarestore::{ChannelTriple, ImagePlane, SceneSample, WaterType};

/// A deterministic textured image with values in `[0, 1]`.
pub fn scene(w: usize, h: usize) -> ImagePlane {
    ImagePlane::from_fn(w, h, |x, y| {
        let (fx, fy) = (x as f64 / w as f64, y as f64 / h as f64);
        [
            0.5 + 0.4 * (9.0 * fx).sin() * (5.0 * fy).cos(),
            0.5 + 0.3 * (7.0 * fy + 2.0 * fx).sin(),
            0.5 + 0.25 * (11.0 * (fx - fy)).cos(),
        ]
    })
    .expect("finite values")
}

/// A Type-II sample over a horizontal depth ramp.
pub fn sample(w: usize, h: usize) -> SceneSample {
    let depth = procedural_depth(DepthSpec::HorizontalRamp(0.5, 4.0), w, h).expect("valid ramp");
    synthesize_sample(
        &scene(w, h),
        &depth,
        WaterType::II,
        6.0,
        ChannelTriple::new(0.6, 0.8, 0.9),
    )
    .expect("consistent dimensions")
}
