//! Physically based underwater image degradation and restoration.
//!
//! The crate is organised around a simplified formation model in which light
//! first loses energy along the vertical surface-to-object path (wavelength
//! attenuation `C`), then travels a horizontal object-to-camera distance
//! `d(x)` where scattering mixes it with a homogeneous background light `B`:
//!
//! ```text
//! I(x) = (E(x) * C) * T(x) + (1 - T(x)) * B,   C = exp(-alpha * D),  T(x) = exp(-beta * d(x))
//! ```
//!
//! `alpha` and `beta` come from the Jerlov water-type table in [`water`].
//!
//! * [`model`]: attenuation, transmission, forward degradation and closed-form restoration.
//! * [`synthesis`]: seeded RGB-D to degraded-sample dataset generation.
//! * [`metrics`]: MSE, PSNR, SSIM, PCQI, Blur Metric and UIQM.
//! * [`losses`]: pixel L1, gradient-preserving loss, transmission and attenuation/background losses.
//! * [`io`]: PNG (8/16 bit) and PFM readers and writers.

pub mod error;
pub mod image;
pub mod io;
pub mod losses;
pub mod metrics;
pub mod model;
pub mod synthesis;
pub mod water;

pub use crate::error::{Error, Result};
pub use crate::image::{ChannelTriple, DepthMap, Field, ImagePlane, TransmissionMap};
pub use crate::metrics::MetricReport;
pub use crate::model::{RestorationParams, RestoreOptions, DEFAULT_T_MIN};
pub use crate::synthesis::{SceneSample, SynthesisConfig};
pub use crate::water::WaterType;
