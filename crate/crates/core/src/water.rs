//! Jerlov water types and their inherent optical properties.
//!
//! Absorption `alpha` and scattering `beta` are given in m^-1 at 650 nm (red),
//! 525 nm (green) and 450 nm (blue). Values are kept exactly as published,
//! including the Type-5C red absorption of 1.78 and the non-monotonic
//! Type-IB scattering row.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::image::ChannelTriple;

/// Wavelength in nm associated with each channel, in R, G, B order.
pub const CHANNEL_WAVELENGTHS_NM: [u32; 3] = [650, 525, 450];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum WaterType {
    I,
    IA,
    IB,
    II,
    III,
    C1,
    C3,
    C5,
    C7,
    C9,
}

/// Absorption and scattering coefficients of one water type.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Iop {
    pub alpha: ChannelTriple,
    pub beta: ChannelTriple,
}

impl WaterType {
    pub const ALL: [WaterType; 10] = [
        WaterType::I,
        WaterType::IA,
        WaterType::IB,
        WaterType::II,
        WaterType::III,
        WaterType::C1,
        WaterType::C3,
        WaterType::C5,
        WaterType::C7,
        WaterType::C9,
    ];

    /// Types used to build the default training distribution.
    pub const DEFAULT_SYNTHESIS: [WaterType; 4] =
        [WaterType::II, WaterType::III, WaterType::C1, WaterType::C3];

    pub fn tag(self) -> &'static str {
        match self {
            WaterType::I => "I",
            WaterType::IA => "IA",
            WaterType::IB => "IB",
            WaterType::II => "II",
            WaterType::III => "III",
            WaterType::C1 => "1C",
            WaterType::C3 => "3C",
            WaterType::C5 => "5C",
            WaterType::C7 => "7C",
            WaterType::C9 => "9C",
        }
    }

    /// Table lookup; total over the enumeration.
    pub fn iop(self) -> Iop {
        // (alpha r, g, b), (beta r, g, b)
        let (a, b) = match self {
            WaterType::I => ([0.334, 0.046, 0.018], [0.0009, 0.0021, 0.0038]),
            WaterType::IA => ([0.334, 0.047, 0.022], [0.0023, 0.0040, 0.0063]),
            WaterType::IB => ([0.334, 0.047, 0.024], [0.393, 0.078, 0.062]),
            WaterType::II => ([0.334, 0.047, 0.024], [0.27, 0.387, 0.504]),
            WaterType::III => ([0.336, 0.051, 0.039], [0.74, 1.06, 1.38]),
            WaterType::C1 => ([0.344, 0.068, 0.105], [0.274, 0.395, 0.514]),
            WaterType::C3 => ([0.346, 0.078, 0.154], [0.8, 1.15, 1.5]),
            WaterType::C5 => ([1.78, 0.127, 0.297], [2.87, 1.44, 1.87]),
            WaterType::C7 => ([0.403, 0.233, 0.542], [1.77, 2.54, 3.3]),
            WaterType::C9 => ([0.456, 0.43, 0.943], [2.35, 3.38, 4.39]),
        };
        Iop {
            alpha: a.into(),
            beta: b.into(),
        }
    }

    pub fn alpha(self) -> ChannelTriple {
        self.iop().alpha
    }

    pub fn beta(self) -> ChannelTriple {
        self.iop().beta
    }
}

/// `(alpha, beta)` for a water type.
pub fn iop_lookup(water_type: WaterType) -> (ChannelTriple, ChannelTriple) {
    let iop = water_type.iop();
    (iop.alpha, iop.beta)
}

impl fmt::Display for WaterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for WaterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let s = s
            .strip_prefix("Type-")
            .or_else(|| s.strip_prefix("type-"))
            .unwrap_or(s);
        WaterType::ALL
            .into_iter()
            .find(|w| w.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::Domain(format!(
                    "unknown water type `{s}` (expected one of I, IA, IB, II, III, 1C, 3C, 5C, 7C, 9C)"
                ))
            })
    }
}

impl TryFrom<String> for WaterType {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<WaterType> for String {
    fn from(w: WaterType) -> Self {
        w.tag().to_owned()
    }
}

/// Parses a comma separated list such as `"II,III,1C"`.
pub fn parse_water_types(list: &str) -> Result<Vec<WaterType>, Error> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect()
}
