//! Procedural depth fields for sources without a measured depth map.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::image::DepthMap;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DepthSpec {
    Constant(f64),
    /// Linear in the column index, `a` at the left edge and `b` at the right.
    HorizontalRamp(f64, f64),
    /// Linear in the row index, `a` at the top edge and `b` at the bottom.
    VerticalRamp(f64, f64),
}

impl DepthSpec {
    fn validate(&self) -> Result<()> {
        let (lo, hi) = match *self {
            DepthSpec::Constant(c) => (c, c),
            DepthSpec::HorizontalRamp(a, b) | DepthSpec::VerticalRamp(a, b) => (a, b),
        };
        if !(lo.is_finite() && hi.is_finite()) || lo < 0.0 || hi < 0.0 {
            return Err(Error::domain(format!(
                "depth parameters must be non-negative: {self}"
            )));
        }
        if lo > hi {
            return Err(Error::domain(format!(
                "ramp start must not exceed its end: {self}"
            )));
        }
        Ok(())
    }
}

fn lerp(a: f64, b: f64, i: usize, n: usize) -> f64 {
    if n <= 1 {
        a
    } else {
        a + (b - a) * i as f64 / (n - 1) as f64
    }
}

pub fn procedural_depth(spec: DepthSpec, width: usize, height: usize) -> Result<DepthMap> {
    spec.validate()?;
    match spec {
        DepthSpec::Constant(c) => DepthMap::constant(width, height, c),
        DepthSpec::HorizontalRamp(a, b) => {
            DepthMap::from_fn(width, height, |x, _| lerp(a, b, x, width))
        }
        DepthSpec::VerticalRamp(a, b) => {
            DepthMap::from_fn(width, height, |_, y| lerp(a, b, y, height))
        }
    }
}

impl fmt::Display for DepthSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DepthSpec::Constant(c) => write!(f, "const:{c}"),
            DepthSpec::HorizontalRamp(a, b) => write!(f, "hramp:{a},{b}"),
            DepthSpec::VerticalRamp(a, b) => write!(f, "vramp:{a},{b}"),
        }
    }
}

/// Parses `const:C`, `hramp:A,B` or `vramp:A,B` (meters).
impl FromStr for DepthSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::domain(format!(
                "bad depth spec `{s}` (expected const:C, hramp:A,B or vramp:A,B)"
            ))
        };
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<f64> = args
            .split(',')
            .map(|v| v.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let spec = match (kind.trim(), nums.as_slice()) {
            ("const", [c]) => DepthSpec::Constant(*c),
            ("hramp", [a, b]) => DepthSpec::HorizontalRamp(*a, *b),
            ("vramp", [a, b]) => DepthSpec::VerticalRamp(*a, *b),
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant() {
        let d = procedural_depth(DepthSpec::Constant(3.0), 4, 4).unwrap();
        assert!(d.values().iter().all(|v| *v == 3.0));
    }

    #[test]
    fn horizontal_ramp() {
        let d = procedural_depth(DepthSpec::HorizontalRamp(0.0, 3.0), 4, 2).unwrap();
        for y in 0..2 {
            let row: Vec<f64> = (0..4).map(|x| d.get(x, y)).collect();
            assert_eq!(row, vec![0.0, 1.0, 2.0, 3.0]);
        }
    }

    #[test]
    fn vertical_ramp() {
        let d = procedural_depth(DepthSpec::VerticalRamp(1.0, 1.0), 3, 5).unwrap();
        assert!(d.values().iter().all(|v| *v == 1.0));
        let d = procedural_depth(DepthSpec::VerticalRamp(0.0, 2.0), 2, 3).unwrap();
        assert_eq!(d.get(1, 1), 1.0);
        assert_eq!(d.get(0, 2), 2.0);
    }

    #[test]
    fn negative_parameters_rejected() {
        assert!(procedural_depth(DepthSpec::Constant(-1.0), 2, 2).is_err());
        assert!(procedural_depth(DepthSpec::HorizontalRamp(-1.0, 2.0), 2, 2).is_err());
        assert!(procedural_depth(DepthSpec::VerticalRamp(3.0, 2.0), 2, 2).is_err());
    }

    #[test]
    fn parse() {
        assert_eq!(
            "const:3".parse::<DepthSpec>().unwrap(),
            DepthSpec::Constant(3.0)
        );
        assert_eq!(
            "hramp:0,3".parse::<DepthSpec>().unwrap(),
            DepthSpec::HorizontalRamp(0.0, 3.0)
        );
        assert_eq!(
            "vramp:1, 1".parse::<DepthSpec>().unwrap(),
            DepthSpec::VerticalRamp(1.0, 1.0)
        );
        assert!("ramp:1,2".parse::<DepthSpec>().is_err());
        assert!("const:-2".parse::<DepthSpec>().is_err());
        assert!("hramp:1".parse::<DepthSpec>().is_err());
        let s = DepthSpec::HorizontalRamp(0.5, 4.0);
        assert_eq!(s.to_string().parse::<DepthSpec>().unwrap(), s);
    }
}
