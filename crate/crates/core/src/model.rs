//! Simplified underwater formation model and its closed-form inverse.
//!
//! The surface-to-object path contributes a per-channel attenuation
//! `C = exp(-alpha * D)` for a scalar water depth `D`; the object-to-camera
//! path contributes a transmission map `T(x) = exp(-beta * d(x))`. Scene
//! reflectance is taken to be one, and absorption along the object-to-camera
//! path is not modelled.

use crate::error::{Error, Result};
use crate::image::{ChannelTriple, DepthMap, ImagePlane, TransmissionMap};

/// Lower bound applied to `T` before dividing by it in [`restore`].
pub const DEFAULT_T_MIN: f64 = 1e-3;

/// The three quantities that parameterise degradation and restoration.
#[derive(Debug, Clone, PartialEq)]
pub struct RestorationParams {
    /// Wavelength attenuation `C`, one factor per channel.
    pub attenuation: ChannelTriple,
    /// Homogeneous background light `B`.
    pub background: ChannelTriple,
    pub transmission: TransmissionMap,
}

impl RestorationParams {
    pub fn new(
        attenuation: ChannelTriple,
        background: ChannelTriple,
        transmission: TransmissionMap,
    ) -> Result<Self> {
        check_attenuation(attenuation)?;
        check_background(background)?;
        Ok(Self {
            attenuation,
            background,
            transmission,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RestoreOptions {
    /// Floor applied to transmission before division.
    pub t_min: f64,
    /// Clamp the result to `[0, 1]`.
    pub clamp: bool,
}

impl Default for RestoreOptions {
    fn default() -> Self {
        Self {
            t_min: DEFAULT_T_MIN,
            clamp: true,
        }
    }
}

/// Output of [`restore_with`].
#[derive(Debug, Clone)]
pub struct Restoration {
    pub image: ImagePlane,
    /// Number of (pixel, channel) transmission values raised to the floor.
    pub floored: usize,
}

fn check_attenuation(c: ChannelTriple) -> Result<()> {
    if c.to_array().iter().any(|v| !(v.is_finite() && *v > 0.0)) {
        return Err(Error::domain(format!(
            "attenuation components must be positive, got {:?}",
            c.to_array()
        )));
    }
    Ok(())
}

fn check_background(b: ChannelTriple) -> Result<()> {
    if b.to_array().iter().any(|v| !(0.0..=1.0).contains(v)) {
        return Err(Error::domain(format!(
            "background light must lie in [0, 1], got {:?}",
            b.to_array()
        )));
    }
    Ok(())
}

fn check_coefficients(name: &str, k: ChannelTriple) -> Result<()> {
    if k.to_array().iter().any(|v| !(v.is_finite() && *v >= 0.0)) {
        return Err(Error::domain(format!(
            "{name} coefficients must be finite and non-negative, got {:?}",
            k.to_array()
        )));
    }
    Ok(())
}

/// `C = exp(-alpha * D)` per channel for water depth `D` in meters.
pub fn wavelength_attenuation(alpha: ChannelTriple, water_depth: f64) -> Result<ChannelTriple> {
    if !(water_depth.is_finite() && water_depth >= 0.0) {
        return Err(Error::domain(format!(
            "water depth must be finite and non-negative, got {water_depth}"
        )));
    }
    check_coefficients("absorption", alpha)?;
    // keep C inside (0, 1] even when exp underflows
    Ok(alpha.map(|a| (-a * water_depth).exp().max(f64::MIN_POSITIVE)))
}

/// `T(x) = exp(-beta * d(x))` per pixel and channel.
pub fn transmission_from_depth(beta: ChannelTriple, depth: &DepthMap) -> Result<TransmissionMap> {
    check_coefficients("scattering", beta)?;
    let beta = beta.to_array();
    let t = depth
        .values()
        .iter()
        .map(|&d| beta.map(|b| (-b * d).exp().max(f64::MIN_POSITIVE)))
        .collect();
    TransmissionMap::new(depth.width(), depth.height(), t)
}

/// Object irradiance `J = E * C` with unit reflectance.
pub fn object_irradiance(e_in: &ImagePlane, attenuation: ChannelTriple) -> Result<ImagePlane> {
    let c = attenuation.to_array();
    e_in.map(|p| [p[0] * c[0], p[1] * c[1], p[2] * c[2]])
}

/// Forward model `I = (E * C) * T + (1 - T) * B`.
///
/// With all inputs in `[0, 1]` the output is a convex combination of `E * C`
/// and `B`, so no clamping is applied.
pub fn degrade(e_in: &ImagePlane, params: &RestorationParams) -> Result<ImagePlane> {
    e_in.ensure_same_dims(params.transmission.dims())?;
    check_attenuation(params.attenuation)?;
    check_background(params.background)?;
    if params.attenuation.to_array().iter().any(|&c| c > 1.0) {
        return Err(Error::domain("attenuation components must not exceed 1"));
    }
    if !e_in.is_unit_range() {
        return Err(Error::domain("input image intensities must lie in [0, 1]"));
    }
    let c = params.attenuation.to_array();
    let b = params.background.to_array();
    let pixels = e_in
        .pixels()
        .iter()
        .zip(params.transmission.values())
        .map(|(e, t)| std::array::from_fn(|k| e[k] * c[k] * t[k] + (1.0 - t[k]) * b[k]))
        .collect();
    ImagePlane::new(e_in.width(), e_in.height(), pixels)
}

/// Closed-form inverse `E = (I - B * (1 - T)) / (C * T)` with default options.
pub fn restore(observed: &ImagePlane, params: &RestorationParams) -> Result<ImagePlane> {
    restore_with(observed, params, &RestoreOptions::default()).map(|r| r.image)
}

/// Closed-form inverse with an explicit transmission floor and clamp switch.
pub fn restore_with(
    observed: &ImagePlane,
    params: &RestorationParams,
    opts: &RestoreOptions,
) -> Result<Restoration> {
    observed.ensure_same_dims(params.transmission.dims())?;
    check_attenuation(params.attenuation)?;
    if !(opts.t_min.is_finite() && opts.t_min >= 0.0 && opts.t_min <= 1.0) {
        return Err(Error::domain(format!(
            "transmission floor must lie in [0, 1], got {}",
            opts.t_min
        )));
    }
    let c = params.attenuation.to_array();
    let b = params.background.to_array();
    let mut floored = 0;
    let pixels = observed
        .pixels()
        .iter()
        .zip(params.transmission.values())
        .map(|(i, t)| {
            std::array::from_fn(|k| {
                let tk = if t[k] < opts.t_min {
                    floored += 1;
                    opts.t_min
                } else {
                    t[k]
                };
                let e = (i[k] - b[k] * (1.0 - tk)) / (c[k] * tk);
                if opts.clamp {
                    e.clamp(0.0, 1.0)
                } else {
                    e
                }
            })
        })
        .collect();
    Ok(Restoration {
        image: ImagePlane::new(observed.width(), observed.height(), pixels)?,
        floored,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::water::WaterType;

    fn uniform_params(c: f64, b: f64, t: f64, w: usize, h: usize) -> RestorationParams {
        RestorationParams::new(
            ChannelTriple::splat(c),
            ChannelTriple::splat(b),
            TransmissionMap::uniform(w, h, [t; 3]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn attenuation_type_one_at_three_meters() {
        let c = wavelength_attenuation(WaterType::I.alpha(), 3.0).unwrap();
        // scalar exp(-alpha * D) per channel
        let expect = [(-1.002f64).exp(), (-0.138f64).exp(), (-0.054f64).exp()];
        assert!((c.r - expect[0]).abs() < 1e-15);
        assert!((c.g - expect[1]).abs() < 1e-15);
        assert!((c.b - expect[2]).abs() < 1e-15);
        assert!((c.r - 0.3671).abs() < 5e-5);
        assert!((c.g - 0.8711).abs() < 5e-5);
        assert!((c.b - 0.9474).abs() < 5e-5);
    }

    #[test]
    fn zero_depth_means_no_attenuation() {
        for w in WaterType::ALL {
            let c = wavelength_attenuation(w.alpha(), 0.0).unwrap();
            assert_eq!(c.to_array(), [1.0; 3]);
        }
    }

    #[test]
    fn type_three_at_ten_meters() {
        let c = wavelength_attenuation(WaterType::III.alpha(), 10.0).unwrap();
        assert!((c.b - (-0.39f64).exp()).abs() < 1e-15);
        assert!((c.b - 0.6771).abs() < 5e-5);
        assert!(c.r < c.g && c.g < c.b);
    }

    #[test]
    fn negative_water_depth_is_rejected() {
        assert!(matches!(
            wavelength_attenuation(WaterType::I.alpha(), -1.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn transmission_type_two_red() {
        let depth = DepthMap::constant(3, 2, 2.0).unwrap();
        let t = transmission_from_depth(WaterType::II.beta(), &depth).unwrap();
        for px in t.values() {
            assert!((px[0] - (-0.54f64).exp()).abs() < 1e-15);
            assert!((px[0] - 0.5827).abs() < 5e-5);
        }
    }

    #[test]
    fn transmission_limits() {
        let zero = DepthMap::constant(2, 2, 0.0).unwrap();
        let t = transmission_from_depth(WaterType::C9.beta(), &zero).unwrap();
        assert!(t.values().iter().all(|p| *p == [1.0; 3]));

        let far = DepthMap::constant(2, 2, 7.5).unwrap();
        let t = transmission_from_depth(ChannelTriple::splat(0.0), &far).unwrap();
        assert!(t.values().iter().all(|p| *p == [1.0; 3]));

        assert!(transmission_from_depth(ChannelTriple::new(-0.1, 0.0, 0.0), &far).is_err());
    }

    #[test]
    fn huge_depth_stays_positive() {
        let depth = DepthMap::constant(1, 1, 1e4).unwrap();
        let t = transmission_from_depth(WaterType::C9.beta(), &depth).unwrap();
        assert!(t.min_value() > 0.0);
    }

    #[test]
    fn object_irradiance_cases() {
        let white = ImagePlane::filled(2, 2, [1.0; 3]).unwrap();
        let j = object_irradiance(&white, ChannelTriple::new(0.5, 0.8, 0.9)).unwrap();
        assert!(j.pixels().iter().all(|p| *p == [0.5, 0.8, 0.9]));

        let img = ImagePlane::from_fn(3, 2, |x, y| [x as f64 / 3.0, y as f64 / 2.0, 0.25]).unwrap();
        assert_eq!(
            object_irradiance(&img, ChannelTriple::splat(1.0)).unwrap(),
            img
        );

        let black = ImagePlane::filled(2, 2, [0.0; 3]).unwrap();
        let j = object_irradiance(&black, ChannelTriple::new(0.5, 0.8, 0.9)).unwrap();
        assert_eq!(j, black);
    }

    #[test]
    fn degrade_worked_example() {
        let e = ImagePlane::filled(2, 2, [1.0; 3]).unwrap();
        let out = degrade(&e, &uniform_params(0.5, 0.8, 0.6, 2, 2)).unwrap();
        for p in out.pixels() {
            for v in p {
                assert!((v - 0.62).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn degrade_limits() {
        let e = ImagePlane::from_fn(4, 3, |x, y| [0.1 * x as f64, 0.2 * y as f64, 0.3]).unwrap();
        let clear = degrade(&e, &uniform_params(0.7, 0.9, 1.0, 4, 3)).unwrap();
        let expect = object_irradiance(&e, ChannelTriple::splat(0.7)).unwrap();
        assert_eq!(clear, expect);

        let min_t = f64::MIN_POSITIVE;
        let veiled = degrade(&e, &uniform_params(0.7, 0.9, min_t, 4, 3)).unwrap();
        for p in veiled.pixels() {
            for v in p {
                assert!((v - 0.9).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn degrade_shape_mismatch() {
        let e = ImagePlane::filled(3, 3, [0.5; 3]).unwrap();
        assert!(matches!(
            degrade(&e, &uniform_params(0.5, 0.5, 0.5, 2, 3)),
            Err(Error::Shape { .. })
        ));
    }

    #[test]
    fn restore_worked_example() {
        let i = ImagePlane::filled(1, 1, [0.62; 3]).unwrap();
        let e = restore(&i, &uniform_params(0.5, 0.8, 0.6, 1, 1)).unwrap();
        for v in e.get(0, 0) {
            assert!((v - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn restore_of_pure_background() {
        // I = B gives numerator B*T, so E = B / C
        let p = uniform_params(0.5, 0.3, 0.4, 1, 1);
        let i = ImagePlane::filled(1, 1, [0.3; 3]).unwrap();
        let e = restore_with(
            &i,
            &p,
            &RestoreOptions {
                clamp: false,
                ..Default::default()
            },
        )
        .unwrap()
        .image;
        for v in e.get(0, 0) {
            assert!((v - 0.6).abs() < 1e-12);
        }
    }

    #[test]
    fn restore_rejects_non_positive_attenuation() {
        let mut p = uniform_params(0.5, 0.3, 0.4, 1, 1);
        p.attenuation = ChannelTriple::new(0.5, 0.0, 0.5);
        let i = ImagePlane::filled(1, 1, [0.3; 3]).unwrap();
        assert!(matches!(restore(&i, &p), Err(Error::Domain(_))));
        assert!(RestorationParams::new(
            ChannelTriple::new(-1.0, 1.0, 1.0),
            ChannelTriple::splat(0.5),
            TransmissionMap::uniform(1, 1, [1.0; 3]).unwrap()
        )
        .is_err());
    }

    #[test]
    fn restore_floors_transmission_and_counts() {
        let p = uniform_params(1.0, 0.5, 1e-5, 2, 1);
        let i = ImagePlane::filled(2, 1, [0.6; 3]).unwrap();
        let r = restore_with(
            &i,
            &p,
            &RestoreOptions {
                clamp: false,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(r.floored, 6);
        let expect = (0.6 - 0.5 * (1.0 - DEFAULT_T_MIN)) / DEFAULT_T_MIN;
        assert!((r.image.get(0, 0)[0] - expect).abs() < 1e-9);
        let clamped = restore(&i, &p).unwrap();
        assert_eq!(clamped.get(1, 0), [1.0; 3]);
    }

    #[test]
    fn identity_parameters_return_input() {
        let img = ImagePlane::from_fn(5, 4, |x, y| [x as f64 / 5.0, y as f64 / 4.0, 0.5]).unwrap();
        let p = RestorationParams::new(
            ChannelTriple::splat(1.0),
            ChannelTriple::splat(0.0),
            TransmissionMap::uniform(5, 4, [1.0; 3]).unwrap(),
        )
        .unwrap();
        assert_eq!(restore(&img, &p).unwrap(), img);
    }
}
