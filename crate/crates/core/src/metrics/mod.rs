//! Full-reference (MSE, PSNR, SSIM, PCQI) and no-reference (Blur Metric,
//! UIQM) image quality measures.
//!
//! MSE is reported on the 0-255 intensity scale. Published tables that list
//! MSE values around one are on that scale divided by 1000; the relation
//! `psnr = 10 log10(255^2 / (1000 mse_table))` recovers their PSNR column.

mod blur;
mod fullref;
mod pcqi;
mod ssim;
pub mod uiqm;
mod window;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use self::blur::{blur_metric, blur_metric_field};
pub use self::fullref::{mse, psnr, psnr_from_mse};
pub use self::pcqi::{pcqi, pcqi_field};
pub use self::ssim::{ssim, ssim_field};
pub use self::uiqm::{uiqm, Uiqm, UICM_WEIGHT, UICONM_WEIGHT, UISM_WEIGHT};

use crate::error::{Error, Result};
use crate::image::{Field, ImagePlane};

pub(crate) fn luma255(img: &ImagePlane) -> Field {
    let l = img.luminance();
    Field::new(
        l.width(),
        l.height(),
        l.values().iter().map(|v| v * 255.0).collect(),
    )
    .expect("same dimensions")
}

pub(crate) fn require_min_dim(dims: (usize, usize), min: usize, what: &str) -> Result<()> {
    if dims.0 < min || dims.1 < min {
        return Err(Error::domain(format!(
            "image {}x{} is smaller than the {min}x{min} {what}",
            dims.0, dims.1
        )));
    }
    Ok(())
}

/// Selectable metric families. `Uiqm` yields the three sub-measures as well.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    Mse,
    Psnr,
    Ssim,
    Pcqi,
    Blur,
    Uiqm,
}

impl Metric {
    pub const ALL: [Metric; 6] = [
        Metric::Mse,
        Metric::Psnr,
        Metric::Ssim,
        Metric::Pcqi,
        Metric::Blur,
        Metric::Uiqm,
    ];

    pub fn needs_reference(self) -> bool {
        matches!(
            self,
            Metric::Mse | Metric::Psnr | Metric::Ssim | Metric::Pcqi
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            Metric::Mse => "mse",
            Metric::Psnr => "psnr",
            Metric::Ssim => "ssim",
            Metric::Pcqi => "pcqi",
            Metric::Blur => "blur",
            Metric::Uiqm => "uiqm",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Metric::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::domain(format!(
                    "unknown metric `{s}` (expected mse, psnr, ssim, pcqi, blur or uiqm)"
                ))
            })
    }
}

/// Column order of the batch CSV report.
pub const CSV_COLUMNS: [&str; 10] = [
    "name", "mse", "psnr", "ssim", "pcqi", "blur", "uicm", "uism", "uiconm", "uiqm",
];

/// Named scores for one image or image pair. Absent metrics were not
/// requested or not applicable.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct MetricReport {
    #[serde(default, skip_serializing_if = "Option::is_none", with = "score")]
    pub mse: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "score")]
    pub psnr: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "score")]
    pub ssim: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "score")]
    pub pcqi: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "score")]
    pub blur: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "score")]
    pub uicm: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "score")]
    pub uism: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "score")]
    pub uiconm: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "score")]
    pub uiqm: Option<f64>,
}

impl MetricReport {
    /// Scores in [`CSV_COLUMNS`] order, without the name column.
    pub fn values(&self) -> [Option<f64>; 9] {
        [
            self.mse,
            self.psnr,
            self.ssim,
            self.pcqi,
            self.blur,
            self.uicm,
            self.uism,
            self.uiconm,
            self.uiqm,
        ]
    }

    pub fn csv_row(&self, name: &str) -> String {
        let mut cells = vec![csv_escape(name)];
        cells.extend(
            self.values()
                .iter()
                .map(|v| v.map(format_score).unwrap_or_default()),
        );
        cells.join(",")
    }

    fn add_no_reference(&mut self, img: &ImagePlane, selection: &[Metric]) -> Result<()> {
        if selection.contains(&Metric::Blur) {
            self.blur = Some(blur_metric(img)?);
        }
        if selection.contains(&Metric::Uiqm) {
            let q = uiqm(img)?;
            self.uicm = Some(q.uicm);
            self.uism = Some(q.uism);
            self.uiconm = Some(q.uiconm);
            self.uiqm = Some(q.uiqm);
        }
        Ok(())
    }
}

/// Scores `test` against `reference`. No-reference metrics are computed on `test`.
pub fn evaluate_pair(
    reference: &ImagePlane,
    test: &ImagePlane,
    selection: &[Metric],
) -> Result<MetricReport> {
    if reference.dims() != test.dims() {
        return Err(Error::shape(reference.dims(), test.dims()));
    }
    let mut r = MetricReport::default();
    if selection.contains(&Metric::Mse) || selection.contains(&Metric::Psnr) {
        let m = mse(reference, test)?;
        if selection.contains(&Metric::Mse) {
            r.mse = Some(m);
        }
        if selection.contains(&Metric::Psnr) {
            r.psnr = Some(psnr_from_mse(m));
        }
    }
    if selection.contains(&Metric::Ssim) {
        r.ssim = Some(ssim(reference, test)?);
    }
    if selection.contains(&Metric::Pcqi) {
        r.pcqi = Some(pcqi(reference, test)?);
    }
    r.add_no_reference(test, selection)?;
    Ok(r)
}

/// No-reference scores only; full-reference selections are ignored.
pub fn evaluate_single(img: &ImagePlane, selection: &[Metric]) -> Result<MetricReport> {
    let mut r = MetricReport::default();
    r.add_no_reference(img, selection)?;
    Ok(r)
}

/// Shortest round-trip decimal; non-finite values as `inf`, `-inf`, `nan`.
pub fn format_score(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v == f64::INFINITY {
        "inf".into()
    } else if v == f64::NEG_INFINITY {
        "-inf".into()
    } else {
        format!("{v}")
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

/// Serde adapter for `Option<f64>` scores that may be infinite.
mod score {
    use serde::de::{self, Deserializer, Visitor};
    use serde::Serializer;
    use std::fmt;

    pub fn serialize<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) if x.is_finite() => s.serialize_f64(*x),
            Some(x) => s.serialize_str(&super::format_score(*x)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<f64>, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Option<f64>;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a number, \"inf\", \"-inf\", \"nan\" or null")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Self::Value, E> {
                Ok(Some(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Self::Value, E> {
                Ok(Some(v as f64))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Self::Value, E> {
                Ok(Some(v as f64))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Self::Value, E> {
                match v {
                    "inf" => Ok(Some(f64::INFINITY)),
                    "-inf" => Ok(Some(f64::NEG_INFINITY)),
                    "nan" => Ok(Some(f64::NAN)),
                    other => Err(E::custom(format!("unexpected score `{other}`"))),
                }
            }
            fn visit_none<E: de::Error>(self) -> Result<Self::Value, E> {
                Ok(None)
            }
            fn visit_unit<E: de::Error>(self) -> Result<Self::Value, E> {
                Ok(None)
            }
            fn visit_some<D: Deserializer<'de>>(self, d: D) -> Result<Self::Value, D::Error> {
                d.deserialize_any(V)
            }
        }
        d.deserialize_option(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ramp(w: usize, h: usize) -> ImagePlane {
        ImagePlane::from_fn(w, h, |x, y| {
            [
                x as f64 / w as f64,
                y as f64 / h as f64,
                ((x + y) % 7) as f64 / 7.0,
            ]
        })
        .unwrap()
    }

    #[test]
    fn self_comparison() {
        let a = ramp(20, 16);
        let r = evaluate_pair(&a, &a, &Metric::ALL).unwrap();
        assert_eq!(r.mse, Some(0.0));
        assert_eq!(r.psnr, Some(f64::INFINITY));
        assert!((r.ssim.unwrap() - 1.0).abs() < 1e-12);
        assert!((r.pcqi.unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn constant_images() {
        let a = ImagePlane::filled(12, 12, [0.3; 3]).unwrap();
        assert!((ssim(&a, &a).unwrap() - 1.0).abs() < 1e-12);
        assert!((pcqi(&a, &a).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(blur_metric(&a).unwrap(), 0.0);
    }

    #[test]
    fn undersized_inputs() {
        let a = ImagePlane::filled(10, 30, [0.3; 3]).unwrap();
        assert!(matches!(ssim(&a, &a), Err(Error::Domain(_))));
        assert!(matches!(pcqi(&a, &a), Err(Error::Domain(_))));
        let b = ImagePlane::filled(8, 30, [0.3; 3]).unwrap();
        assert!(matches!(blur_metric(&b), Err(Error::Domain(_))));
    }

    #[test]
    fn contrast_stretch_raises_pcqi() {
        let low = ImagePlane::from_fn(24, 24, |x, y| {
            let v = 0.5 + 0.1 * (((x * 3 + y * 5) % 11) as f64 / 10.0 - 0.5);
            [v; 3]
        })
        .unwrap();
        let high = low.map(|p| p.map(|v| 0.5 + 3.0 * (v - 0.5))).unwrap();
        assert!(pcqi(&low, &high).unwrap() > 1.0);
        assert!(pcqi(&high, &low).unwrap() < 1.0);
    }

    #[test]
    fn selection_limits_columns() {
        let a = ramp(16, 16);
        let r = evaluate_single(&a, &[Metric::Uiqm]).unwrap();
        assert!(r.mse.is_none() && r.blur.is_none() && r.ssim.is_none());
        assert!(r.uicm.is_some() && r.uism.is_some() && r.uiconm.is_some() && r.uiqm.is_some());
        let row = r.csv_row("a.png");
        assert!(row.starts_with("a.png,,,,,,"));
        assert_eq!(row.split(',').count(), CSV_COLUMNS.len());
    }

    #[test]
    fn report_json_uses_inf_sentinel() {
        let r = MetricReport {
            mse: Some(0.0),
            psnr: Some(f64::INFINITY),
            ssim: Some(1.0),
            ..Default::default()
        };
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"mse":0.0,"psnr":"inf","ssim":1.0}"#);
        let back: MetricReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn metric_names_parse() {
        for m in Metric::ALL {
            assert_eq!(m.name().parse::<Metric>().unwrap(), m);
        }
        assert!("vif".parse::<Metric>().is_err());
    }

    #[test]
    fn csv_escapes_names() {
        let r = MetricReport::default();
        assert!(r.csv_row("a,b").starts_with("\"a,b\","));
    }
}
