use aquarestore::losses::{field_gradient_loss, gradient_loss, GradientNorm};
use aquarestore::metrics::{
    blur_metric, mse, pcqi, ssim, uiqm, UICM_WEIGHT, UICONM_WEIGHT, UISM_WEIGHT,
};
use aquarestore::model::{degrade, restore_with, transmission_from_depth, wavelength_attenuation};
use aquarestore::synthesis::{procedural_depth, DepthSpec};
use aquarestore::{
    ChannelTriple, Field, ImagePlane, RestorationParams, RestoreOptions, TransmissionMap,
    WaterType, DEFAULT_T_MIN,
};
use proptest::prelude::*;

fn image(w: usize, h: usize, seed: &[f64]) -> ImagePlane {
    ImagePlane::from_fn(w, h, |x, y| {
        let i = (y * w + x) * 3;
        [
            seed[i % seed.len()],
            seed[(i + 1) % seed.len()],
            seed[(i + 2) % seed.len()],
        ]
    })
    .unwrap()
}

fn water_type() -> impl Strategy<Value = WaterType> {
    prop::sample::select(WaterType::ALL.to_vec())
}

fn brute_force(a: &Field, b: &Field) -> f64 {
    let (w, h) = a.dims();
    let mut total = 0.0;
    for y in 0..h {
        for x in 0..w {
            for (dx, dy) in [(1, 0), (0, 1)] {
                let (nx, ny) = (x + dx, y + dy);
                if nx < w && ny < h {
                    let ga = a.get(nx, ny) - a.get(x, y);
                    let gb = b.get(nx, ny) - b.get(x, y);
                    total += (ga - gb) * (ga - gb);
                }
            }
        }
    }
    total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn restore_inverts_degrade_where_t_is_above_floor(
        wt in water_type(),
        d in 0.0f64..10.0,
        near in 0.0f64..3.0,
        span in 0.0f64..5.0,
        b in prop::array::uniform3(0.0f64..=1.0),
        pixels in prop::collection::vec(0.0f64..=1.0, 48),
    ) {
        let (w, h) = (8, 6);
        let clean = image(w, h, &pixels);
        let depth = procedural_depth(DepthSpec::HorizontalRamp(near, near + span), w, h).unwrap();
        let c = wavelength_attenuation(wt.alpha(), d).unwrap();
        let t = transmission_from_depth(wt.beta(), &depth).unwrap();
        let params = RestorationParams::new(c, ChannelTriple::new(b[0], b[1], b[2]), t.clone()).unwrap();
        let observed = degrade(&clean, &params).unwrap();
        let opts = RestoreOptions { t_min: DEFAULT_T_MIN, clamp: false };
        let back = restore_with(&observed, &params, &opts).unwrap().image;
        for (i, (p, q)) in clean.pixels().iter().zip(back.pixels()).enumerate() {
            let tp = t.values()[i];
            for k in 0..3 {
                if tp[k] >= DEFAULT_T_MIN {
                    prop_assert!((p[k] - q[k]).abs() <= 1e-6, "{wt} D={d} px {i} ch {k}: {} vs {}", p[k], q[k]);
                }
            }
        }
    }

    #[test]
    fn degrade_stays_in_unit_range(
        wt in water_type(),
        d in 0.0f64..50.0,
        depth in 0.0f64..20.0,
        b in prop::array::uniform3(0.0f64..=1.0),
        pixels in prop::collection::vec(0.0f64..=1.0, 30),
    ) {
        let clean = image(5, 2, &pixels);
        let t = transmission_from_depth(wt.beta(), &procedural_depth(DepthSpec::Constant(depth), 5, 2).unwrap()).unwrap();
        let c = wavelength_attenuation(wt.alpha(), d).unwrap();
        let params = RestorationParams::new(c, ChannelTriple::new(b[0], b[1], b[2]), t).unwrap();
        prop_assert!(degrade(&clean, &params).unwrap().is_unit_range());
    }

    #[test]
    fn attenuation_decreases_with_depth(wt in water_type(), d1 in 0.0f64..30.0, extra in 0.001f64..30.0) {
        let a = wavelength_attenuation(wt.alpha(), d1).unwrap().to_array();
        let b = wavelength_attenuation(wt.alpha(), d1 + extra).unwrap().to_array();
        for k in 0..3 {
            prop_assert!(b[k] < a[k]);
        }
    }

    #[test]
    fn gradient_loss_symmetric_and_shift_invariant(
        a in prop::collection::vec(0.001f64..=1.0, 64),
        b in prop::collection::vec(0.001f64..=1.0, 64),
        shift in -5.0f64..5.0,
    ) {
        let fa = Field::new(8, 8, a.clone()).unwrap();
        let fb = Field::new(8, 8, b).unwrap();
        let shifted = Field::new(8, 8, a.iter().map(|v| v + shift).collect()).unwrap();
        let ab = field_gradient_loss(&fa, &fb, GradientNorm::Squared).unwrap();
        let ba = field_gradient_loss(&fb, &fa, GradientNorm::Squared).unwrap();
        prop_assert!(ab >= 0.0);
        prop_assert!((ab - ba).abs() <= 1e-12 * ab.max(1.0));
        let sb = field_gradient_loss(&shifted, &fb, GradientNorm::Squared).unwrap();
        prop_assert!((sb - ab).abs() <= 1e-9 * ab.max(1.0));
    }

    #[test]
    fn gradient_loss_matches_brute_force(
        a in prop::collection::vec(prop::array::uniform3(0.001f64..=1.0), 64),
        b in prop::collection::vec(prop::array::uniform3(0.001f64..=1.0), 64),
    ) {
        let ta = TransmissionMap::new(8, 8, a).unwrap();
        let tb = TransmissionMap::new(8, 8, b).unwrap();
        let expected: f64 = (0..3).map(|c| brute_force(&ta.channel(c), &tb.channel(c))).sum();
        let got = gradient_loss(&ta, &tb).unwrap();
        prop_assert!((got - expected).abs() <= 1e-12 * expected.abs().max(f64::MIN_POSITIVE));
    }

    #[test]
    fn metric_identities(
        w in 11usize..40,
        h in 11usize..40,
        pixels in prop::collection::vec(0.0f64..=1.0, 1..300),
    ) {
        let x = image(w, h, &pixels);
        prop_assert_eq!(mse(&x, &x).unwrap(), 0.0);
        prop_assert!((ssim(&x, &x).unwrap() - 1.0).abs() < 1e-12);
        prop_assert!((pcqi(&x, &x).unwrap() - 1.0).abs() < 1e-12);
        let bl = blur_metric(&x).unwrap();
        prop_assert!((0.0..=1.0).contains(&bl));
        let q = uiqm(&x).unwrap();
        let combined = UICM_WEIGHT * q.uicm + UISM_WEIGHT * q.uism + UICONM_WEIGHT * q.uiconm;
        prop_assert!((q.uiqm - combined).abs() <= 1e-12 * combined.abs().max(1.0));
    }
}
