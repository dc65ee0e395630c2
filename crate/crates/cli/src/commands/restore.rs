use std::fs;
use std::path::PathBuf;

use aquarestore::io::{read_rgb, read_transmission16, write_rgb8};
use aquarestore::metrics::{evaluate_pair, evaluate_single, Metric};
use aquarestore::model::restore_with;
use aquarestore::synthesis::{SampleMeta, TRANSMISSION_FILE};
use aquarestore::{ChannelTriple, Error, RestorationParams, RestoreOptions, TransmissionMap};
use log::{info, warn};

use super::{create_dir, parse_triple};
use crate::error::{CliError, CliResult};
use crate::RestoreArgs;

pub const RESTORED_FILE: &str = "restored.png";

enum TransSource {
    File(PathBuf),
    Const(ChannelTriple),
}

pub fn run(args: &RestoreArgs) -> CliResult<()> {
    if !(args.t_min > 0.0 && args.t_min <= 1.0) {
        return Err(CliError::usage("--t-min must lie in (0, 1]"));
    }
    let meta = args.meta.as_deref().map(SampleMeta::read).transpose()?;

    let attenuation = match (&args.attenuation, &meta) {
        (Some(s), _) => parse_triple("attenuation", s)?,
        (None, Some(m)) => m.attenuation,
        (None, None) => return Err(CliError::usage("--attenuation is required without --meta")),
    };
    let background = match (&args.background, &meta) {
        (Some(s), _) => parse_triple("background", s)?,
        (None, Some(m)) => m.background,
        (None, None) => return Err(CliError::usage("--background is required without --meta")),
    };
    let trans = match (&args.trans, &args.trans_const, &args.meta) {
        (Some(p), _, _) => TransSource::File(p.clone()),
        (None, Some(s), _) => TransSource::Const(parse_triple("trans-const", s)?),
        (None, None, Some(m)) => TransSource::File(m.with_file_name(TRANSMISSION_FILE)),
        (None, None, None) => {
            return Err(CliError::usage(
                "a transmission is required: pass --trans, --trans-const or --meta",
            ))
        }
    };

    let degraded = read_rgb(&args.degraded)?;
    let (w, h) = degraded.dims();
    let transmission = match trans {
        TransSource::File(p) => read_transmission16(&p)?,
        TransSource::Const(t) => TransmissionMap::uniform(w, h, t.to_array())
            .map_err(|e| CliError::usage(format!("--trans-const: {e}")))?,
    };
    let params =
        RestorationParams::new(attenuation, background, transmission).map_err(|e| match e {
            Error::Domain(m) => CliError::usage(m),
            other => other.into(),
        })?;
    let opts = RestoreOptions {
        t_min: args.t_min,
        clamp: !args.no_clamp,
    };
    let restored = restore_with(&degraded, &params, &opts)?;
    if restored.floored > 0 {
        warn!(
            "transmission floored at {} for {} pixel channel values",
            opts.t_min, restored.floored
        );
    }

    create_dir(&args.out)?;
    let out = args.out.join(RESTORED_FILE);
    write_rgb8(&out, &restored.image.clamped())?;
    info!("wrote {}", out.display());

    if let Some(report_path) = &args.report {
        let report = match &args.reference {
            Some(r) => evaluate_pair(&read_rgb(r)?, &restored.image, &Metric::ALL)?,
            None => evaluate_single(&restored.image, &Metric::ALL)?,
        };
        let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
        text.push('\n');
        fs::write(report_path, text).map_err(|e| {
            CliError::Core(Error::Io {
                path: report_path.clone(),
                source: e,
            })
        })?;
        info!("wrote {}", report_path.display());
    }
    Ok(())
}
