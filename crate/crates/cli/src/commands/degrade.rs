use std::path::Path;

use aquarestore::io::{read_depth, read_rgb};
use aquarestore::synthesis::{
    procedural_depth, resize_depth, resize_image, synthesize_sample, DepthSpec,
};
use aquarestore::{io, WaterType};
use log::info;

use super::{create_dir, parse_size, parse_triple};
use crate::error::{CliError, CliResult};
use crate::DegradeArgs;

fn source_id(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

pub fn run(args: &DegradeArgs) -> CliResult<()> {
    let water_type: WaterType = args
        .water_type
        .parse()
        .map_err(|e| CliError::usage(format!("--water-type: {e}")))?;
    if !(args.water_depth >= 0.0 && args.water_depth.is_finite()) {
        return Err(CliError::usage(
            "--water-depth must be a non-negative number of meters",
        ));
    }
    let background = parse_triple("background", &args.background)?;
    if background
        .to_array()
        .iter()
        .any(|b| !(0.0..=1.0).contains(b))
    {
        return Err(CliError::usage("--background values must lie in [0, 1]"));
    }
    let spec = match (&args.depth, &args.depth_procedural) {
        (None, None) => {
            return Err(CliError::usage(
                "a depth input is required: pass --depth or --depth-procedural",
            ))
        }
        (_, Some(s)) => Some(
            s.parse::<DepthSpec>()
                .map_err(|e| CliError::usage(format!("--depth-procedural: {e}")))?,
        ),
        (Some(_), None) => None,
    };
    let size = args
        .size
        .as_deref()
        .map(|s| parse_size("size", s))
        .transpose()?;

    let mut clean = read_rgb(&args.clean)?;
    if let Some([w, h]) = size {
        clean = resize_image(&clean, w, h);
    }
    // Everything is persisted at 8 bit, so degrade exactly what will be stored.
    let clean = io::quantize8(&clean);
    let (w, h) = clean.dims();
    let depth = match (spec, &args.depth) {
        (Some(spec), _) => procedural_depth(spec, w, h)
            .map_err(|e| CliError::usage(format!("--depth-procedural: {e}")))?,
        (None, Some(path)) => {
            let d = read_depth(path)?;
            if size.is_some() {
                resize_depth(&d, w, h)
            } else {
                d
            }
        }
        (None, None) => unreachable!("checked above"),
    };

    let mut sample = synthesize_sample(&clean, &depth, water_type, args.water_depth, background)?;
    sample.meta.source = source_id(&args.clean);
    create_dir(&args.out)?;
    sample.write_dir(&args.out)?;
    info!(
        "degraded {} ({}x{}) as type {} at {} m into {}",
        args.clean.display(),
        w,
        h,
        water_type,
        args.water_depth,
        args.out.display()
    );
    Ok(())
}
