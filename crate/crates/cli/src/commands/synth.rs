use aquarestore::synthesis::{generate_dataset, scan_sources, BackgroundMode};
use aquarestore::water::parse_water_types;
use aquarestore::SynthesisConfig;
use log::info;

use super::{parse_range, parse_size};
use crate::error::{CliError, CliResult};
use crate::SynthArgs;

pub fn config_from_args(args: &SynthArgs) -> CliResult<SynthesisConfig> {
    let config = SynthesisConfig {
        water_types: parse_water_types(&args.water_types)
            .map_err(|e| CliError::usage(format!("--water-types: {e}")))?,
        depth_range: parse_range("depth-range", &args.depth_range)?,
        background_range: parse_range("background-range", &args.background_range)?,
        background_mode: if args.shared_background {
            BackgroundMode::Shared
        } else {
            BackgroundMode::PerChannel
        },
        output_size: parse_size("size", &args.size)?,
        seed: args.seed,
    };
    config
        .validate()
        .map_err(|e| CliError::usage(e.to_string()))?;
    Ok(config)
}

pub fn run(args: &SynthArgs) -> CliResult<()> {
    let config = config_from_args(args)?;
    if args.n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    let sources = scan_sources(&args.source)?;
    if sources.is_empty() {
        return Err(CliError::usage(format!(
            "--source {} holds no NAME.png with NAME.depth.png or NAME.pfm",
            args.source.display()
        )));
    }
    let parallel = args.threads != 1;
    let manifest = if parallel {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(args.threads)
            .build()
            .map_err(|e| CliError::usage(format!("--threads: {e}")))?;
        pool.install(|| generate_dataset(&sources, args.n, &config, &args.out, true))?
    } else {
        generate_dataset(&sources, args.n, &config, &args.out, false)?
    };
    info!(
        "wrote {} samples from {} sources to {}",
        manifest.count,
        sources.len(),
        args.out.display()
    );
    Ok(())
}
