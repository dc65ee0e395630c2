//! Command-line front end: table, degrade, restore, synth and eval.

mod commands;
mod config_file;
mod error;

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{exit, CliError};

#[derive(Debug, Parser)]
#[command(
    name = "aquarestore",
    version,
    about = "Underwater image synthesis, restoration and evaluation"
)]
struct Cli {
    /// JSON file whose keys mirror the long flags; explicit flags take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Jerlov absorption/scattering table.
    Table(TableArgs),
    /// Degrade one clean image with explicit water parameters.
    Degrade(DegradeArgs),
    /// Invert the formation model with known or estimated parameters.
    Restore(RestoreArgs),
    /// Generate a seeded dataset from a directory of RGB-D sources.
    Synth(SynthArgs),
    /// Score images with full- and no-reference metrics.
    Eval(EvalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum, default_value = "text")]
    pub format: TableFormat,
}

#[derive(Debug, Args)]
pub struct DegradeArgs {
    /// Clean RGB image.
    #[arg(long)]
    pub clean: PathBuf,
    /// Depth map: 16-bit PNG in millimeters or PFM in meters.
    #[arg(long, conflicts_with = "depth_procedural")]
    pub depth: Option<PathBuf>,
    /// Procedural depth: const:C, hramp:A,B or vramp:A,B (meters).
    #[arg(long, value_name = "SPEC")]
    pub depth_procedural: Option<String>,
    #[arg(long)]
    pub water_type: String,
    /// Water depth D in meters.
    #[arg(long)]
    pub water_depth: f64,
    /// Background light, one value or r,g,b.
    #[arg(long)]
    pub background: String,
    /// Resize to WIDTHxHEIGHT (or N for a square) before degrading.
    #[arg(long)]
    pub size: Option<String>,
    /// Output sample directory.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct RestoreArgs {
    #[arg(long)]
    pub degraded: PathBuf,
    /// Sample meta.json providing attenuation and background; trans.png is taken from the same directory unless --trans is given.
    #[arg(long)]
    pub meta: Option<PathBuf>,
    /// Attenuation C as one value or r,g,b.
    #[arg(long)]
    pub attenuation: Option<String>,
    /// Background light B as one value or r,g,b.
    #[arg(long)]
    pub background: Option<String>,
    /// 16-bit transmission PNG.
    #[arg(long, conflicts_with = "trans_const")]
    pub trans: Option<PathBuf>,
    /// Uniform transmission, one value or r,g,b.
    #[arg(long)]
    pub trans_const: Option<String>,
    /// Transmission floor applied before division.
    #[arg(long, default_value_t = aquarestore::DEFAULT_T_MIN)]
    pub t_min: f64,
    /// Keep out-of-range values for the report (the PNG is always clamped).
    #[arg(long)]
    pub no_clamp: bool,
    /// Reference image for full-reference metrics in the report.
    #[arg(long)]
    pub reference: Option<PathBuf>,
    /// Write a metric report (JSON) to this path.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Output directory; receives restored.png.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    /// Directory of name.png + name.depth.png / name.pfm pairs.
    #[arg(long)]
    pub source: PathBuf,
    /// Number of samples.
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub out: PathBuf,
    /// Comma separated water types.
    #[arg(long, default_value = "II,III,1C,3C")]
    pub water_types: String,
    /// Water depth range MIN,MAX in meters.
    #[arg(long, default_value = "2,10")]
    pub depth_range: String,
    /// Background light range MIN,MAX.
    #[arg(long, default_value = "0.5,1")]
    pub background_range: String,
    /// Draw one background value for all channels.
    #[arg(long)]
    pub shared_background: bool,
    /// Output size WIDTHxHEIGHT or N.
    #[arg(long, default_value = "256")]
    pub size: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; 1 runs serially, 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Reference and test image; repeatable.
    #[arg(long, num_args = 2, value_names = ["REF", "TEST"], action = clap::ArgAction::Append)]
    pub pair: Vec<PathBuf>,
    /// Single image for no-reference metrics; repeatable.
    #[arg(long, action = clap::ArgAction::Append)]
    pub image: Vec<PathBuf>,
    /// Pair every PNG in TEST_DIR with the same file name in REF_DIR.
    #[arg(long, num_args = 2, value_names = ["REF_DIR", "TEST_DIR"])]
    pub pairs_dir: Vec<PathBuf>,
    /// Pair each sample's clean.png in a dataset with <sample dir>.png in --restored.
    #[arg(long, requires = "restored")]
    pub dataset: Option<PathBuf>,
    #[arg(long)]
    pub restored: Option<PathBuf>,
    /// Comma separated subset of mse,psnr,ssim,pcqi,blur,uiqm.
    #[arg(long, default_value = "mse,psnr,ssim,pcqi,blur,uiqm")]
    pub metrics: String,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: ReportFormat,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

const SUBCOMMANDS: [&str; 5] = ["table", "degrade", "restore", "synth", "eval"];

fn run(args: Vec<OsString>) -> Result<(), CliError> {
    let args = config_file::expand(args, &SUBCOMMANDS)?;
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Ok(()),
                _ => Err(CliError::Usage("invalid arguments".into())),
            };
        }
    };
    match cli.command {
        Command::Table(a) => commands::table::run(&a),
        Command::Degrade(a) => commands::degrade::run(&a),
        Command::Restore(a) => commands::restore::run(&a),
        Command::Synth(a) => commands::synth::run(&a),
        Command::Eval(a) => commands::eval::run(&a),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format_timestamp(None)
        .init();
    match run(std::env::args_os().collect()) {
        Ok(()) => ExitCode::from(exit::OK as u8),
        Err(e) => {
            if !matches!(e, CliError::Usage(ref m) if m == "invalid arguments") {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
