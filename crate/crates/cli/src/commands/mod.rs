pub mod degrade;
pub mod eval;
pub mod restore;
pub mod synth;
pub mod table;

use std::fs;
use std::path::Path;

use aquarestore::ChannelTriple;

use crate::error::{CliError, CliResult};

fn parse_number(flag: &str, s: &str) -> CliResult<f64> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("--{flag}: `{s}` is not a number")))?;
    if !v.is_finite() {
        return Err(CliError::usage(format!("--{flag}: value must be finite")));
    }
    Ok(v)
}

/// One value broadcast to all channels, or `r,g,b`.
pub fn parse_triple(flag: &str, s: &str) -> CliResult<ChannelTriple> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| parse_number(flag, p))
        .collect::<CliResult<_>>()?;
    match parts[..] {
        [v] => Ok(ChannelTriple::splat(v)),
        [r, g, b] => Ok(ChannelTriple::new(r, g, b)),
        _ => Err(CliError::usage(format!(
            "--{flag}: expected one value or r,g,b, got `{s}`"
        ))),
    }
}

/// `MIN,MAX` with `MIN <= MAX`.
pub fn parse_range(flag: &str, s: &str) -> CliResult<[f64; 2]> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| parse_number(flag, p))
        .collect::<CliResult<_>>()?;
    match parts[..] {
        [lo, hi] if lo <= hi => Ok([lo, hi]),
        [lo] => Ok([lo, lo]),
        _ => Err(CliError::usage(format!(
            "--{flag}: expected MIN,MAX with MIN <= MAX, got `{s}`"
        ))),
    }
}

/// `WIDTHxHEIGHT` or a single edge length.
pub fn parse_size(flag: &str, s: &str) -> CliResult<[usize; 2]> {
    let bad = || CliError::usage(format!("--{flag}: expected WIDTHxHEIGHT or N, got `{s}`"));
    let dims: Vec<usize> = s
        .split(['x', 'X'])
        .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
        .collect::<CliResult<_>>()?;
    let size = match dims[..] {
        [n] => [n, n],
        [w, h] => [w, h],
        _ => return Err(bad()),
    };
    if size.contains(&0) {
        return Err(bad());
    }
    Ok(size)
}

pub fn create_dir(dir: &Path) -> CliResult<()> {
    fs::create_dir_all(dir).map_err(|e| {
        CliError::Core(aquarestore::Error::Io {
            path: dir.to_path_buf(),
            source: e,
        })
    })
}
