//! `--config file.json` support.
//!
//! Each key of the JSON object becomes the long flag of the same name
//! (underscores become dashes) and is spliced in after the subcommand. Keys
//! whose flag already appears on the command line are dropped, so flags win.
//!
//! Values: `true` is a bare switch, `false`/`null` are skipped, scalars are
//! one token, arrays of scalars are comma-joined, and arrays of arrays repeat
//! the flag once per inner array.

use std::ffi::OsString;
use std::fs;
use std::path::Path;

use serde_json::Value;

use crate::error::{CliError, CliResult};

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        Value::Bool(b) => Some(b.to_string()),
        _ => None,
    }
}

fn config_path(args: &[OsString]) -> Option<(usize, usize, OsString)> {
    for (i, a) in args.iter().enumerate() {
        let s = a.to_string_lossy();
        if s == "--config" {
            return args.get(i + 1).map(|p| (i, 2, p.clone()));
        }
        if let Some(p) = s.strip_prefix("--config=") {
            return Some((i, 1, p.into()));
        }
    }
    None
}

fn flag_present(args: &[OsString], flag: &str) -> bool {
    let eq = format!("{flag}=");
    args.iter().any(|a| {
        let s = a.to_string_lossy();
        s == flag || s.starts_with(&eq)
    })
}

/// Expands `--config` into explicit flags. `subcommands` is used to locate
/// the insertion point.
pub fn expand(args: Vec<OsString>, subcommands: &[&str]) -> CliResult<Vec<OsString>> {
    let Some((pos, width, path)) = config_path(&args) else {
        return Ok(args);
    };
    let path = Path::new(&path);
    let text = fs::read_to_string(path).map_err(|e| {
        CliError::Core(aquarestore::Error::Io {
            path: path.to_path_buf(),
            source: e,
        })
    })?;
    let json: Value = serde_json::from_str(&text).map_err(|e| {
        CliError::Core(aquarestore::Error::Parse {
            path: path.to_path_buf(),
            message: e.to_string(),
        })
    })?;
    let Value::Object(map) = json else {
        return Err(CliError::usage(format!(
            "{} must hold a JSON object",
            path.display()
        )));
    };

    let mut rest: Vec<OsString> = args[..pos]
        .iter()
        .chain(&args[pos + width..])
        .cloned()
        .collect();
    let mut injected: Vec<OsString> = Vec::new();
    for (key, value) in &map {
        if key == "config" {
            continue;
        }
        let flag = format!("--{}", key.replace('_', "-"));
        if flag_present(&rest, &flag) {
            continue;
        }
        match value {
            Value::Bool(true) => injected.push(flag.into()),
            Value::Bool(false) | Value::Null => {}
            Value::Array(items) if items.iter().all(|i| i.is_array()) => {
                for inner in items {
                    injected.push(flag.clone().into());
                    for v in inner.as_array().expect("checked above") {
                        let s = scalar(v).ok_or_else(|| {
                            CliError::usage(format!("config key `{key}` has a nested value"))
                        })?;
                        injected.push(s.into());
                    }
                }
            }
            Value::Array(items) => {
                let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
                let parts = parts.ok_or_else(|| {
                    CliError::usage(format!("config key `{key}` has a nested value"))
                })?;
                injected.push(flag.into());
                injected.push(parts.join(",").into());
            }
            other => {
                injected.push(flag.into());
                injected.push(scalar(other).expect("scalar").into());
            }
        }
    }

    let at = rest
        .iter()
        .position(|a| subcommands.iter().any(|s| a == s))
        .map(|i| i + 1)
        .unwrap_or(rest.len());
    rest.splice(at..at, injected);
    Ok(rest)
}
