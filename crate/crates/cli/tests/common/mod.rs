#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use aquarestore::io::{write_depth_png16, write_pfm, write_rgb8};
use aquarestore::{DepthMap, ImagePlane};

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aquarestore"))
        .args(args)
        .env("RUST_LOG", "warn")
        .output()
        .expect("binary runs")
}

pub fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

pub fn p(path: &Path) -> &str {
    path.to_str().expect("utf-8 temp path")
}

/// Smooth colourful test scene; `k` varies the pattern.
pub fn scene(w: usize, h: usize, k: usize) -> ImagePlane {
    ImagePlane::from_fn(w, h, |x, y| {
        let fx = x as f64 / w as f64;
        let fy = y as f64 / h as f64;
        let kf = k as f64;
        [
            0.5 + 0.4 * (6.0 * fx + kf).sin() * (3.0 * fy).cos(),
            0.5 + 0.35 * (5.0 * fy + 0.7 * kf).sin(),
            0.5 + 0.3 * ((4.0 * (fx + fy)) + 1.3 * kf).cos(),
        ]
    })
    .unwrap()
}

/// Writes `NAME.png` plus a depth map; PFM when `pfm` is set, otherwise 16-bit PNG.
pub fn write_source(dir: &Path, name: &str, w: usize, h: usize, k: usize, pfm: bool) -> PathBuf {
    let img = dir.join(format!("{name}.png"));
    write_rgb8(&img, &scene(w, h, k)).unwrap();
    let depth =
        DepthMap::from_fn(w, h, |x, y| 0.5 + 1.5 * (x + y) as f64 / (w + h) as f64).unwrap();
    if pfm {
        write_pfm(&dir.join(format!("{name}.pfm")), &depth).unwrap();
    } else {
        write_depth_png16(&dir.join(format!("{name}.depth.png")), &depth).unwrap();
    }
    img
}

/// All files under `dir` with their bytes, sorted by relative path.
pub fn tree(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut out = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for e in fs::read_dir(&d).unwrap() {
            let path = e.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else {
                let rel = path.strip_prefix(dir).unwrap().display().to_string();
                out.push((rel, fs::read(&path).unwrap()));
            }
        }
    }
    out.sort();
    out
}
