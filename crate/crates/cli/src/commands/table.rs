use std::io::Write;

use aquarestore::water::CHANNEL_WAVELENGTHS_NM;
use aquarestore::WaterType;

use crate::error::CliResult;
use crate::{TableArgs, TableFormat};

fn header() -> Vec<String> {
    let mut h = vec!["type".to_string()];
    for q in ["alpha", "beta"] {
        h.extend(CHANNEL_WAVELENGTHS_NM.iter().map(|nm| format!("{q}_{nm}")));
    }
    h
}

fn rows() -> Vec<Vec<String>> {
    WaterType::ALL
        .iter()
        .map(|w| {
            let iop = w.iop();
            let mut row = vec![w.tag().to_string()];
            row.extend(iop.alpha.to_array().iter().map(|v| v.to_string()));
            row.extend(iop.beta.to_array().iter().map(|v| v.to_string()));
            row
        })
        .collect()
}

pub fn render(format: TableFormat) -> String {
    let header = header();
    let rows = rows();
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            out.push_str(&header.join(","));
            out.push('\n');
            for r in &rows {
                out.push_str(&r.join(","));
                out.push('\n');
            }
        }
        TableFormat::Text => {
            let widths: Vec<usize> = (0..header.len())
                .map(|c| {
                    rows.iter()
                        .map(|r| r[c].len())
                        .chain([header[c].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            for r in std::iter::once(&header).chain(&rows) {
                let cells: Vec<String> = r
                    .iter()
                    .zip(&widths)
                    .enumerate()
                    .map(|(i, (cell, w))| {
                        if i == 0 {
                            format!("{cell:<w$}")
                        } else {
                            format!("{cell:>w$}")
                        }
                    })
                    .collect();
                out.push_str(&cells.join("  "));
                out.push('\n');
            }
        }
    }
    out
}

pub fn run(args: &TableArgs) -> CliResult<()> {
    let text = render(args.format);
    // A closed pipe is not an error worth reporting for a listing.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    Ok(())
}
