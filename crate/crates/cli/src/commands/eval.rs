use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use aquarestore::io::read_rgb;
use aquarestore::metrics::{evaluate_pair, evaluate_single, Metric, CSV_COLUMNS};
use aquarestore::synthesis::{Manifest, CLEAN_FILE, MANIFEST_FILE};
use aquarestore::{Error, MetricReport};
use log::error;
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::{EvalArgs, ReportFormat};

enum Job {
    Pair {
        name: String,
        reference: PathBuf,
        test: PathBuf,
    },
    Single {
        name: String,
        image: PathBuf,
    },
}

#[derive(Debug, Serialize)]
struct Row {
    name: String,
    #[serde(flatten)]
    report: MetricReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Core(Error::Io {
        path: path.to_path_buf(),
        source: e,
    })
}

fn png_files(dir: &Path) -> CliResult<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| io_err(dir, e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x.eq_ignore_ascii_case("png")))
        .collect();
    files.sort();
    Ok(files)
}

fn collect_jobs(args: &EvalArgs) -> CliResult<Vec<Job>> {
    let mut jobs = Vec::new();
    for pair in args.pair.chunks(2) {
        jobs.push(Job::Pair {
            name: pair[1].display().to_string(),
            reference: pair[0].clone(),
            test: pair[1].clone(),
        });
    }
    for dirs in args.pairs_dir.chunks(2) {
        for test in png_files(&dirs[1])? {
            let file = test.file_name().expect("listed file").to_owned();
            jobs.push(Job::Pair {
                name: file.to_string_lossy().into_owned(),
                reference: dirs[0].join(&file),
                test,
            });
        }
    }
    if let (Some(dataset), Some(restored)) = (&args.dataset, &args.restored) {
        let manifest = Manifest::read(&dataset.join(MANIFEST_FILE))?;
        for s in manifest.samples {
            jobs.push(Job::Pair {
                name: s.dir.clone(),
                reference: dataset.join(&s.dir).join(CLEAN_FILE),
                test: restored.join(format!("{}.png", s.dir)),
            });
        }
    }
    for image in &args.image {
        jobs.push(Job::Single {
            name: image.display().to_string(),
            image: image.clone(),
        });
    }
    Ok(jobs)
}

fn evaluate(job: &Job, metrics: &[Metric]) -> aquarestore::Result<MetricReport> {
    match job {
        Job::Pair {
            reference, test, ..
        } => evaluate_pair(&read_rgb(reference)?, &read_rgb(test)?, metrics),
        Job::Single { image, .. } => evaluate_single(&read_rgb(image)?, metrics),
    }
}

fn render(rows: &[Row], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
            s.push('\n');
            s
        }
        ReportFormat::Csv => {
            let mut s = CSV_COLUMNS.join(",");
            s.push('\n');
            for r in rows {
                s.push_str(&r.report.csv_row(&r.name));
                s.push('\n');
            }
            s
        }
    }
}

pub fn run(args: &EvalArgs) -> CliResult<()> {
    let metrics: Vec<Metric> = args
        .metrics
        .split(',')
        .map(|m| {
            m.parse::<Metric>()
                .map_err(|e| CliError::usage(format!("--metrics: {e}")))
        })
        .collect::<CliResult<_>>()?;
    let jobs = collect_jobs(args)?;
    if jobs.is_empty() {
        return Err(CliError::usage(
            "nothing to evaluate: pass --pair, --image, --pairs-dir or --dataset",
        ));
    }
    if jobs.iter().all(|j| matches!(j, Job::Single { .. }))
        && metrics.iter().all(|m| m.needs_reference())
    {
        return Err(CliError::usage(
            "--metrics selects only full-reference metrics but no pairs were given",
        ));
    }

    let mut failed = 0;
    let rows: Vec<Row> = jobs
        .iter()
        .map(|job| {
            let name = match job {
                Job::Pair { name, .. } | Job::Single { name, .. } => name.clone(),
            };
            match evaluate(job, &metrics) {
                Ok(report) => Row {
                    name,
                    report,
                    error: None,
                },
                Err(e) => {
                    failed += 1;
                    error!("{name}: {e}");
                    Row {
                        name,
                        report: MetricReport::default(),
                        error: Some(e.to_string()),
                    }
                }
            }
        })
        .collect();

    let text = render(&rows, args.format);
    match &args.out {
        Some(path) => fs::write(path, text).map_err(|e| io_err(path, e))?,
        None => {
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
        }
    }
    if failed > 0 {
        return Err(CliError::Partial(format!(
            "{failed} of {} rows failed",
            rows.len()
        )));
    }
    Ok(())
}
