//! `fearbrake` command implementations.
//!
//! Each subcommand returns an [`Outcome`] (text for stdout plus an exit
//! code) or a [`Failure`], so the binary stays a thin wrapper and the
//! commands can be driven from tests.

mod svg;
mod table2;

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgAction, Parser, Subcommand};
use occ_fear::{Band, FearModel, Table1};
use rayon::prelude::*;
use serde::Serialize;
use sim::{run_scenario, RunOutput, RunSummary, ScenarioConfig, TickLog, TICKLOG_HEADER};

pub use svg::fear_gap_chart;
pub use table2::{render as render_report, validate_table2, RowReport, ValidationReport, DEFAULT_TOLERANCE, TABLE2_ROWS};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_COLLISION: u8 = 3;
pub const EXIT_VALIDATION: u8 = 4;

/// Environment variable naming a directory of rulebase files.
pub const RULEBASE_ENV: &str = "FEARBRAKE_RULEBASE_DIR";

#[derive(Debug, Parser)]
#[command(name = "fearbrake", version, about = "Fuzzy fear controller for autonomous car following")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one inference system: undesirability, likelihood or ig.
    Eval {
        fis: String,
        #[arg(allow_negative_numbers = true)]
        inputs: Vec<f64>,
    },
    /// Check the undesirability rules against the validation table.
    ValidateTable2 {
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        amended: bool,
    },
    /// Run a scenario and write per-run CSV traces, SVG charts and a summary.
    Run {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1)]
        reps: u64,
        /// Overrides the config seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run a scenario once per value of one numeric config field.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Dotted path such as `separation` or `bullet.decel`.
        #[arg(long)]
        param: String,
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        values: Vec<f64>,
        #[arg(long, default_value_t = 1)]
        reps: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

/// Where the rulebases come from.
#[derive(Debug, Clone, Default)]
pub struct Context {
    pub rulebase_dir: Option<PathBuf>,
}

impl Context {
    pub fn from_env() -> Self {
        Self {
            rulebase_dir: std::env::var_os(RULEBASE_ENV).map(PathBuf::from),
        }
    }

    pub fn model(&self, table: Table1) -> Result<FearModel, Failure> {
        match &self.rulebase_dir {
            Some(dir) => FearModel::from_dir(dir, table).map_err(|e| Failure::usage(e.to_string())),
            None => Ok(FearModel::embedded(table)),
        }
    }
}

pub fn execute(cli: Cli, ctx: &Context) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Eval { fis, inputs } => cmd_eval(ctx, &fis, &inputs),
        Command::ValidateTable2 { tolerance, amended } => cmd_validate_table2(ctx, tolerance, amended),
        Command::Run {
            config,
            out,
            reps,
            seed,
        } => cmd_run(ctx, &config, &out, reps, seed),
        Command::Sweep {
            config,
            out,
            param,
            values,
            reps,
            seed,
        } => cmd_sweep(ctx, &config, &out, &param, &values, reps, seed),
    }
}

pub fn cmd_eval(ctx: &Context, fis: &str, inputs: &[f64]) -> Result<Outcome, Failure> {
    let model = ctx.model(Table1::Amended)?;
    let system = match fis {
        "undesirability" => model.undesirability_fis(),
        "likelihood" => model.likelihood_fis(),
        "ig" => model.ig_fis(),
        other => {
            return Err(Failure::usage(format!(
                "unknown inference system `{other}` (expected undesirability, likelihood or ig)"
            )))
        }
    };
    if inputs.len() != system.inputs().len() {
        return Err(Failure::usage(format!(
            "`{fis}` takes {} inputs, got {}",
            system.inputs().len(),
            inputs.len()
        )));
    }
    let value = system.evaluate(inputs).map_err(|e| Failure::usage(e.to_string()))?;
    Ok(Outcome {
        stdout: format!("{value:.4} {}\n", model.bands().classify(value)),
        code: EXIT_OK,
    })
}

pub fn cmd_validate_table2(ctx: &Context, tolerance: f64, amended: bool) -> Result<Outcome, Failure> {
    if tolerance.is_nan() || tolerance < 0.0 {
        return Err(Failure::usage("tolerance must be non-negative"));
    }
    let (table, other) = if amended {
        (Table1::Amended, Table1::Original)
    } else {
        (Table1::Original, Table1::Amended)
    };
    let model = ctx.model(table)?;
    let reference = ctx.model(other)?;
    let report = validate_table2(&model, &reference, amended, tolerance)
        .map_err(|e| Failure::usage(e.to_string()))?;
    Ok(Outcome {
        stdout: render_report(&report),
        code: if report.pass { EXIT_OK } else { EXIT_VALIDATION },
    })
}

/// Aggregate over the repetitions of one scenario.
#[derive(Debug, Clone, Serialize)]
pub struct BatchSummary {
    pub scenario: String,
    pub runs: u64,
    pub collisions: u64,
    pub min_gap: f64,
    pub peak_intensity: f64,
    pub max_band: Option<Band>,
    pub band_histogram: [u64; 5],
    pub learner_activations: u64,
    /// Least negative per-run gap/intensity rank correlation.
    pub worst_gap_fear_spearman: Option<f64>,
    pub wall_time_ms: f64,
    pub per_run: Vec<RunSummary>,
}

impl BatchSummary {
    pub fn from_runs(scenario: &str, runs: &[RunSummary], wall_time_ms: f64) -> Self {
        let mut hist = [0; 5];
        for r in runs {
            for (h, n) in hist.iter_mut().zip(r.band_histogram) {
                *h += n;
            }
        }
        Self {
            scenario: scenario.to_string(),
            runs: runs.len() as u64,
            collisions: runs.iter().filter(|r| r.collision).count() as u64,
            min_gap: runs.iter().map(|r| r.min_gap).fold(f64::INFINITY, f64::min),
            peak_intensity: runs.iter().map(|r| r.peak_intensity).fold(0.0, f64::max),
            max_band: runs.iter().filter_map(|r| r.max_band).max(),
            band_histogram: hist,
            learner_activations: runs.iter().map(|r| u64::from(r.learner_activations)).sum(),
            worst_gap_fear_spearman: runs
                .iter()
                .filter_map(|r| r.gap_fear_spearman)
                .reduce(f64::max),
            wall_time_ms,
            per_run: runs.to_vec(),
        }
    }
}

/// RFC 4180 CSV of a trace, header first.
pub fn trace_csv(logs: &[TickLog]) -> Result<Vec<u8>, Failure> {
    let io = |e: csv::Error| Failure::usage(format!("writing csv: {e}"));
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(TICKLOG_HEADER).map_err(io)?;
    for l in logs {
        w.serialize(l).map_err(io)?;
    }
    w.into_inner().map_err(|e| Failure::usage(format!("writing csv: {e}")))
}

fn write(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

pub fn load_config(path: &Path) -> Result<ScenarioConfig, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    config_from_text(&text)
}

fn config_from_text(text: &str) -> Result<ScenarioConfig, Failure> {
    let cfg = ScenarioConfig::from_json(text).map_err(|e| Failure::usage(e.to_string()))?;
    cfg.validate().map_err(|e| Failure::usage(e.to_string()))?;
    Ok(cfg)
}

/// Runs `reps` repetitions in parallel, writing `<id>_runNNN.csv` and
/// `.svg` per run.
fn run_batch(model: &FearModel, cfg: &ScenarioConfig, out: &Path, reps: u64) -> Result<BatchSummary, Failure> {
    fs::create_dir_all(out).map_err(|e| Failure::usage(format!("{}: {e}", out.display())))?;
    let start = Instant::now();
    let runs: Vec<RunSummary> = (0..reps)
        .into_par_iter()
        .map(|run| {
            let RunOutput { logs, summary } =
                run_scenario(model, cfg, run).map_err(|e| Failure::usage(e.to_string()))?;
            let stem = format!("{}_run{run:03}", cfg.id);
            write(&out.join(format!("{stem}.csv")), &trace_csv(&logs)?)?;
            let title = format!("{} run {run} (seed {})", cfg.id, summary.seed);
            write(&out.join(format!("{stem}.svg")), fear_gap_chart(&title, &logs).as_bytes())?;
            Ok(summary)
        })
        .collect::<Result<_, Failure>>()?;
    Ok(BatchSummary::from_runs(
        &cfg.id,
        &runs,
        start.elapsed().as_secs_f64() * 1000.0,
    ))
}

fn summary_line(s: &BatchSummary) -> String {
    format!(
        "{}: {} runs, {} collisions, min gap {:.4}, peak fear {:.4}, max band {}, learner activations {}\n",
        s.scenario,
        s.runs,
        s.collisions,
        s.min_gap,
        s.peak_intensity,
        s.max_band.map_or("-".to_string(), |b| b.to_string()),
        s.learner_activations
    )
}

pub fn cmd_run(ctx: &Context, config: &Path, out: &Path, reps: u64, seed: Option<u64>) -> Result<Outcome, Failure> {
    let mut cfg = load_config(config)?;
    if let Some(s) = seed {
        cfg.seed = s;
    }
    let model = ctx.model(Table1::Amended)?;
    let summary = run_batch(&model, &cfg, out, reps)?;
    let json = serde_json::to_vec_pretty(&summary).map_err(|e| Failure::usage(e.to_string()))?;
    write(&out.join("summary.json"), &json)?;
    Ok(Outcome {
        stdout: summary_line(&summary),
        code: if summary.collisions == 0 { EXIT_OK } else { EXIT_COLLISION },
    })
}

/// Replaces the numeric field at dotted `path` in a JSON config.
pub fn set_numeric(config: &mut serde_json::Value, path: &str, value: f64) -> Result<(), Failure> {
    let mut node = config;
    for key in path.split('.') {
        node = node
            .get_mut(key)
            .ok_or_else(|| Failure::usage(format!("config has no field `{path}`")))?;
    }
    if !node.is_number() {
        return Err(Failure::usage(format!("`{path}` is not a numeric field")));
    }
    *node = if node.is_u64() && value >= 0.0 && value.fract() == 0.0 {
        serde_json::Value::from(value as u64)
    } else {
        serde_json::Value::from(value)
    };
    Ok(())
}

#[derive(Debug, Serialize)]
struct SweepRow<'a> {
    param: &'a str,
    value: f64,
    runs: u64,
    collisions: u64,
    min_gap: f64,
    peak_intensity: f64,
    max_band: String,
    learner_activations: u64,
}

pub fn cmd_sweep(
    ctx: &Context,
    config: &Path,
    out: &Path,
    param: &str,
    values: &[f64],
    reps: u64,
    seed: Option<u64>,
) -> Result<Outcome, Failure> {
    let text = fs::read_to_string(config).map_err(|e| Failure::usage(format!("{}: {e}", config.display())))?;
    let base: serde_json::Value = serde_json::from_str(&text).map_err(|e| Failure::usage(e.to_string()))?;
    let model = ctx.model(Table1::Amended)?;
    let mut configs = Vec::with_capacity(values.len());
    for &v in values {
        let mut doc = base.clone();
        set_numeric(&mut doc, param, v)?;
        let mut cfg = config_from_text(&doc.to_string())?;
        if let Some(s) = seed {
            cfg.seed = s;
        }
        cfg.id = format!("{}_{}={v}", cfg.id, param);
        configs.push((v, cfg));
    }
    let summaries = configs
        .iter()
        .map(|(_, cfg)| run_batch(&model, cfg, &out.join(&cfg.id), reps))
        .collect::<Result<Vec<_>, _>>()?;

    let mut w = csv::Writer::from_writer(Vec::new());
    let mut table = format!(
        "{:>12}  {:>4}  {:>10}  {:>8}  {:>10}  {:>8}  {:>11}\n",
        param, "runs", "collisions", "min_gap", "peak_fear", "max_band", "activations"
    );
    for ((v, _), s) in configs.iter().zip(&summaries) {
        let row = SweepRow {
            param,
            value: *v,
            runs: s.runs,
            collisions: s.collisions,
            min_gap: s.min_gap,
            peak_intensity: s.peak_intensity,
            max_band: s.max_band.map_or(String::new(), |b| b.to_string()),
            learner_activations: s.learner_activations,
        };
        table += &format!(
            "{:>12}  {:>4}  {:>10}  {:>8.4}  {:>10.4}  {:>8}  {:>11}\n",
            v, row.runs, row.collisions, row.min_gap, row.peak_intensity, row.max_band, row.learner_activations
        );
        w.serialize(&row).map_err(|e| Failure::usage(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::usage(e.to_string()))?;
    write(&out.join("sweep.csv"), &bytes)?;
    let json = serde_json::to_vec_pretty(&summaries).map_err(|e| Failure::usage(e.to_string()))?;
    write(&out.join("sweep_summary.json"), &json)?;
    let collided = summaries.iter().any(|s| s.collisions > 0);
    Ok(Outcome {
        stdout: table,
        code: if collided { EXIT_COLLISION } else { EXIT_OK },
    })
}
