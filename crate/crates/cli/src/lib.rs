//! Command implementations behind the `frustum` binary.
//!
//! Exit codes: 0 success, 1 validation mismatch, 2 input or configuration
//! error, 3 resource limit (vertex budget or integer overflow).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use thiserror::Error;

use frustum::io::{import_graph, parse_model, write_caps, write_edge_list, write_model, write_vertex_meta};
use frustum::metrics::{metrics_report, MetricsOptions, MetricsReport};
use frustum::oracles::{densification_diagnostic, HypothesisVerdict};
use frustum::params::DEFAULT_VERTEX_BUDGET;
use frustum::spectral::{spectral_report, SpectralReport};
use frustum::validate::{calibration_suite, run_validation, Fault, RunSpec, ValidationReport};
use frustum::{format_rational, generate, generate_logged, FrustumGraph, GenerateError, ModelParams, SequenceSpec};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Resource(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Config(_) | CliError::Io { .. } => 2,
            CliError::Resource(_) => 3,
        }
    }
}

impl From<GenerateError> for CliError {
    fn from(e: GenerateError) -> Self {
        if e.is_resource_limit() {
            CliError::Resource(e.to_string())
        } else {
            CliError::Config(e.to_string())
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "frustum", version, about = "Generate and analyse frustum graphs")]
pub struct Cli {
    /// Worker threads for enumeration, distances and sweeps (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph and export edges, vertex metadata and cap records.
    Generate(GenerateArgs),
    /// Per-snapshot metrics and plot-ready series.
    Analyze(AnalyzeArgs),
    /// Compare closed forms with brute-force measurements.
    Validate(ValidateArgs),
    /// Densification diagnostics over a grid of sequences.
    Sweep(SweepArgs),
}

/// A model file, or the same fields given inline.
#[derive(Debug, Clone, Args, Default)]
pub struct ModelArgs {
    #[arg(long, conflicts_with_all = ["n", "f", "g"])]
    pub model: Option<PathBuf>,
    /// Seed clique order.
    #[arg(long)]
    pub n: Option<u64>,
    /// Sequence f as `const:2`, `affine:1,0` or `table:1,2,2`.
    #[arg(long)]
    pub f: Option<SequenceSpec>,
    #[arg(long)]
    pub g: Option<SequenceSpec>,
    /// Horizon; overrides the model file.
    #[arg(long)]
    pub horizon: Option<u32>,
    /// Vertex budget; overrides the model file.
    #[arg(long)]
    pub budget: Option<u64>,
}

impl ModelArgs {
    pub fn is_empty(&self) -> bool {
        self.model.is_none() && self.n.is_none() && self.f.is_none() && self.g.is_none()
    }

    pub fn resolve(&self) -> Result<ModelParams, CliError> {
        let mut p = match &self.model {
            Some(path) => parse_model(&read(path)?).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?,
            None => {
                let g = self.g.clone().ok_or_else(|| CliError::Config("give --model or at least --g and --horizon".into()))?;
                let horizon = self.horizon.ok_or_else(|| CliError::Config("--horizon is required without --model".into()))?;
                ModelParams::new(
                    self.n.unwrap_or(1),
                    self.f.clone().unwrap_or(SequenceSpec::Constant(1)),
                    g,
                    horizon,
                )
            }
        };
        if let Some(h) = self.horizon {
            p.horizon = h;
        }
        if let Some(b) = self.budget {
            p.vertex_budget = b;
        }
        Ok(p)
    }
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Directory written by `generate`, used instead of a model.
    #[arg(long, conflicts_with_all = ["model", "n", "f", "g", "budget"])]
    pub import: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// All-pairs distances: diameter, Wiener index, average distance.
    #[arg(long)]
    pub distances: bool,
    /// Normalized Laplacian spectrum per snapshot.
    #[arg(long)]
    pub spectral: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FaultArg {
    ConeOrder,
}

#[derive(Debug, Clone, Args)]
pub struct ValidateArgs {
    /// Validate this model instead of the built-in suite.
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Corrupt an oracle on purpose; the run must then fail.
    #[arg(long, hide = true)]
    pub inject_fault: Option<FaultArg>,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Seed orders (repeatable).
    #[arg(long = "n", default_values_t = [1u64])]
    pub n: Vec<u64>,
    /// f sequences (repeatable).
    #[arg(long = "f")]
    pub f: Vec<SequenceSpec>,
    /// g sequences (repeatable).
    #[arg(long = "g")]
    pub g: Vec<SequenceSpec>,
    #[arg(long)]
    pub horizon: u32,
    #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
    pub budget: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn write(dir: &Path, name: &str, contents: &str) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|source| CliError::Io { path, source })
}

/// What a command printed, for `main` to forward.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = cli.workers {
        if k == 0 {
            return Err(CliError::Config("--workers must be at least 1".into()));
        }
        builder = builder.num_threads(k);
    }
    let pool = builder.build().map_err(|e| CliError::Config(e.to_string()))?;
    pool.install(|| match cli.command {
        Command::Generate(a) => cmd_generate(&a),
        Command::Analyze(a) => cmd_analyze(&a),
        Command::Validate(a) => cmd_validate(&a),
        Command::Sweep(a) => cmd_sweep(&a),
    })
}

pub fn cmd_generate(args: &GenerateArgs) -> Result<Output, CliError> {
    let p = args.model.resolve()?;
    let run = generate_logged(&p)?;
    let g = &run.graph;
    if let Some(dir) = &args.out {
        write(dir, "model.txt", &write_model(&p))?;
        write(dir, "edges.txt", &write_edge_list(g))?;
        write(dir, "vertices.txt", &write_vertex_meta(g))?;
        write(dir, "caps.txt", &write_caps(g))?;
    }
    let mut out = Output { stdout: format!("n={} e={}\n", g.order(), g.edge_count()), ..Output::default() };
    for w in run.warnings() {
        let _ = writeln!(out.stderr, "warning: {w}");
    }
    Ok(out)
}

pub fn load_export(dir: &Path) -> Result<FrustumGraph, CliError> {
    let edges = read(&dir.join("edges.txt"))?;
    let vertices = read(&dir.join("vertices.txt"))?;
    let caps = read(&dir.join("caps.txt"))?;
    import_graph(&edges, &vertices, &caps).map_err(|e| CliError::Config(format!("{}: {e}", dir.display())))
}

pub fn cmd_analyze(args: &AnalyzeArgs) -> Result<Output, CliError> {
    let graph = match &args.import {
        Some(dir) => {
            let g = load_export(dir)?;
            match args.model.horizon {
                Some(h) => g.snapshot_at(h).map_err(|e| CliError::Config(e.to_string()))?,
                None => g,
            }
        }
        None => generate(&args.model.resolve()?)?,
    };
    let options = MetricsOptions { distances: args.distances, clustering: true };
    let report = metrics_report(&graph, options).map_err(|e| CliError::Config(e.to_string()))?;
    let mut out = Output::default();
    let spectra: Vec<Option<SpectralReport>> = (0..=graph.horizon())
        .map(|s| {
            if !args.spectral {
                return None;
            }
            let snap = graph.snapshot_at(s).expect("s within horizon");
            match spectral_report(&snap) {
                Ok(r) => Some(r),
                Err(e) => {
                    let _ = writeln!(out.stderr, "t={s}: spectrum skipped: {e}");
                    None
                }
            }
        })
        .collect();
    let metrics = report.to_text();
    let series = series_tsv(&report, &spectra);
    if let Some(dir) = &args.out {
        write(dir, "metrics.txt", &metrics)?;
        write(dir, "series.tsv", &series)?;
        for (s, spectrum) in spectra.iter().enumerate() {
            if let Some(r) = spectrum {
                write(dir, &format!("eigenvalues_t{s}.txt"), &r.eigenvalue_dump())?;
            }
        }
    }
    out.stdout = metrics;
    Ok(out)
}

/// `t density diameter clustering lambda`, decimals for plotting.
pub fn series_tsv(report: &MetricsReport, spectra: &[Option<SpectralReport>]) -> String {
    use num_traits::ToPrimitive;
    let mut out = String::from("t\tdensity\tdiameter\tclustering\tlambda\n");
    for (step, spectrum) in report.steps.iter().zip(spectra) {
        let diameter = match &step.distances {
            Some(Ok(d)) => d.diameter.to_string(),
            Some(Err(_)) => "nan".into(),
            None => "-".into(),
        };
        let clustering = step
            .clustering
            .as_ref()
            .map_or_else(|| "-".into(), |c| format!("{:.9}", c.to_f64().unwrap_or(f64::NAN)));
        let lambda = spectrum.as_ref().map_or_else(|| "-".into(), |r| format!("{:.12}", r.lambda_gap));
        let _ = writeln!(
            out,
            "{}\t{:.9}\t{diameter}\t{clustering}\t{lambda}",
            step.t,
            step.density.to_f64().unwrap_or(f64::NAN)
        );
    }
    out
}

pub fn cmd_validate(args: &ValidateArgs) -> Result<Output, CliError> {
    let suite = if args.model.is_empty() {
        calibration_suite()
    } else {
        vec![RunSpec::new("model", args.model.resolve()?)]
    };
    let fault = match args.inject_fault {
        Some(FaultArg::ConeOrder) => Fault::ConeOrderOffByOne,
        None => Fault::None,
    };
    let report = run_validation(&suite, fault);
    let text = report.to_text();
    if let Some(dir) = &args.out {
        write(dir, "validation.txt", &text)?;
        let json = serde_json::to_string_pretty(&report).map_err(|e| CliError::Config(e.to_string()))?;
        write(dir, "validation.json", &(json + "\n"))?;
    }
    let verdict = summary(&report);
    if report.passed() {
        Ok(Output { stdout: verdict, stderr: String::new() })
    } else {
        let mut listing = verdict;
        for r in report.mandatory_failures() {
            let t = r.t.map_or_else(|| "-".into(), |t| t.to_string());
            let _ = writeln!(listing, "mismatch: {} {} t={t}: expected {} measured {}", r.run, r.quantity, r.expected, r.measured);
        }
        Err(CliError::Mismatch(listing.trim_end().to_string()))
    }
}

fn summary(report: &ValidationReport) -> String {
    let mandatory = report.checks.iter().filter(|r| r.mandatory).count();
    let failed = report.mandatory_failures().count();
    format!(
        "{}\n{} mandatory checks, {failed} failed: {}\n",
        report.wiener_summary(),
        mandatory,
        if failed == 0 { "PASS" } else { "FAIL" }
    )
}

pub const SWEEP_HEADER: &str =
    "cell\tn\tf\tg\thorizon\tstatus\tn_T\te_T\tdensity\tgrowth_factor_min\tgrowth_inequality\tdensification\tsufficient_condition\n";

fn verdict_label(v: HypothesisVerdict) -> &'static str {
    match v {
        HypothesisVerdict::Supported => "supported",
        HypothesisVerdict::NotSupported => "not-supported",
        HypothesisVerdict::Undetermined => "undetermined",
    }
}

/// One sweep row without the trailing newline.
pub fn sweep_cell(index: usize, p: &ModelParams) -> String {
    let prefix = format!("{index}\t{}\t{}\t{}\t{}", p.n, p.f, p.g, p.horizon);
    let graph = match generate(p) {
        Ok(g) => g,
        Err(e) => {
            let status = match &e {
                GenerateError::BudgetExceeded { .. } => "err:budget",
                GenerateError::Overflow { .. } => "err:overflow",
                GenerateError::InvalidParams(_) => "err:invalid",
                _ => "err:config",
            };
            return format!("{prefix}\t{status}\t-\t-\t-\t-\t-\t-\t-");
        }
    };
    let (n_t, e_t) = (graph.order(), graph.edge_count());
    let density = format_rational(&frustum::Rational::new((e_t as i64).into(), (n_t as i64).into()));
    match densification_diagnostic(&graph, p) {
        Ok(d) => format!(
            "{prefix}\tok\t{n_t}\t{e_t}\t{density}\t{}\t{}\t{}\t{}",
            d.tail_growth_factor_min.as_ref().map_or_else(|| "-".into(), format_rational),
            if d.growth_inequality_every_step { "holds" } else { "fails" },
            verdict_label(d.densification_hypothesis),
            verdict_label(d.sufficient_condition),
        ),
        Err(_) => format!("{prefix}\terr:diagnostic\t{n_t}\t{e_t}\t{density}\t-\t-\t-\t-"),
    }
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<Output, CliError> {
    let mut grid = Vec::new();
    for &n in &args.n {
        for f in &args.f {
            for g in &args.g {
                grid.push(ModelParams::new(n, f.clone(), g.clone(), args.horizon).with_budget(args.budget));
            }
        }
    }
    let rows: Vec<String> = grid.par_iter().enumerate().map(|(i, p)| sweep_cell(i, p)).collect();
    let mut table = String::from(SWEEP_HEADER);
    for row in rows {
        table.push_str(&row);
        table.push('\n');
    }
    if let Some(dir) = &args.out {
        write(dir, "sweep.tsv", &table)?;
    }
    Ok(Output { stdout: table, stderr: String::new() })
}
