use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use log::{info, warn};

use cornell_core::model::DimensionlessCase;
use cornell_core::numerov::{self, Grid, LevelSelection};
use cornell_core::phase_integral::{quantize_with, QuantizeOptions};
use cornell_core::report::{
    self, compare_sweep_detailed, plot_series, rate_m, rate_n, RunConfig, B_DEFINITION, CSV_DIGITS,
};

#[derive(Parser)]
#[command(
    name = "cornell",
    version,
    about = "Levels of V(r) = a r - b/r by the Numerov and phase-integral methods"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Numerov eigenvalues for each (B, l).
    Numerov {
        #[command(flatten)]
        common: Common,
        /// Number of lowest levels to print.
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Report the eigenvalue closest to zero instead of the lowest `count`.
        #[arg(long, value_enum, default_value_t = Select::Lowest)]
        select: Select,
    },
    /// Phase-integral quantization for each (B, l, s, j).
    Phase {
        #[command(flatten)]
        common: Common,
        /// Also write full diagnostics as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Both methods side by side with |ΔA|.
    Compare {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write (B, l, j, s, |ΔA|) plot series here.
        #[arg(long)]
        plot: Option<PathBuf>,
    },
    /// Convergence orders N_k (and M_k with --reference).
    Rates {
        #[command(flatten)]
        common: Common,
        /// Explicit eigenvalue sequence; skips the Numerov runs.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        values: Option<Vec<f64>>,
        /// Mesh values N for the Numerov runs.
        #[arg(long, value_delimiter = ',', default_value = "8,16,32,64,128,256,512")]
        grids: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Select::Lowest)]
        select: Select,
        /// Reference value for M_k.
        #[arg(long, allow_hyphen_values = true)]
        reference: Option<f64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Select {
    Lowest,
    Smallest,
}

#[derive(Args)]
struct Common {
    /// TOML run configuration.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Mesh parameter N.
    #[arg(long)]
    grid: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    zmin: Option<f64>,
    #[arg(long)]
    zmax: Option<f64>,
    /// Truncation order j (0: L1, 1: L1 + L3).
    #[arg(long)]
    order: Option<u32>,
    /// Coulomb strengths B.
    #[arg(long = "b", value_delimiter = ',')]
    b: Option<Vec<f64>>,
    #[arg(long = "l", value_delimiter = ',')]
    l: Option<Vec<u32>>,
    #[arg(long = "s", value_delimiter = ',')]
    s: Option<Vec<u32>>,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn load(&self) -> cornell_core::Result<RunConfig> {
        let mut cfg = match &self.config {
            Some(p) => RunConfig::from_path(p)?,
            None => RunConfig::default(),
        };
        if let Some(n) = self.grid {
            cfg.grid.n = n;
        }
        if let Some(z) = self.zmin {
            cfg.grid.z_min = z;
        }
        if let Some(z) = self.zmax {
            cfg.grid.z_max = z;
        }
        if let Some(j) = self.order {
            cfg.orders = vec![j];
        }
        if let Some(b) = &self.b {
            cfg.b = b.clone();
        }
        if let Some(l) = &self.l {
            cfg.l = l.clone();
        }
        if let Some(s) = &self.s {
            cfg.s = s.clone();
        }
        if let Some(out) = &self.out {
            cfg.output.csv = Some(out.clone());
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Per-case failures, reported after the output has been written.
struct Partial(usize);

enum Failure {
    Config(anyhow::Error),
    Run(anyhow::Error),
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format_timestamp(None)
        .init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(Partial(n))) => {
            warn!("{n} case(s) failed");
            ExitCode::from(2)
        }
        Err(Failure::Config(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Run(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn header(cfg: &RunConfig) {
    info!("cornell {}", env!("CARGO_PKG_VERSION"));
    info!("{B_DEFINITION}");
    info!(
        "grid: [{}, {}], N = {} (delta = (z_max - z_min)/N, N - 1 interior unknowns)",
        cfg.grid.z_min, cfg.grid.z_max, cfg.grid.n
    );
}

fn sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(File::create(p).with_context(|| format!("creating {}", p.display()))?),
        None => Box::new(io::stdout().lock()),
    })
}

fn run(cli: Cli) -> Result<Option<Partial>, Failure> {
    let (common, kind) = match &cli.command {
        Command::Numerov { common, .. } => (common, "numerov"),
        Command::Phase { common, .. } => (common, "phase"),
        Command::Compare { common, .. } => (common, "compare"),
        Command::Rates { common, .. } => (common, "rates"),
    };
    let cfg = common.load().map_err(|e| Failure::Config(e.into()))?;
    header(&cfg);
    info!("command: {kind}");
    let result = match &cli.command {
        Command::Numerov { count, select, .. } => run_numerov(&cfg, *count, *select),
        Command::Phase { json, .. } => run_phase(&cfg, json.as_deref()),
        Command::Compare { json, plot, .. } => run_compare(&cfg, json.as_deref(), plot.as_deref()),
        Command::Rates {
            values,
            grids,
            select,
            reference,
            ..
        } => run_rates(&cfg, values.as_deref(), grids, *select, *reference),
    };
    result.map_err(Failure::Run)
}

fn grid(cfg: &RunConfig, n: usize) -> cornell_core::Result<Grid<f64>> {
    Grid::new(cfg.grid.z_min, cfg.grid.z_max, n)
}

fn run_numerov(cfg: &RunConfig, count: usize, select: Select) -> Result<Option<Partial>> {
    let g = grid(cfg, cfg.grid.n)?;
    let mut w = csv::Writer::from_writer(sink(cfg.output.csv.as_deref())?);
    w.write_record(["B", "l", "level", "A"])?;
    let mut failed = 0;
    for &b in &cfg.b {
        for &l in &cfg.l {
            let case = DimensionlessCase::new(b, l, 0, 0)?;
            let levels = match select {
                Select::Lowest => numerov::solve(&case, &g, count).map(|s| {
                    s.eigenvalues
                        .into_iter()
                        .enumerate()
                        .map(|(i, a)| (i.to_string(), a))
                        .collect()
                }),
                Select::Smallest => {
                    numerov::select_level(&case, &g, LevelSelection::SmallestMagnitude)
                        .map(|a| vec![("smallest".to_string(), a)])
                }
            };
            match levels {
                Ok(v) => {
                    for (level, a) in v {
                        w.write_record([fmt(b), l.to_string(), level, fmt(a)])?;
                    }
                }
                Err(e) => {
                    warn!("B = {b}, l = {l}: {e}");
                    failed += 1;
                }
            }
        }
    }
    w.flush()?;
    Ok((failed > 0).then_some(Partial(failed)))
}

fn fmt(x: f64) -> String {
    report::format_significant(x, CSV_DIGITS)
}

fn run_phase(cfg: &RunConfig, json: Option<&Path>) -> Result<Option<Partial>> {
    let opts = QuantizeOptions {
        scan_points: cfg.tolerances.scan_points,
        bisection_width: cfg.tolerances.bisection_width,
        residual_tolerance: cfg.tolerances.residual,
        x2_limit: cfg.tolerances.x2_limit,
        ..QuantizeOptions::default()
    };
    let mut w = csv::Writer::from_writer(sink(cfg.output.csv.as_deref())?);
    w.write_record([
        "B", "l", "s", "j", "A_PhI", "x2", "residual", "C_abs", "u0_re", "u0_im",
    ])?;
    let mut results = Vec::new();
    let mut failed = 0;
    for &b in &cfg.b {
        for &l in &cfg.l {
            for &s in &cfg.s {
                for &j in &cfg.orders {
                    let case = DimensionlessCase::new(b, l, s, j)?;
                    match quantize_with(&case, &opts) {
                        Ok(q) => {
                            w.write_record([
                                fmt(b),
                                l.to_string(),
                                s.to_string(),
                                j.to_string(),
                                fmt(q.a),
                                fmt(q.x2),
                                fmt(q.residual),
                                fmt(q.c_abs),
                                fmt(q.u0.re),
                                fmt(q.u0.im),
                            ])?;
                            results.push(q);
                        }
                        Err(e) => {
                            warn!("B = {b}, l = {l}, s = {s}, j = {j}: {e}");
                            failed += 1;
                        }
                    }
                }
            }
        }
    }
    w.flush()?;
    if let Some(p) = json.or(cfg.output.json.as_deref()) {
        report::write_json(&results, sink(Some(p))?)?;
    }
    Ok((failed > 0).then_some(Partial(failed)))
}

fn run_compare(
    cfg: &RunConfig,
    json: Option<&Path>,
    plot: Option<&Path>,
) -> Result<Option<Partial>> {
    let rep = compare_sweep_detailed::<f64>(cfg)?;
    for c in rep.cases.iter().filter(|c| !c.errors.is_empty()) {
        warn!(
            "B = {}, l = {}, s = {}, j = {}: {}",
            c.row.b,
            c.row.l,
            c.row.s,
            c.row.j,
            c.errors.join("; ")
        );
    }
    let rows = rep.rows();
    report::write_csv(&rows, sink(cfg.output.csv.as_deref())?)?;
    if let Some(p) = json.or(cfg.output.json.as_deref()) {
        report::write_sweep_json(&rep, sink(Some(p))?)?;
    }
    if let Some(p) = plot.or(cfg.output.plot.as_deref()) {
        report::write_plot_csv(&plot_series(&rows), sink(Some(p))?)?;
    }
    let failed = rep.failures();
    Ok((failed > 0).then_some(Partial(failed)))
}

fn run_rates(
    cfg: &RunConfig,
    values: Option<&[f64]>,
    grids: &[usize],
    select: Select,
    reference: Option<f64>,
) -> Result<Option<Partial>> {
    let mut out = sink(cfg.output.csv.as_deref())?;
    let selection = match select {
        Select::Lowest => None,
        Select::Smallest => Some(LevelSelection::SmallestMagnitude),
    };
    let mut sequences: Vec<(String, Vec<f64>)> = Vec::new();
    if let Some(v) = values {
        sequences.push(("values".into(), v.to_vec()));
    } else {
        let gs = grids
            .iter()
            .map(|&n| grid(cfg, n))
            .collect::<cornell_core::Result<Vec<_>>>()?;
        for &b in &cfg.b {
            for &l in &cfg.l {
                for &s in &cfg.s {
                    let case = DimensionlessCase::new(b, l, s, 0)?;
                    let sel = selection.unwrap_or(LevelSelection::Index(s as usize));
                    let table = numerov::convergence_table(&case, &gs, sel)?;
                    sequences.push((
                        format!("B={b} l={l} s={s}"),
                        table.into_iter().map(|(_, a)| a).collect(),
                    ));
                }
            }
        }
    }
    if sequences.is_empty() {
        bail!("nothing to do");
    }
    let mut failed = 0;
    for (label, seq) in &sequences {
        let list = |v: &[f64]| {
            v.iter()
                .map(|x| format!("{x:.2}"))
                .collect::<Vec<_>>()
                .join(", ")
        };
        writeln!(
            out,
            "{label}: A = [{}]",
            seq.iter().map(|&x| fmt(x)).collect::<Vec<_>>().join(", ")
        )?;
        match rate_n(seq) {
            Ok(r) => writeln!(out, "  N_k = {{{}}}", list(&r))?,
            Err(e) => {
                writeln!(out, "  N_k: {e}")?;
                failed += 1;
            }
        }
        if let Some(r) = reference {
            match rate_m(seq, r) {
                Ok(m) => writeln!(out, "  M_k = {{{}}}", list(&m))?,
                Err(e) => {
                    writeln!(out, "  M_k: {e}")?;
                    failed += 1;
                }
            }
        }
    }
    Ok((failed > 0).then_some(Partial(failed)))
}
