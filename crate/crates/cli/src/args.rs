use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use halfwall_core::PotentialKind;

use crate::table::Format;

#[derive(Debug, Parser)]
#[command(name = "halfwall", version, about = "Hard-wall reflection experiments and their Robin limit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reflection amplitudes for the Robin wall or a layered realization.
    Reflect(ReflectArgs),
    /// Error of the calibrated realizations against the Robin amplitude as L shrinks.
    Converge(ConvergeArgs),
    /// Crank-Nicolson packet reflection, Robin wall against a realization.
    Evolve(EvolveArgs),
    /// Closed forms against RK4 shooting.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Delta,
    Valley,
    Robin,
}

impl From<KindArg> for PotentialKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Delta => PotentialKind::DeltaLayer,
            KindArg::Valley => PotentialKind::Valley,
            KindArg::Robin => PotentialKind::Robin,
        }
    }
}

/// Either a single width or `start:factor:count`.
#[derive(Debug, Clone, PartialEq)]
pub struct WidthSpec(pub Vec<f64>);

pub fn parse_widths(s: &str) -> Result<WidthSpec, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let num = |p: &str| p.trim().parse::<f64>().map_err(|e| format!("bad number {p:?}: {e}"));
    match parts.as_slice() {
        [single] => Ok(WidthSpec(vec![num(single)?])),
        [start, factor, count] => {
            let start = num(start)?;
            let factor = num(factor)?;
            let count: usize = count.trim().parse().map_err(|e| format!("bad count {count:?}: {e}"))?;
            let mut value = start;
            let mut out = Vec::with_capacity(count);
            for _ in 0..count {
                out.push(value);
                value *= factor;
            }
            Ok(WidthSpec(out))
        }
        _ => Err(format!("expected a width or start:factor:count, got {s:?}")),
    }
}

pub fn flatten(specs: &[WidthSpec]) -> Vec<f64> {
    specs.iter().flat_map(|w| w.0.iter().copied()).collect()
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ReflectArgs {
    /// Wave number (repeatable).
    #[arg(long = "k", default_values_t = vec![1.0])]
    pub k: Vec<f64>,
    /// Robin parameter used by the Robin wall and for calibration (repeatable).
    #[arg(long, default_values_t = vec![0.0], allow_negative_numbers = true)]
    pub alpha: Vec<f64>,
    #[arg(long, value_enum, default_value = "robin")]
    pub kind: KindArg,
    /// Layer widths (repeatable, or start:factor:count).
    #[arg(long = "L", value_parser = parse_widths)]
    pub widths: Vec<WidthSpec>,
    /// Use this delta strength instead of the calibrated one.
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Option<f64>,
    /// Use this valley depth instead of the calibrated one.
    #[arg(long)]
    pub depth: Option<f64>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ConvergeArgs {
    #[arg(long = "k", default_values_t = vec![1.0])]
    pub k: Vec<f64>,
    #[arg(long, default_values_t = vec![0.0], allow_negative_numbers = true)]
    pub alpha: Vec<f64>,
    /// Realizations to sweep (repeatable); both when absent.
    #[arg(long, value_enum)]
    pub kind: Vec<KindArg>,
    #[arg(long = "L", value_parser = parse_widths)]
    pub widths: Vec<WidthSpec>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct EvolveArgs {
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub alpha: f64,
    /// `robin` runs the reference against itself as a control.
    #[arg(long, value_enum, default_value = "delta")]
    pub kind: KindArg,
    #[arg(long = "L", value_parser = parse_widths)]
    pub widths: Vec<WidthSpec>,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Option<f64>,
    #[arg(long)]
    pub depth: Option<f64>,
    #[arg(long, default_value_t = -40.0, allow_negative_numbers = true)]
    pub xmin: f64,
    #[arg(long, default_value_t = 8001)]
    pub nodes: usize,
    #[arg(long, default_value_t = -10.0, allow_negative_numbers = true)]
    pub x0: f64,
    #[arg(long, default_value_t = 1.0)]
    pub sigma: f64,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub k0: f64,
    #[arg(long, default_value_t = 5e-4)]
    pub dt: f64,
    #[arg(long, default_value_t = 10.0)]
    pub horizon: f64,
    /// Also write per-step observables (t, norm, <x>) here.
    #[arg(long)]
    pub observables: Option<PathBuf>,
    /// Sampling interval in steps for the observables table.
    #[arg(long, default_value_t = 100)]
    pub sample_every: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, default_value_t = 20240101)]
    pub seed: u64,
    /// Number of random (k, L, lambda, v) tuples.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Requested RK4 step.
    #[arg(long, default_value_t = 1e-5)]
    pub h: f64,
    /// Restrict to these realizations; both when absent.
    #[arg(long, value_enum)]
    pub kind: Vec<KindArg>,
    /// Explicit wave numbers; with --L replaces the random suite.
    #[arg(long = "k")]
    pub k: Vec<f64>,
    #[arg(long = "L", value_parser = parse_widths)]
    pub widths: Vec<WidthSpec>,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Option<f64>,
    #[arg(long)]
    pub depth: Option<f64>,
    /// Compare calibrated realizations with the Robin amplitude instead of
    /// the shooting solution. At finite L this is expected to fail.
    #[arg(long)]
    pub against_robin: bool,
    #[command(flatten)]
    pub output: Output,
}
