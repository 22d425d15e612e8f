use halfwall_core::evolve::{compare_realizations, Comparison, Grid, Packet, ReflectionExperiment, RunSummary};
use halfwall_core::{PotentialKind, PotentialSpec};

use super::{realization, Report};
use crate::args::{flatten, EvolveArgs};
use crate::error::CliError;
use crate::table::{Cell, Table};

pub const COLUMNS: [&str; 4] = ["L", "distance", "Re overlap", "Im overlap"];
pub const OBSERVABLE_COLUMNS: [&str; 5] = ["run", "L", "t", "norm", "<x>"];

/// Relative norm drift above which the run counts as failed.
pub const NORM_TOLERANCE: f64 = 1e-10;

fn experiment(args: &EvolveArgs) -> Result<ReflectionExperiment, CliError> {
    Ok(ReflectionExperiment {
        grid: Grid::new(args.xmin, args.nodes)?,
        packet: Packet { x0: args.x0, sigma: args.sigma, k0: args.k0 },
        dt: args.dt,
        horizon: args.horizon,
        alpha: args.alpha,
        sample_every: if args.observables.is_some() { args.sample_every } else { 0 },
    })
}

fn push_samples(table: &mut Table, run: &str, width: Option<f64>, summary: &RunSummary) {
    for s in &summary.samples {
        table.push(vec![run.into(), Cell::from(width), s.t.into(), s.norm.into(), s.mean_x.into()]);
    }
}

pub fn run(args: &EvolveArgs) -> Result<Report, CliError> {
    let exp = experiment(args)?;
    let kind = PotentialKind::from(args.kind);
    let specs: Vec<PotentialSpec> = if kind.is_layered() {
        let widths = if args.widths.is_empty() { vec![0.4, 0.2, 0.1] } else { flatten(&args.widths) };
        widths
            .iter()
            .map(|&w| realization(kind, args.alpha, w, args.lambda, args.depth))
            .collect::<Result<_, _>>()?
    } else {
        vec![PotentialSpec::robin(args.alpha)?]
    };

    let comparisons: Vec<Comparison> = compare_realizations(&exp, &specs)?;

    let mut table = Table::new(&COLUMNS);
    let mut passed = true;
    for c in &comparisons {
        table.push(vec![
            c.realization.width().into(),
            c.distance.into(),
            c.overlap.re.into(),
            c.overlap.im.into(),
        ]);
        passed &= c.reference.norm_drift() < NORM_TOLERANCE && c.realized.norm_drift() < NORM_TOLERANCE;
    }

    let extra = args.observables.as_ref().map(|path| {
        let mut obs = Table::new(&OBSERVABLE_COLUMNS);
        if let Some(first) = comparisons.first() {
            push_samples(&mut obs, "robin", None, &first.reference);
        }
        for c in &comparisons {
            push_samples(&mut obs, c.realization.kind().as_str(), c.realization.width(), &c.realized);
        }
        (path.clone(), obs)
    });

    Ok(Report { table, passed, extra })
}
