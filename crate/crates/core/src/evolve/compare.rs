use std::thread;

use num_complex::Complex64;

use super::{init_gaussian, inner_product, BoundaryCondition, Grid, Observables, Packet, Propagator, WaveState};
use crate::error::{require_finite, require_positive, Error, Result};
use crate::potential::{PotentialKind, PotentialSpec};

/// Shared setup of a Robin-versus-realization reflection run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectionExperiment {
    pub grid: Grid,
    pub packet: Packet,
    pub dt: f64,
    pub horizon: f64,
    /// Robin parameter of the reference evolution.
    pub alpha: f64,
    /// Record observables every this many steps; 0 records nothing.
    pub sample_every: usize,
}

impl ReflectionExperiment {
    /// `x_min = -40`, 8001 nodes, `dt = 5e-4`, horizon 10, default packet.
    pub fn with_defaults(alpha: f64) -> Self {
        Self {
            grid: Grid::new(-40.0, 8001).expect("default grid is valid"),
            packet: Packet::default(),
            dt: 5e-4,
            horizon: 10.0,
            alpha,
            sample_every: 0,
        }
    }

    pub fn steps(&self) -> usize {
        (self.horizon / self.dt).round() as usize
    }

    fn validate(&self) -> Result<()> {
        require_positive("dt", self.dt)?;
        require_positive("horizon", self.horizon)?;
        require_finite("alpha", self.alpha)?;
        if self.steps() == 0 {
            return Err(Error::Config("horizon is shorter than one time step".into()));
        }
        Ok(())
    }

    fn reference_bc(&self) -> BoundaryCondition {
        if self.alpha == 0.0 {
            BoundaryCondition::Neumann
        } else {
            BoundaryCondition::Robin(self.alpha)
        }
    }
}

/// Final state and sampled observables of one evolution.
#[derive(Debug, Clone, PartialEq)]
pub struct RunSummary {
    pub final_state: WaveState,
    pub samples: Vec<Observables>,
    pub initial_norm: f64,
}

impl RunSummary {
    /// `|norm(t_end) - norm(0)| / norm(0)`.
    pub fn norm_drift(&self) -> f64 {
        (self.final_state.norm() - self.initial_norm).abs() / self.initial_norm
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub realization: PotentialSpec,
    /// Discrete `L^2` distance of the two final states.
    pub distance: f64,
    /// `<psi_realization, psi_robin>`.
    pub overlap: Complex64,
    pub reference: RunSummary,
    pub realized: RunSummary,
}

/// `(||a - b||, <a, b>)` on the shared grid.
pub fn compare_states(a: &WaveState, b: &WaveState) -> Result<(f64, Complex64)> {
    if a.grid != b.grid {
        return Err(Error::Config("states live on different grids".into()));
    }
    let diff: Vec<Complex64> = a.psi.iter().zip(&b.psi).map(|(x, y)| x - y).collect();
    let distance = inner_product(&a.grid, &diff, &diff).re.max(0.0).sqrt();
    Ok((distance, inner_product(&a.grid, &a.psi, &b.psi)))
}

fn evolve(exp: &ReflectionExperiment, bc: BoundaryCondition, potential: PotentialSpec) -> Result<RunSummary> {
    let mut state = init_gaussian(exp.grid, exp.packet, bc, potential)?;
    let initial_norm = state.norm();
    let prop = Propagator::new(exp.grid, bc, &potential, exp.dt)?;
    let samples = prop.run(&mut state, exp.steps(), exp.sample_every)?;
    Ok(RunSummary { final_state: state, samples, initial_norm })
}

fn realization_bc(realization: &PotentialSpec) -> BoundaryCondition {
    match *realization {
        PotentialSpec::Robin { alpha: 0.0 } => BoundaryCondition::Neumann,
        PotentialSpec::Robin { alpha } => BoundaryCondition::Robin(alpha),
        _ => BoundaryCondition::Dirichlet,
    }
}

fn reference_run(exp: &ReflectionExperiment) -> Result<RunSummary> {
    evolve(exp, exp.reference_bc(), PotentialSpec::Robin { alpha: exp.alpha })
}

fn realized_run(exp: &ReflectionExperiment, realization: &PotentialSpec) -> Result<RunSummary> {
    evolve(exp, realization_bc(realization), *realization)
}

fn join(reference: &RunSummary, realization: PotentialSpec, realized: RunSummary) -> Result<Comparison> {
    let (distance, overlap) = compare_states(&realized.final_state, &reference.final_state)?;
    Ok(Comparison { realization, distance, overlap, reference: reference.clone(), realized })
}

/// Evolves the same packet under the Robin condition and against a
/// Dirichlet wall with `realization` in front, then compares the final
/// states. A `Robin` realization runs as a second Robin-wall evolution.
pub fn reflect_and_compare(exp: &ReflectionExperiment, realization: &PotentialSpec) -> Result<Comparison> {
    exp.validate()?;
    let (reference, realized) = thread::scope(|s| {
        let a = s.spawn(|| reference_run(exp));
        let b = s.spawn(|| realized_run(exp, realization));
        (a.join().expect("reference run panicked"), b.join().expect("realized run panicked"))
    });
    join(&reference?, *realization, realized?)
}

/// Calibrated realizations of `kind` for each width against one shared
/// reference run. Output order follows `widths`.
pub fn reflect_and_compare_sweep(
    exp: &ReflectionExperiment,
    kind: PotentialKind,
    widths: &[f64],
) -> Result<Vec<Comparison>> {
    let specs = widths
        .iter()
        .map(|&w| PotentialSpec::calibrated(kind, exp.alpha, w))
        .collect::<Result<Vec<_>>>()?;
    compare_realizations(exp, &specs)
}

/// Every realization in `specs` against one shared reference run, all
/// evolutions running concurrently. Output order follows `specs`.
pub fn compare_realizations(exp: &ReflectionExperiment, specs: &[PotentialSpec]) -> Result<Vec<Comparison>> {
    exp.validate()?;
    for spec in specs {
        if let Some(w) = spec.width() {
            exp.grid.steps_in(w)?;
        }
    }
    let (reference, realized) = thread::scope(|s| {
        let reference = s.spawn(|| reference_run(exp));
        let runs: Vec<_> = specs.iter().map(|spec| s.spawn(move || realized_run(exp, spec))).collect();
        let realized: Vec<_> = runs.into_iter().map(|h| h.join().expect("realized run panicked")).collect();
        (reference.join().expect("reference run panicked"), realized)
    });
    let reference = reference?;
    specs
        .iter()
        .zip(realized)
        .map(|(spec, run)| join(&reference, *spec, run?))
        .collect()
}
