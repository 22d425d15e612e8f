//! Hard-wall reflection on the half line `(-inf, 0]` and its Robin limit.
//!
//! A Dirichlet wall with a calibrated attractive layer just in front of it
//! (a negative delta at `-L`, or a deep flat well on `[-L, 0]`) reflects like
//! a wall obeying `psi'(0) = alpha psi(0)` as `L -> 0`. The crate provides:
//!
//! * [`analytic`]: closed-form reflection amplitudes, calibrations,
//!   eigenfunctions with residual checks and convergence sweeps;
//! * [`oracle`]: an RK4 shooting solver that recovers the same amplitudes
//!   without the closed forms;
//! * [`evolve`]: a Crank-Nicolson wave-packet evolver for the dynamical
//!   version of the comparison.
//!
//! Units have the kinetic prefactor set to one, so `E = k^2`.

pub mod analytic;
pub mod error;
pub mod evolve;
pub mod oracle;
pub mod potential;

pub use analytic::{
    calibrate_delta, calibrate_valley, convergence_curve, delta_reflection, robin_reflection,
    valley_reflection, ConvergenceRow, PiecewiseEigenfunction, ReflectionResult, ResidualReport,
};
pub use error::{Error, Result};
pub use evolve::{
    init_gaussian, reflect_and_compare, BoundaryCondition, Comparison, Grid, Packet, Propagator,
    ReflectionExperiment, WaveState,
};
pub use oracle::{extract_reflection, shoot, ShootingState};
pub use potential::{PotentialKind, PotentialSpec, ScatterInput};
