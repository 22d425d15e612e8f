//! Reflection amplitudes by direct integration of the stationary equation.
//!
//! Nothing here touches the closed forms in [`crate::analytic`]: the wall
//! condition `psi(0) = 0, psi'(0) = 1` is integrated leftward through the
//! layer with classical RK4 and the result is decomposed into plane waves in
//! the free region.

use num_complex::Complex64;

use crate::error::{require_finite, require_positive, Error, Result};
use crate::potential::PotentialSpec;

pub const DEFAULT_STEP: f64 = 1e-5;

/// Distance past the layer edge at which the default shot stops.
pub const DEFAULT_FREE_RUN: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingState {
    pub x: f64,
    pub psi: Complex64,
    pub dpsi: Complex64,
}

impl ShootingState {
    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            x: self.x,
            psi: self.psi * factor,
            dpsi: self.dpsi * factor,
        }
    }
}

/// Result of [`shoot`], including the step sizes actually used.
///
/// The requested step is shrunk independently on `[-L, 0]` and on
/// `[x_stop, -L]` so that `-L` falls on a node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Shot {
    pub state: ShootingState,
    pub inner_step: f64,
    pub inner_steps: usize,
    pub outer_step: f64,
    pub outer_steps: usize,
    pub requested_step: f64,
}

impl Shot {
    pub fn step_adjusted(&self) -> bool {
        self.inner_step != self.requested_step || self.outer_step != self.requested_step
    }
}

/// Default stopping point `-L - 1`.
pub fn default_stop(spec: &PotentialSpec) -> Option<f64> {
    spec.width().map(|w| -w - DEFAULT_FREE_RUN)
}

/// One RK4 step of `psi'' = q psi` with constant `q`.
fn rk4_step(psi: Complex64, dpsi: Complex64, q: f64, dx: f64) -> (Complex64, Complex64) {
    let k1 = (dpsi, q * psi);
    let k2 = (dpsi + 0.5 * dx * k1.1, q * (psi + 0.5 * dx * k1.0));
    let k3 = (dpsi + 0.5 * dx * k2.1, q * (psi + 0.5 * dx * k2.0));
    let k4 = (dpsi + dx * k3.1, q * (psi + dx * k3.0));
    (
        psi + dx / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0),
        dpsi + dx / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1),
    )
}

fn integrate(
    mut psi: Complex64,
    mut dpsi: Complex64,
    q: f64,
    dx: f64,
    steps: usize,
) -> (Complex64, Complex64) {
    for _ in 0..steps {
        (psi, dpsi) = rk4_step(psi, dpsi, q, dx);
    }
    (psi, dpsi)
}

fn commensurate(length: f64, h: f64) -> (f64, usize) {
    let steps = ((length / h) * (1.0 - 1e-12)).ceil().max(1.0) as usize;
    (length / steps as f64, steps)
}

/// Integrates `-psi'' + V psi = k^2 psi` from the wall at `x = 0` to `x_stop`.
pub fn shoot(spec: &PotentialSpec, k: f64, x_stop: f64, h: f64) -> Result<Shot> {
    require_positive("k", k)?;
    require_positive("h", h)?;
    require_finite("x_stop", x_stop)?;
    spec.validate()?;
    let width = spec.width().ok_or_else(|| {
        Error::Domain("shooting needs a Dirichlet wall with a delta layer or valley".into())
    })?;
    if x_stop >= -width {
        return Err(Error::Domain(format!(
            "x_stop = {x_stop} must lie left of the layer edge -L = {}",
            -width
        )));
    }

    let energy = k * k;
    let (inner_step, inner_steps) = commensurate(width, h);
    let (outer_step, outer_steps) = commensurate(-x_stop - width, h);

    let mut psi = Complex64::new(0.0, 0.0);
    let mut dpsi = Complex64::new(1.0, 0.0);

    match *spec {
        PotentialSpec::Valley { depth, .. } => {
            (psi, dpsi) = integrate(psi, dpsi, -depth - energy, -inner_step, inner_steps);
        }
        PotentialSpec::DeltaLayer { lambda, .. } => {
            (psi, dpsi) = integrate(psi, dpsi, -energy, -inner_step, inner_steps);
            // crossing -L leftward: psi'(-L-) = psi'(-L+) - lambda psi(-L)
            dpsi -= lambda * psi;
        }
        PotentialSpec::Robin { .. } => unreachable!("rejected above"),
    }
    (psi, dpsi) = integrate(psi, dpsi, -energy, -outer_step, outer_steps);

    if psi == Complex64::new(0.0, 0.0) && dpsi == Complex64::new(0.0, 0.0) {
        return Err(Error::Numerical("shooting solution collapsed to zero".into()));
    }

    Ok(Shot {
        state: ShootingState { x: x_stop, psi, dpsi },
        inner_step,
        inner_steps,
        outer_step,
        outer_steps,
        requested_step: h,
    })
}

/// Splits a free-region state into `A e^{ikx} + B e^{-ikx}` and returns `B / A`.
pub fn extract_reflection(state: &ShootingState, k: f64) -> Result<Complex64> {
    require_positive("k", k)?;
    require_finite("x", state.x)?;
    let ik = Complex64::new(0.0, k);
    let scaled = state.dpsi / ik;
    let incoming = 0.5 * (state.psi + scaled) * Complex64::from_polar(1.0, -k * state.x);
    let outgoing = 0.5 * (state.psi - scaled) * Complex64::from_polar(1.0, k * state.x);
    let scale = state.psi.norm() + scaled.norm();
    let magnitude = incoming.norm();
    if magnitude.is_nan() || magnitude <= 1e-14 * scale {
        return Err(Error::DegenerateDecomposition);
    }
    Ok(outgoing / incoming)
}

/// Oracle reflection amplitude at the default stopping point.
pub fn oracle_reflection(spec: &PotentialSpec, k: f64, h: f64) -> Result<Complex64> {
    let stop = default_stop(spec).ok_or_else(|| {
        Error::Domain("shooting needs a Dirichlet wall with a delta layer or valley".into())
    })?;
    let shot = shoot(spec, k, stop, h)?;
    extract_reflection(&shot.state, k)
}
