//! Crank-Nicolson evolution of `i psi_t = (-psi_xx + V) psi` on `[x_min, 0]`.
//!
//! The grid ends exactly on the wall. The far edge `x_min` is always
//! Dirichlet. At the wall the state obeys Dirichlet (node eliminated) or a
//! Robin condition `psi'(0) = alpha psi(0)` closed with a centered ghost
//! node. The ghost-node operator is self-adjoint for trapezoidal weights
//! (half weight on the end nodes), so all norms and overlaps here use those
//! weights and Crank-Nicolson conserves the norm exactly up to round-off.

mod compare;
mod tridiag;

pub use compare::{
    compare_realizations, compare_states, reflect_and_compare, reflect_and_compare_sweep, Comparison,
    ReflectionExperiment, RunSummary,
};
pub use tridiag::{ThomasFactor, Tridiagonal};

use num_complex::Complex64;

use crate::error::{require_finite, require_positive, Error, Result};
use crate::potential::PotentialSpec;

/// Uniform nodes `x_j = x_min + j h`, `j = 0..n`, with the last node on the wall.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    x_min: f64,
    n: usize,
}

impl Grid {
    pub const MIN_NODES: usize = 16;

    pub fn new(x_min: f64, n: usize) -> Result<Self> {
        require_finite("x_min", x_min)?;
        if x_min >= 0.0 {
            return Err(Error::Config(format!("x_min must be < 0, got {x_min}")));
        }
        if n < Self::MIN_NODES {
            return Err(Error::Config(format!(
                "grid needs at least {} nodes, got {n}",
                Self::MIN_NODES
            )));
        }
        Ok(Self { x_min, n })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> f64 {
        -self.x_min / (self.n - 1) as f64
    }

    pub fn node(&self, j: usize) -> f64 {
        if j + 1 == self.n {
            0.0
        } else {
            self.x_min + j as f64 * self.spacing()
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(|j| self.node(j))
    }

    /// Number of grid steps spanned by `width`, which must be a whole number.
    pub fn steps_in(&self, width: f64) -> Result<usize> {
        let ratio = width / self.spacing();
        let steps = ratio.round();
        if steps < 1.0 || (ratio - steps).abs() > 1e-6 * ratio.max(1.0) {
            return Err(Error::Config(format!(
                "layer width L = {width} is not a positive multiple of the grid spacing h = {}",
                self.spacing()
            )));
        }
        let steps = steps as usize;
        if steps + 1 >= self.n {
            return Err(Error::Config(format!(
                "layer width L = {width} does not fit into the grid"
            )));
        }
        Ok(steps)
    }

    /// Trapezoidal quadrature weight of node `j` (without the factor `h`).
    fn weight(&self, j: usize) -> f64 {
        if j == 0 || j + 1 == self.n {
            0.5
        } else {
            1.0
        }
    }
}

/// Condition imposed by the wall at `x = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryCondition {
    Dirichlet,
    Neumann,
    Robin(f64),
}

impl BoundaryCondition {
    /// `alpha` in `psi'(0) = alpha psi(0)`; `None` for Dirichlet.
    pub fn robin_parameter(&self) -> Option<f64> {
        match *self {
            BoundaryCondition::Dirichlet => None,
            BoundaryCondition::Neumann => Some(0.0),
            BoundaryCondition::Robin(alpha) => Some(alpha),
        }
    }

    /// Index one past the last unknown node.
    fn active_end(&self, n: usize) -> usize {
        match self {
            BoundaryCondition::Dirichlet => n - 1,
            _ => n,
        }
    }
}

/// Gaussian packet parameters: center, position spread and carrier wave number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Packet {
    pub x0: f64,
    pub sigma: f64,
    pub k0: f64,
}

impl Default for Packet {
    fn default() -> Self {
        Self { x0: -10.0, sigma: 1.0, k0: 2.0 }
    }
}

/// Time-dependent observables of one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observables {
    pub t: f64,
    pub norm: f64,
    pub mean_x: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WaveState {
    pub grid: Grid,
    pub psi: Vec<Complex64>,
    pub bc: BoundaryCondition,
    pub potential: PotentialSpec,
    pub t: f64,
}

fn check_pairing(bc: BoundaryCondition, potential: &PotentialSpec) -> Result<()> {
    potential.validate()?;
    if potential.kind().is_layered() && bc != BoundaryCondition::Dirichlet {
        return Err(Error::Config(format!(
            "a {} layer must sit in front of a Dirichlet wall, got {bc:?}",
            potential.kind()
        )));
    }
    Ok(())
}

/// Normalized `exp(-(x - x0)^2 / (4 sigma^2) + i k0 x)` on `grid`.
pub fn init_gaussian(
    grid: Grid,
    packet: Packet,
    bc: BoundaryCondition,
    potential: PotentialSpec,
) -> Result<WaveState> {
    let Packet { x0, sigma, k0 } = packet;
    require_finite("x0", x0)?;
    require_positive("sigma", sigma)?;
    require_finite("k0", k0)?;
    check_pairing(bc, &potential)?;
    if !(grid.x_min() < x0 && x0 < 0.0) {
        return Err(Error::Config(format!(
            "packet center x0 = {x0} must lie inside ({}, 0)",
            grid.x_min()
        )));
    }
    if -x0 <= 5.0 * sigma {
        return Err(Error::Config(format!(
            "packet too close to the wall: |x0| = {} must exceed 5 sigma = {}",
            -x0,
            5.0 * sigma
        )));
    }
    if x0 - grid.x_min() <= 5.0 * sigma {
        return Err(Error::Config(format!(
            "packet too close to x_min: |x0 - x_min| = {} must exceed 5 sigma = {}",
            x0 - grid.x_min(),
            5.0 * sigma
        )));
    }

    let end = bc.active_end(grid.len());
    let mut psi: Vec<Complex64> = grid
        .nodes()
        .enumerate()
        .map(|(j, x)| {
            if j == 0 || j >= end {
                Complex64::new(0.0, 0.0)
            } else {
                let u = (x - x0) / (2.0 * sigma);
                Complex64::from_polar((-u * u).exp(), k0 * x)
            }
        })
        .collect();
    let scale = 1.0 / norm_of(&grid, &psi).sqrt();
    psi.iter_mut().for_each(|z| *z *= scale);
    Ok(WaveState { grid, psi, bc, potential, t: 0.0 })
}

fn norm_of(grid: &Grid, psi: &[Complex64]) -> f64 {
    psi.iter()
        .enumerate()
        .map(|(j, z)| grid.weight(j) * z.norm_sqr())
        .sum::<f64>()
        * grid.spacing()
}

/// `<a, b> = sum_j w_j conj(a_j) b_j h`.
pub fn inner_product(grid: &Grid, a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter()
        .zip(b)
        .enumerate()
        .map(|(j, (x, y))| grid.weight(j) * x.conj() * y)
        .sum::<Complex64>()
        * grid.spacing()
}

impl WaveState {
    /// Discrete `L^2` norm squared.
    pub fn norm(&self) -> f64 {
        norm_of(&self.grid, &self.psi)
    }

    pub fn mean_position(&self) -> f64 {
        let h = self.grid.spacing();
        self.psi
            .iter()
            .enumerate()
            .map(|(j, z)| self.grid.weight(j) * z.norm_sqr() * self.grid.node(j))
            .sum::<f64>()
            * h
            / self.norm()
    }

    pub fn observables(&self) -> Observables {
        Observables { t: self.t, norm: self.norm(), mean_x: self.mean_position() }
    }

    pub fn inner(&self, other: &WaveState) -> Complex64 {
        inner_product(&self.grid, &self.psi, &other.psi)
    }

    /// One Crank-Nicolson step. Factorizes the system anew; use a
    /// [`Propagator`] for repeated steps.
    pub fn step(&self, dt: f64) -> Result<WaveState> {
        let prop = Propagator::new(self.grid, self.bc, &self.potential, dt)?;
        let mut next = self.clone();
        prop.step(&mut next)?;
        Ok(next)
    }
}

/// Discrete Hamiltonian on the unknown nodes `1..active_end`.
pub fn hamiltonian(grid: &Grid, bc: BoundaryCondition, potential: &PotentialSpec) -> Result<Tridiagonal> {
    check_pairing(bc, potential)?;
    let n = grid.len();
    let h = grid.spacing();
    let inv_h2 = 1.0 / (h * h);
    let end = bc.active_end(n);

    let mut v = vec![0.0; n];
    match *potential {
        PotentialSpec::Robin { .. } => {}
        PotentialSpec::DeltaLayer { lambda, width } => {
            v[n - 1 - grid.steps_in(width)?] = lambda / h;
        }
        PotentialSpec::Valley { depth, width } => {
            let edge = n - 1 - grid.steps_in(width)?;
            // the edge node sits on the discontinuity and takes the mean value
            v[edge] = -0.5 * depth;
            v[edge + 1..].iter_mut().for_each(|x| *x = -depth);
        }
    }

    let m = end - 1;
    let mut diag: Vec<Complex64> = (1..end).map(|j| Complex64::new(2.0 * inv_h2 + v[j], 0.0)).collect();
    let mut lower = vec![Complex64::new(-inv_h2, 0.0); m - 1];
    let upper = vec![Complex64::new(-inv_h2, 0.0); m - 1];
    if let Some(alpha) = bc.robin_parameter() {
        // ghost node psi_n = psi_{n-2} + 2 h alpha psi_{n-1}
        diag[m - 1] = Complex64::new((2.0 - 2.0 * h * alpha) * inv_h2 + v[n - 1], 0.0);
        lower[m - 2] = Complex64::new(-2.0 * inv_h2, 0.0);
    }
    Ok(Tridiagonal { lower, diag, upper })
}

/// Pre-factorized Crank-Nicolson step `(1 + i dt H/2) psi' = (1 - i dt H/2) psi`.
#[derive(Debug, Clone)]
pub struct Propagator {
    grid: Grid,
    bc: BoundaryCondition,
    potential: PotentialSpec,
    dt: f64,
    explicit: Tridiagonal,
    implicit: ThomasFactor,
    scratch: Vec<Complex64>,
}

impl Propagator {
    /// `dt` may be negative to run backwards in time.
    pub fn new(grid: Grid, bc: BoundaryCondition, potential: &PotentialSpec, dt: f64) -> Result<Self> {
        require_finite("dt", dt)?;
        if dt == 0.0 {
            return Err(Error::Config("time step dt must be nonzero".into()));
        }
        let ham = hamiltonian(&grid, bc, potential)?;
        let half = Complex64::new(0.0, 0.5 * dt);
        let scale = |m: &Tridiagonal, sign: f64| Tridiagonal {
            lower: m.lower.iter().map(|z| sign * half * z).collect(),
            diag: m.diag.iter().map(|z| 1.0 + sign * half * z).collect(),
            upper: m.upper.iter().map(|z| sign * half * z).collect(),
        };
        let explicit = scale(&ham, -1.0);
        let implicit = scale(&ham, 1.0).factor()?;
        Ok(Self {
            grid,
            bc,
            potential: *potential,
            dt,
            explicit,
            implicit,
            scratch: vec![Complex64::new(0.0, 0.0); ham.len()],
        })
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn step(&self, state: &mut WaveState) -> Result<()> {
        let mut scratch = self.scratch.clone();
        self.step_with(state, &mut scratch)
    }

    fn step_with(&self, state: &mut WaveState, scratch: &mut [Complex64]) -> Result<()> {
        if state.grid != self.grid || state.bc != self.bc || state.potential != self.potential {
            return Err(Error::Config("state does not match the propagator setup".into()));
        }
        let end = self.bc.active_end(self.grid.len());
        let active = &mut state.psi[1..end];
        self.explicit.apply(active, scratch);
        self.implicit.solve_in_place(scratch);
        active.copy_from_slice(scratch);
        state.t += self.dt;
        Ok(())
    }

    /// Takes `steps` steps, recording observables before the first step and
    /// after every `sample_every`-th (0 disables sampling).
    pub fn run(&self, state: &mut WaveState, steps: usize, sample_every: usize) -> Result<Vec<Observables>> {
        let mut scratch = self.scratch.clone();
        let mut samples = Vec::new();
        if sample_every > 0 {
            samples.push(state.observables());
        }
        for i in 1..=steps {
            self.step_with(state, &mut scratch)?;
            if sample_every > 0 && (i % sample_every == 0 || i == steps) {
                samples.push(state.observables());
            }
        }
        Ok(samples)
    }
}
