use num_complex::Complex64;

use super::{interior_wave_number, reflection, ReflectionResult};
use crate::error::{require_positive, Error, Result};
use crate::potential::PotentialSpec;

/// A solved generalized eigenfunction at energy `k^2`, evaluatable on `x <= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PiecewiseEigenfunction {
    pub k: f64,
    pub spec: PotentialSpec,
    pub coeffs: ReflectionResult,
    /// `K`: equals `k` except inside a valley.
    pub interior_k: f64,
}

/// Violations of the matching system; `None` where a condition does not apply.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ResidualReport {
    /// `|psi(0)|` behind a Dirichlet wall.
    pub wall: Option<f64>,
    /// `|psi(-L+) - psi(-L-)|`.
    pub continuity: Option<f64>,
    /// Derivative jump minus `lambda psi(-L)` for a delta layer, plain
    /// derivative jump for a valley.
    pub jump_or_smoothness: Option<f64>,
    /// `|psi'(0) - alpha psi(0)|` for the pure Robin case.
    pub robin: Option<f64>,
}

impl ResidualReport {
    /// Largest applicable residual.
    pub fn max(&self) -> f64 {
        [self.wall, self.continuity, self.jump_or_smoothness, self.robin]
            .into_iter()
            .flatten()
            .fold(0.0, f64::max)
    }
}

impl PiecewiseEigenfunction {
    /// Solves the matching problem for `spec` at wave number `k`.
    pub fn new(k: f64, spec: PotentialSpec) -> Result<Self> {
        spec.validate()?;
        let coeffs = reflection(k, &spec)?;
        Ok(Self::from_parts(k, spec, coeffs))
    }

    /// Assembles an eigenfunction from given coefficients without solving
    /// anything. Useful for checking how far arbitrary coefficients are from
    /// satisfying the matching system.
    pub fn from_parts(k: f64, spec: PotentialSpec, coeffs: ReflectionResult) -> Self {
        Self {
            k,
            spec,
            coeffs,
            interior_k: interior_wave_number(k, &spec),
        }
    }

    fn exterior(&self, x: f64) -> (Complex64, Complex64) {
        let k = self.k;
        let inc = Complex64::from_polar(1.0, k * x);
        let out = self.coeffs.b * inc.conj();
        (inc + out, Complex64::new(0.0, k) * (inc - out))
    }

    fn interior(&self, x: f64) -> (Complex64, Complex64) {
        let c = self.coeffs.c.unwrap_or_default();
        let kk = self.interior_k;
        let e = Complex64::from_polar(1.0, kk * x);
        (c * (e - e.conj()), c * Complex64::new(0.0, kk) * (e + e.conj()))
    }

    /// `psi(x)`: `e^{ikx} + b e^{-ikx}` left of the layer, `c (e^{iKx} - e^{-iKx})`
    /// on `[-L, 0]`.
    pub fn eval(&self, x: f64) -> Result<Complex64> {
        self.eval_with_derivative(x).map(|(psi, _)| psi)
    }

    pub fn eval_with_derivative(&self, x: f64) -> Result<(Complex64, Complex64)> {
        if x.is_nan() || x > 0.0 {
            return Err(Error::Domain(format!(
                "eigenfunction lives on x <= 0 (wall at 0), got x = {x}"
            )));
        }
        Ok(match self.spec.width() {
            Some(width) if x >= -width => self.interior(x),
            _ => self.exterior(x),
        })
    }

    /// Residuals of the boundary and matching conditions, using analytic
    /// derivatives of the plane-wave branches.
    pub fn boundary_residuals(&self) -> ResidualReport {
        match self.spec {
            PotentialSpec::Robin { alpha } => {
                let (psi, dpsi) = self.exterior(0.0);
                ResidualReport {
                    robin: Some((dpsi - alpha * psi).norm()),
                    ..Default::default()
                }
            }
            PotentialSpec::DeltaLayer { lambda, width } => {
                let (left, dleft) = self.exterior(-width);
                let (right, dright) = self.interior(-width);
                ResidualReport {
                    wall: Some(self.interior(0.0).0.norm()),
                    continuity: Some((right - left).norm()),
                    jump_or_smoothness: Some((dright - dleft - lambda * right).norm()),
                    robin: None,
                }
            }
            PotentialSpec::Valley { width, .. } => {
                let (left, dleft) = self.exterior(-width);
                let (right, dright) = self.interior(-width);
                ResidualReport {
                    wall: Some(self.interior(0.0).0.norm()),
                    continuity: Some((right - left).norm()),
                    jump_or_smoothness: Some((dright - dleft).norm()),
                    robin: None,
                }
            }
        }
    }
}

/// Convenience wrapper: solve and report residuals in one call.
pub fn residuals_for(k: f64, spec: PotentialSpec) -> Result<ResidualReport> {
    require_positive("k", k)?;
    Ok(PiecewiseEigenfunction::new(k, spec)?.boundary_residuals())
}
