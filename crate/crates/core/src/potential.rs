//! Parameter types shared by every part of the crate.
//!
//! Units are chosen so that the kinetic prefactor is one: the stationary
//! equation reads `-psi'' + V psi = k^2 psi` and the energy is `k^2`.

use std::fmt;
use std::str::FromStr;

use crate::error::{require_finite, require_positive, Error, Result};

/// Which wall-adjacent structure is in front of the boundary at `x = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PotentialKind {
    /// No potential; the wall itself imposes `psi'(0) = alpha psi(0)`.
    Robin,
    /// Hard wall plus `lambda * delta(x + L)`.
    DeltaLayer,
    /// Hard wall plus a flat well of depth `v` on `[-L, 0]`.
    Valley,
}

impl PotentialKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PotentialKind::Robin => "robin",
            PotentialKind::DeltaLayer => "delta",
            PotentialKind::Valley => "valley",
        }
    }

    pub fn is_layered(self) -> bool {
        !matches!(self, PotentialKind::Robin)
    }
}

impl fmt::Display for PotentialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PotentialKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "robin" => Ok(PotentialKind::Robin),
            "delta" => Ok(PotentialKind::DeltaLayer),
            "valley" => Ok(PotentialKind::Valley),
            other => Err(Error::Usage(format!(
                "unknown kind {other:?}, expected one of delta, valley, robin"
            ))),
        }
    }
}

/// Tagged description of what sits in front of the wall.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PotentialSpec {
    /// Pure Robin boundary, no potential term.
    Robin { alpha: f64 },
    /// Delta of strength `lambda` (any sign) at `x = -width`, Dirichlet wall at 0.
    DeltaLayer { lambda: f64, width: f64 },
    /// Constant potential `-depth` on `[-width, 0]`, Dirichlet wall at 0.
    Valley { depth: f64, width: f64 },
}

impl PotentialSpec {
    pub fn robin(alpha: f64) -> Result<Self> {
        require_finite("alpha", alpha)?;
        Ok(PotentialSpec::Robin { alpha })
    }

    pub fn delta_layer(lambda: f64, width: f64) -> Result<Self> {
        require_finite("lambda", lambda)?;
        require_positive("L", width)?;
        Ok(PotentialSpec::DeltaLayer { lambda, width })
    }

    pub fn valley(depth: f64, width: f64) -> Result<Self> {
        require_finite("v", depth)?;
        if depth < 0.0 {
            return Err(Error::Domain(format!("valley depth v must be >= 0, got {depth}")));
        }
        require_positive("L", width)?;
        Ok(PotentialSpec::Valley { depth, width })
    }

    /// Builds the realization of `kind` whose strength is calibrated to the
    /// Robin parameter `alpha` at layer width `width`. For `Robin` the width
    /// is ignored.
    pub fn calibrated(kind: PotentialKind, alpha: f64, width: f64) -> Result<Self> {
        match kind {
            PotentialKind::Robin => Self::robin(alpha),
            PotentialKind::DeltaLayer => {
                Self::delta_layer(crate::analytic::calibrate_delta(width, alpha)?, width)
            }
            PotentialKind::Valley => {
                Self::valley(crate::analytic::calibrate_valley(width, alpha)?, width)
            }
        }
    }

    pub fn kind(&self) -> PotentialKind {
        match self {
            PotentialSpec::Robin { .. } => PotentialKind::Robin,
            PotentialSpec::DeltaLayer { .. } => PotentialKind::DeltaLayer,
            PotentialSpec::Valley { .. } => PotentialKind::Valley,
        }
    }

    /// Layer width `L`, absent for the pure Robin case.
    pub fn width(&self) -> Option<f64> {
        match *self {
            PotentialSpec::Robin { .. } => None,
            PotentialSpec::DeltaLayer { width, .. } | PotentialSpec::Valley { width, .. } => {
                Some(width)
            }
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        match *self {
            PotentialSpec::Robin { alpha } => Self::robin(alpha).map(|_| ()),
            PotentialSpec::DeltaLayer { lambda, width } => {
                Self::delta_layer(lambda, width).map(|_| ())
            }
            PotentialSpec::Valley { depth, width } => Self::valley(depth, width).map(|_| ()),
        }
    }
}

/// The independent variables of every closed form: wave number, Robin
/// parameter and (for layered realizations) the layer width.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatterInput {
    pub k: f64,
    pub alpha: f64,
    pub width: Option<f64>,
}

impl ScatterInput {
    pub fn new(k: f64, alpha: f64, width: Option<f64>) -> Result<Self> {
        require_positive("k", k)?;
        require_finite("alpha", alpha)?;
        if let Some(w) = width {
            require_positive("L", w)?;
        }
        Ok(Self { k, alpha, width })
    }

    /// The calibrated potential of `kind` for this input.
    pub fn calibrated_spec(&self, kind: PotentialKind) -> Result<PotentialSpec> {
        match (kind, self.width) {
            (PotentialKind::Robin, _) => PotentialSpec::robin(self.alpha),
            (_, Some(w)) => PotentialSpec::calibrated(kind, self.alpha, w),
            (_, None) => Err(Error::Domain(format!("{kind} realization needs a layer width L"))),
        }
    }
}
