mod converge;
mod evolve;
mod oracle;
mod reflect;

use std::path::PathBuf;

use halfwall_core::{PotentialKind, PotentialSpec};

use crate::args::KindArg;
use crate::error::CliError;
use crate::table::Table;

pub use converge::run as converge;
pub use evolve::run as evolve;
pub use oracle::run as oracle;
pub use reflect::run as reflect;

/// What a subcommand produced. `passed = false` maps to exit code 1.
#[derive(Debug)]
pub struct Report {
    pub table: Table,
    pub passed: bool,
    /// Secondary table written to its own path.
    pub extra: Option<(PathBuf, Table)>,
}

pub(crate) fn both_layered(kinds: &[KindArg]) -> Result<Vec<PotentialKind>, CliError> {
    if kinds.is_empty() {
        return Ok(vec![PotentialKind::DeltaLayer, PotentialKind::Valley]);
    }
    kinds
        .iter()
        .map(|&k| match PotentialKind::from(k) {
            PotentialKind::Robin => Err(CliError::Usage("--kind robin makes no sense here; use delta or valley".into())),
            kind => Ok(kind),
        })
        .collect()
}

/// The realization at width `width`, either calibrated to `alpha` or with an
/// explicit strength.
pub(crate) fn realization(
    kind: PotentialKind,
    alpha: f64,
    width: f64,
    lambda: Option<f64>,
    depth: Option<f64>,
) -> Result<PotentialSpec, CliError> {
    let spec = match (kind, lambda, depth) {
        (PotentialKind::DeltaLayer, Some(l), _) => PotentialSpec::delta_layer(l, width)?,
        (PotentialKind::Valley, _, Some(v)) => PotentialSpec::valley(v, width)?,
        _ => PotentialSpec::calibrated(kind, alpha, width)?,
    };
    Ok(spec)
}

pub(crate) fn has_override(kind: PotentialKind, lambda: Option<f64>, depth: Option<f64>) -> bool {
    match kind {
        PotentialKind::DeltaLayer => lambda.is_some(),
        PotentialKind::Valley => depth.is_some(),
        PotentialKind::Robin => false,
    }
}
