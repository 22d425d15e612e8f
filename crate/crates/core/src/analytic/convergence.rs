use super::{reflection, robin_reflection};
use crate::error::{require_positive, Error, Result};
use crate::potential::{PotentialKind, PotentialSpec};

/// One width of a convergence sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub width: f64,
    /// `|b(L) - b_Robin|`.
    pub error: f64,
    /// Order measured against the previous (wider) row; `None` on the first.
    pub order: Option<f64>,
}

/// `log(e1/e2) / log(L1/L2)`.
pub fn observed_order(wide: (f64, f64), narrow: (f64, f64)) -> f64 {
    let (w1, e1) = wide;
    let (w2, e2) = narrow;
    (e1 / e2).ln() / (w1 / w2).ln()
}

/// Distance of the calibrated realization's reflection amplitude from the
/// Robin amplitude along a strictly descending list of layer widths.
pub fn convergence_curve(
    k: f64,
    alpha: f64,
    kind: PotentialKind,
    widths: &[f64],
) -> Result<Vec<ConvergenceRow>> {
    if !kind.is_layered() {
        return Err(Error::Usage(
            "convergence needs a layered realization (delta or valley)".into(),
        ));
    }
    if widths.len() < 2 {
        return Err(Error::Usage(format!(
            "convergence needs at least two layer widths, got {}",
            widths.len()
        )));
    }
    for &w in widths {
        require_positive("L", w)?;
    }
    if widths.windows(2).any(|p| p[1] >= p[0]) {
        return Err(Error::Usage("layer widths must be strictly descending".into()));
    }

    let target = robin_reflection(k, alpha)?;
    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(widths.len());
    for &width in widths {
        let spec = PotentialSpec::calibrated(kind, alpha, width)?;
        let error = (reflection(k, &spec)?.b - target).norm();
        let order = rows
            .last()
            .map(|prev| observed_order((prev.width, prev.error), (width, error)));
        rows.push(ConvergenceRow { width, error, order });
    }
    Ok(rows)
}
