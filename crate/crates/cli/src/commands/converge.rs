use halfwall_core::convergence_curve;

use super::{both_layered, Report};
use crate::args::{flatten, parse_widths, ConvergeArgs};
use crate::error::CliError;
use crate::table::Table;

pub const COLUMNS: [&str; 6] = ["k", "alpha", "kind", "L", "error", "observed_order"];

/// Terminal observed order must land here for the sweep to pass.
pub const ORDER_WINDOW: (f64, f64) = (0.8, 1.2);

pub fn run(args: &ConvergeArgs) -> Result<Report, CliError> {
    let kinds = both_layered(&args.kind)?;
    let widths = if args.widths.is_empty() {
        parse_widths("0.1:0.5:7").map_err(CliError::Usage)?.0
    } else {
        flatten(&args.widths)
    };

    let mut table = Table::new(&COLUMNS);
    let mut passed = true;
    for &kind in &kinds {
        for &alpha in &args.alpha {
            for &k in &args.k {
                let rows = convergence_curve(k, alpha, kind, &widths)?;
                let terminal = rows.last().and_then(|r| r.order).unwrap_or(f64::NAN);
                passed &= (ORDER_WINDOW.0..=ORDER_WINDOW.1).contains(&terminal);
                for r in rows {
                    table.push(vec![
                        k.into(),
                        alpha.into(),
                        kind.as_str().into(),
                        r.width.into(),
                        r.error.into(),
                        r.order.into(),
                    ]);
                }
            }
        }
    }
    Ok(Report { table, passed, extra: None })
}
