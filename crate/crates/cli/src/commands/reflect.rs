use halfwall_core::analytic::reflection;
use halfwall_core::{PotentialKind, PotentialSpec};

use super::{has_override, realization, Report};
use crate::args::{flatten, ReflectArgs};
use crate::error::CliError;
use crate::table::Table;

pub const COLUMNS: [&str; 8] = ["k", "alpha", "kind", "L", "Re b", "Im b", "|b|", "arg b"];

pub fn run(args: &ReflectArgs) -> Result<Report, CliError> {
    let kind = PotentialKind::from(args.kind);
    let widths = flatten(&args.widths);
    if kind.is_layered() && widths.is_empty() {
        return Err(CliError::Usage(format!("--kind {kind} needs at least one --L")));
    }
    let fixed = has_override(kind, args.lambda, args.depth);
    // an explicit strength makes alpha irrelevant
    let alphas: Vec<Option<f64>> = if fixed {
        vec![None]
    } else {
        args.alpha.iter().copied().map(Some).collect()
    };

    let mut table = Table::new(&COLUMNS);
    for &alpha in &alphas {
        for &k in &args.k {
            let specs: Vec<(Option<f64>, PotentialSpec)> = if kind.is_layered() {
                widths
                    .iter()
                    .map(|&w| {
                        realization(kind, alpha.unwrap_or(0.0), w, args.lambda, args.depth).map(|s| (Some(w), s))
                    })
                    .collect::<Result<_, _>>()?
            } else {
                vec![(None, PotentialSpec::robin(alpha.unwrap_or(0.0))?)]
            };
            for (width, spec) in specs {
                let b = reflection(k, &spec)?.b;
                table.push(vec![
                    k.into(),
                    alpha.into(),
                    kind.as_str().into(),
                    width.into(),
                    b.re.into(),
                    b.im.into(),
                    b.norm().into(),
                    b.arg().into(),
                ]);
            }
        }
    }
    Ok(Report { table, passed: true, extra: None })
}

