use halfwall_core::analytic::{reflection, robin_reflection};
use halfwall_core::oracle::oracle_reflection;
use halfwall_core::{PotentialKind, PotentialSpec};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{both_layered, realization, Report};
use crate::args::{flatten, OracleArgs};
use crate::error::CliError;
use crate::table::Table;

pub const COLUMNS: [&str; 8] = [
    "k",
    "L",
    "kind",
    "Re b_analytic",
    "Im b_analytic",
    "Re b_oracle",
    "Im b_oracle",
    "|difference|",
];

/// Largest relative difference for which the suite passes.
pub const TOLERANCE: f64 = 1e-7;

/// Ranges of the random suite.
const K_RANGE: (f64, f64) = (0.2, 5.0);
const WIDTH_RANGE: (f64, f64) = (0.05, 1.0);
const LAMBDA_MAX: f64 = 20.0;
const DEPTH_MAX: f64 = 300.0;

struct Case {
    k: f64,
    spec: PotentialSpec,
}

fn random_cases(args: &OracleArgs, kinds: &[PotentialKind]) -> Result<Vec<Case>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut cases = Vec::with_capacity(args.samples * kinds.len());
    for _ in 0..args.samples {
        // draw every field regardless of --kind so that a seed always means
        // the same tuples
        let k = rng.gen_range(K_RANGE.0..K_RANGE.1);
        let width = rng.gen_range(WIDTH_RANGE.0..WIDTH_RANGE.1);
        let lambda = rng.gen_range(-LAMBDA_MAX..LAMBDA_MAX);
        let depth = rng.gen_range(0.0..DEPTH_MAX);
        for &kind in kinds {
            let spec = if args.against_robin {
                PotentialSpec::calibrated(kind, args.alpha, width)?
            } else {
                match kind {
                    PotentialKind::DeltaLayer => PotentialSpec::delta_layer(lambda, width)?,
                    _ => PotentialSpec::valley(depth, width)?,
                }
            };
            cases.push(Case { k, spec });
        }
    }
    Ok(cases)
}

fn explicit_cases(args: &OracleArgs, kinds: &[PotentialKind]) -> Result<Vec<Case>, CliError> {
    let widths = flatten(&args.widths);
    if widths.is_empty() {
        return Err(CliError::Usage("explicit --k values need at least one --L".into()));
    }
    let mut cases = Vec::new();
    for &kind in kinds {
        for &k in &args.k {
            for &w in &widths {
                let (lambda, depth) = if args.against_robin { (None, None) } else { (args.lambda, args.depth) };
                cases.push(Case { k, spec: realization(kind, args.alpha, w, lambda, depth)? });
            }
        }
    }
    Ok(cases)
}

pub fn run(args: &OracleArgs) -> Result<Report, CliError> {
    let kinds = both_layered(&args.kind)?;
    let cases = if args.k.is_empty() {
        if !args.widths.is_empty() {
            return Err(CliError::Usage("--L needs explicit --k values".into()));
        }
        random_cases(args, &kinds)?
    } else {
        explicit_cases(args, &kinds)?
    };
    if cases.is_empty() {
        return Err(CliError::Usage("nothing to compare".into()));
    }

    let results: Vec<(Complex64, Complex64)> = cases
        .par_iter()
        .map(|case| {
            let analytic = reflection(case.k, &case.spec)?.b;
            let reference = if args.against_robin {
                robin_reflection(case.k, args.alpha)?
            } else {
                oracle_reflection(&case.spec, case.k, args.h)?
            };
            Ok((analytic, reference))
        })
        .collect::<Result<_, halfwall_core::Error>>()?;

    let mut table = Table::new(&COLUMNS);
    let mut worst: f64 = 0.0;
    for (case, (analytic, reference)) in cases.iter().zip(results) {
        let diff = (analytic - reference).norm() / reference.norm();
        worst = worst.max(diff);
        table.push(vec![
            case.k.into(),
            case.spec.width().into(),
            case.spec.kind().as_str().into(),
            analytic.re.into(),
            analytic.im.into(),
            reference.re.into(),
            reference.im.into(),
            diff.into(),
        ]);
    }
    Ok(Report { table, passed: worst < TOLERANCE, extra: None })
}
