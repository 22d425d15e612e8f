//! Closed-form generalized eigenfunctions of the half line `(-inf, 0]`.
//!
//! Every eigenfunction is normalized to unit incoming amplitude, so in the
//! free region it reads `e^{ikx} + b e^{-ikx}` and the reflection amplitude
//! `b` is the only exterior unknown. Behind a Dirichlet wall the interior
//! branch is `c (e^{iKx} - e^{-iKx})` with `K = k` for the delta layer and
//! `K = sqrt(k^2 + v)` inside a valley.

mod convergence;
mod eigenfunction;

pub use convergence::{convergence_curve, observed_order, ConvergenceRow};
pub use eigenfunction::{residuals_for, PiecewiseEigenfunction, ResidualReport};

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{require_finite, require_positive, Error, Result};
use crate::potential::PotentialSpec;

/// Exterior and interior amplitudes for one `(k, potential)` pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectionResult {
    /// Coefficient of the outgoing wave `e^{-ikx}`.
    pub b: Complex64,
    /// Coefficient of `e^{iKx}` inside the layer. The wall fixes the
    /// coefficient of `e^{-iKx}` to `-c`. `None` for the pure Robin case.
    pub c: Option<Complex64>,
}

/// `b = (k + i alpha) / (k - i alpha)`, the amplitude that makes
/// `e^{ikx} + b e^{-ikx}` satisfy `psi'(0) = alpha psi(0)`.
pub fn robin_reflection(k: f64, alpha: f64) -> Result<Complex64> {
    require_positive("k", k)?;
    require_finite("alpha", alpha)?;
    Ok(Complex64::new(k, alpha) / Complex64::new(k, -alpha))
}

/// Delta strength that reproduces the Robin parameter `alpha` as `L -> 0`:
/// `lambda = -(1/L + alpha)`.
pub fn calibrate_delta(width: f64, alpha: f64) -> Result<f64> {
    require_positive("L", width)?;
    require_finite("alpha", alpha)?;
    Ok(-(1.0 / width + alpha))
}

/// Valley depth that reproduces the Robin parameter `alpha` as `L -> 0`:
/// `v = (pi/(2L) + 2 alpha/pi)^2`.
///
/// The base `pi/(2L) + 2 alpha/pi` must be positive, otherwise the interior
/// phase `KL` lands on the wrong branch. For `alpha < 0` this requires
/// `L < -pi^2/(4 alpha)`.
pub fn calibrate_valley(width: f64, alpha: f64) -> Result<f64> {
    require_positive("L", width)?;
    require_finite("alpha", alpha)?;
    let base = PI / (2.0 * width) + 2.0 * alpha / PI;
    if base > 0.0 {
        Ok(base * base)
    } else {
        let threshold = -PI * PI / (4.0 * alpha);
        Err(Error::Domain(format!(
            "valley calibration for alpha = {alpha} needs L < -pi^2/(4 alpha) = {threshold}, got L = {width}"
        )))
    }
}

/// Reflection off a Dirichlet wall with `lambda * delta(x + L)` in front.
///
/// Uses `b = -(k e^{ikL} + lambda sin kL) / (k e^{ikL} + lambda sin kL e^{2ikL})`
/// and `c = k e^{-ikL} / (k e^{-ikL} + lambda sin kL)`. Neither denominator
/// can vanish for real `k > 0`: its imaginary part is `-k sin kL` and its
/// real part is then `k cos kL = +-k`.
pub fn delta_reflection(k: f64, width: f64, lambda: f64) -> Result<ReflectionResult> {
    require_positive("k", k)?;
    require_positive("L", width)?;
    require_finite("lambda", lambda)?;

    let phase = Complex64::from_polar(1.0, k * width);
    let ls = lambda * (k * width).sin();
    let forward = k * phase + ls;
    // Written as (-N)/D so that lambda = 0 gives exactly -1 + 0i.
    let b = (-forward) / (k * phase + ls * phase * phase);
    let back = k * phase.conj();
    let c = back / (back + ls);
    Ok(ReflectionResult { b, c: Some(c) })
}

/// Reflection off a Dirichlet wall with a flat well of depth `v` on `[-L, 0]`.
///
/// With `K = sqrt(k^2 + v)`, `S = sin KL`, `C = cos KL`:
/// `b = e^{-2ikL} (k S - i K C) / (k S + i K C)` and
/// `c = k e^{-ikL} / (K C - i k S)`. This is the cotangent form multiplied
/// through by `S`, so it stays finite where `KL` is a multiple of pi.
pub fn valley_reflection(k: f64, width: f64, depth: f64) -> Result<ReflectionResult> {
    require_positive("k", k)?;
    require_positive("L", width)?;
    require_finite("v", depth)?;
    if depth < 0.0 {
        return Err(Error::Domain(format!("valley depth v must be >= 0, got {depth}")));
    }

    let kk = (k * k + depth).sqrt();
    let (s, c) = (kk * width).sin_cos();
    let phase = Complex64::from_polar(1.0, -k * width);
    let num = Complex64::new(k * s, -kk * c);
    let den = Complex64::new(k * s, kk * c);
    let b = phase * phase * num / den;
    let c = k * phase / Complex64::new(kk * c, -k * s);
    Ok(ReflectionResult { b, c: Some(c) })
}

/// Solves the matching problem for any [`PotentialSpec`].
pub fn reflection(k: f64, spec: &PotentialSpec) -> Result<ReflectionResult> {
    match *spec {
        PotentialSpec::Robin { alpha } => Ok(ReflectionResult {
            b: robin_reflection(k, alpha)?,
            c: None,
        }),
        PotentialSpec::DeltaLayer { lambda, width } => delta_reflection(k, width, lambda),
        PotentialSpec::Valley { depth, width } => valley_reflection(k, width, depth),
    }
}

/// Interior wave number: `sqrt(k^2 + v)` in a valley, `k` otherwise.
pub fn interior_wave_number(k: f64, spec: &PotentialSpec) -> f64 {
    match *spec {
        PotentialSpec::Valley { depth, .. } => (k * k + depth).sqrt(),
        _ => k,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const I: Complex64 = Complex64::new(0.0, 1.0);

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1.0)
    }

    #[test]
    fn robin_trivial_cases() {
        assert_eq!(robin_reflection(1.0, 0.0).unwrap(), Complex64::new(1.0, 0.0));
        assert!(close(robin_reflection(1.0, 1.0).unwrap(), I, 1e-15));
        assert!(close(
            robin_reflection(2.0, -3.0).unwrap(),
            Complex64::new(-5.0, -12.0) / 13.0,
            1e-15
        ));
    }

    #[test]
    fn robin_rejects_bad_k() {
        assert!(robin_reflection(0.0, 0.0).is_err());
        assert!(robin_reflection(-1.0, 0.0).is_err());
        assert!(robin_reflection(f64::NAN, 0.0).is_err());
        assert!(robin_reflection(1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn calibrate_delta_examples() {
        assert_eq!(calibrate_delta(0.1, 0.0).unwrap(), -10.0);
        assert!((calibrate_delta(0.01, 1.0).unwrap() + 101.0).abs() < 1e-12);
        assert_eq!(calibrate_delta(1.0, -1.0).unwrap(), 0.0);
        assert!(calibrate_delta(0.0, 1.0).is_err());
        assert!(calibrate_delta(-0.5, 1.0).is_err());
    }

    #[test]
    fn calibrate_valley_examples() {
        assert!((calibrate_valley(0.5, 0.0).unwrap() - PI * PI).abs() < 1e-12);
        assert!((calibrate_valley(0.1, 0.0).unwrap() - (5.0 * PI).powi(2)).abs() < 1e-10);
        let expected = (5.0 * PI + 2.0 / PI).powi(2);
        assert!((calibrate_valley(0.1, 1.0).unwrap() - expected).abs() < 1e-10);
    }

    #[test]
    fn calibrate_valley_names_threshold() {
        let err = calibrate_valley(1.0, -5.0).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("L < -pi^2/(4 alpha)"), "{msg}");
        assert!(msg.contains(&format!("{}", PI * PI / 20.0)), "{msg}");
        // just under the threshold is fine
        assert!(calibrate_valley(PI * PI / 20.0 * 0.999, -5.0).is_ok());
        assert!(calibrate_valley(0.0, 1.0).is_err());
    }

    #[test]
    fn no_layer_is_a_dirichlet_wall() {
        let d = delta_reflection(1.0, 0.3, 0.0).unwrap();
        assert_eq!(d.b, Complex64::new(-1.0, 0.0));
        assert!(d.b.im.is_sign_positive());
        let v = valley_reflection(1.0, 0.3, 0.0).unwrap();
        assert!(close(v.b, Complex64::new(-1.0, 0.0), 1e-12));
    }

    #[test]
    fn calibrated_layers_approach_robin() {
        let target = I;
        let mut last_delta = f64::INFINITY;
        let mut last_valley = f64::INFINITY;
        for width in [0.1, 0.01, 0.001] {
            let d = delta_reflection(1.0, width, calibrate_delta(width, 1.0).unwrap()).unwrap();
            let v = valley_reflection(1.0, width, calibrate_valley(width, 1.0).unwrap()).unwrap();
            let ed = (d.b - target).norm();
            let ev = (v.b - target).norm();
            assert!(ed < 5.0 * width && ed < last_delta, "delta L={width}: {ed}");
            assert!(ev < 5.0 * width && ev < last_valley, "valley L={width}: {ev}");
            last_delta = ed;
            last_valley = ev;
        }
    }

    #[test]
    fn valley_is_finite_where_cot_blows_up() {
        // K L = pi exactly: sin KL = 0, the cotangent form is 0/0-like.
        let width = 0.5;
        let k = 1.0;
        let kk = PI / width;
        let depth = kk * kk - k * k;
        let r = valley_reflection(k, width, depth).unwrap();
        assert!(r.b.re.is_finite() && r.b.im.is_finite());
        assert!((r.b.norm() - 1.0).abs() < 1e-12);
        // S = 0 leaves b = -e^{-2ikL}
        assert!(close(r.b, -Complex64::from_polar(1.0, -2.0 * k * width), 1e-12));
    }

    #[test]
    fn delta_is_finite_at_removable_point() {
        // kL = pi: the two-factor interior expression is 0/0 there.
        let r = delta_reflection(PI, 1.0, -7.0).unwrap();
        let c = r.c.unwrap();
        assert!(c.re.is_finite() && c.im.is_finite());
        assert!((r.b.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn reflection_dispatches_on_kind() {
        let spec = PotentialSpec::Robin { alpha: 1.0 };
        let r = reflection(1.0, &spec).unwrap();
        assert!(r.c.is_none());
        assert!(close(r.b, I, 1e-15));
        assert_eq!(interior_wave_number(2.0, &PotentialSpec::Valley { depth: 5.0, width: 1.0 }), 3.0);
    }

    /// The two-factor interior amplitude, valid away from sin kL = 0.
    fn delta_c_two_factor(k: f64, width: f64, lambda: f64) -> Complex64 {
        let s = (k * width).sin();
        let den = k * Complex64::from_polar(1.0, -k * width) + lambda * s;
        let pre = 1.0 / (1.0 - Complex64::from_polar(1.0, 2.0 * k * width));
        pre * (-2.0 * I * k * s) / den
    }

    fn delta_b_paper(k: f64, width: f64, lambda: f64) -> Complex64 {
        let s = (k * width).sin();
        let e = Complex64::from_polar(1.0, k * width);
        -Complex64::from_polar(1.0, -2.0 * k * width) * (k * e + lambda * s) / (k * e.conj() + lambda * s)
    }

    fn valley_b_cot(k: f64, width: f64, depth: f64) -> Complex64 {
        let kk = (k * k + depth).sqrt();
        let cot = 1.0 / (kk * width).tan();
        (k - I * kk * cot) / (k + I * kk * cot) * Complex64::from_polar(1.0, -2.0 * k * width)
    }

    proptest! {
        #[test]
        fn all_reflections_are_unimodular(
            k in 1e-3f64..20.0,
            alpha in -50.0f64..50.0,
            lambda in -500.0f64..500.0,
            depth in 0.0f64..1e4,
            width in 1e-4f64..5.0,
        ) {
            prop_assert!((robin_reflection(k, alpha).unwrap().norm() - 1.0).abs() < 1e-12);
            prop_assert!((delta_reflection(k, width, lambda).unwrap().b.norm() - 1.0).abs() < 1e-12);
            prop_assert!((valley_reflection(k, width, depth).unwrap().b.norm() - 1.0).abs() < 1e-12);
        }

        #[test]
        fn robin_conjugation_symmetry(k in 1e-3f64..20.0, alpha in -50.0f64..50.0) {
            let plus = robin_reflection(k, alpha).unwrap();
            let minus = robin_reflection(k, -alpha).unwrap();
            prop_assert!((minus - plus.conj()).norm() < 1e-12);
        }

        #[test]
        fn stable_delta_forms_match_two_factor_forms(
            k in 0.05f64..10.0,
            width in 0.01f64..3.0,
            lambda in -100.0f64..100.0,
        ) {
            let s = (k * width).sin();
            prop_assume!(s.abs() > 1e-3);
            let r = delta_reflection(k, width, lambda).unwrap();
            let c = r.c.unwrap();
            let reference = delta_c_two_factor(k, width, lambda);
            prop_assert!((c - reference).norm() <= 1e-10 * reference.norm().max(1e-300));
            let b = delta_b_paper(k, width, lambda);
            prop_assert!((r.b - b).norm() <= 1e-10);
        }

        #[test]
        fn stable_valley_form_matches_cot_form(
            k in 0.05f64..10.0,
            width in 0.01f64..3.0,
            depth in 0.0f64..1e3,
        ) {
            let kk = (k * k + depth).sqrt();
            prop_assume!((kk * width).sin().abs() > 1e-3);
            let r = valley_reflection(k, width, depth).unwrap();
            let reference = valley_b_cot(k, width, depth);
            prop_assert!((r.b - reference).norm() <= 1e-10 * reference.norm());
        }

        #[test]
        fn zero_strength_layers_give_minus_one(k in 1e-3f64..20.0, width in 1e-4f64..5.0) {
            let minus_one = Complex64::new(-1.0, 0.0);
            prop_assert!((delta_reflection(k, width, 0.0).unwrap().b - minus_one).norm() < 1e-12);
            prop_assert!((valley_reflection(k, width, 0.0).unwrap().b - minus_one).norm() < 1e-12);
        }
    }
}
