//! The release gate: nine numbered checks with explicit tolerances and
//! runtime budgets. Each test prints one PASS line; a failed assertion or a
//! blown budget fails the build.

mod common;

use std::time::Instant;

use spin2mat::amplitudes::{
    amplitude_table, closed_form_amplitude, spin_operator, Direction, ParameterPoint,
};
use spin2mat::diagonalizer::{bisect_recover, recover_spectrum, verify_recovery, FreeAngle};
use spin2mat::generator::{classify, eigenvectors, generate, Spectrum};
use spin2mat::matrix;
use spin2mat::oracle::{eig5, match_spectra};
use spin2mat::{Complex64, Error, Tolerances};

fn finish(number: usize, name: &str, started: Instant, budget_s: f64) {
    let elapsed = started.elapsed().as_secs_f64();
    println!("acceptance {number} ({name}): PASS in {elapsed:.2}s (budget {budget_s}s)");
    assert!(
        elapsed < budget_s,
        "criterion {number} overran its {budget_s}s budget: {elapsed:.2}s"
    );
}

fn cabs(z: Complex64) -> f64 {
    z.norm_sqr().sqrt()
}

#[test]
fn criterion_1_orthonormality() {
    let started = Instant::now();
    let mut rng = common::rng(101);
    for _ in 0..1000 {
        let point = common::random_point(&mut rng);
        let t = amplitude_table(&point).entries;
        let gram = matrix::mat_mul(&matrix::adjoint(&t), &t);
        let err = matrix::max_abs(&matrix::mat_sub(&gram, &matrix::identity()));
        assert!(
            err < 1e-12,
            "unitarity defect {err} at {:?}",
            point.angles()
        );
    }
    finish(1, "orthonormality", started, 5.0);
}

#[test]
fn criterion_2_eigen_equation() {
    let started = Instant::now();
    let mut rng = common::rng(102);
    for _ in 0..1000 {
        let point = common::random_point(&mut rng);
        let spectrum = common::random_spectrum(&mut rng);
        let m = generate(&point, &spectrum).entries;
        let mut pairs = eigenvectors(&point);
        for (pair, value) in pairs.iter_mut().zip(spectrum.values.iter()) {
            pair.value = *value;
        }
        for pair in &pairs {
            let mv = matrix::mat_vec(&m, &pair.vector);
            let lv = matrix::vec_scale(&pair.vector, pair.value);
            let err = matrix::vec_norm(&matrix::vec_sub(&mv, &lv));
            assert!(err < 1e-10, "eigen-equation residual {err}");
        }
    }
    finish(2, "eigen-equation", started, 10.0);
}

#[test]
fn criterion_3_spin_operator_reproduction() {
    let started = Instant::now();
    let mut rng = common::rng(103);
    let weights = Spectrum::from_reals([2.0, 1.0, 0.0, -1.0, -2.0]);
    for _ in 0..100 {
        let axis = common::random_direction(&mut rng);
        let point = ParameterPoint::from_axes(axis, Direction::new(0.0, 0.0));
        let m = generate(&point, &weights).entries;
        let err = matrix::max_abs(&matrix::mat_sub(&m, &spin_operator(axis)));
        assert!(err < 1e-12, "spin operator mismatch {err}");
    }
    finish(3, "spin-operator reproduction", started, 2.0);
}

#[test]
fn criterion_4_family_table() {
    let started = Instant::now();
    let mut rng = common::rng(104);
    let tol = 1e-10;

    // Coincident axes (or the all-zero special case) give a diagonal matrix.
    for k in 0..200 {
        let point = if k % 2 == 0 {
            let d = common::random_direction(&mut rng);
            ParameterPoint::from_axes(d, d)
        } else {
            ParameterPoint::new(0.0, 0.0, 0.0, 0.0)
        };
        let m = generate(&point, &common::random_spectrum(&mut rng)).entries;
        assert!(classify(&m, tol).diagonal);
    }

    // Real spectra give Hermitian matrices at any point.
    for _ in 0..200 {
        let m = generate(
            &common::random_point(&mut rng),
            &common::random_real_spectrum(&mut rng),
        )
        .entries;
        assert!(classify(&m, tol).hermitian);
    }

    // Equal azimuths give symmetric matrices for any spectrum.
    for _ in 0..200 {
        let (point, _) = equal_azimuth_point(&mut rng);
        let m = generate(&point, &common::random_spectrum(&mut rng)).entries;
        assert!(classify(&m, tol).symmetric);
    }

    // Equal azimuths also make every eigenvector real.
    for _ in 0..200 {
        let (point, _) = equal_azimuth_point(&mut rng);
        let m = generate(&point, &common::random_spectrum(&mut rng)).entries;
        assert!(classify(&m, tol).real_eigenvectors);
        for pair in eigenvectors(&point) {
            for comp in pair.vector {
                assert!(comp.im.abs() < 1e-10, "imaginary component {}", comp.im);
            }
        }
    }

    // Imaginary spectra give anti-Hermitian matrices.
    for _ in 0..200 {
        let m = generate(
            &common::random_point(&mut rng),
            &common::random_imaginary_spectrum(&mut rng),
        )
        .entries;
        assert!(classify(&m, tol).anti_hermitian);
    }

    // Imaginary spectra with equal azimuths: imaginary but symmetric.
    for _ in 0..200 {
        let (point, _) = equal_azimuth_point(&mut rng);
        let m = generate(&point, &common::random_imaginary_spectrum(&mut rng)).entries;
        let flags = classify(&m, tol);
        assert!(flags.imaginary_symmetric && flags.symmetric && flags.anti_hermitian);
    }

    // General case: none of the special structures appears.
    for _ in 0..200 {
        let point = general_position_point(&mut rng);
        let spectrum = general_position_spectrum(&mut rng);
        let m = generate(&point, &spectrum).entries;
        let flags = classify(&m, tol);
        assert!(
            !flags.diagonal
                && !flags.hermitian
                && !flags.anti_hermitian
                && !flags.symmetric
                && !flags.imaginary_symmetric,
            "unexpected structure {flags:?} at {:?}",
            point.angles()
        );
    }

    finish(4, "family table", started, 10.0);
}

/// Random point with φ = φ′ (the azimuth-matched families).
fn equal_azimuth_point(rng: &mut impl rand::Rng) -> (ParameterPoint, f64) {
    let phi = rng.gen_range(0.0..common::TAU);
    let point = ParameterPoint::new(
        rng.gen_range(0.0..common::PI),
        phi,
        rng.gen_range(0.0..common::PI),
        phi,
    );
    (point, phi)
}

/// Point with the axes kept well apart and azimuths well separated, so no
/// family rule applies.
fn general_position_point(rng: &mut impl rand::Rng) -> ParameterPoint {
    loop {
        let point = common::random_interior_point(rng, 0.2);
        let [t, p, tp, pp] = point.angles();
        let azimuth_gap = {
            let raw = (p - pp).rem_euclid(common::TAU);
            raw.min(common::TAU - raw)
        };
        if azimuth_gap > 0.2 && (t - tp).abs() > 0.2 {
            return point;
        }
    }
}

/// Spectrum with every value far from the real and imaginary axes.
fn general_position_spectrum(rng: &mut impl rand::Rng) -> Spectrum {
    Spectrum::new(core::array::from_fn(|_| {
        let sign = |b: bool| if b { 1.0 } else { -1.0 };
        Complex64::new(
            sign(rng.gen_bool(0.5)) * rng.gen_range(0.5..7.0),
            sign(rng.gen_bool(0.5)) * rng.gen_range(0.5..7.0),
        )
    }))
}

#[test]
fn criterion_5_interdependence_law() {
    let started = Instant::now();
    let mut rng = common::rng(105);
    for _ in 0..200 {
        let c = common::random_direction(&mut rng);
        let d = common::random_direction(&mut rng);
        let b = common::random_direction(&mut rng);
        let t_cb = amplitude_table(&ParameterPoint::from_axes(c, b)).entries;
        let t_db = amplitude_table(&ParameterPoint::from_axes(d, b)).entries;
        let t_cd = amplitude_table(&ParameterPoint::from_axes(c, d)).entries;
        let chained = matrix::mat_mul(&t_db, &t_cd);
        let err = matrix::max_abs(&matrix::mat_sub(&chained, &t_cb));
        assert!(err < 1e-12, "chain law defect {err}");
    }
    finish(5, "interdependence law", started, 5.0);
}

/// The corner amplitude (1,1) written out longhand: five ladder terms in
/// e^{ik(φ−φ′)}, k = 2..−2.
fn longhand_corner_11(point: &ParameterPoint) -> Complex64 {
    let [t, p, tp, pp] = point.angles();
    let d = p - pp;
    let e = |k: f64| Complex64::new((k * d).cos(), (k * d).sin());
    let (c2, s2) = ((t / 2.0).cos().powi(2), (t / 2.0).sin().powi(2));
    let (c2p, s2p) = ((tp / 2.0).cos().powi(2), (tp / 2.0).sin().powi(2));
    let (st, stp) = (t.sin(), tp.sin());
    e(2.0) * (c2 * c2 * c2p * c2p)
        + e(1.0) * (stp * st * c2p * c2)
        + Complex64::new(0.375 * stp * stp * st * st, 0.0)
        + e(-1.0) * (stp * st * s2p * s2)
        + e(-2.0) * (s2 * s2 * s2p * s2p)
}

/// The corner amplitude (5,5) exactly as printed in the source formula —
/// including its first term, which duplicates the cos⁴cos⁴ of the last term
/// instead of mirroring it to sin⁴sin⁴. Kept verbatim to demonstrate the
/// discrepancy; the library's closed form carries the repaired term.
fn longhand_corner_55_misprinted(point: &ParameterPoint) -> Complex64 {
    let [t, p, tp, pp] = point.angles();
    let d = p - pp;
    let e = |k: f64| Complex64::new((k * d).cos(), (k * d).sin());
    let (c2, s2) = ((t / 2.0).cos().powi(2), (t / 2.0).sin().powi(2));
    let (c2p, s2p) = ((tp / 2.0).cos().powi(2), (tp / 2.0).sin().powi(2));
    let (st, stp) = (t.sin(), tp.sin());
    e(2.0) * (c2 * c2 * c2p * c2p)
        + e(1.0) * (stp * st * s2p * s2)
        + Complex64::new(0.375 * stp * stp * st * st, 0.0)
        + e(-1.0) * (stp * st * c2p * c2)
        + e(-2.0) * (c2 * c2 * c2p * c2p)
}

#[test]
fn criterion_6_closed_form_oracle() {
    let started = Instant::now();
    let mut rng = common::rng(106);
    let mut worst_misprint = 0.0_f64;
    for _ in 0..1000 {
        let point = common::random_point(&mut rng);
        let table = amplitude_table(&point);

        let entry_11 = table.entry(1, 1).unwrap();
        assert!(cabs(longhand_corner_11(&point) - entry_11) < 1e-12);
        assert!(cabs(closed_form_amplitude((1, 1), &point).unwrap() - entry_11) < 1e-12);

        let entry_55 = table.entry(5, 5).unwrap();
        assert!(cabs(closed_form_amplitude((5, 5), &point).unwrap() - entry_55) < 1e-12);
        worst_misprint = worst_misprint.max(cabs(longhand_corner_55_misprinted(&point) - entry_55));
    }
    // The printed (5,5) form is wrong somewhere in the sampled set — the
    // discrepancy must be plainly visible, not a rounding artifact.
    assert!(
        worst_misprint > 1e-3,
        "misprinted (5,5) unexpectedly matches: worst {worst_misprint:.3e}"
    );
    finish(6, "closed-form oracle", started, 5.0);
}

#[test]
fn criterion_7_bisection_round_trip() {
    let started = Instant::now();
    let mut rng = common::rng(107);
    let tols = Tolerances::default();
    let frees = [
        FreeAngle::Theta,
        FreeAngle::Phi,
        FreeAngle::ThetaPrime,
        FreeAngle::PhiPrime,
    ];
    for _ in 0..100 {
        // Polar angles stay off the poles, where the matching azimuth is not
        // identifiable and "the" angle to recover stops being well defined.
        let point = common::random_interior_point(&mut rng, 0.05);
        let spectrum = common::random_spectrum(&mut rng);
        let m = generate(&point, &spectrum).entries;
        let truth = point.angles();
        let mut reference = eigenvectors(&point);
        for (pair, value) in reference.iter_mut().zip(spectrum.values.iter()) {
            pair.value = *value;
        }
        for (axis, free) in frees.iter().enumerate() {
            let recovered = bisect_recover(&m, &point, *free, free.range(), 1e-8, &tols)
                .unwrap_or_else(|e| panic!("axis {axis} at {truth:?}: {e}"));
            let gap = {
                let raw = (recovered.angles()[axis] - truth[axis]).rem_euclid(common::TAU);
                raw.min(common::TAU - raw)
            };
            assert!(gap < 1e-6, "axis {axis} recovered {gap:.2e} away");
            assert!(verify_recovery(&m, &recovered, tols.verify, &tols).pass);

            let result = recover_spectrum(&m, &recovered, &tols).unwrap();
            let matched = match_spectra(&result.pairs, &reference, 1e-6).unwrap();
            assert!(matched.max_value_error < 1e-6);
        }
    }
    finish(7, "bisection round-trip", started, 60.0);
}

#[test]
fn criterion_8_oracle_equivalence() {
    let started = Instant::now();
    let mut rng = common::rng(108);
    let tols = Tolerances::default();
    for _ in 0..200 {
        let point = common::random_point(&mut rng);
        let spectrum = common::random_spectrum(&mut rng);
        let m = generate(&point, &spectrum).entries;
        let mut reference = eigenvectors(&point);
        for (pair, value) in reference.iter_mut().zip(spectrum.values.iter()) {
            pair.value = *value;
        }
        let found = eig5(&m, &tols).unwrap();
        let matched = match_spectra(&found, &reference, 1e-8).unwrap();
        assert!(matched.max_value_error < 1e-8);
        assert!(
            matched.max_vector_error < 1e-6,
            "vector error {:.3e}",
            matched.max_vector_error
        );
    }
    finish(8, "oracle equivalence", started, 30.0);
}

#[test]
fn criterion_9_multistart_recovery() {
    let started = Instant::now();
    let mut rng = common::rng(109);
    let tols = Tolerances::default();
    let mut successes = 0;
    for _ in 0..50 {
        let point = common::random_point(&mut rng);
        let spectrum = common::separated_real_spectrum(&mut rng, 0.05);
        let m = generate(&point, &spectrum).entries;
        match spin2mat::diagonalizer::multistart_recover(&m, 8, 1e-8, &tols) {
            Ok(recovered) => {
                assert!(verify_recovery(&m, &recovered, tols.verify, &tols).pass);
                let result = recover_spectrum(&m, &recovered, &tols).unwrap();
                let mut got: Vec<f64> = result.pairs.iter().map(|p| p.value.re).collect();
                let mut want: Vec<f64> = spectrum.values.iter().map(|z| z.re).collect();
                got.sort_by(f64::total_cmp);
                want.sort_by(f64::total_cmp);
                if got
                    .iter()
                    .zip(want.iter())
                    .all(|(a, b)| (a - b).abs() < 1e-5)
                {
                    successes += 1;
                }
            }
            // Failures must come out through the documented error, with
            // diagnostics attached — anything else is a bug.
            Err(Error::RecoveryFailed { .. }) => {}
            Err(other) => panic!("undocumented failure path: {other:?}"),
        }
    }
    assert!(
        successes >= 45,
        "only {successes}/50 instances recovered (need ≥ 45)"
    );
    println!("acceptance 9: {successes}/50 instances recovered");
    finish(9, "multistart recovery", started, 300.0);
}
