//! Seeded self-test: one check per library invariant, reported
//! machine-readably. Checks keep running after a failure so a tightened
//! tolerance shows everything it breaks in one pass.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spin2mat::amplitudes::{
    amplitude_table, chi, closed_form_amplitude, spin_operator, Direction, ParameterPoint,
    SPIN_INDICES,
};
use spin2mat::diagonalizer::{
    bisect_recover, multistart_recover, recover_spectrum, residual, row_eigenvalue,
    verify_recovery, FreeAngle,
};
use spin2mat::generator::{classify, eigenvectors, generate, Spectrum};
use spin2mat::matrix;
use spin2mat::oracle::{eig5, match_spectra};
use spin2mat::{Complex64, Tolerances};

const PI: f64 = std::f64::consts::PI;
const TAU: f64 = std::f64::consts::TAU;

pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    /// Worst defect observed, comparable against `tolerance`.
    pub worst: f64,
    pub tolerance: f64,
}

fn cabs(z: Complex64) -> f64 {
    z.norm_sqr().sqrt()
}

fn direction(rng: &mut impl Rng) -> Direction {
    Direction::new(rng.gen_range(0.0..PI), rng.gen_range(0.0..TAU))
}

fn point(rng: &mut impl Rng) -> ParameterPoint {
    ParameterPoint::new(
        rng.gen_range(0.0..PI),
        rng.gen_range(0.0..TAU),
        rng.gen_range(0.0..PI),
        rng.gen_range(0.0..TAU),
    )
}

fn interior_point(rng: &mut impl Rng) -> ParameterPoint {
    ParameterPoint::new(
        rng.gen_range(0.05..PI - 0.05),
        rng.gen_range(0.0..TAU),
        rng.gen_range(0.05..PI - 0.05),
        rng.gen_range(0.0..TAU),
    )
}

fn spectrum(rng: &mut impl Rng) -> Spectrum {
    Spectrum::new(core::array::from_fn(|_| {
        Complex64::new(rng.gen_range(-7.0..7.0), rng.gen_range(-7.0..7.0))
    }))
}

fn real_spectrum(rng: &mut impl Rng) -> Spectrum {
    Spectrum::new(core::array::from_fn(|_| {
        Complex64::new(rng.gen_range(-8.0..8.0), 0.0)
    }))
}

fn imaginary_spectrum(rng: &mut impl Rng) -> Spectrum {
    Spectrum::new(core::array::from_fn(|_| {
        Complex64::new(0.0, rng.gen_range(-8.0..8.0))
    }))
}

/// Run every check with `seed`-derived sampling; same seed, same report.
pub fn run(seed: u64, tols: &Tolerances) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    let push = |name: &'static str, worst: f64, tolerance: f64, checks: &mut Vec<Check>| {
        checks.push(Check {
            name,
            pass: worst <= tolerance,
            worst,
            tolerance,
        });
    };

    // Amplitude-table unitarity.
    let mut worst = 0.0_f64;
    for _ in 0..200 {
        let t = amplitude_table(&point(&mut rng)).entries;
        let gram = matrix::mat_mul(&matrix::adjoint(&t), &t);
        worst = worst.max(matrix::max_abs(&matrix::mat_sub(
            &gram,
            &matrix::identity(),
        )));
    }
    push("table-unitarity", worst, tols.unitarity, &mut checks);

    // Spin eigenvectors solve their eigen-equation.
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let d = direction(&mut rng);
        let op = spin_operator(d);
        for &m in &SPIN_INDICES {
            let v = chi(m, d).expect("valid spin index").components;
            let mv = matrix::mat_vec(&op, &v);
            let lv = matrix::vec_scale(&v, Complex64::new(m as f64, 0.0));
            worst = worst.max(matrix::vec_norm(&matrix::vec_sub(&mv, &lv)));
        }
    }
    push(
        "chi-eigen-equation",
        worst,
        tols.eigen_equation,
        &mut checks,
    );

    // The spin operator is exactly Hermitian.
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let op = spin_operator(direction(&mut rng));
        worst = worst.max(matrix::max_abs(&matrix::mat_sub(
            &op,
            &matrix::adjoint(&op),
        )));
    }
    push("spin-operator-hermiticity", worst, 0.0, &mut checks);

    // Amplitudes chain through any intermediate axis.
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let (c, d, b) = (
            direction(&mut rng),
            direction(&mut rng),
            direction(&mut rng),
        );
        let t_cb = amplitude_table(&ParameterPoint::from_axes(c, b)).entries;
        let t_db = amplitude_table(&ParameterPoint::from_axes(d, b)).entries;
        let t_cd = amplitude_table(&ParameterPoint::from_axes(c, d)).entries;
        let chained = matrix::mat_mul(&t_db, &t_cd);
        worst = worst.max(matrix::max_abs(&matrix::mat_sub(&chained, &t_cb)));
    }
    push("interdependence-law", worst, tols.unitarity, &mut checks);

    // Closed-form corner amplitudes agree with the table.
    let mut worst = 0.0_f64;
    for _ in 0..200 {
        let x = point(&mut rng);
        let table = amplitude_table(&x);
        for which in [(1, 1), (1, 2), (5, 5)] {
            let closed = closed_form_amplitude(which, &x).expect("supported corner");
            let entry = table.entry(which.0, which.1).expect("in range");
            worst = worst.max(cabs(closed - entry));
        }
    }
    push("closed-form-corners", worst, tols.unitarity, &mut checks);

    // Coincident axes degenerate to the identity table.
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let d = direction(&mut rng);
        let t = amplitude_table(&ParameterPoint::from_axes(d, d)).entries;
        worst = worst.max(matrix::max_abs(&matrix::mat_sub(&t, &matrix::identity())));
    }
    push("identity-degeneration", worst, tols.unitarity, &mut checks);

    // The seven structural families. Each closure builds one instance; the
    // check passes when every instance carries the expected flags.
    let family = |name: &'static str,
                  rng: &mut ChaCha8Rng,
                  build: &mut dyn FnMut(&mut ChaCha8Rng) -> (ParameterPoint, Spectrum),
                  expect: &dyn Fn(&spin2mat::generator::FamilyFlags) -> bool,
                  checks: &mut Vec<Check>| {
        let mut failures = 0.0_f64;
        for _ in 0..50 {
            let (x, s) = build(rng);
            let m = generate(&x, &s).entries;
            if !expect(&classify(&m, tols.classify)) {
                failures += 1.0;
            }
        }
        checks.push(Check {
            name,
            pass: failures == 0.0,
            worst: failures,
            tolerance: 0.0,
        });
    };
    family(
        "family-diagonal",
        &mut rng,
        &mut |rng| {
            let d = direction(rng);
            (ParameterPoint::from_axes(d, d), spectrum(rng))
        },
        &|f| f.diagonal,
        &mut checks,
    );
    family(
        "family-hermitian",
        &mut rng,
        &mut |rng| (point(rng), real_spectrum(rng)),
        &|f| f.hermitian,
        &mut checks,
    );
    family(
        "family-symmetric",
        &mut rng,
        &mut |rng| {
            let phi = rng.gen_range(0.0..TAU);
            let x = ParameterPoint::new(rng.gen_range(0.0..PI), phi, rng.gen_range(0.0..PI), phi);
            (x, spectrum(rng))
        },
        &|f| f.symmetric,
        &mut checks,
    );
    family(
        "family-real-eigenvectors",
        &mut rng,
        &mut |rng| {
            let phi = rng.gen_range(0.0..TAU);
            let x = ParameterPoint::new(rng.gen_range(0.0..PI), phi, rng.gen_range(0.0..PI), phi);
            (x, spectrum(rng))
        },
        &|f| f.real_eigenvectors,
        &mut checks,
    );
    family(
        "family-anti-hermitian",
        &mut rng,
        &mut |rng| (point(rng), imaginary_spectrum(rng)),
        &|f| f.anti_hermitian,
        &mut checks,
    );
    family(
        "family-imaginary-symmetric",
        &mut rng,
        &mut |rng| {
            let phi = rng.gen_range(0.0..TAU);
            let x = ParameterPoint::new(rng.gen_range(0.0..PI), phi, rng.gen_range(0.0..PI), phi);
            (x, imaginary_spectrum(rng))
        },
        &|f| f.imaginary_symmetric,
        &mut checks,
    );
    family(
        "family-general",
        &mut rng,
        &mut |rng| {
            let x = loop {
                let x = interior_point(rng);
                let [t, p, tp, pp] = x.angles();
                let gap = (p - pp).rem_euclid(TAU);
                if gap.min(TAU - gap) > 0.2 && (t - tp).abs() > 0.2 {
                    break x;
                }
            };
            let s = Spectrum::new(core::array::from_fn(|_| {
                let sign = |b: bool| if b { 1.0 } else { -1.0 };
                Complex64::new(
                    sign(rng.gen_bool(0.5)) * rng.gen_range(0.5..7.0),
                    sign(rng.gen_bool(0.5)) * rng.gen_range(0.5..7.0),
                )
            }));
            (x, s)
        },
        &|f| {
            !f.diagonal
                && !f.hermitian
                && !f.anti_hermitian
                && !f.symmetric
                && !f.imaginary_symmetric
        },
        &mut checks,
    );

    // Generated matrices satisfy the eigen-equation.
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let x = point(&mut rng);
        let s = spectrum(&mut rng);
        let m = generate(&x, &s).entries;
        let mut pairs = eigenvectors(&x);
        for (pair, value) in pairs.iter_mut().zip(s.values.iter()) {
            pair.value = *value;
        }
        for pair in &pairs {
            let mv = matrix::mat_vec(&m, &pair.vector);
            let lv = matrix::vec_scale(&pair.vector, pair.value);
            worst = worst.max(matrix::vec_norm(&matrix::vec_sub(&mv, &lv)));
        }
    }
    push(
        "generated-eigen-equation",
        worst,
        tols.eigen_equation,
        &mut checks,
    );

    // The residual sum vanishes at the generating point (scaled).
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let x = point(&mut rng);
        let s = spectrum(&mut rng);
        let m = generate(&x, &s).entries;
        let scale = matrix::max_abs(&m).max(1.0);
        worst = worst.max(cabs(residual(&m, &x, tols).value) / scale);
    }
    push("residual-root", worst, tols.residual_root, &mut checks);

    // Quotient and cross-multiplied residual forms tell the same story.
    let mut worst = 0.0_f64;
    for _ in 0..50 {
        let x = point(&mut rng);
        let m = generate(&x, &spectrum(&mut rng)).entries;
        let trial = point(&mut rng);
        let vectors: Vec<_> = (1..=5)
            .map(|i| {
                core::array::from_fn::<Complex64, 5, _>(|k| {
                    spin2mat::amplitudes::xi(i, k + 1, &trial).expect("in range")
                })
            })
            .collect();
        for (i, v) in vectors.iter().enumerate() {
            let mv = matrix::mat_vec(&m, v);
            for r in 0..4 {
                for s in r + 1..5 {
                    let (Some(er), Some(es)) = (
                        row_eigenvalue(&m, i + 1, r + 1, &trial, tols).expect("in range"),
                        row_eigenvalue(&m, i + 1, s + 1, &trial, tols).expect("in range"),
                    ) else {
                        continue;
                    };
                    let bracket = v[s] * mv[r] - v[r] * mv[s];
                    let rebuilt = (er - es) * v[r] * v[s];
                    worst = worst.max(cabs(bracket - rebuilt));
                }
            }
        }
    }
    push("per-row-consistency", worst, 1e-9, &mut checks);

    // 1-D bisection round-trips every axis.
    let frees = [
        FreeAngle::Theta,
        FreeAngle::Phi,
        FreeAngle::ThetaPrime,
        FreeAngle::PhiPrime,
    ];
    let mut worst = 0.0_f64;
    for _ in 0..5 {
        let x = interior_point(&mut rng);
        let s = spectrum(&mut rng);
        let m = generate(&x, &s).entries;
        for (axis, free) in frees.iter().enumerate() {
            match bisect_recover(&m, &x, *free, free.range(), 1e-8, tols) {
                Ok(recovered) => {
                    let gap = {
                        let raw = (recovered.angles()[axis] - x.angles()[axis]).rem_euclid(TAU);
                        raw.min(TAU - raw)
                    };
                    worst = worst.max(gap);
                }
                Err(_) => worst = worst.max(f64::INFINITY),
            }
        }
    }
    push("bisection-round-trip", worst, 1e-6, &mut checks);

    // The independent eigensolver reproduces recovered spectra.
    let mut worst = 0.0_f64;
    for _ in 0..25 {
        let x = point(&mut rng);
        let s = spectrum(&mut rng);
        let m = generate(&x, &s).entries;
        let analytic = recover_spectrum(&m, &x, tols).expect("generating point is valid");
        match eig5(&m, tols).and_then(|found| match_spectra(&found, &analytic.pairs, 1e-8)) {
            Ok(matched) => worst = worst.max(matched.max_value_error),
            Err(_) => worst = worst.max(f64::INFINITY),
        }
    }
    push("oracle-equivalence", worst, 1e-8, &mut checks);

    // Multistart finds a verified root on Hermitian instances.
    let mut failures = 0.0_f64;
    for _ in 0..3 {
        let x = interior_point(&mut rng);
        let s = real_spectrum(&mut rng);
        let m = generate(&x, &s).entries;
        let ok = multistart_recover(&m, 8, 1e-8, tols)
            .map(|recovered| verify_recovery(&m, &recovered, tols.verify, tols).pass)
            .unwrap_or(false);
        if !ok {
            failures += 1.0;
        }
    }
    checks.push(Check {
        name: "multistart-recovery",
        pass: failures == 0.0,
        worst: failures,
        tolerance: 0.0,
    });

    checks
}
