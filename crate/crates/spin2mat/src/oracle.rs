//! Independent eigensolver used to cross-check the analytic machinery.
//!
//! Deliberately shares nothing with the amplitude construction: the
//! characteristic polynomial comes from the Faddeev–LeVerrier recurrence, its
//! roots from a Durand–Kerner iteration, the eigenvectors from shifted
//! inverse iteration, and each eigenvalue is polished with a final Rayleigh
//! quotient. Results are checked against the eigen-equation before being
//! returned, so a successful call is self-certifying.

use alloc::vec::Vec;

use crate::error::Error;
use crate::generator::EigenPair;
use crate::math;
use crate::matrix::{self, Lu, Matrix5, Vector5};
use crate::tolerances::Tolerances;
use crate::Complex64;

/// How a found spectrum lines up with a reference one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumMatch {
    /// `permutation[i]` is the found index paired with reference slot `i`.
    pub permutation: [usize; 5],
    /// Largest |λ_found − λ_ref| over the pairing.
    pub max_value_error: f64,
    /// Largest phase-aligned eigenvector distance over the pairing:
    /// min_α ‖e^{iα}u − v‖ = √(2 − 2|⟨u,v⟩|) for unit vectors.
    pub max_vector_error: f64,
}

/// Coefficients of det(zI − M): index k holds the coefficient of z^k, with
/// the leading coefficient fixed at 1.
fn char_poly(m: &Matrix5) -> [Complex64; 6] {
    // Faddeev–LeVerrier: Mₖ = M(Mₖ₋₁ + cₖ₋₁I), cₖ = −tr(Mₖ)/k.
    let mut poly = [matrix::ZERO; 6];
    poly[5] = matrix::ONE;
    let mut mk = *m;
    for k in 1..=5 {
        let ck = -matrix::trace(&mk) / Complex64::new(k as f64, 0.0);
        poly[5 - k] = ck;
        if k < 5 {
            let mut shifted = mk;
            for d in 0..5 {
                shifted[d][d] += ck;
            }
            mk = matrix::mat_mul(m, &shifted);
        }
    }
    poly
}

fn eval_poly(poly: &[Complex64; 6], z: Complex64) -> Complex64 {
    let mut acc = poly[5];
    for k in (0..5).rev() {
        acc = acc * z + poly[k];
    }
    acc
}

/// All five roots of a monic quintic by simultaneous Durand–Kerner iteration.
fn durand_kerner(poly: &[Complex64; 6]) -> [Complex64; 5] {
    // Cauchy bound: every root lies inside |z| ≤ 1 + max|cₖ|.
    let mut radius = 0.0_f64;
    for c in poly.iter().take(5) {
        radius = radius.max(math::cabs(*c));
    }
    radius += 1.0;

    let mut roots = [matrix::ZERO; 5];
    for (k, root) in roots.iter_mut().enumerate() {
        // Distinct start angles, deliberately off any symmetry axis.
        *root = math::cis(math::TAU * k as f64 / 5.0 + 0.4) * radius * 0.8;
    }
    for _ in 0..500 {
        let mut moved = 0.0_f64;
        let mut scale = 1.0_f64;
        for k in 0..5 {
            let zk = roots[k];
            let mut denom = matrix::ONE;
            for (j, zj) in roots.iter().enumerate() {
                if j != k {
                    denom *= zk - zj;
                }
            }
            if math::cabs(denom) < 1e-300 {
                // Coincident iterates: nudge apart and retry next sweep.
                roots[k] += Complex64::new(1e-8 * (k + 1) as f64, 1e-8);
                moved = f64::INFINITY;
                continue;
            }
            let step = eval_poly(poly, zk) / denom;
            roots[k] = zk - step;
            moved = moved.max(math::cabs(step));
            scale = scale.max(math::cabs(roots[k]));
        }
        if moved <= 1e-15 * scale {
            break;
        }
    }
    roots
}

fn rayleigh(m: &Matrix5, unit: &Vector5) -> Complex64 {
    matrix::vec_dot(unit, &matrix::mat_vec(m, unit))
}

/// Eigenvector for an approximate eigenvalue by shifted inverse iteration.
/// The shift is perturbed only if M − λI has an exactly zero pivot.
fn inverse_iteration(m: &Matrix5, value: Complex64) -> Option<(Complex64, Vector5)> {
    let spread = 1.0_f64.max(math::cabs(value));
    let mut factored = None;
    for delta in [0.0, 1e-12, 1e-10, 1e-8, 1e-6] {
        let shift = value + Complex64::new(delta * spread, 0.0);
        let mut a = *m;
        for d in 0..5 {
            a[d][d] -= shift;
        }
        if let Some(lu) = Lu::factor(&a) {
            factored = Some(lu);
            break;
        }
    }
    let lu = factored?;

    let mut x: Vector5 = [
        Complex64::new(1.0, 0.1),
        Complex64::new(0.9, 0.2),
        Complex64::new(0.8, -0.3),
        Complex64::new(0.7, 0.4),
        Complex64::new(0.6, -0.5),
    ];
    for _ in 0..4 {
        let y = lu.solve(&x);
        let n = matrix::vec_norm(&y);
        if n == 0.0 || !n.is_finite() {
            return None;
        }
        x = matrix::vec_scale(&y, Complex64::new(1.0 / n, 0.0));
    }
    Some((rayleigh(m, &x), x))
}

/// Full eigendecomposition with no reference to the amplitude construction.
/// Pairs are sorted by eigenvalue (real part, then imaginary part); every
/// pair satisfies ‖Mξ − λξ‖ ≤ oracle_residual·‖M‖_max or the call fails.
pub fn eig5(m: &Matrix5, tols: &Tolerances) -> Result<[EigenPair; 5], Error> {
    let poly = char_poly(m);
    let roots = durand_kerner(&poly);
    let mut pairs = [EigenPair {
        value: matrix::ZERO,
        vector: matrix::zero_vector(),
    }; 5];
    let mut worst = f64::INFINITY;
    let mut ok = true;
    for (k, root) in roots.iter().enumerate() {
        match inverse_iteration(m, *root) {
            Some((value, vector)) => pairs[k] = EigenPair { value, vector },
            None => ok = false,
        }
    }
    if ok {
        worst = 0.0;
        for pair in &pairs {
            let mv = matrix::mat_vec(m, &pair.vector);
            let lv = matrix::vec_scale(&pair.vector, pair.value);
            worst = worst.max(matrix::vec_norm(&matrix::vec_sub(&mv, &lv)));
        }
    }
    if !ok || worst > tols.oracle_residual * matrix::max_abs(m) {
        return Err(Error::OracleFailure {
            worst_residual: worst,
        });
    }
    pairs.sort_unstable_by(|a, b| {
        a.value
            .re
            .total_cmp(&b.value.re)
            .then(a.value.im.total_cmp(&b.value.im))
    });
    Ok(pairs)
}

fn permutations() -> Vec<[usize; 5]> {
    fn heap(a: &mut [usize; 5], k: usize, out: &mut Vec<[usize; 5]>) {
        if k == 1 {
            out.push(*a);
            return;
        }
        for i in 0..k {
            heap(a, k - 1, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut out = Vec::with_capacity(120);
    let mut a = [0usize, 1, 2, 3, 4];
    heap(&mut a, 5, &mut out);
    out
}

/// Phase-insensitive distance between eigenvector rays.
fn ray_distance(u: &Vector5, v: &Vector5) -> f64 {
    let nu = matrix::vec_norm(u);
    let nv = matrix::vec_norm(v);
    if nu == 0.0 || nv == 0.0 {
        return math::sqrt(2.0);
    }
    let overlap = (math::cabs(matrix::vec_dot(u, v)) / (nu * nv)).min(1.0);
    math::sqrt((2.0 - 2.0 * overlap).max(0.0))
}

/// Pair `found` eigen-data against `reference`, trying all 120 assignments
/// and keeping the one with the smallest (value error, vector error). Errors
/// out when even the best pairing misses an eigenvalue by more than `tol`;
/// vector disagreement is reported but never fatal (degenerate eigenvalues
/// legitimately mix eigenvectors).
pub fn match_spectra(
    found: &[EigenPair; 5],
    reference: &[EigenPair; 5],
    tol: f64,
) -> Result<SpectrumMatch, Error> {
    let mut best: Option<SpectrumMatch> = None;
    for perm in permutations() {
        let mut value_err = 0.0_f64;
        let mut vector_err = 0.0_f64;
        for (slot, &src) in perm.iter().enumerate() {
            value_err = value_err.max(math::cabs(found[src].value - reference[slot].value));
            vector_err = vector_err.max(ray_distance(&found[src].vector, &reference[slot].vector));
        }
        let better = match &best {
            None => true,
            Some(b) => {
                value_err < b.max_value_error
                    || (value_err == b.max_value_error && vector_err < b.max_vector_error)
            }
        };
        if better {
            best = Some(SpectrumMatch {
                permutation: perm,
                max_value_error: value_err,
                max_vector_error: vector_err,
            });
        }
    }
    let best = best.expect("permutation list is never empty");
    if best.max_value_error > tol {
        return Err(Error::SpectrumMismatch {
            permutation: best.permutation,
            max_value_error: best.max_value_error,
        });
    }
    Ok(best)
}
