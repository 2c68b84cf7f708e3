//! Recovering the generating angles of a matrix and reading off its spectrum.
//!
//! At a trial point x the five analytic eigenvectors ξ_i(x) are formed and
//! each row r of M·ξ_i yields an eigenvalue estimate
//! (λ_i)_r = Σ_l M_rl ξ(C_i,B_l) / ξ(C_i,B_r). All estimates agree exactly
//! when x is the generating point; the residual machinery here measures that
//! agreement without divisions, via the cross-multiplied brackets
//! ξ_s(Mξ_i)_r − ξ_r(Mξ_i)_s.
//!
//! Two scalar views of the brackets drive root finding:
//!
//! - the plain sum S(x) = Σ_i Σ_{r<s} [·]: this is the reported residual, but
//!   it is provably *independent of the trial θ* — summing ξ_iξ_iᵀ over all
//!   five eigenvectors collapses, via completeness of the c-axis eigenbasis,
//!   to a quantity that depends on the c-axis only through e^{−2iφJz}. So a
//!   sign scan of Re S can never locate θ.
//! - the index-weighted sum Σ_i w_i·(per-eigenvalue sum), w_i = i, and the
//!   squared magnitude Σ|·|²: both still vanish at every true root (each
//!   per-eigenvalue sum does individually) and the distinct weights block the
//!   collapse, restoring sensitivity to all four angles. Bisection brackets
//!   on the weighted sum; multistart descends on the squared magnitude.
//!
//! Either way, a candidate is only accepted after the per-row agreement check
//! ([`verify_recovery`]) passes — that check is the final arbiter.

use alloc::vec::Vec;

use crate::amplitudes::{amplitude_table, ParameterPoint};
use crate::error::Error;
use crate::generator::EigenPair;
use crate::math;
use crate::matrix::{self, Matrix5, Vector5};
use crate::simplex::nelder_mead;
use crate::tolerances::Tolerances;
use crate::Complex64;

/// Which of the four angles a 1-D recovery treats as unknown.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FreeAngle {
    Theta,
    Phi,
    ThetaPrime,
    PhiPrime,
}

impl FreeAngle {
    /// Replace the free angle in `base` with `value` (the other three are
    /// taken from `base` unchanged).
    pub fn apply(&self, base: &ParameterPoint, value: f64) -> ParameterPoint {
        let [t, p, tp, pp] = base.angles();
        match self {
            FreeAngle::Theta => ParameterPoint::new(value, p, tp, pp),
            FreeAngle::Phi => ParameterPoint::new(t, value, tp, pp),
            FreeAngle::ThetaPrime => ParameterPoint::new(t, p, value, pp),
            FreeAngle::PhiPrime => ParameterPoint::new(t, p, tp, value),
        }
    }

    /// The normalized range of this angle: [0, π] for polars, [0, 2π] for
    /// azimuths.
    pub fn range(&self) -> (f64, f64) {
        match self {
            FreeAngle::Theta | FreeAngle::ThetaPrime => (0.0, math::PI),
            FreeAngle::Phi | FreeAngle::PhiPrime => (0.0, math::TAU),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FreeAngle::Theta => "theta",
            FreeAngle::Phi => "phi",
            FreeAngle::ThetaPrime => "theta_p",
            FreeAngle::PhiPrime => "phi_p",
        }
    }
}

/// The residual sum S(x) at a trial point, with quotient-form diagnostics.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidualReport {
    /// The plain cross-multiplied sum S(x); no terms are skipped here.
    pub value: Complex64,
    pub point: ParameterPoint,
    /// 1-based (i, r) pairs whose denominator ξ(C_i,B_r) would be skipped by
    /// the quotient form at the denominator threshold.
    pub skipped_rows: Vec<(usize, usize)>,
}

/// Recovered eigen-data at a parameter point.
#[derive(Clone, Debug, PartialEq)]
pub struct RecoveryResult {
    pub point: ParameterPoint,
    /// λ_i (mean of the valid per-row estimates) with eigenvector i.
    pub pairs: [EigenPair; 5],
    /// consistency[i][r] = (λ_{i+1})_{r+1}, `None` where the row was skipped.
    pub consistency: [[Option<Complex64>; 5]; 5],
    /// Largest pairwise disagreement |(λ_i)_r − (λ_i)_s| over all i.
    pub max_spread: f64,
}

/// Outcome of the spuriousness check. `pass` is a value, not an error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConsistencyReport {
    pub pass: bool,
    pub max_spread: f64,
    /// Largest eigen-equation residual ‖Mξ_i − λ_iξ_i‖ over i.
    pub max_eigen_residual: f64,
}

/// Eigenvector rows at a trial point: row i holds ξ(C_{i+1}, B_{1..5}).
fn trial_vectors(point: &ParameterPoint) -> [Vector5; 5] {
    let table = amplitude_table(point).entries;
    let mut out = [matrix::zero_vector(); 5];
    for (i, v) in out.iter_mut().enumerate() {
        for (k, comp) in v.iter_mut().enumerate() {
            *comp = table[k][i].conj();
        }
    }
    out
}

/// (plain sum, index-weighted sum, Σ|bracket|²) at one trial point.
type BracketSums = (Complex64, Complex64, f64);

/// Plain sum, index-weighted sum, and Σ|bracket|² in one pass.
fn bracket_sums(m: &Matrix5, vectors: &[Vector5; 5]) -> BracketSums {
    let mut plain = matrix::ZERO;
    let mut weighted = matrix::ZERO;
    let mut mag_sq = 0.0_f64;
    for (i, v) in vectors.iter().enumerate() {
        let mv = matrix::mat_vec(m, v);
        let mut part = matrix::ZERO;
        for r in 0..4 {
            for s in r + 1..5 {
                let bracket = v[s] * mv[r] - v[r] * mv[s];
                part += bracket;
                mag_sq += bracket.norm_sqr();
            }
        }
        plain += part;
        weighted += part * Complex64::new((i + 1) as f64, 0.0);
    }
    (plain, weighted, mag_sq)
}

/// Per-eigenvalue partial sums S_i(x) (their equal-weight total is the value
/// reported by [`residual`]).
pub fn residual_components(m: &Matrix5, point: &ParameterPoint) -> [Complex64; 5] {
    let vectors = trial_vectors(point);
    let mut out = [matrix::ZERO; 5];
    for (i, v) in vectors.iter().enumerate() {
        let mv = matrix::mat_vec(m, v);
        let mut part = matrix::ZERO;
        for r in 0..4 {
            for s in r + 1..5 {
                part += v[s] * mv[r] - v[r] * mv[s];
            }
        }
        out[i] = part;
    }
    out
}

/// √Σ_i Σ_{r<s} |ξ_s(Mξ_i)_r − ξ_r(Mξ_i)_s|²: a smooth, division-free
/// disagreement magnitude that is zero exactly at points whose per-row
/// estimates agree.
pub fn bracket_magnitude(m: &Matrix5, point: &ParameterPoint) -> f64 {
    let vectors = trial_vectors(point);
    math::sqrt(bracket_sums(m, &vectors).2)
}

/// The residual sum S(x) in cross-multiplied form (no divisions), plus the
/// list of (i, r) rows the quotient form would have skipped.
pub fn residual(m: &Matrix5, point: &ParameterPoint, tols: &Tolerances) -> ResidualReport {
    let vectors = trial_vectors(point);
    let (plain, _, _) = bracket_sums(m, &vectors);
    let mut skipped_rows = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        let row_scale = matrix::vec_max_abs(v);
        for (r, comp) in v.iter().enumerate() {
            if math::cabs(*comp) < tols.denominator * row_scale {
                skipped_rows.push((i + 1, r + 1));
            }
        }
    }
    ResidualReport {
        value: plain,
        point: *point,
        skipped_rows,
    }
}

/// Eigenvalue estimate from row r of the eigen-equation for eigenvector i
/// (both 1-based): Σ_l M_rl ξ(C_i,B_l) / ξ(C_i,B_r). `Ok(None)` means the
/// denominator is below the threshold and the row cannot be used.
pub fn row_eigenvalue(
    m: &Matrix5,
    i: usize,
    r: usize,
    point: &ParameterPoint,
    tols: &Tolerances,
) -> Result<Option<Complex64>, Error> {
    if !(1..=5).contains(&i) {
        return Err(Error::IndexOutOfRange { index: i });
    }
    if !(1..=5).contains(&r) {
        return Err(Error::IndexOutOfRange { index: r });
    }
    let vectors = trial_vectors(point);
    let v = &vectors[i - 1];
    let row_scale = matrix::vec_max_abs(v);
    let denom = v[r - 1];
    if math::cabs(denom) < tols.denominator * row_scale {
        return Ok(None);
    }
    let numer: Complex64 = m[r - 1]
        .iter()
        .zip(v.iter())
        .map(|(mrl, xil)| mrl * xil)
        .sum();
    Ok(Some(numer / denom))
}

fn consistency_table(
    m: &Matrix5,
    vectors: &[Vector5; 5],
    tols: &Tolerances,
) -> [[Option<Complex64>; 5]; 5] {
    let mut out = [[None; 5]; 5];
    for (i, v) in vectors.iter().enumerate() {
        let mv = matrix::mat_vec(m, v);
        let row_scale = matrix::vec_max_abs(v);
        for (r, (num, den)) in mv.iter().zip(v.iter()).enumerate() {
            if math::cabs(*den) >= tols.denominator * row_scale {
                out[i][r] = Some(num / den);
            }
        }
    }
    out
}

fn max_pairwise_spread(row: &[Option<Complex64>; 5]) -> f64 {
    let mut spread = 0.0_f64;
    for a in 0..5 {
        let Some(va) = row[a] else { continue };
        for b in a + 1..5 {
            let Some(vb) = row[b] else { continue };
            spread = spread.max(math::cabs(va - vb));
        }
    }
    spread
}

/// Read the spectrum off the per-row quotients at `point`: λ_i is the mean of
/// the valid estimates, the full estimate table and worst disagreement are
/// reported for audit. The eigenvectors are the analytic ones at `point`.
pub fn recover_spectrum(
    m: &Matrix5,
    point: &ParameterPoint,
    tols: &Tolerances,
) -> Result<RecoveryResult, Error> {
    let vectors = trial_vectors(point);
    let consistency = consistency_table(m, &vectors, tols);
    let mut pairs = [EigenPair {
        value: matrix::ZERO,
        vector: matrix::zero_vector(),
    }; 5];
    let mut max_spread = 0.0_f64;
    for i in 0..5 {
        let mut acc = matrix::ZERO;
        let mut count = 0u32;
        for est in consistency[i].iter().flatten() {
            acc += *est;
            count += 1;
        }
        if count == 0 {
            return Err(Error::IndeterminateEigenvalue { i: i + 1 });
        }
        pairs[i] = EigenPair {
            value: acc / Complex64::new(count as f64, 0.0),
            vector: vectors[i],
        };
        max_spread = max_spread.max(max_pairwise_spread(&consistency[i]));
    }
    Ok(RecoveryResult {
        point: *point,
        pairs,
        consistency,
        max_spread,
    })
}

/// The spuriousness check: at an acceptable point every valid per-row
/// estimate agrees within `tol` and every eigen-equation residual
/// ‖Mξ_i − λ_iξ_i‖ stays below tol·‖M‖_max.
pub fn verify_recovery(
    m: &Matrix5,
    point: &ParameterPoint,
    tol: f64,
    tols: &Tolerances,
) -> ConsistencyReport {
    let recovered = match recover_spectrum(m, point, tols) {
        Ok(r) => r,
        Err(_) => {
            return ConsistencyReport {
                pass: false,
                max_spread: f64::INFINITY,
                max_eigen_residual: f64::INFINITY,
            }
        }
    };
    let mut max_eigen_residual = 0.0_f64;
    for pair in &recovered.pairs {
        let mv = matrix::mat_vec(m, &pair.vector);
        let lv = matrix::vec_scale(&pair.vector, pair.value);
        max_eigen_residual = max_eigen_residual.max(matrix::vec_norm(&matrix::vec_sub(&mv, &lv)));
    }
    let scale = matrix::max_abs(m);
    ConsistencyReport {
        pass: recovered.max_spread <= tol && max_eigen_residual <= tol * scale,
        max_spread: recovered.max_spread,
        max_eigen_residual,
    }
}

/// Number of uniform samples in the bracket scan before bisection.
const SCAN_SAMPLES: usize = 64;
/// Bisection gives up on an interval after this many halvings (width is far
/// below any sensible tol by then).
const MAX_BISECT_STEPS: usize = 200;

/// Recover one unknown angle by bracket scan + bisection, holding the other
/// three at the values in `base` (the free component of `base` is ignored).
///
/// The scan walks Re then Im of the index-weighted bracket sum (then the
/// plain sum, as a fallback), bisects every sign change to width `tol`, and
/// accepts the first candidate - bracket endpoints are also tried, covering
/// roots at 0 or π - whose bracket magnitude is below
/// `tols.residual_accept·max(1, ‖M‖_max)` *and* which passes
/// [`verify_recovery`] at `tols.verify`.
pub fn bisect_recover(
    m: &Matrix5,
    base: &ParameterPoint,
    free: FreeAngle,
    bracket: (f64, f64),
    tol: f64,
    tols: &Tolerances,
) -> Result<ParameterPoint, Error> {
    let (lo, hi) = bracket;
    if !lo.is_finite() || !hi.is_finite() || hi <= lo {
        return Err(Error::NoRootInBracket { lo, hi });
    }
    let scale = matrix::max_abs(m).max(1.0);
    let accept = tols.residual_accept * scale;

    let eval = |t: f64| -> BracketSums {
        let point = free.apply(base, t);
        let vectors = trial_vectors(&point);
        bracket_sums(m, &vectors)
    };
    let try_accept = |t: f64, magnitude: f64| -> Option<ParameterPoint> {
        if magnitude >= accept {
            return None;
        }
        let point = free.apply(base, t);
        if verify_recovery(m, &point, tols.verify, tols).pass {
            Some(point)
        } else {
            None
        }
    };

    let mut best_candidate: Option<(f64, ParameterPoint)> = None;
    let mut any_candidate = false;
    let mut note_candidate = |t: f64, magnitude: f64, best: &mut Option<(f64, ParameterPoint)>| {
        any_candidate = true;
        let point = free.apply(base, t);
        if best.as_ref().is_none_or(|(bm, _)| magnitude < *bm) {
            *best = Some((magnitude, point));
        }
    };

    // Endpoints first: a root sitting exactly on the bracket edge produces no
    // interior sign change.
    for t in [lo, hi] {
        let (_, _, mag_sq) = eval(t);
        let magnitude = math::sqrt(mag_sq);
        if magnitude < accept {
            note_candidate(t, magnitude, &mut best_candidate);
            if let Some(point) = try_accept(t, magnitude) {
                return Ok(point);
            }
        }
    }

    // Four scalar views, in decreasing order of usefulness.
    let parts: [fn(&BracketSums) -> f64; 4] = [
        |sums| sums.1.re,
        |sums| sums.1.im,
        |sums| sums.0.re,
        |sums| sums.0.im,
    ];

    let step = (hi - lo) / SCAN_SAMPLES as f64;
    let mut samples: [(f64, BracketSums); SCAN_SAMPLES + 1] =
        [(0.0, (matrix::ZERO, matrix::ZERO, 0.0)); SCAN_SAMPLES + 1];
    for (k, slot) in samples.iter_mut().enumerate() {
        let t = lo + step * k as f64;
        *slot = (t, eval(t));
    }

    for part in parts {
        for k in 0..SCAN_SAMPLES {
            let (ta, ref sa) = samples[k];
            let (tb, ref sb) = samples[k + 1];
            let fa = part(sa);
            let fb = part(sb);
            if fa == 0.0 && fb == 0.0 {
                continue;
            }
            if fa * fb > 0.0 {
                continue;
            }
            // Bisect this sign change down to width `tol` and test the
            // midpoint. If it flunks verification, keep halving to machine
            // width and test once more: near-pole instances amplify the
            // per-row quotients enough that `tol` alone can be too coarse.
            let (mut a, mut b, mut fa) = (ta, tb, fa);
            let mut steps = 0;
            let mut coarse_tested = false;
            loop {
                let mid = 0.5 * (a + b);
                let exhausted = mid <= a || mid >= b || steps >= MAX_BISECT_STEPS;
                if exhausted || (b - a <= tol && !coarse_tested) {
                    let (_, _, mag_sq) = eval(mid);
                    let magnitude = math::sqrt(mag_sq);
                    note_candidate(mid, magnitude, &mut best_candidate);
                    if let Some(point) = try_accept(mid, magnitude) {
                        return Ok(point);
                    }
                    coarse_tested = true;
                    if exhausted {
                        break;
                    }
                }
                steps += 1;
                let fm = part(&eval(mid));
                if fm == 0.0 {
                    // Exact zero: collapse the interval so the next pass
                    // tests this point and stops.
                    a = mid;
                    b = mid;
                } else if fm * fa > 0.0 {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
        }
    }

    match best_candidate {
        Some((magnitude, point)) if any_candidate => Err(Error::SpuriousRoot {
            best: point,
            bracket_magnitude: magnitude,
        }),
        _ => Err(Error::NoRootInBracket { lo, hi }),
    }
}

/// How many refined cells multistart keeps from the coarse grid.
const REFINE_CELLS: usize = 16;
/// Simplex iteration cap per refined cell.
const SIMPLEX_ITERATIONS: usize = 500;

/// Recover all four angles with no prior knowledge: evaluate the squared
/// bracket magnitude on a `grid_density`⁴ grid of cell centers, refine the
/// best cells by simplex descent, and return the first point with magnitude
/// below `refine_tol·max(1, ‖M‖_max)` that passes [`verify_recovery`].
pub fn multistart_recover(
    m: &Matrix5,
    grid_density: usize,
    refine_tol: f64,
    tols: &Tolerances,
) -> Result<ParameterPoint, Error> {
    let g = grid_density.max(2);
    let scale = matrix::max_abs(m).max(1.0);
    let target = refine_tol * scale;
    let target_sq = target * target;

    let objective = |x: &[f64; 4]| -> f64 {
        let point = ParameterPoint::new(x[0], x[1], x[2], x[3]);
        let vectors = trial_vectors(&point);
        bracket_sums(m, &vectors).2
    };

    // Coarse pass: keep the best cells, worst-first so insertion is cheap.
    let mut kept: Vec<(f64, [f64; 4])> = Vec::with_capacity(REFINE_CELLS + 1);
    let theta_step = math::PI / g as f64;
    let phi_step = math::TAU / g as f64;
    for a in 0..g {
        let t = (a as f64 + 0.5) * theta_step;
        for b in 0..g {
            let p = (b as f64 + 0.5) * phi_step;
            for c in 0..g {
                let tp = (c as f64 + 0.5) * theta_step;
                for d in 0..g {
                    let pp = (d as f64 + 0.5) * phi_step;
                    let x = [t, p, tp, pp];
                    let v = objective(&x);
                    let pos = kept.partition_point(|(kv, _)| *kv < v);
                    if pos < REFINE_CELLS {
                        kept.insert(pos, (v, x));
                        kept.truncate(REFINE_CELLS);
                    }
                }
            }
        }
    }

    let steps = [
        0.5 * theta_step,
        0.5 * phi_step,
        0.5 * theta_step,
        0.5 * phi_step,
    ];
    let mut best: Option<(f64, ParameterPoint)> = None;
    for (_, start) in &kept {
        let (x, v) = nelder_mead(objective, *start, steps, target_sq, SIMPLEX_ITERATIONS);
        let point = ParameterPoint::new(x[0], x[1], x[2], x[3]);
        if best.as_ref().is_none_or(|(bv, _)| v < *bv) {
            best = Some((v, point));
        }
        if v < target_sq && verify_recovery(m, &point, tols.verify, tols).pass {
            return Ok(point);
        }
    }

    let (bracket_magnitude_sq, best) = best.expect("grid always yields candidates");
    Err(Error::RecoveryFailed {
        best,
        bracket_magnitude_sq,
    })
}
