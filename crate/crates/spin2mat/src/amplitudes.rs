//! Spin-2 eigenbases and the probability-amplitude table built from them.
//!
//! For a quantization axis ĉ = (sinθcosφ, sinθsinφ, cosθ) the spin-2 operator
//! ĉ·S has eigenvalues m ∈ {2, 1, 0, −1, −2} with closed-form orthonormal
//! eigenvectors χ_m. Given two axes ĉ and b̂, the amplitude
//!
//! ```text
//! φ(B_i;C_j) = [χ_{m_j}^{(ĉ)}]† [χ_{m_i}^{(b̂)}]
//! ```
//!
//! measures the overlap between their eigenstates; the 5×5 table of all such
//! values is unitary. Position k in every vector and on every table axis means
//! m = 3−k (so k = 1 → m = 2, …, k = 5 → m = −2).

use crate::error::Error;
use crate::math;
use crate::matrix::{self, Matrix5, Vector5};
use crate::Complex64;

/// The five spin projections in position order: index k (0-based) holds m = 2−k.
pub const SPIN_INDICES: [i32; 5] = [2, 1, 0, -1, -2];

/// A point (θ, φ) on the unit sphere defining a quantization axis.
///
/// Construction normalizes θ into [0, π] and φ into [0, 2π) using the
/// spherical identities φ → φ mod 2π and (θ, φ) → (2π − θ, φ + π). Every
/// function in this crate evaluates only normalized angles, which makes all
/// results well-defined functions of the constructor inputs. (The θ-reflection
/// changes individual eigenvector components by signs, so normalizing once at
/// construction — rather than ad hoc inside evaluation — is what keeps the
/// amplitude table single-valued.)
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Direction {
    theta: f64,
    phi: f64,
}

impl Direction {
    pub fn new(theta: f64, phi: f64) -> Direction {
        let mut t = math::wrap_tau(theta);
        let mut p = phi;
        if t > math::PI {
            t = math::TAU - t;
            p += math::PI;
        }
        Direction {
            theta: t,
            phi: math::wrap_tau(p),
        }
    }

    /// Polar angle in [0, π].
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Azimuth in [0, 2π).
    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// The unit vector (sinθcosφ, sinθsinφ, cosθ).
    pub fn unit_vector(&self) -> [f64; 3] {
        let st = math::sin(self.theta);
        [
            st * math::cos(self.phi),
            st * math::sin(self.phi),
            math::cos(self.theta),
        ]
    }
}

/// The full argument x = (θ, φ, θ′, φ′): the c-axis carries (θ, φ), the
/// b-axis (θ′, φ′).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParameterPoint {
    pub c_axis: Direction,
    pub b_axis: Direction,
}

impl ParameterPoint {
    pub fn new(theta: f64, phi: f64, theta_p: f64, phi_p: f64) -> ParameterPoint {
        ParameterPoint {
            c_axis: Direction::new(theta, phi),
            b_axis: Direction::new(theta_p, phi_p),
        }
    }

    pub fn from_axes(c_axis: Direction, b_axis: Direction) -> ParameterPoint {
        ParameterPoint { c_axis, b_axis }
    }

    /// Angles in the order (θ, φ, θ′, φ′).
    pub fn angles(&self) -> [f64; 4] {
        [
            self.c_axis.theta(),
            self.c_axis.phi(),
            self.b_axis.theta(),
            self.b_axis.phi(),
        ]
    }
}

/// A normalized spin-2 eigenvector; component k (0-based) belongs to
/// projection m = 2−k.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinVector {
    pub components: Vector5,
}

impl SpinVector {
    pub fn norm(&self) -> f64 {
        matrix::vec_norm(&self.components)
    }

    /// ⟨self, other⟩ with the conjugation on `self`.
    pub fn dagger_dot(&self, other: &SpinVector) -> Complex64 {
        matrix::vec_dot(&self.components, &other.components)
    }
}

/// Closed-form eigenvector of the spin-2 operator along `dir` for eigenvalue
/// `m` ∈ {2, 1, 0, −1, −2}.
///
/// Component k carries the phase e^{−i·m_k·φ} (m_k = 2−k) on a real θ-profile.
/// The overall signs of the m = ±1 vectors are fixed so that the generated
/// matrix with spectrum (2, 1, 0, −1, −2) at b̂ = ẑ reproduces the spin
/// operator itself — the eigen-equation alone cannot pin a phase convention,
/// that identity can.
pub fn chi(m: i32, dir: Direction) -> Result<SpinVector, Error> {
    let t = dir.theta();
    let p = dir.phi();
    let half = 0.5 * t;
    let ch = math::cos(half);
    let sh = math::sin(half);
    let c2 = ch * ch;
    let s2 = sh * sh;
    let c4 = c2 * c2;
    let s4 = s2 * s2;
    let st = math::sin(t);
    let ct = math::cos(t);
    let r6 = math::sqrt(6.0);

    // Real θ-profiles for components k = 1..5.
    let profile: [f64; 5] = match m {
        2 => [c4, st * c2, 0.25 * r6 * st * st, st * s2, s4],
        1 => [
            -st * c2,
            -(3.0 * s2 - c2) * c2,
            0.5 * r6 * st * ct,
            (3.0 * c2 - s2) * s2,
            st * s2,
        ],
        0 => [
            0.25 * r6 * st * st,
            -0.5 * r6 * st * ct,
            0.5 * (2.0 * ct * ct - st * st),
            0.5 * r6 * st * ct,
            0.25 * r6 * st * st,
        ],
        -1 => [
            -st * s2,
            (3.0 * c2 - s2) * s2,
            -0.5 * r6 * st * ct,
            -(3.0 * s2 - c2) * c2,
            st * c2,
        ],
        -2 => [s4, -st * s2, 0.25 * r6 * st * st, -st * c2, c4],
        _ => return Err(Error::InvalidSpinIndex(m)),
    };

    let mut components = matrix::zero_vector();
    for (k, (out, amp)) in components.iter_mut().zip(profile.iter()).enumerate() {
        let mk = SPIN_INDICES[k] as f64;
        *out = math::cis(-mk * p) * Complex64::new(*amp, 0.0);
    }
    Ok(SpinVector { components })
}

/// The spin-2 operator ĉ·S: tridiagonal, Hermitian by construction, with
/// diagonal (2, 1, 0, −1, −2)·cosθ and superdiagonal
/// ½sinθ·e^{−iφ}·(2, √6, √6, 2).
pub fn spin_operator(dir: Direction) -> Matrix5 {
    let st = math::sin(dir.theta());
    let ct = math::cos(dir.theta());
    let r6 = math::sqrt(6.0);
    let upper = math::cis(-dir.phi()) * Complex64::new(0.5 * st, 0.0);
    let ladder = [2.0, r6, r6, 2.0];

    let mut m = matrix::zero_matrix();
    for k in 0..5 {
        m[k][k] = Complex64::new(SPIN_INDICES[k] as f64 * ct, 0.0);
    }
    for (k, w) in ladder.iter().enumerate() {
        let off = upper * Complex64::new(*w, 0.0);
        m[k][k + 1] = off;
        m[k + 1][k] = off.conj();
    }
    m
}

/// The 5×5 table of amplitudes φ(B_i;C_j) for one parameter point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AmplitudeTable {
    /// Row i, column j (0-based storage) holds φ(B_{i+1};C_{j+1}).
    pub entries: Matrix5,
    pub point: ParameterPoint,
}

impl AmplitudeTable {
    /// 1-based accessor matching the φ(B_i;C_j) notation.
    pub fn entry(&self, i: usize, j: usize) -> Result<Complex64, Error> {
        check_index(i)?;
        check_index(j)?;
        Ok(self.entries[i - 1][j - 1])
    }
}

fn check_index(k: usize) -> Result<(), Error> {
    if (1..=5).contains(&k) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: k })
    }
}

/// All 25 amplitudes φ(B_i;C_j) = [χ_{m_j}^{(ĉ)}]†[χ_{m_i}^{(b̂)}].
pub fn amplitude_table(point: &ParameterPoint) -> AmplitudeTable {
    let mut c_basis = [matrix::zero_vector(); 5];
    let mut b_basis = [matrix::zero_vector(); 5];
    for k in 0..5 {
        // Spin indices are always valid here.
        c_basis[k] = chi(SPIN_INDICES[k], point.c_axis).unwrap().components;
        b_basis[k] = chi(SPIN_INDICES[k], point.b_axis).unwrap().components;
    }
    let mut entries = matrix::zero_matrix();
    for (i, row) in entries.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            *e = matrix::vec_dot(&c_basis[j], &b_basis[i]);
        }
    }
    AmplitudeTable {
        entries,
        point: *point,
    }
}

/// ξ(C_i,B_j) = φ*(B_j;C_i): the conjugated amplitude, i.e. component j of
/// eigenvector i. Indices are 1-based. Equivalently
/// ξ(C_i,B_j) = [χ_{m_j}^{(b̂)}]†[χ_{m_i}^{(ĉ)}].
pub fn xi(i: usize, j: usize, point: &ParameterPoint) -> Result<Complex64, Error> {
    check_index(i)?;
    check_index(j)?;
    Ok(amplitude_table(point).entries[j - 1][i - 1].conj())
}

/// Expanded trigonometric formulas for the (1,1), (1,2) and (5,5) amplitudes,
/// kept as independent oracles against [`amplitude_table`].
///
/// The (1,2) form carries the overall sign of the m = 1 eigenvector convention
/// (see [`chi`]); the (5,5) form's e^{+i2(φ−φ′)} term is
/// sin⁴(θ/2)sin⁴(θ′/2) — the cos⁴cos⁴ weight belongs to the e^{−i2(φ−φ′)}
/// term only.
pub fn closed_form_amplitude(
    which: (usize, usize),
    point: &ParameterPoint,
) -> Result<Complex64, Error> {
    let t = point.c_axis.theta();
    let p = point.c_axis.phi();
    let tp = point.b_axis.theta();
    let pp = point.b_axis.phi();
    let d = p - pp;

    let (c2, s2) = half_angle_squares(t);
    let (cp2, sp2) = half_angle_squares(tp);
    let (c4, s4) = (c2 * c2, s2 * s2);
    let (cp4, sp4) = (cp2 * cp2, sp2 * sp2);
    let st = math::sin(t);
    let ct = math::cos(t);
    let stp = math::sin(tp);

    let term = |amp: f64, mult: f64| math::cis(mult * d) * Complex64::new(amp, 0.0);

    match which {
        (1, 1) => Ok(term(c4 * cp4, 2.0)
            + term(stp * st * cp2 * c2, 1.0)
            + term(0.375 * stp * stp * st * st, 0.0)
            + term(stp * st * sp2 * s2, -1.0)
            + term(s4 * sp4, -2.0)),
        (1, 2) => Ok(term(-st * c2 * cp4, 2.0)
            + term(-(3.0 * s2 - c2) * c2 * stp * cp2, 1.0)
            + term(0.75 * st * ct * stp * stp, 0.0)
            + term((3.0 * c2 - s2) * s2 * stp * sp2, -1.0)
            + term(st * s2 * sp4, -2.0)),
        (5, 5) => Ok(term(s4 * sp4, 2.0)
            + term(stp * st * sp2 * s2, 1.0)
            + term(0.375 * stp * stp * st * st, 0.0)
            + term(stp * st * cp2 * c2, -1.0)
            + term(c4 * cp4, -2.0)),
        (i, j) => Err(Error::UnsupportedClosedForm { i, j }),
    }
}

fn half_angle_squares(t: f64) -> (f64, f64) {
    let ch = math::cos(0.5 * t);
    let sh = math::sin(0.5 * t);
    (ch * ch, sh * sh)
}
