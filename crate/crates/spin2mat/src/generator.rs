//! Matrix synthesis with a prescribed spectrum and analytically known
//! eigenvectors, plus structural classification of the result.

use crate::amplitudes::{amplitude_table, ParameterPoint};
use crate::math;
use crate::matrix::{self, Matrix5, Vector5};
use crate::Complex64;

/// Ordered eigenvalues λ₁…λ₅; λ_i is bound to eigenvector i (same index).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spectrum {
    pub values: [Complex64; 5],
}

impl Spectrum {
    pub fn new(values: [Complex64; 5]) -> Spectrum {
        Spectrum { values }
    }

    pub fn from_reals(values: [f64; 5]) -> Spectrum {
        let mut out = [matrix::ZERO; 5];
        for (o, v) in out.iter_mut().zip(values.iter()) {
            *o = Complex64::new(*v, 0.0);
        }
        Spectrum { values: out }
    }

    pub fn all_finite(&self) -> bool {
        self.values
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

/// Where a matrix came from, when it was built by [`generate`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Provenance {
    pub point: ParameterPoint,
    pub spectrum: Spectrum,
}

/// A 5×5 matrix, optionally carrying its generating parameters.
///
/// Provenance is optional so externally supplied matrices can flow through
/// [`classify`] and the diagonalizer unchanged.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratedMatrix {
    pub entries: Matrix5,
    pub provenance: Option<Provenance>,
}

/// One eigenvalue with its unit-norm eigenvector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenPair {
    pub value: Complex64,
    pub vector: Vector5,
}

/// Structural family memberships. Flags are not mutually exclusive.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FamilyFlags {
    pub diagonal: bool,
    pub hermitian: bool,
    pub anti_hermitian: bool,
    pub symmetric: bool,
    pub imaginary_symmetric: bool,
    pub real_eigenvectors: bool,
}

impl FamilyFlags {
    /// (name, value) pairs in a fixed order, for serialization.
    pub fn named(&self) -> [(&'static str, bool); 6] {
        [
            ("diagonal", self.diagonal),
            ("hermitian", self.hermitian),
            ("anti_hermitian", self.anti_hermitian),
            ("symmetric", self.symmetric),
            ("imaginary_symmetric", self.imaginary_symmetric),
            ("real_eigenvectors", self.real_eigenvectors),
        ]
    }
}

/// Build M_ij = Σ_n φ*(B_i;C_n) φ(B_j;C_n) λ_n with provenance attached.
///
/// Eigenvalue n is bound to the eigenvector assembled from column n of the
/// amplitude table; matrices generated at the same point share their whole
/// eigenbasis regardless of spectrum.
pub fn generate(point: &ParameterPoint, spectrum: &Spectrum) -> GeneratedMatrix {
    let table = amplitude_table(point).entries;
    let mut entries = matrix::zero_matrix();
    for (i, row) in entries.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            let mut acc = matrix::ZERO;
            for (n, lambda) in spectrum.values.iter().enumerate() {
                acc += table[i][n].conj() * table[j][n] * lambda;
            }
            *e = acc;
        }
    }
    GeneratedMatrix {
        entries,
        provenance: Some(Provenance {
            point: *point,
            spectrum: *spectrum,
        }),
    }
}

/// The five analytic eigenvectors at a parameter point: vector i has
/// component k equal to ξ(C_i,B_k) = φ*(B_k;C_i). Values are left unset
/// (zero) — pair them with a spectrum as needed. The vectors are orthonormal
/// because the amplitude table is unitary.
pub fn eigenvectors(point: &ParameterPoint) -> [EigenPair; 5] {
    let table = amplitude_table(point).entries;
    let mut out = [EigenPair {
        value: matrix::ZERO,
        vector: matrix::zero_vector(),
    }; 5];
    for (i, pair) in out.iter_mut().enumerate() {
        for (k, comp) in pair.vector.iter_mut().enumerate() {
            *comp = table[k][i].conj();
        }
    }
    out
}

/// Decide structural family flags from the matrix alone, entrywise at `tol`.
///
/// `real_eigenvectors` reports whether a real orthonormal eigenbasis exists,
/// which for a normal matrix is equivalent to being (complex) symmetric; the
/// normality guard makes the flag honest on arbitrary input. Matrices built
/// by [`generate`] are always normal.
pub fn classify(m: &Matrix5, tol: f64) -> FamilyFlags {
    let adj = matrix::adjoint(m);
    let tr = matrix::transpose(m);

    let mut off_diag = 0.0_f64;
    let mut max_re = 0.0_f64;
    for (i, row) in m.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            if i != j {
                off_diag = off_diag.max(math::cabs(*z));
            }
            max_re = max_re.max(math::fabs(z.re));
        }
    }

    let symmetric = matrix::max_abs(&matrix::mat_sub(m, &tr)) < tol;
    let commutator = matrix::mat_sub(&matrix::mat_mul(m, &adj), &matrix::mat_mul(&adj, m));
    let scale = matrix::max_abs(m).max(1.0);
    let normal = matrix::max_abs(&commutator) < tol * scale * scale;

    FamilyFlags {
        diagonal: off_diag < tol,
        hermitian: matrix::max_abs(&matrix::mat_sub(m, &adj)) < tol,
        anti_hermitian: matrix::max_abs(&matrix::mat_add(m, &adj)) < tol,
        symmetric,
        imaginary_symmetric: symmetric && max_re < tol,
        real_eigenvectors: symmetric && normal,
    }
}

// Angle/eigenvalue coincidences are meant exactly; this slack only absorbs
// normalization rounding.
const PREDICT_SLACK: f64 = 1e-12;

/// Predict the family of `generate(point, spectrum)` from the arguments alone:
/// θ=θ′ ∧ φ=φ′ ⇒ diagonal; all λ real ⇒ Hermitian; φ=φ′ ⇒ symmetric with real
/// eigenvectors; all λ imaginary ⇒ anti-Hermitian (and imaginary symmetric
/// when also φ=φ′); anything else is general.
pub fn predict_family(point: &ParameterPoint, spectrum: &Spectrum) -> FamilyFlags {
    let phis_equal =
        math::circular_distance(point.c_axis.phi(), point.b_axis.phi()) < PREDICT_SLACK;
    let angles_equal =
        phis_equal && math::fabs(point.c_axis.theta() - point.b_axis.theta()) < PREDICT_SLACK;
    let real = spectrum
        .values
        .iter()
        .all(|z| math::fabs(z.im) <= PREDICT_SLACK * math::cabs(*z).max(1.0));
    let imaginary = spectrum
        .values
        .iter()
        .all(|z| math::fabs(z.re) <= PREDICT_SLACK * math::cabs(*z).max(1.0));

    FamilyFlags {
        diagonal: angles_equal,
        hermitian: real,
        anti_hermitian: imaginary,
        symmetric: phis_equal,
        imaginary_symmetric: phis_equal && imaginary,
        real_eigenvectors: phis_equal,
    }
}

/// Largest eigen-equation residual ‖Mξ_i − λ_iξ_i‖ over i, for a matrix with
/// provenance. Returns `None` when there is no provenance to check against.
pub fn provenance_residual(gm: &GeneratedMatrix) -> Option<f64> {
    let prov = gm.provenance.as_ref()?;
    let vectors = eigenvectors(&prov.point);
    let mut worst = 0.0_f64;
    for (pair, lambda) in vectors.iter().zip(prov.spectrum.values.iter()) {
        let mv = matrix::mat_vec(&gm.entries, &pair.vector);
        let lv = matrix::vec_scale(&pair.vector, *lambda);
        worst = worst.max(matrix::vec_norm(&matrix::vec_sub(&mv, &lv)));
    }
    Some(worst)
}
