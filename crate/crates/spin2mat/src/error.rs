//! Error type shared by all modules.

use crate::amplitudes::ParameterPoint;
use core::fmt;

/// Everything that can go wrong in this crate.
///
/// Variants carry enough context to act on programmatically; none of them
/// allocate.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A spin index outside {2, 1, 0, −1, −2} was passed to `chi`.
    InvalidSpinIndex(i32),
    /// A 1-based table/eigenvector index outside 1..=5.
    IndexOutOfRange { index: usize },
    /// `closed_form_amplitude` only covers the (1,1), (1,2) and (5,5) entries.
    UnsupportedClosedForm { i: usize, j: usize },
    /// Bracket scan found no sign change and no endpoint passed verification.
    NoRootInBracket { lo: f64, hi: f64 },
    /// Residual roots were located but every one failed the per-row
    /// verification. Carries the best (smallest bracket-magnitude) candidate.
    SpuriousRoot {
        best: ParameterPoint,
        bracket_magnitude: f64,
    },
    /// Multistart refinement found no point passing verification. Carries the
    /// best point seen and its squared bracket magnitude.
    RecoveryFailed {
        best: ParameterPoint,
        bracket_magnitude_sq: f64,
    },
    /// Every row of eigenvector `i` fell below the denominator threshold, so
    /// no per-row quotient exists. Unreachable with a threshold relative to
    /// the row maximum (the maximum never skips itself); present so callers
    /// can rely on a total contract for `recover_spectrum`.
    IndeterminateEigenvalue { i: usize },
    /// The eigensolver could not meet its residual contract on this input.
    OracleFailure { worst_residual: f64 },
    /// Best eigenvalue assignment still exceeds the matching tolerance.
    SpectrumMismatch {
        permutation: [usize; 5],
        max_value_error: f64,
    },
    /// Unknown name passed to [`crate::Tolerances::set`].
    UnknownTolerance,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidSpinIndex(m) => {
                write!(f, "invalid spin index {m}; expected 2, 1, 0, -1 or -2")
            }
            Error::IndexOutOfRange { index } => write!(f, "index {index} out of range 1..=5"),
            Error::UnsupportedClosedForm { i, j } => {
                write!(
                    f,
                    "no closed form kept for entry ({i},{j}); available: (1,1), (1,2), (5,5)"
                )
            }
            Error::NoRootInBracket { lo, hi } => {
                write!(f, "no residual sign change found in bracket [{lo}, {hi}]")
            }
            Error::SpuriousRoot {
                bracket_magnitude, ..
            } => {
                write!(f, "residual roots found but all failed per-row verification (best bracket magnitude {bracket_magnitude:e})")
            }
            Error::RecoveryFailed {
                bracket_magnitude_sq,
                ..
            } => {
                write!(f, "no grid/simplex candidate passed verification (best squared bracket magnitude {bracket_magnitude_sq:e})")
            }
            Error::IndeterminateEigenvalue { i } => {
                write!(f, "all rows of eigenvector {i} below denominator threshold")
            }
            Error::OracleFailure { worst_residual } => {
                write!(f, "eigensolver residual contract missed (worst scaled residual {worst_residual:e})")
            }
            Error::SpectrumMismatch {
                max_value_error, ..
            } => {
                write!(f, "spectra do not match under any pairing (best max value error {max_value_error:e})")
            }
            Error::UnknownTolerance => write!(f, "unknown tolerance name"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
