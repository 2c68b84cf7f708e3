//! Named tolerances with their defaults.
//!
//! Every algorithm takes these as a parameter instead of burying magic numbers;
//! the CLI exposes each field as `--tol.<name>`.

use crate::error::Error;

/// Entrywise unitarity / identity-degeneration tolerance for amplitude tables.
pub const DEFAULT_UNITARITY: f64 = 1e-12;
/// Eigen-equation residual bound ‖Mξ − λξ‖ for generated matrices.
pub const DEFAULT_EIGEN_EQUATION: f64 = 1e-10;
/// Residual-sum bound at a true parameter point, scaled by max(1, ‖M‖_max).
pub const DEFAULT_RESIDUAL_ROOT: f64 = 1e-9;
/// Acceptance bound on the bracket magnitude √Σ|ξ_s(Mξ)_r − ξ_r(Mξ)_s|² before
/// a bisection/multistart candidate is handed to verification, scaled by
/// max(1, ‖M‖_max).
pub const DEFAULT_RESIDUAL_ACCEPT: f64 = 1e-7;
/// Per-row quotient denominators |ξ(C_i,B_r)| below this fraction of the
/// largest component of eigenvector i are skipped.
pub const DEFAULT_DENOMINATOR: f64 = 1e-10;
/// Per-row agreement and eigen-residual bound used by verification.
pub const DEFAULT_VERIFY: f64 = 1e-6;
/// Eigenvalue assignment tolerance when matching two spectra.
pub const DEFAULT_SPECTRUM_MATCH: f64 = 1e-6;
/// Entrywise tolerance for structural family classification.
pub const DEFAULT_CLASSIFY: f64 = 1e-10;
/// Scaled residual contract of the independent eigensolver.
pub const DEFAULT_ORACLE_RESIDUAL: f64 = 1e-8;

/// Bundle of all tunable tolerances.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    pub unitarity: f64,
    pub eigen_equation: f64,
    pub residual_root: f64,
    pub residual_accept: f64,
    pub denominator: f64,
    pub verify: f64,
    pub spectrum_match: f64,
    pub classify: f64,
    pub oracle_residual: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            unitarity: DEFAULT_UNITARITY,
            eigen_equation: DEFAULT_EIGEN_EQUATION,
            residual_root: DEFAULT_RESIDUAL_ROOT,
            residual_accept: DEFAULT_RESIDUAL_ACCEPT,
            denominator: DEFAULT_DENOMINATOR,
            verify: DEFAULT_VERIFY,
            spectrum_match: DEFAULT_SPECTRUM_MATCH,
            classify: DEFAULT_CLASSIFY,
            oracle_residual: DEFAULT_ORACLE_RESIDUAL,
        }
    }
}

impl Tolerances {
    /// Set a tolerance by its CLI name. Unknown names are an error so typos
    /// don't silently run with defaults.
    pub fn set(&mut self, name: &str, value: f64) -> Result<(), Error> {
        match name {
            "unitarity" => self.unitarity = value,
            "eigen-equation" => self.eigen_equation = value,
            "residual-root" => self.residual_root = value,
            "residual-accept" => self.residual_accept = value,
            "denominator" => self.denominator = value,
            "verify" => self.verify = value,
            "spectrum-match" => self.spectrum_match = value,
            "classify" => self.classify = value,
            "oracle-residual" => self.oracle_residual = value,
            _ => return Err(Error::UnknownTolerance),
        }
        Ok(())
    }

    /// Names accepted by [`Tolerances::set`], in a fixed order.
    pub const NAMES: [&'static str; 9] = [
        "unitarity",
        "eigen-equation",
        "residual-root",
        "residual-accept",
        "denominator",
        "verify",
        "spectrum-match",
        "classify",
        "oracle-residual",
    ];
}
