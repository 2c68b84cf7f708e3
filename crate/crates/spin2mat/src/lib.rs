//! Matrices with prescribed spectra built from spin-2 probability amplitudes.
//!
//! A direction pair x = (θ, φ, θ′, φ′) defines two spin-2 quantization axes
//! ĉ and b̂. The transition amplitudes between their eigenbases form a 5×5
//! unitary table, and
//!
//! ```text
//! M_ij = Σ_n φ*(B_i;C_n) · φ(B_j;C_n) · λ_n
//! ```
//!
//! produces a matrix whose eigenvalues are exactly the prescribed λ₁…λ₅ and
//! whose orthonormal eigenvectors are known in closed form. Running the
//! construction backwards — recovering x from a matrix by driving a residual
//! sum to zero, then reading the spectrum off per-row quotients — is a
//! diagonalization algorithm for this family.
//!
//! Modules:
//! - [`amplitudes`]: spin-2 eigenvectors, the spin operator, amplitude tables.
//! - [`generator`]: matrix synthesis, analytic eigenpairs, family classification.
//! - [`diagonalizer`]: residual evaluation, bisection and multistart recovery,
//!   per-row spectrum extraction, spuriousness checks.
//! - [`oracle`]: an independent dense 5×5 eigensolver used for cross-validation.
//! - [`matrix`]: fixed-size complex vector/matrix helpers shared by the rest.
//!
//! The crate is `no_std`-compatible (`default-features = false`); transcendental
//! functions always come from `libm`, so results are identical with and without
//! `std`.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]
// Index loops mirror the subscripts in the formulas; iterator rewrites hide them.
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod amplitudes;
pub mod diagonalizer;
pub mod error;
pub mod generator;
mod math;
pub mod matrix;
pub mod oracle;
mod simplex;
pub mod tolerances;

pub use amplitudes::{Direction, ParameterPoint};
pub use error::Error;
pub use generator::Spectrum;
pub use tolerances::Tolerances;

/// Complex double-precision scalar used throughout.
pub type Complex64 = num_complex::Complex<f64>;
