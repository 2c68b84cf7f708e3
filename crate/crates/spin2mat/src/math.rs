//! Scalar math routed through libm so that results do not depend on whether
//! `std` is enabled (or on the host platform's libm).

use crate::Complex64;

pub(crate) use core::f64::consts::PI;
pub(crate) const TAU: f64 = 2.0 * PI;

#[inline]
pub(crate) fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub(crate) fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub(crate) fn fabs(x: f64) -> f64 {
    libm::fabs(x)
}

#[inline]
pub(crate) fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

/// e^{ix} as a unit complex number.
#[inline]
pub(crate) fn cis(x: f64) -> Complex64 {
    Complex64::new(cos(x), sin(x))
}

/// |z| without num-complex's float-feature methods.
#[inline]
pub(crate) fn cabs(z: Complex64) -> f64 {
    hypot(z.re, z.im)
}

/// Reduce an angle to [0, 2π).
#[inline]
pub(crate) fn wrap_tau(x: f64) -> f64 {
    let r = x % TAU;
    if r < 0.0 {
        r + TAU
    } else {
        r
    }
}

/// Distance between two angles on the circle, in [0, π].
#[inline]
pub(crate) fn circular_distance(a: f64, b: f64) -> f64 {
    let d = fabs(wrap_tau(a) - wrap_tau(b));
    if d > PI {
        TAU - d
    } else {
        d
    }
}
