//! Seeded sampling shared by the integration suites.
#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spin2mat::amplitudes::Direction;
use spin2mat::{Complex64, ParameterPoint, Spectrum};

pub const PI: f64 = core::f64::consts::PI;
pub const TAU: f64 = core::f64::consts::TAU;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_direction(rng: &mut impl Rng) -> Direction {
    Direction::new(rng.gen_range(0.0..PI), rng.gen_range(0.0..TAU))
}

pub fn random_point(rng: &mut impl Rng) -> ParameterPoint {
    ParameterPoint::new(
        rng.gen_range(0.0..PI),
        rng.gen_range(0.0..TAU),
        rng.gen_range(0.0..PI),
        rng.gen_range(0.0..TAU),
    )
}

/// A point with both polar angles bounded away from the poles, where the
/// matching azimuth stops being identifiable.
pub fn random_interior_point(rng: &mut impl Rng, margin: f64) -> ParameterPoint {
    ParameterPoint::new(
        rng.gen_range(margin..PI - margin),
        rng.gen_range(0.0..TAU),
        rng.gen_range(margin..PI - margin),
        rng.gen_range(0.0..TAU),
    )
}

/// Complex spectrum with |λ| ≤ 10 (each part uniform on ±7, so |λ| ≤ 7√2).
pub fn random_spectrum(rng: &mut impl Rng) -> Spectrum {
    Spectrum::new(core::array::from_fn(|_| {
        Complex64::new(rng.gen_range(-7.0..7.0), rng.gen_range(-7.0..7.0))
    }))
}

pub fn random_real_spectrum(rng: &mut impl Rng) -> Spectrum {
    Spectrum::new(core::array::from_fn(|_| {
        Complex64::new(rng.gen_range(-8.0..8.0), 0.0)
    }))
}

pub fn random_imaginary_spectrum(rng: &mut impl Rng) -> Spectrum {
    Spectrum::new(core::array::from_fn(|_| {
        Complex64::new(0.0, rng.gen_range(-8.0..8.0))
    }))
}

/// Real spectrum whose values are pairwise at least `gap` apart.
pub fn separated_real_spectrum(rng: &mut impl Rng, gap: f64) -> Spectrum {
    loop {
        let s = random_real_spectrum(rng);
        let mut ok = true;
        for a in 0..5 {
            for b in a + 1..5 {
                if (s.values[a] - s.values[b]).norm_sqr() < gap * gap {
                    ok = false;
                }
            }
        }
        if ok {
            return s;
        }
    }
}
