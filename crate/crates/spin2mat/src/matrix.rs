//! Fixed-size complex linear algebra: exactly what a 5×5 problem needs and
//! nothing more.

use crate::math;
use crate::Complex64;

/// Column vector in C⁵.
pub type Vector5 = [Complex64; 5];
/// Row-major 5×5 complex matrix.
pub type Matrix5 = [[Complex64; 5]; 5];

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

pub fn zero_vector() -> Vector5 {
    [ZERO; 5]
}

pub fn zero_matrix() -> Matrix5 {
    [[ZERO; 5]; 5]
}

pub fn identity() -> Matrix5 {
    let mut m = zero_matrix();
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = ONE;
    }
    m
}

pub fn diagonal(values: &Vector5) -> Matrix5 {
    let mut m = zero_matrix();
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = values[k];
    }
    m
}

pub fn mat_vec(m: &Matrix5, v: &Vector5) -> Vector5 {
    let mut out = zero_vector();
    for (o, row) in out.iter_mut().zip(m.iter()) {
        *o = row.iter().zip(v.iter()).map(|(a, b)| a * b).sum();
    }
    out
}

pub fn mat_mul(a: &Matrix5, b: &Matrix5) -> Matrix5 {
    let mut out = zero_matrix();
    for i in 0..5 {
        for k in 0..5 {
            let aik = a[i][k];
            for j in 0..5 {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn transpose(m: &Matrix5) -> Matrix5 {
    let mut out = zero_matrix();
    for i in 0..5 {
        for j in 0..5 {
            out[j][i] = m[i][j];
        }
    }
    out
}

pub fn adjoint(m: &Matrix5) -> Matrix5 {
    let mut out = zero_matrix();
    for i in 0..5 {
        for j in 0..5 {
            out[j][i] = m[i][j].conj();
        }
    }
    out
}

pub fn mat_add(a: &Matrix5, b: &Matrix5) -> Matrix5 {
    let mut out = *a;
    for (row, brow) in out.iter_mut().zip(b.iter()) {
        for (x, y) in row.iter_mut().zip(brow.iter()) {
            *x += y;
        }
    }
    out
}

pub fn mat_sub(a: &Matrix5, b: &Matrix5) -> Matrix5 {
    let mut out = *a;
    for (row, brow) in out.iter_mut().zip(b.iter()) {
        for (x, y) in row.iter_mut().zip(brow.iter()) {
            *x -= y;
        }
    }
    out
}

pub fn mat_scale(a: &Matrix5, s: Complex64) -> Matrix5 {
    let mut out = *a;
    for row in out.iter_mut() {
        for x in row.iter_mut() {
            *x *= s;
        }
    }
    out
}

/// Largest entry magnitude; the norm used for every entrywise tolerance.
pub fn max_abs(m: &Matrix5) -> f64 {
    let mut best = 0.0_f64;
    for row in m {
        for z in row {
            best = best.max(math::cabs(*z));
        }
    }
    best
}

pub fn trace(m: &Matrix5) -> Complex64 {
    (0..5).map(|k| m[k][k]).sum()
}

/// ⟨a, b⟩ with the conjugation on `a`.
pub fn vec_dot(a: &Vector5, b: &Vector5) -> Complex64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

pub fn vec_norm(v: &Vector5) -> f64 {
    math::sqrt(v.iter().map(|z| z.norm_sqr()).sum::<f64>())
}

pub fn vec_sub(a: &Vector5, b: &Vector5) -> Vector5 {
    let mut out = *a;
    for (x, y) in out.iter_mut().zip(b.iter()) {
        *x -= y;
    }
    out
}

pub fn vec_scale(v: &Vector5, s: Complex64) -> Vector5 {
    let mut out = *v;
    for x in out.iter_mut() {
        *x *= s;
    }
    out
}

pub fn vec_max_abs(v: &Vector5) -> f64 {
    let mut best = 0.0_f64;
    for z in v {
        best = best.max(math::cabs(*z));
    }
    best
}

/// Determinant via the pivoted LU factorization below.
pub fn det(m: &Matrix5) -> Complex64 {
    match Lu::factor(m) {
        Some(lu) => lu.det(),
        None => ZERO,
    }
}

/// Pivoted LU factorization of a 5×5 complex matrix.
///
/// `factor` returns `None` only when a pivot column is exactly zero to the
/// last bit; near-singular systems factor fine and simply produce large
/// solution components (which is what inverse iteration wants).
pub(crate) struct Lu {
    lu: Matrix5,
    piv: [usize; 5],
    swaps: u32,
}

impl Lu {
    pub(crate) fn factor(m: &Matrix5) -> Option<Lu> {
        let mut lu = *m;
        let mut piv = [0usize; 5];
        let mut swaps = 0;
        for (k, p) in piv.iter_mut().enumerate() {
            *p = k;
        }
        for k in 0..5 {
            let mut best = k;
            let mut best_mag = math::cabs(lu[k][k]);
            for r in k + 1..5 {
                let mag = math::cabs(lu[r][k]);
                if mag > best_mag {
                    best = r;
                    best_mag = mag;
                }
            }
            if best_mag == 0.0 {
                return None;
            }
            if best != k {
                lu.swap(k, best);
                piv.swap(k, best);
                swaps += 1;
            }
            let pivot = lu[k][k];
            for r in k + 1..5 {
                let factor = lu[r][k] / pivot;
                lu[r][k] = factor;
                for c in k + 1..5 {
                    let sub = factor * lu[k][c];
                    lu[r][c] -= sub;
                }
            }
        }
        Some(Lu { lu, piv, swaps })
    }

    pub(crate) fn solve(&self, b: &Vector5) -> Vector5 {
        let mut y = zero_vector();
        for k in 0..5 {
            let mut acc = b[self.piv[k]];
            for c in 0..k {
                acc -= self.lu[k][c] * y[c];
            }
            y[k] = acc;
        }
        for k in (0..5).rev() {
            let mut acc = y[k];
            for c in k + 1..5 {
                acc -= self.lu[k][c] * y[c];
            }
            y[k] = acc / self.lu[k][k];
        }
        y
    }

    pub(crate) fn det(&self) -> Complex64 {
        let mut d = if self.swaps.is_multiple_of(2) {
            ONE
        } else {
            -ONE
        };
        for k in 0..5 {
            d *= self.lu[k][k];
        }
        d
    }
}
