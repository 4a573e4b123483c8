//! Complex scalars, coefficient norms and the numerical tolerances used
//! across the crate.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);

/// Pivot threshold for Gram–Schmidt reduction and null-space extraction.
pub const EPS_RANK: f64 = 1e-9;
/// Relative threshold for subspace membership.
pub const EPS_MEMBER: f64 = 1e-8;
/// Associativity and unit checks on structure constants.
pub const EPS_ASSOC: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub rank: f64,
    pub member: f64,
    pub assoc: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            rank: EPS_RANK,
            member: EPS_MEMBER,
            assoc: EPS_ASSOC,
        }
    }
}

impl Tolerances {
    pub fn scaled(scale: f64) -> Self {
        let d = Self::default();
        Self {
            rank: d.rank * scale,
            member: d.member * scale,
            assoc: d.assoc * scale,
        }
    }
}

pub fn norm_l1(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm()).sum()
}

pub fn norm_l2(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn norm_inf(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Hermitian inner product, conjugate-linear in the first slot.
pub fn inner(u: &[C64], v: &[C64]) -> C64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

/// Coefficientwise `max |u_i - v_i|`.
pub fn max_abs_diff(u: &[C64], v: &[C64]) -> f64 {
    u.iter()
        .zip(v)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
}

pub fn axpy(alpha: C64, x: &[C64], y: &mut [C64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

pub fn unit_vector(dim: usize, i: usize) -> Vec<C64> {
    let mut v = vec![ZERO; dim];
    v[i] = ONE;
    v
}

/// Zero out components below `1e-14` so serialized output is stable.
pub fn clamp_noise(z: C64) -> C64 {
    let c = |x: f64| if x.abs() < 1e-14 { 0.0 } else { x };
    C64::new(c(z.re), c(z.im))
}
