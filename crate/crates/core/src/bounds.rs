//! Counting bounds: entropy constants, Warren's sign-pattern bound, cell
//! counts of hyperplane arrangements, and density certificates.

use num_bigint::BigUint;

use crate::graph::{degeneracy, DichotomousGraph};

/// Explicit density constant valid for every `n` and `d ≥ 2`.
pub const MU: f64 = 7.2240208;

#[derive(Clone, Copy, Debug, PartialEq, thiserror::Error)]
#[error("entropy argument {0} is outside (0, 1)")]
pub struct EntropyDomain(pub f64);

pub fn binary_entropy(x: f64) -> Result<f64, EntropyDomain> {
    if !(x > 0.0 && x < 1.0) {
        return Err(EntropyDomain(x));
    }
    Ok(-x * libm::log2(x) - (1.0 - x) * libm::log2(1.0 - x))
}

/// `x - 3 - x H(1/x)` for `x > 1`.
pub fn density_function(x: f64) -> f64 {
    let h = binary_entropy(1.0 / x).expect("density function needs x > 1");
    x - 3.0 - x * h
}

/// Root of [`density_function`] on `[2, 8]`, by bisection.
pub fn density_constant_c() -> f64 {
    let (mut lo, mut hi) = (2.0, 8.0);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if density_function(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn mu() -> f64 {
    MU
}

pub fn phi(z: f64) -> f64 {
    2.0 / z
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `2 (2 deg)^N Σ_{k=0}^{N} 2^k C(m, k)`: the number of sign patterns of `m`
/// real polynomials of degree at most `deg` in `N` variables.
pub fn warren_sign_pattern_bound(m: u64, vars: u64, deg: u64) -> BigUint {
    assert!(deg >= 1, "polynomial degree must be positive");
    let mut sum = BigUint::ZERO;
    let mut pow2 = BigUint::from(1u32);
    for k in 0..=vars.min(m) {
        sum += &pow2 * binomial(m, k);
        pow2 <<= 1u32;
    }
    BigUint::from(2u32) * BigUint::from(2 * deg).pow(vars as u32) * sum
}

/// `Σ_{i=0}^{dim} C(h, i)`: the maximum number of full-dimensional cells cut
/// out of `R^dim` by `h` hyperplanes.
pub fn hyperplane_cell_bound(h: u64, dim: u64) -> BigUint {
    (0..=dim).map(|i| binomial(h, i)).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `m ≥ μ d n` with `d ≥ 2`: some edge partition has no realization in `R^d`.
    NotPandichotomousDense,
    /// Degeneracy at most `d` with `d ≥ 2`: every partition is realizable in
    /// `R^d` and on `S^{d-1}`.
    PandichotomousByDegeneracy,
    Inconclusive,
}

/// Integer bounds on a dimension, not its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimensionBounds {
    pub lo: usize,
    pub hi: usize,
    /// Edgeless graphs are realizable everywhere; both bounds are then 0.
    pub trivial: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub degeneracy: usize,
    /// Sign-pattern bound for `m` quadratic polynomials in `d n` variables.
    pub warren_bound: BigUint,
    pub c: f64,
    pub mu: f64,
    pub certificate: Certificate,
    pub ped: DimensionBounds,
    pub psd: DimensionBounds,
}

/// Bounds on the pandichotomic Euclidean and spherical dimensions from the
/// degeneracy `k`.
pub fn dimension_bounds(k: usize) -> (DimensionBounds, DimensionBounds) {
    if k == 0 {
        let t = DimensionBounds { lo: 0, hi: 0, trivial: true };
        return (t, t);
    }
    let lower = libm::ceil(k as f64 / (2.0 * MU)) as usize;
    let hi = k.max(2);
    let ped = DimensionBounds { lo: lower.max(1), hi, trivial: false };
    let psd = DimensionBounds { lo: lower.saturating_sub(1), hi: hi - 1, trivial: false };
    (ped, psd)
}

pub fn certify(g: &DichotomousGraph, d: usize) -> BoundReport {
    assert!(d >= 1, "dimension must be positive");
    let (n, m) = (g.n(), g.m());
    let k = degeneracy(g).k;
    let dense = d >= 2 && m as f64 >= MU * d as f64 * n as f64;
    let sparse = d >= 2 && k <= d;
    debug_assert!(!(dense && sparse), "density and degeneracy certificates co-fired");
    let certificate = if dense {
        Certificate::NotPandichotomousDense
    } else if sparse {
        Certificate::PandichotomousByDegeneracy
    } else {
        Certificate::Inconclusive
    };
    let (ped, psd) = dimension_bounds(k);
    BoundReport {
        n,
        m,
        d,
        degeneracy: k,
        warren_bound: warren_sign_pattern_bound(m as u64, (d * n) as u64, 2),
        c: density_constant_c(),
        mu: MU,
        certificate,
        ped,
        psd,
    }
}
