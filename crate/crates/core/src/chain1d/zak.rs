use std::f64::consts::{PI, TAU};

use super::{dispersion_1d, Band, ChainParams};
use crate::numerics::{principal_arg, Vec2};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct ZakResult {
    pub band: Band,
    pub n_points: usize,
    /// Phase reduced into `[0, 2π)`.
    pub value: f64,
    /// Unreduced sum, before the sign flip.
    pub raw_sum: f64,
    pub per_step_terms: Option<Vec<f64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZakClass {
    Zero,
    Pi,
}

impl ZakClass {
    pub fn label(self) -> &'static str {
        match self {
            ZakClass::Zero => "0",
            ZakClass::Pi => "pi",
        }
    }
}

impl ZakResult {
    /// Distance to `target` on the circle.
    pub fn distance_to(&self, target: f64) -> f64 {
        let d = (self.value - target).rem_euclid(TAU);
        d.min(TAU - d)
    }

    /// `0` or `π`, when the value is within `tol` of it.
    pub fn classify(&self, tol: f64) -> Option<ZakClass> {
        if self.distance_to(0.0) <= tol {
            Some(ZakClass::Zero)
        } else if self.distance_to(PI) <= tol {
            Some(ZakClass::Pi)
        } else {
            None
        }
    }
}

/// Discrete Zak phase `−Σ Im log(v(μ_n)ᴴ v(μ_{n+1}))` over `μ_n = nπ/N`,
/// `n = −N, …, N−1`.
pub fn zak_discrete(
    params: &ChainParams,
    band: Band,
    n_points: usize,
    keep_terms: bool,
) -> Result<ZakResult> {
    params.require_gapped()?;
    if n_points < 16 {
        return Err(Error::invalid("n_points", format!("must be at least 16, got {n_points}")));
    }
    let n = n_points as i64;
    let mu = |k: i64| (k as f64) * PI / (n_points as f64);
    let vec_at = |k: i64| -> Result<Vec2> { dispersion_1d(params, mu(k))?.eigenvector(band) };

    let mut terms = keep_terms.then(|| Vec::with_capacity(2 * n_points));
    let mut sum = 0.0;
    let mut prev = vec_at(-n)?;
    for k in -n..n {
        let next = vec_at(k + 1)?;
        let overlap = prev[0].conj() * next[0] + prev[1].conj() * next[1];
        let term = principal_arg(overlap);
        sum += term;
        if let Some(t) = terms.as_mut() {
            t.push(term);
        }
        prev = next;
    }
    let mut value = (-sum).rem_euclid(TAU);
    if value >= TAU {
        value = 0.0;
    }
    Ok(ZakResult { band, n_points, value, raw_sum: sum, per_step_terms: terms })
}
