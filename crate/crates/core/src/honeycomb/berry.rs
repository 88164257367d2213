use std::f64::consts::{PI, TAU};

use super::{d_function, eigenvector_2d, k_point_radius, Band, HoneycombParams, Valley, WaveVector2};
use crate::numerics::{principal_arg, wrap_angle, Complex, Vec2};
use crate::{Error, Result};

/// Inner product used for neighbouring overlaps in a loop sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Pairing {
    /// `uᴴv`.
    #[default]
    Plain,
    /// `uᴴ·diag(1+β, 1−β)·v`.
    MassWeighted,
}

/// `Σ_j arg⟨v_j, v_{j+1}⟩` around a closed loop (the last sample connects
/// back to the first).
pub fn wilson_loop_sum(samples: &[Vec2], pairing: Pairing, beta: f64) -> Result<f64> {
    let (wa, wb) = match pairing {
        Pairing::Plain => (1.0, 1.0),
        Pairing::MassWeighted => (1.0 + beta, 1.0 - beta),
    };
    let n = samples.len();
    let mut sum = 0.0;
    for j in 0..n {
        let (u, v) = (&samples[j], &samples[(j + 1) % n]);
        let overlap: Complex = u[0].conj() * v[0] * wa + u[1].conj() * v[1] * wb;
        let mag = overlap.norm();
        if mag < 1e-12 {
            return Err(Error::CoarseDiscretization { step: j, overlap: mag });
        }
        sum += principal_arg(overlap);
    }
    Ok(sum)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChernResult {
    pub valley: Valley,
    pub band: Band,
    pub radius: f64,
    pub n_points: usize,
    pub raw_sum: f64,
    /// `−(1/2π)·(raw_sum reduced into (−π, π])`.
    pub value: f64,
}

/// Samples of the band eigenvector on the circle `K + r(cos θ_j, sin θ_j)`,
/// `θ_j = −π + 2π(j−1)/N`.
pub fn valley_loop_samples(
    params: &HoneycombParams,
    valley: Valley,
    band: Band,
    radius: f64,
    n_points: usize,
) -> Vec<Vec2> {
    let k = valley.cartesian(params.a);
    (0..n_points)
        .map(|j| {
            let theta = -PI + TAU * j as f64 / n_points as f64;
            let p = WaveVector2::from_cartesian(params.a, k[0] + radius * theta.cos(), k[1] + radius * theta.sin());
            eigenvector_2d(params.beta, d_function(p), band)
        })
        .collect()
}

pub fn chern_discrete(
    params: &HoneycombParams,
    valley: Valley,
    band: Band,
    radius: f64,
    n_points: usize,
) -> Result<ChernResult> {
    chern_discrete_with(params, valley, band, radius, n_points, Pairing::Plain)
}

pub fn chern_discrete_with(
    params: &HoneycombParams,
    valley: Valley,
    band: Band,
    radius: f64,
    n_points: usize,
    pairing: Pairing,
) -> Result<ChernResult> {
    params.require_gapped()?;
    let r_max = 0.1 * k_point_radius(params.a);
    if !(radius > 0.0 && radius <= r_max) {
        return Err(Error::invalid("radius", format!("must lie in (0, {r_max}], got {radius}")));
    }
    if n_points < 64 || !n_points.is_multiple_of(2) {
        return Err(Error::invalid("n_points", format!("must be even and at least 64, got {n_points}")));
    }
    let samples = valley_loop_samples(params, valley, band, radius, n_points);
    let raw_sum = wilson_loop_sum(&samples, pairing, params.beta)?;
    Ok(ChernResult { valley, band, radius, n_points, raw_sum, value: -wrap_angle(raw_sum) / TAU })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BerryLoop {
    pub n_points: usize,
    pub raw_sum: f64,
    /// `raw_sum` reduced into `(−π, π]`.
    pub angle: f64,
}

/// Loop sum around the hexagonal zone boundary through `K₁ … K₆`, with
/// `N/6` equally spaced nodes per edge.
pub fn berry_bz_boundary(params: &HoneycombParams, band: Band, n_points: usize) -> Result<BerryLoop> {
    params.require_gapped()?;
    if n_points == 0 || !n_points.is_multiple_of(6) {
        return Err(Error::invalid("n_points", format!("must be a positive multiple of 6, got {n_points}")));
    }
    let per_edge = n_points / 6;
    let mut samples = Vec::with_capacity(n_points);
    for v in Valley::ALL {
        let (p, q) = (v.reduced(), v.next().reduced());
        for t in 0..per_edge {
            let s = t as f64 / per_edge as f64;
            let k = WaveVector2::new(p.kappa1 + s * (q.kappa1 - p.kappa1), p.kappa2 + s * (q.kappa2 - p.kappa2));
            samples.push(eigenvector_2d(params.beta, d_function(k), band));
        }
    }
    let raw_sum = wilson_loop_sum(&samples, Pairing::Plain, params.beta)?;
    Ok(BerryLoop { n_points, raw_sum, angle: wrap_angle(raw_sum) })
}
