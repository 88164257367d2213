use std::f64::consts::PI;

use super::{Band, ChainParams};
use crate::numerics::{cis, Complex, Mat2, Vec2};
use crate::{Error, Result};

/// Off-diagonal entry `a(μ) = −(1+γ) − (1−γ)e^{iμ}` of the Bloch matrix.
pub fn bloch_coefficient(gamma: f64, mu: f64) -> Complex {
    -(1.0 + gamma) - (1.0 - gamma) * cis(mu)
}

/// Bloch matrix `[[2, ā], [a, 2]]`.
pub fn bloch_matrix(params: &ChainParams, mu: f64) -> Mat2 {
    let a = bloch_coefficient(params.gamma, mu);
    Mat2::new(2.0.into(), a.conj(), a, 2.0.into())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bands1DSample {
    pub mu: f64,
    pub lambda_minus: f64,
    pub lambda_plus: f64,
    pub a_of_mu: Complex,
}

impl Bands1DSample {
    pub fn lambda(&self, band: Band) -> f64 {
        match band {
            Band::Minus => self.lambda_minus,
            Band::Plus => self.lambda_plus,
        }
    }

    /// `(1/√2)[ā/(±|a|), 1]`.
    pub fn eigenvector(&self, band: Band) -> Result<Vec2> {
        let r = self.a_of_mu.norm();
        if r <= 1e-14 {
            return Err(Error::Degenerate {
                field: "mu",
                reason: format!("bands touch at mu = {}", self.mu),
            });
        }
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Ok([self.a_of_mu.conj() / (band.sign() * r) * s, Complex::new(s, 0.0)])
    }
}

pub fn dispersion_1d(params: &ChainParams, mu: f64) -> Result<Bands1DSample> {
    if !(mu.abs() <= PI) {
        return Err(Error::invalid("mu", format!("must lie in [-pi, pi], got {mu}")));
    }
    let a = bloch_coefficient(params.gamma, mu);
    let r = a.norm();
    Ok(Bands1DSample { mu, lambda_minus: 2.0 - r, lambda_plus: 2.0 + r, a_of_mu: a })
}

/// Frequency interval `(lo, hi)` free of propagating waves.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BandGap1D {
    pub lo: f64,
    pub hi: f64,
}

impl BandGap1D {
    pub fn is_empty(&self) -> bool {
        self.lo >= self.hi
    }

    pub fn contains(&self, omega: f64) -> bool {
        self.lo < omega && omega < self.hi
    }
}

pub fn band_gap_1d(params: &ChainParams) -> BandGap1D {
    let g = params.gamma.abs();
    BandGap1D { lo: (2.0 * (1.0 - g)).sqrt(), hi: (2.0 * (1.0 + g)).sqrt() }
}

pub fn common_gap_1d(left: &ChainParams, right: &ChainParams) -> BandGap1D {
    let (l, r) = (band_gap_1d(left), band_gap_1d(right));
    BandGap1D { lo: l.lo.max(r.lo), hi: l.hi.min(r.hi) }
}
