//! Diatomic chain with unit masses and alternating springs `k(1+γ)` (inside
//! a cell) and `k(1−γ)` (between cells).
//!
//! Frequencies are nondimensional: `ω` is measured in units of `√(k/m)` and
//! the squared frequency `λ = ω²` is an eigenvalue of the Bloch matrix.

mod bands;
mod edge;
mod transfer;
mod zak;

pub use bands::{
    band_gap_1d, bloch_coefficient, bloch_matrix, common_gap_1d, dispersion_1d, BandGap1D,
    Bands1DSample,
};
pub use edge::{DEFAULT_SCAN_GRID, edge_mode_1d, edge_modes_1d, interface_residual_1d, EdgeCandidate, EdgeMode1D, EdgeSearch1D, ProfileCell};
pub use transfer::{transfer_1d, transfer_matrix_1d, Transfer1D};
pub use zak::{zak_discrete, ZakClass, ZakResult};

use crate::{Error, Result};

/// Which of the two bands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Band {
    Minus,
    Plus,
}

impl Band {
    pub fn sign(self) -> f64 {
        match self {
            Band::Minus => -1.0,
            Band::Plus => 1.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Band::Minus => "minus",
            Band::Plus => "plus",
        }
    }
}

impl std::str::FromStr for Band {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minus" | "-" => Ok(Band::Minus),
            "plus" | "+" => Ok(Band::Plus),
            _ => Err(Error::invalid("band", format!("expected minus or plus, got {s:?}"))),
        }
    }
}

/// Half-chain on either side of an interface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChainParams {
    pub gamma: f64,
    /// Mean spring stiffness; only the time-domain scaling uses it.
    pub k_mean: f64,
    pub mass: f64,
}

impl ChainParams {
    pub fn new(gamma: f64) -> Result<Self> {
        Self::with_scale(gamma, 1.0, 1.0)
    }

    pub fn with_scale(gamma: f64, k_mean: f64, mass: f64) -> Result<Self> {
        if !gamma.is_finite() || gamma.abs() >= 1.0 {
            return Err(Error::invalid("gamma", format!("must satisfy |gamma| < 1, got {gamma}")));
        }
        if !(k_mean.is_finite() && k_mean > 0.0) {
            return Err(Error::invalid("k_mean", format!("must be positive, got {k_mean}")));
        }
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::invalid("mass", format!("must be positive, got {mass}")));
        }
        Ok(ChainParams { gamma, k_mean, mass })
    }

    /// Intra-cell spring `1+γ` (nondimensional).
    pub fn k1(&self) -> f64 {
        1.0 + self.gamma
    }

    /// Inter-cell spring `1−γ` (nondimensional).
    pub fn k2(&self) -> f64 {
        1.0 - self.gamma
    }

    pub(crate) fn require_gapped(&self) -> Result<()> {
        if self.gamma == 0.0 {
            return Err(Error::GapClosed { field: "gamma", reason: "gamma = 0".into() });
        }
        Ok(())
    }
}
