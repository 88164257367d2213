//! Honeycomb lattice with masses `m(1+β)` (sublattice a) and `m(1−β)`
//! (sublattice b) joined by identical springs.
//!
//! Wave vectors are stored in reduced coordinates `κ = κ₁b₁ + κ₂b₂` with
//! `b₁ = (2π/a)(1, −1/√3)`, `b₂ = (2π/a)(0, 2/√3)`, dual to the lattice
//! vectors `a₁ = a(1, 0)`, `a₂ = a(1/2, √3/2)`.

mod berry;
mod dirac;
mod dispersion;
mod interface;

pub use berry::{
    berry_bz_boundary, chern_discrete, chern_discrete_with, valley_loop_samples, wilson_loop_sum, BerryLoop,
    ChernResult, Pairing,
};
pub use dirac::{dirac_check, DiracReport, DiracSlope};
pub use dispersion::{bloch_matrix_2d, dispersion_2d, eigenvector_2d, eigenvalues_2d, Dispersion2DSample};
pub use interface::{
    edge_frequencies_2d, interface_bands, interface_residual_2d, transfer_2d, z_of, EdgeFrequencies2D,
    InterfaceBands, InterfaceMode2D, Junction, Transfer2D,
};

use std::f64::consts::{PI, TAU};

pub use crate::chain1d::{Band, Side};
use crate::numerics::{cis_turns, Complex};
use crate::{Error, Result};

const SQRT3: f64 = 1.732_050_807_568_877_2;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HoneycombParams {
    pub beta: f64,
    /// Lattice constant.
    pub a: f64,
    pub k: f64,
    pub m: f64,
}

impl HoneycombParams {
    pub fn new(beta: f64) -> Result<Self> {
        Self::with_lattice_constant(beta, 1.0)
    }

    pub fn with_lattice_constant(beta: f64, a: f64) -> Result<Self> {
        if !beta.is_finite() || beta.abs() >= 1.0 {
            return Err(Error::invalid("beta", format!("must satisfy |beta| < 1, got {beta}")));
        }
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::invalid("a", format!("must be positive, got {a}")));
        }
        Ok(HoneycombParams { beta, a, k: 1.0, m: 1.0 })
    }

    pub fn mass_a(&self) -> f64 {
        1.0 + self.beta
    }

    pub fn mass_b(&self) -> f64 {
        1.0 - self.beta
    }

    pub(crate) fn require_gapped(&self) -> Result<()> {
        if self.beta == 0.0 {
            return Err(Error::GapClosed { field: "beta", reason: "beta = 0".into() });
        }
        Ok(())
    }
}

/// Wave vector in reduced coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WaveVector2 {
    pub kappa1: f64,
    pub kappa2: f64,
}

impl WaveVector2 {
    pub fn new(kappa1: f64, kappa2: f64) -> Self {
        WaveVector2 { kappa1, kappa2 }
    }

    pub fn from_cartesian(a: f64, kx: f64, ky: f64) -> Self {
        WaveVector2 {
            kappa1: kx * a / TAU,
            kappa2: (0.5 * kx + 0.5 * SQRT3 * ky) * a / TAU,
        }
    }

    pub fn cartesian(&self, a: f64) -> [f64; 2] {
        let s = TAU / a;
        [s * self.kappa1, s * (2.0 * self.kappa2 - self.kappa1) / SQRT3]
    }
}

/// The six corners of the Brillouin zone, counter-clockwise from `(4π/3a, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valley {
    K1,
    K2,
    K3,
    K4,
    K5,
    K6,
}

impl Valley {
    pub const ALL: [Valley; 6] = [Valley::K1, Valley::K2, Valley::K3, Valley::K4, Valley::K5, Valley::K6];

    pub fn reduced(self) -> WaveVector2 {
        let (a, b) = match self {
            Valley::K1 => (2.0, 1.0),
            Valley::K2 => (1.0, 2.0),
            Valley::K3 => (-1.0, 1.0),
            Valley::K4 => (-2.0, -1.0),
            Valley::K5 => (-1.0, -2.0),
            Valley::K6 => (1.0, -1.0),
        };
        WaveVector2::new(a / 3.0, b / 3.0)
    }

    pub fn cartesian(self, a: f64) -> [f64; 2] {
        let angle = PI / 3.0 * self.index() as f64;
        let r = 4.0 * PI / (3.0 * a);
        [r * angle.cos(), r * angle.sin()]
    }

    pub fn index(self) -> usize {
        Valley::ALL.iter().position(|&v| v == self).unwrap()
    }

    pub fn next(self) -> Valley {
        Valley::ALL[(self.index() + 1) % 6]
    }
}

impl std::fmt::Display for Valley {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "K{}", self.index() + 1)
    }
}

impl std::str::FromStr for Valley {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let i = match s.to_ascii_uppercase().as_str() {
            "K1" => 0,
            "K2" => 1,
            "K3" => 2,
            "K4" => 3,
            "K5" => 4,
            "K6" => 5,
            _ => return Err(Error::invalid("valley", format!("expected K1..K6, got {s:?}"))),
        };
        Ok(Valley::ALL[i])
    }
}

/// Distance `|K₁| = 4π/3a` from the zone centre to a corner.
pub fn k_point_radius(a: f64) -> f64 {
    4.0 * PI / (3.0 * a)
}

/// `d(κ) = −1 − e^{iκ·a₁} − e^{iκ·a₂} = −1 − e^{2πiκ₁} − e^{2πiκ₂}`.
pub fn d_function(kappa: WaveVector2) -> Complex {
    -1.0 - cis_turns(kappa.kappa1) - cis_turns(kappa.kappa2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_at_special_points() {
        assert_eq!(d_function(WaveVector2::new(0.0, 0.0)), Complex::new(-3.0, 0.0));
        for v in Valley::ALL {
            assert_eq!(d_function(v.reduced()), Complex::new(0.0, 0.0));
        }
    }

    #[test]
    fn valley_coordinates_agree() {
        for a in [1.0, 2.5] {
            for v in Valley::ALL {
                let c = v.reduced().cartesian(a);
                let e = v.cartesian(a);
                assert!((c[0] - e[0]).abs() < 1e-12 && (c[1] - e[1]).abs() < 1e-12);
                let back = WaveVector2::from_cartesian(a, e[0], e[1]);
                assert!((back.kappa1 - v.reduced().kappa1).abs() < 1e-12);
                assert!((back.kappa2 - v.reduced().kappa2).abs() < 1e-12);
            }
        }
        let k2 = Valley::K2.cartesian(1.0);
        assert!((k2[0] - TAU / 3.0).abs() < 1e-12 && (k2[1] - TAU / SQRT3).abs() < 1e-12);
    }

    #[test]
    fn reciprocal_vectors() {
        let b1 = WaveVector2::new(1.0, 0.0).cartesian(1.0);
        let b2 = WaveVector2::new(0.0, 1.0).cartesian(1.0);
        assert!((b1[0] - TAU).abs() < 1e-12 && (b1[1] + TAU / SQRT3).abs() < 1e-12);
        assert!(b2[0].abs() < 1e-12 && (b2[1] - 2.0 * TAU / SQRT3).abs() < 1e-12);
    }
}
