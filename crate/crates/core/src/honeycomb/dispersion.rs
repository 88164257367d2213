use super::{d_function, Band, HoneycombParams, WaveVector2};
use crate::numerics::{Complex, Mat2, Vec2};
use crate::{Error, Result};

/// `M(κ) = [[3/(1+β), d̄/(1+β)], [d/(1−β), 3/(1−β)]]`.
pub fn bloch_matrix_2d(beta: f64, d: Complex) -> Mat2 {
    let (ma, mb) = (1.0 + beta, 1.0 - beta);
    Mat2::new((3.0 / ma).into(), d.conj() / ma, d / mb, (3.0 / mb).into())
}

/// `(λ−, λ+)` for a given `|d|`.
pub fn eigenvalues_2d(beta: f64, d_abs: f64) -> (f64, f64) {
    let q = 1.0 - beta * beta;
    let s = (9.0 * beta * beta + q * d_abs * d_abs).sqrt();
    ((3.0 - s) / q, (3.0 + s) / q)
}

/// Eigenvector `(1/χ)[−d̄/(3 − λ(1+β)), 1]` normalized so that
/// `v*·diag(1+β, 1−β)·v = 1`.
///
/// Where `d = 0` and the first entry is unbounded, the band is carried by
/// sublattice a alone and `(1/√(1+β), 0)` is returned.
pub fn eigenvector_2d(beta: f64, d: Complex, band: Band) -> Vec2 {
    let sign = band.sign();
    let q = 1.0 - beta * beta;
    let s = (9.0 * beta * beta + q * d.norm_sqr()).sqrt();
    // 3 − λ(1+β) = (−3β ∓ s)/(1−β), and (−3β ∓ s)(±s − 3β) = −(1−β²)|d|²;
    // use whichever factor is not cancelling.
    let den = -3.0 * beta - sign * s;
    let alt = sign * s - 3.0 * beta;
    let (ma, mb) = (1.0 + beta, 1.0 - beta);
    let va = if den.abs() >= alt.abs() {
        -d.conj() * (1.0 - beta) / den
    } else if d.norm() > 0.0 {
        alt / (ma * d)
    } else {
        return [Complex::new(1.0 / ma.sqrt(), 0.0), Complex::new(0.0, 0.0)];
    };
    let chi = (ma * va.norm_sqr() + mb).sqrt();
    if !chi.is_finite() {
        return [Complex::new(1.0 / ma.sqrt(), 0.0), Complex::new(0.0, 0.0)];
    }
    [va / chi, Complex::new(1.0 / chi, 0.0)]
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dispersion2DSample {
    pub kappa: WaveVector2,
    pub d_value: Complex,
    pub lambda_minus: f64,
    pub lambda_plus: f64,
    /// `[v−, v+]` when requested.
    pub eigenvectors: Option<[Vec2; 2]>,
}

impl Dispersion2DSample {
    pub fn lambda(&self, band: Band) -> f64 {
        match band {
            Band::Minus => self.lambda_minus,
            Band::Plus => self.lambda_plus,
        }
    }

    pub fn gap(&self) -> f64 {
        self.lambda_plus - self.lambda_minus
    }
}

pub fn dispersion_2d(
    params: &HoneycombParams,
    kappa: WaveVector2,
    want_vectors: bool,
) -> Result<Dispersion2DSample> {
    let d = d_function(kappa);
    let (lambda_minus, lambda_plus) = eigenvalues_2d(params.beta, d.norm());
    let eigenvectors = if want_vectors {
        if params.beta == 0.0 && d.norm() <= 1e-14 {
            return Err(Error::Degenerate {
                field: "kappa",
                reason: "Dirac point: eigenvalue of multiplicity two".into(),
            });
        }
        Some([
            eigenvector_2d(params.beta, d, Band::Minus),
            eigenvector_2d(params.beta, d, Band::Plus),
        ])
    } else {
        None
    };
    Ok(Dispersion2DSample { kappa, d_value: d, lambda_minus, lambda_plus, eigenvectors })
}
