use std::f64::consts::TAU;

use super::{bloch_matrix_2d, d_function, eigenvalues_2d, HoneycombParams, Valley, WaveVector2};
use crate::numerics::Mat2;
use crate::{Error, Result};

/// One-sided difference quotients of both bands along one direction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiracSlope {
    /// Direction angle in the Cartesian plane.
    pub angle: f64,
    pub h: f64,
    pub slope_plus: f64,
    pub slope_minus: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiracReport {
    pub valley: Valley,
    pub lambda_star: f64,
    /// `M(K)` equals `λ*·I` entry by entry.
    pub multiplicity_two: bool,
    pub slopes: Vec<DiracSlope>,
}

impl DiracReport {
    /// Largest deviation of any slope estimate at step `h` from `±a√3/2`.
    pub fn max_slope_error(&self, a: f64, h: f64) -> f64 {
        let expected = a * 3f64.sqrt() / 2.0;
        self.slopes
            .iter()
            .filter(|s| s.h == h)
            .map(|s| (s.slope_plus - expected).abs().max((s.slope_minus + expected).abs()))
            .fold(0.0, f64::max)
    }
}

/// Checks the conical touching at a corner of the zone for `β = 0`: the
/// double eigenvalue and the slopes along `n_directions` equally spaced
/// directions (rotated by `offset`), for each step in `h_steps`.
pub fn dirac_check(
    params: &HoneycombParams,
    valley: Valley,
    h_steps: &[f64],
    n_directions: usize,
    offset: f64,
) -> Result<DiracReport> {
    if params.beta != 0.0 {
        return Err(Error::invalid("beta", "must be 0: the spectrum is gapped otherwise"));
    }
    if n_directions == 0 {
        return Err(Error::invalid("directions", "must be positive"));
    }
    if h_steps.is_empty() || h_steps.iter().any(|&h| !(h > 0.0)) {
        return Err(Error::invalid("h", "steps must be positive"));
    }
    let k = valley.reduced();
    let d0 = d_function(k);
    let (lm, lp) = eigenvalues_2d(0.0, d0.norm());
    let lambda_star = 0.5 * (lm + lp);
    let multiplicity_two = bloch_matrix_2d(0.0, d0) == Mat2::scaled_identity(lambda_star) && lm == lp;

    let a = params.a;
    let base = valley.cartesian(a);
    let mut slopes = Vec::with_capacity(h_steps.len() * n_directions);
    for i in 0..n_directions {
        let angle = offset + TAU * i as f64 / n_directions as f64;
        for &h in h_steps {
            let p = WaveVector2::from_cartesian(a, base[0] + h * angle.cos(), base[1] + h * angle.sin());
            let (m, pl) = eigenvalues_2d(0.0, d_function(p).norm());
            slopes.push(DiracSlope {
                angle,
                h,
                slope_plus: (pl - lambda_star) / h,
                slope_minus: (m - lambda_star) / h,
            });
        }
    }
    Ok(DiracReport { valley, lambda_star, multiplicity_two, slopes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cone_slopes() {
        for (a, valley) in [(1.0, Valley::K1), (1.0, Valley::K4), (2.0, Valley::K1)] {
            let p = HoneycombParams::with_lattice_constant(0.0, a).unwrap();
            let r = dirac_check(&p, valley, &[1e-2, 1e-3, 1e-4], 8, 0.0).unwrap();
            assert_eq!(r.lambda_star, 3.0);
            assert!(r.multiplicity_two);
            assert!(r.max_slope_error(a, 1e-4) < 1e-3);
            assert!(r.max_slope_error(a, 1e-4) < r.max_slope_error(a, 1e-2));
        }
    }

    #[test]
    fn gapped_lattice_rejected() {
        let p = HoneycombParams::new(0.1).unwrap();
        assert!(dirac_check(&p, Valley::K1, &[1e-4], 8, 0.0).is_err());
    }
}
