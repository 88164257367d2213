use super::{band_gap_1d, ChainParams, Side};
use crate::{Error, Result};

/// Cell-to-cell map of `(u_a, u_b)` at a fixed frequency, with the eigenpair
/// that decays away from the interface.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Transfer1D {
    pub side: Side,
    pub omega: f64,
    pub matrix: [[f64; 2]; 2],
    pub decaying_eigenvalue: f64,
    /// Unit norm.
    pub decaying_eigenvector: [f64; 2],
}

impl Transfer1D {
    pub fn det(&self) -> f64 {
        det2(&self.matrix)
    }
}

/// `T_R` maps cell `j` to `j+1` on a right half-chain; `T_L = T_R⁻¹` maps
/// cell `−j` to `−j−1` on a left half-chain.
pub fn transfer_matrix_1d(params: &ChainParams, side: Side, omega: f64) -> [[f64; 2]; 2] {
    let g = params.gamma;
    let w = 2.0 - omega * omega;
    let corner = -(1.0 + g) / (1.0 - g);
    let far = (w * w - (1.0 - g) * (1.0 - g)) / (1.0 - g * g);
    let off = w / (1.0 - g);
    match side {
        Side::Right => [[corner, off], [-off, far]],
        Side::Left => [[far, -off], [off, corner]],
    }
}

fn det2(m: &[[f64; 2]; 2]) -> f64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

/// Unit null vector of `m − λI`, from the better-conditioned row.
pub(crate) fn eigvec_real(m: &[[f64; 2]; 2], lambda: f64) -> [f64; 2] {
    let r1 = [m[0][1], lambda - m[0][0]];
    let r2 = [lambda - m[1][1], m[1][0]];
    let n1 = r1[0].hypot(r1[1]);
    let n2 = r2[0].hypot(r2[1]);
    let (v, n) = if n1 >= n2 { (r1, n1) } else { (r2, n2) };
    [v[0] / n, v[1] / n]
}

/// Root of `λ² − tr·λ + 1` inside the unit circle, for `Ω = 2 − ω²` in the
/// open gap.
pub(crate) fn decaying_root(gamma: f64, w: f64) -> f64 {
    let g2 = gamma * gamma;
    let half_tr = (w * w - 2.0 - 2.0 * g2) / (2.0 * (1.0 - g2));
    let disc = ((4.0 - w * w) * (4.0 * g2 - w * w)).max(0.0).sqrt() / (2.0 * (1.0 - g2));
    1.0 / (half_tr - disc)
}

pub fn transfer_1d(params: &ChainParams, side: Side, omega: f64) -> Result<Transfer1D> {
    let gap = band_gap_1d(params);
    if !gap.contains(omega) {
        return Err(Error::OutsideGap {
            reason: format!(
                "{omega} is not strictly inside the band gap ({}, {}); no decaying eigenpair",
                gap.lo, gap.hi
            ),
        });
    }
    let matrix = transfer_matrix_1d(params, side, omega);
    let lambda = decaying_root(params.gamma, 2.0 - omega * omega);
    Ok(Transfer1D {
        side,
        omega,
        matrix,
        decaying_eigenvalue: lambda,
        decaying_eigenvector: eigvec_real(&matrix, lambda),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::SQRT_2;

    fn p(g: f64) -> ChainParams {
        ChainParams::new(g).unwrap()
    }

    #[test]
    fn unit_determinant() {
        for &g in &[-0.9, -0.3, 0.1, 0.7] {
            for &w in &[0.0, 0.8, 1.3, 2.5] {
                for side in [Side::Left, Side::Right] {
                    assert!((det2(&transfer_matrix_1d(&p(g), side, w)) - 1.0).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn left_inverts_right() {
        let r = transfer_matrix_1d(&p(0.35), Side::Right, 1.2);
        let l = transfer_matrix_1d(&p(0.35), Side::Left, 1.2);
        for i in 0..2 {
            for j in 0..2 {
                let v = r[i][0] * l[0][j] + r[i][1] * l[1][j];
                assert!((v - if i == j { 1.0 } else { 0.0 }).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn mid_gap_decay() {
        let t = transfer_1d(&p(0.5), Side::Right, SQRT_2).unwrap();
        assert!((t.decaying_eigenvalue + 1.0 / 3.0).abs() < 1e-14);
        assert!(t.decaying_eigenvector[0].abs() < 1e-14);
        let t = transfer_1d(&p(-0.5), Side::Left, SQRT_2).unwrap();
        assert!((t.decaying_eigenvalue + 1.0 / 3.0).abs() < 1e-14);
        // the decaying vector of a γ<0 right half-chain sits on sublattice a
        let t = transfer_1d(&p(-0.5), Side::Right, SQRT_2).unwrap();
        assert!(t.decaying_eigenvector[1].abs() < 1e-14);
    }

    #[test]
    fn outside_gap_is_rejected() {
        assert!(transfer_1d(&p(0.5), Side::Right, 0.9).is_err());
        assert!(transfer_1d(&p(0.5), Side::Right, 1.0).is_err());
    }
}
