use super::transfer::{decaying_root, eigvec_real, transfer_matrix_1d};
use super::{common_gap_1d, BandGap1D, ChainParams, Side};
use crate::numerics::find_roots_bracketed;
use crate::{Error, Result};

/// Scan resolution over the common gap. Even, so `Ω = 0` is a grid node.
pub const DEFAULT_SCAN_GRID: usize = 1024;
const ROOT_TOL: f64 = 1e-13;
const ACCEPT_RESIDUAL: f64 = 1e-10;

/// Difference of the two sides of the closed-form interface condition in
/// `Ω = 2 − ω²`. Not a number where a square root argument is negative.
pub fn interface_residual_1d(left: &ChainParams, right: &ChainParams, w: f64) -> f64 {
    let (gl, gr) = (left.gamma, right.gamma);
    let w2 = w * w;
    let arg_l = (4.0 - w2) * (4.0 * gl * gl - w2);
    let arg_r = (4.0 - w2) * (4.0 * gr * gr - w2);
    if arg_l < 0.0 || arg_r < 0.0 {
        return f64::NAN;
    }
    let lhs = (w2 - 4.0 * gl - arg_l.sqrt()) * (w2 + 2.0 * (gr - gl) * w - 4.0 * gr - arg_r.sqrt());
    lhs - 4.0 * (1.0 - gl) * (1.0 - gl) * w2
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProfileCell {
    /// Signed cell index: `−1, −2, …` on the left, `1, 2, …` on the right.
    pub cell: i64,
    pub ua: f64,
    pub ub: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EdgeMode1D {
    pub omega: f64,
    pub c1: f64,
    pub c2: f64,
    pub lambda_left: f64,
    pub lambda_right: f64,
    pub decay_left: f64,
    pub decay_right: f64,
    pub e_left: [f64; 2],
    pub e_right: [f64; 2],
    /// Cells `−n … −1, 1 … n`, left to right.
    pub profile: Vec<ProfileCell>,
    /// Largest interface-equation residual relative to the interface amplitudes.
    pub interface_residual: f64,
}

impl EdgeMode1D {
    pub fn omega_sq(&self) -> f64 {
        self.omega * self.omega
    }

    pub fn cell(&self, j: i64) -> Option<&ProfileCell> {
        self.profile.iter().find(|c| c.cell == j)
    }

    /// Largest `|T u_j − u_{j±1}|` over the stored profile, relative to the
    /// interface amplitude.
    pub fn recursion_residual(&self, left: &ChainParams, right: &ChainParams) -> f64 {
        let tr = transfer_matrix_1d(right, Side::Right, self.omega);
        let tl = transfer_matrix_1d(left, Side::Left, self.omega);
        let scale = self.profile.iter().map(|c| c.ua.hypot(c.ub)).fold(0.0, f64::max);
        let mut worst = 0.0f64;
        for pair in self.profile.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let (from, to, t) = if a.cell > 0 {
                (a, b, &tr)
            } else if b.cell < 0 {
                (b, a, &tl)
            } else {
                continue;
            };
            let x = t[0][0] * from.ua + t[0][1] * from.ub - to.ua;
            let y = t[1][0] * from.ua + t[1][1] * from.ub - to.ub;
            worst = worst.max(x.hypot(y) / scale);
        }
        worst
    }
}

/// A root of the scanned residual and whether it survived verification.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeCandidate {
    pub omega_shift: f64,
    pub omega: f64,
    pub interface_residual: f64,
    pub accepted: bool,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EdgeSearch1D {
    pub gap: BandGap1D,
    pub candidates: Vec<EdgeCandidate>,
    pub modes: Vec<EdgeMode1D>,
}

/// First verified interface mode, if any.
pub fn edge_mode_1d(
    left: &ChainParams,
    right: &ChainParams,
    n_profile_cells: usize,
) -> Result<Option<EdgeMode1D>> {
    Ok(edge_modes_1d(left, right, n_profile_cells, DEFAULT_SCAN_GRID)?.modes.into_iter().next())
}

/// Scans the closed-form interface condition over the common gap, then
/// rebuilds every root as an explicit two-sided mode and keeps those whose
/// interface equations are actually satisfied.
pub fn edge_modes_1d(
    left: &ChainParams,
    right: &ChainParams,
    n_profile_cells: usize,
    grid: usize,
) -> Result<EdgeSearch1D> {
    left.require_gapped()?;
    right.require_gapped()?;
    if grid < 2 {
        return Err(Error::invalid("grid", "must be at least 2"));
    }
    let gap = common_gap_1d(left, right);
    // the gap in Ω = 2 − ω² is symmetric, (−2 min|γ|, 2 min|γ|)
    let half = 2.0 * left.gamma.abs().min(right.gamma.abs());
    let (lo, hi) = (-half, half);
    let roots = find_roots_bracketed(|w| interface_residual_1d(left, right, w), lo, hi, grid, ROOT_TOL);

    let mut candidates = Vec::new();
    let mut modes = Vec::new();
    for w in roots {
        let omega = (2.0 - w).sqrt();
        let mut cand = EdgeCandidate {
            omega_shift: w,
            omega,
            interface_residual: f64::NAN,
            accepted: false,
            reason: None,
        };
        if !(lo < w && w < hi) {
            cand.reason = Some("on the gap edge".into());
            candidates.push(cand);
            continue;
        }
        let mode = build_mode(left, right, omega, n_profile_cells);
        cand.interface_residual = mode.interface_residual;
        if mode.interface_residual <= ACCEPT_RESIDUAL {
            cand.accepted = true;
            modes.push(mode);
        } else {
            cand.reason = Some("interface equations have only the trivial solution".into());
        }
        candidates.push(cand);
    }
    Ok(EdgeSearch1D { gap, candidates, modes })
}

fn build_mode(left: &ChainParams, right: &ChainParams, omega: f64, n: usize) -> EdgeMode1D {
    let (gl, gr) = (left.gamma, right.gamma);
    let w = 2.0 - omega * omega;
    let tr = transfer_matrix_1d(right, Side::Right, omega);
    let tl = transfer_matrix_1d(left, Side::Left, omega);
    let lr = decaying_root(gr, w);
    let ll = decaying_root(gl, w);
    let er = eigvec_real(&tr, lr);
    let el = eigvec_real(&tl, ll);

    // interface equations as a 2×2 system in (c1, c2)
    let m = [
        [(w + gr - gl) * er[0] - (1.0 + gr) * er[1], -(1.0 - gl) * el[1]],
        [-(1.0 - gl) * er[0], w * el[1] - (1.0 + gl) * el[0]],
    ];
    let n0 = m[0][0].hypot(m[0][1]);
    let n1 = m[1][0].hypot(m[1][1]);
    let (mut c1, mut c2) = if n0 >= n1 { (m[0][1], -m[0][0]) } else { (m[1][1], -m[1][0]) };
    if c1.abs() > 1e-12 * c1.hypot(c2) {
        c2 /= c1;
        c1 = 1.0;
    } else {
        c1 = 0.0;
        c2 = 1.0;
    }
    let eq1 = m[0][0] * c1 + m[0][1] * c2;
    let eq2 = m[1][0] * c1 + m[1][1] * c2;
    let interface_residual = eq1.abs().max(eq2.abs()) / c1.abs().max(c2.abs());

    let mut profile = Vec::with_capacity(2 * n);
    for j in (1..=n).rev() {
        let s = c2 * ll.powi(j as i32 - 1);
        profile.push(ProfileCell { cell: -(j as i64), ua: s * el[0], ub: s * el[1] });
    }
    for j in 1..=n {
        let s = c1 * lr.powi(j as i32 - 1);
        profile.push(ProfileCell { cell: j as i64, ua: s * er[0], ub: s * er[1] });
    }
    EdgeMode1D {
        omega,
        c1,
        c2,
        lambda_left: ll,
        lambda_right: lr,
        decay_left: ll.abs(),
        decay_right: lr.abs(),
        e_left: el,
        e_right: er,
        profile,
        interface_residual,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::SQRT_2;

    fn p(g: f64) -> ChainParams {
        ChainParams::new(g).unwrap()
    }

    #[test]
    fn residual_vanishes_at_mid_gap_for_opposite_signs() {
        assert_eq!(interface_residual_1d(&p(-0.5), &p(0.5), 0.0), 0.0);
        assert_eq!(interface_residual_1d(&p(0.5), &p(-0.5), 0.0), 0.0);
        assert_eq!(interface_residual_1d(&p(0.5), &p(0.5), 0.0), 16.0);
        assert!(interface_residual_1d(&p(0.2), &p(0.5), 0.5).is_nan());
    }

    #[test]
    fn symmetric_mode() {
        let m = edge_mode_1d(&p(-0.5), &p(0.5), 20).unwrap().unwrap();
        assert!((m.omega - SQRT_2).abs() < 1e-12);
        assert!((m.decay_left - 1.0 / 3.0).abs() < 1e-12);
        assert!((m.decay_right - 1.0 / 3.0).abs() < 1e-12);
        assert!(m.interface_residual < 1e-12);
        assert!(m.recursion_residual(&p(-0.5), &p(0.5)) < 1e-12);
        assert_eq!(m.profile.len(), 40);
        // sublattice b only
        assert!(m.profile.iter().all(|c| c.ua.abs() < 1e-15));
    }

    #[test]
    fn same_signs_have_no_mode() {
        let s = edge_modes_1d(&p(0.5), &p(0.5), 10, DEFAULT_SCAN_GRID).unwrap();
        assert!(s.modes.is_empty());
    }

    #[test]
    fn mid_gap_root_rejected_when_left_side_is_positive() {
        let s = edge_modes_1d(&p(0.5), &p(-0.5), 10, DEFAULT_SCAN_GRID).unwrap();
        let zero = s.candidates.iter().find(|c| c.omega_shift == 0.0).unwrap();
        assert!(!zero.accepted);
        assert_eq!(s.modes.len(), 1);
        // the verified mode is at ω² = 3 − √3
        assert!((s.modes[0].omega_sq() - (3.0 - 3f64.sqrt())).abs() < 1e-10);
    }

    #[test]
    fn closed_gap_rejected() {
        assert!(edge_mode_1d(&p(0.0), &p(0.5), 10).is_err());
    }
}
