use super::LatticeModel;
use crate::numerics::{eig_hermitian_dense, Complex};
use crate::Result;

/// Eigenvalues closer than this (relative) to a window edge are treated as
/// band-edge states, not gap modes.
const EDGE_MARGIN: f64 = 1e-9;
/// Amplitudes below this fraction of the peak are round-off, not decay.
const NOISE_FLOOR: f64 = 1e-9;
/// Cells on each side counted as "at the interface".
pub const INTERFACE_CELLS: i64 = 5;

#[derive(Clone, Debug, PartialEq)]
pub struct GapMode {
    pub omega_sq: f64,
    /// Displacements (not mass-weighted), unit mass-weighted norm.
    pub displacement: Vec<Complex>,
    /// Per-cell amplitude `√Σ|u|²`, index 0 is the cell next to the interface.
    pub left_amplitudes: Vec<f64>,
    pub right_amplitudes: Vec<f64>,
    /// Fitted amplitude ratio between neighbouring cells, moving away from
    /// the interface.
    pub decay_left: Option<f64>,
    pub decay_right: Option<f64>,
    /// Share of `Σ m|u|²` within `INTERFACE_CELLS` cells of the interface.
    pub interface_fraction: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    /// Ascending `ω²`.
    pub eigenvalues: Vec<f64>,
    pub gap_window: (f64, f64),
    pub gap_modes: Vec<GapMode>,
}

impl SpectrumReport {
    pub fn omega_max(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0).max(0.0).sqrt()
    }

    /// Distance from `omega_sq` to the nearest eigenvalue.
    pub fn distance_to(&self, omega_sq: f64) -> f64 {
        self.eigenvalues.iter().map(|e| (e - omega_sq).abs()).fold(f64::INFINITY, f64::min)
    }

    /// Eigenvalues strictly inside the window, band-edge states excluded.
    pub fn in_gap(&self) -> Vec<f64> {
        self.gap_modes.iter().map(|m| m.omega_sq).collect()
    }
}

fn strictly_inside(x: f64, (lo, hi): (f64, f64)) -> bool {
    x > lo + EDGE_MARGIN * lo.abs().max(1.0) && x < hi - EDGE_MARGIN * hi.abs().max(1.0)
}

/// Dense solve of the model; modes inside `gap_window` (in `ω²`) come with
/// profiles and fitted decay.
pub fn spectrum<M: LatticeModel + ?Sized>(model: &M, gap_window: (f64, f64)) -> Result<SpectrumReport> {
    let eig = eig_hermitian_dense(&model.dynamical())?;
    let masses = model.masses();
    let labels = model.labels();
    let max_left = labels.iter().map(|d| (-d.cell).max(0)).max().unwrap_or(0) as usize;
    let max_right = labels.iter().map(|d| d.cell.max(0)).max().unwrap_or(0) as usize;

    let mut gap_modes = Vec::new();
    for (k, &w) in eig.eigenvalues.iter().enumerate() {
        if !strictly_inside(w, gap_window) {
            continue;
        }
        let y = eig.vector(k);
        let displacement: Vec<Complex> = y.iter().zip(masses).map(|(v, m)| v / m.sqrt()).collect();
        let mut left = vec![0.0; max_left];
        let mut right = vec![0.0; max_right];
        let mut near = 0.0;
        for ((d, u), yv) in labels.iter().zip(&displacement).zip(y) {
            if d.cell < 0 {
                left[(-d.cell - 1) as usize] += u.norm_sqr();
            } else {
                right[(d.cell - 1) as usize] += u.norm_sqr();
            }
            if d.cell.abs() <= INTERFACE_CELLS {
                near += yv.norm_sqr();
            }
        }
        left.iter_mut().chain(right.iter_mut()).for_each(|a| *a = a.sqrt());
        let peak = left.iter().chain(&right).fold(0.0f64, |m, &a| m.max(a));
        gap_modes.push(GapMode {
            omega_sq: w,
            decay_left: fit_decay(&left, peak),
            decay_right: fit_decay(&right, peak),
            left_amplitudes: left,
            right_amplitudes: right,
            displacement,
            interface_fraction: near,
        });
    }
    Ok(SpectrumReport { eigenvalues: eig.eigenvalues, gap_window, gap_modes })
}

/// Least-squares slope of `ln(amplitude)` against cell index, exponentiated.
/// Uses the middle of the side (20% to 80% of its cells) restricted to
/// amplitudes above round-off; falls back to every resolved cell past the
/// first when that leaves fewer than two points.
fn fit_decay(amps: &[f64], peak: f64) -> Option<f64> {
    let n = amps.len();
    let floor = NOISE_FLOOR * peak;
    let pick = |from: usize, to: usize| -> Vec<(f64, f64)> {
        (from..to.min(n)).filter(|&i| amps[i] > floor).map(|i| (i as f64, amps[i].ln())).collect()
    };
    let mut pts = pick(((n as f64) * 0.2).floor() as usize, ((n as f64) * 0.8).ceil() as usize);
    if pts.len() < 2 {
        pts = pick(1, n);
    }
    if pts.len() < 2 {
        return None;
    }
    let m = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let (num, den) = pts
        .iter()
        .fold((0.0, 0.0), |(n, d), (x, y)| (n + (x - mx) * (y - my), d + (x - mx) * (x - mx)));
    Some((num / den).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_profile() {
        let amps: Vec<f64> = (0..50).map(|i| 3f64.powi(-i)).collect();
        assert!((fit_decay(&amps, 1.0).unwrap() - 1.0 / 3.0).abs() < 1e-9);
        let fast: Vec<f64> = (0..50).map(|i| 9f64.powi(-i)).collect();
        assert!((fit_decay(&fast, 1.0).unwrap() - 1.0 / 9.0).abs() < 1e-9);
        assert!(fit_decay(&[1.0, 0.0, 0.0, 0.0], 1.0).is_none());
    }
}
