use super::{Dof, LatticeModel, Sublattice};
use crate::honeycomb::{z_of, HoneycombParams};
use crate::numerics::{Complex, HermitianMatrix};
use crate::{Error, Result};

/// Outer termination of an interface ribbon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RibbonBoundary {
    /// The two outermost b-masses are bonded to each other, closing the
    /// strip into a loop. The loop contains the a–a interface and a second,
    /// b–b interface, and no free or clamped edge.
    #[default]
    Closed,
    /// The strip ends at fixed walls beyond the outermost b-masses.
    Clamped,
}

/// Honeycomb strip parallel to the interface, Bloch-reduced with wave
/// number `k∥` along it.
#[derive(Clone, Debug, PartialEq)]
pub struct RibbonModel {
    pub width_per_side: usize,
    pub k_par: f64,
    pub params: HoneycombParams,
    pub boundary: RibbonBoundary,
    labels: Vec<Dof>,
    masses: Vec<f64>,
    stiffness: HermitianMatrix,
}

impl LatticeModel for RibbonModel {
    fn labels(&self) -> &[Dof] {
        &self.labels
    }
    fn masses(&self) -> &[f64] {
        &self.masses
    }
    fn stiffness(&self) -> &HermitianMatrix {
        &self.stiffness
    }
}

pub fn assemble_ribbon(params: &HoneycombParams, k_par: f64, width_per_side: usize) -> Result<RibbonModel> {
    assemble_ribbon_with(params, k_par, width_per_side, RibbonBoundary::default())
}

/// Degrees of freedom run `b₋W, a₋W, …, b₋₁, a₋₁ | a₁, b₁, …, a_W, b_W`;
/// the two a-masses `a₋₁`, `a₁` face each other across the interface.
pub fn assemble_ribbon_with(
    params: &HoneycombParams,
    k_par: f64,
    width_per_side: usize,
    boundary: RibbonBoundary,
) -> Result<RibbonModel> {
    if width_per_side < 8 {
        return Err(Error::invalid("width", format!("must be at least 8, got {width_per_side}")));
    }
    if !k_par.is_finite() {
        return Err(Error::invalid("k_par", "must be finite"));
    }
    let w = width_per_side as i64;
    let mut labels = Vec::with_capacity(4 * width_per_side);
    for p in (1..=w).rev() {
        labels.push(Dof { cell: -p, sublattice: Sublattice::B });
        labels.push(Dof { cell: -p, sublattice: Sublattice::A });
    }
    for p in 1..=w {
        labels.push(Dof { cell: p, sublattice: Sublattice::A });
        labels.push(Dof { cell: p, sublattice: Sublattice::B });
    }
    let n = labels.len();
    let idx = |cell: i64, s: Sublattice| -> usize {
        let off = if cell < 0 { (w + cell) as usize * 2 } else { 2 * width_per_side + (cell as usize - 1) * 2 };
        match (cell < 0, s) {
            (true, Sublattice::B) | (false, Sublattice::A) => off,
            _ => off + 1,
        }
    };
    let k = params.k;
    let z = z_of(params, k_par);
    let mut stiffness = HermitianMatrix::zeros(n);
    for i in 0..n {
        stiffness.set(i, i, Complex::from(3.0 * k));
    }
    for p in 1..=w {
        // each a-mass meets its b-partner through two bonds (phase 1 + e^{ik∥a²})
        stiffness.set(idx(p, Sublattice::A), idx(p, Sublattice::B), -z.conj() * k);
        stiffness.set(idx(-p, Sublattice::A), idx(-p, Sublattice::B), -z * k);
        if p < w {
            stiffness.set(idx(p, Sublattice::B), idx(p + 1, Sublattice::A), Complex::from(-k));
            stiffness.set(idx(-p, Sublattice::B), idx(-p - 1, Sublattice::A), Complex::from(-k));
        }
    }
    stiffness.set(idx(1, Sublattice::A), idx(-1, Sublattice::A), Complex::from(-k));
    if boundary == RibbonBoundary::Closed {
        stiffness.set(idx(w, Sublattice::B), idx(-w, Sublattice::B), Complex::from(-k));
    }
    let masses = labels
        .iter()
        .map(|d| match d.sublattice {
            Sublattice::A => params.m * params.mass_a(),
            Sublattice::B => params.m * params.mass_b(),
        })
        .collect();
    Ok(RibbonModel { width_per_side, k_par, params: *params, boundary, labels, masses, stiffness })
}
