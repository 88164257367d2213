use super::{Dof, LatticeModel, Sublattice};
use crate::chain1d::ChainParams;
use crate::numerics::{Complex, HermitianMatrix};
use crate::{Error, Result};

/// How the outer ends of a finite joint chain are terminated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ChainBoundary {
    /// Each end is tied to a wall through the weaker of its side's two
    /// springs; the outermost half cell is dropped where needed. Such ends
    /// carry no end states, so in-gap modes come from the interface only.
    #[default]
    Clamped,
    /// Whole cells, with the wall in place of the next mass. An end whose
    /// wall spring is the stronger one carries its own in-gap state.
    ClampedWholeCells,
    Free,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FiniteChainModel {
    pub cells_left: usize,
    pub cells_right: usize,
    pub params_left: ChainParams,
    pub params_right: ChainParams,
    pub boundary: ChainBoundary,
    labels: Vec<Dof>,
    masses: Vec<f64>,
    stiffness: HermitianMatrix,
}

impl LatticeModel for FiniteChainModel {
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

/// Joint chain ordered left to right as `…, a₋₁, b₋₁, a₁, b₁, …`. The bond
/// `b₋₁–a₁` across the interface is the left chain's inter-cell spring.
pub fn assemble_chain(
    left: &ChainParams,
    right: &ChainParams,
    cells_left: usize,
    cells_right: usize,
    boundary: ChainBoundary,
) -> Result<FiniteChainModel> {
    if cells_left < 4 || cells_right < 4 {
        return Err(Error::invalid("cells", "need at least 4 cells per side"));
    }
    if left.k_mean != right.k_mean || left.mass != right.mass {
        return Err(Error::invalid("params", "both halves must share k_mean and mass"));
    }
    let trim_left = boundary == ChainBoundary::Clamped && left.gamma < 0.0;
    let trim_right = boundary == ChainBoundary::Clamped && right.gamma < 0.0;

    let mut labels = Vec::new();
    for j in (1..=cells_left as i64).rev() {
        if !(trim_left && j == cells_left as i64) {
            labels.push(Dof { cell: -j, sublattice: Sublattice::A });
        }
        labels.push(Dof { cell: -j, sublattice: Sublattice::B });
    }
    for j in 1..=cells_right as i64 {
        labels.push(Dof { cell: j, sublattice: Sublattice::A });
        if !(trim_right && j == cells_right as i64) {
            labels.push(Dof { cell: j, sublattice: Sublattice::B });
        }
    }
    let n = labels.len();
    let k = left.k_mean;
    let mut stiffness = HermitianMatrix::zeros(n);
    let mut spring = |i: usize, j: usize, s: f64| {
        stiffness.add(i, i, Complex::from(s * k));
        stiffness.add(j, j, Complex::from(s * k));
        stiffness.add(i, j, Complex::from(-s * k));
    };
    // consecutive labels are neighbours; the spring between them depends on
    // the side and on whether the pair lies inside one cell
    for i in 0..n - 1 {
        let (p, q) = (labels[i], labels[i + 1]);
        let s = match (p.cell < 0, q.cell < 0) {
            (true, true) if p.cell == q.cell => left.k1(),
            (true, true) => left.k2(),
            (true, false) => left.k2(),
            _ if p.cell == q.cell => right.k1(),
            _ => right.k2(),
        };
        spring(i, i + 1, s);
    }
    if boundary != ChainBoundary::Free {
        let wall_left = if trim_left { left.k1() } else { left.k2() };
        let wall_right = if trim_right { right.k1() } else { right.k2() };
        stiffness.add(0, 0, Complex::from(wall_left * k));
        stiffness.add(n - 1, n - 1, Complex::from(wall_right * k));
    }
    let masses = vec![left.mass; n];
    Ok(FiniteChainModel {
        cells_left,
        cells_right,
        params_left: *left,
        params_right: *right,
        boundary,
        labels,
        masses,
        stiffness,
    })
}
