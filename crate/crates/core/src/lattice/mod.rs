//! Finite lattices assembled as explicit mass and stiffness operators: the
//! joint chain and the interface ribbon. Their dense spectra and
//! time-domain runs serve as independent checks of the closed forms.

mod chain;
mod initial;
mod ribbon;
mod simulate;
mod spectrum;

pub use chain::{assemble_chain, ChainBoundary, FiniteChainModel};
pub use initial::{bloch_packet_state, edge_mode_state, point_impulse_state, ribbon_mode_state};
pub use ribbon::{assemble_ribbon, assemble_ribbon_with, RibbonBoundary, RibbonModel};
pub use simulate::{simulate, Trajectory};
pub use spectrum::{spectrum, GapMode, SpectrumReport};

use crate::numerics::{Complex, HermitianMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sublattice {
    A,
    B,
}

impl Sublattice {
    pub fn name(self) -> &'static str {
        match self {
            Sublattice::A => "a",
            Sublattice::B => "b",
        }
    }
}

/// Label of one degree of freedom: signed cell index (negative on the left
/// of the interface, positive on the right) and sublattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dof {
    pub cell: i64,
    pub sublattice: Sublattice,
}

/// A finite mass-spring system `M ü = −K u`.
pub trait LatticeModel {
    fn labels(&self) -> &[Dof];
    fn masses(&self) -> &[f64];
    fn stiffness(&self) -> &HermitianMatrix;

    fn dof(&self) -> usize {
        self.masses().len()
    }

    /// Mass-reduced operator `M^{-1/2} K M^{-1/2}`; its eigenvalues are `ω²`.
    fn dynamical(&self) -> HermitianMatrix {
        let w: Vec<f64> = self.masses().iter().map(|m| 1.0 / m.sqrt()).collect();
        self.stiffness().scale_symmetric(&w)
    }

    /// Index of the degree of freedom with this label.
    fn index_of(&self, cell: i64, sublattice: Sublattice) -> Option<usize> {
        self.labels().iter().position(|d| d.cell == cell && d.sublattice == sublattice)
    }

    /// Nonzero stiffness entries row by row.
    fn sparse_rows(&self) -> Vec<Vec<(usize, Complex)>> {
        let k = self.stiffness();
        (0..k.dim())
            .map(|i| (0..k.dim()).filter_map(|j| { let v = k.get(i, j); (v.norm() != 0.0).then_some((j, v)) }).collect())
            .collect()
    }
}
