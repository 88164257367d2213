//! Small numerical primitives: complex 2×2 blocks, a dense Hermitian
//! eigensolver, a bracketing root scan and a velocity-Verlet stepper.

mod complex;
mod eig2;
mod jacobi;
mod roots;
mod verlet;

pub use complex::{cis, cis_turns, principal_arg, wrap_angle, Complex, Mat2, Vec2};
pub use eig2::{eig2_hermitianlike, eigvec2, Eigenpair2};
pub use jacobi::{eig_hermitian_dense, EigenDecomposition, HermitianMatrix};
pub use roots::find_roots_bracketed;
pub use verlet::{verlet_step, SimState, Verlet};
