//! Band structures, discrete topological invariants and interface modes of
//! spring-mass lattices.
//!
//! Two lattice families are covered:
//!
//! * [`chain1d`]: a diatomic chain with alternating springs `k(1 ± γ)`.
//! * [`honeycomb`]: a honeycomb lattice with masses `m(1 ± β)` on the two
//!   sublattices.
//!
//! Closed-form results (dispersion, Zak phase, valley Chern number, interface
//! mode frequencies) are cross-checked by the finite lattices in [`lattice`],
//! which are assembled explicitly and solved with the dense eigensolver in
//! [`numerics`].

// `!(x > 0.0)` style guards are meant to reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod chain1d;
pub mod cli;
mod error;
pub mod honeycomb;
pub mod lattice;
pub mod numerics;

pub use error::{Error, Result};
pub use numerics::{Complex, Mat2};
