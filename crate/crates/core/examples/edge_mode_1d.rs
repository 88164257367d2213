//! Interface modes of two joined chains: closed-form roots against the
//! in-gap eigenvalues of a finite clamped chain.
//!
//! Run:
//!   cargo run -p topomech --example edge_mode_1d

use topomech::chain1d::{edge_modes_1d, ChainParams, DEFAULT_SCAN_GRID};
use topomech::lattice::{assemble_chain, spectrum, ChainBoundary};

fn main() -> topomech::Result<()> {
    let cells = 50;
    for (gl, gr) in [(-0.5, 0.5), (-0.2, 0.8), (0.5, -0.5), (0.8, -0.2), (0.5, 0.5), (-0.5, -0.5)] {
        let (left, right) = (ChainParams::new(gl)?, ChainParams::new(gr)?);
        let search = edge_modes_1d(&left, &right, cells, DEFAULT_SCAN_GRID)?;
        let model = assemble_chain(&left, &right, cells, cells, ChainBoundary::Clamped)?;
        let window = (search.gap.lo.powi(2), search.gap.hi.powi(2));
        let finite = spectrum(&model, window)?;

        println!("gamma_L = {gl:+.1}, gamma_R = {gr:+.1}");
        for c in &search.candidates {
            let verdict = if c.accepted { "mode".to_string() } else { format!("rejected: {}", c.reason.as_deref().unwrap_or("")) };
            println!("  candidate omega^2 = {:.10}  {verdict}", c.omega * c.omega);
        }
        for m in &search.modes {
            println!(
                "  mode omega^2 = {:.10}, decay L/R = {:.6}/{:.6}, finite chain off by {:.2e}",
                m.omega_sq(),
                m.decay_left,
                m.decay_right,
                finite.distance_to(m.omega_sq())
            );
        }
        println!("  finite chain in-gap eigenvalues: {:?}", finite.in_gap());
    }
    Ok(())
}
