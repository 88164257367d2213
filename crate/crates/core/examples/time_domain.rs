//! Velocity Verlet runs on the joined chain: the interface mode stays put,
//! a Bloch packet started next to the interface leaves it.
//!
//! Run:
//!   cargo run -p topomech --example time_domain --release

use std::f64::consts::{FRAC_PI_2, TAU};

use topomech::chain1d::{edge_mode_1d, Band, ChainParams};
use topomech::lattice::{assemble_chain, bloch_packet_state, edge_mode_state, simulate, ChainBoundary, Trajectory};

fn main() -> topomech::Result<()> {
    let (left, right) = (ChainParams::new(-0.5)?, ChainParams::new(0.5)?);
    let model = assemble_chain(&left, &right, 50, 50, ChainBoundary::Clamped)?;
    let mode = edge_mode_1d(&left, &right, 50)?.expect("interface mode for opposite signs");

    let dt = 0.05;
    let period = TAU / mode.omega;
    let steps = (200.0 * period / dt).ceil() as usize;
    let t = simulate(&model, edge_mode_state(&model, &mode), dt, steps, &[])?;
    println!("interface mode, {steps} steps (200 periods), dt = {dt} (bound {:.4})", 0.2 / t.omega_max);
    println!("  energy near the interface: {:.6}", t.final_interface_fraction(&model));
    println!("  drift of the modified energy: {:.2e}", Trajectory::relative_drift(&t.modified_energies));
    println!("  spread of the mechanical energy: {:.2e}", Trajectory::relative_drift(&t.energies));

    let packet = bloch_packet_state(&model, Band::Minus, FRAC_PI_2, 3.0, 3.0)?;
    let start = simulate(&model, packet.clone(), dt, 0, &[])?.final_interface_fraction(&model);
    let t = simulate(&model, packet, dt, 1400, &[])?;
    println!("Bloch packet: near the interface {start:.3} at t = 0, {:.3} at t = 70", t.final_interface_fraction(&model));
    Ok(())
}
