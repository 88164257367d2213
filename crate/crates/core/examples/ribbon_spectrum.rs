//! Spectrum of one interface ribbon, with the localisation of its in-gap
//! states.
//!
//! Run:
//!   cargo run -p topomech --example ribbon_spectrum

use topomech::honeycomb::{interface_bands, HoneycombParams};
use topomech::lattice::{assemble_ribbon_with, spectrum, RibbonBoundary};

fn main() -> topomech::Result<()> {
    let p = HoneycombParams::new(0.1)?;
    let k = 1.0;
    let bands = interface_bands(&p, k)?;
    println!("gap at k_par = {k}: ({:.8}, {:.8})", bands.lambda_minus, bands.lambda_plus);
    for boundary in [RibbonBoundary::Closed, RibbonBoundary::Clamped] {
        let ribbon = assemble_ribbon_with(&p, k, 24, boundary)?;
        let s = spectrum(&ribbon, (bands.lambda_minus, bands.lambda_plus))?;
        println!("{boundary:?}: {} eigenvalues, omega_max = {:.6}", s.eigenvalues.len(), s.omega_max());
        for g in &s.gap_modes {
            println!(
                "  omega^2 = {:.10}  near a-a interface: {:.3}  decay L/R: {:?}/{:?}",
                g.omega_sq, g.interface_fraction, g.decay_left, g.decay_right
            );
        }
    }
    Ok(())
}
