//! Interface frequencies of two mirrored honeycomb half-planes along the
//! interface wave number, checked against a finite ribbon.
//!
//! Run:
//!   cargo run -p topomech --example interface_modes_2d --release

use std::f64::consts::TAU;

use topomech::honeycomb::{edge_frequencies_2d, HoneycombParams};
use topomech::lattice::{assemble_ribbon, spectrum};

fn main() -> topomech::Result<()> {
    let p = HoneycombParams::new(0.1)?;
    println!(
        "{:>8} {:>10} {:>10} {:>10} {:>10} {:>12}",
        "k_par", "lambda-", "lambda+", "omega1^2", "omega2^2", "ribbon err"
    );
    for i in 0..=12 {
        let k = TAU * i as f64 / 12.0;
        let e = edge_frequencies_2d(&p, k)?;
        let ribbon = assemble_ribbon(&p, k, 40)?;
        let s = spectrum(&ribbon, (e.bands.lambda_minus, e.bands.lambda_plus))?;
        let err = e.omega_sq[..2].iter().map(|w| s.distance_to(*w)).fold(0.0, f64::max);
        println!(
            "{k:>8.4} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {err:>12.2e}",
            e.bands.lambda_minus, e.bands.lambda_plus, e.omega_sq[0], e.omega_sq[1]
        );
    }

    let e = edge_frequencies_2d(&p, 1.0)?;
    for m in &e.modes {
        println!("omega{}^2 = {:.8}: {:?} junction, decay per cell {:.6}", m.index, m.omega_sq, m.junction, m.decay);
    }
    Ok(())
}
